// Copyright 2026 The symproj Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symproj/lcu.hpp"
#include "symproj/quad.hpp"
#include "symproj/sim.hpp"

namespace symproj {

/// Census of a lowered circuit. Toffolis stay symbolic; each costs 6 CNOT + 7 T.
struct GateCounts {
  std::int64_t cnot = 0;
  std::int64_t t = 0;  // explicit T/Tdg and pi/4-type rotations
  std::int64_t toffoli = 0;
  std::int64_t clifford = 0;  // single-qubit Cliffords, for reference only
  std::vector<double> rotations;  // angles of non-Clifford rotations
  int ancilla = 0;  // flag/index/signal qubits; Toffoli work qubits excluded
  int work = 0;     // peak Toffoli-ladder work qubits

  std::int64_t n_rot() const { return static_cast<std::int64_t>(rotations.size()); }
  std::int64_t cnot_total() const { return cnot + 6 * toffoli; }
  /// t + 7 toffoli + sum over rotations of ceil(3 log2(N_rot / eps_r)).
  std::int64_t t_total(double eps_r) const;

  GateCounts& operator+=(const GateCounts& o);
  /// k copies in sequence; ancilla and work unchanged.
  GateCounts repeated(std::int64_t k) const;
};

/// Rewrites `c` over {1q Clifford, T, RX/RY/RZ, CNOT/CZ/CY, Toffoli, GlobalPhase}.
/// Multi-controlled gates use AND ladders on work qubits appended after
/// c.width(). A ladder is reused by following gates with the same controls and
/// fully uncomputed otherwise; with share_prefix, consecutive gates keep the
/// common prefix of their sorted controls. Diagonal single-qubit pieces are deferred and merged per qubit until a
/// non-diagonal gate touches that qubit. The result equals `c` exactly, with
/// the work qubits starting and ending in |0>.
Circuit lower(const Circuit& c, bool share_prefix = false);

/// Census of an already lowered circuit.
GateCounts census(const Circuit& lowered);

GateCounts count_gates(const Circuit& c, bool share_prefix = false);
/// As above with ancilla = width - n_system.
GateCounts count_gates(const BlockEncoding& be, bool share_prefix = false);

/// ceil(3 log2(1/eps)).
std::int64_t t_cost_rotation(double eps);
/// ceil(3 n_rot log2(n_rot / eps_r)).
std::int64_t aggregate_t(std::int64_t n_rot, double eps_r);

/// Constant in front of log2(1/eps) for QROM state preparation.
inline constexpr double kQromLogConstant = 1.0;

GateCounts qrom_prep_model(std::int64_t l, double eps);
GateCounts select_scaffold_model(std::int64_t l);

enum class Method { Lcu, Gqsp, Gqsvt };
enum class Projector { N, Sz, S2, SMs };

Method parse_method(const std::string& s);
Projector parse_projector(const std::string& s);
std::string to_string(Method m);
std::string to_string(Projector p);

/// Node rule for the Fourier grids of scaling tables.
enum class NodeRule {
  Exact,  // smallest exact grid for the target sector (N/2 + 1 at M_S = 0)
  Full,   // N + 1, exact for every sector
};

struct ScalingRow {
  int n_so = 0;
  std::int64_t cnot = 0;  // after Toffoli expansion
  std::int64_t t = 0;     // t_total at eps_r
  std::int64_t toffoli = 0;
  std::int64_t n_rot = 0;
  int ancilla = 0;
};

/// Fit of counts to a N^b log2 N.
struct ScalingFit {
  double a = 0;          // prefactor of the free two-parameter fit
  double b = 0;          // exponent of the free fit
  double a_nominal = 0;  // least-squares prefactor with b fixed to the nominal exponent
  double b_nominal = 0;
};

struct ScalingTable {
  Method method = Method::Lcu;
  Projector projector = Projector::Sz;
  double eps_r = 0;
  std::vector<ScalingRow> rows;
  ScalingFit t_fit, cnot_fit;
};

/// Counts of one projector circuit built without simulation. Targets are
/// M_S = 0, N = N_SO/2, S = 0 (and S^2 = 0 for GQSVT). GQSP and GQSVT phases are
/// placeholders with generic angles since counts do not depend on their values.
ScalingRow projector_counts(Projector p, Method m, int n_so, double eps_r, NodeRule rule = NodeRule::Exact);

/// Throws std::invalid_argument for unsupported (projector, method) pairs.
ScalingTable scaling_table(Projector p, Method m, const std::vector<int>& n_so_list, double eps_r,
                           NodeRule rule = NodeRule::Exact, int jobs = 1);

ScalingFit fit_scaling(const std::vector<int>& n, const std::vector<double>& y, double nominal_b);

/// 1 - C(N, N/2 + S + 1) / C(N, N/2 + S), the multiplet fraction of the M_S = S sector.
double sector_overlap(int n_elec, HalfInt s);

struct FemocoEstimate {
  int n_so = 0;
  double p = 0;
  int m = 0;
  int queries = 0;
  std::int64_t projector_t = 0;
  std::int64_t total_t = 0;
  int n_phi = 0;
  int n_beta = 0;
};

/// GQSP P_MS P_S P_MS at N_SO = 2 n_orbitals with N_phi = N_SO + 1 and
/// N_beta = recommended_n_beta(S).
FemocoEstimate femoco_estimate(int n_orbitals, int n_elec, HalfInt s, HalfInt m_s, double eps_r);

}  // namespace symproj
