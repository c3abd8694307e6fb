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

#include <vector>

#include "symproj/gqsp.hpp"
#include "symproj/lcu.hpp"
#include "symproj/qop.hpp"

namespace symproj {

/// Lagrange basis polynomial that is 1 at `target` and 0 on the rest of `spectrum`.
/// The circuit realizes rescale * P, with rescale = 1 / max |P| on [-alpha, alpha].
struct LagrangePoly {
  std::vector<double> spectrum;
  double target = 0;
  std::vector<double> coeffs;  // monomial p_0 .. p_d
  double rescale = 1.0;

  int degree() const { return static_cast<int>(spectrum.size()) - 1; }
  /// Product form, stable for evaluation far from the nodes.
  double operator()(double x) const;
};

LagrangePoly lagrange_coeffs(const std::vector<double>& spectrum, double target);

/// Sets p.rescale from a Chebyshev grid on [-alpha, alpha] plus local refinement.
void set_rescale(LagrangePoly& p, double alpha);

struct QubitizationOp {
  Circuit circuit;  // (2|0><0| - I) V_A on system + index
  double alpha = 1;
  int n_system = 0;
  std::vector<int> index;
  // Set when V_A = PREP^dagger SELECT PREP is known in parts.
  Circuit prep;
  Circuit select;
};

QubitizationOp qubitize(const BlockEncoding& be);
/// Walk operator of the Pauli LCU of `op`, keeping PREP and SELECT separate.
QubitizationOp qubitize(const PauliSum& op);

/// Q_A controlled on |0> of a new last qubit. With known parts only SELECT
/// and the reflection carry the control.
Circuit controlled_walk(const QubitizationOp& q);

/// Chebyshev coefficients of P(alpha cos theta), then z^d times the symmetric
/// Laurent form, a degree-2d polynomial. Multiplied by p.rescale.
ComplexPoly chebyshev_map(const LagrangePoly& p, double alpha);

enum class SymmetryOp { N, Sz, S2 };

PauliSum symmetry_operator(SymmetryOp op, int n_so);
std::vector<double> analytic_spectrum(SymmetryOp op, int n_so);

struct GqsvtProjector {
  BlockEncoding block;  // block = rescale * P_target, i.e. alpha = 1 / rescale
  LagrangePoly poly;
  double lcu_alpha = 1;
};

GqsvtProjector build_projector_gqsvt(const PauliSum& op, const std::vector<double>& spectrum, double target);
GqsvtProjector build_projector_gqsvt(SymmetryOp op, int n_so, double target);

}  // namespace symproj
