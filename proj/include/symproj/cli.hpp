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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "symproj/cost.hpp"
#include "symproj/lcu.hpp"
#include "symproj/oracle.hpp"

namespace symproj {

struct RunConfig {
  std::string subcommand;
  Method method = Method::Lcu;
  Projector projector = Projector::Sz;
  int n_so = 4;
  // n: N_elec (default n_so/2); sz: M_S; s2 and s_ms: S. Defaults 0.
  std::optional<double> target;
  std::optional<double> ms;  // M_S for s_ms (default 0)
  int n_phi = 0;             // 0 = smallest exact grid for the target
  int n_beta = 0;            // 0 = recommended_n_beta(S)
  std::optional<double> eps_r;
  std::string in, out, gnuplot;
  std::string init = "uniform";  // uniform | sector | random
  std::uint64_t seed = 1;
  int jobs = 1;
  bool verify = false;
  std::vector<int> n_so_list = {8, 16, 32, 64};
  std::vector<double> eps_list;  // empty = 10^(-k/4), k = 2..16
  std::string sweep = "phi";     // scan-nodes: phi | beta
  int max_nodes = 0;             // 0 = a few past the exact count
  int rounds = -1;               // aa-demo: -1 = plan(p).m
  NodeRule node_rule = NodeRule::Exact;
  // femoco custom row; n_orbitals == 0 prints the three reference rows.
  int n_orbitals = 0;
  int n_elec = 0;
};

/// Throws std::invalid_argument for unsupported (method, projector) pairs and
/// out-of-range quantum numbers.
void validate(const RunConfig& cfg);

/// Resolved quantum numbers and grid sizes of a config.
struct Sector {
  int n_elec = 0;      // projector n
  HalfInt m_s{0};      // sz, s_ms
  HalfInt s{0};        // s2, s_ms
  int n_phi = 0;
  int n_beta = 0;
};
Sector resolve_sector(const RunConfig& cfg);

/// Block encoding of the configured projector. GQSVT blocks carry alpha = 1 / rescale.
BlockEncoding build_projector(const RunConfig& cfg);

/// Dense exact projector for the configured sector (n_so <= kOracleMaxQubits).
DenseOperator oracle_projector(const RunConfig& cfg);

/// Input state: --in file if set, else cfg.init.
Statevector initial_state(const RunConfig& cfg);

/// Default eps_r per method: the precision-study thresholds.
double default_eps(Method m);

// Each command writes its data to `out` and diagnostics to `err`, and returns
// the process exit code.
int cmd_project(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_scan_nodes(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_scan_precision(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_resources(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_femoco(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_aa_demo(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_phases_export(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Dispatch on cfg.subcommand ("project", "scan-nodes", ..., "phases export").
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace symproj
