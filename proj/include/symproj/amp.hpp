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

#include "symproj/lcu.hpp"
#include "symproj/sim.hpp"

namespace symproj {

struct AmplificationPlan {
  double p = 0;
  double theta = 0;  // arcsin(sqrt p)
  int m = 0;
  int queries = 1;  // 2m + 1
  double amplified_p = 0;
};

/// m = floor(pi / (4 theta) - 1/2), floored at 0. Throws unless 0 < p <= 1.
AmplificationPlan plan(double p);

/// ||block |psi>||^2 by simulation and post-selection of the flags.
double success_probability(const BlockEncoding& be, const Statevector& psi);

/// Phase -1 on |0...0> of `qubits`, identity elsewhere.
void reflect_about_zero(Circuit& c, const std::vector<int>& qubits);

/// A = be.circuit after `init` (which acts on the system register), followed
/// by m rounds of S_good, A^dagger, S_0, A. Success is the flags all-zero.
Circuit build_aa_circuit(const BlockEncoding& be, const Circuit& init, int m);

/// Probability that the flags read all-zero after running `aa` on |0...0>.
double simulate_aa(const BlockEncoding& be, const Circuit& aa);

/// C(n_so, n_elec) / 2^n_so.
double uniform_overlap(int n_so, int n_elec);

}  // namespace symproj
