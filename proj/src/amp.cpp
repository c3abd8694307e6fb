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

#include "symproj/amp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace symproj {

AmplificationPlan plan(double p) {
  if (!(p > 0 && p <= 1)) throw std::invalid_argument("success probability must lie in (0, 1]");
  AmplificationPlan r;
  r.p = p;
  r.theta = std::asin(std::sqrt(p));
  r.m = std::max(0, static_cast<int>(std::floor(std::numbers::pi / (4 * r.theta) - 0.5 + 1e-9)));
  r.queries = 2 * r.m + 1;
  const double s = std::sin(r.queries * r.theta);
  r.amplified_p = s * s;
  return r;
}

double success_probability(const BlockEncoding& be, const Statevector& psi) {
  if (psi.n_qubits() != be.n_system) throw std::invalid_argument("state width does not match the system register");
  return run_block(be, psi, true).probability;
}

void reflect_about_zero(Circuit& c, const std::vector<int>& qubits) {
  if (qubits.empty()) {
    c.add(global_phase(std::numbers::pi));
    return;
  }
  const int t = qubits.front();
  c.add(make_gate(GateKind::X, t));
  Gate z = make_gate(GateKind::Z, t);
  for (std::size_t i = 1; i < qubits.size(); ++i) z.controls.push_back({qubits[i], false});
  c.add(z);
  c.add(make_gate(GateKind::X, t));
}

Circuit build_aa_circuit(const BlockEncoding& be, const Circuit& init, int m) {
  if (m < 0) throw std::invalid_argument("round count must be >= 0");
  if (init.width() > be.n_system) throw std::invalid_argument("init circuit wider than the system register");
  const int w = be.circuit.width();
  Circuit a(w);
  a.append(init);
  a.append(be.circuit);
  Circuit adag = a.adjoint();
  std::vector<int> all(w);
  for (int q = 0; q < w; ++q) all[q] = q;

  Circuit out(w);
  for (const auto& r : be.circuit.registers()) out.add_register(r.name, r.offset, r.size);
  out.append(a);
  for (int k = 0; k < m; ++k) {
    reflect_about_zero(out, be.flags);
    out.append(adag);
    reflect_about_zero(out, all);
    out.append(a);
  }
  return out;
}

double simulate_aa(const BlockEncoding& be, const Circuit& aa) {
  Statevector s = apply(aa, Statevector(aa.width()));
  return probability_zero(s, be.flags);
}

double uniform_overlap(int n_so, int n_elec) {
  if (n_so < 0 || n_elec < 0 || n_elec > n_so) throw std::invalid_argument("need 0 <= n_elec <= n_so");
  const double lc = std::lgamma(n_so + 1.0) - std::lgamma(n_elec + 1.0) - std::lgamma(n_so - n_elec + 1.0);
  return std::exp(lc - n_so * std::log(2.0));
}

}  // namespace symproj
