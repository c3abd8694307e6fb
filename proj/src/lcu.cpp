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

#include "symproj/lcu.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace symproj {

namespace {

constexpr double kPi = std::numbers::pi;

void check_n_so(int n_so) {
  if (n_so < 2 || n_so % 2) throw std::invalid_argument("n_so must be even and >= 2");
}

// True when the gate is the identity (up to nothing: global phases count).
bool is_trivial(const Gate& g) {
  auto near = [](double x, double period) {
    double r = std::remainder(x, period);
    return std::abs(r) < 1e-15;
  };
  switch (g.kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
      return near(g.theta, 4 * kPi);
    case GateKind::Phase:
    case GateKind::GlobalPhase:
      return near(g.theta, 2 * kPi);
    default:
      return false;
  }
}

}  // namespace

Postselection run_block(const BlockEncoding& be, const Statevector& psi, bool allow_zero) {
  if (psi.n_qubits() != be.n_system)
    throw std::invalid_argument("state has " + std::to_string(psi.n_qubits()) + " qubits, block expects " +
                                std::to_string(be.n_system));
  Statevector full = apply(be.circuit, psi.extended(be.circuit.width() - be.n_system));
  std::vector<int> drop = be.flags;
  for (int q = be.n_system; q < be.circuit.width(); ++q)
    if (std::find(drop.begin(), drop.end(), q) == drop.end()) drop.push_back(q);
  // Non-flag ancillas (none in current builders) are traced out by requiring |0>.
  return postselect(full, drop, allow_zero);
}

Circuit exp_n_circuit(double phi, int n_so, int n_elec) {
  check_n_so(n_so);
  Circuit c(n_so);
  c.add(global_phase(phi * (n_elec - n_so / 2.0), Scope::Select));
  for (int j = 0; j < n_so; ++j) c.add(make_gate(GateKind::RZ, j, -phi, Scope::Select));
  return c;
}

Circuit exp_sz_circuit(double phi, int n_so, HalfInt m_s) {
  check_n_so(n_so);
  Circuit c(n_so);
  c.add(global_phase(phi * m_s.value(), Scope::Select));
  for (int j = 0; j < n_so; ++j) c.add(make_gate(GateKind::RZ, j, j % 2 ? phi / 2 : -phi / 2, Scope::Select));
  return c;
}

Circuit exp_sy_circuit(double beta, int n_so) {
  check_n_so(n_so);
  Circuit c(n_so);
  auto g = [&](GateKind k, int q, double th = 0) { c.add(make_gate(k, q, th, Scope::Select)); };
  for (int p = 0; p < n_so / 2; ++p) {
    const int up = 2 * p, dn = 2 * p + 1;
    g(GateKind::RX, up, kPi / 2);
    g(GateKind::H, dn);
    c.add(cnot(dn, up));
    g(GateKind::RZ, up, -beta / 2);
    c.add(cnot(dn, up));
    g(GateKind::RX, up, -kPi / 2);
    g(GateKind::H, dn);
    g(GateKind::H, up);
    g(GateKind::RX, dn, kPi / 2);
    c.add(cnot(dn, up));
    g(GateKind::RZ, up, beta / 2);
    c.add(cnot(dn, up));
    g(GateKind::H, up);
    g(GateKind::RX, dn, -kPi / 2);
  }
  return c;
}

Circuit rotation_circuit(double alpha_e, double beta_e, double gamma_e, int n_so) {
  Circuit c(n_so);
  c.append(exp_sz_circuit(gamma_e, n_so, HalfInt{0}));
  c.append(exp_sy_circuit(beta_e, n_so));
  c.append(exp_sz_circuit(alpha_e, n_so, HalfInt{0}));
  return c;
}

int index_qubits(std::size_t n_terms) {
  if (n_terms == 0) throw std::invalid_argument("LCU needs at least one term");
  return n_terms <= 1 ? 0 : std::bit_width(n_terms - 1);
}

Circuit prep_binary_tree(const std::vector<double>& weights) {
  if (weights.empty()) throw std::invalid_argument("empty weight list");
  for (double w : weights)
    if (!(w >= 0)) throw std::invalid_argument("PREP weights must be nonnegative");
  const int a = index_qubits(weights.size());
  const std::size_t slots = std::size_t{1} << a;
  std::vector<double> w(slots, 0.0);
  std::copy(weights.begin(), weights.end(), w.begin());
  if (std::accumulate(w.begin(), w.end(), 0.0) <= 0) throw std::invalid_argument("all PREP weights are zero");
  Circuit c(a);
  // Level l fixes qubit a-1-l given the higher bits (the prefix).
  for (int l = 0; l < a; ++l) {
    const int q = a - 1 - l;
    const std::size_t n_prefix = std::size_t{1} << l, span = slots >> l, half = span / 2;
    std::vector<double> angles(n_prefix, 0.0);
    std::vector<bool> live(n_prefix, false);
    for (std::size_t pre = 0; pre < n_prefix; ++pre) {
      // Prefix bits are the high bits; slot index = (pre << (q+1)) | low.
      double w0 = 0, w1 = 0;
      for (std::size_t low = 0; low < half; ++low) {
        w0 += w[(pre * span) + low];
        w1 += w[(pre * span) + half + low];
      }
      live[pre] = w0 + w1 > 0;
      if (live[pre]) angles[pre] = 2 * std::atan2(std::sqrt(w1), std::sqrt(w0));
    }
    bool uniform = std::all_of(live.begin(), live.end(), [](bool b) { return b; }) &&
                   std::all_of(angles.begin(), angles.end(), [&](double t) { return std::abs(t - angles[0]) < 1e-14; });
    if (uniform) {
      if (std::abs(angles[0] - kPi / 2) < 1e-14) {
        c.add(make_gate(GateKind::H, q));
      } else if (angles[0] != 0) {
        c.add(make_gate(GateKind::RY, q, angles[0], Scope::Prep));
      }
      continue;
    }
    // Uniformly controlled RY over the prefix qubits: 2^l rotations and 2^l
    // CNOTs along a Gray code.
    for (std::size_t i = 0; i < n_prefix; ++i) {
      const std::size_t gi = i ^ (i >> 1);
      double th = 0;
      for (std::size_t pre = 0; pre < n_prefix; ++pre)
        th += (std::popcount(pre & gi) % 2 ? -1.0 : 1.0) * angles[pre];
      th /= static_cast<double>(n_prefix);
      if (std::abs(th) > 1e-15) c.add(make_gate(GateKind::RY, q, th, Scope::Prep));
      const int bit = i + 1 < n_prefix ? std::countr_zero(i + 1) : l - 1;
      Gate x = make_gate(GateKind::X, q);
      x.controls = {{q + 1 + bit, true}};
      c.add(std::move(x));
    }
  }
  return c;
}

Circuit build_select(const std::vector<LCUTerm>& terms, int n_system, int n_index) {
  if (terms.size() > (std::size_t{1} << n_index)) throw std::invalid_argument("more LCU terms than index states");
  Circuit c(n_system + n_index);
  std::vector<int> sys_map(n_system);
  std::iota(sys_map.begin(), sys_map.end(), 0);
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const auto& t = terms[k];
    if (t.weight == cplx(0)) continue;
    std::vector<Control> ctrl;
    for (int b = 0; b < n_index; ++b) ctrl.push_back({n_system + b, static_cast<bool>((k >> b) & 1)});
    Circuit u(n_system + n_index);
    u.append(t.unitary, sys_map);
    const double chi = std::arg(t.weight);
    if (chi != 0) u.add(global_phase(chi, Scope::Select));
    for (Gate g : u.gates()) {
      if (is_trivial(g)) continue;
      g.controls.insert(g.controls.begin(), ctrl.begin(), ctrl.end());
      c.add(std::move(g));
    }
  }
  return c;
}

BlockEncoding build_lcu(const std::vector<LCUTerm>& terms, int n_system) {
  const int a = index_qubits(terms.size());
  std::vector<double> mags;
  for (auto& t : terms) mags.push_back(std::abs(t.weight));
  BlockEncoding be;
  be.n_system = n_system;
  be.alpha = std::accumulate(mags.begin(), mags.end(), 0.0);
  be.circuit = Circuit(n_system + a);
  be.circuit.add_register("system", 0, n_system);
  be.circuit.add_register("index", n_system, a);
  std::vector<int> idx_map(a);
  std::iota(idx_map.begin(), idx_map.end(), n_system);
  Circuit prep = prep_binary_tree(mags);
  be.circuit.append(prep, idx_map);
  be.circuit.append(build_select(terms, n_system, a));
  be.circuit.append(prep.adjoint(), idx_map);
  be.flags = idx_map;
  return be;
}

std::vector<LCUTerm> pauli_terms(const PauliSum& op) {
  std::vector<LCUTerm> terms;
  const int n = op.n_qubits();
  for (auto& [c, p] : op.terms()) {
    Circuit u(n);
    for (auto [q, ax] : p.ops()) {
      GateKind k = ax == Pauli::X ? GateKind::X : ax == Pauli::Y ? GateKind::Y : GateKind::Z;
      u.add(make_gate(k, q));
    }
    terms.push_back({c, std::move(u)});
  }
  return terms;
}

BlockEncoding pauli_lcu(const PauliSum& op) { return build_lcu(pauli_terms(op), op.n_qubits()); }

BlockEncoding chain(const std::vector<const BlockEncoding*>& parts) {
  if (parts.empty()) throw std::invalid_argument("nothing to chain");
  const int n = parts.front()->n_system;
  int width = n;
  for (auto* p : parts) {
    if (p->n_system != n) throw std::invalid_argument("chained blocks act on different systems");
    width += p->circuit.width() - n;
  }
  BlockEncoding be;
  be.n_system = n;
  be.circuit = Circuit(width);
  be.circuit.add_register("system", 0, n);
  be.alpha = 1.0;
  int offset = n;
  for (auto* p : parts) {
    std::vector<int> map(p->circuit.width());
    for (int q = 0; q < p->circuit.width(); ++q) map[q] = q < n ? q : offset + (q - n);
    be.circuit.append(p->circuit, map);
    for (int f : p->flags) be.flags.push_back(map[f]);
    be.alpha *= p->alpha;
    be.approximate = be.approximate || p->approximate;
    offset += p->circuit.width() - n;
  }
  if (width > n) be.circuit.add_register("ancilla", n, width - n);
  return be;
}

int exact_nodes_sz(int n_so, HalfInt m_s) {
  check_n_so(n_so);
  return n_so / 2 + std::abs(m_s.twice) + 1;
}

BlockEncoding build_pn_lcu(int n_so, int n_elec, int n_phi) {
  if (n_phi < 1) throw std::invalid_argument("n_phi must be >= 1");
  const auto grid = fourier_grid(n_phi);
  std::vector<LCUTerm> terms;
  for (double phi : grid.nodes) terms.push_back({1.0 / n_phi, exp_n_circuit(phi, n_so, n_elec)});
  BlockEncoding be = build_lcu(terms, n_so);
  be.approximate = n_phi < min_nodes_n(n_so, n_elec);
  return be;
}

BlockEncoding build_pms_lcu(int n_so, HalfInt m_s, int n_phi) {
  if (n_phi < 1) throw std::invalid_argument("n_phi must be >= 1");
  if (std::abs(m_s.twice) > n_so / 2) throw std::invalid_argument("|m_s| exceeds n_so/4");
  const auto grid = fourier_grid(n_phi);
  std::vector<LCUTerm> terms;
  // The grid is conjugate to 2 Sz, whose spectrum is integral on the whole Fock space.
  for (double phi : grid.nodes) terms.push_back({1.0 / n_phi, exp_sz_circuit(2 * phi, n_so, m_s)});
  BlockEncoding be = build_lcu(terms, n_so);
  be.approximate = n_phi < exact_nodes_sz(n_so, m_s);
  return be;
}

BlockEncoding build_ps_lcu(int n_so, HalfInt s, HalfInt m_s, int n_beta) {
  check_n_so(n_so);
  const BetaRule rule = beta_rule(s, m_s, n_beta);
  std::vector<LCUTerm> terms;
  for (int b = 0; b < n_beta; ++b) terms.push_back({rule.weights[b], exp_sy_circuit(rule.betas[b], n_so)});
  BlockEncoding be = build_lcu(terms, n_so);
  be.approximate = n_beta < recommended_n_beta(s);
  return be;
}

BlockEncoding build_psms_lcu(int n_so, HalfInt s, HalfInt m_s, int n_phi, int n_beta) {
  BlockEncoding pms = build_pms_lcu(n_so, m_s, n_phi);
  BlockEncoding ps = build_ps_lcu(n_so, s, m_s, n_beta);
  return chain({&pms, &ps, &pms});
}

BlockEncoding build_psms_lcu_full(int n_so, HalfInt s, HalfInt m_s, int n_alpha, int n_beta, int n_gamma) {
  check_n_so(n_so);
  const EulerGrid grid = su2_weights(s, m_s, n_alpha, n_beta, n_gamma);
  std::vector<LCUTerm> terms;
  for (int b = 0; b < n_beta; ++b)
    for (int a = 0; a < n_alpha; ++a)
      for (int g = 0; g < n_gamma; ++g)
        terms.push_back({grid.weight(b, a, g), rotation_circuit(grid.alphas[a], grid.betas[b], grid.gammas[g], n_so)});
  BlockEncoding be = build_lcu(terms, n_so);
  const int need = exact_nodes_sz(n_so, m_s);
  be.approximate = n_alpha < need || n_gamma < need || n_beta < recommended_n_beta(s);
  return be;
}

}  // namespace symproj
