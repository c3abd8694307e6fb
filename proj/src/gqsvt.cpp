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

#include "symproj/gqsvt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace symproj {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

double LagrangePoly::operator()(double x) const {
  double v = 1;
  for (double o : spectrum)
    if (o != target) v *= (x - o) / (target - o);
  return v;
}

LagrangePoly lagrange_coeffs(const std::vector<double>& spectrum, double target) {
  LagrangePoly p;
  p.spectrum = spectrum;
  std::sort(p.spectrum.begin(), p.spectrum.end());
  for (std::size_t i = 1; i < p.spectrum.size(); ++i)
    if (std::abs(p.spectrum[i] - p.spectrum[i - 1]) < 1e-12) throw std::invalid_argument("duplicate spectrum point");
  auto hit = std::find_if(p.spectrum.begin(), p.spectrum.end(), [&](double o) { return std::abs(o - target) < 1e-9; });
  if (hit == p.spectrum.end()) throw std::invalid_argument("target eigenvalue not in spectrum");
  p.target = *hit;
  p.coeffs = {1.0};
  for (double o : p.spectrum) {
    if (o == p.target) continue;
    const double den = p.target - o;
    std::vector<double> next(p.coeffs.size() + 1, 0.0);
    for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
      next[k + 1] += p.coeffs[k] / den;
      next[k] -= o * p.coeffs[k] / den;
    }
    p.coeffs = std::move(next);
  }
  return p;
}

void set_rescale(LagrangePoly& p, double alpha) {
  auto f = [&](double x) { return std::abs(p(x)); };
  const int n = 1024;
  double best = 0, bx = 0;
  std::vector<double> xs;
  for (int j = 0; j < n; ++j) xs.push_back(alpha * std::cos(kPi * (j + 0.5) / n));
  xs.push_back(alpha);
  xs.push_back(-alpha);
  for (double o : p.spectrum)
    if (std::abs(o) <= alpha) xs.push_back(o);
  for (double x : xs) {
    double v = f(x);
    if (v > best) {
      best = v;
      bx = x;
    }
  }
  // Golden-section refinement in the neighbouring grid cell.
  const double h = alpha * kPi / n * 2;
  double a = std::max(-alpha, bx - h), b = std::min(alpha, bx + h);
  const double gr = (std::sqrt(5.0) - 1) / 2;
  for (int it = 0; it < 60; ++it) {
    double c = b - gr * (b - a), d = a + gr * (b - a);
    if (f(c) > f(d)) {
      b = d;
    } else {
      a = c;
    }
  }
  best = std::max(best, f((a + b) / 2));
  p.rescale = 1.0 / best;
}

namespace {

// 2|0><0| - I on `index`, optionally controlled.
void add_reflection(Circuit& c, const std::vector<int>& index, const std::vector<Control>& ctrl) {
  const int t = index.front();
  c.add(make_gate(GateKind::X, t));
  Gate z = make_gate(GateKind::Z, t);
  z.controls = ctrl;
  for (std::size_t i = 1; i < index.size(); ++i) z.controls.push_back({index[i], false});
  c.add(z);
  c.add(make_gate(GateKind::X, t));
  Gate ph = global_phase(kPi);
  ph.controls = ctrl;
  c.add(ph);
}

}  // namespace

QubitizationOp qubitize(const BlockEncoding& be) {
  QubitizationOp q;
  q.alpha = be.alpha;
  q.n_system = be.n_system;
  q.index = be.flags;
  if (q.index.empty()) throw std::invalid_argument("qubitization needs an index register");
  q.circuit = Circuit(be.circuit.width());
  q.circuit.append(be.circuit);
  add_reflection(q.circuit, q.index, {});
  return q;
}

QubitizationOp qubitize(const PauliSum& op) {
  if (!op.is_hermitian()) throw std::invalid_argument("qubitization needs a Hermitian operator with real coefficients");
  const std::vector<LCUTerm> terms = pauli_terms(op);
  QubitizationOp q = qubitize(build_lcu(terms, op.n_qubits()));
  const int n = op.n_qubits(), w = q.circuit.width();
  std::vector<double> mags;
  for (auto& t : terms) mags.push_back(std::abs(t.weight));
  q.prep = Circuit(w);
  q.prep.append(prep_binary_tree(mags), q.index);
  q.select = build_select(terms, n, w - n);
  return q;
}

Circuit controlled_walk(const QubitizationOp& q) {
  const int w = q.circuit.width();
  if (q.prep.gates().empty() && q.select.gates().empty()) return controlled_on_zero(q.circuit);
  Circuit c(w + 1);
  const std::vector<Control> ctrl = {{w, false}};
  c.append(q.prep);
  c.append_controlled(q.select, ctrl);
  c.append(q.prep.adjoint());
  add_reflection(c, q.index, ctrl);
  return c;
}

ComplexPoly chebyshev_map(const LagrangePoly& p, double alpha) {
  const int d = p.degree();
  if (d > 4096) throw std::invalid_argument("polynomial degree too large");
  // Chebyshev-Gauss nodes give exact coefficients for degree <= d with M = d + 1 points.
  const int m = d + 1;
  std::vector<double> vals(m);
  for (int j = 0; j < m; ++j) vals[j] = p(alpha * std::cos(kPi * (j + 0.5) / m));
  std::vector<double> c(d + 1);
  for (int k = 0; k <= d; ++k) {
    double s = 0;
    for (int j = 0; j < m; ++j) s += vals[j] * std::cos(k * kPi * (j + 0.5) / m);
    c[k] = (k == 0 ? 1.0 : 2.0) * s / m;
  }
  ComplexPoly g;
  g.coeffs.assign(2 * d + 1, 0.0);
  g.coeffs[d] = p.rescale * c[0];
  for (int k = 1; k <= d; ++k) {
    g.coeffs[d + k] += p.rescale * c[k] / 2;
    g.coeffs[d - k] += p.rescale * c[k] / 2;
  }
  return g;
}

PauliSum symmetry_operator(SymmetryOp op, int n_so) {
  switch (op) {
    case SymmetryOp::N: return jw_number_operator(n_so);
    case SymmetryOp::Sz: return jw_sz_operator(n_so);
    case SymmetryOp::S2: return jw_s2_operator(n_so);
  }
  throw std::logic_error("unknown symmetry operator");
}

std::vector<double> analytic_spectrum(SymmetryOp op, int n_so) {
  if (n_so < 2 || n_so % 2) throw std::invalid_argument("n_so must be even and >= 2");
  std::vector<double> s;
  switch (op) {
    case SymmetryOp::N:
      for (int k = 0; k <= n_so; ++k) s.push_back(k);
      break;
    case SymmetryOp::Sz:
      for (int t = -n_so / 2; t <= n_so / 2; ++t) s.push_back(t / 2.0);
      break;
    case SymmetryOp::S2:
      for (int t = 0; t <= n_so / 2; ++t) s.push_back(t / 2.0 * (t / 2.0 + 1));
      break;
  }
  return s;
}

GqsvtProjector build_projector_gqsvt(const PauliSum& op, const std::vector<double>& spectrum, double target) {
  if (!op.is_hermitian()) throw std::invalid_argument("GQSVT needs a Hermitian operator with real coefficients");
  GqsvtProjector out;
  QubitizationOp q = qubitize(op);
  out.lcu_alpha = q.alpha;
  out.poly = lagrange_coeffs(spectrum, target);
  set_rescale(out.poly, q.alpha);
  ComplexPoly g = chebyshev_map(out.poly, q.alpha);
  ComplexPoly comp = complementary_poly(g);
  PhaseSequence ph = find_phases(g, comp);
  BlockEncoding core = assemble_gqsp(ph, controlled_walk(q));
  // Undo the z^d shift of the Laurent form with d uncontrolled Q_A^dagger.
  Circuit qdag = q.circuit.adjoint();
  for (int k = 0; k < out.poly.degree(); ++k) core.circuit.append(qdag);
  BlockEncoding& be = out.block;
  be.circuit = std::move(core.circuit);
  be.n_system = op.n_qubits();
  be.flags = q.index;
  be.flags.push_back(core.flags.front());
  be.alpha = 1.0 / out.poly.rescale;
  return out;
}

GqsvtProjector build_projector_gqsvt(SymmetryOp op, int n_so, double target) {
  return build_projector_gqsvt(symmetry_operator(op, n_so), analytic_spectrum(op, n_so), target);
}

}  // namespace symproj
