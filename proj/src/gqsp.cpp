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

#include "symproj/gqsp.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace symproj {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPrescale = 1 - 1e-12;

cplx horner(const std::vector<cplx>& c, cplx z) {
  cplx v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * z + *it;
  return v;
}

// Roots of c_0 + c_1 z + ... + c_n z^n with c_n != 0.
std::vector<cplx> poly_roots(const std::vector<cplx>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  if (n < 1) return {};
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -c[i] / c[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  if (es.info() != Eigen::Success) throw FactorizationError("companion eigen-solve failed", INFINITY);
  std::vector<cplx> roots(es.eigenvalues().data(), es.eigenvalues().data() + n);
  // Newton polish; keep a step only if it lowers |R|.
  std::vector<cplx> dc(n);
  for (int i = 1; i <= n; ++i) dc[i - 1] = c[i] * static_cast<double>(i);
  for (auto& r : roots) {
    for (int it = 0; it < 3; ++it) {
      cplx f = horner(c, r), df = horner(dc, r);
      if (df == cplx(0)) break;
      cplx nr = r - f / df;
      if (std::abs(horner(c, nr)) < std::abs(f)) {
        r = nr;
      } else {
        break;
      }
    }
  }
  return roots;
}

}  // namespace

cplx ComplexPoly::operator()(cplx z) const { return horner(coeffs, z); }

double ComplexPoly::max_on_circle(int samples) const {
  double m = 0;
  for (int k = 0; k < samples; ++k) m = std::max(m, std::abs((*this)(std::polar(1.0, 2 * kPi * k / samples))));
  return m;
}

ComplexPoly projector_poly(int n_so, int target_eigenvalue, int n_phi) {
  if (n_phi < 1) throw std::invalid_argument("n_phi must be >= 1");
  if (n_so < 0) throw std::invalid_argument("n_so must be nonnegative");
  ComplexPoly p;
  for (int k = 0; k < n_phi; ++k)
    p.coeffs.push_back(std::polar(1.0 / n_phi, 2 * kPi * k * target_eigenvalue / n_phi));
  return p;
}

double complementarity_residual(const ComplexPoly& p, const ComplexPoly& q, int samples) {
  double worst = 0;
  for (int k = 0; k < samples; ++k) {
    cplx z = std::polar(1.0, 2 * kPi * k / samples);
    worst = std::max(worst, std::abs(std::norm(p(z)) + std::norm(q(z)) - 1));
  }
  return worst;
}

ComplexPoly complementary_poly(const ComplexPoly& p_in) {
  if (p_in.coeffs.empty()) throw std::invalid_argument("empty polynomial");
  const int d = p_in.degree();
  if (p_in.max_on_circle(4096) > 1 + 1e-9) throw std::invalid_argument("|P| exceeds 1 on the unit circle");
  std::vector<cplx> p = p_in.coeffs;
  for (auto& c : p) c *= kPrescale;
  // R(z) = z^d - P(z) P~(z), P~_k = conj(p_{d-k}); degree 2d, palindromic up to conjugation.
  std::vector<cplx> r(2 * d + 1, 0.0);
  r[d] = 1.0;
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j) r[i + j] -= p[i] * std::conj(p[d - j]);
  double rmax = 0;
  for (auto& c : r) rmax = std::max(rmax, std::abs(c));
  ComplexPoly q;
  q.coeffs.assign(d + 1, 0.0);
  if (rmax < 1e-10) return q;  // P is unimodular on the circle
  const double tol = 1e-13 * rmax;
  int lo = 0, hi = 2 * d;
  while (lo < hi && std::abs(r[lo]) <= tol) ++lo;
  while (hi > lo && std::abs(r[hi]) <= tol) --hi;
  std::vector<cplx> core(r.begin() + lo, r.begin() + hi + 1);
  std::vector<cplx> roots = poly_roots(core);
  std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) { return std::abs(a) < std::abs(b); });
  // Zeros at the origin (trimmed low coefficients) pair with roots at infinity.
  const int n_inside = d - lo;
  if (n_inside < 0 || n_inside > static_cast<int>(roots.size()))
    throw FactorizationError("root count inconsistent with degree", INFINITY);
  // Expanding the root product directly loses digits for clustered roots, so
  // Q is sampled in product form on the circle and recovered by a DFT.
  const int m = d + 1;
  std::vector<cplx> samples(m);
  for (int k = 0; k < m; ++k) {
    const cplx z = std::polar(1.0, 2 * kPi * k / m);
    cplx v = std::pow(z, lo);
    for (int i = 0; i < n_inside; ++i) v *= z - roots[i];
    samples[k] = v;
  }
  std::vector<cplx> qc(d + 1, 0.0);
  for (int j = 0; j <= d; ++j) {
    cplx acc = 0;
    for (int k = 0; k < m; ++k) acc += samples[k] * std::polar(1.0, -2 * kPi * static_cast<double>(j) * k / m);
    qc[j] = acc / static_cast<double>(m);
  }
  // Scale from the sample where 1 - |P|^2 is largest, phase by Q(1) > 0.
  double best = -1;
  cplx z0 = 1.0;
  const ComplexPoly ps{p};
  for (int k = 0; k < 512; ++k) {
    cplx z = std::polar(1.0, 2 * kPi * k / 512);
    double v = 1 - std::norm(ps(z));
    if (v > best) {
      best = v;
      z0 = z;
    }
  }
  const double mag = std::sqrt(best) / std::abs(horner(qc, z0));
  cplx at1 = horner(qc, 1.0);
  cplx scale = mag * (std::abs(at1) > 1e-12 ? std::conj(at1) / std::abs(at1) : cplx(1.0));
  for (auto& c : qc) c *= scale;
  q.coeffs = std::move(qc);
  const double res = complementarity_residual(p_in, q);
  if (res > 1e-9)
    throw FactorizationError("spectral factorization residual " + std::to_string(res) + " exceeds 1e-9", res);
  return q;
}

PhaseSequence find_phases(const ComplexPoly& p_in, const ComplexPoly& q_in) {
  const int d = std::max(p_in.degree(), q_in.degree());
  std::vector<cplx> p(d + 1, 0.0), q(d + 1, 0.0);
  std::copy(p_in.coeffs.begin(), p_in.coeffs.end(), p.begin());
  std::copy(q_in.coeffs.begin(), q_in.coeffs.end(), q.begin());
  PhaseSequence out;
  out.thetas.assign(d + 1, 0.0);
  out.phis.assign(d + 1, 0.0);
  double residual = 0;
  for (int k = d; k >= 1; --k) {
    const cplx pd = p[k], qd = q[k], p0 = p[0], q0 = q[0];
    double theta, phi;
    if (std::norm(pd) + std::norm(qd) >= std::norm(p0) + std::norm(q0)) {
      theta = std::atan2(std::abs(qd), std::abs(pd));
      phi = (std::abs(pd) > 0 && std::abs(qd) > 0) ? std::arg(pd) - std::arg(qd) : 0.0;
    } else {
      theta = std::atan2(std::abs(p0), std::abs(q0));
      phi = (std::abs(p0) > 0 && std::abs(q0) > 0) ? std::arg(p0) - std::arg(q0) - kPi : 0.0;
    }
    out.thetas[k] = theta;
    out.phis[k] = phi;
    const double c = std::cos(theta), s = std::sin(theta);
    const cplx e = std::polar(1.0, -phi);
    std::vector<cplx> np(k), nq(k);
    // top = (e c P + s Q) / z, bottom = e s P - c Q truncated to degree k-1.
    residual = std::max(residual, std::abs(e * c * p[0] + s * q[0]));
    residual = std::max(residual, std::abs(e * s * p[k] - c * q[k]));
    for (int j = 0; j < k; ++j) {
      np[j] = e * c * p[j + 1] + s * q[j + 1];
      nq[j] = e * s * p[j] - c * q[j];
    }
    p = std::move(np);
    q = std::move(nq);
  }
  const double nrm = std::sqrt(std::norm(p[0]) + std::norm(q[0]));
  residual = std::max(residual, std::abs(nrm - 1));
  out.thetas[0] = std::atan2(std::abs(q[0]), std::abs(p[0]));
  out.lambda = std::abs(q[0]) > 1e-15 ? std::arg(q[0]) : 0.0;
  out.phis[0] = std::abs(p[0]) > 1e-15 ? std::arg(p[0]) - out.lambda : 0.0;
  if (residual > 1e-8)
    throw FactorizationError("layer stripping residual " + std::to_string(residual) + " exceeds 1e-8", residual);
  return out;
}

std::pair<ComplexPoly, ComplexPoly> reconstruct(const PhaseSequence& ph) {
  const int d = ph.degree();
  std::vector<cplx> top{std::polar(std::cos(ph.thetas[0]), ph.lambda + ph.phis[0])};
  std::vector<cplx> bot{std::polar(std::sin(ph.thetas[0]), ph.lambda)};
  for (int k = 1; k <= d; ++k) {
    // A = diag(z, 1), then R~(theta_k, phi_k, 0).
    top.insert(top.begin(), cplx(0));
    bot.push_back(0.0);
    const double c = std::cos(ph.thetas[k]), s = std::sin(ph.thetas[k]);
    const cplx e = std::polar(1.0, ph.phis[k]);
    std::vector<cplx> nt(k + 1), nb(k + 1);
    for (int j = 0; j <= k; ++j) {
      nt[j] = e * (c * top[j] + s * bot[j]);
      nb[j] = s * top[j] - c * bot[j];
    }
    top = std::move(nt);
    bot = std::move(nb);
  }
  return {ComplexPoly{top}, ComplexPoly{bot}};
}

Circuit controlled_on_zero(const Circuit& u) {
  const int m = u.width();
  Circuit c(m + 1);
  c.append_controlled(u, {{m, false}});
  return c;
}

BlockEncoding assemble_gqsp(const PhaseSequence& ph, const Circuit& cu) {
  const int m = cu.width() - 1;
  if (m < 0) throw std::invalid_argument("controlled signal circuit has no signal qubit");
  BlockEncoding be;
  be.n_system = m;
  be.circuit = Circuit(m + 1);
  if (m > 0) be.circuit.add_register("system", 0, m);
  be.circuit.add_register("signal", m, 1);
  be.circuit.add(rtilde(m, ph.thetas[0], ph.phis[0], ph.lambda));
  for (int k = 1; k <= ph.degree(); ++k) {
    be.circuit.append(cu);
    be.circuit.add(rtilde(m, ph.thetas[k], ph.phis[k], 0.0));
  }
  be.flags = {m};
  return be;
}

BlockEncoding gqsp_projector(const ComplexPoly& p, const Circuit& u) {
  ComplexPoly q = complementary_poly(p);
  PhaseSequence ph = find_phases(p, q);
  return assemble_gqsp(ph, controlled_on_zero(u));
}

BlockEncoding build_pn_gqsp(int n_so, int n_elec, int n_phi) {
  if (n_elec < 0 || n_elec > n_so) throw std::invalid_argument("n_elec outside [0, n_so]");
  Circuit u = exp_n_circuit(2 * kPi / n_phi, n_so, 0);  // e^{-i 2 pi N / n_phi}
  BlockEncoding be = gqsp_projector(projector_poly(n_so, n_elec, n_phi), u);
  be.approximate = n_phi < min_nodes_n(n_so, n_elec);
  return be;
}

BlockEncoding build_pms_gqsp(int n_so, HalfInt m_s, int n_phi) {
  if (std::abs(m_s.twice) > n_so / 2) throw std::invalid_argument("|m_s| exceeds n_so/4");
  Circuit u = exp_sz_circuit(4 * kPi / n_phi, n_so, HalfInt{0});  // e^{-i 2 pi (2 Sz) / n_phi}
  BlockEncoding be = gqsp_projector(projector_poly(n_so, m_s.twice, n_phi), u);
  be.approximate = n_phi < exact_nodes_sz(n_so, m_s);
  return be;
}

BlockEncoding build_psms_gqsp(int n_so, HalfInt s, HalfInt m_s, int n_phi, int n_beta) {
  BlockEncoding pms = build_pms_gqsp(n_so, m_s, n_phi);
  BlockEncoding ps = build_ps_lcu(n_so, s, m_s, n_beta);
  return chain({&pms, &ps, &pms});
}

}  // namespace symproj
