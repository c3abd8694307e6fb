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

#include "symproj/quad.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace symproj {

HalfInt HalfInt::from_double(double v) {
  double t = 2 * v;
  double r = std::round(t);
  if (std::abs(t - r) > 1e-9) throw std::invalid_argument("not a multiple of 1/2: " + std::to_string(v));
  return {static_cast<int>(r)};
}

FourierGrid fourier_grid(int n_phi) {
  if (n_phi < 1) throw std::invalid_argument("n_phi must be >= 1");
  FourierGrid g{n_phi, {}};
  for (int k = 0; k < n_phi; ++k) g.nodes.push_back(2 * std::numbers::pi * k / n_phi);
  return g;
}

int min_nodes_sz(int n_so, HalfInt m_s) {
  if (n_so < 2 || n_so % 2) throw std::invalid_argument("n_so must be even and >= 2");
  // |M_S| <= N_SO/4 is the physical range; the aliasing formula accepts up to N_SO/2.
  if (std::abs(m_s.twice) > n_so) throw std::invalid_argument("|m_s| exceeds n_so/2");
  return n_so / 2 + (std::abs(m_s.twice) + 1) / 2 + 1;
}

int min_nodes_n(int n_so, int n_elec) {
  if (n_so < 2 || n_so % 2) throw std::invalid_argument("n_so must be even and >= 2");
  if (n_elec < 0 || n_elec > n_so) throw std::invalid_argument("n_elec outside [0, n_so]");
  return n_so / 2 + std::abs(n_elec - n_so / 2) + 1;
}

double legendre(int l, double x) {
  if (l == 0) return 1;
  double p0 = 1, p1 = x;
  for (int k = 2; k <= l; ++k) {
    double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

GLQuadrature gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("Gauss-Legendre order must be >= 1");
  GLQuadrature q;
  q.nodes.assign(n, 0.0);
  q.weights.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0;
    for (int it = 0; it < 100; ++it) {
      double p = legendre(n, x);
      double pm1 = legendre(n - 1, x);
      dp = n * (x * p - pm1) / (x * x - 1);
      double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double pm1 = legendre(n - 1, x);
    dp = n * (x * legendre(n, x) - pm1) / (x * x - 1);
    double w = 2 / ((1 - x * x) * dp * dp);
    q.nodes[i] = -x;
    q.nodes[n - 1 - i] = x;
    q.weights[i] = q.weights[n - 1 - i] = w;
  }
  if (n % 2) q.nodes[n / 2] = 0.0;
  return q;
}

double wigner_d_diag(HalfInt s, HalfInt m, double beta) {
  if (s.twice < 0 || std::abs(m.twice) > s.twice || (s.twice - m.twice) % 2)
    throw std::invalid_argument("inconsistent (S, M) for Wigner d");
  // d^j_{mm} = sum_k (-1)^k (j+m)!(j-m)! / ((j+m-k)! k!^2 (j-m-k)!) cos^{2j-2k}(b/2) sin^{2k}(b/2)
  const int jpm = (s.twice + m.twice) / 2, jmm = (s.twice - m.twice) / 2;
  const double c = std::cos(beta / 2), sn = std::sin(beta / 2);
  const double lf = std::lgamma(jpm + 1.0) + std::lgamma(jmm + 1.0);
  double sum = 0;
  for (int k = 0; k <= std::min(jpm, jmm); ++k) {
    const int pc = jpm + jmm - 2 * k, ps = 2 * k;
    double mag = lf - std::lgamma(jpm - k + 1.0) - 2 * std::lgamma(k + 1.0) - std::lgamma(jmm - k + 1.0);
    double term = std::exp(mag);
    if (pc) term *= std::pow(c, pc);
    if (ps) term *= std::pow(sn, ps);
    sum += (k % 2 ? -term : term);
  }
  return sum;
}

double EulerGrid::l1_norm() const {
  double t = 0;
  for (auto& w : weights) t += std::abs(w);
  return t;
}

EulerGrid su2_weights(HalfInt s, HalfInt m_s, int n_alpha, int n_beta, int n_gamma) {
  if (n_alpha < 1 || n_beta < 1 || n_gamma < 1) throw std::invalid_argument("grid counts must be >= 1");
  if (s.twice < 0 || std::abs(m_s.twice) > s.twice || (s.twice - m_s.twice) % 2)
    throw std::invalid_argument("invalid (S, M_S)");
  EulerGrid g;
  g.n_alpha = n_alpha;
  g.n_beta = n_beta;
  g.n_gamma = n_gamma;
  const auto gl = gauss_legendre(n_beta);
  // alpha and gamma run over the SU(2) period 4 pi so half-integer Sz components cancel.
  for (int a = 0; a < n_alpha; ++a) g.alphas.push_back(4 * std::numbers::pi * a / n_alpha);
  for (int c = 0; c < n_gamma; ++c) g.gammas.push_back(4 * std::numbers::pi * c / n_gamma);
  for (int b = 0; b < n_beta; ++b) g.betas.push_back(std::acos(gl.nodes[b]));
  const double pref = (s.twice + 1) / (2.0 * n_alpha * n_gamma);
  const double m = m_s.value();
  for (int b = 0; b < n_beta; ++b) {
    const double d = wigner_d_diag(s, m_s, g.betas[b]);
    for (int a = 0; a < n_alpha; ++a) {
      for (int c = 0; c < n_gamma; ++c) {
        // conj(e^{-iMa} d e^{-iMg}) = e^{iM(a+g)} d
        g.weights.push_back(pref * gl.weights[b] * d * std::polar(1.0, m * (g.alphas[a] + g.gammas[c])));
      }
    }
  }
  return g;
}

BetaRule beta_rule(HalfInt s, HalfInt m_s, int n_beta) {
  if (n_beta < 1) throw std::invalid_argument("n_beta must be >= 1");
  if (s.twice < 0 || std::abs(m_s.twice) > s.twice || (s.twice - m_s.twice) % 2)
    throw std::invalid_argument("invalid (S, M_S)");
  const auto gl = gauss_legendre(n_beta);
  BetaRule r;
  for (int b = 0; b < n_beta; ++b) {
    double beta = std::acos(gl.nodes[b]);
    r.betas.push_back(beta);
    r.weights.push_back((s.twice + 1) / 2.0 * gl.weights[b] * wigner_d_diag(s, m_s, beta));
  }
  return r;
}

int recommended_n_beta(HalfInt s) {
  if (s.twice < 0) throw std::invalid_argument("negative spin");
  switch (s.twice) {
    case 0: return 2;
    case 4: return 3;
    case 8: return 3;
    case 12: return 4;
    default: return (s.twice + 1) / 2 + 1;  // ceil(S) + 1
  }
}

}  // namespace symproj
