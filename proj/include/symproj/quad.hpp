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

#include <complex>
#include <vector>

namespace symproj {

/// Integer or half-integer quantum number stored as twice its value.
struct HalfInt {
  int twice = 0;

  static HalfInt from_double(double v);  // throws unless v is a multiple of 1/2
  double value() const { return twice / 2.0; }
  bool is_integer() const { return twice % 2 == 0; }
  friend auto operator<=>(const HalfInt&, const HalfInt&) = default;
};

struct FourierGrid {
  int n_phi = 0;
  std::vector<double> nodes;  // 2 pi k / n_phi
};

FourierGrid fourier_grid(int n_phi);

int min_nodes_sz(int n_so, HalfInt m_s);
int min_nodes_n(int n_so, int n_elec);

struct GLQuadrature {
  std::vector<double> nodes;    // ascending, in (-1, 1)
  std::vector<double> weights;  // positive, sum to 2
};

GLQuadrature gauss_legendre(int n);

/// Legendre polynomial P_l(x).
double legendre(int l, double x);

/// Diagonal element d^S_{MM}(beta) of the small Wigner matrix.
double wigner_d_diag(HalfInt s, HalfInt m, double beta);

struct EulerGrid {
  int n_alpha = 0, n_beta = 0, n_gamma = 0;
  std::vector<double> alphas, betas, gammas;
  /// Flattened as ((b * n_alpha) + a) * n_gamma + g.
  std::vector<std::complex<double>> weights;

  std::complex<double> weight(int b, int a, int g) const { return weights[(b * n_alpha + a) * n_gamma + g]; }
  double l1_norm() const;
};

EulerGrid su2_weights(HalfInt s, HalfInt m_s, int n_alpha, int n_beta, int n_gamma);

/// Quadrature for the beta integral alone: (2S+1)/2 * w_b * d^S_{MM}(beta_b).
struct BetaRule {
  std::vector<double> betas;
  std::vector<double> weights;  // real, may be negative
};

BetaRule beta_rule(HalfInt s, HalfInt m_s, int n_beta);

int recommended_n_beta(HalfInt s);

}  // namespace symproj
