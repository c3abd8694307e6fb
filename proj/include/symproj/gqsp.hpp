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

#include <stdexcept>
#include <utility>
#include <vector>

#include "symproj/lcu.hpp"
#include "symproj/qop.hpp"
#include "symproj/sim.hpp"

namespace symproj {

struct ComplexPoly {
  std::vector<cplx> coeffs;  // c_0 .. c_d

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  cplx operator()(cplx z) const;
  /// max |P(e^{i phi})| over uniform samples.
  double max_on_circle(int samples = 2048) const;
};

struct PhaseSequence {
  std::vector<double> thetas;  // theta_0 .. theta_d
  std::vector<double> phis;    // phi_0 .. phi_d
  double lambda = 0;

  int degree() const { return static_cast<int>(thetas.size()) - 1; }
};

/// Raised when 1 - |P|^2 cannot be factorized reliably.
class FactorizationError : public std::runtime_error {
 public:
  FactorizationError(const std::string& what, double residual) : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// (1/N) sum_k e^{i 2 pi k o / N} z^k. With z = e^{-i 2 pi O / N} this is the
/// Fourier projector onto O = o, for an operator O with integer spectrum.
ComplexPoly projector_poly(int n_so, int target_eigenvalue, int n_phi);

/// Q with |P|^2 + |Q|^2 = 1 on the unit circle.
ComplexPoly complementary_poly(const ComplexPoly& p);

/// Layer stripping; throws FactorizationError if the residual exceeds 1e-8.
PhaseSequence find_phases(const ComplexPoly& p, const ComplexPoly& q);

/// First column (P, Q) of the 2x2 symbol realized by the phases.
std::pair<ComplexPoly, ComplexPoly> reconstruct(const PhaseSequence& phases);

/// Max |P(z)|^2 + |Q(z)|^2 - 1 over `samples` points on the circle.
double complementarity_residual(const ComplexPoly& p, const ComplexPoly& q, int samples = 4096);

/// `cu` acts on m + 1 qubits: qubits [0, m) carry U, qubit m is the signal
/// qubit and U fires when it is |0>. The result is a one-flag block of P(U).
BlockEncoding assemble_gqsp(const PhaseSequence& phases, const Circuit& cu);

/// |0>-controlled copy of `u` with the signal qubit appended at index u.width().
Circuit controlled_on_zero(const Circuit& u);

/// P(U) for a signal circuit `u` on n qubits, solving phases internally.
BlockEncoding gqsp_projector(const ComplexPoly& p, const Circuit& u);

BlockEncoding build_pn_gqsp(int n_so, int n_elec, int n_phi);
BlockEncoding build_pms_gqsp(int n_so, HalfInt m_s, int n_phi);
/// GQSP P_MS around an LCU beta integral.
BlockEncoding build_psms_gqsp(int n_so, HalfInt s, HalfInt m_s, int n_phi, int n_beta);

}  // namespace symproj
