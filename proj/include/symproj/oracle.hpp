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

#include <Eigen/Dense>

#include "symproj/qop.hpp"
#include "symproj/sim.hpp"

namespace symproj {

struct BlockEncoding;

using DenseOperator = Eigen::MatrixXcd;

inline constexpr int kOracleMaxQubits = 14;

/// Kronecker expansion of a PauliSum in the little-endian basis.
DenseOperator dense(const PauliSum& op);

/// Sum of v v^dagger over eigenvectors with |lambda - eigenvalue| <= tol.
DenseOperator exact_projector(const DenseOperator& op, double eigenvalue, double tol = 1e-8);

/// Distinct eigenvalues of a Hermitian matrix, clustered at `tol`.
std::vector<double> distinct_eigenvalues(const DenseOperator& op, double tol = 1e-8);

/// Full unitary of a circuit by column-wise simulation.
DenseOperator circuit_unitary(const Circuit& c);

/// <0_anc| U |0_anc> restricted to the system register.
DenseOperator block_extract(const BlockEncoding& be);

/// |<a|b>|^2 after normalizing both.
double fidelity(const Statevector& a, const Statevector& b);
double fidelity(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b);

Eigen::VectorXcd to_eigen(const Statevector& s);
Statevector from_eigen(const Eigen::VectorXcd& v);

/// Largest singular value.
double op_norm(const DenseOperator& m);

}  // namespace symproj
