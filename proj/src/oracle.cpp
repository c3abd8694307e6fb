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

#include "symproj/oracle.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "symproj/lcu.hpp"

namespace symproj {

namespace {

void check_cap(int n) {
  if (n > kOracleMaxQubits)
    throw std::length_error("dense oracle limited to " + std::to_string(kOracleMaxQubits) + " qubits, got " +
                            std::to_string(n));
}

}  // namespace

DenseOperator dense(const PauliSum& op) {
  const int n = op.n_qubits();
  check_cap(n);
  const Eigen::Index dim = Eigen::Index{1} << n;
  DenseOperator m = DenseOperator::Zero(dim, dim);
  static const cplx ipow[4] = {1.0, cplx(0, 1), -1.0, cplx(0, -1)};
  for (auto& [c, p] : op.terms()) {
    const std::uint64_t x = p.x_mask(), z = p.z_mask();
    const cplx ph = c * ipow[p.y_count() % 4];
    for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(dim); ++b) {
      const double sign = (std::popcount(b & z) & 1) ? -1.0 : 1.0;
      m(static_cast<Eigen::Index>(b ^ x), static_cast<Eigen::Index>(b)) += sign * ph;
    }
  }
  return m;
}

DenseOperator exact_projector(const DenseOperator& op, double eigenvalue, double tol) {
  Eigen::SelfAdjointEigenSolver<DenseOperator> es(op);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigen-decomposition failed");
  DenseOperator p = DenseOperator::Zero(op.rows(), op.cols());
  int hits = 0;
  for (Eigen::Index i = 0; i < op.rows(); ++i) {
    if (std::abs(es.eigenvalues()(i) - eigenvalue) <= tol) {
      p += es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
      ++hits;
    }
  }
  if (hits == 0) throw std::invalid_argument("no eigenvalue within tolerance of " + std::to_string(eigenvalue));
  return p;
}

std::vector<double> distinct_eigenvalues(const DenseOperator& op, double tol) {
  Eigen::SelfAdjointEigenSolver<DenseOperator> es(op, Eigen::EigenvaluesOnly);
  std::vector<double> out;
  for (Eigen::Index i = 0; i < op.rows(); ++i) {
    double v = es.eigenvalues()(i);
    if (out.empty() || v - out.back() > tol) out.push_back(v);
  }
  return out;
}

DenseOperator circuit_unitary(const Circuit& c) {
  check_cap(c.width());
  const Eigen::Index dim = Eigen::Index{1} << c.width();
  DenseOperator u(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    std::vector<cplx> amps(dim, 0.0);
    amps[j] = 1.0;
    for (auto& g : c.gates()) apply_gate(g, amps);
    for (Eigen::Index i = 0; i < dim; ++i) u(i, j) = amps[i];
  }
  return u;
}

DenseOperator block_extract(const BlockEncoding& be) {
  const int w = be.circuit.width();
  check_cap(w);
  const Eigen::Index dim_s = Eigen::Index{1} << be.n_system;
  DenseOperator b(dim_s, dim_s);
  for (Eigen::Index j = 0; j < dim_s; ++j) {
    std::vector<cplx> amps(std::size_t{1} << w, 0.0);
    amps[j] = 1.0;
    for (auto& g : be.circuit.gates()) apply_gate(g, amps);
    for (Eigen::Index i = 0; i < dim_s; ++i) b(i, j) = amps[static_cast<std::size_t>(i)];
  }
  return b;
}

Eigen::VectorXcd to_eigen(const Statevector& s) {
  const auto& a = s.amplitudes();
  return Eigen::Map<const Eigen::VectorXcd>(a.data(), static_cast<Eigen::Index>(a.size()));
}

Statevector from_eigen(const Eigen::VectorXcd& v) {
  const int n = std::bit_width(static_cast<std::uint64_t>(v.size())) - 1;
  return Statevector(n, std::vector<cplx>(v.data(), v.data() + v.size()));
}

double fidelity(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  if (a.size() != b.size()) throw std::invalid_argument("fidelity of states with different sizes");
  const double na = a.norm(), nb = b.norm();
  if (na == 0 || nb == 0) throw std::invalid_argument("fidelity of a zero vector");
  return std::norm(a.dot(b)) / (na * na * nb * nb);
}

double fidelity(const Statevector& a, const Statevector& b) { return fidelity(to_eigen(a), to_eigen(b)); }

double op_norm(const DenseOperator& m) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<DenseOperator> svd(m);
  return svd.singularValues()(0);
}

}  // namespace symproj
