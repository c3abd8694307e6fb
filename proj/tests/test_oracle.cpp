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

#include <gtest/gtest.h>

#include "symproj/lcu.hpp"
#include "symproj/oracle.hpp"
#include "test_util.hpp"

namespace symproj {
namespace {

using testing::op_diff;

TEST(Oracle, DenseMatchesSingleQubitPaulis) {
  PauliSum x(2);
  x.add_term(1.0, PauliString::single(1, Pauli::X));
  const DenseOperator m = dense(x);
  // X on qubit 1 flips bit 1: |00> <-> |10>.
  EXPECT_NEAR(std::abs(m(2, 0) - 1.0), 0, 1e-15);
  EXPECT_NEAR(std::abs(m(1, 0)), 0, 1e-15);
  PauliSum y(1);
  y.add_term(1.0, PauliString::single(0, Pauli::Y));
  const DenseOperator my = dense(y);
  EXPECT_NEAR(std::abs(my(1, 0) - cplx(0, 1)), 0, 1e-15);
}

TEST(Oracle, ExactProjectorInvariants) {
  const DenseOperator s2 = dense(jw_s2_operator(6));
  DenseOperator sum = DenseOperator::Zero(64, 64);
  for (double ev : distinct_eigenvalues(s2)) {
    const DenseOperator p = exact_projector(s2, ev);
    EXPECT_LT(op_diff(p * p, p), 1e-10);
    EXPECT_LT(op_diff(p.adjoint(), p), 1e-12);
    EXPECT_LT(op_diff(s2 * p, ev * p), 1e-9);
    sum += p;
  }
  EXPECT_LT(op_diff(sum, DenseOperator::Identity(64, 64)), 1e-10);
  EXPECT_THROW(exact_projector(s2, 0.5), std::invalid_argument);
}

TEST(Oracle, CircuitUnitaryAndBlockExtract) {
  std::mt19937_64 rng(5);
  const Circuit c = testing::random_circuit(3, 25, rng);
  const DenseOperator u = circuit_unitary(c);
  EXPECT_LT(op_diff(u.adjoint() * u, DenseOperator::Identity(8, 8)), 1e-12);
  BlockEncoding be;
  be.circuit = c;
  be.n_system = 2;
  be.flags = {2};
  EXPECT_LT(op_diff(block_extract(be), u.block(0, 0, 4, 4)), 1e-14);
}

TEST(Oracle, FidelityAndNorm) {
  const Statevector a = random_state(3, 1);
  EXPECT_NEAR(fidelity(a, a), 1, 1e-14);
  Eigen::VectorXcd v = to_eigen(a);
  v *= std::polar(3.0, 0.4);
  EXPECT_NEAR(fidelity(to_eigen(a), v), 1, 1e-14);
  EXPECT_NEAR(fidelity(Statevector::basis(2, 0), Statevector::basis(2, 1)), 0, 1e-15);
  DenseOperator d = DenseOperator::Zero(2, 2);
  d(0, 0) = 2;
  d(1, 1) = cplx(0, -3);
  EXPECT_NEAR(op_norm(d), 3, 1e-14);
}

}  // namespace
}  // namespace symproj
