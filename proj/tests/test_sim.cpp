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

#include <cmath>
#include <numbers>

#include "symproj/oracle.hpp"
#include "symproj/sim.hpp"
#include "test_util.hpp"

namespace symproj {
namespace {

using testing::max_abs_diff;
using testing::random_circuit;

TEST(Statevector, BellPair) {
  Circuit c(2);
  c.add(make_gate(GateKind::H, 0));
  c.add(cnot(0, 1));
  const Statevector s = apply(c, Statevector(2));
  const double r = 1 / std::sqrt(2.0);
  EXPECT_LT(max_abs_diff(s.amplitudes(), {r, 0, 0, r}), 1e-15);
}

TEST(Statevector, LittleEndianBasis) {
  Circuit c(3);
  c.add(make_gate(GateKind::X, 1));
  const Statevector s = apply(c, Statevector(3));
  EXPECT_NEAR(std::abs(s.amplitudes()[2]), 1, 1e-15);
}

TEST(Statevector, RejectsBadInput) {
  EXPECT_THROW(Statevector(2, {1, 0, 0}), std::exception);
  EXPECT_THROW(Statevector(1, {0, 0}), std::exception);
}

TEST(Gates, OpenControlFiresOnZero) {
  Circuit c(2);
  Gate g = make_gate(GateKind::X, 1);
  g.controls.push_back({0, false});
  c.add(g);
  EXPECT_NEAR(std::abs(apply(c, Statevector(2)).amplitudes()[2]), 1, 1e-15);
  EXPECT_NEAR(std::abs(apply(c, Statevector::basis(2, 1)).amplitudes()[1]), 1, 1e-15);
}

TEST(Gates, RotationConventions) {
  const double t = 0.37;
  const DenseOperator rz = circuit_unitary([&] {
    Circuit c(1);
    c.add(make_gate(GateKind::RZ, 0, t));
    return c;
  }());
  EXPECT_NEAR(std::abs(rz(0, 0) - std::exp(cplx(0, -t / 2))), 0, 1e-15);
  EXPECT_NEAR(std::abs(rz(1, 1) - std::exp(cplx(0, t / 2))), 0, 1e-15);
  const DenseOperator ph = circuit_unitary([&] {
    Circuit c(1);
    c.add(make_gate(GateKind::Phase, 0, t));
    return c;
  }());
  EXPECT_NEAR(std::abs(ph(0, 0) - 1.0), 0, 1e-15);
  EXPECT_NEAR(std::abs(ph(1, 1) - std::exp(cplx(0, t))), 0, 1e-15);
}

TEST(Circuit, AdjointInvertsRandomCircuits) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    Circuit c = random_circuit(5, 40, rng);
    const Statevector psi = random_state(5, trial + 1);
    const Statevector back = apply(c.adjoint(), apply(c, psi));
    EXPECT_LT(max_abs_diff(back.amplitudes(), psi.amplitudes()), 1e-12);
  }
}

TEST(Circuit, AppendWithQubitMap) {
  Circuit inner(1);
  inner.add(make_gate(GateKind::X, 0));
  Circuit outer(3);
  outer.append(inner, {2});
  EXPECT_NEAR(std::abs(apply(outer, Statevector(3)).amplitudes()[4]), 1, 1e-15);
  EXPECT_THROW(outer.append(inner, {5}), std::exception);
}

TEST(Circuit, AppendControlledMatchesBlockDiagonal) {
  std::mt19937_64 rng(3);
  const Circuit u = random_circuit(2, 15, rng);
  Circuit c(3);
  c.append_controlled(u, {{2, true}});
  const DenseOperator full = circuit_unitary(c), small = circuit_unitary(u);
  EXPECT_LT(testing::op_diff(full.block(0, 0, 4, 4), DenseOperator::Identity(4, 4)), 1e-12);
  EXPECT_LT(testing::op_diff(full.block(4, 4, 4, 4), small), 1e-12);
}

TEST(Postselect, ProbabilityAndRenormalization) {
  Circuit c(2);
  c.add(make_gate(GateKind::RY, 1, 2 * std::acos(std::sqrt(0.3))));
  c.add(make_gate(GateKind::H, 0));
  const Statevector s = apply(c, Statevector(2));
  EXPECT_NEAR(probability_zero(s, {1}), 0.3, 1e-14);
  const Postselection p = postselect(s, {1});
  EXPECT_NEAR(p.probability, 0.3, 1e-14);
  EXPECT_EQ(p.state.n_qubits(), 1);
  EXPECT_NEAR(p.state.two_norm(), 1, 1e-14);
  const Postselection none = postselect(Statevector::basis(2, 2), {1}, true);
  EXPECT_EQ(none.probability, 0);
  EXPECT_THROW(postselect(Statevector::basis(2, 2), {1}), std::domain_error);
}

TEST(Quantize, RoundsToGridAndRespectsScopes) {
  EXPECT_NEAR(quantize_angle(0.26, 0.1), 0.2, 1e-15);
  EXPECT_NEAR(quantize_angle(0.31, 0.1), 0.4, 1e-15);
  EXPECT_THROW(quantize_angle(0.3, 0), std::invalid_argument);
  Circuit c(1);
  c.add(make_gate(GateKind::RZ, 0, 0.26, Scope::Select));
  c.add(make_gate(GateKind::RZ, 0, 0.26, Scope::Prep));
  const Circuit q = quantize_angles(c, 0.1, static_cast<ScopeMask>(Scope::Select));
  EXPECT_NEAR(q.gates()[0].theta, 0.2, 1e-15);
  EXPECT_NEAR(q.gates()[1].theta, 0.26, 1e-15);
}

TEST(Expectation, MatchesDense) {
  PauliSum op(3);
  op.add_term(0.5, PauliString({{0, Pauli::X}, {2, Pauli::Y}}));
  op.add_term(-1.2, PauliString::single(1, Pauli::Z));
  const Statevector s = random_state(3, 7);
  const Eigen::VectorXcd v = to_eigen(s);
  const cplx ref = v.dot(dense(op) * v);
  EXPECT_NEAR(std::abs(expectation_complex(s, op) - ref), 0, 1e-13);
}

TEST(States, UniformAndRandomAreDeterministic) {
  const Statevector u = uniform_state(3, [](std::uint64_t b) { return b % 2 == 0; });
  EXPECT_NEAR(std::abs(u.amplitudes()[2]), 0.5, 1e-15);
  EXPECT_EQ(std::abs(u.amplitudes()[1]), 0);
  const Statevector a = random_state(4, 42), b = random_state(4, 42), c = random_state(4, 43);
  EXPECT_EQ(max_abs_diff(a.amplitudes(), b.amplitudes()), 0);
  EXPECT_GT(max_abs_diff(a.amplitudes(), c.amplitudes()), 1e-3);
  EXPECT_NEAR(a.two_norm(), 1, 1e-14);
}

TEST(States, JsonRoundTrip) {
  const Statevector s = random_state(3, 9);
  const Statevector back = statevector_from_json(to_json(s));
  EXPECT_LT(max_abs_diff(s.amplitudes(), back.amplitudes()), 1e-15);
  EXPECT_THROW(statevector_from_json("{\"bad\": 1}"), std::exception);
}

}  // namespace
}  // namespace symproj
