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

#include "symproj/amp.hpp"
#include "symproj/cost.hpp"
#include "symproj/gqsp.hpp"
#include "symproj/gqsvt.hpp"
#include "symproj/oracle.hpp"
#include "test_util.hpp"

namespace symproj {
namespace {

using testing::max_abs_diff;

// Runs c and lower(c) on the same random input; the lowered circuit must act
// identically (global phase included) and return its work qubits to |0>.
double lowering_error(const Circuit& c, std::uint64_t seed, bool share = false) {
  const Circuit l = lower(c, share);
  const Statevector psi = random_state(c.width(), seed);
  const Statevector ref = apply(c, psi);
  const Statevector out = apply(l, psi.extended(l.width() - c.width()));
  return max_abs_diff(out.amplitudes(), ref.amplitudes());
}

TEST(Lowering, RandomCircuitsAreExact) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    const Circuit c = testing::random_circuit(5, 40, rng);
    EXPECT_LT(lowering_error(c, trial + 1), 1e-12) << dump(c);
    EXPECT_LT(lowering_error(c, trial + 1, true), 1e-12);
  }
}

TEST(Lowering, ProjectorCircuitsAreExact) {
  EXPECT_LT(lowering_error(build_pms_lcu(4, HalfInt{0}, 3).circuit, 1), 1e-12);
  EXPECT_LT(lowering_error(build_psms_lcu(4, HalfInt{0}, HalfInt{0}, 3, 2).circuit, 2), 1e-12);
  EXPECT_LT(lowering_error(build_pn_gqsp(4, 2, 5).circuit, 3), 1e-11);
  EXPECT_LT(lowering_error(build_projector_gqsvt(SymmetryOp::Sz, 4, 0).block.circuit, 4), 1e-10);
}

TEST(Lowering, OutputIsInTargetGateSet) {
  std::mt19937_64 rng(9);
  const Circuit l = lower(testing::random_circuit(4, 30, rng));
  for (const Gate& g : l.gates()) {
    if (g.controls.size() == 2) EXPECT_EQ(g.kind, GateKind::X);
    EXPECT_LE(g.controls.size(), 2u);
    if (g.controls.size() == 1) {
      EXPECT_TRUE(g.kind == GateKind::X || g.kind == GateKind::Y || g.kind == GateKind::Z);
    }
    EXPECT_NE(g.kind, GateKind::RTilde);
  }
  EXPECT_NO_THROW(census(l));
}

TEST(Census, ToffoliAndSingleGates) {
  Circuit c(3);
  c.add(toffoli(0, 1, 2));
  const GateCounts g = count_gates(c);
  EXPECT_EQ(g.toffoli, 1);
  EXPECT_EQ(g.cnot_total(), 6);
  EXPECT_EQ(g.t_total(0.1), 7);
  Circuit d(2);
  d.add(cnot(0, 1));
  d.add(make_gate(GateKind::T, 0));
  d.add(make_gate(GateKind::RZ, 1, 0.3));
  d.add(make_gate(GateKind::H, 1));
  const GateCounts h = census(lower(d));
  EXPECT_EQ(h.cnot, 1);
  EXPECT_EQ(h.t, 1);
  EXPECT_EQ(h.n_rot(), 1);
  EXPECT_EQ(h.t_total(std::pow(2.0, -10)), 1 + 30);
  Circuit raw(3);
  raw.add(toffoli(0, 1, 2));
  Gate ccc = make_gate(GateKind::X, 0);
  ccc.controls = {{1, true}, {2, true}};
  raw.add(ccc);
  raw.add(make_gate(GateKind::RTilde, 0));
  EXPECT_THROW(census(raw), std::logic_error);
}

TEST(Census, RepeatAndAccumulate) {
  GateCounts a;
  a.cnot = 2;
  a.rotations = {0.1};
  a.ancilla = 3;
  GateCounts b = a.repeated(4);
  EXPECT_EQ(b.cnot, 8);
  EXPECT_EQ(b.n_rot(), 4);
  EXPECT_EQ(b.ancilla, 3);
  b += a;
  EXPECT_EQ(b.cnot, 10);
}

TEST(Synthesis, RotationCosts) {
  EXPECT_EQ(t_cost_rotation(std::pow(2.0, -10)), 30);
  EXPECT_EQ(aggregate_t(100, 0.1), 2990);
  EXPECT_THROW(t_cost_rotation(0), std::invalid_argument);
  EXPECT_THROW(aggregate_t(0, 0.1), std::invalid_argument);
}

TEST(Models, QromAndScaffold) {
  const GateCounts q = qrom_prep_model(16, std::pow(2.0, -9));
  EXPECT_EQ(q.ancilla, 27);
  EXPECT_EQ(q.t, 4 * 16 + 9);
  EXPECT_EQ(q.cnot, 16 * 9);
  EXPECT_EQ(select_scaffold_model(4).t, 12);
  EXPECT_EQ(select_scaffold_model(1).t, 0);
  EXPECT_THROW(qrom_prep_model(0, 0.1), std::invalid_argument);
}

TEST(Enums, ParseAndPrint) {
  for (auto m : {Method::Lcu, Method::Gqsp, Method::Gqsvt}) EXPECT_EQ(parse_method(to_string(m)), m);
  for (auto p : {Projector::N, Projector::Sz, Projector::S2, Projector::SMs}) EXPECT_EQ(parse_projector(to_string(p)), p);
  EXPECT_THROW(parse_method("qpe"), std::invalid_argument);
  EXPECT_THROW(parse_projector("sx"), std::invalid_argument);
}

TEST(Counts, BlockAncillaAndSupportedPairs) {
  const BlockEncoding be = build_pms_lcu(8, HalfInt{0}, 5);
  const GateCounts g = count_gates(be);
  EXPECT_EQ(g.ancilla, be.circuit.width() - 8);
  EXPECT_GT(g.n_rot(), 0);
  EXPECT_THROW(scaling_table(Projector::S2, Method::Lcu, {8}, 0.1), std::invalid_argument);
  const ScalingRow r = projector_counts(Projector::Sz, Method::Lcu, 8, 0.1);
  EXPECT_EQ(r.n_so, 8);
  EXPECT_EQ(r.cnot, g.cnot_total());
}

TEST(Fit, RecoversSyntheticPowerLaw) {
  std::vector<int> n = {8, 16, 32, 64};
  std::vector<double> y;
  for (int x : n) y.push_back(3.0 * x * x * std::log2(x));
  const ScalingFit f = fit_scaling(n, y, 2);
  EXPECT_NEAR(f.b, 2, 1e-12);
  EXPECT_NEAR(f.a, 3, 1e-10);
  EXPECT_NEAR(f.a_nominal, 3, 1e-10);
  const ScalingFit g = fit_scaling(n, y, 3);
  EXPECT_LT(g.a_nominal, 3);
  EXPECT_THROW(fit_scaling({8}, {1.0}, 2), std::invalid_argument);
}

// Fraction of the M = S subspace of n spin-1/2 particles with total spin S,
// from the dense spin operators.
double spin_fraction(int n, HalfInt s) {
  PauliSum sx(n), sy(n), sz(n);
  for (int q = 0; q < n; ++q) {
    sx.add_term(0.5, PauliString::single(q, Pauli::X));
    sy.add_term(0.5, PauliString::single(q, Pauli::Y));
    sz.add_term(0.5, PauliString::single(q, Pauli::Z));
  }
  const DenseOperator s2 = dense(sx * sx + sy * sy + sz * sz);
  const DenseOperator pm = exact_projector(dense(sz), s.value());
  const DenseOperator ps = exact_projector(s2, s.value() * (s.value() + 1));
  const DenseOperator both = ps * pm;
  return both.trace().real() / pm.trace().real();
}

TEST(SectorOverlap, MatchesSpinCounting) {
  EXPECT_NEAR(sector_overlap(6, HalfInt{0}), spin_fraction(6, HalfInt{0}), 1e-9);
  EXPECT_NEAR(sector_overlap(6, HalfInt{2}), spin_fraction(6, HalfInt{2}), 1e-9);
  EXPECT_NEAR(sector_overlap(5, HalfInt{1}), spin_fraction(5, HalfInt{1}), 1e-9);
  EXPECT_NEAR(sector_overlap(7, HalfInt{3}), spin_fraction(7, HalfInt{3}), 1e-9);
  EXPECT_NEAR(sector_overlap(54, HalfInt{0}), 0.036, 1e-3);
  EXPECT_THROW(sector_overlap(5, HalfInt{0}), std::invalid_argument);
}

TEST(Femoco, EstimateStructure) {
  const FemocoEstimate e = femoco_estimate(54, 54, HalfInt{0}, HalfInt{0}, 1e-2);
  EXPECT_EQ(e.n_so, 108);
  EXPECT_EQ(e.queries, 2 * e.m + 1);
  EXPECT_EQ(e.queries, plan(e.p).queries);
  EXPECT_EQ(e.total_t, e.queries * e.projector_t);
  EXPECT_EQ(e.n_phi, 109);
  EXPECT_THROW(femoco_estimate(4, 9, HalfInt{0}, HalfInt{0}, 1e-2), std::invalid_argument);
}

}  // namespace
}  // namespace symproj
