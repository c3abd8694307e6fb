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

#include <string>
#include <vector>

#include "symproj/qop.hpp"
#include "symproj/quad.hpp"
#include "symproj/sim.hpp"

namespace symproj {

/// A circuit whose top-left block (flags in and out |0>) equals A / alpha.
/// The system register occupies qubits [0, n_system).
struct BlockEncoding {
  Circuit circuit;
  double alpha = 1.0;
  int n_system = 0;
  std::vector<int> flags;
  bool approximate = false;

  int ancilla_count() const { return static_cast<int>(flags.size()); }
};

struct LCUTerm {
  cplx weight;
  Circuit unitary;  // acts on the system register only
};

/// Ancilla-extended simulation followed by post-selection of the flags.
Postselection run_block(const BlockEncoding& be, const Statevector& psi, bool allow_zero = false);

// Exponential building blocks. All rotations are tagged Scope::Select.
Circuit exp_n_circuit(double phi, int n_so, int n_elec);    // e^{i phi (N_elec - N)}
Circuit exp_sz_circuit(double phi, int n_so, HalfInt m_s);  // e^{i phi (M_S - Sz)}
Circuit exp_sy_circuit(double beta, int n_so);              // e^{-i beta Sy}
/// e^{-i a Sz} e^{-i b Sy} e^{-i g Sz}
Circuit rotation_circuit(double alpha_e, double beta_e, double gamma_e, int n_so);

int index_qubits(std::size_t n_terms);

/// Maps |0..0> to sum_k sqrt(w_k / sum w)|k>. Rotations tagged Scope::Prep.
Circuit prep_binary_tree(const std::vector<double>& weights);

/// |k>|psi> -> |k> U_k |psi> (times the phase of w_k). Index register sits
/// at [n_system, n_system + n_index).
Circuit build_select(const std::vector<LCUTerm>& terms, int n_system, int n_index);

/// PREP, SELECT, PREP^dagger with alpha = sum |w_k|.
BlockEncoding build_lcu(const std::vector<LCUTerm>& terms, int n_system);

std::vector<LCUTerm> pauli_terms(const PauliSum& op);

/// Terms w_k P_k of a PauliSum as an LCU.
BlockEncoding pauli_lcu(const PauliSum& op);

/// Blocks applied in order on a shared system register with disjoint flags.
BlockEncoding chain(const std::vector<const BlockEncoding*>& parts);

/// Node count for which the M_S projector is exact on the whole Fock space.
int exact_nodes_sz(int n_so, HalfInt m_s);

BlockEncoding build_pn_lcu(int n_so, int n_elec, int n_phi);
BlockEncoding build_pms_lcu(int n_so, HalfInt m_s, int n_phi);
/// Beta integral only; the input must already lie in the M_S = m_s sector.
BlockEncoding build_ps_lcu(int n_so, HalfInt s, HalfInt m_s, int n_beta);
/// P_MS P_S P_MS.
BlockEncoding build_psms_lcu(int n_so, HalfInt s, HalfInt m_s, int n_phi, int n_beta);
/// Single LCU over the Euler grid.
BlockEncoding build_psms_lcu_full(int n_so, HalfInt s, HalfInt m_s, int n_alpha, int n_beta, int n_gamma);

}  // namespace symproj
