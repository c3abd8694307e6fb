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
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace symproj {

using cplx = std::complex<double>;

enum class Pauli : std::uint8_t { X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);

/// A tensor product of single-qubit Paulis. Factors are kept sorted by qubit;
/// the empty string is the identity.
class PauliString {
 public:
  PauliString() = default;
  /// Throws std::invalid_argument if a qubit appears twice.
  explicit PauliString(std::vector<std::pair<int, Pauli>> ops);

  static PauliString single(int qubit, Pauli p) { return PauliString({{qubit, p}}); }

  const std::vector<std::pair<int, Pauli>>& ops() const { return ops_; }
  bool is_identity() const { return ops_.empty(); }
  int max_qubit() const { return ops_.empty() ? -1 : ops_.back().first; }

  // Bit masks in the X/Z symplectic form: P = i^{n_y} X^x Z^z.
  std::uint64_t x_mask() const;
  std::uint64_t z_mask() const;
  int y_count() const;

  std::string str() const;

  friend bool operator==(const PauliString& a, const PauliString& b) { return a.ops_ == b.ops_; }
  friend bool operator<(const PauliString& a, const PauliString& b) { return a.ops_ < b.ops_; }

 private:
  std::vector<std::pair<int, Pauli>> ops_;
};

/// Product a*b as (phase, string).
std::pair<cplx, PauliString> multiply(const PauliString& a, const PauliString& b);

/// Weighted sum of Pauli strings on a fixed register.
class PauliSum {
 public:
  static constexpr double kPruneTol = 1e-14;

  PauliSum() = default;
  explicit PauliSum(int n_qubits) : n_qubits_(n_qubits) {}

  static PauliSum identity(int n_qubits, cplx c = 1.0);

  /// Adds c*P, merging with an existing equal string.
  void add_term(cplx c, const PauliString& p);

  int n_qubits() const { return n_qubits_; }
  /// Terms in canonical order.
  const std::vector<std::pair<cplx, PauliString>>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Sum of |coefficient|, the LCU normalization.
  double one_norm() const;
  bool is_hermitian(double tol = 1e-12) const;
  PauliSum adjoint() const;

  friend PauliSum operator+(const PauliSum& a, const PauliSum& b);
  friend PauliSum operator-(const PauliSum& a, const PauliSum& b);
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);
  friend PauliSum operator*(cplx s, const PauliSum& a);

 private:
  void prune();

  int n_qubits_ = 0;
  std::vector<std::pair<cplx, PauliString>> terms_;
};

PauliSum jw_number_operator(int n_so);
PauliSum jw_sz_operator(int n_so);
PauliSum jw_s2_operator(int n_so);

/// Jordan-Wigner images of a^dagger_j and a_j (|1> = occupied).
PauliSum jw_creation(int n_so, int j);
PauliSum jw_annihilation(int n_so, int j);

/// Text form: one term per line, "<re> <im> <P><idx> ...", identity as "I".
std::string to_text(const PauliSum& op);
PauliSum parse_pauli_sum(std::istream& in, int n_qubits = -1);
PauliSum parse_pauli_sum(const std::string& text, int n_qubits = -1);

}  // namespace symproj
