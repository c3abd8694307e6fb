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
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "symproj/qop.hpp"

namespace symproj {

enum class GateKind : std::uint8_t {
  H, X, Y, Z, S, Sdg, T, Tdg,
  RX, RY, RZ,
  Phase,        // diag(1, e^{i theta})
  GlobalPhase,  // e^{i theta}; no target
  RTilde,       // GQSP rotation with (theta, phi, lambda)
};

/// Which sweep a rotation belongs to when angles are quantized.
enum class Scope : std::uint8_t {
  None = 0,
  Select = 1,      // SELECT / signal-operator rotations
  Prep = 2,        // PREP rotations
  Processing = 4,  // GQSP / GQSVT processing rotations
};
using ScopeMask = std::uint8_t;
inline constexpr ScopeMask kAllScopes = 7;

struct Control {
  int qubit = 0;
  bool on_one = true;  // false = open control (fires on |0>)
  friend bool operator==(const Control&, const Control&) = default;
};

struct Gate {
  GateKind kind = GateKind::X;
  int target = -1;  // -1 only for GlobalPhase
  std::vector<Control> controls;
  double theta = 0, phi = 0, lambda = 0;
  Scope scope = Scope::None;

  bool is_rotation() const;
  /// KIND target [controls...] [angle...]; open controls printed as ~q.
  std::string str() const;
};

Gate make_gate(GateKind k, int target, double theta = 0, Scope scope = Scope::None);
Gate cnot(int control, int target);
Gate cz(int control, int target);
Gate toffoli(int c0, int c1, int target);
Gate global_phase(double theta, Scope scope = Scope::None);
Gate rtilde(int target, double theta, double phi, double lambda, Scope scope = Scope::Processing);

/// Adjoint of a single gate.
Gate inverse(const Gate& g);

struct Register {
  std::string name;
  int offset = 0;
  int size = 0;
};

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int width) : width_(width) {}

  int width() const { return width_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const std::vector<Register>& registers() const { return registers_; }
  const Register* find_register(const std::string& name) const;
  void add_register(std::string name, int offset, int size);

  /// Throws on out-of-range or target-in-controls.
  void add(Gate g);
  /// Appends `other`, mapping its qubit q to qubit_map[q].
  void append(const Circuit& other, const std::vector<int>& qubit_map);
  void append(const Circuit& other);
  /// Appends `other` with every gate additionally controlled by `extra`.
  void append_controlled(const Circuit& other, const std::vector<Control>& extra);

  Circuit adjoint() const;
  std::size_t size() const { return gates_.size(); }

  std::vector<Gate>& mutable_gates() { return gates_; }

 private:
  int width_ = 0;
  std::vector<Register> registers_;
  std::vector<Gate> gates_;
};

std::string dump(const Circuit& c);

class Statevector {
 public:
  Statevector() = default;
  /// |0...0>.
  explicit Statevector(int n);
  /// Normalizes the given amplitudes; throws on zero vector or wrong length.
  Statevector(int n, std::vector<cplx> amps);

  static Statevector basis(int n, std::uint64_t index);

  int n_qubits() const { return n_; }
  const std::vector<cplx>& amplitudes() const { return amps_; }
  std::vector<cplx>& mutable_amplitudes() { return amps_; }
  /// Accumulated post-selection probability.
  double norm() const { return norm_; }
  void set_norm(double v) { norm_ = v; }
  double two_norm() const;

  /// Tensor product with |0> on `extra` new high qubits.
  Statevector extended(int extra) const;

 private:
  int n_ = 0;
  std::vector<cplx> amps_;
  double norm_ = 1.0;
};

void apply_gate(const Gate& g, std::vector<cplx>& amps);
Statevector apply(const Circuit& c, Statevector s);

struct Postselection {
  Statevector state;   // renormalized, on the remaining qubits
  double probability;  // 0 means the state is undefined
};

/// Outcomes below this fraction of the squared norm are treated as exact zeros
/// (roundoff of an orthogonal projection).
inline constexpr double kZeroProbability = 1e-24;

/// Projects `qubits` onto all-zero, drops them and renormalizes. Remaining
/// qubits keep their relative order. Throws std::domain_error when p == 0
/// unless allow_zero is set, in which case the returned state is empty.
Postselection postselect(const Statevector& s, const std::vector<int>& qubits, bool allow_zero = false);

/// Probability that `qubits` are all zero, without collapsing.
double probability_zero(const Statevector& s, const std::vector<int>& qubits);

double quantize_angle(double phi, double eps);
Circuit quantize_angles(const Circuit& c, double eps, ScopeMask scopes = kAllScopes);

/// P|psi> for a Pauli string on the low qubits.
void apply_pauli(const PauliString& p, const std::vector<cplx>& in, std::vector<cplx>& out);
cplx expectation_complex(const Statevector& s, const PauliSum& op);
double expectation(const Statevector& s, const PauliSum& op);

/// Equal amplitudes on the basis states accepted by `keep` (all if empty).
Statevector uniform_state(int n, const std::function<bool(std::uint64_t)>& keep = {});

/// Normalized complex Gaussian amplitudes. Uses std::mt19937_64 with explicit
/// 53-bit uniforms and Box-Muller so the output is identical across platforms.
Statevector random_state(int n, std::uint64_t seed);

std::string to_json(const Statevector& s);
Statevector statevector_from_json(const std::string& text);

}  // namespace symproj
