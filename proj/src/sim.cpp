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

#include "symproj/sim.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace symproj {

namespace {

using Mat2 = std::array<cplx, 4>;  // row-major

const char* kind_name(GateKind k) {
  switch (k) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::S: return "S";
    case GateKind::Sdg: return "SDG";
    case GateKind::T: return "T";
    case GateKind::Tdg: return "TDG";
    case GateKind::RX: return "RX";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::Phase: return "PHASE";
    case GateKind::GlobalPhase: return "GPHASE";
    case GateKind::RTilde: return "RTILDE";
  }
  return "?";
}

Mat2 matrix_of(const Gate& g) {
  const cplx i(0, 1);
  const double r = 1 / std::numbers::sqrt2;
  switch (g.kind) {
    case GateKind::H: return {r, r, r, -r};
    case GateKind::X: return {0, 1, 1, 0};
    case GateKind::Y: return {0, -i, i, 0};
    case GateKind::Z: return {1, 0, 0, -1};
    case GateKind::S: return {1, 0, 0, i};
    case GateKind::Sdg: return {1, 0, 0, -i};
    case GateKind::T: return {1, 0, 0, std::polar(1.0, std::numbers::pi / 4)};
    case GateKind::Tdg: return {1, 0, 0, std::polar(1.0, -std::numbers::pi / 4)};
    case GateKind::RX: {
      double c = std::cos(g.theta / 2), s = std::sin(g.theta / 2);
      return {c, -i * s, -i * s, c};
    }
    case GateKind::RY: {
      double c = std::cos(g.theta / 2), s = std::sin(g.theta / 2);
      return {c, -s, s, c};
    }
    case GateKind::RZ: return {std::polar(1.0, -g.theta / 2), 0, 0, std::polar(1.0, g.theta / 2)};
    case GateKind::Phase: return {1, 0, 0, std::polar(1.0, g.theta)};
    case GateKind::GlobalPhase: return {std::polar(1.0, g.theta), 0, 0, std::polar(1.0, g.theta)};
    case GateKind::RTilde: {
      double c = std::cos(g.theta), s = std::sin(g.theta);
      return {std::polar(c, g.lambda + g.phi), std::polar(s, g.phi), std::polar(s, g.lambda), -c};
    }
  }
  throw std::logic_error("unknown gate kind");
}

bool is_diagonal(GateKind k) {
  switch (k) {
    case GateKind::Z:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::T:
    case GateKind::Tdg:
    case GateKind::RZ:
    case GateKind::Phase:
      return true;
    default:
      return false;
  }
}

}  // namespace

bool Gate::is_rotation() const {
  switch (kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::Phase:
    case GateKind::GlobalPhase:
    case GateKind::RTilde:
      return true;
    default:
      return false;
  }
}

std::string Gate::str() const {
  std::ostringstream os;
  os.precision(17);
  std::string name = kind_name(kind);
  if (kind == GateKind::X && controls.size() == 1 && controls[0].on_one) name = "CNOT";
  if (kind == GateKind::Z && controls.size() == 1 && controls[0].on_one) name = "CZ";
  if (kind == GateKind::X && controls.size() == 2 && controls[0].on_one && controls[1].on_one) name = "TOFFOLI";
  os << name;
  if (target >= 0) os << ' ' << target;
  for (auto& c : controls) os << ' ' << (c.on_one ? "" : "~") << c.qubit;
  if (is_rotation()) os << ' ' << theta;
  if (kind == GateKind::RTilde) os << ' ' << phi << ' ' << lambda;
  return os.str();
}

Gate make_gate(GateKind k, int target, double theta, Scope scope) {
  Gate g;
  g.kind = k;
  g.target = target;
  g.theta = theta;
  g.scope = scope;
  return g;
}

Gate cnot(int control, int target) {
  Gate g = make_gate(GateKind::X, target);
  g.controls = {{control, true}};
  return g;
}

Gate cz(int control, int target) {
  Gate g = make_gate(GateKind::Z, target);
  g.controls = {{control, true}};
  return g;
}

Gate toffoli(int c0, int c1, int target) {
  Gate g = make_gate(GateKind::X, target);
  g.controls = {{c0, true}, {c1, true}};
  return g;
}

Gate global_phase(double theta, Scope scope) { return make_gate(GateKind::GlobalPhase, -1, theta, scope); }

Gate rtilde(int target, double theta, double phi, double lambda, Scope scope) {
  Gate g = make_gate(GateKind::RTilde, target, theta, scope);
  g.phi = phi;
  g.lambda = lambda;
  return g;
}

Gate inverse(const Gate& g) {
  Gate r = g;
  switch (g.kind) {
    case GateKind::S: r.kind = GateKind::Sdg; break;
    case GateKind::Sdg: r.kind = GateKind::S; break;
    case GateKind::T: r.kind = GateKind::Tdg; break;
    case GateKind::Tdg: r.kind = GateKind::T; break;
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::Phase:
    case GateKind::GlobalPhase:
      r.theta = -g.theta;
      break;
    case GateKind::RTilde:
      r.phi = -g.lambda;
      r.lambda = -g.phi;
      break;
    default:
      break;
  }
  return r;
}

const Register* Circuit::find_register(const std::string& name) const {
  for (auto& r : registers_)
    if (r.name == name) return &r;
  return nullptr;
}

void Circuit::add_register(std::string name, int offset, int size) {
  if (offset < 0 || size < 0 || offset + size > width_) throw std::invalid_argument("register outside circuit");
  registers_.push_back({std::move(name), offset, size});
}

void Circuit::add(Gate g) {
  if (g.kind == GateKind::GlobalPhase) {
    g.target = -1;
  } else if (g.target < 0 || g.target >= width_) {
    throw std::out_of_range("gate target " + std::to_string(g.target) + " outside width " + std::to_string(width_));
  }
  for (auto& c : g.controls) {
    if (c.qubit < 0 || c.qubit >= width_) throw std::out_of_range("control index outside circuit");
    if (c.qubit == g.target) throw std::invalid_argument("gate target is also a control");
  }
  gates_.push_back(std::move(g));
}

void Circuit::append(const Circuit& other, const std::vector<int>& qubit_map) {
  if (static_cast<int>(qubit_map.size()) < other.width()) throw std::invalid_argument("qubit map too short");
  for (Gate g : other.gates_) {
    if (g.target >= 0) g.target = qubit_map[g.target];
    for (auto& c : g.controls) c.qubit = qubit_map[c.qubit];
    add(std::move(g));
  }
}

void Circuit::append(const Circuit& other) {
  if (other.width() > width_) throw std::invalid_argument("appended circuit is wider");
  for (const Gate& g : other.gates_) add(g);
}

void Circuit::append_controlled(const Circuit& other, const std::vector<Control>& extra) {
  if (other.width() > width_) throw std::invalid_argument("appended circuit is wider");
  for (Gate g : other.gates_) {
    g.controls.insert(g.controls.begin(), extra.begin(), extra.end());
    add(std::move(g));
  }
}

Circuit Circuit::adjoint() const {
  Circuit r(width_);
  r.registers_ = registers_;
  r.gates_.reserve(gates_.size());
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) r.gates_.push_back(inverse(*it));
  return r;
}

std::string dump(const Circuit& c) {
  std::string s;
  for (auto& g : c.gates()) {
    s += g.str();
    s += '\n';
  }
  return s;
}

Statevector::Statevector(int n) : n_(n), amps_(std::size_t{1} << n, 0.0) { amps_[0] = 1.0; }

Statevector::Statevector(int n, std::vector<cplx> amps) : n_(n), amps_(std::move(amps)) {
  if (amps_.size() != (std::size_t{1} << n)) throw std::invalid_argument("amplitude count is not 2^n");
  double nrm = two_norm();
  if (nrm == 0) throw std::invalid_argument("zero state vector");
  for (auto& a : amps_) a /= nrm;
}

Statevector Statevector::basis(int n, std::uint64_t index) {
  Statevector s(n);
  s.amps_[0] = 0;
  s.amps_.at(index) = 1;
  return s;
}

Statevector uniform_state(int n, const std::function<bool(std::uint64_t)>& keep) {
  std::vector<cplx> a(std::size_t{1} << n, 0.0);
  for (std::uint64_t b = 0; b < a.size(); ++b)
    if (!keep || keep(b)) a[b] = 1.0;
  return Statevector(n, std::move(a));
}

Statevector random_state(int n, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  auto unif = [&] { return (static_cast<double>(eng() >> 11) + 0.5) * 0x1.0p-53; };
  std::vector<cplx> a(std::size_t{1} << n);
  for (auto& x : a) {
    const double r = std::sqrt(-2 * std::log(unif())), t = 2 * std::numbers::pi * unif();
    x = cplx(r * std::cos(t), r * std::sin(t));
  }
  return Statevector(n, std::move(a));
}

double Statevector::two_norm() const {
  double t = 0;
  for (auto& a : amps_) t += std::norm(a);
  return std::sqrt(t);
}

Statevector Statevector::extended(int extra) const {
  Statevector r(n_ + extra);
  std::fill(r.amps_.begin(), r.amps_.end(), cplx(0));
  std::copy(amps_.begin(), amps_.end(), r.amps_.begin());
  r.norm_ = norm_;
  return r;
}

void apply_gate(const Gate& g, std::vector<cplx>& amps) {
  std::uint64_t cmask = 0, cval = 0;
  for (auto& c : g.controls) {
    cmask |= std::uint64_t{1} << c.qubit;
    if (c.on_one) cval |= std::uint64_t{1} << c.qubit;
  }
  const std::uint64_t dim = amps.size();
  if (g.kind == GateKind::GlobalPhase) {
    const cplx ph = std::polar(1.0, g.theta);
    for (std::uint64_t i = 0; i < dim; ++i)
      if ((i & cmask) == cval) amps[i] *= ph;
    return;
  }
  const Mat2 m = matrix_of(g);
  const std::uint64_t t = std::uint64_t{1} << g.target;
  if (is_diagonal(g.kind)) {
    for (std::uint64_t i = 0; i < dim; ++i) {
      if ((i & cmask) != cval) continue;
      amps[i] *= (i & t) ? m[3] : m[0];
    }
    return;
  }
  for (std::uint64_t i = 0; i < dim; ++i) {
    if ((i & t) || (i & cmask) != cval) continue;
    const cplx a0 = amps[i], a1 = amps[i | t];
    amps[i] = m[0] * a0 + m[1] * a1;
    amps[i | t] = m[2] * a0 + m[3] * a1;
  }
}

Statevector apply(const Circuit& c, Statevector s) {
  if (c.width() != s.n_qubits())
    throw std::invalid_argument("circuit width " + std::to_string(c.width()) + " != state qubits " +
                                std::to_string(s.n_qubits()));
  for (auto& g : c.gates()) apply_gate(g, s.mutable_amplitudes());
  return s;
}

namespace {

std::uint64_t mask_of(const std::vector<int>& qubits, int n) {
  std::uint64_t m = 0;
  for (int q : qubits) {
    if (q < 0 || q >= n) throw std::out_of_range("postselected qubit outside state");
    if (m & (std::uint64_t{1} << q)) throw std::invalid_argument("postselected qubits must be distinct");
    m |= std::uint64_t{1} << q;
  }
  return m;
}

}  // namespace

double probability_zero(const Statevector& s, const std::vector<int>& qubits) {
  const std::uint64_t m = mask_of(qubits, s.n_qubits());
  double p = 0;
  const auto& a = s.amplitudes();
  for (std::uint64_t i = 0; i < a.size(); ++i)
    if ((i & m) == 0) p += std::norm(a[i]);
  return p;
}

Postselection postselect(const Statevector& s, const std::vector<int>& qubits, bool allow_zero) {
  const int n = s.n_qubits();
  const std::uint64_t m = mask_of(qubits, n);
  const int keep = n - static_cast<int>(qubits.size());
  std::vector<int> kept;
  for (int q = 0; q < n; ++q)
    if (!(m & (std::uint64_t{1} << q))) kept.push_back(q);
  std::vector<cplx> out(std::size_t{1} << keep, 0.0);
  const auto& a = s.amplitudes();
  double p = 0;
  for (std::uint64_t j = 0; j < out.size(); ++j) {
    std::uint64_t i = 0;
    for (int b = 0; b < keep; ++b)
      if (j >> b & 1) i |= std::uint64_t{1} << kept[b];
    out[j] = a[i];
    p += std::norm(a[i]);
  }
  if (p <= kZeroProbability * s.two_norm() * s.two_norm()) {
    if (!allow_zero) throw std::domain_error("post-selection outcome has zero probability");
    return {Statevector(), 0.0};
  }
  Statevector r(keep, std::move(out));
  r.set_norm(s.norm() * p);
  return {std::move(r), p};
}

double quantize_angle(double phi, double eps) {
  if (!(eps > 0)) throw std::invalid_argument("quantization step must be positive");
  return 2 * eps * std::floor(phi / (2 * eps) + 0.5);
}

Circuit quantize_angles(const Circuit& c, double eps, ScopeMask scopes) {
  Circuit r = c;
  for (auto& g : r.mutable_gates()) {
    if (!g.is_rotation() || !(static_cast<ScopeMask>(g.scope) & scopes)) continue;
    g.theta = quantize_angle(g.theta, eps);
    if (g.kind == GateKind::RTilde) {
      g.phi = quantize_angle(g.phi, eps);
      g.lambda = quantize_angle(g.lambda, eps);
    }
  }
  return r;
}

void apply_pauli(const PauliString& p, const std::vector<cplx>& in, std::vector<cplx>& out) {
  const std::uint64_t x = p.x_mask(), z = p.z_mask();
  static const cplx ipow[4] = {1.0, cplx(0, 1), -1.0, cplx(0, -1)};
  const cplx ph = ipow[p.y_count() % 4];
  out.assign(in.size(), 0.0);
  for (std::uint64_t b = 0; b < in.size(); ++b) {
    const double sign = (std::popcount(b & z) & 1) ? -1.0 : 1.0;
    out[b ^ x] = ph * sign * in[b];
  }
}

cplx expectation_complex(const Statevector& s, const PauliSum& op) {
  if (op.n_qubits() != s.n_qubits())
    throw std::invalid_argument("operator acts on " + std::to_string(op.n_qubits()) + " qubits, state has " +
                                std::to_string(s.n_qubits()));
  const auto& a = s.amplitudes();
  std::vector<cplx> tmp;
  cplx total = 0;
  for (auto& [c, p] : op.terms()) {
    apply_pauli(p, a, tmp);
    cplx e = 0;
    for (std::size_t i = 0; i < a.size(); ++i) e += std::conj(a[i]) * tmp[i];
    total += c * e;
  }
  return total;
}

double expectation(const Statevector& s, const PauliSum& op) { return expectation_complex(s, op).real(); }

std::string to_json(const Statevector& s) {
  nlohmann::json j;
  j["n_qubits"] = s.n_qubits();
  j["basis_order"] = "little-endian";
  auto& arr = j["amplitudes"] = nlohmann::json::array();
  for (auto& a : s.amplitudes()) arr.push_back({a.real(), a.imag()});
  return j.dump();
}

Statevector statevector_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  int n = j.at("n_qubits").get<int>();
  if (n < 0 || n > 30) throw std::invalid_argument("n_qubits out of range");
  std::vector<cplx> amps;
  for (auto& a : j.at("amplitudes")) {
    if (!a.is_array() || a.size() != 2) throw std::invalid_argument("amplitude must be [re, im]");
    amps.emplace_back(a[0].get<double>(), a[1].get<double>());
  }
  return Statevector(n, std::move(amps));
}

}  // namespace symproj
