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

#include "symproj/qop.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace symproj {

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::X:
      return 'X';
    case Pauli::Y:
      return 'Y';
    case Pauli::Z:
      return 'Z';
  }
  return '?';
}

PauliString::PauliString(std::vector<std::pair<int, Pauli>> ops) : ops_(std::move(ops)) {
  std::sort(ops_.begin(), ops_.end());
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    if (ops_[i].first < 0) throw std::invalid_argument("negative qubit index in Pauli string");
    if (i > 0 && ops_[i].first == ops_[i - 1].first)
      throw std::invalid_argument("qubit " + std::to_string(ops_[i].first) + " appears twice in Pauli string");
  }
}

std::uint64_t PauliString::x_mask() const {
  std::uint64_t m = 0;
  for (auto [q, p] : ops_) {
    if (q >= 64) throw std::out_of_range("Pauli string too wide for bit masks");
    if (p != Pauli::Z) m |= std::uint64_t{1} << q;
  }
  return m;
}

std::uint64_t PauliString::z_mask() const {
  std::uint64_t m = 0;
  for (auto [q, p] : ops_) {
    if (q >= 64) throw std::out_of_range("Pauli string too wide for bit masks");
    if (p != Pauli::X) m |= std::uint64_t{1} << q;
  }
  return m;
}

int PauliString::y_count() const {
  return static_cast<int>(std::count_if(ops_.begin(), ops_.end(), [](auto& o) { return o.second == Pauli::Y; }));
}

std::string PauliString::str() const {
  if (ops_.empty()) return "I";
  std::string s;
  for (auto [q, p] : ops_) {
    if (!s.empty()) s += ' ';
    s += pauli_char(p);
    s += std::to_string(q);
  }
  return s;
}

namespace {

// Single-qubit product a*b = phase * c.
std::pair<cplx, int> mul1(Pauli a, Pauli b) {
  const cplx i(0, 1);
  if (a == b) return {1.0, 0};
  int ia = static_cast<int>(a), ib = static_cast<int>(b);
  int c = 6 - ia - ib;
  // XY = iZ, YZ = iX, ZX = iY; reversed order gives -i.
  bool cyclic = (ib - ia + 3) % 3 == 1;
  return {cyclic ? i : -i, c};
}

}  // namespace

std::pair<cplx, PauliString> multiply(const PauliString& a, const PauliString& b) {
  cplx phase = 1.0;
  std::vector<std::pair<int, Pauli>> out;
  out.reserve(a.ops().size() + b.ops().size());
  auto ia = a.ops().begin(), ib = b.ops().begin();
  while (ia != a.ops().end() || ib != b.ops().end()) {
    if (ib == b.ops().end() || (ia != a.ops().end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.ops().end() || ib->first < ia->first) {
      out.push_back(*ib++);
    } else {
      auto [ph, c] = mul1(ia->second, ib->second);
      phase *= ph;
      if (c != 0) out.emplace_back(ia->first, static_cast<Pauli>(c));
      ++ia;
      ++ib;
    }
  }
  return {phase, PauliString(std::move(out))};
}

PauliSum PauliSum::identity(int n_qubits, cplx c) {
  PauliSum s(n_qubits);
  s.add_term(c, PauliString());
  return s;
}

void PauliSum::add_term(cplx c, const PauliString& p) {
  if (p.max_qubit() >= n_qubits_)
    throw std::invalid_argument("Pauli index " + std::to_string(p.max_qubit()) + " outside register of " +
                                std::to_string(n_qubits_) + " qubits");
  auto it = std::lower_bound(terms_.begin(), terms_.end(), p,
                             [](const std::pair<cplx, PauliString>& t, const PauliString& s) { return t.second < s; });
  if (it != terms_.end() && it->second == p) {
    it->first += c;
    if (std::abs(it->first) <= kPruneTol) terms_.erase(it);
  } else if (std::abs(c) > kPruneTol) {
    terms_.insert(it, {c, p});
  }
}

void PauliSum::prune() {
  std::erase_if(terms_, [](auto& t) { return std::abs(t.first) <= kPruneTol; });
  for (auto& t : terms_) {
    if (std::abs(t.first.imag()) <= kPruneTol) t.first.imag(0.0);
    if (std::abs(t.first.real()) <= kPruneTol) t.first.real(0.0);
  }
}

double PauliSum::one_norm() const {
  double s = 0;
  for (auto& t : terms_) s += std::abs(t.first);
  return s;
}

bool PauliSum::is_hermitian(double tol) const {
  return std::all_of(terms_.begin(), terms_.end(), [tol](auto& t) { return std::abs(t.first.imag()) <= tol; });
}

PauliSum PauliSum::adjoint() const {
  PauliSum r = *this;
  for (auto& t : r.terms_) t.first = std::conj(t.first);
  return r;
}

namespace {

PauliSum from_map(int n, const std::map<PauliString, cplx>& m) {
  PauliSum s(n);
  for (auto& [p, c] : m) s.add_term(c, p);
  return s;
}

void check_sizes(const PauliSum& a, const PauliSum& b) {
  if (a.n_qubits() != b.n_qubits())
    throw std::invalid_argument("PauliSum size mismatch: " + std::to_string(a.n_qubits()) + " vs " +
                                std::to_string(b.n_qubits()));
}

}  // namespace

PauliSum operator+(const PauliSum& a, const PauliSum& b) {
  check_sizes(a, b);
  PauliSum r = a;
  for (auto& [c, p] : b.terms_) r.add_term(c, p);
  r.prune();
  return r;
}

PauliSum operator-(const PauliSum& a, const PauliSum& b) { return a + cplx(-1.0) * b; }

PauliSum operator*(cplx s, const PauliSum& a) {
  PauliSum r = a;
  for (auto& t : r.terms_) t.first *= s;
  r.prune();
  return r;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  check_sizes(a, b);
  std::map<PauliString, cplx> acc;
  for (auto& [ca, pa] : a.terms_) {
    for (auto& [cb, pb] : b.terms_) {
      auto [ph, p] = multiply(pa, pb);
      acc[p] += ca * cb * ph;
    }
  }
  PauliSum r = from_map(a.n_qubits_, acc);
  r.prune();
  return r;
}

namespace {

void check_n_so(int n_so) {
  if (n_so < 2 || n_so % 2 != 0)
    throw std::invalid_argument("n_so must be even and >= 2, got " + std::to_string(n_so));
}

}  // namespace

PauliSum jw_number_operator(int n_so) {
  check_n_so(n_so);
  PauliSum s = PauliSum::identity(n_so, n_so / 2.0);
  for (int j = 0; j < n_so; ++j) s.add_term(-0.5, PauliString::single(j, Pauli::Z));
  return s;
}

PauliSum jw_sz_operator(int n_so) {
  check_n_so(n_so);
  PauliSum s(n_so);
  for (int p = 0; p < n_so / 2; ++p) {
    s.add_term(-0.25, PauliString::single(2 * p, Pauli::Z));
    s.add_term(0.25, PauliString::single(2 * p + 1, Pauli::Z));
  }
  return s;
}

PauliSum jw_creation(int n_so, int j) {
  if (j < 0 || j >= n_so) throw std::invalid_argument("mode index out of range");
  std::vector<std::pair<int, Pauli>> zs;
  for (int k = 0; k < j; ++k) zs.emplace_back(k, Pauli::Z);
  auto with = [&](Pauli p) {
    auto v = zs;
    v.emplace_back(j, p);
    return PauliString(std::move(v));
  };
  // (X - iY)/2 maps |0> to |1>.
  PauliSum s(n_so);
  s.add_term(0.5, with(Pauli::X));
  s.add_term(cplx(0, -0.5), with(Pauli::Y));
  return s;
}

PauliSum jw_annihilation(int n_so, int j) { return jw_creation(n_so, j).adjoint(); }

PauliSum jw_s2_operator(int n_so) {
  check_n_so(n_so);
  // S^2 = Sz^2 + Sz + S- S+ with S+ = sum_p a+_{2p} a_{2p+1}.
  PauliSum s_plus(n_so);
  for (int p = 0; p < n_so / 2; ++p) s_plus = s_plus + jw_creation(n_so, 2 * p) * jw_annihilation(n_so, 2 * p + 1);
  PauliSum sz = jw_sz_operator(n_so);
  return sz * sz + sz + s_plus.adjoint() * s_plus;
}

std::string to_text(const PauliSum& op) {
  std::ostringstream os;
  os << std::setprecision(17);
  for (auto& [c, p] : op.terms()) os << c.real() << ' ' << c.imag() << ' ' << p.str() << '\n';
  return os.str();
}

PauliSum parse_pauli_sum(std::istream& in, int n_qubits) {
  std::vector<std::pair<cplx, PauliString>> parsed;
  int max_q = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    double re, im;
    if (!(ls >> re)) continue;
    if (!(ls >> im)) throw std::invalid_argument("line " + std::to_string(line_no) + ": missing imaginary part");
    std::vector<std::pair<int, Pauli>> ops;
    std::string tok;
    while (ls >> tok) {
      if (tok == "I") continue;
      Pauli p;
      switch (tok[0]) {
        case 'X':
          p = Pauli::X;
          break;
        case 'Y':
          p = Pauli::Y;
          break;
        case 'Z':
          p = Pauli::Z;
          break;
        default:
          throw std::invalid_argument("line " + std::to_string(line_no) + ": bad token '" + tok + "'");
      }
      std::size_t used = 0;
      int q = -1;
      try {
        q = std::stoi(tok.substr(1), &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used + 1 != tok.size() || q < 0)
        throw std::invalid_argument("line " + std::to_string(line_no) + ": bad qubit index in '" + tok + "'");
      ops.emplace_back(q, p);
    }
    PauliString ps;
    try {
      ps = PauliString(std::move(ops));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
    }
    max_q = std::max(max_q, ps.max_qubit());
    parsed.emplace_back(cplx(re, im), std::move(ps));
  }
  int n = n_qubits >= 0 ? n_qubits : max_q + 1;
  PauliSum s(n);
  for (auto& [c, p] : parsed) s.add_term(c, p);
  return s;
}

PauliSum parse_pauli_sum(const std::string& text, int n_qubits) {
  std::istringstream is(text);
  return parse_pauli_sum(is, n_qubits);
}

}  // namespace symproj
