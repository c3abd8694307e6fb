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

#include "symproj/cost.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <stdexcept>

#include "symproj/amp.hpp"
#include "symproj/gqsp.hpp"
#include "symproj/gqsvt.hpp"

namespace symproj {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_diagonal_kind(GateKind k) {
  switch (k) {
    case GateKind::Z:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::T:
    case GateKind::Tdg:
    case GateKind::RZ:
    case GateKind::Phase:
    case GateKind::GlobalPhase:
      return true;
    default:
      return false;
  }
}

// Phase angle of the diagonal single-qubit kinds, diag(1, e^{i a}).
double phase_angle(const Gate& g) {
  switch (g.kind) {
    case GateKind::Z: return kPi;
    case GateKind::S: return kPi / 2;
    case GateKind::Sdg: return -kPi / 2;
    case GateKind::T: return kPi / 4;
    case GateKind::Tdg: return -kPi / 4;
    case GateKind::Phase: return g.theta;
    default: throw std::logic_error("not a phase gate");
  }
}

class Lowerer {
 public:
  Lowerer(const Circuit& c, bool share) : w_(c.width()), share_(share), pending_(c.width(), 0.0) {
    std::size_t kmax = 0;
    for (const auto& g : c.gates()) kmax = std::max(kmax, g.controls.size());
    n_work_ = kmax >= 2 ? static_cast<int>(kmax) - 1 : 0;
    out_ = Circuit(w_ + n_work_);
    for (const auto& g : c.gates()) lower_gate(g);
    set_chain({});
    for (int q = 0; q < w_; ++q) flush(q);
    global_ = std::remainder(global_, 2 * kPi);
    if (std::abs(global_) > 1e-15) out_.add(global_phase(global_));
  }

  Circuit take() {
    // Drop unused work qubits.
    Circuit c(w_ + used_work_);
    for (auto& g : out_.gates()) c.add(g);
    return c;
  }

 private:
  int w_;
  bool share_;
  int n_work_ = 0;
  int used_work_ = 0;
  std::vector<double> pending_;  // deferred RZ angle per system qubit
  double global_ = 0;
  std::vector<Control> chain_;  // controls whose AND ladder is currently computed
  Circuit out_;

  int work(int level) const { return w_ + level - 2; }  // level >= 2

  void emit(Gate g) { out_.add(std::move(g)); }

  void flush(int q) {
    if (q >= w_) return;
    double a = std::remainder(pending_[q], 4 * kPi);
    pending_[q] = 0;
    // RZ(a) = -RZ(a - 2 pi).
    if (a > kPi) {
      a -= 2 * kPi;
      global_ += kPi;
    } else if (a < -kPi) {
      a += 2 * kPi;
      global_ += kPi;
    }
    if (std::abs(a) > 1e-15) emit(make_gate(GateKind::RZ, q, a));
  }

  void add_phase(int q, double a) {
    // diag(1, e^{ia}) = e^{ia/2} RZ(a)
    global_ += a / 2;
    add_rz(q, a);
  }

  void add_rz(int q, double a) {
    if (q < w_) {
      pending_[q] += a;
    } else {
      emit_rz_now(q, a);
    }
  }

  void emit_rz_now(int q, double a) {
    double r = std::remainder(a, 4 * kPi);
    if (r > kPi) {
      r -= 2 * kPi;
      global_ += kPi;
    } else if (r < -kPi) {
      r += 2 * kPi;
      global_ += kPi;
    }
    if (std::abs(r) > 1e-15) emit(make_gate(GateKind::RZ, q, r));
  }

  Control holder(const std::vector<Control>& ch, int level) const {
    if (level == 1) return ch[0];
    return {work(level), true};
  }

  void toggle_level(const std::vector<Control>& ch, int level) {
    Gate g = make_gate(GateKind::X, work(level));
    g.controls = {holder(ch, level - 1), ch[level - 1]};
    emit(g);
  }

  // Makes the computed ladder equal `want` (sorted). Empty clears it.
  void set_chain(const std::vector<Control>& want) {
    std::size_t p = 0;
    while (p < chain_.size() && p < want.size() && chain_[p] == want[p]) ++p;
    const int keep = static_cast<int>(std::max<std::size_t>(p, 1));
    for (int lvl = static_cast<int>(chain_.size()); lvl > keep; --lvl) toggle_level(chain_, lvl);
    for (int lvl = keep + 1; lvl <= static_cast<int>(want.size()); ++lvl) toggle_level(want, lvl);
    if (want.size() >= 2) used_work_ = std::max(used_work_, static_cast<int>(want.size()) - 1);
    chain_ = want;
  }

  // Effective single control after reducing `ctrls` with the ladder.
  Control reduce(const std::vector<Control>& ctrls) {
    if (ctrls.size() == 1) return ctrls[0];
    if (!share_ && chain_ != ctrls) set_chain({});
    set_chain(ctrls);
    return {work(static_cast<int>(ctrls.size())), true};
  }

  void release_if_in_chain(int q) {
    for (const auto& c : chain_) {
      if (c.qubit == q) {
        set_chain({});
        return;
      }
    }
  }

  void cx(Control e, int t) {
    Gate g = make_gate(GateKind::X, t);
    g.controls = {e};
    emit(g);
  }

  // exp(i a s Z_e Z_t) with s = +1 for a closed control, -1 for an open one.
  void zz(Control e, int t, double a) {
    Gate c = make_gate(GateKind::X, e.qubit);
    c.controls = {{t, true}};
    emit(c);
    emit_rz_now(e.qubit, -2 * a * (e.on_one ? 1 : -1));
    emit(c);
  }

  void c_phase(Control e, int t, double th) {
    const double s = e.on_one ? 1 : -1;
    global_ += th / 4;
    add_rz(e.qubit, s * th / 2);
    add_rz(t, th / 2);
    zz(e, t, th / 4);
  }

  // e^{i th} when e fires.
  void c_global(Control e, double th) {
    if (e.on_one) {
      add_phase(e.qubit, th);
    } else {
      global_ += th;
      add_phase(e.qubit, -th);
    }
  }

  void c_rz(Control e, int t, double th) {
    add_rz(t, th / 2);
    zz(e, t, th / 4);
  }

  void c_ry(Control e, int t, double th) {
    flush(t);
    emit(make_gate(GateKind::RY, t, th / 2));
    cx(e, t);
    emit(make_gate(GateKind::RY, t, -th / 2));
    cx(e, t);
  }

  void c_rx(Control e, int t, double th) {
    flush(t);
    emit(make_gate(GateKind::H, t));
    emit(make_gate(GateKind::RZ, t, th / 2));
    cx(e, t);
    emit(make_gate(GateKind::RZ, t, -th / 2));
    cx(e, t);
    emit(make_gate(GateKind::H, t));
  }

  void lower_uncontrolled(const Gate& g) {
    const int t = g.target;
    switch (g.kind) {
      case GateKind::GlobalPhase:
        global_ += g.theta;
        return;
      case GateKind::RZ:
        add_rz(t, g.theta);
        return;
      case GateKind::Z:
      case GateKind::S:
      case GateKind::Sdg:
      case GateKind::T:
      case GateKind::Tdg:
      case GateKind::Phase:
        add_phase(t, phase_angle(g));
        return;
      case GateKind::X:
      case GateKind::Y:
        release_if_in_chain(t);
        pending_[t] = -pending_[t];
        emit(g);
        return;
      case GateKind::H:
        release_if_in_chain(t);
        flush(t);
        emit(g);
        return;
      case GateKind::RX:
      case GateKind::RY:
        release_if_in_chain(t);
        flush(t);
        if (std::abs(std::remainder(g.theta, 4 * kPi)) > 1e-15) emit(make_gate(g.kind, t, g.theta));
        return;
      case GateKind::RTilde:
        // R~ = e^{i(phi + lambda)} Phase(-phi) RY(2 theta) Phase(pi - lambda)
        release_if_in_chain(t);
        add_phase(t, kPi - g.lambda);
        flush(t);
        if (std::abs(std::remainder(2 * g.theta, 4 * kPi)) > 1e-15) emit(make_gate(GateKind::RY, t, 2 * g.theta));
        add_phase(t, -g.phi);
        global_ += g.phi + g.lambda;
        return;
    }
  }

  void lower_gate(const Gate& g) {
    if (g.controls.empty()) {
      lower_uncontrolled(g);
      return;
    }
    std::vector<Control> ctrls = g.controls;
    std::sort(ctrls.begin(), ctrls.end(), [](const Control& a, const Control& b) { return a.qubit > b.qubit; });
    const int t = g.target;
    if (g.kind == GateKind::GlobalPhase) {
      c_global(ctrls.size() == 1 ? ctrls[0] : reduce(ctrls), g.theta);
      return;
    }
    if (!is_diagonal_kind(g.kind)) release_if_in_chain(t);
    if (g.kind == GateKind::X || g.kind == GateKind::Y || g.kind == GateKind::Z) {
      // Toffoli on the last control directly saves one ladder level.
      Control last = ctrls.back();
      std::vector<Control> head(ctrls.begin(), ctrls.end() - 1);
      const Control top = head.empty() ? last : reduce(head);
      if (g.kind != GateKind::Z) flush(t);
      if (g.kind == GateKind::Y) emit(make_gate(GateKind::Sdg, t));
      if (g.kind == GateKind::Z && !head.empty()) emit(make_gate(GateKind::H, t));
      Gate x = make_gate(g.kind == GateKind::Z && head.empty() ? GateKind::Z : GateKind::X, t);
      if (head.empty()) {
        x.controls = {last};
      } else {
        x.controls = {top, last};
      }
      emit(x);
      if (g.kind == GateKind::Z && !head.empty()) emit(make_gate(GateKind::H, t));
      if (g.kind == GateKind::Y) emit(make_gate(GateKind::S, t));
      return;
    }
    const Control e = reduce(ctrls);
    switch (g.kind) {
      case GateKind::H:
        flush(t);
        emit(make_gate(GateKind::RY, t, -kPi / 4));
        {
          Gate z = make_gate(GateKind::Z, t);
          z.controls = {e};
          emit(z);
        }
        emit(make_gate(GateKind::RY, t, kPi / 4));
        return;
      case GateKind::S:
      case GateKind::Sdg:
      case GateKind::T:
      case GateKind::Tdg:
      case GateKind::Phase:
        c_phase(e, t, phase_angle(g));
        return;
      case GateKind::RZ:
        c_rz(e, t, g.theta);
        return;
      case GateKind::RY:
        c_ry(e, t, g.theta);
        return;
      case GateKind::RX:
        c_rx(e, t, g.theta);
        return;
      case GateKind::RTilde:
        c_phase(e, t, kPi - g.lambda);
        c_ry(e, t, 2 * g.theta);
        c_phase(e, t, -g.phi);
        c_global(e, g.phi + g.lambda);
        return;
      default:
        throw std::logic_error("unhandled controlled gate " + g.str());
    }
  }
};

// 0 = skip, 1 = Clifford, 2 = T, 3 = rotation.
int classify(double a) {
  const double r = std::remainder(a, 2 * kPi);
  if (std::abs(r) < 1e-12) return 0;
  const double k = r / (kPi / 4);
  const double kr = std::round(k);
  if (std::abs(k - kr) < 1e-9) return static_cast<long long>(kr) % 2 == 0 ? 1 : 2;
  return 3;
}

PhaseSequence generic_phases(int d) {
  PhaseSequence ph;
  for (int k = 0; k <= d; ++k) {
    ph.thetas.push_back(0.3 + 0.01 * k);
    ph.phis.push_back(0.7 + 0.013 * k);
  }
  ph.lambda = 0.11;
  return ph;
}

int nodes_for(Projector p, int n_so, NodeRule rule) {
  if (rule == NodeRule::Full) return n_so + 1;
  return p == Projector::N ? min_nodes_n(n_so, n_so / 2) : exact_nodes_sz(n_so, HalfInt{0});
}

BlockEncoding pms_gqsp_structure(int n_so, int n_phi) {
  return assemble_gqsp(generic_phases(n_phi - 1), controlled_on_zero(exp_sz_circuit(4 * kPi / n_phi, n_so, HalfInt{0})));
}

}  // namespace

std::int64_t GateCounts::t_total(double eps_r) const {
  std::int64_t tt = t + 7 * toffoli;
  if (!rotations.empty()) tt += n_rot() * t_cost_rotation(eps_r / static_cast<double>(n_rot()));
  return tt;
}

GateCounts& GateCounts::operator+=(const GateCounts& o) {
  cnot += o.cnot;
  t += o.t;
  toffoli += o.toffoli;
  clifford += o.clifford;
  rotations.insert(rotations.end(), o.rotations.begin(), o.rotations.end());
  ancilla = std::max(ancilla, o.ancilla);
  work = std::max(work, o.work);
  return *this;
}

GateCounts GateCounts::repeated(std::int64_t k) const {
  GateCounts r;
  r.ancilla = ancilla;
  r.work = work;
  r.cnot = cnot * k;
  r.t = t * k;
  r.toffoli = toffoli * k;
  r.clifford = clifford * k;
  r.rotations.reserve(rotations.size() * static_cast<std::size_t>(std::max<std::int64_t>(k, 0)));
  for (std::int64_t i = 0; i < k; ++i) r.rotations.insert(r.rotations.end(), rotations.begin(), rotations.end());
  return r;
}

Circuit lower(const Circuit& c, bool share_prefix) { return Lowerer(c, share_prefix).take(); }

GateCounts census(const Circuit& lowered) {
  GateCounts n;
  for (const auto& g : lowered.gates()) {
    const std::size_t k = g.controls.size();
    if (g.kind == GateKind::GlobalPhase && k == 0) continue;
    if (k == 1 && (g.kind == GateKind::X || g.kind == GateKind::Y || g.kind == GateKind::Z)) {
      ++n.cnot;
      continue;
    }
    if (k == 2 && g.kind == GateKind::X) {
      ++n.toffoli;
      continue;
    }
    if (k != 0) throw std::logic_error("census expects a lowered circuit: " + g.str());
    switch (g.kind) {
      case GateKind::H:
      case GateKind::X:
      case GateKind::Y:
      case GateKind::Z:
      case GateKind::S:
      case GateKind::Sdg:
        ++n.clifford;
        break;
      case GateKind::T:
      case GateKind::Tdg:
        ++n.t;
        break;
      case GateKind::RX:
      case GateKind::RY:
      case GateKind::RZ:
        switch (classify(g.theta)) {
          case 1: ++n.clifford; break;
          case 2: ++n.t; break;
          case 3: n.rotations.push_back(g.theta); break;
          default: break;
        }
        break;
      default:
        throw std::logic_error("census expects a lowered circuit: " + g.str());
    }
  }
  return n;
}

GateCounts count_gates(const Circuit& c, bool share_prefix) {
  Circuit l = lower(c, share_prefix);
  GateCounts n = census(l);
  n.work = l.width() - c.width();
  return n;
}

GateCounts count_gates(const BlockEncoding& be, bool share_prefix) {
  GateCounts n = count_gates(be.circuit, share_prefix);
  n.ancilla = be.circuit.width() - be.n_system;
  return n;
}

std::int64_t t_cost_rotation(double eps) {
  if (!(eps > 0 && eps < 1)) throw std::invalid_argument("eps must lie in (0, 1)");
  return static_cast<std::int64_t>(std::ceil(3 * std::log2(1 / eps) - 1e-9));
}

std::int64_t aggregate_t(std::int64_t n_rot, double eps_r) {
  if (n_rot < 1) throw std::invalid_argument("n_rot must be >= 1");
  if (!(eps_r > 0)) throw std::invalid_argument("eps_r must be positive");
  return static_cast<std::int64_t>(std::ceil(3.0 * n_rot * std::log2(n_rot / eps_r) - 1e-9));
}

GateCounts qrom_prep_model(std::int64_t l, double eps) {
  if (l < 1) throw std::invalid_argument("L must be >= 1");
  if (!(eps > 0 && eps < 1)) throw std::invalid_argument("eps must lie in (0, 1)");
  const int mu = static_cast<int>(std::ceil(std::log2(1 / eps) - 1e-12));
  const int logl = static_cast<int>(std::ceil(std::log2(static_cast<double>(l)) - 1e-12));
  GateCounts g;
  g.t = 4 * l + static_cast<std::int64_t>(std::ceil(kQromLogConstant * std::log2(1 / eps) - 1e-12));
  g.cnot = l * mu;
  g.ancilla = 1 + 2 * logl + 2 * mu;
  return g;
}

GateCounts select_scaffold_model(std::int64_t l) {
  if (l < 1) throw std::invalid_argument("L must be >= 1");
  GateCounts g;
  g.t = 4 * l - 4;
  return g;
}

Method parse_method(const std::string& s) {
  if (s == "lcu") return Method::Lcu;
  if (s == "gqsp") return Method::Gqsp;
  if (s == "gqsvt") return Method::Gqsvt;
  throw std::invalid_argument("unknown method: " + s);
}

Projector parse_projector(const std::string& s) {
  if (s == "n") return Projector::N;
  if (s == "sz") return Projector::Sz;
  if (s == "s2") return Projector::S2;
  if (s == "s_ms") return Projector::SMs;
  throw std::invalid_argument("unknown projector: " + s);
}

std::string to_string(Method m) {
  switch (m) {
    case Method::Lcu: return "lcu";
    case Method::Gqsp: return "gqsp";
    case Method::Gqsvt: return "gqsvt";
  }
  return "?";
}

std::string to_string(Projector p) {
  switch (p) {
    case Projector::N: return "n";
    case Projector::Sz: return "sz";
    case Projector::S2: return "s2";
    case Projector::SMs: return "s_ms";
  }
  return "?";
}

ScalingRow projector_counts(Projector p, Method m, int n_so, double eps_r, NodeRule rule) {
  GateCounts gc;
  if (m == Method::Gqsvt) {
    if (p == Projector::SMs) throw std::invalid_argument("GQSVT builds s2, not s_ms");
    const SymmetryOp op = p == Projector::N ? SymmetryOp::N : (p == Projector::Sz ? SymmetryOp::Sz : SymmetryOp::S2);
    const int d = static_cast<int>(analytic_spectrum(op, n_so).size()) - 1;
    QubitizationOp q = qubitize(symmetry_operator(op, n_so));
    // 2d controlled Q_A, d uncontrolled Q_A^dagger, 2d + 1 processing rotations.
    GateCounts cq = count_gates(controlled_walk(q));
    GateCounts qd = count_gates(q.circuit.adjoint());
    Circuit r(1);
    r.add(rtilde(0, 0.3, 0.7, 0.11));
    GateCounts rt = count_gates(r);
    gc = cq.repeated(2 * d);
    gc += qd.repeated(d);
    gc += rt.repeated(2 * d + 1);
    gc.ancilla = q.circuit.width() + 1 - n_so;
  } else {
    const int n_phi = nodes_for(p, n_so, rule);
    BlockEncoding be;
    switch (p) {
      case Projector::N:
        be = m == Method::Lcu ? build_pn_lcu(n_so, n_so / 2, n_phi)
                              : assemble_gqsp(generic_phases(n_phi - 1),
                                              controlled_on_zero(exp_n_circuit(2 * kPi / n_phi, n_so, 0)));
        break;
      case Projector::Sz:
        be = m == Method::Lcu ? build_pms_lcu(n_so, HalfInt{0}, n_phi) : pms_gqsp_structure(n_so, n_phi);
        break;
      case Projector::SMs: {
        const int n_beta = recommended_n_beta(HalfInt{0});
        if (m == Method::Lcu) {
          be = build_psms_lcu(n_so, HalfInt{0}, HalfInt{0}, n_phi, n_beta);
        } else {
          BlockEncoding pms = pms_gqsp_structure(n_so, n_phi);
          BlockEncoding ps = build_ps_lcu(n_so, HalfInt{0}, HalfInt{0}, n_beta);
          be = chain({&pms, &ps, &pms});
        }
        break;
      }
      case Projector::S2:
        throw std::invalid_argument("s2 is only available with gqsvt");
    }
    gc = count_gates(be);
  }
  ScalingRow row;
  row.n_so = n_so;
  row.cnot = gc.cnot_total();
  row.t = gc.t_total(eps_r);
  row.toffoli = gc.toffoli;
  row.n_rot = gc.n_rot();
  row.ancilla = gc.ancilla;
  return row;
}

ScalingFit fit_scaling(const std::vector<int>& n, const std::vector<double>& y, double nominal_b) {
  if (n.size() != y.size() || n.size() < 2) throw std::invalid_argument("need at least two points to fit");
  const std::size_t m = n.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0, snom = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (n[i] < 2 || y[i] <= 0) throw std::invalid_argument("fit needs n >= 2 and positive counts");
    const double x = std::log(static_cast<double>(n[i]));
    const double v = std::log(y[i] / std::log2(static_cast<double>(n[i])));
    sx += x;
    sy += v;
    sxx += x * x;
    sxy += x * v;
    snom += v - nominal_b * x;
  }
  ScalingFit f;
  f.b = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  f.a = std::exp((sy - f.b * sx) / m);
  f.b_nominal = nominal_b;
  f.a_nominal = std::exp(snom / m);
  return f;
}

ScalingTable scaling_table(Projector p, Method m, const std::vector<int>& n_so_list, double eps_r, NodeRule rule,
                           int jobs) {
  if (m == Method::Gqsp && p == Projector::S2) throw std::invalid_argument("gqsp supports n, sz and s_ms");
  if (m == Method::Lcu && p == Projector::S2) throw std::invalid_argument("lcu supports n, sz and s_ms");
  if (m == Method::Gqsvt && p == Projector::SMs) throw std::invalid_argument("gqsvt supports n, sz and s2");
  ScalingTable tab;
  tab.method = m;
  tab.projector = p;
  tab.eps_r = eps_r;
  tab.rows.resize(n_so_list.size());
  jobs = std::max(1, jobs);
  for (std::size_t start = 0; start < n_so_list.size(); start += jobs) {
    std::vector<std::future<ScalingRow>> fut;
    for (std::size_t i = start; i < std::min(n_so_list.size(), start + jobs); ++i)
      fut.push_back(std::async(std::launch::async, projector_counts, p, m, n_so_list[i], eps_r, rule));
    for (std::size_t i = 0; i < fut.size(); ++i) tab.rows[start + i] = fut[i].get();
  }
  std::sort(tab.rows.begin(), tab.rows.end(), [](const ScalingRow& a, const ScalingRow& b) { return a.n_so < b.n_so; });
  if (tab.rows.size() >= 2) {
    std::vector<int> ns;
    std::vector<double> ts, cs;
    for (const auto& r : tab.rows) {
      ns.push_back(r.n_so);
      ts.push_back(static_cast<double>(r.t));
      cs.push_back(static_cast<double>(r.cnot));
    }
    const double nominal = (m == Method::Gqsvt && p == Projector::S2) ? 3.0 : 2.0;
    tab.t_fit = fit_scaling(ns, ts, nominal);
    tab.cnot_fit = fit_scaling(ns, cs, nominal);
  }
  return tab;
}

double sector_overlap(int n_elec, HalfInt s) {
  if (n_elec < 1) throw std::invalid_argument("n_elec must be >= 1");
  if (s.twice < 0 || s.twice > n_elec) throw std::invalid_argument("spin outside [0, n_elec/2]");
  if ((n_elec + s.twice) % 2) throw std::invalid_argument("spin parity does not match the electron count");
  const double k = (n_elec + s.twice) / 2;  // N/2 + S
  // C(N, k+1) / C(N, k) = (N - k) / (k + 1)
  return 1 - (n_elec - k) / (k + 1);
}

FemocoEstimate femoco_estimate(int n_orbitals, int n_elec, HalfInt s, HalfInt m_s, double eps_r) {
  if (n_orbitals < 1) throw std::invalid_argument("n_orbitals must be >= 1");
  FemocoEstimate e;
  e.n_so = 2 * n_orbitals;
  if (n_elec > e.n_so) throw std::invalid_argument("more electrons than spin-orbitals");
  if (std::abs(m_s.twice) > s.twice || (s.twice - m_s.twice) % 2) throw std::invalid_argument("invalid (S, M_S)");
  e.p = sector_overlap(n_elec, s);
  const AmplificationPlan pl = plan(e.p);
  e.m = pl.m;
  e.queries = pl.queries;
  e.n_phi = e.n_so + 1;
  e.n_beta = recommended_n_beta(s);
  BlockEncoding pms = pms_gqsp_structure(e.n_so, e.n_phi);
  BlockEncoding ps = build_ps_lcu(e.n_so, s, m_s, e.n_beta);
  BlockEncoding be = chain({&pms, &ps, &pms});
  e.projector_t = count_gates(be).t_total(eps_r);
  e.total_t = e.queries * e.projector_t;
  return e;
}

}  // namespace symproj
