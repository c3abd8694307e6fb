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

#include "symproj/cli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <future>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "symproj/amp.hpp"
#include "symproj/gqsp.hpp"
#include "symproj/gqsvt.hpp"

namespace symproj {

namespace {

using nlohmann::json;

constexpr double kTol = 1e-9;

// 2 M_S of a basis state: alpha (even) occupations minus beta (odd) ones.
int twice_sz(std::uint64_t b, int n_so) {
  int t = 0;
  for (int q = 0; q < n_so; ++q)
    if ((b >> q) & 1) t += q % 2 ? -1 : 1;
  return t;
}

std::vector<cplx> apply_sum(const PauliSum& op, const std::vector<cplx>& v) {
  std::vector<cplx> out(v.size(), 0.0), tmp;
  for (const auto& [c, p] : op.terms()) {
    apply_pauli(p, v, tmp);
    for (std::size_t i = 0; i < v.size(); ++i) out[i] += c * tmp[i];
  }
  return out;
}

// Lowdin product over the S^2 spectrum, applied matrix-free.
std::vector<cplx> apply_total_spin_projector(int n_so, HalfInt s, std::vector<cplx> v) {
  const PauliSum s2 = jw_s2_operator(n_so);
  const double target = s.value() * (s.value() + 1);
  for (int t = 0; t <= n_so / 2; ++t) {
    const double o = t / 2.0 * (t / 2.0 + 1);
    if (std::abs(o - target) < kTol) continue;
    std::vector<cplx> w = apply_sum(s2, v);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = (w[i] - o * v[i]) / (target - o);
  }
  return v;
}

// P|psi>, unnormalized, for the configured sector.
std::vector<cplx> reference_projection(const RunConfig& cfg, const Sector& sec, const Statevector& psi) {
  std::vector<cplx> v = psi.amplitudes();
  const int n = cfg.n_so;
  switch (cfg.projector) {
    case Projector::N:
      for (std::uint64_t b = 0; b < v.size(); ++b)
        if (std::popcount(b) != sec.n_elec) v[b] = 0;
      break;
    case Projector::Sz:
      for (std::uint64_t b = 0; b < v.size(); ++b)
        if (twice_sz(b, n) != sec.m_s.twice) v[b] = 0;
      break;
    case Projector::S2:
      v = apply_total_spin_projector(n, sec.s, std::move(v));
      break;
    case Projector::SMs:
      for (std::uint64_t b = 0; b < v.size(); ++b)
        if (twice_sz(b, n) != sec.m_s.twice) v[b] = 0;
      v = apply_total_spin_projector(n, sec.s, std::move(v));
      break;
  }
  return v;
}

double norm2(const std::vector<cplx>& v) {
  double t = 0;
  for (auto& a : v) t += std::norm(a);
  return t;
}

double overlap_fidelity(const std::vector<cplx>& ref, const Statevector& out) {
  const double nr = norm2(ref);
  if (nr == 0) return 0;
  cplx ip = 0;
  for (std::size_t i = 0; i < ref.size(); ++i) ip += std::conj(ref[i]) * out.amplitudes()[i];
  return std::norm(ip) / nr / std::pow(out.two_norm(), 2);
}

struct Projected {
  double probability = 0;   // post-selection probability
  double weight = 0;        // probability * alpha^2 = ||P psi||^2 for an exact block
  double fidelity = 0;      // vs the reference projection
  double s2 = 0;            // <S^2> of the output
  Statevector state;
};

Projected project_state(const BlockEncoding& be, const std::vector<cplx>& ref, const Statevector& psi) {
  Projected r;
  Postselection ps = run_block(be, psi, true);
  r.probability = ps.probability;
  r.weight = ps.probability * be.alpha * be.alpha;
  if (ps.probability > 0) {
    r.state = ps.state;
    r.fidelity = overlap_fidelity(ref, ps.state);
    r.s2 = expectation(ps.state, jw_s2_operator(be.n_system));
  }
  return r;
}

std::vector<double> default_eps_list() {
  std::vector<double> e;
  for (int k = 2; k <= 16; ++k) e.push_back(std::pow(10.0, -k / 4.0));
  return e;
}

struct ScopeCase {
  std::string name;
  ScopeMask mask;
};

std::vector<ScopeCase> rounding_scopes(Method m) {
  const auto sel = static_cast<ScopeMask>(Scope::Select), prep = static_cast<ScopeMask>(Scope::Prep),
             proc = static_cast<ScopeMask>(Scope::Processing);
  switch (m) {
    case Method::Lcu: return {{"select", sel}, {"select+prep", static_cast<ScopeMask>(sel | prep)}};
    case Method::Gqsp: return {{"signal", sel}, {"signal+processing", static_cast<ScopeMask>(sel | proc | prep)}};
    case Method::Gqsvt: return {{"rotations", proc}, {"prep", prep}};
  }
  return {};
}

// Runs f(i) for i in [0, n) with at most `jobs` in flight; results in index order.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, int jobs, F f) {
  std::vector<T> out(n);
  const std::size_t step = static_cast<std::size_t>(std::max(1, jobs));
  for (std::size_t start = 0; start < n; start += step) {
    std::vector<std::future<T>> fut;
    for (std::size_t i = start; i < std::min(n, start + step); ++i) fut.push_back(std::async(std::launch::async, f, i));
    for (std::size_t i = 0; i < fut.size(); ++i) out[start + i] = fut[i].get();
  }
  return out;
}

void write_gnuplot(const std::string& path, const std::string& data, const std::string& body) {
  if (path.empty()) return;
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << "set datafile separator ','\nset key autotitle columnhead\n";
  if (!data.empty()) f << "data = '" << data << "'\n";
  f << body;
}

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(10) << v;
  return s.str();
}

}  // namespace

double default_eps(Method m) {
  switch (m) {
    case Method::Lcu: return 1e-1;
    case Method::Gqsp: return 1e-2;
    case Method::Gqsvt: return 2e-4;
  }
  return 1e-2;
}

void validate(const RunConfig& cfg) {
  if (cfg.n_so < 2 || cfg.n_so % 2) throw std::invalid_argument("n_so must be even and >= 2");
  if (cfg.jobs < 1) throw std::invalid_argument("jobs must be >= 1");
  if (cfg.n_phi < 0 || cfg.n_beta < 0) throw std::invalid_argument("node counts must be positive");
  if (cfg.eps_r && !(*cfg.eps_r > 0)) throw std::invalid_argument("eps_r must be positive");
  const Projector p = cfg.projector;
  switch (cfg.method) {
    case Method::Lcu:
      if (p == Projector::S2) throw std::invalid_argument("lcu supports n, sz and s_ms");
      break;
    case Method::Gqsp:
      if (p == Projector::S2) throw std::invalid_argument("gqsp supports n and sz (s_ms as P_MS P_S P_MS)");
      break;
    case Method::Gqsvt:
      if (p == Projector::SMs) throw std::invalid_argument("gqsvt supports n, sz and s2");
      break;
  }
  resolve_sector(cfg);
}

Sector resolve_sector(const RunConfig& cfg) {
  Sector s;
  const int n = cfg.n_so;
  switch (cfg.projector) {
    case Projector::N: {
      const double t = cfg.target.value_or(n / 2);
      if (t != std::floor(t) || t < 0 || t > n) throw std::invalid_argument("N_elec must be an integer in [0, n_so]");
      s.n_elec = static_cast<int>(t);
      s.n_phi = cfg.n_phi ? cfg.n_phi : min_nodes_n(n, s.n_elec);
      break;
    }
    case Projector::Sz:
      s.m_s = HalfInt::from_double(cfg.target.value_or(0));
      if (std::abs(s.m_s.twice) > n / 2) throw std::invalid_argument("|M_S| exceeds n_so/4");
      s.n_phi = cfg.n_phi ? cfg.n_phi : exact_nodes_sz(n, s.m_s);
      break;
    case Projector::S2:
      s.s = HalfInt::from_double(cfg.target.value_or(0));
      if (s.s.twice < 0 || s.s.twice > n / 2) throw std::invalid_argument("S outside [0, n_so/4]");
      break;
    case Projector::SMs:
      s.s = HalfInt::from_double(cfg.target.value_or(0));
      s.m_s = HalfInt::from_double(cfg.ms.value_or(0));
      if (s.s.twice < 0 || s.s.twice > n / 2) throw std::invalid_argument("S outside [0, n_so/4]");
      if (std::abs(s.m_s.twice) > s.s.twice || (s.s.twice - s.m_s.twice) % 2)
        throw std::invalid_argument("M_S must be one of -S..S");
      s.n_phi = cfg.n_phi ? cfg.n_phi : exact_nodes_sz(n, s.m_s);
      s.n_beta = cfg.n_beta ? cfg.n_beta : recommended_n_beta(s.s);
      break;
  }
  return s;
}

BlockEncoding build_projector(const RunConfig& cfg) {
  validate(cfg);
  const Sector s = resolve_sector(cfg);
  const int n = cfg.n_so;
  switch (cfg.method) {
    case Method::Lcu:
      if (cfg.projector == Projector::N) return build_pn_lcu(n, s.n_elec, s.n_phi);
      if (cfg.projector == Projector::Sz) return build_pms_lcu(n, s.m_s, s.n_phi);
      return build_psms_lcu(n, s.s, s.m_s, s.n_phi, s.n_beta);
    case Method::Gqsp:
      if (cfg.projector == Projector::N) return build_pn_gqsp(n, s.n_elec, s.n_phi);
      if (cfg.projector == Projector::Sz) return build_pms_gqsp(n, s.m_s, s.n_phi);
      return build_psms_gqsp(n, s.s, s.m_s, s.n_phi, s.n_beta);
    case Method::Gqsvt: {
      if (cfg.projector == Projector::N) return build_projector_gqsvt(SymmetryOp::N, n, s.n_elec).block;
      if (cfg.projector == Projector::Sz) return build_projector_gqsvt(SymmetryOp::Sz, n, s.m_s.value()).block;
      const double v = s.s.value();
      return build_projector_gqsvt(SymmetryOp::S2, n, v * (v + 1)).block;
    }
  }
  throw std::logic_error("unreachable");
}

DenseOperator oracle_projector(const RunConfig& cfg) {
  if (cfg.n_so > kOracleMaxQubits) throw std::invalid_argument("oracle limited to 14 qubits");
  const Sector s = resolve_sector(cfg);
  const int n = cfg.n_so;
  switch (cfg.projector) {
    case Projector::N: return exact_projector(dense(jw_number_operator(n)), s.n_elec);
    case Projector::Sz: return exact_projector(dense(jw_sz_operator(n)), s.m_s.value());
    case Projector::S2: return exact_projector(dense(jw_s2_operator(n)), s.s.value() * (s.s.value() + 1));
    case Projector::SMs: {
      DenseOperator a = exact_projector(dense(jw_sz_operator(n)), s.m_s.value());
      DenseOperator b = exact_projector(dense(jw_s2_operator(n)), s.s.value() * (s.s.value() + 1));
      return a * b;
    }
  }
  throw std::logic_error("unreachable");
}

Statevector initial_state(const RunConfig& cfg) {
  const int n = cfg.n_so;
  if (!cfg.in.empty()) {
    std::ifstream f(cfg.in);
    if (!f) throw std::runtime_error("cannot read " + cfg.in);
    std::stringstream buf;
    buf << f.rdbuf();
    Statevector s = statevector_from_json(buf.str());
    if (s.n_qubits() != n) throw std::invalid_argument("input state has " + std::to_string(s.n_qubits()) + " qubits, expected n_so");
    return s;
  }
  if (cfg.init == "uniform") return uniform_state(n);
  if (cfg.init == "random") return random_state(n, cfg.seed);
  if (cfg.init == "sector") {
    // Uniform over the M_S (or N) sector the input is expected to live in.
    const Sector s = resolve_sector(cfg);
    if (cfg.projector == Projector::N) return uniform_state(n, [&](std::uint64_t b) { return std::popcount(b) == s.n_elec; });
    return uniform_state(n, [&](std::uint64_t b) { return twice_sz(b, n) == s.m_s.twice; });
  }
  throw std::invalid_argument("unknown init: " + cfg.init + " (uniform, sector, random)");
}

int cmd_project(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Sector sec = resolve_sector(cfg);
  BlockEncoding be = build_projector(cfg);
  const Statevector psi = initial_state(cfg);
  const std::vector<cplx> ref = reference_projection(cfg, sec, psi);
  const double ref_w = norm2(ref);
  Projected r = project_state(be, ref, psi);
  json rep;
  rep["method"] = to_string(cfg.method);
  rep["projector"] = to_string(cfg.projector);
  rep["n_so"] = cfg.n_so;
  rep["n_phi"] = sec.n_phi;
  rep["n_beta"] = sec.n_beta;
  rep["alpha"] = be.alpha;
  rep["width"] = be.circuit.width();
  rep["approximate"] = be.approximate;
  rep["probability"] = r.probability;
  rep["reference_weight"] = ref_w;
  if (r.probability == 0) {
    rep["error"] = "input has no overlap with the target sector";
    out << rep.dump(2) << "\n";
    err << "error: input has no overlap with the target sector\n";
    return 1;
  }
  rep["weight"] = r.weight;
  if (cfg.n_so <= 12) rep["fidelity"] = r.fidelity;
  rep["expectation"] = {{"N", expectation(r.state, jw_number_operator(cfg.n_so))},
                        {"Sz", expectation(r.state, jw_sz_operator(cfg.n_so))},
                        {"S2", r.s2}};
  if (!cfg.out.empty()) {
    std::ofstream f(cfg.out);
    if (!f) throw std::runtime_error("cannot write " + cfg.out);
    f << to_json(r.state) << "\n";
  }
  int code = 0;
  if (cfg.verify) {
    if (be.circuit.width() > kOracleMaxQubits) {
      err << "verify: skipped, width " << be.circuit.width() << " exceeds " << kOracleMaxQubits << "\n";
    } else if (be.approximate) {
      err << "verify: skipped, grid below the exact node count\n";
    } else {
      const bool ok = std::abs(r.fidelity - 1) <= 1e-6 && std::abs(r.weight - ref_w) <= 1e-6;
      rep["verified"] = ok;
      if (!ok) {
        err << "verify FAILED: fidelity " << r.fidelity << ", weight " << r.weight << " vs " << ref_w << "\n";
        code = 1;
      }
    }
  }
  out << rep.dump(2) << "\n";
  return code;
}

int cmd_scan_nodes(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  validate(cfg);
  const Sector sec = resolve_sector(cfg);
  const bool beta = cfg.sweep == "beta";
  if (cfg.sweep != "phi" && !beta) throw std::invalid_argument("sweep must be phi or beta");
  if (beta && cfg.projector != Projector::SMs) throw std::invalid_argument("beta sweeps need the s_ms projector");
  if (!beta && cfg.method == Method::Gqsvt) throw std::invalid_argument("gqsvt has no quadrature grid to scan");
  const int exact = beta ? recommended_n_beta(sec.s) : (cfg.projector == Projector::N ? min_nodes_n(cfg.n_so, sec.n_elec)
                                                                                         : exact_nodes_sz(cfg.n_so, sec.m_s));
  const int hi = cfg.max_nodes ? cfg.max_nodes : exact + 3;
  const Statevector psi = initial_state(cfg);
  const std::vector<cplx> ref = reference_projection(cfg, sec, psi);
  auto rows = parallel_map<Projected>(static_cast<std::size_t>(hi), cfg.jobs, [&](std::size_t i) {
    RunConfig c = cfg;
    if (beta) {
      c.n_beta = static_cast<int>(i) + 1;
    } else {
      c.n_phi = static_cast<int>(i) + 1;
    }
    Projected p = project_state(build_projector(c), ref, psi);
    p.state = Statevector();
    return p;
  });
  std::ostringstream csv;
  csv << "nodes,fidelity,probability,s2\n";
  for (std::size_t i = 0; i < rows.size(); ++i)
    csv << i + 1 << "," << fmt(rows[i].fidelity) << "," << fmt(rows[i].probability) << "," << fmt(rows[i].s2) << "\n";
  out << csv.str();
  write_gnuplot(cfg.gnuplot, cfg.out, "set xlabel 'nodes'\nset ylabel 'fidelity'\nplot data using 1:2 with linespoints\n");
  int code = 0;
  if (cfg.verify && !beta && hi >= exact && cfg.projector != Projector::SMs) {
    for (int k = exact; k <= hi; ++k) {
      if (std::abs(rows[k - 1].fidelity - 1) > 1e-8) {
        err << "verify FAILED: fidelity " << rows[k - 1].fidelity << " at " << k << " nodes\n";
        code = 1;
      }
    }
  }
  return code;
}

int cmd_scan_precision(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  validate(cfg);
  const Sector sec = resolve_sector(cfg);
  const BlockEncoding be = build_projector(cfg);
  const Statevector psi = initial_state(cfg);
  const std::vector<cplx> ref = reference_projection(cfg, sec, psi);
  const std::vector<double> eps = cfg.eps_list.empty() ? default_eps_list() : cfg.eps_list;
  const std::vector<ScopeCase> scopes = rounding_scopes(cfg.method);
  struct Row {
    double eps;
    std::string scope;
    double fidelity;
  };
  auto rows = parallel_map<Row>(eps.size() * scopes.size(), cfg.jobs, [&](std::size_t i) {
    const ScopeCase& sc = scopes[i % scopes.size()];
    const double e = eps[i / scopes.size()];
    BlockEncoding q = be;
    q.circuit = quantize_angles(be.circuit, e, sc.mask);
    return Row{e, sc.name, project_state(q, ref, psi).fidelity};
  });
  out << "eps_r,scope,fidelity\n";
  for (const auto& r : rows) out << fmt(r.eps) << "," << r.scope << "," << fmt(r.fidelity) << "\n";
  write_gnuplot(cfg.gnuplot, cfg.out,
                "set logscale x\nset xlabel 'eps_r'\nset ylabel 'fidelity'\n"
                "plot data using 1:($2 eq '" + scopes[0].name + "' ? $3 : 1/0) title '" + scopes[0].name +
                    "', data using 1:($2 eq '" + scopes[1].name + "' ? $3 : 1/0) title '" + scopes[1].name + "'\n");
  if (cfg.verify && cfg.eps_r) {
    const double e = *cfg.eps_r;
    BlockEncoding q = be;
    q.circuit = quantize_angles(be.circuit, e, static_cast<ScopeMask>(scopes.back().mask | scopes.front().mask));
    const double f = project_state(q, ref, psi).fidelity;
    if (f < 0.99) {
      err << "verify FAILED: fidelity " << f << " < 0.99 at eps_r " << e << "\n";
      return 1;
    }
  }
  return 0;
}

int cmd_resources(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const double eps = cfg.eps_r.value_or(default_eps(cfg.method));
  ScalingTable t = scaling_table(cfg.projector, cfg.method, cfg.n_so_list, eps, cfg.node_rule, cfg.jobs);
  out << "method,projector,n_so,cnot,t,ancilla,eps_r,toffoli,n_rot\n";
  for (const auto& r : t.rows)
    out << to_string(t.method) << "," << to_string(t.projector) << "," << r.n_so << "," << r.cnot << "," << r.t << ","
        << r.ancilla << "," << fmt(eps) << "," << r.toffoli << "," << r.n_rot << "\n";
  if (t.rows.size() >= 2) {
    err << "fit T    = a N^b log2 N: a=" << fmt(t.t_fit.a) << " b=" << fmt(t.t_fit.b) << "; at b=" << t.t_fit.b_nominal
        << " a=" << fmt(t.t_fit.a_nominal) << "\n";
    err << "fit CNOT = a N^b log2 N: a=" << fmt(t.cnot_fit.a) << " b=" << fmt(t.cnot_fit.b) << "; at b="
        << t.cnot_fit.b_nominal << " a=" << fmt(t.cnot_fit.a_nominal) << "\n";
  }
  write_gnuplot(cfg.gnuplot, cfg.out,
                "set logscale xy\nset xlabel 'N_SO'\nplot data using 3:4 title 'CNOT', data using 3:5 title 'T'\n");
  return 0;
}

int cmd_femoco(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
  struct Case {
    std::string name;
    int n_orb, n_elec;
    HalfInt s, m_s;
  };
  std::vector<Case> cases;
  if (cfg.n_orbitals > 0) {
    const HalfInt s = HalfInt::from_double(cfg.target.value_or(0));
    cases.push_back({"custom", cfg.n_orbitals, cfg.n_elec, s, HalfInt::from_double(cfg.ms.value_or(s.value()))});
  } else {
    cases = {{"54o54e", 54, 54, HalfInt{0}, HalfInt{0}},
             {"76o113e", 76, 113, HalfInt{3}, HalfInt{3}},
             {"76o113e", 76, 113, HalfInt{1}, HalfInt{1}}};
  }
  const double eps = cfg.eps_r.value_or(default_eps(Method::Gqsp));
  json rows = json::array();
  for (const auto& c : cases) {
    FemocoEstimate e = femoco_estimate(c.n_orb, c.n_elec, c.s, c.m_s, eps);
    rows.push_back({{"model", c.name},
                    {"n_orbitals", c.n_orb},
                    {"n_elec", c.n_elec},
                    {"S", c.s.value()},
                    {"M_S", c.m_s.value()},
                    {"n_so", e.n_so},
                    {"p", e.p},
                    {"m", e.m},
                    {"queries", e.queries},
                    {"n_phi", e.n_phi},
                    {"n_beta", e.n_beta},
                    {"eps_r", eps},
                    {"projector_t", e.projector_t},
                    {"total_t", e.total_t}});
  }
  out << rows.dump(2) << "\n";
  return 0;
}

int cmd_aa_demo(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  BlockEncoding be = build_projector(cfg);
  if (be.circuit.width() > 20) throw std::invalid_argument("circuit too wide for the AA demo");
  // Uniform superposition prepared by Hadamards.
  Circuit init(cfg.n_so);
  for (int q = 0; q < cfg.n_so; ++q) init.add(make_gate(GateKind::H, q));
  const double p = success_probability(be, uniform_state(cfg.n_so));
  json rep;
  rep["probability"] = p;
  if (p <= 0) {
    out << rep.dump(2) << "\n";
    err << "error: zero success probability\n";
    return 1;
  }
  const AmplificationPlan pl = plan(p);
  const int m = cfg.rounds >= 0 ? cfg.rounds : pl.m;
  const double predicted = std::pow(std::sin((2 * m + 1) * pl.theta), 2);
  const double simulated = simulate_aa(be, build_aa_circuit(be, init, m));
  rep["theta"] = pl.theta;
  rep["m"] = m;
  rep["queries"] = 2 * m + 1;
  rep["plan_m"] = pl.m;
  rep["predicted"] = predicted;
  rep["simulated"] = simulated;
  rep["difference"] = std::abs(predicted - simulated);
  out << rep.dump(2) << "\n";
  if (cfg.verify && std::abs(predicted - simulated) > 1e-9) {
    err << "verify FAILED: simulated " << simulated << " vs " << predicted << "\n";
    return 1;
  }
  return 0;
}

int cmd_phases_export(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
  validate(cfg);
  const Sector s = resolve_sector(cfg);
  json rep;
  rep["method"] = to_string(cfg.method);
  rep["projector"] = to_string(cfg.projector);
  rep["n_so"] = cfg.n_so;
  ComplexPoly p;
  if (cfg.method == Method::Gqsp) {
    if (cfg.projector == Projector::N) {
      p = projector_poly(cfg.n_so, s.n_elec, s.n_phi);
    } else if (cfg.projector == Projector::Sz) {
      p = projector_poly(cfg.n_so, s.m_s.twice, s.n_phi);
    } else {
      throw std::invalid_argument("phases export covers single-operator projectors (n, sz, s2)");
    }
    rep["n_phi"] = s.n_phi;
  } else if (cfg.method == Method::Gqsvt) {
    const SymmetryOp op = cfg.projector == Projector::N ? SymmetryOp::N
                          : cfg.projector == Projector::Sz ? SymmetryOp::Sz : SymmetryOp::S2;
    const double target = cfg.projector == Projector::N ? s.n_elec
                          : cfg.projector == Projector::Sz ? s.m_s.value() : s.s.value() * (s.s.value() + 1);
    const double alpha = qubitize(symmetry_operator(op, cfg.n_so)).alpha;
    LagrangePoly lp = lagrange_coeffs(analytic_spectrum(op, cfg.n_so), target);
    set_rescale(lp, alpha);
    p = chebyshev_map(lp, alpha);
    rep["rescale"] = lp.rescale;
    rep["lcu_alpha"] = alpha;
  } else {
    throw std::invalid_argument("phases export needs gqsp or gqsvt");
  }
  const ComplexPoly q = complementary_poly(p);
  const PhaseSequence ph = find_phases(p, q);
  const auto [pr, qr] = reconstruct(ph);
  double round_trip = 0;
  for (std::size_t k = 0; k < p.coeffs.size(); ++k) round_trip = std::max(round_trip, std::abs(pr.coeffs[k] - p.coeffs[k]));
  rep["degree"] = ph.degree();
  rep["thetas"] = ph.thetas;
  rep["phis"] = ph.phis;
  rep["lambda"] = ph.lambda;
  rep["complementarity_residual"] = complementarity_residual(p, q);
  rep["round_trip_residual"] = round_trip;
  out << rep.dump(2) << "\n";
  return 0;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::string& c = cfg.subcommand;
  if (c == "project") return cmd_project(cfg, out, err);
  if (c == "scan-nodes") return cmd_scan_nodes(cfg, out, err);
  if (c == "scan-precision") return cmd_scan_precision(cfg, out, err);
  if (c == "resources") return cmd_resources(cfg, out, err);
  if (c == "femoco") return cmd_femoco(cfg, out, err);
  if (c == "aa-demo") return cmd_aa_demo(cfg, out, err);
  if (c == "phases export") return cmd_phases_export(cfg, out, err);
  throw std::invalid_argument("unknown subcommand: " + c);
}

}  // namespace symproj
