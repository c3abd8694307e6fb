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

#include <exception>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "symproj/cli.hpp"

int main(int argc, char** argv) {
  using namespace symproj;
  RunConfig cfg;
  std::string method = "lcu", projector = "sz", node_rule = "exact";
  std::optional<double> target, ms, eps_r;

  CLI::App app{"Symmetry projection circuits: construction, simulation and resource counts"};
  app.set_config("--config", "", "TOML/INI config file; command-line flags take precedence");
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--method", method, "lcu | gqsp | gqsvt")->check(CLI::IsMember({"lcu", "gqsp", "gqsvt"}));
  app.add_option("--projector", projector, "n | sz | s2 | s_ms")->check(CLI::IsMember({"n", "sz", "s2", "s_ms"}));
  app.add_option("--n-so", cfg.n_so, "number of spin orbitals (even)");
  app.add_option("--target", target, "N_elec for n, M_S for sz, S for s2 and s_ms");
  app.add_option("--ms", ms, "M_S for the s_ms projector");
  app.add_option("--n-phi", cfg.n_phi, "Fourier nodes (0 = smallest exact grid)");
  app.add_option("--n-beta", cfg.n_beta, "Gauss-Legendre nodes in beta (0 = recommended)");
  app.add_option("--eps-r", eps_r, "total rotation synthesis error");
  app.add_option("--in", cfg.in, "input state JSON");
  app.add_option("--out", cfg.out, "output file (state JSON or data path for --gnuplot)");
  app.add_option("--gnuplot", cfg.gnuplot, "write a gnuplot script for the emitted table");
  app.add_option("--init", cfg.init, "uniform | sector | random")->check(CLI::IsMember({"uniform", "sector", "random"}));
  app.add_option("--seed", cfg.seed, "seed for --init random");
  app.add_option("--jobs", cfg.jobs, "parallel sweep points")->check(CLI::PositiveNumber);
  app.add_flag("--verify", cfg.verify, "check against the dense or sector-mask oracle");
  app.add_option("--n-so-list", cfg.n_so_list, "N_SO values for resources")->delimiter(',');
  app.add_option("--eps-list", cfg.eps_list, "eps_r values for scan-precision")->delimiter(',');
  app.add_option("--sweep", cfg.sweep, "scan-nodes axis: phi | beta")->check(CLI::IsMember({"phi", "beta"}));
  app.add_option("--max-nodes", cfg.max_nodes, "largest node count for scan-nodes");
  app.add_option("--rounds", cfg.rounds, "amplification rounds for aa-demo (-1 = planned)");
  app.add_option("--node-rule", node_rule, "exact | full")->check(CLI::IsMember({"exact", "full"}));
  app.add_option("--n-orbitals", cfg.n_orbitals, "femoco custom row: spatial orbitals");
  app.add_option("--n-elec", cfg.n_elec, "femoco custom row: electrons");

  const std::map<std::string, std::string> commands = {
      {"project", "apply a projector to a state"},
      {"scan-nodes", "fidelity versus quadrature node count"},
      {"scan-precision", "fidelity versus rotation synthesis error"},
      {"resources", "gate counts and scaling fits"},
      {"femoco", "T-count estimates for FeMoco sector preparation"},
      {"aa-demo", "amplitude amplification on a projected state"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();
  CLI::App* phases = app.add_subcommand("phases", "phase factor utilities");
  phases->fallthrough();
  phases->require_subcommand(1);
  phases->add_subcommand("export", "print GQSP/GQSVT phase factors as JSON")->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.method = parse_method(method);
    cfg.projector = parse_projector(projector);
    cfg.node_rule = node_rule == "full" ? NodeRule::Full : NodeRule::Exact;
    cfg.target = target;
    cfg.ms = ms;
    cfg.eps_r = eps_r;
    CLI::App* sub = app.get_subcommands().front();
    cfg.subcommand = sub->get_name() == "phases" ? "phases export" : sub->get_name();
    return run(cfg, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
