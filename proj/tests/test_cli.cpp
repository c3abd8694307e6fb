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

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "symproj/amp.hpp"
#include "symproj/cli.hpp"
#include "test_util.hpp"

namespace symproj {
namespace {

RunConfig config(const std::string& cmd, Method m, Projector p, int n) {
  RunConfig c;
  c.subcommand = cmd;
  c.method = m;
  c.projector = p;
  c.n_so = n;
  return c;
}

int run_capture(const RunConfig& c, std::string& out, std::string& err) {
  std::ostringstream o, e;
  const int rc = run(c, o, e);
  out = o.str();
  err = e.str();
  return rc;
}

TEST(Cli, SectorDefaults) {
  RunConfig c = config("project", Method::Lcu, Projector::N, 6);
  Sector s = resolve_sector(c);
  EXPECT_EQ(s.n_elec, 3);
  EXPECT_EQ(s.n_phi, min_nodes_n(6, 3));
  c.projector = Projector::SMs;
  c.target = 1.5;
  c.ms = 0.5;
  s = resolve_sector(c);
  EXPECT_EQ(s.s.twice, 3);
  EXPECT_EQ(s.m_s.twice, 1);
  EXPECT_EQ(s.n_beta, recommended_n_beta(HalfInt{3}));
  c.ms = 1.0;
  EXPECT_THROW(resolve_sector(c), std::invalid_argument);
}

TEST(Cli, RejectsUnsupportedPairs) {
  EXPECT_THROW(validate(config("project", Method::Lcu, Projector::S2, 4)), std::invalid_argument);
  EXPECT_THROW(validate(config("project", Method::Gqsvt, Projector::SMs, 4)), std::invalid_argument);
  EXPECT_THROW(validate(config("project", Method::Lcu, Projector::Sz, 5)), std::invalid_argument);
  EXPECT_NO_THROW(validate(config("project", Method::Gqsvt, Projector::S2, 4)));
}

TEST(Cli, BuiltProjectorsMatchOracle) {
  for (auto m : {Method::Lcu, Method::Gqsp, Method::Gqsvt}) {
    for (auto p : {Projector::N, Projector::Sz, Projector::S2, Projector::SMs}) {
      RunConfig c = config("project", m, p, 4);
      if (p == Projector::S2 || p == Projector::SMs) c.target = 1;
      try {
        validate(c);
      } catch (const std::invalid_argument&) {
        continue;
      }
      const BlockEncoding be = build_projector(c);
      EXPECT_LT(testing::op_diff(be.alpha * block_extract(be), oracle_projector(c)), 1e-6)
          << to_string(m) << " " << to_string(p);
    }
  }
}

TEST(Cli, ProjectReportsAndVerifies) {
  RunConfig c = config("project", Method::Gqsp, Projector::Sz, 6);
  c.verify = true;
  std::string out, err;
  ASSERT_EQ(run_capture(c, out, err), 0) << err;
  const auto j = nlohmann::json::parse(out);
  EXPECT_TRUE(j.at("verified").get<bool>());
  EXPECT_NEAR(j.at("weight").get<double>(), 20.0 / 64, 1e-9);
  EXPECT_NEAR(j.at("expectation").at("Sz").get<double>(), 0, 1e-12);
}

TEST(Cli, ProjectFailsOnEmptySector) {
  RunConfig c = config("project", Method::Lcu, Projector::N, 4);
  c.target = 2;
  c.init = "sector";
  c.projector = Projector::N;
  RunConfig other = c;
  other.target = 1;
  // Input restricted to N = 2, projection onto N = 1.
  const Statevector psi = initial_state(c);
  const std::string path = ::testing::TempDir() + "/cli_state.json";
  {
    std::ofstream f(path);
    f << to_json(psi);
  }
  other.in = path;
  other.init = "uniform";
  std::string out, err;
  EXPECT_EQ(run_capture(other, out, err), 1);
  EXPECT_NE(err.find("no overlap"), std::string::npos);
}

TEST(Cli, ScanNodesSaturates) {
  RunConfig c = config("scan-nodes", Method::Lcu, Projector::Sz, 8);
  c.verify = true;
  c.jobs = 2;
  std::string out, err;
  ASSERT_EQ(run_capture(c, out, err), 0) << err;
  std::istringstream lines(out);
  std::string header, row;
  std::getline(lines, header);
  EXPECT_EQ(header, "nodes,fidelity,probability,s2");
  int rows = 0;
  while (std::getline(lines, row)) ++rows;
  EXPECT_EQ(rows, exact_nodes_sz(8, HalfInt{0}) + 3);
}

TEST(Cli, ScanPrecisionRows) {
  RunConfig c = config("scan-precision", Method::Lcu, Projector::Sz, 4);
  c.eps_list = {0.1, 0.01};
  std::string out, err;
  ASSERT_EQ(run_capture(c, out, err), 0);
  EXPECT_NE(out.find("0.01,select+prep,"), std::string::npos);
}

TEST(Cli, ResourcesAndFemoco) {
  RunConfig c = config("resources", Method::Gqsp, Projector::Sz, 4);
  c.n_so_list = {8, 16};
  std::string out, err;
  ASSERT_EQ(run_capture(c, out, err), 0);
  EXPECT_EQ(out.rfind("method,projector,n_so,cnot,t,ancilla,eps_r", 0), 0u);
  EXPECT_NE(err.find("fit T"), std::string::npos);
  RunConfig f = config("femoco", Method::Gqsp, Projector::SMs, 4);
  ASSERT_EQ(run_capture(f, out, err), 0);
  EXPECT_EQ(nlohmann::json::parse(out).size(), 3u);
}

TEST(Cli, AmplificationDemo) {
  RunConfig c = config("aa-demo", Method::Lcu, Projector::N, 6);
  c.target = 1;
  c.verify = true;
  std::string out, err;
  ASSERT_EQ(run_capture(c, out, err), 0) << err;
  const auto j = nlohmann::json::parse(out);
  EXPECT_EQ(j.at("m").get<int>(), plan(6.0 / 64).m);
  EXPECT_LT(j.at("difference").get<double>(), 1e-9);
}

TEST(Cli, PhasesExport) {
  RunConfig c = config("phases export", Method::Gqsp, Projector::Sz, 6);
  std::string out, err;
  ASSERT_EQ(run_capture(c, out, err), 0);
  auto j = nlohmann::json::parse(out);
  EXPECT_EQ(j.at("thetas").size(), static_cast<std::size_t>(exact_nodes_sz(6, HalfInt{0})));
  EXPECT_LT(j.at("round_trip_residual").get<double>(), 1e-9);
  c.method = Method::Gqsvt;
  c.projector = Projector::S2;
  ASSERT_EQ(run_capture(c, out, err), 0);
  j = nlohmann::json::parse(out);
  EXPECT_EQ(j.at("degree").get<int>(), 2 * 3);
  c.method = Method::Lcu;
  c.projector = Projector::Sz;
  EXPECT_THROW(run_capture(c, out, err), std::invalid_argument);
}

TEST(Cli, UnknownSubcommand) {
  std::string out, err;
  EXPECT_THROW(run_capture(config("frobnicate", Method::Lcu, Projector::Sz, 4), out, err), std::invalid_argument);
}

}  // namespace
}  // namespace symproj
