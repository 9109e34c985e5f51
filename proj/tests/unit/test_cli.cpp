// Copyright 2026 The pathcell Authors
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

#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/// Runs the CLI through the shell; `env` is prepended verbatim.
Run cli(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  const std::string base = "/tmp/pathcell_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++);
  const std::string cmd = env + " '" PATHCELL_CLI "' " + args + " >" + base + ".out 2>" + base + ".err";
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(base + ".out");
  r.err = slurp(base + ".err");
  std::remove((base + ".out").c_str());
  std::remove((base + ".err").c_str());
  return r;
}

std::string data(const char* name) { return std::string("'") + PATHCELL_TEST_DATA + "/" + name + "'"; }

}  // namespace

TEST_CASE("cli homology") {
  Run r = cli("homology --json " + data("diamond.dg"));
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["betti"] == json::array({1, 0, 0}));
  r = cli("homology " + data("cycle3.dg"));
  CHECK(r.code == 0);
  CHECK(r.out.find("betti: [1,1") != std::string::npos);
  r = cli("homology --json --coeff zp --prime 2 --max-dim 1 " + data("cycle3.dg"));
  REQUIRE(r.code == 0);
  j = json::parse(r.out);
  CHECK(j["p"] == 2);
  CHECK(j["betti"] == json::array({1, 1}));
}

TEST_CASE("cli exit codes") {
  Run r = cli("homology " + data("broken.dg"));
  CHECK(r.code == 1);
  CHECK(r.err.find("error:") != std::string::npos);
  CHECK(cli("homology /nonexistent.dg").code == 1);
  CHECK(cli("homology --coeff r " + data("diamond.dg")).code == 1);
  CHECK(cli("homology --coeff zp " + data("diamond.dg")).code == 1);
  CHECK(cli("homology --coeff zp --prime 9 " + data("diamond.dg")).code == 1);
  CHECK(cli("no-such-command").code == 1);
  CHECK(cli("lefschetz --map a:b,b:a,c:c " + data("cycle3.dg")).code == 1);
  CHECK(cli("homotopy-check --f a:a,b:b " + data("interval.dg") + " " + data("diamond.dg")).code == 1);
  CHECK(cli("--help").code == 0);
}

TEST_CASE("cli threads") {
  const std::string args = "basis --json " + data("octahedron.dg");
  const Run one = cli(args, "PATHCELL_THREADS=1");
  const Run four = cli(args, "PATHCELL_THREADS=4");
  REQUIRE(one.code == 0);
  CHECK(one.out == four.out);
  CHECK(cli(args + " --threads 3").out == one.out);
  CHECK(cli(args, "PATHCELL_THREADS=0").code == 1);
  CHECK(cli(args, "PATHCELL_THREADS=many").code == 1);
  CHECK(cli(args + " --threads 2", "PATHCELL_THREADS=many").code == 0);
}

TEST_CASE("cli subcommands") {
  CHECK(json::parse(cli("omega --json " + data("diamond.dg")).out)["omega_ranks"][2] == 1);
  CHECK(json::parse(cli("cup --json " + data("octahedron.dg")).out)["ok"] == true);
  CHECK(json::parse(cli("sphere-check --json " + data("octahedron.dg")).out)["ok"] == true);
  CHECK(json::parse(cli("subdivide --json " + data("diamond.dg")).out)["ok"] == true);
  CHECK(json::parse(cli("poincare-check --json " + data("alternating_square.dg")).out)["passed"] == true);
  CHECK(json::parse(cli("cw-export --json " + data("diamond.dg")).out)["cells"].size() == 9);
  CHECK(json::parse(cli("cohomology --json " + data("cycle4.dg")).out)["betti"][1] == 1);
  CHECK(json::parse(cli("clique --json " + data("cycle4.ug")).out)["agree"] == true);
  CHECK(json::parse(cli("cech --json " + data("cycle5.ug")).out)["good"] == true);
  CHECK(json::parse(cli("lefschetz --json --map 1:2,2:3,3:1 " + data("k3.ug")).out)["number"] == "1");
  CHECK(json::parse(cli("lefschetz --json --map a:b,b:c,c:a " + data("cycle3.dg")).out)["number"] == "0");
  CHECK(json::parse(cli("kunneth --json --max-dim 2 " + data("interval.dg") + " " + data("cycle3.dg")).out)["ok"] ==
        true);
  const json h = json::parse(cli("homotopy-check --json " + data("interval.dg") + " " + data("diamond.dg")).out);
  CHECK(h["ok"] == true);
  CHECK(h["compared"] > 0);
  const json b = json::parse(cli("bench --json --family dipath --sizes 10,20 --k 2").out);
  CHECK(b["sizes"] == json::array({10, 20}));
  CHECK(json::parse(cli("corpus --json --max-vertices 3").out)["count"] == 20);
  CHECK(json::parse(cli("corpus --json --graphs --max-vertices 4").out)["count"] == 18);
}
