// Copyright 2026 The ergoqc Authors
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

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "ergo/cli.hpp"
#include "ergo/linalg.hpp"

using namespace ergo;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / ("ergoqc_test_" + name);
  fs::remove_all(d);
  return d;
}

struct Run {
  int code;
  std::string out, err;
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json read_json(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in);
  return json::parse(in);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("angle parsing") {
  CHECK(cli::parse_angle("1.25") == 1.25);
  CHECK(cli::parse_angle("pi") == doctest::Approx(kPi));
  CHECK(cli::parse_angle("-pi/3") == doctest::Approx(-kPi / 3));
  CHECK(cli::parse_angle("0.25pi") == doctest::Approx(kPi / 4));
  CHECK(cli::parse_angle("3pi/4") == doctest::Approx(0.75 * kPi));
  CHECK(cli::parse_angle("acos(0.25)") == doctest::Approx(std::acos(0.25)));
  CHECK(cli::parse_angle("asin(-1)") == doctest::Approx(-kPi / 2));
  for (const char* bad : {"", "pix", "pi/0", "acos(2)", "2..1", "pi/"}) {
    CHECK_THROWS_AS(cli::parse_angle(bad), PreconditionError);
  }
}

TEST_CASE("configspace dump prints one word per configuration") {
  const fs::path d = fresh_dir("dump");
  const Run r = invoke({"--out", d.string(), "configspace", "--n", "3", "--dump"});
  CHECK(r.code == cli::kPass);
  std::istringstream lines(r.out);
  std::vector<std::string> words;
  for (std::string w; std::getline(lines, w);) words.push_back(w);
  CHECK(words == std::vector<std::string>{"0011", "0101", "0110", "1001", "1010", "1100"});
  CHECK(r.err.find("PASS configspace.count_equals_binomial") != std::string::npos);
}

TEST_CASE("JSON carries version, config echo and verdicts") {
  const fs::path d = fresh_dir("json");
  REQUIRE(invoke({"--out", d.string(), "walk", "--m", "16", "--k", "4"}).code == cli::kPass);
  const json j = read_json(d / "walk.json");
  CHECK(j.at("tool-version") == cli::kToolVersion);
  CHECK(j.at("format-version") == cli::kFormatVersion);
  CHECK(j.at("config-echo").at("m") == 16);
  CHECK(j.at("config-echo").at("seed") == 0);
  CHECK(j.at("verdicts").size() >= 4);
  CHECK(j.at("results").at("t_star").get<double>() <= 32.0);
  CHECK(slurp(d / "walk.csv").rfind("t,E,V,cheb_bound,exact_prob\n", 0) == 0);
}

TEST_CASE("holonomy gate report") {
  const fs::path d = fresh_dir("holonomy");
  const Run r = invoke({"--out", d.string(), "holonomy", "--phi", "0.25pi", "--axis", "x", "--l", "400"});
  CHECK(r.code == cli::kPass);
  const json g = read_json(d / "holonomy.json").at("results").at("gates").at(0);
  CHECK(g.at("fidelity").get<double>() >= 0.999);
  CHECK(g.at("implemented").size() == 2);
}

TEST_CASE("exit codes") {
  const fs::path d = fresh_dir("codes");
  CHECK(invoke({"--out", d.string(), "nonsense"}).code == cli::kBadInput);
  CHECK(invoke({"--out", d.string()}).code == cli::kBadInput);
  const Run bad = invoke({"--out", d.string(), "configspace", "--n", "3", "--k", "3"});
  CHECK(bad.code == cli::kBadInput);
  CHECK(bad.err.find("k") != std::string::npos);
  CHECK(invoke({"--out", d.string(), "holonomy", "--axis", "z"}).code == cli::kBadInput);
  CHECK(invoke({"--out", d.string(), "walk", "--m", "abc"}).code == cli::kBadInput);
  // An unreachable fidelity threshold is a failed check, not bad input.
  const Run fail = invoke({"--out", d.string(), "holonomy", "--l", "50", "--min-fidelity", "1.1"});
  CHECK(fail.code == cli::kCheckFailed);
  CHECK(fail.out.find("FAIL holonomy.") != std::string::npos);
}

TEST_CASE("config file supplies options the command line does not") {
  const fs::path d = fresh_dir("config");
  fs::create_directories(d);
  std::ofstream(d / "cfg.json") << R"({"seed": 7, "m": 8, "walk": {"k": 2, "points": 128}})";
  REQUIRE(invoke({"--out", d.string(), "--config", (d / "cfg.json").string(), "walk", "--m", "12"}).code ==
          cli::kPass);
  const json echo = read_json(d / "walk.json").at("config-echo");
  CHECK(echo.at("m") == 12);
  CHECK(echo.at("k") == 2);
  CHECK(echo.at("points") == 128);
  CHECK(echo.at("seed") == 7);

  std::ofstream(d / "broken.json") << "{not json";
  CHECK(invoke({"--out", d.string(), "--config", (d / "broken.json").string(), "walk"}).code == cli::kBadInput);
  CHECK(invoke({"--out", d.string(), "--config", (d / "missing.json").string(), "walk"}).code == cli::kBadInput);
}

TEST_CASE("environment variable sets the output directory") {
  const fs::path d = fresh_dir("env");
  REQUIRE(setenv(cli::kOutDirEnv, d.string().c_str(), 1) == 0);
  const int code = invoke({"margolus"}).code;
  unsetenv(cli::kOutDirEnv);
  CHECK(code == cli::kPass);
  CHECK(fs::exists(d / "margolus.json"));
  CHECK(fs::exists(d / "margolus.csv"));
}

TEST_CASE("identical seeded runs give identical CSV bytes") {
  const fs::path a = fresh_dir("det_a"), b = fresh_dir("det_b");
  for (const fs::path& d : {a, b}) {
    REQUIRE(invoke({"--out", d.string(), "--seed", "11", "layout", "--random", "10"}).code == cli::kPass);
  }
  CHECK(slurp(a / "layout.csv") == slurp(b / "layout.csv"));
  const fs::path c = fresh_dir("det_c");
  REQUIRE(invoke({"--out", c.string(), "--seed", "12", "layout", "--random", "10"}).code == cli::kPass);
  CHECK(slurp(a / "layout.csv") != slurp(c / "layout.csv"));
}
