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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

namespace ergo::cli {

/// Shortest round-trip text is not stable across libraries; fixtures use %.17g.
std::string format_real(double x);

using Cell = std::variant<double, long long, std::string, std::optional<double>>;

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}
  void add(std::vector<Cell> row);
  void write(const std::filesystem::path& path) const;
  std::size_t rows() const { return rows_.size(); }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<Cell>> rows_;
};

enum class Relation { le, ge, lt, eq, in_range };

struct Verdict {
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  double upper = 0.0;  // in_range only
  Relation relation = Relation::le;
  bool pass = false;
};

/// One per subcommand invocation; becomes <out>/<subcommand>.json.
class Report {
 public:
  Report(std::string subcommand, nlohmann::json config);

  Verdict& check(std::string name, double value, Relation rel, double bound, double upper = 0.0);
  Verdict& check_true(std::string name, bool ok);

  nlohmann::json& results() { return results_; }
  const std::vector<Verdict>& verdicts() const { return verdicts_; }
  bool all_pass() const;

  nlohmann::json to_json() const;
  void write(const std::filesystem::path& dir) const;
  void print(std::ostream& out) const;

 private:
  std::string subcommand_;
  nlohmann::json config_;
  nlohmann::json results_ = nlohmann::json::object();
  std::vector<Verdict> verdicts_;
};

nlohmann::json matrix_json(const Eigen::MatrixXcd& m);

}  // namespace ergo::cli
