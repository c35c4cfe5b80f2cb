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

#include "output.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "ergo/cli.hpp"
#include "ergo/linalg.hpp"

namespace ergo::cli {

namespace {

const char* relation_text(Relation r) {
  switch (r) {
    case Relation::le: return "<=";
    case Relation::ge: return ">=";
    case Relation::lt: return "<";
    case Relation::eq: return "==";
    case Relation::in_range: return "in";
  }
  return "?";
}

// JSON numbers cannot hold inf/nan.
nlohmann::json real_json(double x) {
  if (std::isfinite(x)) return x;
  return format_real(x);
}

}  // namespace

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void CsvTable::add(std::vector<Cell> row) {
  if (row.size() != header_.size()) throw PreconditionError("csv: row width differs from header");
  rows_.push_back(std::move(row));
}

void CsvTable::write(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot write " + path.string());
  for (std::size_t i = 0; i < header_.size(); ++i) out << (i ? "," : "") << header_[i];
  out << '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              out << format_real(v);
            } else if constexpr (std::is_same_v<T, long long>) {
              out << v;
            } else if constexpr (std::is_same_v<T, std::string>) {
              out << v;
            } else if (v) {
              out << format_real(*v);
            }
          },
          row[i]);
    }
    out << '\n';
  }
}

Report::Report(std::string subcommand, nlohmann::json config)
    : subcommand_(std::move(subcommand)), config_(std::move(config)) {}

Verdict& Report::check(std::string name, double value, Relation rel, double bound, double upper) {
  Verdict v{std::move(name), value, bound, upper, rel, false};
  switch (rel) {
    case Relation::le: v.pass = value <= bound; break;
    case Relation::ge: v.pass = value >= bound; break;
    case Relation::lt: v.pass = value < bound; break;
    case Relation::eq: v.pass = value == bound; break;
    case Relation::in_range: v.pass = value >= bound && value <= upper; break;
  }
  verdicts_.push_back(std::move(v));
  return verdicts_.back();
}

Verdict& Report::check_true(std::string name, bool ok) {
  return check(std::move(name), ok ? 1.0 : 0.0, Relation::eq, 1.0);
}

bool Report::all_pass() const {
  for (const auto& v : verdicts_) {
    if (!v.pass) return false;
  }
  return true;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["tool-version"] = kToolVersion;
  j["format-version"] = kFormatVersion;
  j["subcommand"] = subcommand_;
  j["config-echo"] = config_;
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& v : verdicts_) {
    nlohmann::json e{{"name", v.name},
                     {"value", real_json(v.value)},
                     {"relation", relation_text(v.relation)},
                     {"bound", real_json(v.bound)},
                     {"pass", v.pass}};
    if (v.relation == Relation::in_range) e["upper"] = real_json(v.upper);
    vs.push_back(std::move(e));
  }
  j["verdicts"] = std::move(vs);
  j["results"] = results_;
  return j;
}

void Report::write(const std::filesystem::path& dir) const {
  std::ofstream out(dir / (subcommand_ + ".json"), std::ios::binary);
  if (!out) throw PreconditionError("cannot write " + (dir / (subcommand_ + ".json")).string());
  out << to_json().dump(2) << '\n';
}

void Report::print(std::ostream& out) const {
  for (const auto& v : verdicts_) {
    out << (v.pass ? "PASS " : "FAIL ") << subcommand_ << '.' << v.name << ": " << format_real(v.value)
        << ' ' << relation_text(v.relation) << ' ';
    if (v.relation == Relation::in_range) {
      out << '[' << format_real(v.bound) << ", " << format_real(v.upper) << ']';
    } else {
      out << format_real(v.bound);
    }
    out << '\n';
  }
}

nlohmann::json matrix_json(const Eigen::MatrixXcd& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace ergo::cli
