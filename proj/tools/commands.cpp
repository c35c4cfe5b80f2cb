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

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ergo/classical_walk.hpp"
#include "ergo/cli.hpp"
#include "ergo/configspace.hpp"
#include "ergo/fermion_walk.hpp"
#include "ergo/hamiltonian.hpp"
#include "ergo/holonomy.hpp"
#include "ergo/layout.hpp"
#include "ergo/perturbation.hpp"
#include "output.hpp"

namespace ergo::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Context {
  fs::path out_dir;
  std::uint64_t seed = 0;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;
  // Set when a command prints payload lines to stdout.
  bool verdicts_to_err = false;
};

using Runner = std::function<Report(Context&, const json& echo)>;

struct Registered {
  CLI::App* app = nullptr;
  Runner run;
};

std::vector<double> parse_angles(const std::vector<std::string>& v) {
  std::vector<double> out;
  for (const auto& s : v) out.push_back(parse_angle(s));
  return out;
}

Axis parse_axis(const std::string& s) {
  if (s == "x") return Axis::x;
  if (s == "y") return Axis::y;
  throw PreconditionError("axis must be x or y, got '" + s + "'");
}

ControlSide parse_side(const std::string& s) {
  if (s == "below") return ControlSide::below;
  if (s == "above") return ControlSide::above;
  throw PreconditionError("side must be below or above, got '" + s + "'");
}

json typed(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  char* end = nullptr;
  const long long i = std::strtoll(s.c_str(), &end, 10);
  if (!s.empty() && end == s.c_str() + s.size()) return i;
  const double d = std::strtod(s.c_str(), &end);
  if (!s.empty() && end == s.c_str() + s.size()) return d;
  return s;
}

json echo_options(const CLI::App* app) {
  json j = json::object();
  for (const CLI::Option* opt : app->get_options()) {
    if (opt->get_lnames().empty()) continue;
    const std::string& name = opt->get_lnames().front();
    if (name == "help") continue;
    if (opt->get_type_size() == 0) {
      j[name] = opt->count() > 0;
    } else if (opt->count() > 0) {
      const auto& r = opt->results();
      if (opt->get_expected_max() > 1) {
        json a = json::array();
        for (const auto& x : r) a.push_back(typed(x));
        j[name] = std::move(a);
      } else {
        j[name] = r.empty() ? json(true) : typed(r.back());
      }
    } else if (opt->get_expected_max() > 1) {
      std::string d = opt->get_default_str();
      if (d.size() >= 2 && d.front() == '[' && d.back() == ']') d = d.substr(1, d.size() - 2);
      json a = json::array();
      std::stringstream ss(d);
      for (std::string x; std::getline(ss, x, ',');) a.push_back(typed(x));
      j[name] = std::move(a);
    } else {
      j[name] = typed(opt->get_default_str());
    }
  }
  return j;
}

std::vector<double> linear_grid(double t_max, int points) {
  if (points < 2) throw PreconditionError("need at least 2 time points");
  if (!(t_max > 0.0)) throw PreconditionError("t-max must be positive");
  std::vector<double> t;
  for (int i = 0; i < points; ++i) t.push_back(t_max * i / (points - 1));
  return t;
}

// ---------------------------------------------------------------- configspace

void add_configspace(CLI::App& root, std::vector<Registered>& reg) {
  struct P { int n = 3, k = 1; bool dump = false; };
  auto p = std::make_shared<P>();
  CLI::App* app = root.add_subcommand("configspace", "Enumerate chain configurations and moves");
  app->add_option("--n", p->n, "Lattice size n (2n-1 rows)");
  app->add_option("--k", p->k, "Circuit region width");
  app->add_flag("--dump", p->dump, "Print the words, one per line");
  reg.push_back({app, [p](Context& c, const json& echo) {
    const LatticeSpec spec{p->n, p->k};
    spec.validate();
    Report rep("configspace", echo);
    const auto configs = enumerate_configs(spec);
    CsvTable csv({"index", "word", "weight", "left_ones", "moves", "all_outside"});
    bool symmetric = true, outside_ok = true;
    long long outside = 0;
    for (std::size_t i = 0; i < configs.size(); ++i) {
      const auto& cfg = configs[i];
      const auto moves = allowed_moves(cfg);
      for (const auto& m : moves) {
        const auto back = allowed_moves(m);
        symmetric = symmetric && std::find(back.begin(), back.end(), cfg) != back.end();
      }
      const bool out = all_outside_region(cfg, spec);
      bool decoded = true;
      for (const auto& s : decode_positions(cfg, spec)) decoded = decoded && s.column() > spec.k;
      outside_ok = outside_ok && decoded == out;
      outside += out;
      csv.add({static_cast<long long>(i), cfg.word(), static_cast<long long>(cfg.weight()),
               static_cast<long long>(cfg.left_ones()), static_cast<long long>(moves.size()),
               static_cast<long long>(out)});
      if (p->dump) *c.out << cfg.word() << '\n';
    }
    csv.write(c.out_dir / "configspace.csv");
    const int m = spec.m();
    rep.check("count_equals_binomial", static_cast<double>(configs.size()), Relation::eq,
              static_cast<double>(binomial(2 * m, m)));
    rep.check_true("moves_symmetric", symmetric);
    rep.check_true("outside_matches_decoded_columns", outside_ok);
    rep.results() = {{"configurations", configs.size()}, {"all_outside", outside}};
    c.verdicts_to_err = p->dump;
    return rep;
  }});
}

// ----------------------------------------------------------------------- walk

void add_walk(CLI::App& root, std::vector<Registered>& reg) {
  struct P { int m = 16, k = 4, points = 512; double t_max = 0.0; bool no_exact = false; };
  auto p = std::make_shared<P>();
  CLI::App* app = root.add_subcommand("walk", "Counting statistics of the free-fermion walk");
  app->add_option("--m", p->m, "Half the word length");
  app->add_option("--k", p->k, "Circuit region width");
  app->add_option("--points", p->points, "Time grid points");
  app->add_option("--t-max", p->t_max, "Grid end, 0 for 8m");
  app->add_flag("--no-exact", p->no_exact, "Skip the many-body outside probability");
  reg.push_back({app, [p](Context& c, const json& echo) {
    Report rep("walk", echo);
    const auto grid = default_time_grid(p->m, p->points, p->t_max);
    const bool exact = !p->no_exact && binomial(2 * p->m, p->m) <= kExactSectorCap;
    const WalkObservables w = walk_sweep(p->m, p->k, grid, exact);
    CsvTable csv({"t", "E", "V", "cheb_bound", "exact_prob"});
    double worst_excess = -INFINITY, e_min = INFINITY, e_max = -INFINITY;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      csv.add({grid[i], w.expectation[i], w.variance[i], w.chebyshev_lower[i], w.outside_probability[i]});
      worst_excess = std::max(worst_excess, w.variance[i] - w.expectation[i]);
      e_min = std::min(e_min, w.expectation[i]);
      e_max = std::max(e_max, w.expectation[i]);
    }
    csv.write(c.out_dir / "walk.csv");
    rep.check("variance_minus_expectation_max", worst_excess, Relation::le, 1e-12);
    rep.check("expectation_min", e_min, Relation::ge, -1e-12);
    rep.check("expectation_max", e_max, Relation::le, p->m + 1e-12);
    json res{{"m", p->m}, {"k", p->k}, {"grid_points", grid.size()}};
    try {
      const PassingTime pt = passing_time_check(p->m, p->k, grid);
      res["t_star"] = pt.t_star;
      res["expectation_at_t_star"] = pt.expectation;
      res["variance_at_t_star"] = pt.variance;
      res["chebyshev_bound"] = pt.chebyshev_bound;
      if (pt.exact_outside) res["exact_outside"] = *pt.exact_outside;
      rep.check("t_star", pt.t_star, Relation::le, 8.0 * p->k);
      rep.check("chebyshev_bound", pt.chebyshev_bound, Relation::le, 12.0 / p->k);
    } catch (const GridExhausted& e) {
      res["t_star"] = nullptr;
      rep.check_true("passing_time_found", false);
      *c.err << e.what() << '\n';
    }
    rep.results() = res;
    return rep;
  }});
}

// -------------------------------------------------------------------- timeavg

void add_timeavg(CLI::App& root, std::vector<Registered>& reg) {
  struct P { std::vector<int> m{8, 16, 32, 64}; double c_mean = 1.0, c_var = 1.0, slack = 2.0; };
  auto p = std::make_shared<P>();
  CLI::App* app = root.add_subcommand("timeavg", "Time-averaged statistics and the ergodic readout bound");
  app->add_option("--m", p->m, "Sweep of m (multiples of 4)")->delimiter(',');
  app->add_option("--c-mean", p->c_mean, "Bound on |E - m/2| / sqrt(m)");
  app->add_option("--c-var", p->c_var, "Bound on V / m");
  app->add_option("--slack", p->slack, "Slack of the 1/m ratio test");
  reg.push_back({app, [p](Context& c, const json& echo) {
    Report rep("timeavg", echo);
    if (p->m.empty()) throw PreconditionError("timeavg: need at least one m");
    CsvTable csv({"m", "E", "V", "mean_deviation_over_sqrt_m", "variance_over_m", "chebyshev_bound",
                  "exact_inside"});
    double worst_mean = 0, worst_var = 0;
    json rows = json::array();
    std::vector<ErgodicReadout> all;
    for (int m : p->m) {
      const ErgodicReadout r = ergodic_readout_check(m);
      all.push_back(r);
      const double dev = std::abs(r.expectation - m / 2.0) / std::sqrt(m);
      worst_mean = std::max(worst_mean, dev);
      worst_var = std::max(worst_var, r.variance / m);
      csv.add({static_cast<long long>(m), r.expectation, r.variance, dev, r.variance / m, r.chebyshev_bound,
               r.exact_inside});
      rows.push_back({{"m", m}, {"expectation", r.expectation}, {"variance", r.variance},
                      {"chebyshev_bound", r.chebyshev_bound}});
    }
    csv.write(c.out_dir / "timeavg.csv");
    rep.check("mean_deviation_over_sqrt_m_max", worst_mean, Relation::le, p->c_mean);
    rep.check("variance_over_m_max", worst_var, Relation::le, p->c_var);
    if (all.size() >= 2) {
      const auto lo = std::min_element(all.begin(), all.end(), [](auto& a, auto& b) { return a.m < b.m; });
      const auto hi = std::max_element(all.begin(), all.end(), [](auto& a, auto& b) { return a.m < b.m; });
      rep.check("bound_ratio", hi->chebyshev_bound / lo->chebyshev_bound, Relation::le,
                p->slack * static_cast<double>(lo->m) / hi->m);
    }
    rep.results() = {{"sweep", rows}};
    return rep;
  }});
}

// --------------------------------------------------------------- passing-time

void add_passing_time(CLI::App& root, std::vector<Registered>& reg) {
  struct P { int m = 64; std::vector<int> k{4, 8, 16}; int points = 512; };
  auto p = std::make_shared<P>();
  CLI::App* app = root.add_subcommand("passing-time", "Time at which E_t(N) reaches 4k/3");
  app->add_option("--m", p->m, "Half the word length");
  app->add_option("--k", p->k, "Region widths")->delimiter(',');
  app->add_option("--points", p->points, "Time grid points");
  reg.push_back({app, [p](Context& c, const json& echo) {
    Report rep("passing-time", echo);
    CsvTable csv({"m", "k", "t_star", "E", "V", "chebyshev_bound", "bound_12_over_k", "exact_outside"});
    json rows = json::array();
    const auto grid = default_time_grid(p->m, p->points);
    for (int k : p->k) {
      const PassingTime pt = passing_time_check(p->m, k, grid);
      const std::string tag = "k" + std::to_string(k) + ".";
      csv.add({static_cast<long long>(p->m), static_cast<long long>(k), pt.t_star, pt.expectation, pt.variance,
               pt.chebyshev_bound, 12.0 / k, pt.exact_outside});
      rep.check(tag + "t_star", pt.t_star, Relation::le, 8.0 * k);
      rep.check(tag + "chebyshev_bound", pt.chebyshev_bound, Relation::le, 12.0 / k);
      json row{{"k", k}, {"t_star", pt.t_star}, {"chebyshev_bound", pt.chebyshev_bound}};
      if (pt.exact_outside) {
        rep.check(tag + "exact_outside", *pt.exact_outside, Relation::ge, std::max(0.5, 1.0 - 12.0 / k));
        row["exact_outside"] = *pt.exact_outside;
      }
      rows.push_back(std::move(row));
    }
    csv.write(c.out_dir / "passing-time.csv");
    rep.results() = {{"m", p->m}, {"sweep", rows}};
    return rep;
  }});
}

// ------------------------------------------------------------------- holonomy

json gate_json(const GateReport& g) {
  return {{"name", g.name},
          {"phi", g.phi},
          {"steps", g.steps},
          {"step_duration", g.step_duration},
          {"fidelity", g.fidelity},
          {"distance", g.distance},
          {"leakage", g.leakage},
          {"unitarity_defect", g.unitarity_defect},
          {"implemented", matrix_json(g.implemented)},
          {"target", matrix_json(g.target)}};
}

void add_holonomy(CLI::App& root, std::vector<Registered>& reg) {
  struct P {
    std::vector<std::string> phi{"0.25pi"};
    std::string axis = "x";
    std::vector<int> l{400};
    double tau = 5.0, jitter = 0.0, gap = 0.0, min_fidelity = 0.999;
    double max_jitter_shift = 5e-3, max_gap_shift = 1e-9;
  };
  auto p = std::make_shared<P>();
  CLI::App* app = root.add_subcommand("holonomy", "One-qubit stripe gate by loop integration");
  app->add_option("--phi", p->phi, "Stripe angles, e.g. 0.25pi,pi/3,acos(0.25)")->delimiter(',');
  app->add_option("--axis", p->axis, "x or y");
  app->add_option("--l", p->l, "Stripe lengths")->delimiter(',');
  app->add_option("--tau", p->tau, "Step duration");
  app->add_option("--jitter", p->jitter, "Relative step-duration jitter (uses --seed)");
  app->add_option("--gap", p->gap, "Idle time inserted between steps");
  app->add_option("--min-fidelity", p->min_fidelity, "Fidelity threshold at the largest l");
  app->add_option("--max-jitter-shift", p->max_jitter_shift, "Allowed fidelity change under jitter");
  app->add_option("--max-gap-shift", p->max_gap_shift, "Allowed distance change under gaps");
  reg.push_back({app, [p](Context& c, const json& echo) {
    Report rep("holonomy", echo);
    const Axis axis = parse_axis(p->axis);
    std::vector<int> ls = p->l;
    std::sort(ls.begin(), ls.end());
    if (ls.empty()) throw PreconditionError("holonomy: need at least one l");
    CsvTable csv({"phi", "axis", "l", "tau", "fidelity", "distance", "leakage", "unitarity_defect"});
    json gates = json::array();
    const auto phis = parse_angles(p->phi);
    for (double phi : phis) {
      const std::string tag = "phi=" + format_real(phi) + ".";
      double prev = -1.0;
      bool monotone = true;
      for (int l : ls) {
        const GateReport g = one_qubit_gate(phi, axis, l, p->tau);
        csv.add({phi, p->axis, static_cast<long long>(l), p->tau, g.fidelity, g.distance, g.leakage,
                 g.unitarity_defect});
        monotone = monotone && g.fidelity > prev;
        prev = g.fidelity;
        if (l == ls.back()) {
          gates.push_back(gate_json(g));
          rep.check(tag + "fidelity", g.fidelity, Relation::ge, p->min_fidelity);
          if (p->jitter > 0.0) {
            const GateReport j =
                one_qubit_gate(phi, axis, l, p->tau, Schedule::jittered(l, p->tau, p->jitter, c.seed));
            rep.check(tag + "jitter_fidelity_shift", std::abs(j.fidelity - g.fidelity), Relation::le,
                      p->max_jitter_shift);
            gates.back()["jittered"] = gate_json(j);
          }
          if (p->gap > 0.0) {
            Schedule s;
            s.gaps.assign(static_cast<std::size_t>(l - 1), p->gap);
            const GateReport q = one_qubit_gate(phi, axis, l, p->tau, s);
            rep.check(tag + "gap_distance_shift", linalg::phase_stripped_distance(q.implemented, g.implemented),
                      Relation::le, p->max_gap_shift);
          }
        }
      }
      if (ls.size() > 1) rep.check_true(tag + "fidelity_monotone_in_l", monotone);
    }
    csv.write(c.out_dir / "holonomy.csv");
    rep.results() = {{"gates", gates}};
    return rep;
  }});
}

void add_two_qubit(CLI::App& root, std::vector<Registered>& reg) {
  struct P {
    std::vector<std::string> phi{"0", "pi/6", "0.25pi"};
    int l = 400;
    double tau = 5.0, min_fidelity = 0.999, idle_tol = 1e-9;
    std::string side = "below";
  };
  auto p = std::make_shared<P>();
  CLI::App* app = root.add_subcommand("two-qubit", "Controlled stripe gate by loop integration");
  app->add_option("--phi", p->phi, "Stripe angles")->delimiter(',');
  app->add_option("--l", p->l, "Stripe length");
  app->add_option("--tau", p->tau, "Step duration");
  app->add_option("--side", p->side, "Control qubit below or above the target");
  app->add_option("--min-fidelity", p->min_fidelity, "Threshold for the active branch");
  app->add_option("--idle-tol", p->idle_tol, "Distance tolerance for the idle branch");
  reg.push_back({app, [p](Context& c, const json& echo) {
    Report rep("two-qubit", echo);
    const ControlSide side = parse_side(p->side);
    CsvTable csv({"phi", "side", "l", "full_fidelity", "idle_distance", "active_fidelity", "leakage"});
    json gates = json::array();
    for (double phi : parse_angles(p->phi)) {
      const TwoQubitReport r = two_qubit_gate(phi, p->l, p->tau, side);
      const GateReport& idle = side == ControlSide::below ? r.branch_down : r.branch_up;
      const GateReport& active = side == ControlSide::below ? r.branch_up : r.branch_down;
      const std::string tag = "phi=" + format_real(phi) + ".";
      csv.add({phi, p->side, static_cast<long long>(p->l), r.full.fidelity, idle.distance, active.fidelity,
               r.full.leakage});
      rep.check(tag + "idle_branch_distance", idle.distance, Relation::le, p->idle_tol);
      rep.check(tag + "active_branch_fidelity", active.fidelity, Relation::ge, p->min_fidelity);
      gates.push_back({{"full", gate_json(r.full)}, {"idle", gate_json(idle)}, {"active", gate_json(active)}});
    }
    csv.write(c.out_dir / "two-qubit.csv");
    rep.results() = {{"gates", gates}};
    return rep;
  }});
}

// --------------------------------------------------------------- perturbation

void add_lemma1(CLI::App& root, std::vector<Registered>& reg) {
  struct P { int n = 3; std::vector<double> E{1e4, 1e5, 1e6}; double slope = -0.5, slope_tol = 0.1; };
  auto p = std::make_shared<P>();
  CLI::App* app = root.add_subcommand("lemma1", "Distance of the low-energy block to H_eff");
  app->add_option("--n", p->n, "Lattice size");
  app->add_option("--E", p->E, "Coupling sweep")->delimiter(',');
  app->add_option("--slope", p->slope, "Expected log-log slope");
  app->add_option("--slope-tol", p->slope_tol, "Slope tolerance");
  reg.push_back({app, [p](Context& c, const json& echo) {
    Report rep("lemma1", echo);
    CsvTable csv({"E", "lhs", "rhs", "holds"});
    std::vector<double> es = p->E, lhs;
    std::sort(es.begin(), es.end());
    for (double E : es) {
      const BoundCheck b = lemma1_check(p->n, E);
      lhs.push_back(b.lhs);
      csv.add({E, b.lhs, b.rhs, static_cast<long long>(b.holds)});
      rep.check("E=" + format_real(E) + ".bound", b.lhs, Relation::le, b.rhs);
    }
    csv.write(c.out_dir / "lemma1.csv");
    json res{{"n", p->n}, {"lhs", lhs}};
    if (es.size() >= 2) {
      const double slope = loglog_slope(es, lhs);
      res["slope"] = slope;
      rep.check("loglog_slope", slope, Relation::in_range, p->slope - p->slope_tol, p->slope + p->slope_tol);
      rep.check("lhs_last_over_first", lhs.back() / lhs.front(), Relation::lt, 1.0);
    }
    rep.results() = res;
    return rep;
  }});
}

void add_theorem1(CLI::App& root, std::vector<Registered>& reg) {
  struct P { int n = 3; double E = 1e4, t_max = 10.0; int points = 32; };
  auto p = std::make_shared<P>();
  CLI::App* app = root.add_subcommand("theorem1", "State error of the effective evolution");
  app->add_option("--n", p->n, "Lattice size");
  app->add_option("--E", p->E, "Coupling");
  app->add_option("--t-max", p->t_max, "Last time");
  app->add_option("--points", p->points, "Time points");
  reg.push_back({app, [p](Context& c, const json& echo) {
    Report rep("theorem1", echo);
    const StateErrorResult r = theorem1_check(p->n, p->E, linear_grid(p->t_max, p->points));
    CsvTable csv({"t", "worst_lhs", "rhs"});
    for (std::size_t i = 0; i < r.times.size(); ++i) csv.add({r.times[i], r.worst_lhs[i], r.rhs[i]});
    csv.write(c.out_dir / "theorem1.csv");
    rep.check("max_margin", r.max_margin, Relation::le, 0.0);
    rep.results() = {{"max_lhs", r.max_lhs}, {"max_margin", r.max_margin}};
    return rep;
  }});
}

void add_self_energy(CLI::App& root, std::vector<Registered>& reg) {
  struct P { int n = 3; double E = 1e4, radius = 0.0; int samples = 10; };
  auto p = std::make_shared<P>();
  CLI::App* app = root.add_subcommand("self-energy", "Self-energy deviation from H_eff on a disk of z");
  app->add_option("--n", p->n, "Lattice size");
  app->add_option("--E", p->E, "Coupling");
  app->add_option("--samples", p->samples, "Random z samples besides z = 0 (uses --seed)");
  app->add_option("--radius", p->radius, "Disk radius, 0 for sqrt(E)");
  reg.push_back({app, [p](Context& c, const json& echo) {
    Report rep("self-energy", echo);
    const PerturbationSetup s = perturbation_setup(p->n, p->E);
    const double radius = p->radius > 0.0 ? p->radius : std::sqrt(p->E);
    const double bound = 4.0 * std::pow(p->n, 4) / p->E;
    std::mt19937_64 rng(c.seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<cd> zs{0.0};
    for (int i = 0; i < p->samples; ++i) zs.push_back(std::polar(radius * std::sqrt(u(rng)), 2 * kPi * u(rng)));
    CsvTable csv({"re_z", "im_z", "deviation", "bound", "neumann_norm"});
    double worst = 0.0;
    for (cd z : zs) {
      const double d = self_energy_deviation(s, z);
      worst = std::max(worst, d);
      csv.add({z.real(), z.imag(), d, bound, self_energy(s.split, s.k, z).neumann_norm});
    }
    csv.write(c.out_dir / "self-energy.csv");
    rep.check("max_deviation", worst, Relation::le, bound);
    rep.results() = {{"bound", bound}, {"max_deviation", worst}, {"radius", radius}};
    return rep;
  }});
}

// --------------------------------------------------------------------- layout

LogicalCircuit circuit_from_json(const json& j) {
  LogicalCircuit c;
  c.qubits = j.at("qubits").get<int>();
  for (const auto& g : j.at("gates")) {
    const std::string kind = g.at("kind").get<std::string>();
    const json& th = g.at("theta");
    const double theta = th.is_string() ? parse_angle(th.get<std::string>()) : th.get<double>();
    if (kind == "rot_x") {
      c.gates.push_back(LogicalGate::rot_x(g.at("target").get<int>(), theta));
    } else if (kind == "rot_y") {
      c.gates.push_back(LogicalGate::rot_y(g.at("target").get<int>(), theta));
    } else if (kind == "cphase") {
      c.gates.push_back(LogicalGate::cphase(g.at("control").get<int>(), g.at("target").get<int>(), theta));
    } else {
      throw PreconditionError("circuit: unknown gate kind '" + kind + "'");
    }
  }
  return c;
}

LogicalCircuit random_circuit(std::mt19937_64& rng, int qubits, int gates) {
  std::uniform_int_distribution<int> kind(0, qubits > 1 ? 2 : 1), qubit(1, qubits), dir(0, 1);
  std::uniform_real_distribution<double> angle(-2 * kPi, 2 * kPi);
  LogicalCircuit c{qubits, {}};
  for (int g = 0; g < gates; ++g) {
    const int k = kind(rng), q = qubit(rng);
    if (k == 0) {
      c.gates.push_back(LogicalGate::rot_x(q, angle(rng)));
    } else if (k == 1) {
      c.gates.push_back(LogicalGate::rot_y(q, angle(rng)));
    } else {
      const int other = q == 1 ? 2 : q == qubits ? qubits - 1 : (dir(rng) ? q + 1 : q - 1);
      c.gates.push_back(LogicalGate::cphase(q, other, angle(rng)));
    }
  }
  return c;
}

void add_layout(CLI::App& root, std::vector<Registered>& reg) {
  struct P {
    std::string circuit;
    int random = 0, qubits = 3, gates = 8, l = 3, n = 60, k = 59;
    double tol = 1e-9;
  };
  auto p = std::make_shared<P>();
  CLI::App* app = root.add_subcommand("layout", "Compile circuits to stripe layouts and check them");
  app->add_option("--circuit", p->circuit, "Circuit JSON file");
  app->add_option("--random", p->random, "Number of random circuits (uses --seed)");
  app->add_option("--qubits", p->qubits, "Qubits per random circuit");
  app->add_option("--gates", p->gates, "Maximum gates per random circuit");
  app->add_option("--l", p->l, "Stripe length");
  app->add_option("--n", p->n, "Lattice size");
  app->add_option("--k", p->k, "Circuit region width");
  app->add_option("--tol", p->tol, "Unitary distance tolerance");
  reg.push_back({app, [p](Context& c, const json& echo) {
    Report rep("layout", echo);
    const LatticeSpec spec{p->n, p->k};
    std::vector<LogicalCircuit> circuits;
    if (!p->circuit.empty()) {
      std::ifstream in(p->circuit);
      if (!in) throw PreconditionError("cannot read circuit file " + p->circuit);
      circuits.push_back(circuit_from_json(json::parse(in)));
    }
    std::mt19937_64 rng(c.seed);
    std::uniform_int_distribution<int> count(1, std::max(1, p->gates));
    for (int i = 0; i < p->random; ++i) circuits.push_back(random_circuit(rng, p->qubits, count(rng)));
    if (circuits.empty()) throw PreconditionError("layout: give --circuit or --random");
    CsvTable csv({"index", "gates", "stripes", "violations", "distance"});
    std::size_t violations = 0;
    double worst = 0.0;
    for (std::size_t i = 0; i < circuits.size(); ++i) {
      const CircuitLayout lay = compile(circuits[i], p->l, spec);
      const auto v = validate(lay);
      for (const auto& x : v) *c.err << "circuit " << i << " stripe " << x.stripe << ": " << x.rule << ": " << x.detail << '\n';
      const double d = linalg::phase_stripped_distance(layout_unitary(lay), circuit_unitary(circuits[i]));
      violations += v.size();
      worst = std::max(worst, d);
      csv.add({static_cast<long long>(i), static_cast<long long>(circuits[i].gates.size()),
               static_cast<long long>(lay.stripes.size()), static_cast<long long>(v.size()), d});
      if (i == 0) {
        std::ofstream(c.out_dir / "layout_layout.json", std::ios::binary) << layout_to_json(lay).dump(2) << '\n';
        std::ofstream(c.out_dir / "layout_map.txt", std::ios::binary) << text_map(lay);
      }
    }
    csv.write(c.out_dir / "layout.csv");
    rep.check("violations", static_cast<double>(violations), Relation::eq, 0.0);
    rep.check("max_unitary_distance", worst, Relation::le, p->tol);
    rep.results() = {{"circuits", circuits.size()}};
    return rep;
  }});
}

void add_margolus(CLI::App& root, std::vector<Registered>& reg) {
  struct P { int steps = 2, cells = 4, rows_per_cell = 2, u_width = 1, v_width = 1, n = 20, k = 19; };
  auto p = std::make_shared<P>();
  CLI::App* app = root.add_subcommand("margolus", "Margolus tiling of cellular-automaton blocks");
  app->add_option("--steps", p->steps, "Automaton steps");
  app->add_option("--cells", p->cells, "Cells");
  app->add_option("--rows-per-cell", p->rows_per_cell, "Circuit rows per cell");
  app->add_option("--u-width", p->u_width, "Columns of a U block");
  app->add_option("--v-width", p->v_width, "Columns of a V block");
  app->add_option("--n", p->n, "Lattice size");
  app->add_option("--k", p->k, "Circuit region width");
  reg.push_back({app, [p](Context& c, const json& echo) {
    Report rep("margolus", echo);
    const CircuitLayout lay = margolus_tiling(p->steps, p->cells, {"U", p->rows_per_cell, p->u_width},
                                              {"V", p->rows_per_cell, p->v_width}, {p->n, p->k});
    CsvTable csv({"index", "label", "first_row", "row_count", "column_start", "length", "order"});
    for (std::size_t i = 0; i < lay.stripes.size(); ++i) {
      const auto& s = lay.stripes[i];
      csv.add({static_cast<long long>(i), s.label, static_cast<long long>(s.first_row),
               static_cast<long long>(s.row_count), static_cast<long long>(s.column_start),
               static_cast<long long>(s.length), static_cast<long long>(s.order)});
    }
    csv.write(c.out_dir / "margolus.csv");
    std::ofstream(c.out_dir / "margolus_layout.json", std::ios::binary) << layout_to_json(lay).dump(2) << '\n';
    std::ofstream(c.out_dir / "margolus_map.txt", std::ios::binary) << text_map(lay);
    const auto v = validate(lay);
    rep.check("violations", static_cast<double>(v.size()), Relation::eq, 0.0);
    const int per_step = p->cells / 2 + (p->cells - 1) / 2;
    rep.check("blocks", static_cast<double>(lay.stripes.size()), Relation::eq,
              static_cast<double>(p->steps * per_step));
    rep.results() = {{"blocks", lay.stripes.size()}};
    return rep;
  }});
}

// ------------------------------------------------------------- classical-walk

void add_classical_walk(CLI::App& root, std::vector<Registered>& reg) {
  struct P { int rows = 2, columns = 7, k = 1; double E = 1.0; std::vector<double> t{0.0, 1.0, 10.0, 100.0}; };
  auto p = std::make_shared<P>();
  CLI::App* app = root.add_subcommand("classical-walk", "Board configuration graph and its random walk");
  app->add_option("--rows", p->rows, "Board rows (even)");
  app->add_option("--columns", p->columns, "Board columns");
  app->add_option("--k", p->k, "Circuit region width");
  app->add_option("--E", p->E, "Energy scale of the board Hamiltonians");
  app->add_option("--t", p->t, "Evolution times")->delimiter(',');
  reg.push_back({app, [p](Context& c, const json& echo) {
    Report rep("classical-walk", echo);
    const BoardSpec spec{p->rows, p->columns, p->k};
    const ConfigGraph g = build_graph(spec);
    {
      std::ofstream edges(c.out_dir / "classical-walk_edges.txt", std::ios::binary);
      g.write_edges(edges);
    }
    CsvTable nodes({"node", "columns"});
    for (std::size_t u = 0; u < g.size(); ++u) {
      std::string s;
      for (std::size_t r = 0; r < g.nodes[u].columns.size(); ++r) s += (r ? " " : "") + std::to_string(g.nodes[u].columns[r]);
      nodes.add({static_cast<long long>(u), s});
    }
    nodes.write(c.out_dir / "classical-walk_nodes.csv");

    const EnergyAudit a = audit_energy(g, p->E);
    rep.check("property_violations", static_cast<double>(a.property_violations), Relation::eq, 0.0);
    rep.check("allowed_move_energy_change", a.worst_allowed_change, Relation::eq, 0.0);
    if (a.forbidden_moves > 0) rep.check_true("forbidden_moves_raise_energy", a.lowest_forbidden_rise > 0.0);

    const RealVector st = stationary_distribution(g);
    CsvTable sc({"node", "probability"});
    for (Eigen::Index u = 0; u < st.size(); ++u) sc.add({static_cast<long long>(u), st(u)});
    sc.write(c.out_dir / "classical-walk_stationary.csv");
    const double uniform = 1.0 / static_cast<double>(g.size());
    rep.check("stationary_uniform_deviation", (st.array() - uniform).abs().maxCoeff(), Relation::le, 1e-12);
    rep.check_true("reflection_automorphism", mirror_is_automorphism(g));

    RealVector p0 = RealVector::Zero(static_cast<Eigen::Index>(g.size()));
    p0(0) = 1.0;
    CsvTable ev({"t", "node", "probability"});
    double worst_mass = 0.0;
    for (double t : p->t) {
      const RealVector pt = evolve_walk(g, p0, t);
      worst_mass = std::max(worst_mass, std::abs(pt.sum() - 1.0));
      for (Eigen::Index u = 0; u < pt.size(); ++u) ev.add({t, static_cast<long long>(u), pt(u)});
    }
    ev.write(c.out_dir / "classical-walk_evolution.csv");
    rep.check("evolution_mass_error", worst_mass, Relation::le, 1e-10);

    json res{{"nodes", g.size()}, {"edges", g.edge_count()}, {"admissible", spec.readout_admissible()}};
    if (spec.readout_admissible()) {
      const double out = outside_probability_stationary(g, spec);
      res["outside_probability"] = out;
      rep.check("outside_probability", out, Relation::ge, 0.5);
    }
    rep.results() = res;
    return rep;
  }});
}

// ------------------------------------------------------------------- full-sim

void add_full_sim(CLI::App& root, std::vector<Registered>& reg) {
  struct P {
    int n = 4, k = 3, l = 2;
    double E = 20.0, t_max = 40.0, norm_tol = 1e-9;
    int points = 9;
    std::string theta = "pi/2";
  };
  auto p = std::make_shared<P>();
  CLI::App* app = root.add_subcommand("full-sim", "Coupled chain and spin evolution for one compiled gate");
  app->add_option("--n", p->n, "Lattice size");
  app->add_option("--k", p->k, "Circuit region width");
  app->add_option("--l", p->l, "Stripe length");
  app->add_option("--E", p->E, "Coupling");
  app->add_option("--theta", p->theta, "Rotation angle of the rot_x gate on qubit 1");
  app->add_option("--t-max", p->t_max, "Last time");
  app->add_option("--points", p->points, "Time points");
  app->add_option("--norm-tol", p->norm_tol, "Allowed norm drift");
  reg.push_back({app, [p](Context& c, const json& echo) {
    Report rep("full-sim", echo);
    const LatticeSpec spec{p->n, p->k};
    spec.validate();
    const LogicalCircuit circ{1, {LogicalGate::rot_x(1, parse_angle(p->theta))}};
    const CircuitLayout lay = compile(circ, p->l, spec);
    const HermitianOperator h = build_complete(spec, p->E, lay);
    const SparseComplex hs = h.to_sparse();
    const SectorBasis chain = SectorBasis::connected_chain(spec);
    const int rows = spec.rows();
    const Eigen::Index spins = Eigen::Index{1} << rows;

    // Logical index b (qubit 1 most significant) to the spin register, other rows down.
    auto spin_index = [&](Eigen::Index b) {
      Eigen::Index s = 0;
      for (int q = 1; q <= lay.qubits; ++q) {
        const bool one = (b >> (lay.qubits - q)) & 1;
        const int up_row = lay.chain_row(one ? 2 * q - 1 : 2 * q);
        s |= Eigen::Index{1} << (rows - up_row);
      }
      return s;
    };
    const ComplexMatrix u = circuit_unitary(circ);
    ComplexVector target = ComplexVector::Zero(spins);
    for (Eigen::Index b = 0; b < u.rows(); ++b) target(spin_index(b)) += u(b, 0);

    const std::string start = ChainConfiguration::initial(spec.m()).word();
    const auto it = std::find(chain.labels.begin(), chain.labels.end(), start);
    const Eigen::Index c0 = it - chain.labels.begin();
    ComplexVector psi = ComplexVector::Zero(h.dimension());
    psi(c0 * spins + spin_index(0)) = 1.0;

    std::vector<Eigen::Index> outside;
    for (Eigen::Index ci = 0; ci < chain.dimension(); ++ci) {
      if (all_outside_region(ChainConfiguration(chain.labels[static_cast<std::size_t>(ci)]), spec)) {
        outside.push_back(ci);
      }
    }
    const double radius = linalg::gershgorin_radius(hs);
    ComplexVector idle = ComplexVector::Zero(spins);
    idle(spin_index(0)) = 1.0;
    CsvTable csv({"t", "norm", "outside_probability", "postselected_fidelity", "postselected_idle_overlap"});
    double worst_norm = 0.0, best = 0.0, best_t = 0.0;
    const auto times = linear_grid(p->t_max, p->points);
    double prev = 0.0;
    for (double t : times) {
      psi = linalg::chebyshev_propagate(hs, psi, t - prev, radius);
      prev = t;
      ComplexMatrix rho = ComplexMatrix::Zero(spins, spins);
      double p_out = 0.0;
      for (Eigen::Index ci : outside) {
        const ComplexVector blk = psi.segment(ci * spins, spins);
        rho += blk * blk.adjoint();
        p_out += blk.squaredNorm();
      }
      std::optional<double> fid, stay;
      if (p_out > 1e-12) {
        fid = std::real(target.dot(rho * target)) / p_out;
        stay = std::real(idle.dot(rho * idle)) / p_out;
        if (*fid > best) { best = *fid; best_t = t; }
      }
      worst_norm = std::max(worst_norm, std::abs(psi.norm() - 1.0));
      csv.add({t, psi.norm(), p_out, fid, stay});
    }
    csv.write(c.out_dir / "full-sim.csv");
    rep.check("norm_drift", worst_norm, Relation::le, p->norm_tol);
    rep.check("hermiticity_defect", linalg::hermiticity_defect(h.to_dense()), Relation::le, 1e-12);
    rep.results() = {{"dimension", h.dimension()},
                     {"outside_configurations", outside.size()},
                     {"best_postselected_fidelity", best},
                     {"best_time", best_t}};
    return rep;
  }});
}

// --------------------------------------------------------------------- report

const std::vector<std::vector<std::string>>& battery() {
  static const std::vector<std::vector<std::string>> b{
      {"configspace", "--n", "4", "--k", "2"},
      {"walk", "--m", "8", "--k", "2"},
      {"timeavg"},
      {"passing-time"},
      {"holonomy", "--phi", "pi/2,pi/3,acos(0.25)", "--l", "100,200,400"},
      {"holonomy", "--phi", "pi/2,pi/3,acos(0.25)", "--axis", "y", "--l", "400"},
      {"two-qubit"},
      {"two-qubit", "--side", "above"},
      {"lemma1"},
      {"theorem1"},
      {"self-energy"},
      {"layout", "--random", "100"},
      {"margolus"},
      {"classical-walk", "--rows", "2", "--columns", "7"},
      {"classical-walk", "--rows", "2", "--columns", "8"},
  };
  return b;
}

}  // namespace

int run_internal(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

namespace {

void add_report(CLI::App& root, std::vector<Registered>& reg) {
  auto app = root.add_subcommand("report", "Run the standard battery and aggregate the verdicts");
  reg.push_back({app, [](Context& c, const json& echo) {
    Report rep("report", echo);
    CsvTable csv({"run", "subcommand", "verdict", "value", "pass"});
    json runs = json::array();
    int i = 0;
    for (const auto& cmd : battery()) {
      const std::string name = std::to_string(i++) + "_" + cmd.front();
      const fs::path dir = c.out_dir / name;
      std::vector<std::string> args{"--out", dir.string(), "--seed", std::to_string(c.seed)};
      args.insert(args.end(), cmd.begin(), cmd.end());
      std::ostringstream sink;
      const int code = run_internal(args, sink, *c.err);
      std::ifstream in(dir / (cmd.front() + ".json"));
      json sub = in ? json::parse(in) : json::object();
      for (const auto& v : sub.value("verdicts", json::array())) {
        csv.add({name, cmd.front(), v.at("name").get<std::string>(), v.at("value").get<double>(),
                 static_cast<long long>(v.at("pass").get<bool>())});
      }
      rep.check(name + ".exit_code", code, Relation::eq, 0.0);
      runs.push_back({{"run", name}, {"args", cmd}, {"exit_code", code}, {"output", sub}});
    }
    csv.write(c.out_dir / "report.csv");
    rep.results() = {{"runs", runs}};
    return rep;
  }});
}

// Appends `--key value` pairs from a JSON config unless the key was given.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::string path;
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (path.empty()) return rest;
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read config file " + path);
  json cfg;
  try {
    cfg = json::parse(in);
  } catch (const json::parse_error& e) {
    throw PreconditionError("config file " + path + ": " + e.what());
  }
  if (!cfg.is_object()) throw PreconditionError("config file must hold a JSON object");

  auto given = [&](const std::string& key) {
    const std::string flag = "--" + key;
    return std::any_of(rest.begin(), rest.end(),
                       [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
  };
  auto scalar = [](const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number()) return format_real(v.get<double>());
    throw PreconditionError("config values must be strings, numbers, booleans or arrays");
  };
  std::vector<std::string> root_flags, sub_flags;
  auto append = [&](const json& obj, std::vector<std::string>& dst) {
    for (const auto& [key, v] : obj.items()) {
      if (v.is_object() || given(key)) continue;
      if (v.is_boolean()) {
        if (v.get<bool>()) dst.push_back("--" + key);
        continue;
      }
      dst.push_back("--" + key);
      if (v.is_array()) {
        std::string joined;
        for (const auto& x : v) joined += (joined.empty() ? "" : ",") + scalar(x);
        dst.push_back(joined);
      } else {
        dst.push_back(scalar(v));
      }
    }
  };

  // Find the subcommand token: first argument not consumed by a root option.
  std::size_t sub = 0;
  while (sub < rest.size() && rest[sub].rfind("--", 0) == 0) sub += rest[sub].find('=') == std::string::npos ? 2 : 1;
  std::string name = sub < rest.size() ? rest[sub] : cfg.value("subcommand", std::string());
  json flat = json::object(), root_part = json::object();
  for (const auto& [key, v] : cfg.items()) {
    if (key == "subcommand" || v.is_object()) continue;
    if (key == "out" || key == "seed") root_part[key] = v;
    else flat[key] = v;
  }
  append(root_part, root_flags);
  if (!name.empty() && cfg.contains(name) && cfg[name].is_object()) append(cfg[name], sub_flags);
  append(flat, sub_flags);

  std::vector<std::string> outv(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(std::min(sub, rest.size())));
  outv.insert(outv.end(), root_flags.begin(), root_flags.end());
  if (sub < rest.size()) {
    outv.insert(outv.end(), rest.begin() + static_cast<std::ptrdiff_t>(sub), rest.end());
  } else if (!name.empty()) {
    outv.push_back(name);
  }
  outv.insert(outv.end(), sub_flags.begin(), sub_flags.end());
  return outv;
}

}  // namespace

double parse_angle(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  auto fail = [&]() -> double { throw PreconditionError("cannot parse angle '" + text + "'"); };
  auto number = [&](const std::string& t) {
    if (t.empty()) fail();
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(t, &pos);
    } catch (const std::exception&) {
      fail();
    }
    if (pos != t.size()) fail();
    return v;
  };
  if (s.empty()) fail();
  double sign = 1.0;
  if (s[0] == '-' || s[0] == '+') {
    sign = s[0] == '-' ? -1.0 : 1.0;
    s.erase(0, 1);
  }
  for (const auto& [fn, f] : {std::pair<std::string, double (*)(double)>{"acos(", std::acos},
                              std::pair<std::string, double (*)(double)>{"asin(", std::asin}}) {
    if (s.rfind(fn, 0) == 0 && s.back() == ')') {
      const double x = number(s.substr(fn.size(), s.size() - fn.size() - 1));
      if (std::abs(x) > 1.0) fail();
      return sign * f(x);
    }
  }
  const auto pi = s.find("pi");
  if (pi == std::string::npos) return sign * number(s);
  const std::string head = s.substr(0, pi), tail = s.substr(pi + 2);
  double v = kPi * (head.empty() ? 1.0 : number(head));
  if (!tail.empty()) {
    if (tail[0] != '/') fail();
    const double d = number(tail.substr(1));
    if (d == 0.0) fail();
    v /= d;
  }
  return sign * v;
}

int run_internal(const std::vector<std::string>& raw, std::ostream& out, std::ostream& err) {
  CLI::App root{"Verification and sweep tool for the atom-chain computer model", "ergoqc"};
  root.require_subcommand(1);
  root.fallthrough();
  const char* env = std::getenv(kOutDirEnv);
  std::string out_dir = env && *env ? env : "ergo_out";
  std::uint64_t seed = 0;
  root.add_option("--out", out_dir, "Output directory (default $ERGO_OUT_DIR or ergo_out)");
  root.add_option("--config", "JSON file with option values")->expected(1);
  root.add_option("--seed", seed, "Seed for jittered schedules and random circuits");
  root.set_version_flag("--version", std::string(kToolVersion));

  std::vector<Registered> reg;
  add_configspace(root, reg);
  add_walk(root, reg);
  add_timeavg(root, reg);
  add_passing_time(root, reg);
  add_holonomy(root, reg);
  add_two_qubit(root, reg);
  add_lemma1(root, reg);
  add_theorem1(root, reg);
  add_self_energy(root, reg);
  add_layout(root, reg);
  add_margolus(root, reg);
  add_classical_walk(root, reg);
  add_full_sim(root, reg);
  add_report(root, reg);
  for (auto& r : reg) {
    for (CLI::Option* o : r.app->get_options()) o->capture_default_str();
  }

  try {
    std::vector<std::string> args = expand_config(raw);
    std::reverse(args.begin(), args.end());
    root.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << root.help();
    return kPass;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }

  for (auto& r : reg) {
    if (!r.app->parsed()) continue;
    Context ctx{out_dir, seed, &out, &err};
    try {
      fs::create_directories(ctx.out_dir);
      json echo = echo_options(r.app);
      echo["subcommand"] = r.app->get_name();
      echo["out"] = out_dir;
      echo["seed"] = seed;
      const Report rep = r.run(ctx, echo);
      rep.write(ctx.out_dir);
      rep.print(ctx.verdicts_to_err ? err : out);
      return rep.all_pass() ? kPass : kCheckFailed;
    } catch (const PreconditionError& e) {
      err << "error: precondition violated: " << e.what() << '\n';
      return kBadInput;
    } catch (const NumericalError& e) {
      err << "error: numerical failure: " << e.what() << '\n';
      return kCheckFailed;
    } catch (const fs::filesystem_error& e) {
      err << "error: " << e.what() << '\n';
      return kBadInput;
    } catch (const nlohmann::json::exception& e) {
      err << "error: " << e.what() << '\n';
      return kBadInput;
    }
  }
  return kBadInput;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return run_internal(args, out, err);
}

}  // namespace ergo::cli
