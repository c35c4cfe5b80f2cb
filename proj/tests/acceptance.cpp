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

// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ergo/classical_walk.hpp"
#include "ergo/cli.hpp"
#include "ergo/configspace.hpp"
#include "ergo/fermion_walk.hpp"
#include "ergo/hamiltonian.hpp"
#include "ergo/holonomy.hpp"
#include "ergo/layout.hpp"
#include "ergo/perturbation.hpp"

using namespace ergo;
namespace fs = std::filesystem;

namespace {

// Tolerances and runtime budgets.
constexpr double kJwTol = 1e-9;
constexpr double kHeffTol = 1e-12;
constexpr double kGateFidelity = 0.999;
constexpr double kIdleTol = 1e-9;
constexpr double kJitterTol = 5e-3;
constexpr double kGapTol = 1e-9;
constexpr double kJitter = 0.3;
constexpr double kSlope = -0.5, kSlopeTol = 0.1;
constexpr double kMeanConstant = 1.0, kVarConstant = 1.0, kRatioSlack = 2.0;
constexpr double kLayoutTol = 1e-9;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    pass = pass && ok;
    if (!detail.empty()) detail += "; ";
    detail += (ok ? "" : "FAILED ") + what;
  }
  void note(const std::string& what) { detail += (detail.empty() ? "(" : "; (") + what + ")"; }
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

int failures = 0;

void criterion(int id, const std::string& title, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0.0) o.require(secs < budget_s, "runtime " + fmt(secs) + " s < " + fmt(budget_s) + " s");
  if (!o.pass) ++failures;
  std::printf("%s [%2d] %s: %s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str());
  std::fflush(stdout);
}

// ---------------------------------------------------------------------------

Outcome jordan_wigner() {
  Outcome o;
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 20.0);
  double worst = 0.0;
  for (int m : {1, 2, 3}) {
    const HermitianOperator h = build_Hs(m, HsSpace::full);
    const auto& words = h.basis();
    const linalg::Eigensystem es = linalg::eigh(h.to_dense());
    ComplexVector psi0 = ComplexVector::Zero(h.dimension());
    psi0(std::find(words.begin(), words.end(), ChainConfiguration::initial(m).word()) - words.begin()) = 1.0;
    const auto spectrum = path_spectrum(m);
    for (int trial = 0; trial < 20; ++trial) {
      const double t = u(rng);
      const RealVector p = (linalg::propagate(es, t) * psi0).cwiseAbs2();
      const ComplexMatrix g = correlation(propagator(spectrum, t), m);
      for (int i = 0; i < 2 * m; ++i) {
        for (int j = 0; j < 2 * m; ++j) {
          double dense = 0.0;
          for (std::size_t w = 0; w < words.size(); ++w) {
            if (words[w][i] == '1' && words[w][j] == '1') dense += p(static_cast<Eigen::Index>(w));
          }
          const double single = i == j ? g(i, i).real() : g(i, i).real() * g(j, j).real() - std::norm(g(i, j));
          worst = std::max(worst, std::abs(dense - single));
        }
      }
    }
  }
  o.require(worst <= kJwTol, "max |dense - single-particle| over <P_i>, <P_i P_j> = " + fmt(worst) + " <= " +
                                 fmt(kJwTol));
  return o;
}

Outcome heff_identity() {
  Outcome o;
  double worst = 0.0;
  for (int n : {2, 3, 4}) {
    const LatticeSpec spec{n, 1};
    const HermitianOperator heff = effective_hamiltonian(spec, 1e3);
    const HermitianOperator hs = build_Hs(n - 1);
    o.require(heff.basis() == hs.basis() && heff.basis() == move_graph_adjacency(spec).basis(),
              "n=" + std::to_string(n) + " bases agree");
    worst = std::max({worst, max_entry_difference(heff, move_graph_adjacency(spec)),
                      max_entry_difference(heff, hs)});
  }
  o.require(worst <= kHeffTol, "max entry difference " + fmt(worst) + " <= " + fmt(kHeffTol));
  return o;
}

Outcome passing_time() {
  Outcome o;
  const auto grid = default_time_grid(64, 512);
  for (int k : {4, 8, 16}) {
    const PassingTime pt = passing_time_check(64, k, grid);
    o.require(pt.expectation >= 4.0 * k / 3 - 1e-9 && pt.t_star <= 8.0 * k,
              "k=" + std::to_string(k) + " t_star " + fmt(pt.t_star) + " <= " + fmt(8.0 * k));
    o.require(pt.chebyshev_bound <= 12.0 / k, "bound " + fmt(pt.chebyshev_bound) + " <= " + fmt(12.0 / k));
  }
  const PassingTime small = passing_time_check(8, 2);
  const double exact = small.exact_outside.value_or(-1.0);
  o.require(exact >= std::max(0.5, 1.0 - 12.0 / 2), "m=8 k=2 exact P(outside) " + fmt(exact) + " >= 0.5");
  return o;
}

Outcome ergodic_readout() {
  Outcome o;
  double mean = 0.0, var = 0.0;
  std::vector<double> bounds;
  const std::vector<int> ms{8, 16, 32, 64};
  for (int m : ms) {
    const ErgodicReadout r = ergodic_readout_check(m);
    mean = std::max(mean, std::abs(r.expectation - m / 2.0) / std::sqrt(m));
    var = std::max(var, r.variance / m);
    bounds.push_back(r.chebyshev_bound);
  }
  o.require(mean <= kMeanConstant, "max |E - m/2|/sqrt(m) " + fmt(mean) + " <= " + fmt(kMeanConstant));
  o.require(var <= kVarConstant, "max V/m " + fmt(var) + " <= " + fmt(kVarConstant));
  bool decreasing = true;
  for (std::size_t i = 1; i < bounds.size(); ++i) decreasing = decreasing && bounds[i] < bounds[i - 1];
  o.require(decreasing, "bound decreasing in m");
  const double ratio = bounds.back() / bounds.front();
  const double limit = kRatioSlack * ms.front() / ms.back();
  o.require(ratio <= limit, "bound(64)/bound(8) " + fmt(ratio) + " <= " + fmt(limit));
  return o;
}

Outcome one_qubit_gates() {
  Outcome o;
  double worst = 1.0;
  bool monotone = true, distance_monotone = true;
  for (Axis axis : {Axis::x, Axis::y}) {
    for (double phi : {kPi / 2, kPi / 3, std::acos(0.25)}) {
      double prev = -1.0, prev_distance = INFINITY;
      for (int l : {100, 200, 400}) {
        const GateReport g = one_qubit_gate(phi, axis, l, 5.0);
        monotone = monotone && g.fidelity > prev;
        distance_monotone = distance_monotone && g.distance < prev_distance;
        prev = g.fidelity;
        prev_distance = g.distance;
      }
      worst = std::min(worst, prev);
    }
  }
  o.require(worst >= kGateFidelity, "min fidelity at l=400 " + fmt(worst) + " >= " +
                                        fmt(kGateFidelity));
  o.require(monotone, "fidelity increases over l = 100, 200, 400");
  o.note("phase-stripped distance decreases over l: " + std::string(distance_monotone ? "yes" : "no"));
  return o;
}

Outcome two_qubit_gates() {
  Outcome o;
  double idle = 0.0, active = 1.0;
  for (double phi : {0.0, kPi / 6, kPi / 4}) {
    const TwoQubitReport r = two_qubit_gate(phi, 400, 5.0, ControlSide::below);
    idle = std::max(idle, r.branch_down.distance);
    active = std::min(active, r.branch_up.fidelity);
  }
  o.require(idle <= kIdleTol, "control-down branch distance to identity " + fmt(idle) + " <= " + fmt(kIdleTol));
  o.require(active >= kGateFidelity, "control-up branch min fidelity " + fmt(active) + " >= " + fmt(kGateFidelity));
  return o;
}

Outcome schedule_independence() {
  Outcome o;
  const int l = 400;
  const double tau = 5.0;
  double jitter = 0.0, jitter_distance = 0.0, gap = 0.0;
  for (double phi : {kPi / 2, kPi / 3, std::acos(0.25)}) {
    const GateReport base = one_qubit_gate(phi, Axis::x, l, tau);
    for (std::uint64_t seed : {0u, 1u, 2u}) {
      const GateReport j = one_qubit_gate(phi, Axis::x, l, tau, Schedule::jittered(l, tau, kJitter, seed));
      jitter = std::max(jitter, std::abs(j.fidelity - base.fidelity));
      jitter_distance = std::max(jitter_distance, linalg::phase_stripped_distance(j.implemented, base.implemented));
    }
    Schedule s;
    s.gaps.assign(l - 1, 3.0 * tau);
    const GateReport g = one_qubit_gate(phi, Axis::x, l, tau, s);
    gap = std::max(gap, linalg::phase_stripped_distance(g.implemented, base.implemented));
  }
  o.require(jitter <= kJitterTol, "+-30% jitter fidelity change " + fmt(jitter) + " <= " + fmt(kJitterTol));
  o.note("jittered action distance " + fmt(jitter_distance));
  o.require(gap <= kGapTol, "off-interval action change " + fmt(gap) + " <= " + fmt(kGapTol));
  return o;
}

Outcome perturbative_bounds() {
  Outcome o;
  const std::vector<double> es{1e4, 1e5, 1e6};
  std::vector<double> lhs;
  for (double e : es) lhs.push_back(lemma1_check(3, e).lhs);
  const double slope = loglog_slope(es, lhs);
  o.require(std::abs(slope - kSlope) <= kSlopeTol,
            "log-log slope " + fmt(slope) + " in " + fmt(kSlope) + " +- " + fmt(kSlopeTol));

  std::vector<double> times;
  for (int i = 0; i <= 40; ++i) times.push_back(10.0 * i / 40);
  double margin = -INFINITY;
  for (double e : es) margin = std::max(margin, theorem1_check(3, e, times).max_margin);
  o.require(margin <= 0.0, "state-error margin over 6 states, t in [0,10] " + fmt(margin) + " <= 0");

  const double e = 1e4;
  const PerturbationSetup setup = perturbation_setup(3, e);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const cd z = std::polar(std::sqrt(e) * std::sqrt(u(rng)), 2 * kPi * u(rng));
    worst = std::max(worst, self_energy_deviation(setup, z));
  }
  const double bound = 4.0 * std::pow(3.0, 4) / e;
  o.require(worst <= bound, "self-energy deviation at 10 z " + fmt(worst) + " <= " + fmt(bound));
  return o;
}

Outcome boards() {
  Outcome o;
  int admissible = 0;
  for (const BoardSpec spec : {BoardSpec{2, 7, 1}, BoardSpec{2, 8, 1}}) {
    const std::string tag = std::to_string(spec.rows) + "x" + std::to_string(spec.columns) + " ";
    const ConfigGraph g = build_graph(spec);
    const EnergyAudit a = audit_energy(g, 1.0);
    bool props = true;
    for (const auto& c : g.nodes) props = props && satisfies_properties(c, spec);
    o.require(props && a.property_violations == 0, tag + "properties hold on " + std::to_string(g.size()) + " nodes");
    o.require(a.worst_allowed_change == 0.0, tag + "moves conserve energy");
    const RealVector st = stationary_distribution(g);
    const double dev = (st.array() - 1.0 / static_cast<double>(g.size())).abs().maxCoeff();
    o.require(dev <= 1e-12, tag + "stationary uniform to " + fmt(dev));
    o.require(mirror_is_automorphism(g), tag + "reflection invariant");
    if (spec.readout_admissible()) {
      ++admissible;
      const double p = outside_probability_stationary(g, spec);
      o.require(p >= 0.5, tag + "P(outside) " + fmt(p) + " >= 0.5");
    }
  }
  o.require(admissible == 2, "both boards admissible");
  return o;
}

Outcome layouts() {
  Outcome o;
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> kind(0, 2), qubit(1, 3), dir(0, 1), count(1, 10);
  std::uniform_real_distribution<double> angle(-2 * kPi, 2 * kPi);
  const LatticeSpec spec{60, 59};
  std::size_t violations = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    LogicalCircuit c{3, {}};
    const int gates = count(rng);
    for (int i = 0; i < gates; ++i) {
      const int k = kind(rng), q = qubit(rng);
      if (k == 0) {
        c.gates.push_back(LogicalGate::rot_x(q, angle(rng)));
      } else if (k == 1) {
        c.gates.push_back(LogicalGate::rot_y(q, angle(rng)));
      } else {
        const int other = q == 1 ? 2 : q == 3 ? 2 : (dir(rng) ? 3 : 1);
        c.gates.push_back(LogicalGate::cphase(q, other, angle(rng)));
      }
    }
    const CircuitLayout lay = compile(c, 3, spec);
    violations += validate(lay).size();
    worst = std::max(worst, linalg::phase_stripped_distance(layout_unitary(lay), circuit_unitary(c)));
  }
  o.require(violations == 0, "validate violations " + std::to_string(violations) + " == 0");
  o.require(worst <= kLayoutTol, "max unitary distance " + fmt(worst) + " <= " + fmt(kLayoutTol));
  return o;
}

std::map<std::string, std::string> csv_bytes(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (e.path().extension() != ".csv") continue;
    std::ifstream in(e.path(), std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    out[fs::relative(e.path(), dir).string()] = s.str();
  }
  return out;
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::vector<std::string>> configs{
      {"--seed", "3", "holonomy", "--phi", "pi/3", "--l", "100", "--jitter", "0.3"},
      {"--seed", "5", "layout", "--random", "20"},
      {"walk", "--m", "8", "--k", "2"},
      {"timeavg", "--m", "8,16"},
      {"--seed", "9", "self-energy"},
      {"classical-walk", "--rows", "2", "--columns", "7"},
  };
  const fs::path root = fs::temp_directory_path() / "ergoqc_acceptance_determinism";
  fs::remove_all(root);
  std::map<std::string, std::string> first, second;
  for (const char* rep : {"a", "b"}) {
    for (std::size_t i = 0; i < configs.size(); ++i) {
      std::vector<std::string> args{"--out", (root / rep / std::to_string(i)).string()};
      args.insert(args.end(), configs[i].begin(), configs[i].end());
      std::ostringstream sink;
      cli::run(args, sink, sink);
    }
    (std::string(rep) == "a" ? first : second) = csv_bytes(root / rep);
  }
  o.require(!first.empty(), std::to_string(first.size()) + " CSV files written");
  o.require(first == second, "repeated runs byte-identical");
  return o;
}

}  // namespace

int main() {
  criterion(1, "Jordan-Wigner equivalence, m = 1..3", 10, jordan_wigner);
  criterion(2, "H_eff equals move-graph adjacency and chain Hamiltonian, n = 2..4", 5, heff_identity);
  criterion(3, "passing time at m = 64, k = 4, 8, 16", 60, passing_time);
  criterion(4, "ergodic readout over m = 8..64", 120, ergodic_readout);
  criterion(5, "one-qubit stripe gates", 60, one_qubit_gates);
  criterion(6, "two-qubit stripe gates", 60, two_qubit_gates);
  criterion(7, "schedule independence at l = 400", 0, schedule_independence);
  criterion(8, "effective-Hamiltonian error bounds at n = 3", 60, perturbative_bounds);
  criterion(9, "board walk on 2x7 and 2x8", 60, boards);
  criterion(10, "layout round trip on 100 random circuits", 30, layouts);
  criterion(11, "determinism of CSV output", 0, determinism);
  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
