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

#include "ergo/fermion_walk.hpp"

#include <algorithm>
#include <cmath>

#include "ergo/configspace.hpp"
#include "ergo/hamiltonian.hpp"

namespace ergo {

namespace {

void check_m(int m, const char* who) {
  if (m < 1) throw PreconditionError(std::string(who) + ": m must be positive");
}

void check_exact(int m, const char* who) {
  check_m(m, who);
  if (m > 32 || binomial(2 * m, m) > kExactSectorCap) {
    throw PreconditionError(std::string(who) + ": C(2m, m) exceeds the exact cap " +
                            std::to_string(kExactSectorCap));
  }
}

struct SectorWalk {
  SparseReal h;
  double radius = 0.0;
  std::vector<int> left;  // left_ones per basis word
  ComplexVector state;
};

SectorWalk sector_walk(int m) {
  SectorWalk w;
  const HermitianOperator hs = build_Hs(m, HsSpace::weight_m);
  w.h = hs.to_sparse_real();
  w.radius = linalg::gershgorin_radius(w.h);
  for (const std::string& word : hs.basis()) w.left.push_back(ChainConfiguration(word).left_ones());
  w.state = ComplexVector::Zero(hs.dimension());
  w.state(0) = 1.0;  // 0^m 1^m is lexicographically first
  return w;
}

double outside_mass(const SectorWalk& w, int k) {
  double p = 0.0;
  for (Eigen::Index i = 0; i < w.state.size(); ++i) {
    if (w.left[static_cast<std::size_t>(i)] >= k) p += std::norm(w.state(i));
  }
  return p;
}

double chebyshev_upper(double variance, int k) {
  const double eps = static_cast<double>(k) / 3.0;
  return variance / (eps * eps);
}

}  // namespace

PathGraphSpectrum path_spectrum(int m) {
  check_m(m, "path_spectrum");
  const int size = 2 * m;
  RealMatrix a = RealMatrix::Zero(size, size);
  for (int i = 0; i + 1 < size; ++i) a(i, i + 1) = a(i + 1, i) = 1.0;
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(a);
  if (solver.info() != Eigen::Success) throw NumericalError("path_spectrum: eigensolver failed");
  PathGraphSpectrum s;
  s.size = size;
  s.values = solver.eigenvalues().reverse();
  s.vectors = solver.eigenvectors().rowwise().reverse();
  for (int c = 0; c < size; ++c) {
    for (int r = 0; r < size; ++r) {
      if (std::abs(s.vectors(r, c)) > 1e-8) {
        if (s.vectors(r, c) < 0.0) s.vectors.col(c) *= -1.0;
        break;
      }
    }
  }
  return s;
}

RealVector path_eigenvalues_closed_form(int m) {
  check_m(m, "path_eigenvalues_closed_form");
  RealVector v(2 * m);
  for (int r = 1; r <= 2 * m; ++r) v(r - 1) = 2.0 * std::cos(r * kPi / (2 * m + 1));
  return v;
}

Propagator propagator(const PathGraphSpectrum& s, double t) {
  if (!std::isfinite(t)) throw PreconditionError("propagator: time must be finite");
  ComplexVector phases(s.size);
  for (int r = 0; r < s.size; ++r) phases(r) = std::exp(cd(0.0, -s.values(r) * t));
  const ComplexMatrix v = s.vectors.cast<cd>();
  return {t, v * phases.asDiagonal() * v.transpose()};
}

ComplexMatrix correlation(const Propagator& prop, int m) {
  if (prop.u.rows() != 2 * m) throw PreconditionError("correlation: propagator size is not 2m");
  const auto right = prop.u.rightCols(m);
  return right * right.adjoint();
}

double expectation_left(const Propagator& prop, int m) {
  if (prop.u.rows() != 2 * m) throw PreconditionError("expectation_left: propagator size is not 2m");
  return prop.u.topRightCorner(m, m).squaredNorm();
}

double variance_left(const Propagator& prop, int m) {
  const ComplexMatrix g = correlation(prop, m).topLeftCorner(m, m);
  // sum_i G_ii - sum_ij |G_ij|^2 = Tr G_L (1 - G_L)
  return std::max(0.0, g.trace().real() - g.squaredNorm());
}

double outside_probability_exact(int m, int k, double t) {
  check_exact(m, "outside_probability_exact");
  SectorWalk w = sector_walk(m);
  w.state = linalg::chebyshev_propagate(w.h, w.state, t, w.radius);
  return outside_mass(w, k);
}

std::vector<double> outside_probability_series(int m, int k, const std::vector<double>& times) {
  check_exact(m, "outside_probability_series");
  SectorWalk w = sector_walk(m);
  std::vector<double> out;
  out.reserve(times.size());
  double now = 0.0;
  for (double t : times) {
    w.state = linalg::chebyshev_propagate(w.h, w.state, t - now, w.radius);
    now = t;
    out.push_back(outside_mass(w, k));
  }
  return out;
}

std::vector<double> default_time_grid(int m, int points, double t_max) {
  check_m(m, "default_time_grid");
  constexpr int kGeometric = 64;
  if (points < kGeometric + 2) throw PreconditionError("default_time_grid: too few points");
  if (t_max <= 0.0) t_max = 8.0 * m;
  if (t_max <= 1.0) throw PreconditionError("default_time_grid: t_max must exceed 1");
  std::vector<double> g{0.0};
  for (int i = 0; i < kGeometric; ++i) g.push_back(1e-3 * std::pow(1e3, i / double(kGeometric - 1)));
  const int linear = points - 1 - kGeometric;
  for (int i = 1; i <= linear; ++i) g.push_back(1.0 + (t_max - 1.0) * i / linear);
  return g;
}

PassingTime passing_time_check(int m, int k, const std::vector<double>& grid_in) {
  check_m(m, "passing_time_check");
  if (k < 1 || k > m) throw PreconditionError("passing_time_check: need 1 <= k <= m");
  if (4 * k > 3 * m) throw PreconditionError("passing_time_check: 4k/3 exceeds m, the target is unreachable");
  const std::vector<double> grid = grid_in.empty() ? default_time_grid(m) : grid_in;
  const PathGraphSpectrum s = path_spectrum(m);
  const double target = 4.0 * k / 3.0;
  auto e_of = [&](double t) { return expectation_left(propagator(s, t), m); };

  std::size_t hit = grid.size();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (e_of(grid[i]) >= target) {
      hit = i;
      break;
    }
  }
  if (hit == grid.size()) {
    throw GridExhausted("passing_time_check: E_t(N) never reaches 4k/3 on the grid (t <= " +
                        std::to_string(grid.back()) + ")");
  }
  double lo = hit == 0 ? grid[0] : grid[hit - 1];
  double hi = grid[hit];
  while (hi - lo > 1e-9 && hit > 0) {
    const double mid = 0.5 * (lo + hi);
    (e_of(mid) >= target ? hi : lo) = mid;
  }
  PassingTime r;
  r.m = m;
  r.k = k;
  r.t_star = hi;
  const Propagator p = propagator(s, hi);
  r.expectation = expectation_left(p, m);
  r.variance = variance_left(p, m);
  r.chebyshev_bound = chebyshev_upper(r.variance, k);
  if (m <= 32 && binomial(2 * m, m) <= kExactSectorCap) {
    r.exact_outside = outside_probability_exact(m, k, hi);
  }
  return r;
}

TimeAverage time_average(const PathGraphSpectrum& s, int m, double tol) {
  if (s.size != 2 * m) throw PreconditionError("time_average: spectrum size is not 2m");
  const int d = s.size;
  const RealMatrix left = s.vectors.topRows(m);
  const RealMatrix right = s.vectors.bottomRows(m);
  const RealMatrix a = left.transpose() * left;    // A_rr'
  const RealMatrix c = right.transpose() * right;  // C_rr'

  TimeAverage out;
  // E(N): pairs r, r' with equal single-particle energy.
  const auto single = linalg::cluster_sorted(-s.values, tol);
  for (std::size_t g = 0; g + 1 < single.size(); ++g) {
    for (Eigen::Index r = single[g]; r < single[g + 1]; ++r) {
      for (Eigen::Index q = single[g]; q < single[g + 1]; ++q) out.expectation += a(r, q) * c(r, q);
    }
  }
  // <N^2> = E + sum over equal two-particle energies
  //         C_rr' C_pp' (A_rr' A_pp' - A_rp' A_pr')
  struct Pair {
    double energy;
    int r, p;
  };
  std::vector<Pair> pairs;
  pairs.reserve(static_cast<std::size_t>(d) * d);
  for (int r = 0; r < d; ++r) {
    for (int p = 0; p < d; ++p) pairs.push_back({s.values(r) + s.values(p), r, p});
  }
  std::sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) {
    if (x.energy != y.energy) return x.energy < y.energy;
    return x.r != y.r ? x.r < y.r : x.p < y.p;
  });
  RealVector energies(static_cast<Eigen::Index>(pairs.size()));
  for (std::size_t i = 0; i < pairs.size(); ++i) energies(static_cast<Eigen::Index>(i)) = pairs[i].energy;
  const auto groups = linalg::cluster_sorted(energies, tol);
  double two = 0.0;
  for (std::size_t g = 0; g + 1 < groups.size(); ++g) {
    for (Eigen::Index x = groups[g]; x < groups[g + 1]; ++x) {
      const Pair& u = pairs[static_cast<std::size_t>(x)];
      for (Eigen::Index y = groups[g]; y < groups[g + 1]; ++y) {
        const Pair& v = pairs[static_cast<std::size_t>(y)];
        two += c(u.r, v.r) * c(u.p, v.p) * (a(u.r, v.r) * a(u.p, v.p) - a(u.r, v.p) * a(u.p, v.r));
      }
    }
  }
  out.second_moment = out.expectation + two;
  out.variance = out.second_moment - out.expectation * out.expectation;
  return out;
}

double time_average_expectation(int m) { return time_average(path_spectrum(m), m).expectation; }

double time_average_variance(int m) { return time_average(path_spectrum(m), m).variance; }

std::vector<double> diagonal_ensemble_distribution(int m, double tol) {
  check_m(m, "diagonal_ensemble_distribution");
  if (m > 6) throw PreconditionError("diagonal_ensemble_distribution: dense route limited to m <= 6");
  const HermitianOperator hs = build_Hs(m, HsSpace::weight_m);
  const RealMatrix h = hs.to_dense().real();
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(h);
  if (solver.info() != Eigen::Success) throw NumericalError("diagonal ensemble: eigensolver failed");
  const RealMatrix& v = solver.eigenvectors();
  const auto groups = linalg::cluster_sorted(solver.eigenvalues(), tol);
  std::vector<double> dist(static_cast<std::size_t>(m + 1), 0.0);
  for (std::size_t g = 0; g + 1 < groups.size(); ++g) {
    const auto block = v.middleCols(groups[g], groups[g + 1] - groups[g]);
    // Projection of |I> (index 0) onto the eigenspace.
    const RealVector proj = block * block.row(0).transpose();
    for (Eigen::Index w = 0; w < proj.size(); ++w) {
      const int left = ChainConfiguration(hs.basis()[static_cast<std::size_t>(w)]).left_ones();
      dist[static_cast<std::size_t>(left)] += proj(w) * proj(w);
    }
  }
  return dist;
}

ErgodicReadout ergodic_readout_check(int m) {
  check_m(m, "ergodic_readout_check");
  if (m % 4 != 0) throw PreconditionError("ergodic_readout_check: m must be a multiple of 4");
  const TimeAverage avg = time_average(path_spectrum(m), m);
  ErgodicReadout r;
  r.m = m;
  r.k = m / 4;
  r.expectation = avg.expectation;
  r.variance = avg.variance;
  const double gap = avg.expectation - r.k;
  if (!(gap > 0.0)) throw NumericalError("ergodic_readout_check: time-averaged E(N) <= m/4");
  r.chebyshev_bound = avg.variance / (gap * gap);
  if (m <= 6) {
    const auto dist = diagonal_ensemble_distribution(m);
    double below = 0.0;
    for (int v = 0; v < r.k; ++v) below += dist[static_cast<std::size_t>(v)];
    r.exact_inside = below;
  }
  return r;
}

WalkObservables walk_sweep(int m, int k, const std::vector<double>& times, bool exact) {
  check_m(m, "walk_sweep");
  if (k < 1 || k > m) throw PreconditionError("walk_sweep: need 1 <= k <= m");
  const PathGraphSpectrum s = path_spectrum(m);
  WalkObservables w;
  w.m = m;
  w.k = k;
  w.times = times;
  for (double t : times) {
    const Propagator p = propagator(s, t);
    const double e = expectation_left(p, m);
    const double v = variance_left(p, m);
    w.expectation.push_back(e);
    w.variance.push_back(v);
    const double gap = e - k;
    w.chebyshev_lower.push_back(gap > 0.0 ? std::max(0.0, 1.0 - v / (gap * gap)) : 0.0);
  }
  const bool ascending = std::is_sorted(times.begin(), times.end()) && (times.empty() || times[0] >= 0.0);
  const bool feasible = m <= 32 && binomial(2 * m, m) <= kExactSectorCap;
  if (exact && feasible && ascending) {
    for (double p : outside_probability_series(m, k, times)) w.outside_probability.emplace_back(p);
  } else {
    w.outside_probability.assign(times.size(), std::nullopt);
  }
  return w;
}

}  // namespace ergo
