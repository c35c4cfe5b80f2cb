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

#include <cstdint>
#include <optional>
#include <vector>

#include "ergo/linalg.hpp"

namespace ergo {

/// Adjacency spectrum of the path graph on 2m vertices, eigenvalues
/// decreasing, each eigenvector scaled so its first nonzero entry is > 0.
struct PathGraphSpectrum {
  int size = 0;
  RealVector values;
  RealMatrix vectors;
};

PathGraphSpectrum path_spectrum(int m);
/// 2 cos(r pi / (2m + 1)), r = 1 .. 2m
RealVector path_eigenvalues_closed_form(int m);

/// Single-particle propagator exp(-i A t), A the path adjacency matrix.
struct Propagator {
  double time = 0.0;
  ComplexMatrix u;
};

Propagator propagator(const PathGraphSpectrum& spectrum, double t);

/// G_ij = sum_{l > m} u_il conj(u_jl); <P_i> = G_ii and, for i != j,
/// <P_i P_j> = G_ii G_jj - |G_ij|^2. Fermions start on sites m+1 .. 2m.
ComplexMatrix correlation(const Propagator& prop, int m);

/// Expected number N of fermions on sites 1 .. m.
double expectation_left(const Propagator& prop, int m);
double variance_left(const Propagator& prop, int m);

/// Many-body work is allowed while C(2m, m) stays below this.
inline constexpr std::uint64_t kExactSectorCap = 12870;

/// P(N >= k) for the walk started at 0^m 1^m; Chebyshev expansion of the
/// sparse weight-m XY Hamiltonian.
double outside_probability_exact(int m, int k, double t);

/// Incremental variant over ascending times.
std::vector<double> outside_probability_series(int m, int k, const std::vector<double>& times);

/// t = 0, 64 geometric points on [1e-3, 1], then linear up to t_max;
/// `points` values in total.
std::vector<double> default_time_grid(int m, int points = 512, double t_max = 0.0);

class GridExhausted : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

struct PassingTime {
  int m = 0;
  int k = 0;
  double t_star = 0.0;
  double expectation = 0.0;
  double variance = 0.0;
  double chebyshev_bound = 0.0;  // upper bound on P(N < k): V / (k/3)^2
  std::optional<double> exact_outside;  // P(N >= k) at t_star
};

/// First time on the grid where E_t(N) >= 4k/3, refined by bisection.
PassingTime passing_time_check(int m, int k, const std::vector<double>& grid = {});

double time_average_expectation(int m);
/// Variance of N in the time-averaged state.
double time_average_variance(int m);

/// Both averages from one spectrum; degeneracy tolerance for grouping
/// eigenvalue sums.
struct TimeAverage {
  double expectation = 0.0;
  double second_moment = 0.0;
  double variance = 0.0;
};
TimeAverage time_average(const PathGraphSpectrum& spectrum, int m, double tol = 1e-9);

struct ErgodicReadout {
  int m = 0;
  int k = 0;
  double expectation = 0.0;
  double variance = 0.0;
  double chebyshev_bound = 0.0;        // on P(N < m/4) in the time-averaged state
  std::optional<double> exact_inside;  // diagonal-ensemble P(N < m/4), small m
};

ErgodicReadout ergodic_readout_check(int m);

/// Dense diagonal-ensemble distribution of N, feasible for C(2m, m) <= 924.
std::vector<double> diagonal_ensemble_distribution(int m, double tol = 1e-9);

struct WalkObservables {
  int m = 0;
  int k = 0;
  std::vector<double> times;
  std::vector<double> expectation;
  std::vector<double> variance;
  std::vector<double> chebyshev_lower;  // lower bound on P(N >= k), 0 where E <= k
  std::vector<std::optional<double>> outside_probability;
};

WalkObservables walk_sweep(int m, int k, const std::vector<double>& times, bool exact = true);

}  // namespace ergo
