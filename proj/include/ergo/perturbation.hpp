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

#include <vector>

#include "ergo/configspace.hpp"
#include "ergo/operator.hpp"

namespace ergo {

/// Split of a Hermitian operator at lambda_star into the eigenspaces below
/// (minus) and above (plus). gap is twice the distance from lambda_star to
/// the nearest eigenvalue.
struct SpectralSplit {
  HermitianOperator op;
  double lambda_star = 0.0;
  double gap = 0.0;
  ComplexMatrix minus_basis;  // orthonormal columns
  ComplexMatrix plus_basis;
  RealVector minus_values;
  RealVector plus_values;

  /// Diagonal operators keep standard basis vectors in index order.
  static SpectralSplit at(const HermitianOperator& op, double lambda_star);

  ComplexMatrix p_minus() const { return minus_basis * minus_basis.adjoint(); }
  ComplexMatrix p_plus() const { return plus_basis * plus_basis.adjoint(); }
};

struct SelfEnergy {
  cd z;
  ComplexMatrix value;         // on the minus subspace, minus_basis coordinates
  double neumann_norm = 0.0;   // ||K_{++} G_+(z)||
  double condition = 0.0;      // reciprocal condition estimate of 1 - K_{++} G_+
};

/// (z - H_{+})^{-1} on the plus subspace.
ComplexMatrix green_plus(const SpectralSplit& split, cd z);

SelfEnergy self_energy(const SpectralSplit& split, const HermitianOperator& k, cd z);

/// H_pot split at E/2 on the one-atom-per-row sector, with K, and the
/// identification of the minus subspace with the connected-chain basis.
struct PerturbationSetup {
  LatticeSpec spec;
  double E = 0.0;
  HermitianOperator k;
  HermitianOperator heff;   // connected-chain basis
  SpectralSplit split;      // of H_pot
  ComplexMatrix embedding;  // sector <- connected-chain isometry
};

PerturbationSetup perturbation_setup(int n, double E);

/// ||Sigma_-(z) - H_eff|| with the minus subspace in connected-chain order.
double self_energy_deviation(const PerturbationSetup& setup, cd z);

struct BoundCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

/// lhs = || W diag(low) W^+ - H_eff || where low are the eigenvalues of
/// K + H_pot below E/2 and W the unitary polar factor of the overlap of the
/// low eigenvectors with the chain states; rhs = 9 n^3 / sqrt(E).
BoundCheck lemma1_check(int n, double E);

/// Least-squares slope of log lhs against log E.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

struct StateErrorResult {
  double max_margin = 0.0;  // max over t and states of lhs - rhs
  double max_lhs = 0.0;
  std::vector<double> times;
  std::vector<double> worst_lhs;  // per time, max over basis states
  std::vector<double> rhs;
};

/// ||(e^{-i H t} - e^{-i H_eff t}) psi|| <= eps t + 2 n sqrt(2/E), eps = 9 n^3 / sqrt(E),
/// for every connected-chain basis state psi.
StateErrorResult theorem1_check(int n, double E, const std::vector<double>& times);

}  // namespace ergo
