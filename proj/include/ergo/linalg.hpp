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

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace ergo {

using cd = std::complex<double>;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using SparseReal = Eigen::SparseMatrix<double>;
using SparseComplex = Eigen::SparseMatrix<cd>;

inline constexpr double kPi = 3.14159265358979323846;

/// Raised when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical procedure cannot produce a result
/// (singular solve, missing spectral gap, exhausted search grid).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace linalg {

/// Spectral decomposition of a Hermitian matrix, eigenvalues ascending.
struct Eigensystem {
  RealVector values;
  ComplexMatrix vectors;
};

Eigensystem eigh(const ComplexMatrix& h);

/// exp(-i h t) for Hermitian h.
ComplexMatrix expm_hermitian(const ComplexMatrix& h, double t);

/// exp(-i h t) from a precomputed eigensystem.
ComplexMatrix propagate(const Eigensystem& es, double t);

/// Largest singular value.
double operator_norm(const ComplexMatrix& a);

/// max |a_ij - a_ji^*|
double hermiticity_defect(const ComplexMatrix& a);

/// ||a^dagger a - 1|| in the max-entry sense.
double unitarity_defect(const ComplexMatrix& a);

/// |tr(u^dagger v)|^2 / d^2, insensitive to a global phase.
double phase_invariant_fidelity(const ComplexMatrix& u, const ComplexMatrix& v);

/// min over alpha of ||u - e^{i alpha} v||_F / sqrt(d).
double phase_stripped_distance(const ComplexMatrix& u, const ComplexMatrix& v);

/// Kronecker product a (x) b, a acting on the more significant factor.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// exp(-i h t) v for a real symmetric sparse h via a Chebyshev expansion.
/// `spectral_radius` must bound ||h||; the series is truncated once the
/// Bessel coefficients fall below `tol`.
ComplexVector chebyshev_propagate(const SparseReal& h, const ComplexVector& v,
                                  double t, double spectral_radius,
                                  double tol = 1e-14);
ComplexVector chebyshev_propagate(const SparseComplex& h, const ComplexVector& v,
                                  double t, double spectral_radius,
                                  double tol = 1e-14);

/// Cheap upper bound on ||h|| (max absolute row sum).
double gershgorin_radius(const SparseReal& h);
double gershgorin_radius(const SparseComplex& h);

/// Clusters sorted eigenvalues into groups closer than tol.
/// Returns the start offsets of every group plus a final end offset.
std::vector<Eigen::Index> cluster_sorted(const RealVector& sorted_values,
                                         double tol);

}  // namespace linalg

namespace pauli {
// Spin basis is ordered (down, up): sigma_z|down> = +|down>,
// sigma_z|up> = -|up>.
ComplexMatrix identity();
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
/// |down><down|, |up><up|
ComplexMatrix down_projector();
ComplexMatrix up_projector();
}  // namespace pauli

}  // namespace ergo
