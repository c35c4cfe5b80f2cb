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

#include "ergo/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace ergo {
namespace linalg {

Eigensystem eigh(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigh: Hermitian eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix propagate(const Eigensystem& es, double t) {
  ComplexVector phases(es.values.size());
  for (Eigen::Index i = 0; i < es.values.size(); ++i) {
    phases(i) = std::exp(cd(0.0, -es.values(i) * t));
  }
  return es.vectors * phases.asDiagonal() * es.vectors.adjoint();
}

ComplexMatrix expm_hermitian(const ComplexMatrix& h, double t) {
  return propagate(eigh(h), t);
}

double operator_norm(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  return svd.singularValues()(0);
}

double hermiticity_defect(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) return INFINITY;
  if (a.size() == 0) return 0.0;
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_defect(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) return INFINITY;
  if (a.size() == 0) return 0.0;
  const ComplexMatrix id = ComplexMatrix::Identity(a.rows(), a.cols());
  return (a.adjoint() * a - id).cwiseAbs().maxCoeff();
}

double phase_invariant_fidelity(const ComplexMatrix& u, const ComplexMatrix& v) {
  const double d = static_cast<double>(u.rows());
  const double overlap = std::abs((u.adjoint() * v).trace()) / d;
  return overlap * overlap;
}

double phase_stripped_distance(const ComplexMatrix& u, const ComplexMatrix& v) {
  const double d = static_cast<double>(u.rows());
  // The optimal phase aligns tr(v^dagger u); subtract explicitly to avoid cancellation.
  const cd cross = (v.adjoint() * u).trace();
  const cd phase = std::abs(cross) > 0.0 ? cross / std::abs(cross) : cd(1.0);
  return (u - phase * v).norm() / std::sqrt(d);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

namespace {

template <class Sparse>
double row_sum_bound(const Sparse& h) {
  RealVector row_sums = RealVector::Zero(h.rows());
  for (int k = 0; k < h.outerSize(); ++k) {
    for (typename Sparse::InnerIterator it(h, k); it; ++it) {
      row_sums(it.row()) += std::abs(it.value());
    }
  }
  return row_sums.size() == 0 ? 0.0 : row_sums.maxCoeff();
}

template <class Sparse>
ComplexVector chebyshev_impl(const Sparse& h, const ComplexVector& v, double t,
                             double spectral_radius, double tol) {
  if (t == 0.0 || spectral_radius == 0.0) return v;
  if (!(spectral_radius > 0.0)) {
    throw PreconditionError("chebyshev_propagate: spectral radius must be positive");
  }
  // Rescale to [-1, 1]; a small margin keeps the bound strict.
  const double radius = spectral_radius * 1.01;
  const double x = radius * t;
  const double ax = std::abs(x);
  const Sparse scaled = h / radius;

  ComplexVector t_prev = v;
  ComplexVector t_curr = scaled * v;
  ComplexVector result = std::cyl_bessel_j(0.0, ax) * v;
  // exp(-i x y) = J_0(x) + 2 sum_k (-i)^k J_k(x) T_k(y), x >= 0.
  const cd minus_i = (x >= 0.0) ? cd(0.0, -1.0) : cd(0.0, 1.0);
  cd phase = minus_i;
  for (int k = 1;; ++k) {
    const double jk = std::cyl_bessel_j(static_cast<double>(k), ax);
    result += 2.0 * phase * jk * t_curr;
    if (k > ax + 8.0 && std::abs(jk) < tol) break;
    if (k > 100000) throw NumericalError("chebyshev_propagate: series did not converge");
    ComplexVector t_next = 2.0 * (scaled * t_curr) - t_prev;
    t_prev = std::move(t_curr);
    t_curr = std::move(t_next);
    phase *= minus_i;
  }
  return result;
}

}  // namespace

double gershgorin_radius(const SparseReal& h) { return row_sum_bound(h); }
double gershgorin_radius(const SparseComplex& h) { return row_sum_bound(h); }

ComplexVector chebyshev_propagate(const SparseReal& h, const ComplexVector& v,
                                  double t, double spectral_radius, double tol) {
  return chebyshev_impl(h, v, t, spectral_radius, tol);
}

ComplexVector chebyshev_propagate(const SparseComplex& h, const ComplexVector& v,
                                  double t, double spectral_radius, double tol) {
  return chebyshev_impl(h, v, t, spectral_radius, tol);
}

std::vector<Eigen::Index> cluster_sorted(const RealVector& sorted_values, double tol) {
  std::vector<Eigen::Index> starts;
  for (Eigen::Index i = 0; i < sorted_values.size(); ++i) {
    if (i == 0 || sorted_values(i) - sorted_values(i - 1) > tol) starts.push_back(i);
  }
  starts.push_back(sorted_values.size());
  return starts;
}

}  // namespace linalg

namespace pauli {

ComplexMatrix identity() { return ComplexMatrix::Identity(2, 2); }

ComplexMatrix x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

ComplexMatrix y() {
  ComplexMatrix m(2, 2);
  m << 0.0, cd(0.0, -1.0), cd(0.0, 1.0), 0.0;
  return m;
}

ComplexMatrix z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

ComplexMatrix down_projector() {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 1.0;
  return m;
}

ComplexMatrix up_projector() {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(1, 1) = 1.0;
  return m;
}

}  // namespace pauli
}  // namespace ergo
