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

#include "ergo/perturbation.hpp"

#include <cmath>
#include <limits>

#include "ergo/hamiltonian.hpp"

namespace ergo {

namespace {

bool is_diagonal(const ComplexMatrix& a) {
  for (Eigen::Index c = 0; c < a.cols(); ++c) {
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r != c && a(r, c) != cd(0.0)) return false;
    }
  }
  return true;
}

ComplexMatrix unitary_polar_factor(const ComplexMatrix& a) {
  Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace

SpectralSplit SpectralSplit::at(const HermitianOperator& op, double lambda_star) {
  const ComplexMatrix h = op.to_dense();
  const Eigen::Index d = h.rows();
  RealVector values(d);
  ComplexMatrix vectors;
  if (is_diagonal(h)) {
    values = h.diagonal().real();
    vectors = ComplexMatrix::Identity(d, d);
  } else {
    const auto es = linalg::eigh(h);
    values = es.values;
    vectors = es.vectors;
  }
  SpectralSplit s;
  s.op = op;
  s.lambda_star = lambda_star;
  s.gap = std::numeric_limits<double>::infinity();
  std::vector<Eigen::Index> lo, hi;
  for (Eigen::Index i = 0; i < d; ++i) {
    s.gap = std::min(s.gap, 2.0 * std::abs(values(i) - lambda_star));
    (values(i) < lambda_star ? lo : hi).push_back(i);
  }
  auto take = [&](const std::vector<Eigen::Index>& idx, ComplexMatrix& basis, RealVector& vals) {
    basis.resize(d, static_cast<Eigen::Index>(idx.size()));
    vals.resize(static_cast<Eigen::Index>(idx.size()));
    for (std::size_t c = 0; c < idx.size(); ++c) {
      basis.col(static_cast<Eigen::Index>(c)) = vectors.col(idx[c]);
      vals(static_cast<Eigen::Index>(c)) = values(idx[c]);
    }
  };
  take(lo, s.minus_basis, s.minus_values);
  take(hi, s.plus_basis, s.plus_values);
  return s;
}

ComplexMatrix green_plus(const SpectralSplit& split, cd z) {
  const Eigen::Index p = split.plus_values.size();
  ComplexMatrix g = ComplexMatrix::Zero(p, p);
  for (Eigen::Index i = 0; i < p; ++i) {
    const cd denom = z - split.plus_values(i);
    if (std::abs(denom) == 0.0) throw NumericalError("green_plus: z hits the plus spectrum");
    g(i, i) = 1.0 / denom;
  }
  return g;
}

SelfEnergy self_energy(const SpectralSplit& split, const HermitianOperator& k, cd z) {
  if (k.dimension() != split.op.dimension()) {
    throw PreconditionError("self_energy: K and the split operator differ in dimension");
  }
  const ComplexMatrix kk = k.to_dense();
  const ComplexMatrix& bm = split.minus_basis;
  const ComplexMatrix& bp = split.plus_basis;
  const ComplexMatrix kmm = bm.adjoint() * kk * bm;
  const ComplexMatrix kmp = bm.adjoint() * kk * bp;
  const ComplexMatrix kpm = bp.adjoint() * kk * bm;
  const ComplexMatrix kpp = bp.adjoint() * kk * bp;
  const ComplexMatrix g = green_plus(split, z);

  SelfEnergy out;
  out.z = z;
  const ComplexMatrix kg = kpp * g;
  out.neumann_norm = linalg::operator_norm(kg);
  if (!(out.neumann_norm < 1.0)) {
    throw PreconditionError("self_energy: ||K_{++} G_+(z)|| = " + std::to_string(out.neumann_norm) +
                            " >= 1");
  }
  const ComplexMatrix m = ComplexMatrix::Identity(kg.rows(), kg.cols()) - kg;
  Eigen::PartialPivLU<ComplexMatrix> lu(m);
  out.condition = m.rows() == 0 ? 1.0 : lu.rcond();
  if (!(out.condition > 1e-14)) {
    throw NumericalError("self_energy: 1 - K_{++} G_+ is singular (rcond " +
                         std::to_string(out.condition) + ")");
  }
  const ComplexMatrix hm = split.minus_values.cast<cd>().asDiagonal();
  out.value = hm + kmm + (m.rows() == 0 ? ComplexMatrix::Zero(kmm.rows(), kmm.cols())
                                        : ComplexMatrix(kmp * g * lu.solve(kpm)));
  return out;
}

PerturbationSetup perturbation_setup(int n, double E) {
  if (!(E > 0.0)) throw PreconditionError("perturbation: E must be positive");
  PerturbationSetup s;
  s.spec = LatticeSpec{n, 1};
  s.spec.validate();
  s.E = E;
  const SectorBasis sector = SectorBasis::one_atom_per_row(s.spec);
  const SectorBasis chain = SectorBasis::connected_chain(s.spec);
  s.k = build_K(s.spec, sector);
  s.heff = effective_hamiltonian(s.spec, E);
  s.split = SpectralSplit::at(build_Hpot(s.spec, E, sector), E / 2.0);
  s.embedding = ComplexMatrix::Zero(sector.dimension(), chain.dimension());
  for (Eigen::Index c = 0; c < chain.dimension(); ++c) {
    s.embedding(sector.index.at(chain.steps[static_cast<std::size_t>(c)]), c) = 1.0;
  }
  if (s.split.minus_basis.cols() != chain.dimension()) {
    throw NumericalError("perturbation: low sector of H_pot is not the chain space");
  }
  return s;
}

double self_energy_deviation(const PerturbationSetup& setup, cd z) {
  const SelfEnergy se = self_energy(setup.split, setup.k, z);
  // minus_basis coordinates -> chain coordinates
  const ComplexMatrix map = setup.embedding.adjoint() * setup.split.minus_basis;
  const ComplexMatrix sigma = map * se.value * map.adjoint();
  return linalg::operator_norm(sigma - setup.heff.to_dense());
}

BoundCheck lemma1_check(int n, double E) {
  const PerturbationSetup s = perturbation_setup(n, E);
  const SectorBasis sector = SectorBasis::one_atom_per_row(s.spec);
  const ComplexMatrix h = build_sync(s.spec, E, sector).to_dense();
  const auto es = linalg::eigh(h);
  Eigen::Index low = 0;
  while (low < es.values.size() && es.values(low) < E / 2.0) ++low;
  if (low != s.embedding.cols()) {
    throw NumericalError("lemma1_check: " + std::to_string(low) +
                         " eigenvalues below E/2, expected the chain dimension (gap absent)");
  }
  const ComplexMatrix vlow = es.vectors.leftCols(low);
  const ComplexMatrix w = unitary_polar_factor(s.embedding.adjoint() * vlow);
  const ComplexMatrix mapped = w * es.values.head(low).cast<cd>().asDiagonal() * w.adjoint();
  BoundCheck r;
  r.lhs = linalg::operator_norm(mapped - s.heff.to_dense());
  r.rhs = 9.0 * std::pow(n, 3) / std::sqrt(E);
  r.holds = r.lhs <= r.rhs;
  return r;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw PreconditionError("loglog_slope: need >= 2 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw PreconditionError("loglog_slope: values must be positive");
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

StateErrorResult theorem1_check(int n, double E, const std::vector<double>& times) {
  const PerturbationSetup s = perturbation_setup(n, E);
  const SectorBasis sector = SectorBasis::one_atom_per_row(s.spec);
  const auto full = linalg::eigh(build_sync(s.spec, E, sector).to_dense());
  const auto eff = linalg::eigh(s.heff.to_dense());
  const double eps = 9.0 * std::pow(n, 3) / std::sqrt(E);
  const double offset = 2.0 * n * std::sqrt(2.0 / E);

  StateErrorResult r;
  r.max_margin = -std::numeric_limits<double>::infinity();
  for (double t : times) {
    const ComplexMatrix a = linalg::propagate(full, t) * s.embedding;
    const ComplexMatrix b = s.embedding * linalg::propagate(eff, t);
    const ComplexMatrix diff = a - b;
    double worst = 0.0;
    for (Eigen::Index c = 0; c < diff.cols(); ++c) worst = std::max(worst, diff.col(c).norm());
    const double rhs = eps * t + offset;
    r.times.push_back(t);
    r.worst_lhs.push_back(worst);
    r.rhs.push_back(rhs);
    r.max_lhs = std::max(r.max_lhs, worst);
    r.max_margin = std::max(r.max_margin, worst - rhs);
  }
  return r;
}

}  // namespace ergo
