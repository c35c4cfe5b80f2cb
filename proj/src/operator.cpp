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

#include "ergo/operator.hpp"

#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ergo {

HermitianOperator::HermitianOperator(ComplexMatrix matrix, std::vector<std::string> basis)
    : storage_(std::move(matrix)), basis_(std::move(basis)) {
  validate();
}

HermitianOperator::HermitianOperator(SparseComplex matrix, std::vector<std::string> basis)
    : storage_(std::move(matrix)), basis_(std::move(basis)) {
  std::get<SparseComplex>(storage_).makeCompressed();
  validate();
}

HermitianOperator HermitianOperator::from_triplets(Eigen::Index dimension,
                                                   const std::vector<Triplet>& entries,
                                                   std::vector<std::string> basis) {
  if (static_cast<Eigen::Index>(basis.size()) != dimension) {
    throw PreconditionError("HermitianOperator: basis size does not match dimension");
  }
  if (dimension < kDenseLimit) {
    ComplexMatrix m = ComplexMatrix::Zero(dimension, dimension);
    for (const auto& t : entries) m(t.row(), t.col()) += t.value();
    return HermitianOperator(std::move(m), std::move(basis));
  }
  SparseComplex s(dimension, dimension);
  s.setFromTriplets(entries.begin(), entries.end());
  return HermitianOperator(std::move(s), std::move(basis));
}

void HermitianOperator::validate() const {
  Eigen::Index rows = 0, cols = 0;
  std::visit([&](const auto& m) { rows = m.rows(); cols = m.cols(); }, storage_);
  if (rows != cols || rows != dimension()) {
    throw PreconditionError("HermitianOperator: matrix shape does not match basis");
  }
  double defect = 0.0;
  if (const auto* d = std::get_if<ComplexMatrix>(&storage_)) {
    defect = linalg::hermiticity_defect(*d);
  } else {
    const auto& s = std::get<SparseComplex>(storage_);
    const SparseComplex diff = s - SparseComplex(s.adjoint());
    for (int k = 0; k < diff.outerSize(); ++k) {
      for (SparseComplex::InnerIterator it(diff, k); it; ++it) {
        defect = std::max(defect, std::abs(it.value()));
      }
    }
  }
  if (defect > kHermitianTol) {
    std::ostringstream msg;
    msg << "HermitianOperator: Hermiticity defect " << defect << " exceeds tolerance";
    throw PreconditionError(msg.str());
  }
}

ComplexMatrix HermitianOperator::to_dense() const {
  if (const auto* d = std::get_if<ComplexMatrix>(&storage_)) return *d;
  return ComplexMatrix(std::get<SparseComplex>(storage_));
}

SparseComplex HermitianOperator::to_sparse() const {
  if (const auto* s = std::get_if<SparseComplex>(&storage_)) return *s;
  return std::get<ComplexMatrix>(storage_).sparseView();
}

SparseReal HermitianOperator::to_sparse_real(double tol) const {
  std::vector<Eigen::Triplet<double>> real;
  for (const auto& t : nonzeros()) {
    if (std::abs(t.value().imag()) > tol) {
      throw PreconditionError("HermitianOperator: operator is not real");
    }
    real.emplace_back(t.row(), t.col(), t.value().real());
  }
  SparseReal out(dimension(), dimension());
  out.setFromTriplets(real.begin(), real.end());
  return out;
}

cd HermitianOperator::entry(Eigen::Index row, Eigen::Index col) const {
  if (const auto* d = std::get_if<ComplexMatrix>(&storage_)) return (*d)(row, col);
  return std::get<SparseComplex>(storage_).coeff(row, col);
}

ComplexVector HermitianOperator::apply(const ComplexVector& v) const {
  return std::visit([&](const auto& m) -> ComplexVector { return m * v; }, storage_);
}

std::vector<HermitianOperator::Triplet> HermitianOperator::nonzeros(double tol) const {
  std::vector<Triplet> out;
  if (const auto* d = std::get_if<ComplexMatrix>(&storage_)) {
    for (Eigen::Index i = 0; i < d->rows(); ++i) {
      for (Eigen::Index j = 0; j < d->cols(); ++j) {
        const cd v = (*d)(i, j);
        if (std::abs(v) > tol) out.emplace_back(i, j, v);
      }
    }
    return out;
  }
  // Row-major traversal of a column-major matrix.
  const Eigen::SparseMatrix<cd, Eigen::RowMajor> rm(std::get<SparseComplex>(storage_));
  for (int k = 0; k < rm.outerSize(); ++k) {
    for (Eigen::SparseMatrix<cd, Eigen::RowMajor>::InnerIterator it(rm, k); it; ++it) {
      if (std::abs(it.value()) > tol) out.emplace_back(it.row(), it.col(), it.value());
    }
  }
  return out;
}

void HermitianOperator::write_triplets(std::ostream& out, double tol) const {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(17);
  for (const auto& t : nonzeros(tol)) {
    out << t.row() << ' ' << t.col() << ' ' << t.value().real() << ' ' << t.value().imag()
        << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

std::string HermitianOperator::to_json(double tol) const {
  nlohmann::json j;
  j["dimension"] = dimension();
  j["basis"] = basis_;
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& t : nonzeros(tol)) {
    entries.push_back({t.row(), t.col(), t.value().real(), t.value().imag()});
  }
  j["entries"] = std::move(entries);
  return j.dump();
}

HermitianOperator HermitianOperator::read_triplets(std::istream& in, Eigen::Index dimension,
                                                   std::vector<std::string> basis) {
  if (basis.empty()) {
    for (Eigen::Index i = 0; i < dimension; ++i) basis.push_back(std::to_string(i));
  }
  std::vector<Triplet> entries;
  Eigen::Index r = 0, c = 0;
  double re = 0.0, im = 0.0;
  while (in >> r >> c >> re >> im) {
    if (r < 0 || c < 0 || r >= dimension || c >= dimension) {
      throw PreconditionError("read_triplets: index out of range");
    }
    entries.emplace_back(r, c, cd(re, im));
  }
  return from_triplets(dimension, entries, std::move(basis));
}

double max_entry_difference(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.dimension() != b.dimension()) return INFINITY;
  const SparseComplex diff = a.to_sparse() - b.to_sparse();
  double worst = 0.0;
  for (int k = 0; k < diff.outerSize(); ++k) {
    for (SparseComplex::InnerIterator it(diff, k); it; ++it) {
      worst = std::max(worst, std::abs(it.value()));
    }
  }
  return worst;
}

}  // namespace ergo
