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

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "ergo/linalg.hpp"

namespace ergo {

/// Dense or sparse Hermitian matrix with one label per basis state.
///
/// Storage is dense below `kDenseLimit` and compressed sparse above it.
/// Construction rejects inputs whose Hermiticity defect exceeds
/// `kHermitianTol`.
class HermitianOperator {
 public:
  static constexpr Eigen::Index kDenseLimit = 4096;
  static constexpr double kHermitianTol = 1e-12;

  using Triplet = Eigen::Triplet<cd>;

  HermitianOperator() = default;
  HermitianOperator(ComplexMatrix matrix, std::vector<std::string> basis);
  HermitianOperator(SparseComplex matrix, std::vector<std::string> basis);

  /// Builds from (row, col, value) entries; duplicates are summed.
  static HermitianOperator from_triplets(Eigen::Index dimension,
                                         const std::vector<Triplet>& entries,
                                         std::vector<std::string> basis);

  Eigen::Index dimension() const { return static_cast<Eigen::Index>(basis_.size()); }
  const std::vector<std::string>& basis() const { return basis_; }
  bool is_sparse() const { return std::holds_alternative<SparseComplex>(storage_); }

  ComplexMatrix to_dense() const;
  SparseComplex to_sparse() const;
  /// Real part as a sparse matrix; throws if any imaginary part exceeds tol.
  SparseReal to_sparse_real(double tol = 1e-14) const;

  cd entry(Eigen::Index row, Eigen::Index col) const;
  ComplexVector apply(const ComplexVector& v) const;

  /// Nonzero entries in row-major order.
  std::vector<Triplet> nonzeros(double tol = 0.0) const;

  /// `row col re im` per line, zero-based indices, 17 significant digits.
  void write_triplets(std::ostream& out, double tol = 0.0) const;
  /// {"dimension", "basis", "entries": [[row, col, re, im], ...]}
  std::string to_json(double tol = 0.0) const;

  /// Parses the text produced by write_triplets; basis labels are the
  /// decimal indices unless given.
  static HermitianOperator read_triplets(std::istream& in, Eigen::Index dimension,
                                         std::vector<std::string> basis = {});

 private:
  void validate() const;

  std::variant<ComplexMatrix, SparseComplex> storage_;
  std::vector<std::string> basis_;
};

/// max entrywise |a - b| over the union of nonzero patterns.
double max_entry_difference(const HermitianOperator& a, const HermitianOperator& b);

}  // namespace ergo
