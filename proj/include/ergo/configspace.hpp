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
#include <string>
#include <vector>

namespace ergo {

/// Diagonal n x n lattice carrying a chain of 2n-1 atoms, with a k x k
/// circuit region in the left corner.
///
/// Black-grid sites are (i, j) with 1 <= i, j <= n. Chain row r = i - j + n
/// runs from 1 (the single site (1, n) at the top) to 2n-1 (the single site
/// (n, 1) at the bottom). Atoms hop along rows, (i, j) <-> (i+1, j+1).
struct LatticeSpec {
  int n = 2;
  int k = 1;

  int m() const { return n - 1; }
  int word_length() const { return 2 * (n - 1); }
  int rows() const { return 2 * n - 1; }

  /// Throws PreconditionError unless n >= 2 and 1 <= k < n.
  void validate() const;
};

/// Row/column geometry shared by the lattice builders.
namespace lattice {
/// i - j for chain row r.
int row_offset(const LatticeSpec& spec, int row);
/// Number of black sites in chain row r.
int row_length(const LatticeSpec& spec, int row);
/// Column of a site is max(i, j); rows start at column |i - j| + 1.
int first_column(const LatticeSpec& spec, int row);
}  // namespace lattice

/// Allowed chain position encoded as a binary word of length 2m.
///
/// Bit j (1-based, counted from the top) is 1 iff the atom in row j+1 is in
/// front of (to the right of) the atom in row j.
class ChainConfiguration {
 public:
  ChainConfiguration() = default;
  explicit ChainConfiguration(std::string word);

  /// 0^m 1^m
  static ChainConfiguration initial(int m);

  const std::string& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  int weight() const;
  bool bit(int j) const { return word_[static_cast<std::size_t>(j - 1)] == '1'; }

  /// Number of 1-bits among the first length()/2 positions.
  int left_ones() const;

  /// Word bits packed with position 1 as the most significant bit, so
  /// integer order equals lexicographic order.
  std::uint64_t packed() const;

  friend bool operator==(const ChainConfiguration&, const ChainConfiguration&) = default;
  friend auto operator<=>(const ChainConfiguration& a, const ChainConfiguration& b) {
    return a.word_ <=> b.word_;
  }

 private:
  std::string word_;
};

/// Lattice site occupied by the atom of one chain row.
struct SitePosition {
  int row = 0;  // 1 .. 2n-1
  int i = 0;    // black-grid coordinates
  int j = 0;

  int horizontal() const { return i + j; }
  int column() const { return i > j ? i : j; }
  friend bool operator==(const SitePosition&, const SitePosition&) = default;
};

/// All C(2m, m) words of weight m in lexicographic order.
std::vector<ChainConfiguration> enumerate_configs(const LatticeSpec& spec);

/// Words of length 2m and weight m, for callers that only know m.
std::vector<ChainConfiguration> enumerate_words(int m);

/// Every word reachable by one adjacent "10" <-> "01" swap, sorted.
std::vector<ChainConfiguration> allowed_moves(const ChainConfiguration& c);

/// Atom sites, one per row, anchored at the fixed top atom (1, n).
std::vector<SitePosition> decode_positions(const ChainConfiguration& c,
                                           const LatticeSpec& spec);

/// Inverse of decode_positions; throws if adjacent rows are not diagonal
/// neighbours.
ChainConfiguration encode_positions(const std::vector<SitePosition>& sites,
                                    const LatticeSpec& spec);

/// True iff every atom has left the k x k circuit region, i.e. at least k
/// ones sit in the left half of the word.
bool all_outside_region(const ChainConfiguration& c, const LatticeSpec& spec);

/// Binomial coefficient, exact for the sizes used here.
std::uint64_t binomial(int n, int r);

}  // namespace ergo
