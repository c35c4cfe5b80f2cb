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

#include "ergo/configspace.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "ergo/linalg.hpp"

namespace ergo {

void LatticeSpec::validate() const {
  if (n < 2) throw PreconditionError("LatticeSpec: n must be at least 2");
  if (k < 1 || k >= n) throw PreconditionError("LatticeSpec: k must satisfy 1 <= k < n");
}

namespace lattice {

int row_offset(const LatticeSpec& spec, int row) { return row - spec.n; }

int row_length(const LatticeSpec& spec, int row) {
  return spec.n - std::abs(row_offset(spec, row));
}

int first_column(const LatticeSpec& spec, int row) {
  return std::abs(row_offset(spec, row)) + 1;
}

}  // namespace lattice

ChainConfiguration::ChainConfiguration(std::string word) : word_(std::move(word)) {
  if (word_.size() > 64) throw PreconditionError("ChainConfiguration: word longer than 64");
  for (char ch : word_) {
    if (ch != '0' && ch != '1') {
      throw PreconditionError("ChainConfiguration: word must be a bit string");
    }
  }
}

ChainConfiguration ChainConfiguration::initial(int m) {
  return ChainConfiguration(std::string(static_cast<std::size_t>(m), '0') +
                            std::string(static_cast<std::size_t>(m), '1'));
}

int ChainConfiguration::weight() const {
  return static_cast<int>(std::count(word_.begin(), word_.end(), '1'));
}

int ChainConfiguration::left_ones() const {
  const auto half = word_.begin() + static_cast<std::ptrdiff_t>(word_.size() / 2);
  return static_cast<int>(std::count(word_.begin(), half, '1'));
}

std::uint64_t ChainConfiguration::packed() const {
  std::uint64_t bits = 0;
  for (char ch : word_) bits = (bits << 1) | (ch == '1' ? 1u : 0u);
  return bits;
}

std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t out = 1;
  for (int i = 1; i <= r; ++i) out = out * static_cast<std::uint64_t>(n - r + i) / i;
  return out;
}

std::vector<ChainConfiguration> enumerate_words(int m) {
  if (m < 1) throw PreconditionError("enumerate_words: m must be positive");
  std::vector<ChainConfiguration> out;
  out.reserve(binomial(2 * m, m));
  std::string word = ChainConfiguration::initial(m).word();
  // 0^m 1^m is the lexicographically smallest weight-m word.
  do {
    out.emplace_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

std::vector<ChainConfiguration> enumerate_configs(const LatticeSpec& spec) {
  spec.validate();
  return enumerate_words(spec.m());
}

std::vector<ChainConfiguration> allowed_moves(const ChainConfiguration& c) {
  std::vector<ChainConfiguration> out;
  std::string w = c.word();
  for (std::size_t j = 0; j + 1 < w.size(); ++j) {
    if (w[j] != w[j + 1]) {
      std::swap(w[j], w[j + 1]);
      out.emplace_back(w);
      std::swap(w[j], w[j + 1]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SitePosition> decode_positions(const ChainConfiguration& c,
                                           const LatticeSpec& spec) {
  spec.validate();
  if (c.length() != spec.word_length() || c.weight() != spec.m()) {
    throw PreconditionError("decode_positions: word does not match lattice");
  }
  std::vector<SitePosition> out;
  out.reserve(static_cast<std::size_t>(spec.rows()));
  int x = spec.n + 1;  // horizontal coordinate i + j of the fixed top atom
  for (int row = 1; row <= spec.rows(); ++row) {
    if (row > 1) x += c.bit(row - 1) ? 1 : -1;
    const int d = lattice::row_offset(spec, row);
    out.push_back({row, (x + d) / 2, (x - d) / 2});
  }
  return out;
}

ChainConfiguration encode_positions(const std::vector<SitePosition>& sites,
                                    const LatticeSpec& spec) {
  spec.validate();
  if (static_cast<int>(sites.size()) != spec.rows()) {
    throw PreconditionError("encode_positions: need one site per row");
  }
  std::string word;
  for (std::size_t r = 0; r + 1 < sites.size(); ++r) {
    const int step = sites[r + 1].horizontal() - sites[r].horizontal();
    if (step != 1 && step != -1) {
      throw PreconditionError("encode_positions: chain is torn between rows " +
                              std::to_string(r + 1) + " and " + std::to_string(r + 2));
    }
    word.push_back(step == 1 ? '1' : '0');
  }
  return ChainConfiguration(word);
}

bool all_outside_region(const ChainConfiguration& c, const LatticeSpec& spec) {
  return c.left_ones() >= spec.k;
}

}  // namespace ergo
