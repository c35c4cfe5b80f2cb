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

#include <set>
#include <queue>

#include "doctest.h"
#include "ergo/configspace.hpp"
#include "ergo/linalg.hpp"

using namespace ergo;

namespace {

// Oracle: closure of the initial word under hand-rolled adjacent swaps.
std::set<std::string> bfs_words(int m) {
  std::string start = std::string(m, '0') + std::string(m, '1');
  std::set<std::string> seen{start};
  std::queue<std::string> q;
  q.push(start);
  while (!q.empty()) {
    std::string w = q.front();
    q.pop();
    for (std::size_t j = 0; j + 1 < w.size(); ++j) {
      if ((w[j] == '1' && w[j + 1] == '0') || (w[j] == '0' && w[j + 1] == '1')) {
        std::string v = w;
        std::swap(v[j], v[j + 1]);
        if (seen.insert(v).second) q.push(v);
      }
    }
  }
  return seen;
}

std::vector<std::string> words(const std::vector<ChainConfiguration>& cs) {
  std::vector<std::string> out;
  for (const auto& c : cs) out.push_back(c.word());
  return out;
}

}  // namespace

TEST_CASE("lattice spec validation") {
  CHECK_NOTHROW(LatticeSpec{2, 1}.validate());
  CHECK_THROWS_AS((LatticeSpec{1, 1}.validate()), PreconditionError);
  CHECK_THROWS_AS((LatticeSpec{3, 3}.validate()), PreconditionError);
  CHECK_THROWS_AS((LatticeSpec{3, 0}.validate()), PreconditionError);
}

TEST_CASE("enumerate_configs counts and order") {
  CHECK(words(enumerate_configs({2, 1})) == std::vector<std::string>{"01", "10"});
  for (int n : {3, 4, 5}) {
    const auto cs = enumerate_configs({n, 1});
    const auto oracle = bfs_words(n - 1);
    CHECK(cs.size() == oracle.size());
    const auto ws = words(cs);
    CHECK(std::set<std::string>(ws.begin(), ws.end()) == oracle);
    CHECK(std::is_sorted(cs.begin(), cs.end()));
  }
  CHECK(enumerate_configs({3, 1}).size() == 6);
  CHECK(enumerate_configs({4, 1}).size() == 20);
  CHECK(enumerate_configs({9, 1}).size() == 12870);
}

TEST_CASE("allowed_moves examples") {
  CHECK(words(allowed_moves(ChainConfiguration("01"))) == std::vector<std::string>{"10"});
  CHECK(words(allowed_moves(ChainConfiguration("0011"))) == std::vector<std::string>{"0101"});
  CHECK(words(allowed_moves(ChainConfiguration("0101"))) ==
        std::vector<std::string>{"0011", "0110", "1001"});
}

TEST_CASE("moves are symmetric and keep the weight") {
  for (int n : {3, 4, 5}) {
    for (const auto& c : enumerate_configs({n, 1})) {
      for (const auto& d : allowed_moves(c)) {
        CHECK(d.weight() == n - 1);
        const auto back = allowed_moves(d);
        CHECK(std::find(back.begin(), back.end(), c) != back.end());
      }
    }
  }
}

TEST_CASE("move graph is connected") {
  for (int n : {3, 4, 6}) {
    const auto all = enumerate_configs({n, 1});
    std::set<ChainConfiguration> seen{ChainConfiguration::initial(n - 1)};
    std::vector<ChainConfiguration> frontier{ChainConfiguration::initial(n - 1)};
    while (!frontier.empty()) {
      const auto c = frontier.back();
      frontier.pop_back();
      for (const auto& d : allowed_moves(c)) {
        if (seen.insert(d).second) frontier.push_back(d);
      }
    }
    CHECK(seen.size() == all.size());
  }
}

TEST_CASE("decode_positions: initial wedge") {
  const LatticeSpec n2{2, 1};
  const auto p = decode_positions(ChainConfiguration("01"), n2);
  REQUIRE(p.size() == 3);
  CHECK(p[0] == SitePosition{1, 1, 2});
  CHECK(p[1] == SitePosition{2, 1, 1});
  CHECK(p[2] == SitePosition{3, 2, 1});

  // Every atom of the initial chain sits at the left end of its row.
  const LatticeSpec n3{3, 1};
  const auto q = decode_positions(ChainConfiguration("0011"), n3);
  for (const auto& s : q) CHECK(s.column() == lattice::first_column(n3, s.row));
  CHECK(q.front() == SitePosition{1, 1, 3});
  CHECK(q.back() == SitePosition{5, 3, 1});
}

TEST_CASE("decode_positions: structure and round trip") {
  for (int n : {3, 4, 5}) {
    const LatticeSpec spec{n, 1};
    for (const auto& c : enumerate_configs(spec)) {
      const auto p = decode_positions(c, spec);
      REQUIRE(static_cast<int>(p.size()) == 2 * n - 1);
      CHECK(p.front() == SitePosition{1, 1, n});
      CHECK(p.back() == SitePosition{2 * n - 1, n, 1});
      for (std::size_t r = 0; r < p.size(); ++r) {
        CHECK(p[r].i >= 1);
        CHECK(p[r].i <= n);
        CHECK(p[r].j >= 1);
        CHECK(p[r].j <= n);
        CHECK(p[r].i - p[r].j + n == p[r].row);
        if (r + 1 < p.size()) {
          const int dx = p[r + 1].horizontal() - p[r].horizontal();
          CHECK(std::abs(dx) == 1);
          CHECK((dx == 1) == c.bit(static_cast<int>(r) + 1));
        }
      }
      CHECK(encode_positions(p, spec) == c);
    }
  }
}

TEST_CASE("encode_positions rejects torn chains") {
  const LatticeSpec spec{3, 1};
  auto p = decode_positions(ChainConfiguration("0011"), spec);
  p[2] = {3, 3, 3};
  CHECK_THROWS_AS((encode_positions(p, spec)), PreconditionError);
}

TEST_CASE("all_outside_region") {
  CHECK_FALSE(all_outside_region(ChainConfiguration::initial(4), {5, 1}));
  CHECK(all_outside_region(ChainConfiguration("11110000"), {5, 4}));
  CHECK(all_outside_region(ChainConfiguration("01011010"), {5, 2}));
  CHECK_FALSE(all_outside_region(ChainConfiguration("01011010"), {5, 3}));
}

TEST_CASE("all_outside_region agrees with decoded columns") {
  for (int n : {3, 4, 5}) {
    for (int k = 1; k < n; ++k) {
      const LatticeSpec spec{n, k};
      for (const auto& c : enumerate_configs(spec)) {
        bool outside = true;
        for (const auto& s : decode_positions(c, spec)) outside = outside && s.column() > k;
        CHECK(all_outside_region(c, spec) == outside);
      }
    }
  }
}

TEST_CASE("chain configuration validation") {
  CHECK_THROWS_AS((ChainConfiguration("0121")), PreconditionError);
  CHECK_THROWS_AS((decode_positions(ChainConfiguration("0111"), {3, 1})), PreconditionError);
  CHECK(ChainConfiguration("0011").packed() == 3u);
  CHECK(binomial(16, 8) == 12870u);
}
