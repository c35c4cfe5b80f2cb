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

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "ergo/hamiltonian.hpp"
#include "ergo/holonomy.hpp"

using namespace ergo;

namespace {

// Oracle: adjacency of the swap graph written out directly from words.
RealMatrix swap_adjacency(int m) {
  std::vector<std::string> ws;
  std::string w = std::string(m, '0') + std::string(m, '1');
  do ws.push_back(w); while (std::next_permutation(w.begin(), w.end()));
  std::map<std::string, int> idx;
  for (std::size_t i = 0; i < ws.size(); ++i) idx[ws[i]] = static_cast<int>(i);
  RealMatrix a = RealMatrix::Zero(static_cast<int>(ws.size()), static_cast<int>(ws.size()));
  for (std::size_t i = 0; i < ws.size(); ++i) {
    for (std::size_t j = 0; j + 1 < ws[i].size(); ++j) {
      std::string v = ws[i];
      if (v[j] == v[j + 1]) continue;
      std::swap(v[j], v[j + 1]);
      a(idx[v], static_cast<int>(i)) = 1.0;
    }
  }
  return a;
}

double max_abs(const ComplexMatrix& a) { return a.size() ? a.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

TEST_CASE("K on the connected sector for n = 2") {
  const LatticeSpec spec{2, 1};
  const ComplexMatrix k = build_K(spec, SectorBasis::connected_chain(spec)).to_dense();
  RealMatrix expect(2, 2);
  expect << 0, 1, 1, 0;
  CHECK(max_abs(k - expect.cast<cd>()) == 0.0);
}

TEST_CASE("K structure and norm bound") {
  for (int n : {2, 3, 4}) {
    const LatticeSpec spec{n, 1};
    for (const SectorBasis& b : {SectorBasis::one_atom_per_row(spec), SectorBasis::connected_chain(spec)}) {
      const HermitianOperator k = build_K(spec, b);
      const ComplexMatrix d = k.to_dense();
      CHECK(linalg::operator_norm(d) <= n * n);
      CHECK(max_abs(d.diagonal()) == 0.0);
      CHECK(linalg::hermiticity_defect(d) == 0.0);
      for (const auto& t : k.nonzeros()) {
        CHECK(t.value() == cd(1.0));
        // A hop moves exactly one atom one step along its own row.
        const auto& a = b.steps[static_cast<std::size_t>(t.row())];
        const auto& c = b.steps[static_cast<std::size_t>(t.col())];
        int changed = 0, total = 0;
        for (std::size_t r = 0; r < a.size(); ++r) {
          changed += a[r] != c[r];
          total += std::abs(a[r] - c[r]);
        }
        CHECK(changed == 1);
        CHECK(total == 1);
      }
    }
  }
  CHECK_THROWS_AS((build_K({3, 1}, SectorBasis::spinful({3, 1}))), PreconditionError);
}

TEST_CASE("sector bases") {
  const LatticeSpec spec{3, 1};
  const auto full = SectorBasis::one_atom_per_row(spec);
  const auto chain = SectorBasis::connected_chain(spec);
  CHECK(full.dimension() == 12);
  CHECK(SectorBasis::one_atom_per_row({4, 1}).dimension() == 144);
  CHECK(chain.dimension() == 6);
  for (const auto& s : chain.steps) CHECK(full.index.count(s) == 1);
  const auto spin = SectorBasis::spinful(spec);
  CHECK(spin.dimension() == 6 * 32);
  CHECK(spin.labels.front() == "0011|ddddd");
  CHECK_THROWS_AS((SectorBasis::one_atom_per_row({6, 1})), PreconditionError);
}

TEST_CASE("H_pot energies") {
  const double E = 7.5;
  for (int n : {2, 3, 4}) {
    const LatticeSpec spec{n, 1};
    const auto full = SectorBasis::one_atom_per_row(spec);
    const auto chain = SectorBasis::connected_chain(spec);
    CHECK(max_abs(build_Hpot(spec, E, chain).to_dense()) == 0.0);
    const ComplexMatrix h = build_Hpot(spec, E, full).to_dense();
    CHECK(max_abs(h - ComplexMatrix(h.diagonal().asDiagonal())) == 0.0);
    for (Eigen::Index s = 0; s < full.dimension(); ++s) {
      const double v = h(s, s).real();
      const bool connected = chain.index.count(full.steps[static_cast<std::size_t>(s)]) > 0;
      if (connected) {
        CHECK(v == 0.0);
      } else {
        CHECK(v >= E);
      }
      CHECK(std::abs(v / E - std::round(v / E)) < 1e-12);
    }
    const auto init = steps_of(spec, decode_positions(ChainConfiguration::initial(n - 1), spec));
    CHECK(h(full.index.at(init), full.index.at(init)).real() == 0.0);
  }
  CHECK_THROWS_AS((build_Hpot({3, 1}, 0.0, SectorBasis::connected_chain({3, 1}))), PreconditionError);
}

TEST_CASE("effective Hamiltonian identities") {
  RealMatrix two(2, 2);
  two << 0, 1, 1, 0;
  CHECK(max_abs(effective_hamiltonian({2, 1}, 100.0).to_dense() - two.cast<cd>()) == 0.0);
  for (int n : {2, 3, 4}) {
    const LatticeSpec spec{n, 1};
    const HermitianOperator heff = effective_hamiltonian(spec, 1e3);
    const ComplexMatrix oracle = swap_adjacency(n - 1).cast<cd>();
    CHECK(max_abs(heff.to_dense() - oracle) <= 1e-12);
    CHECK(max_entry_difference(heff, move_graph_adjacency(spec)) <= 1e-12);
    CHECK(max_entry_difference(heff, conditional_hopping(spec)) <= 1e-12);
    CHECK(max_entry_difference(heff, build_Hs(n - 1)) <= 1e-12);
    CHECK(max_entry_difference(heff, build_K(spec, SectorBasis::connected_chain(spec))) <= 1e-12);
    CHECK(heff.basis() == build_Hs(n - 1).basis());
  }
}

TEST_CASE("build_Hs") {
  const ComplexMatrix m1 = build_Hs(1).to_dense();
  CHECK(m1(0, 1) == cd(1.0));
  CHECK(m1(1, 0) == cd(1.0));
  CHECK(m1(0, 0) == cd(0.0));

  for (int m : {2, 3}) {
    const HermitianOperator full = build_Hs(m, HsSpace::full);
    const ComplexMatrix h = full.to_dense();
    ComplexMatrix weight = ComplexMatrix::Zero(h.rows(), h.cols());
    for (Eigen::Index s = 0; s < h.rows(); ++s) weight(s, s) = ChainConfiguration(full.basis()[s]).weight();
    CHECK(max_abs(h * weight - weight * h) == 0.0);

    // Sums of m distinct single-particle levels.
    std::vector<double> levels;
    for (int r = 1; r <= 2 * m; ++r) levels.push_back(2.0 * std::cos(r * kPi / (2 * m + 1)));
    std::vector<double> sums;
    std::vector<int> pick(2 * m, 0);
    std::fill(pick.end() - m, pick.end(), 1);
    do {
      double s = 0;
      for (int r = 0; r < 2 * m; ++r) s += pick[r] * levels[r];
      sums.push_back(s);
    } while (std::next_permutation(pick.begin(), pick.end()));
    std::sort(sums.begin(), sums.end());
    const RealVector ev = linalg::eigh(build_Hs(m).to_dense()).values;
    REQUIRE(ev.size() == static_cast<Eigen::Index>(sums.size()));
    for (std::size_t i = 0; i < sums.size(); ++i) CHECK(std::abs(ev(i) - sums[i]) < 1e-10);
  }
  CHECK(build_Hs(7, HsSpace::full).is_sparse());
  CHECK_FALSE(build_Hs(3, HsSpace::full).is_sparse());
  CHECK_THROWS_AS((build_Hs(0)), PreconditionError);
}

TEST_CASE("operator export round trip") {
  const HermitianOperator h = build_Hs(2);
  std::stringstream ss;
  h.write_triplets(ss);
  const HermitianOperator back = HermitianOperator::read_triplets(ss, h.dimension(), h.basis());
  CHECK(max_entry_difference(h, back) == 0.0);
  const auto j = nlohmann::json::parse(h.to_json());
  CHECK(j.at("dimension").get<int>() == 6);
  CHECK(j.at("basis").at(0).get<std::string>() == "0011");
  CHECK(j.at("entries").size() == h.nonzeros().size());
  std::vector<HermitianOperator::Triplet> bad{{0, 1, cd(0.0, 1.0)}};
  CHECK_THROWS_AS((HermitianOperator::from_triplets(2, bad, {"a", "b"})), PreconditionError);
}

TEST_CASE("complete Hamiltonian without stripes") {
  const LatticeSpec spec{3, 2};
  CircuitLayout empty;
  empty.lattice = spec;
  const ComplexMatrix h = build_complete(spec, 50.0, empty).to_dense();
  const ComplexMatrix expect =
      linalg::kron(effective_hamiltonian(spec, 50.0).to_dense(), ComplexMatrix::Identity(32, 32));
  CHECK(max_abs(h - expect) <= 1e-12);
}

TEST_CASE("complete Hamiltonian stripes act only inside the region") {
  const LatticeSpec spec{4, 3};
  LogicalCircuit c{1, {LogicalGate::rot_x(1, kPi / 2)}};
  const CircuitLayout lay = compile(c, 2, spec);
  REQUIRE(validate(lay).empty());
  const HermitianOperator hc = build_complete(spec, 20.0, lay);
  const ComplexMatrix h = hc.to_dense();
  CHECK(linalg::hermiticity_defect(h) <= 1e-12);

  const auto chain = SectorBasis::connected_chain(spec);
  const Eigen::Index spins = 128;
  int active = 0;
  for (Eigen::Index c0 = 0; c0 < chain.dimension(); ++c0) {
    const ComplexMatrix block = h.block(c0 * spins, c0 * spins, spins, spins);
    const ChainConfiguration cfg(chain.labels[static_cast<std::size_t>(c0)]);
    if (all_outside_region(cfg, spec)) CHECK(max_abs(block) == 0.0);
    if (max_abs(block) > 0.0) {
      ++active;
      // The block is one V_j of the stripe on chain rows 4 and 5.
      const auto sites = decode_positions(cfg, spec);
      const int j = sites[lay.chain_row(2) - 1].column() - lay.lattice_column(1) + 1;
      const ComplexMatrix v = stripe::one_qubit_step(j, 2, lay.stripes[0].phi, Axis::x);
      const ComplexMatrix expect = linalg::kron(linalg::kron(ComplexMatrix::Identity(8, 8), v),
                                                ComplexMatrix::Identity(4, 4));
      CHECK(max_abs(block - expect) <= 1e-12);
    }
  }
  CHECK(active > 0);
}

TEST_CASE("complete Hamiltonian is Hermitian for random small layouts") {
  std::mt19937_64 rng(0);
  const LatticeSpec spec{3, 2};
  for (int trial = 0; trial < 5; ++trial) {
    CircuitLayout lay;
    lay.lattice = spec;
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    std::uniform_int_distribution<int> row(1, 3), kind(0, 2), col(1, 2);
    for (int s = 0; s < 3; ++s) {
      StripeSpec st;
      const int kd = kind(rng);
      st.kind = kd == 2 ? StripeKind::two_qubit : StripeKind::one_qubit;
      st.row_count = kd == 2 ? 3 : 2;
      st.first_row = kd == 2 ? 1 + (row(rng) - 1) % 3 : row(rng);
      st.axis = kd == 1 ? Axis::y : Axis::x;
      st.control = s % 2 ? ControlSide::above : ControlSide::below;
      st.column_start = col(rng);
      st.length = 2;
      st.phi = angle(rng);
      lay.stripes.push_back(st);
    }
    for (SectorMode mode : {SectorMode::connected_chain, SectorMode::one_atom_per_row}) {
      const HermitianOperator h = build_complete(spec, 30.0, lay, SectorBasis::kDefaultCap, mode);
      CHECK(linalg::hermiticity_defect(h.to_dense()) <= 1e-12);
    }
  }
  CHECK_THROWS_AS((build_complete({5, 1}, 1.0, CircuitLayout{{5, 1}}, 4096)), PreconditionError);
}
