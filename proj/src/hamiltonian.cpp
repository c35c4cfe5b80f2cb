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

#include "ergo/hamiltonian.hpp"

#include <cmath>
#include <set>

#include "ergo/holonomy.hpp"

namespace ergo {

namespace {

using Triplet = HermitianOperator::Triplet;

std::string steps_label(const std::vector<int>& steps) {
  std::string s;
  for (std::size_t r = 0; r < steps.size(); ++r) {
    if (r > 0) s += ',';
    s += std::to_string(steps[r]);
  }
  return s;
}

std::string spin_label(std::uint64_t spins, int rows) {
  std::string s(static_cast<std::size_t>(rows), 'd');
  for (int r = 0; r < rows; ++r) {
    if ((spins >> (rows - 1 - r)) & 1u) s[static_cast<std::size_t>(r)] = 'u';
  }
  return s;
}

void add_pair(std::vector<Triplet>& t, Eigen::Index a, Eigen::Index b, cd v) {
  t.emplace_back(a, b, v);
  t.emplace_back(b, a, std::conj(v));
}

/// Configuration-level hopping restricted to the states present in `sector`.
std::vector<Triplet> hopping_triplets(const LatticeSpec& spec, const SectorBasis& sector) {
  std::vector<Triplet> t;
  for (Eigen::Index s = 0; s < sector.configuration_count(); ++s) {
    std::vector<int> next = sector.steps[static_cast<std::size_t>(s)];
    for (int r = 1; r <= spec.rows(); ++r) {
      const auto ri = static_cast<std::size_t>(r - 1);
      if (next[ri] + 1 >= lattice::row_length(spec, r)) continue;
      ++next[ri];
      auto it = sector.index.find(next);
      if (it != sector.index.end()) add_pair(t, it->second, s, 1.0);
      --next[ri];
    }
  }
  return t;
}

ComplexMatrix embed_spins(const ComplexMatrix& op, int first_row, int width, int rows) {
  const Eigen::Index left = Eigen::Index{1} << (first_row - 1);
  const Eigen::Index right = Eigen::Index{1} << (rows - first_row - width + 1);
  return linalg::kron(linalg::kron(ComplexMatrix::Identity(left, left), op),
                      ComplexMatrix::Identity(right, right));
}

void require_configuration_sector(const SectorBasis& sector, const char* who) {
  if (sector.mode == SectorMode::spinful) {
    throw PreconditionError(std::string(who) + ": spinful sector rejected, use build_complete");
  }
}

}  // namespace

std::vector<SitePosition> sites_of(const LatticeSpec& spec, const std::vector<int>& steps) {
  std::vector<SitePosition> out;
  out.reserve(steps.size());
  for (int r = 1; r <= spec.rows(); ++r) {
    const int d = lattice::row_offset(spec, r);
    const int c = steps[static_cast<std::size_t>(r - 1)] + lattice::first_column(spec, r);
    out.push_back(d >= 0 ? SitePosition{r, c, c - d} : SitePosition{r, c + d, c});
  }
  return out;
}

std::vector<int> steps_of(const LatticeSpec& spec, const std::vector<SitePosition>& sites) {
  std::vector<int> out;
  out.reserve(sites.size());
  for (const SitePosition& p : sites) out.push_back(p.column() - lattice::first_column(spec, p.row));
  return out;
}

int bond_count(const LatticeSpec& spec, const std::vector<int>& steps) {
  const auto sites = sites_of(spec, steps);
  int bonds = 0;
  for (std::size_t r = 0; r + 1 < sites.size(); ++r) {
    if (std::abs(sites[r].horizontal() - sites[r + 1].horizontal()) == 1) ++bonds;
  }
  return bonds;
}

SectorBasis SectorBasis::one_atom_per_row(const LatticeSpec& spec, std::size_t cap) {
  spec.validate();
  std::size_t dim = 1;
  for (int r = 1; r <= spec.rows(); ++r) {
    dim *= static_cast<std::size_t>(lattice::row_length(spec, r));
    if (dim > cap) {
      throw PreconditionError("one-atom-per-row sector at n = " + std::to_string(spec.n) +
                              " exceeds the size cap " + std::to_string(cap));
    }
  }
  SectorBasis b;
  b.mode = SectorMode::one_atom_per_row;
  b.configuration_mode = b.mode;
  b.spec = spec;
  std::vector<int> cur(static_cast<std::size_t>(spec.rows()), 0);
  for (;;) {
    b.index.emplace(cur, static_cast<Eigen::Index>(b.steps.size()));
    b.steps.push_back(cur);
    b.labels.push_back(steps_label(cur));
    int r = spec.rows();
    for (; r >= 1; --r) {
      auto& h = cur[static_cast<std::size_t>(r - 1)];
      if (++h < lattice::row_length(spec, r)) break;
      h = 0;
    }
    if (r < 1) break;
  }
  return b;
}

SectorBasis SectorBasis::connected_chain(const LatticeSpec& spec) {
  spec.validate();
  SectorBasis b;
  b.mode = SectorMode::connected_chain;
  b.configuration_mode = b.mode;
  b.spec = spec;
  for (const ChainConfiguration& c : enumerate_configs(spec)) {
    std::vector<int> s = steps_of(spec, decode_positions(c, spec));
    b.index.emplace(s, static_cast<Eigen::Index>(b.steps.size()));
    b.steps.push_back(std::move(s));
    b.labels.push_back(c.word());
  }
  return b;
}

SectorBasis SectorBasis::spinful(const LatticeSpec& spec, std::size_t cap, SectorMode configurations) {
  if (configurations == SectorMode::spinful) {
    throw PreconditionError("spinful sector: configuration part must be spin-free");
  }
  SectorBasis b = configurations == SectorMode::connected_chain ? connected_chain(spec)
                                                                 : one_atom_per_row(spec, cap);
  const int rows = spec.rows();
  const std::size_t spins = std::size_t{1} << rows;
  if (b.steps.size() * spins > cap) {
    throw PreconditionError("spinful sector dimension " + std::to_string(b.steps.size() * spins) +
                            " exceeds the size cap " + std::to_string(cap));
  }
  std::vector<std::string> labels;
  labels.reserve(b.steps.size() * spins);
  for (const std::string& c : b.labels) {
    for (std::uint64_t s = 0; s < spins; ++s) labels.push_back(c + "|" + spin_label(s, rows));
  }
  b.labels = std::move(labels);
  b.configuration_mode = configurations;
  b.mode = SectorMode::spinful;
  return b;
}

HermitianOperator build_K(const LatticeSpec& spec, const SectorBasis& sector) {
  require_configuration_sector(sector, "build_K");
  return HermitianOperator::from_triplets(sector.dimension(), hopping_triplets(spec, sector),
                                          sector.labels);
}

double ground_offset(const LatticeSpec& spec, double E) {
  return E * static_cast<double>(spec.rows() - 1);
}

HermitianOperator build_Hpot(const LatticeSpec& spec, double E, const SectorBasis& sector) {
  require_configuration_sector(sector, "build_Hpot");
  if (!(E > 0.0)) throw PreconditionError("build_Hpot: E must be positive");
  const double e0 = ground_offset(spec, E);
  std::vector<Triplet> t;
  for (Eigen::Index s = 0; s < sector.dimension(); ++s) {
    const double v = e0 - E * bond_count(spec, sector.steps[static_cast<std::size_t>(s)]);
    if (v != 0.0) t.emplace_back(s, s, v);
  }
  return HermitianOperator::from_triplets(sector.dimension(), t, sector.labels);
}

HermitianOperator build_sync(const LatticeSpec& spec, double E, const SectorBasis& sector) {
  require_configuration_sector(sector, "build_sync");
  std::vector<Triplet> t = hopping_triplets(spec, sector);
  const auto pot = build_Hpot(spec, E, sector).nonzeros();
  t.insert(t.end(), pot.begin(), pot.end());
  return HermitianOperator::from_triplets(sector.dimension(), t, sector.labels);
}

HermitianOperator effective_hamiltonian(const LatticeSpec& spec, double E, std::size_t cap) {
  const SectorBasis full = SectorBasis::one_atom_per_row(spec, cap);
  const SectorBasis chain = SectorBasis::connected_chain(spec);
  const SparseComplex k = build_K(spec, full).to_sparse();
  const SparseComplex pot = build_Hpot(spec, E, full).to_sparse();

  // Zero-energy states of the diagonal potential.
  std::vector<Eigen::Index> to_chain(static_cast<std::size_t>(full.dimension()), -1);
  Eigen::Index ground = 0;
  for (Eigen::Index s = 0; s < full.dimension(); ++s) {
    if (std::abs(pot.coeff(s, s)) <= 1e-12 * E) {
      auto it = chain.index.find(full.steps[static_cast<std::size_t>(s)]);
      if (it == chain.index.end()) {
        throw NumericalError("effective_hamiltonian: zero-energy state outside the chain space");
      }
      to_chain[static_cast<std::size_t>(s)] = it->second;
      ++ground;
    }
  }
  if (ground != chain.dimension()) {
    throw NumericalError("effective_hamiltonian: ground space dimension differs from C(2m, m)");
  }
  std::vector<Triplet> t;
  for (int col = 0; col < k.outerSize(); ++col) {
    for (SparseComplex::InnerIterator it(k, col); it; ++it) {
      const Eigen::Index a = to_chain[static_cast<std::size_t>(it.row())];
      const Eigen::Index b = to_chain[static_cast<std::size_t>(it.col())];
      if (a >= 0 && b >= 0) t.emplace_back(a, b, it.value());
    }
  }
  return HermitianOperator::from_triplets(chain.dimension(), t, chain.labels);
}

HermitianOperator move_graph_adjacency(const LatticeSpec& spec) {
  const auto configs = enumerate_configs(spec);
  std::map<std::string, Eigen::Index> idx;
  std::vector<std::string> labels;
  for (const auto& c : configs) {
    idx.emplace(c.word(), static_cast<Eigen::Index>(labels.size()));
    labels.push_back(c.word());
  }
  std::vector<Triplet> t;
  for (const auto& c : configs) {
    for (const auto& nb : allowed_moves(c)) t.emplace_back(idx.at(nb.word()), idx.at(c.word()), 1.0);
  }
  return HermitianOperator::from_triplets(static_cast<Eigen::Index>(labels.size()), t, labels);
}

HermitianOperator conditional_hopping(const LatticeSpec& spec) {
  const SectorBasis chain = SectorBasis::connected_chain(spec);
  const int n = spec.n;
  std::vector<Triplet> t;
  for (Eigen::Index s = 0; s < chain.dimension(); ++s) {
    const auto sites = sites_of(spec, chain.steps[static_cast<std::size_t>(s)]);
    std::set<std::pair<int, int>> occ;
    for (const auto& p : sites) occ.emplace(p.i, p.j);
    auto on = [&](int i, int j) { return occ.count({i, j}) > 0; };
    for (int i = 1; i < n; ++i) {
      for (int j = 1; j < n; ++j) {
        if (!on(i, j + 1) || !on(i + 1, j)) continue;
        // forward term moves (i,j) -> (i+1,j+1); its adjoint moves back
        std::pair<int, int> from{i, j}, to{i + 1, j + 1};
        if (!on(from.first, from.second)) std::swap(from, to);
        if (!on(from.first, from.second) || on(to.first, to.second)) continue;
        auto moved = sites;
        for (auto& p : moved) {
          if (p.i == from.first && p.j == from.second) {
            p.i = to.first;
            p.j = to.second;
          }
        }
        auto it = chain.index.find(steps_of(spec, moved));
        if (it == chain.index.end()) {
          throw NumericalError("conditional_hopping: move left the chain space");
        }
        t.emplace_back(it->second, s, 1.0);
      }
    }
  }
  return HermitianOperator::from_triplets(chain.dimension(), t, chain.labels);
}

HermitianOperator build_Hs(int m, HsSpace space) {
  if (m < 1) throw PreconditionError("build_Hs: m must be positive");
  const int len = 2 * m;
  std::vector<std::string> words;
  if (space == HsSpace::weight_m) {
    for (const auto& c : enumerate_words(m)) words.push_back(c.word());
  } else {
    if (len > 24) throw PreconditionError("build_Hs: full space limited to 2m <= 24");
    const std::uint64_t dim = std::uint64_t{1} << len;
    words.reserve(dim);
    for (std::uint64_t v = 0; v < dim; ++v) {
      std::string w(static_cast<std::size_t>(len), '0');
      for (int p = 0; p < len; ++p) {
        if ((v >> (len - 1 - p)) & 1u) w[static_cast<std::size_t>(p)] = '1';
      }
      words.push_back(std::move(w));
    }
  }
  std::map<std::string, Eigen::Index> idx;
  for (std::size_t i = 0; i < words.size(); ++i) idx.emplace(words[i], static_cast<Eigen::Index>(i));
  std::vector<Triplet> t;
  for (std::size_t s = 0; s < words.size(); ++s) {
    for (std::size_t p = 0; p + 1 < words[s].size(); ++p) {
      if (words[s][p] == words[s][p + 1]) continue;
      std::string w = words[s];
      std::swap(w[p], w[p + 1]);
      t.emplace_back(idx.at(w), static_cast<Eigen::Index>(s), 1.0);
    }
  }
  return HermitianOperator::from_triplets(static_cast<Eigen::Index>(words.size()), t, words);
}

ComplexMatrix stripe_interaction(const LatticeSpec& spec, const CircuitLayout& layout,
                                 const std::vector<int>& steps) {
  const int rows = spec.rows();
  const Eigen::Index dim = Eigen::Index{1} << rows;
  ComplexMatrix w = ComplexMatrix::Zero(dim, dim);
  const auto sites = sites_of(spec, steps);
  for (const StripeSpec& s : layout.stripes) {
    if (s.kind == StripeKind::ca_block) {
      throw PreconditionError("build_complete: cellular-automaton blocks carry no spin operator");
    }
    if (s.length < 2) throw PreconditionError("build_complete: stripes need l >= 2");
    const int top = layout.chain_row(s.first_row);
    const int bottom = layout.chain_row(s.last_row());
    if (top < 1 || bottom > rows) throw PreconditionError("build_complete: stripe rows outside the chain");
    const int c = sites[static_cast<std::size_t>(layout.chain_row(s.anchor_row()) - 1)].column();
    const int c0 = layout.lattice_column(s.column_start);
    if (c < c0 || c > layout.lattice_column(s.column_end())) continue;
    // Pair interactions need diagonal neighbours; matters only for torn chains.
    bool linked = true;
    for (int r = top; r < bottom; ++r) {
      const auto a = static_cast<std::size_t>(r - 1);
      linked = linked && std::abs(sites[a].horizontal() - sites[a + 1].horizontal()) == 1;
    }
    if (!linked) continue;
    const int j = c - c0 + 1;
    const ComplexMatrix op = s.kind == StripeKind::one_qubit
                                 ? stripe::one_qubit_step(j, s.length, s.phi, s.axis)
                                 : stripe::two_qubit_step(j, s.length, s.phi, s.control);
    w += embed_spins(op, top, s.row_count, rows);
  }
  return w;
}

HermitianOperator build_complete(const LatticeSpec& spec, double E, const CircuitLayout& layout,
                                 std::size_t cap, SectorMode configurations) {
  if (layout.lattice.n != spec.n || layout.lattice.k != spec.k) {
    throw PreconditionError("build_complete: layout lattice differs from the requested lattice");
  }
  const SectorBasis full = SectorBasis::spinful(spec, cap, configurations);
  SectorBasis conf = configurations == SectorMode::connected_chain
                         ? SectorBasis::connected_chain(spec)
                         : SectorBasis::one_atom_per_row(spec, cap);
  const Eigen::Index spins = Eigen::Index{1} << spec.rows();

  std::vector<Triplet> t;
  for (const Triplet& h : hopping_triplets(spec, conf)) {
    for (Eigen::Index s = 0; s < spins; ++s) {
      t.emplace_back(h.row() * spins + s, h.col() * spins + s, h.value());
    }
  }
  for (const Triplet& p : build_Hpot(spec, E, conf).nonzeros()) {
    for (Eigen::Index s = 0; s < spins; ++s) {
      t.emplace_back(p.row() * spins + s, p.col() * spins + s, p.value());
    }
  }
  for (Eigen::Index c = 0; c < conf.dimension(); ++c) {
    if (layout.stripes.empty()) break;
    const ComplexMatrix w = stripe_interaction(spec, layout, conf.steps[static_cast<std::size_t>(c)]);
    for (Eigen::Index a = 0; a < spins; ++a) {
      for (Eigen::Index b = 0; b < spins; ++b) {
        if (w(a, b) != cd(0.0)) t.emplace_back(c * spins + a, c * spins + b, w(a, b));
      }
    }
  }
  return HermitianOperator::from_triplets(full.dimension(), t, full.labels);
}

}  // namespace ergo
