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

#include <map>
#include <string>
#include <vector>

#include "ergo/configspace.hpp"
#include "ergo/layout.hpp"
#include "ergo/operator.hpp"

namespace ergo {

enum class SectorMode { one_atom_per_row, connected_chain, spinful };

/// Basis of a row-occupation-conserving sector. Each state stores the step
/// index (0-based position along the row) of the atom of every row.
struct SectorBasis {
  static constexpr std::size_t kDefaultCap = 1u << 15;

  SectorMode mode = SectorMode::connected_chain;
  LatticeSpec spec;
  std::vector<std::vector<int>> steps;
  std::vector<std::string> labels;
  std::map<std::vector<int>, Eigen::Index> index;
  /// spinful only: configuration part, 2^(2n-1) spin states per entry
  SectorMode configuration_mode = SectorMode::connected_chain;

  Eigen::Index dimension() const { return static_cast<Eigen::Index>(labels.size()); }
  Eigen::Index configuration_count() const { return static_cast<Eigen::Index>(steps.size()); }

  /// Lexicographic in the per-row steps.
  static SectorBasis one_atom_per_row(const LatticeSpec& spec, std::size_t cap = kDefaultCap);
  /// enumerate_configs order.
  static SectorBasis connected_chain(const LatticeSpec& spec);
  /// Configuration-major, spin bits with row 1 most significant (0 = down).
  static SectorBasis spinful(const LatticeSpec& spec, std::size_t cap = kDefaultCap,
                             SectorMode configurations = SectorMode::connected_chain);
};

std::vector<SitePosition> sites_of(const LatticeSpec& spec, const std::vector<int>& steps);
std::vector<int> steps_of(const LatticeSpec& spec, const std::vector<SitePosition>& sites);
/// Occupied diagonal-neighbour pairs between consecutive rows.
int bond_count(const LatticeSpec& spec, const std::vector<int>& steps);

HermitianOperator build_K(const LatticeSpec& spec, const SectorBasis& sector);
HermitianOperator build_Hpot(const LatticeSpec& spec, double E, const SectorBasis& sector);
/// E0 = E * (2n - 2), the bond energy of every connected chain.
double ground_offset(const LatticeSpec& spec, double E);
/// K + H_pot
HermitianOperator build_sync(const LatticeSpec& spec, double E, const SectorBasis& sector);

/// P K P with P the zero-energy projection of H_pot on the one-atom-per-row
/// sector, expressed on the connected-chain basis.
HermitianOperator effective_hamiltonian(const LatticeSpec& spec, double E,
                                        std::size_t cap = SectorBasis::kDefaultCap);
/// Adjacency matrix of the allowed-moves graph on enumerate_configs.
HermitianOperator move_graph_adjacency(const LatticeSpec& spec);
/// Sum over plaquettes of a_{i,j} a+_{i+1,j+1} N_{i,j+1} N_{i+1,j} + h.c.
/// applied to connected configurations.
HermitianOperator conditional_hopping(const LatticeSpec& spec);

enum class HsSpace { full, weight_m };
/// sum_j b+_j b_{j+1} + h.c. on words of length 2m.
HermitianOperator build_Hs(int m, HsSpace space = HsSpace::weight_m);

/// H_pot + K + W on configuration (x) spin. Spin-conserving hopping; W
/// couples the spins of a stripe's rows when the anchor atom sits inside
/// the stripe's column span, with step j = lattice column - first column + 1.
HermitianOperator build_complete(const LatticeSpec& spec, double E, const CircuitLayout& layout,
                                 std::size_t cap = SectorBasis::kDefaultCap,
                                 SectorMode configurations = SectorMode::connected_chain);

/// Spin-only operator of layout stripes active at a configuration.
ComplexMatrix stripe_interaction(const LatticeSpec& spec, const CircuitLayout& layout,
                                 const std::vector<int>& steps);

}  // namespace ergo
