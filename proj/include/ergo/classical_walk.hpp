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
#include <map>
#include <vector>

#include "ergo/operator.hpp"

namespace ergo {

/// Chessboard of `rows` (= 2n) rows and `columns` columns; site (r, c) is
/// black iff r + c is even. Columns are 1-based.
struct BoardSpec {
  int rows = 2;
  int columns = 2;
  int k = 0;

  void validate() const;
  /// k < columns / 2 - rows, the regime of the stationary readout bound.
  bool readout_admissible() const { return 2 * k < columns - 2 * rows; }
  bool black(int row, int column) const { return (row + column) % 2 == 0; }
};

/// Column of the atom in each row, top row first.
struct BoardConfiguration {
  std::vector<int> columns;

  static BoardConfiguration initial(const BoardSpec& spec);
  friend bool operator==(const BoardConfiguration&, const BoardConfiguration&) = default;
  friend auto operator<=>(const BoardConfiguration& a, const BoardConfiguration& b) {
    return a.columns <=> b.columns;
  }
};

/// (1) adjacent rows differ by at most one column; (2) white-site atoms
/// have their vertical neighbours in the same column.
bool satisfies_properties(const BoardConfiguration& c, const BoardSpec& spec);

/// Single-atom steps permitted by the propagation rules.
std::vector<BoardConfiguration> board_moves(const BoardConfiguration& c, const BoardSpec& spec);

/// Energy of H1 + H2 + H3 in units where E is explicit.
double board_energy(const BoardConfiguration& c, const BoardSpec& spec, double E);

struct ConfigGraph {
  BoardSpec spec;
  std::vector<BoardConfiguration> nodes;  // BFS discovery order
  std::map<BoardConfiguration, std::size_t> index;
  std::vector<std::vector<std::size_t>> neighbours;  // sorted

  std::size_t size() const { return nodes.size(); }
  std::size_t edge_count() const;
  /// L = D - A, positive semidefinite.
  SparseReal laplacian() const;
  SparseReal adjacency() const;
  /// Number of connected components.
  int components() const;
  /// `u v` per undirected edge, u < v, zero-based node ids.
  void write_edges(std::ostream& out) const;
};

inline constexpr std::size_t kDefaultNodeCap = 200000;

ConfigGraph build_graph(const BoardSpec& spec, std::size_t node_cap = kDefaultNodeCap);

struct BoardHamiltonians {
  HermitianOperator h1, h2, h3, k;
};

/// Diagonal potentials and the move-graph hopping on the graph nodes.
BoardHamiltonians build_board_hamiltonians(const ConfigGraph& graph, double E);

/// P (H1 + H2 + H3 + K) P on the one-atom-per-row board space, with P the
/// projection onto the initial energy, minus that energy.
struct ProjectedBoard {
  HermitianOperator on_nodes;  // block on the graph nodes, graph order
  double coupling_out = 0.0;   // norm of the block from nodes to other equal-energy states
  std::size_t equal_energy_states = 0;
};
ProjectedBoard projected_board_hamiltonian(const ConfigGraph& graph, double E,
                                           std::size_t cap = 1u << 16);

struct EnergyAudit {
  std::size_t allowed_moves = 0;
  std::size_t forbidden_moves = 0;
  double worst_allowed_change = 0.0;   // max |Delta E| over allowed moves
  double lowest_forbidden_rise = 0.0;  // min Delta E over forbidden single steps
  std::size_t property_violations = 0;
};
EnergyAudit audit_energy(const ConfigGraph& graph, double E);

/// Kernel vector of the Laplacian normalised to a distribution.
RealVector stationary_distribution(const ConfigGraph& graph);

/// p(t) = exp(-L t) p0
RealVector evolve_walk(const ConfigGraph& graph, const RealVector& p0, double t);

/// Stationary mass of configurations with every atom in a column > k.
double outside_probability_stationary(const ConfigGraph& graph, const BoardSpec& spec);

BoardConfiguration mirror(const BoardConfiguration& c, const BoardSpec& spec);
/// Node set closed under mirror and edges preserved.
bool mirror_is_automorphism(const ConfigGraph& graph);

/// ||exp(-i A t) e_initial||, exploratory coherent run.
double coherent_norm(const ConfigGraph& graph, double t);

}  // namespace ergo
