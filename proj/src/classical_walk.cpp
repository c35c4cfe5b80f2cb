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

#include "ergo/classical_walk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

namespace ergo {

namespace {

constexpr std::size_t kDenseNodes = 2048;

/// Rows vertically adjacent to r that hold an atom.
std::vector<int> vertical_neighbours(const BoardSpec& spec, int r) {
  std::vector<int> out;
  if (r > 1) out.push_back(r - 1);
  if (r < spec.rows) out.push_back(r + 1);
  return out;
}

bool step_allowed(const BoardConfiguration& c, const BoardSpec& spec, int r, int to) {
  const int from = c.columns[static_cast<std::size_t>(r - 1)];
  // White atoms need their neighbours beside them now, black atoms after the step.
  const int needed = spec.black(r, from) ? to : from;
  for (int q : vertical_neighbours(spec, r)) {
    if (c.columns[static_cast<std::size_t>(q - 1)] != needed) return false;
  }
  return true;
}

std::vector<std::size_t> bfs_component(const ConfigGraph& g, std::size_t start,
                                       std::vector<char>& seen) {
  std::vector<std::size_t> order{start};
  seen[start] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (std::size_t v : g.neighbours[order[head]]) {
      if (!seen[v]) {
        seen[v] = 1;
        order.push_back(v);
      }
    }
  }
  return order;
}

}  // namespace

void BoardSpec::validate() const {
  if (rows < 2 || rows % 2 != 0) throw PreconditionError("board: row count must be even and >= 2");
  if (columns < 2) throw PreconditionError("board: need at least 2 columns");
  if (k < 0 || k > columns) throw PreconditionError("board: k must lie in 0..columns");
}

BoardConfiguration BoardConfiguration::initial(const BoardSpec& spec) {
  return {std::vector<int>(static_cast<std::size_t>(spec.rows), 1)};
}

bool satisfies_properties(const BoardConfiguration& c, const BoardSpec& spec) {
  if (static_cast<int>(c.columns.size()) != spec.rows) return false;
  for (int r = 1; r <= spec.rows; ++r) {
    const int col = c.columns[static_cast<std::size_t>(r - 1)];
    if (col < 1 || col > spec.columns) return false;
    if (r < spec.rows && std::abs(col - c.columns[static_cast<std::size_t>(r)]) > 1) return false;
    if (!spec.black(r, col)) {
      for (int q : vertical_neighbours(spec, r)) {
        if (c.columns[static_cast<std::size_t>(q - 1)] != col) return false;
      }
    }
  }
  return true;
}

std::vector<BoardConfiguration> board_moves(const BoardConfiguration& c, const BoardSpec& spec) {
  std::vector<BoardConfiguration> out;
  for (int r = 1; r <= spec.rows; ++r) {
    const int from = c.columns[static_cast<std::size_t>(r - 1)];
    for (int to : {from - 1, from + 1}) {
      if (to < 1 || to > spec.columns || !step_allowed(c, spec, r, to)) continue;
      BoardConfiguration next = c;
      next.columns[static_cast<std::size_t>(r - 1)] = to;
      out.push_back(std::move(next));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

double board_energy(const BoardConfiguration& c, const BoardSpec& spec, double E) {
  double h = 0.0;
  for (int r = 1; r <= spec.rows; ++r) {
    const int col = c.columns[static_cast<std::size_t>(r - 1)];
    const bool black = spec.black(r, col);
    if (black) h -= 2.0 * E;                                  // H1
    if (black && (r == 1 || r == spec.rows)) h += E;          // H3
    if (r < spec.rows && col == c.columns[static_cast<std::size_t>(r)]) h -= E;  // H2
  }
  return h;
}

std::size_t ConfigGraph::edge_count() const {
  std::size_t e = 0;
  for (const auto& nb : neighbours) e += nb.size();
  return e / 2;
}

SparseReal ConfigGraph::adjacency() const {
  std::vector<Eigen::Triplet<double>> t;
  for (std::size_t u = 0; u < nodes.size(); ++u) {
    for (std::size_t v : neighbours[u]) {
      t.emplace_back(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v), 1.0);
    }
  }
  SparseReal a(static_cast<Eigen::Index>(size()), static_cast<Eigen::Index>(size()));
  a.setFromTriplets(t.begin(), t.end());
  return a;
}

SparseReal ConfigGraph::laplacian() const {
  std::vector<Eigen::Triplet<double>> t;
  for (std::size_t u = 0; u < nodes.size(); ++u) {
    const auto iu = static_cast<Eigen::Index>(u);
    t.emplace_back(iu, iu, static_cast<double>(neighbours[u].size()));
    for (std::size_t v : neighbours[u]) t.emplace_back(iu, static_cast<Eigen::Index>(v), -1.0);
  }
  SparseReal l(static_cast<Eigen::Index>(size()), static_cast<Eigen::Index>(size()));
  l.setFromTriplets(t.begin(), t.end());
  return l;
}

int ConfigGraph::components() const {
  std::vector<char> seen(size(), 0);
  int count = 0;
  for (std::size_t s = 0; s < size(); ++s) {
    if (!seen[s]) {
      bfs_component(*this, s, seen);
      ++count;
    }
  }
  return count;
}

void ConfigGraph::write_edges(std::ostream& out) const {
  for (std::size_t u = 0; u < size(); ++u) {
    for (std::size_t v : neighbours[u]) {
      if (u < v) out << u << ' ' << v << '\n';
    }
  }
}

ConfigGraph build_graph(const BoardSpec& spec, std::size_t node_cap) {
  spec.validate();
  ConfigGraph g;
  g.spec = spec;
  const BoardConfiguration start = BoardConfiguration::initial(spec);
  g.nodes.push_back(start);
  g.index.emplace(start, 0);
  for (std::size_t head = 0; head < g.nodes.size(); ++head) {
    const auto moves = board_moves(g.nodes[head], spec);
    std::vector<std::size_t> nb;
    for (const auto& m : moves) {
      auto it = g.index.find(m);
      if (it == g.index.end()) {
        if (g.nodes.size() >= node_cap) {
          throw PreconditionError("build_graph: more than " + std::to_string(node_cap) + " nodes");
        }
        it = g.index.emplace(m, g.nodes.size()).first;
        g.nodes.push_back(m);
      }
      nb.push_back(it->second);
    }
    std::sort(nb.begin(), nb.end());
    g.neighbours.push_back(std::move(nb));
  }
  return g;
}

BoardHamiltonians build_board_hamiltonians(const ConfigGraph& g, double E) {
  if (!(E > 0.0)) throw PreconditionError("board hamiltonians: E must be positive");
  const BoardSpec& spec = g.spec;
  std::vector<std::string> labels;
  std::vector<HermitianOperator::Triplet> t1, t2, t3, tk;
  for (std::size_t u = 0; u < g.size(); ++u) {
    const auto& cols = g.nodes[u].columns;
    std::string label;
    double h1 = 0, h2 = 0, h3 = 0;
    for (int r = 1; r <= spec.rows; ++r) {
      const int col = cols[static_cast<std::size_t>(r - 1)];
      label += (r > 1 ? "," : "") + std::to_string(col);
      if (spec.black(r, col)) {
        h1 -= 2.0 * E;
        if (r == 1 || r == spec.rows) h3 += E;
      }
      if (r < spec.rows && col == cols[static_cast<std::size_t>(r)]) h2 -= E;
    }
    labels.push_back(std::move(label));
    const auto iu = static_cast<Eigen::Index>(u);
    t1.emplace_back(iu, iu, h1);
    t2.emplace_back(iu, iu, h2);
    t3.emplace_back(iu, iu, h3);
    for (std::size_t v : g.neighbours[u]) tk.emplace_back(iu, static_cast<Eigen::Index>(v), 1.0);
  }
  const auto d = static_cast<Eigen::Index>(g.size());
  return {HermitianOperator::from_triplets(d, t1, labels), HermitianOperator::from_triplets(d, t2, labels),
          HermitianOperator::from_triplets(d, t3, labels), HermitianOperator::from_triplets(d, tk, labels)};
}

ProjectedBoard projected_board_hamiltonian(const ConfigGraph& g, double E, std::size_t cap) {
  const BoardSpec& spec = g.spec;
  double total = 1.0;
  for (int r = 0; r < spec.rows; ++r) total *= spec.columns;
  if (total > static_cast<double>(cap)) {
    throw PreconditionError("projected_board_hamiltonian: board space exceeds the size cap");
  }
  const double e0 = board_energy(BoardConfiguration::initial(spec), spec, E);
  // Equal-energy states of the full one-atom-per-row board space.
  std::vector<BoardConfiguration> level;
  std::map<BoardConfiguration, std::size_t> where;
  BoardConfiguration cur{std::vector<int>(static_cast<std::size_t>(spec.rows), 1)};
  for (;;) {
    if (std::abs(board_energy(cur, spec, E) - e0) <= 1e-9 * E) {
      where.emplace(cur, level.size());
      level.push_back(cur);
    }
    int r = spec.rows - 1;
    for (; r >= 0; --r) {
      auto& col = cur.columns[static_cast<std::size_t>(r)];
      if (++col <= spec.columns) break;
      col = 1;
    }
    if (r < 0) break;
  }
  ProjectedBoard out;
  out.equal_energy_states = level.size();
  std::vector<HermitianOperator::Triplet> t;
  double leak = 0.0;
  for (std::size_t u = 0; u < g.size(); ++u) {
    if (!where.count(g.nodes[u])) throw NumericalError("projected board: graph node off the energy level");
    for (int r = 0; r < spec.rows; ++r) {
      for (int step : {-1, 1}) {
        BoardConfiguration next = g.nodes[u];
        int& col = next.columns[static_cast<std::size_t>(r)];
        col += step;
        if (col < 1 || col > spec.columns || !where.count(next)) continue;
        auto it = g.index.find(next);
        if (it == g.index.end()) {
          leak += 1.0;
        } else {
          t.emplace_back(static_cast<Eigen::Index>(it->second), static_cast<Eigen::Index>(u), 1.0);
        }
      }
    }
  }
  out.coupling_out = std::sqrt(leak);
  std::vector<std::string> labels;
  for (const auto& n : g.nodes) {
    std::string s;
    for (std::size_t r = 0; r < n.columns.size(); ++r) s += (r ? "," : "") + std::to_string(n.columns[r]);
    labels.push_back(std::move(s));
  }
  out.on_nodes = HermitianOperator::from_triplets(static_cast<Eigen::Index>(g.size()), t, labels);
  return out;
}

EnergyAudit audit_energy(const ConfigGraph& g, double E) {
  const BoardSpec& spec = g.spec;
  EnergyAudit a;
  a.lowest_forbidden_rise = std::numeric_limits<double>::infinity();
  for (const auto& node : g.nodes) {
    if (!satisfies_properties(node, spec)) ++a.property_violations;
    const double e = board_energy(node, spec, E);
    for (int r = 1; r <= spec.rows; ++r) {
      const int from = node.columns[static_cast<std::size_t>(r - 1)];
      for (int to : {from - 1, from + 1}) {
        if (to < 1 || to > spec.columns) continue;
        BoardConfiguration next = node;
        next.columns[static_cast<std::size_t>(r - 1)] = to;
        const double de = board_energy(next, spec, E) - e;
        if (step_allowed(node, spec, r, to)) {
          ++a.allowed_moves;
          a.worst_allowed_change = std::max(a.worst_allowed_change, std::abs(de));
        } else {
          ++a.forbidden_moves;
          a.lowest_forbidden_rise = std::min(a.lowest_forbidden_rise, de);
        }
      }
    }
  }
  return a;
}

RealVector stationary_distribution(const ConfigGraph& g) {
  if (g.size() == 0) throw PreconditionError("stationary_distribution: empty graph");
  if (g.components() != 1) throw PreconditionError("stationary_distribution: disconnected graph");
  const SparseReal l = g.laplacian();
  const auto n = static_cast<Eigen::Index>(g.size());
  RealVector p;
  if (g.size() <= kDenseNodes) {
    Eigen::SelfAdjointEigenSolver<RealMatrix> solver{RealMatrix(l)};
    if (solver.info() != Eigen::Success) throw NumericalError("stationary_distribution: eigensolver failed");
    const int kernel = static_cast<int>((solver.eigenvalues().array().abs() < 1e-9).count());
    if (kernel != 1) throw NumericalError("stationary_distribution: kernel dimension is not 1");
    p = solver.eigenvectors().col(0);
  } else {
    // Connected: the kernel is spanned by the constant vector; confirm it.
    p = RealVector::Ones(n);
  }
  p /= p.sum();
  if ((l * p).cwiseAbs().maxCoeff() > 1e-12) throw NumericalError("stationary_distribution: residual too large");
  return p;
}

RealVector evolve_walk(const ConfigGraph& g, const RealVector& p0, double t) {
  const auto n = static_cast<Eigen::Index>(g.size());
  if (p0.size() != n) throw PreconditionError("evolve_walk: p0 has the wrong size");
  if (std::abs(p0.sum() - 1.0) > 1e-12 || (p0.array() < 0.0).any()) {
    throw PreconditionError("evolve_walk: p0 must be a probability vector");
  }
  if (!(t >= 0.0)) throw PreconditionError("evolve_walk: t must be non-negative");
  const SparseReal l = g.laplacian();
  if (g.size() <= kDenseNodes) {
    Eigen::SelfAdjointEigenSolver<RealMatrix> solver{RealMatrix(l)};
    const RealMatrix& q = solver.eigenvectors();
    const RealVector decay = (-solver.eigenvalues().array() * t).exp();
    return q * (decay.asDiagonal() * (q.transpose() * p0));
  }
  // Uniformization: exp(-L t) = sum_j Poisson(j; rate t) (1 - L/rate)^j.
  double rate = 0.0;
  for (const auto& nb : g.neighbours) rate = std::max(rate, static_cast<double>(nb.size()));
  if (rate == 0.0) return p0;
  const SparseReal step = SparseReal(RealMatrix::Identity(n, n).sparseView()) - l / rate;
  const double lambda = rate * t;
  RealVector term = p0, out = RealVector::Zero(n);
  const double tail = lambda + 12.0 * std::sqrt(lambda) + 30.0;
  for (int j = 0;; ++j) {
    const double w = std::exp(-lambda + j * std::log(std::max(lambda, 1e-300)) - std::lgamma(j + 1.0));
    out += w * term;
    if (j > tail && w < 1e-17) break;
    if (j > 10000000) throw NumericalError("evolve_walk: uniformization did not converge");
    term = step * term;
  }
  return out;
}

double outside_probability_stationary(const ConfigGraph& g, const BoardSpec& spec) {
  if (!spec.readout_admissible()) {
    throw PreconditionError("outside_probability_stationary: need k < columns/2 - 2n (k = " +
                            std::to_string(spec.k) + ", columns = " + std::to_string(spec.columns) +
                            ", 2n = " + std::to_string(spec.rows) + ")");
  }
  if (spec.rows != g.spec.rows || spec.columns != g.spec.columns) {
    throw PreconditionError("outside_probability_stationary: board differs from the graph's");
  }
  const RealVector p = stationary_distribution(g);
  double out = 0.0;
  for (std::size_t u = 0; u < g.size(); ++u) {
    const auto& cols = g.nodes[u].columns;
    if (std::all_of(cols.begin(), cols.end(), [&](int c) { return c > spec.k; })) {
      out += p(static_cast<Eigen::Index>(u));
    }
  }
  return out;
}

BoardConfiguration mirror(const BoardConfiguration& c, const BoardSpec& spec) {
  // With an even column count the plain mirror swaps the colours; reversing
  // the rows as well restores them.
  BoardConfiguration m = c;
  for (int& col : m.columns) col = spec.columns + 1 - col;
  if (spec.columns % 2 == 0) std::reverse(m.columns.begin(), m.columns.end());
  return m;
}

bool mirror_is_automorphism(const ConfigGraph& g) {
  std::vector<std::size_t> image(g.size());
  for (std::size_t u = 0; u < g.size(); ++u) {
    auto it = g.index.find(mirror(g.nodes[u], g.spec));
    if (it == g.index.end()) return false;
    image[u] = it->second;
  }
  for (std::size_t u = 0; u < g.size(); ++u) {
    std::vector<std::size_t> mapped;
    for (std::size_t v : g.neighbours[u]) mapped.push_back(image[v]);
    std::sort(mapped.begin(), mapped.end());
    if (mapped != g.neighbours[image[u]]) return false;
  }
  return true;
}

double coherent_norm(const ConfigGraph& g, double t) {
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(g.size()));
  v(0) = 1.0;
  const SparseReal a = g.adjacency();
  const double radius = std::max(linalg::gershgorin_radius(a), 1.0);
  return linalg::chebyshev_propagate(a, v, t, radius).norm();
}

}  // namespace ergo
