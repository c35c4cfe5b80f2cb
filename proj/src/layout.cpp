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

#include "ergo/layout.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "ergo/holonomy.hpp"

namespace ergo {

namespace {

constexpr double kTwoPi = 2.0 * kPi;
constexpr double kAngleTol = 1e-9;

std::set<int> stripe_qubits(const StripeSpec& s) {
  switch (s.kind) {
    case StripeKind::one_qubit:
      return {(s.first_row + 1) / 2};
    case StripeKind::two_qubit:
      if (s.control == ControlSide::below) return {(s.first_row + 1) / 2, (s.first_row + 1) / 2 + 1};
      return {s.first_row / 2, s.first_row / 2 + 1};
    case StripeKind::ca_block:
      break;
  }
  return {};
}

bool rows_overlap(const StripeSpec& a, const StripeSpec& b) {
  return a.first_row <= b.last_row() && b.first_row <= a.last_row();
}

bool columns_overlap(const StripeSpec& a, const StripeSpec& b) {
  return a.column_start <= b.column_end() && b.column_start <= a.column_end();
}

void check_circuit(const LogicalCircuit& c) {
  if (c.qubits < 0) throw PreconditionError("circuit: qubit count must be non-negative");
  for (const LogicalGate& g : c.gates) {
    if (g.target < 1 || g.target > c.qubits) {
      throw PreconditionError("circuit: gate target outside 1..q");
    }
    if (g.kind == GateKind::cphase) {
      if (g.control < 1 || g.control > c.qubits) {
        throw PreconditionError("circuit: cphase control outside 1..q");
      }
      if (std::abs(g.control - g.target) != 1) {
        throw PreconditionError("circuit: cphase only between adjacent logical qubits");
      }
    }
    if (!std::isfinite(g.theta)) throw PreconditionError("circuit: gate angle must be finite");
  }
}

/// Centres `rows` circuit rows on the middle chain row.
void place_rows(CircuitLayout& lay, int rows) {
  const int n = lay.lattice.n;
  if (rows > lay.lattice.rows()) {
    throw PreconditionError("layout: " + std::to_string(rows) + " circuit rows exceed the " +
                            std::to_string(lay.lattice.rows()) + " chain rows");
  }
  lay.row_offset = n - (rows + 1) / 2;
  lay.column_offset = std::max(std::abs(1 + lay.row_offset - n), std::abs(rows + lay.row_offset - n));
}

void check_region(const CircuitLayout& lay) {
  int last = 0;
  for (const StripeSpec& s : lay.stripes) last = std::max(last, s.column_end());
  if (last == 0) return;
  const int required = lay.lattice_column(last);
  if (required > lay.lattice.k) {
    throw RegionOverflow("layout: stripes need k >= " + std::to_string(required) + " but k = " +
                             std::to_string(lay.lattice.k),
                         required);
  }
}

ComplexMatrix embed_one(const ComplexMatrix& op, int qubit, int qubits) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int q = 1; q <= qubits; ++q) {
    out = linalg::kron(out, q == qubit ? op : pauli::identity());
  }
  return out;
}

ComplexMatrix embed_two(const ComplexMatrix& a, int qa, const ComplexMatrix& b, int qb,
                        int qubits) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int q = 1; q <= qubits; ++q) {
    out = linalg::kron(out, q == qa ? a : (q == qb ? b : pauli::identity()));
  }
  return out;
}

const char* kind_name(StripeKind k) {
  switch (k) {
    case StripeKind::one_qubit: return "one_qubit";
    case StripeKind::two_qubit: return "two_qubit";
    case StripeKind::ca_block: return "ca_block";
  }
  return "";
}

}  // namespace

double reduce_angle(double theta) {
  if (std::abs(theta) > kTwoPi) return std::fmod(theta, kTwoPi);
  return theta;
}

double one_qubit_phi(double theta) {
  return std::acos(std::clamp(reduce_angle(theta) / kTwoPi, -1.0, 1.0));
}

double two_qubit_phi(double theta, ControlSide side) {
  const double s = std::clamp(reduce_angle(theta) / kTwoPi, -1.0, 1.0);
  return std::asin(side == ControlSide::below ? s : -s);
}

CircuitLayout compile(const LogicalCircuit& circuit, int l, const LatticeSpec& spec) {
  spec.validate();
  check_circuit(circuit);
  if (l < 1) throw PreconditionError("compile: stripe length l must be positive");

  CircuitLayout lay;
  lay.lattice = spec;
  lay.qubits = circuit.qubits;
  place_rows(lay, 2 * circuit.qubits);

  int order = 0;
  for (const LogicalGate& g : circuit.gates) {
    StripeSpec s;
    s.length = l;
    s.theta = reduce_angle(g.theta);
    s.order = order++;
    if (g.kind == GateKind::cphase) {
      s.kind = StripeKind::two_qubit;
      s.row_count = 3;
      s.control = g.control > g.target ? ControlSide::below : ControlSide::above;
      // below: target rows plus the top atom of the control qubit;
      // above: bottom atom of the control qubit plus the target rows.
      s.first_row = s.control == ControlSide::below ? 2 * g.target - 1 : 2 * g.control;
      s.phi = two_qubit_phi(g.theta, s.control);
    } else {
      s.kind = StripeKind::one_qubit;
      s.row_count = 2;
      s.axis = g.kind == GateKind::rot_x ? Axis::x : Axis::y;
      s.first_row = 2 * g.target - 1;
      s.phi = one_qubit_phi(g.theta);
    }
    const std::set<int> mine = stripe_qubits(s);
    int start = 1;
    for (const StripeSpec& prev : lay.stripes) {
      const std::set<int> theirs = stripe_qubits(prev);
      const bool shared = std::any_of(mine.begin(), mine.end(),
                                      [&](int q) { return theirs.count(q) > 0; });
      if (shared || rows_overlap(prev, s)) start = std::max(start, prev.column_end() + 1);
    }
    s.column_start = start;
    lay.stripes.push_back(s);
  }
  check_region(lay);
  return lay;
}

CircuitLayout margolus_tiling(int ca_steps, int cells, const BlockSpec& u_block,
                              const BlockSpec& v_block, const LatticeSpec& spec) {
  spec.validate();
  if (ca_steps < 0) throw PreconditionError("margolus_tiling: ca_steps must be non-negative");
  if (cells < 2) throw PreconditionError("margolus_tiling: need at least 2 cells");
  if (u_block.rows_per_cell != v_block.rows_per_cell || u_block.rows_per_cell < 1) {
    throw PreconditionError("margolus_tiling: U and V must agree on a positive cell height");
  }
  if (u_block.width < 1 || v_block.width < 1) {
    throw PreconditionError("margolus_tiling: block widths must be positive");
  }
  const int h = u_block.rows_per_cell;
  CircuitLayout lay;
  lay.lattice = spec;
  place_rows(lay, cells * h);

  const int period = u_block.width + v_block.width;
  int order = 0;
  for (int step = 0; step < ca_steps; ++step) {
    for (int parity = 0; parity < 2; ++parity) {
      const BlockSpec& b = parity == 0 ? u_block : v_block;
      // U on cells (2j-1, 2j), V on (2j, 2j+1)
      for (int first = 1 + parity; first + 1 <= cells; first += 2) {
        StripeSpec s;
        s.kind = StripeKind::ca_block;
        s.first_row = (first - 1) * h + 1;
        s.row_count = 2 * h;
        s.column_start = 1 + step * period + (parity == 0 ? 0 : u_block.width);
        s.length = b.width;
        s.label = b.label;
        s.order = order;
        lay.stripes.push_back(s);
      }
      ++order;
    }
  }
  check_region(lay);
  return lay;
}

std::vector<Violation> validate(const CircuitLayout& lay) {
  std::vector<Violation> out;
  try {
    lay.lattice.validate();
  } catch (const PreconditionError& e) {
    out.push_back({-1, "lattice", e.what()});
    return out;
  }
  const LatticeSpec& spec = lay.lattice;
  for (std::size_t idx = 0; idx < lay.stripes.size(); ++idx) {
    const StripeSpec& s = lay.stripes[idx];
    const int i = static_cast<int>(idx);
    auto flag = [&](const char* rule, const std::string& detail) {
      out.push_back({i, rule, detail});
    };
    const bool shape_ok = s.length >= 1 &&
                          ((s.kind == StripeKind::one_qubit && s.row_count == 2) ||
                           (s.kind == StripeKind::two_qubit && s.row_count == 3) ||
                           (s.kind == StripeKind::ca_block && s.row_count >= 2));
    if (!shape_ok) {
      flag("shape", std::string(kind_name(s.kind)) + " with " + std::to_string(s.row_count) +
                        " rows and length " + std::to_string(s.length));
      continue;
    }
    const int top = lay.chain_row(s.first_row);
    const int bottom = lay.chain_row(s.last_row());
    if (top < 1 || bottom > spec.rows()) {
      flag("rows", "chain rows " + std::to_string(top) + ".." + std::to_string(bottom) +
                       " outside 1.." + std::to_string(spec.rows()));
      continue;
    }
    if (s.kind != StripeKind::ca_block) {
      const bool aligned = s.kind == StripeKind::two_qubit || s.first_row % 2 == 1;
      if (lay.qubits > 0 && (!aligned || s.first_row < 1 || s.last_row() > 2 * lay.qubits)) {
        flag("qubit_map", "rows " + std::to_string(s.first_row) + ".." +
                              std::to_string(s.last_row()) + " do not match a qubit row pair");
      }
      double realized = 0.0;
      if (s.kind == StripeKind::one_qubit) {
        realized = kTwoPi * std::cos(s.phi);
      } else {
        realized = (s.control == ControlSide::below ? 1.0 : -1.0) * kTwoPi * std::sin(s.phi);
      }
      if (std::abs(s.theta) > kTwoPi + kAngleTol || std::abs(realized - s.theta) > kAngleTol) {
        flag("angle", "phi " + std::to_string(s.phi) + " realizes " + std::to_string(realized) +
                          ", requested " + std::to_string(s.theta));
      }
    }
    const int c0 = lay.lattice_column(s.column_start);
    const int c1 = lay.lattice_column(s.column_end());
    if (c1 > spec.k) {
      flag("confinement", "lattice columns " + std::to_string(c0) + ".." + std::to_string(c1) +
                              " exceed k = " + std::to_string(spec.k));
    }
    for (int r = top; r <= bottom; ++r) {
      if (c0 < lattice::first_column(spec, r) || c1 > spec.n) {
        flag("row_length", "chain row " + std::to_string(r) + " spans columns " +
                               std::to_string(lattice::first_column(spec, r)) + ".." +
                               std::to_string(spec.n));
        break;
      }
    }
  }
  for (std::size_t a = 0; a < lay.stripes.size(); ++a) {
    for (std::size_t b = a + 1; b < lay.stripes.size(); ++b) {
      const StripeSpec& x = lay.stripes[a];
      const StripeSpec& y = lay.stripes[b];
      if (!rows_overlap(x, y)) continue;
      if (columns_overlap(x, y) || y.column_start < x.column_start) {
        out.push_back({static_cast<int>(b), "ordering",
                       "shares rows with stripe " + std::to_string(a) + " but columns " +
                           std::to_string(y.column_start) + ".." + std::to_string(y.column_end()) +
                           " do not follow " + std::to_string(x.column_start) + ".." +
                           std::to_string(x.column_end())});
      }
    }
  }
  return out;
}

ComplexMatrix gate_unitary(const LogicalGate& g, int qubits) {
  switch (g.kind) {
    case GateKind::rot_x:
      return embed_one(rotation(Axis::x, g.theta), g.target, qubits);
    case GateKind::rot_y:
      return embed_one(rotation(Axis::y, g.theta), g.target, qubits);
    case GateKind::cphase: {
      const ComplexMatrix phase = linalg::expm_hermitian(pauli::z(), -g.theta);
      // logical |0> is the +1 eigenstate of sigma_z, index 0
      ComplexMatrix p0 = ComplexMatrix::Zero(2, 2);
      ComplexMatrix p1 = ComplexMatrix::Zero(2, 2);
      p0(0, 0) = 1.0;
      p1(1, 1) = 1.0;
      return embed_two(p0, g.control, pauli::identity(), g.target, qubits) +
             embed_two(p1, g.control, phase, g.target, qubits);
    }
  }
  throw PreconditionError("gate_unitary: unknown gate kind");
}

ComplexMatrix circuit_unitary(const LogicalCircuit& circuit) {
  check_circuit(circuit);
  const Eigen::Index d = Eigen::Index{1} << circuit.qubits;
  ComplexMatrix u = ComplexMatrix::Identity(d, d);
  for (const LogicalGate& g : circuit.gates) u = gate_unitary(g, circuit.qubits) * u;
  return u;
}

ComplexMatrix stripe_target(const StripeSpec& s, int qubits) {
  switch (s.kind) {
    case StripeKind::one_qubit: {
      const int q = (s.first_row + 1) / 2;
      const double theta = kTwoPi * std::cos(s.phi);
      return gate_unitary(s.axis == Axis::x ? LogicalGate::rot_x(q, theta)
                                            : LogicalGate::rot_y(q, theta),
                          qubits);
    }
    case StripeKind::two_qubit: {
      const double theta = kTwoPi * std::sin(s.phi);
      if (s.control == ControlSide::below) {
        const int t = (s.first_row + 1) / 2;
        return gate_unitary(LogicalGate::cphase(t + 1, t, theta), qubits);
      }
      const int c = s.first_row / 2;
      return gate_unitary(LogicalGate::cphase(c, c + 1, -theta), qubits);
    }
    case StripeKind::ca_block:
      break;
  }
  throw PreconditionError("stripe_target: cellular-automaton blocks carry no logical gate");
}

ComplexMatrix layout_unitary(const CircuitLayout& lay) {
  std::vector<std::size_t> idx(lay.stripes.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return lay.stripes[a].column_start < lay.stripes[b].column_start;
  });
  const Eigen::Index d = Eigen::Index{1} << lay.qubits;
  ComplexMatrix u = ComplexMatrix::Identity(d, d);
  for (std::size_t i : idx) u = stripe_target(lay.stripes[i], lay.qubits) * u;
  return u;
}

nlohmann::json layout_to_json(const CircuitLayout& lay) {
  nlohmann::json j;
  j["lattice"] = {{"n", lay.lattice.n}, {"k", lay.lattice.k}};
  j["qubits"] = lay.qubits;
  j["row_offset"] = lay.row_offset;
  j["column_offset"] = lay.column_offset;
  nlohmann::json qmap = nlohmann::json::array();
  for (int q = 1; q <= lay.qubits; ++q) {
    const auto [a, b] = lay.qubit_rows(q);
    qmap.push_back({{"qubit", q}, {"rows", {a, b}}, {"chain_rows", {lay.chain_row(a), lay.chain_row(b)}}});
  }
  j["qubit_map"] = qmap;
  nlohmann::json stripes = nlohmann::json::array();
  for (const StripeSpec& s : lay.stripes) {
    nlohmann::json e;
    e["kind"] = kind_name(s.kind);
    nlohmann::json rows = nlohmann::json::array();
    for (int r = s.first_row; r <= s.last_row(); ++r) rows.push_back(r);
    e["rows"] = rows;
    e["columns"] = {s.column_start, s.column_end()};
    e["l"] = s.length;
    e["order"] = s.order;
    if (s.kind == StripeKind::one_qubit) e["axis"] = s.axis == Axis::x ? "x" : "y";
    if (s.kind == StripeKind::two_qubit) e["control"] = s.control == ControlSide::below ? "below" : "above";
    if (s.kind == StripeKind::ca_block) {
      e["label"] = s.label;
    } else {
      e["phi"] = s.phi;
      e["theta"] = s.theta;
    }
    stripes.push_back(e);
  }
  j["stripes"] = stripes;
  return j;
}

CircuitLayout layout_from_json(const nlohmann::json& j) {
  try {
    CircuitLayout lay;
    lay.lattice.n = j.at("lattice").at("n").get<int>();
    lay.lattice.k = j.at("lattice").at("k").get<int>();
    lay.qubits = j.value("qubits", 0);
    lay.row_offset = j.at("row_offset").get<int>();
    lay.column_offset = j.at("column_offset").get<int>();
    for (const auto& e : j.at("stripes")) {
      StripeSpec s;
      const std::string kind = e.at("kind").get<std::string>();
      if (kind == "one_qubit") {
        s.kind = StripeKind::one_qubit;
      } else if (kind == "two_qubit") {
        s.kind = StripeKind::two_qubit;
      } else if (kind == "ca_block") {
        s.kind = StripeKind::ca_block;
      } else {
        throw PreconditionError("layout json: unknown stripe kind '" + kind + "'");
      }
      const auto& rows = e.at("rows");
      if (rows.empty()) throw PreconditionError("layout json: stripe without rows");
      s.first_row = rows.front().get<int>();
      s.row_count = static_cast<int>(rows.size());
      s.column_start = e.at("columns").at(0).get<int>();
      s.length = e.at("columns").at(1).get<int>() - s.column_start + 1;
      if (e.contains("l") && e.at("l").get<int>() != s.length) {
        throw PreconditionError("layout json: l disagrees with the column span");
      }
      s.order = e.value("order", 0);
      s.axis = e.value("axis", std::string("x")) == "y" ? Axis::y : Axis::x;
      s.control = e.value("control", std::string("below")) == "above" ? ControlSide::above
                                                                      : ControlSide::below;
      s.phi = e.value("phi", 0.0);
      s.theta = e.value("theta", 0.0);
      s.label = e.value("label", std::string());
        lay.stripes.push_back(s);
    }
    return lay;
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("layout json: ") + e.what());
  }
}

std::string text_map(const CircuitLayout& lay) {
  static const char kGlyphs[] = "0123456789abcdefghijklmnopqrstuvwxyz";
  const LatticeSpec& spec = lay.lattice;
  std::ostringstream out;
  for (int r = 1; r <= spec.rows(); ++r) {
    out << (r < 10 ? " " : "") << r << ' ';
    for (int c = 1; c <= spec.n; ++c) {
      char cell = c < lattice::first_column(spec, r) ? '#' : '.';
      for (std::size_t i = 0; i < lay.stripes.size(); ++i) {
        const StripeSpec& s = lay.stripes[i];
        if (r >= lay.chain_row(s.first_row) && r <= lay.chain_row(s.last_row()) &&
            c >= lay.lattice_column(s.column_start) && c <= lay.lattice_column(s.column_end())) {
          cell = kGlyphs[i % 36];
        }
      }
      out << cell;
      if (c == spec.k) out << '|';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace ergo
