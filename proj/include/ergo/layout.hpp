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

#include <optional>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "ergo/configspace.hpp"
#include "ergo/linalg.hpp"

namespace ergo {

enum class Axis { x, y };
enum class GateKind { rot_x, rot_y, cphase };
enum class StripeKind { one_qubit, two_qubit, ca_block };
/// Where the control qubit of a two-qubit stripe sits relative to its target.
enum class ControlSide { below, above };

/// Logical gate on 1-based qubit indices.
///
///   rot_x(theta)  = exp(-i theta sigma_x)
///   rot_y(theta)  = exp(-i theta sigma_y)
///   cphase(theta) = |0><0|_control (x) 1 + |1><1|_control (x) exp(i theta sigma_z)_target
struct LogicalGate {
  GateKind kind = GateKind::rot_x;
  double theta = 0.0;
  int target = 1;
  int control = 0;  // cphase only; must be target +- 1

  static LogicalGate rot_x(int qubit, double theta) { return {GateKind::rot_x, theta, qubit, 0}; }
  static LogicalGate rot_y(int qubit, double theta) { return {GateKind::rot_y, theta, qubit, 0}; }
  static LogicalGate cphase(int control, int target, double theta) {
    return {GateKind::cphase, theta, target, control};
  }
};

struct LogicalCircuit {
  int qubits = 0;
  std::vector<LogicalGate> gates;
};

/// Opaque cellular-automaton block descriptor (U or V of a Margolus step).
struct BlockSpec {
  std::string label;
  int rows_per_cell = 2;  // circuit rows per CA cell
  int width = 1;          // columns per block
};

/// One interaction stripe in circuit coordinates.
///
/// Rows and columns are 1-based circuit coordinates; CircuitLayout maps them
/// onto the lattice. One-qubit stripes cover rows (first_row, first_row+1);
/// two-qubit stripes cover three consecutive rows, the target pair plus the
/// neighbouring row of the control qubit.
struct StripeSpec {
  StripeKind kind = StripeKind::one_qubit;
  int first_row = 1;
  int row_count = 2;
  int column_start = 1;
  int length = 1;  // l, number of interaction steps V_1 .. V_l
  Axis axis = Axis::x;
  ControlSide control = ControlSide::below;
  double phi = 0.0;
  double theta = 0.0;  // logical angle the stripe realizes
  std::string label;   // ca_block only
  int order = 0;       // index of the source gate / block

  int column_end() const { return column_start + length - 1; }
  int last_row() const { return first_row + row_count - 1; }
  /// Circuit row whose atom column selects the active step.
  int anchor_row() const { return first_row + 1; }
};

/// Stripe placements confined to the circuit region.
///
/// Chain row = circuit row + row_offset; lattice column = circuit column +
/// column_offset. Logical qubit i occupies circuit rows 2i-1 and 2i.
struct CircuitLayout {
  LatticeSpec lattice;
  int qubits = 0;
  int row_offset = 0;
  int column_offset = 0;
  std::vector<StripeSpec> stripes;

  int chain_row(int circuit_row) const { return circuit_row + row_offset; }
  int lattice_column(int circuit_column) const { return circuit_column + column_offset; }
  std::pair<int, int> qubit_rows(int qubit) const { return {2 * qubit - 1, 2 * qubit}; }
};

struct Violation {
  int stripe = -1;  // index into CircuitLayout::stripes
  std::string rule;
  std::string detail;
};

/// Thrown by compile / margolus_tiling when the stripes need more columns
/// than the circuit region offers.
class RegionOverflow : public PreconditionError {
 public:
  RegionOverflow(const std::string& what, int required_k)
      : PreconditionError(what), required_k_(required_k) {}
  int required_k() const { return required_k_; }

 private:
  int required_k_;
};

/// Angle equations of the stripe families.
double one_qubit_phi(double theta);
double two_qubit_phi(double theta, ControlSide side);
/// Reduces |theta| > 2 pi modulo 2 pi, keeping the sign.
double reduce_angle(double theta);

/// Places stripes left to right in gate order, `l` steps each.
CircuitLayout compile(const LogicalCircuit& circuit, int l, const LatticeSpec& spec);

/// Alternating U blocks on cell pairs (C_{2j-1}, C_{2j}) and V blocks on
/// (C_{2j}, C_{2j+1}), one U and one V column group per CA step.
CircuitLayout margolus_tiling(int ca_steps, int cells, const BlockSpec& u_block,
                              const BlockSpec& v_block, const LatticeSpec& spec);

/// Empty iff every CircuitLayout invariant holds.
std::vector<Violation> validate(const CircuitLayout& layout);

/// Logical unitary of a circuit on q qubits (qubit 1 most significant).
ComplexMatrix circuit_unitary(const LogicalCircuit& circuit);
/// Logical action of one gate or stripe.
ComplexMatrix gate_unitary(const LogicalGate& gate, int qubits);
ComplexMatrix stripe_target(const StripeSpec& stripe, int qubits);
/// Product of stripe targets in column order; stripes sharing a column
/// span on disjoint rows commute.
ComplexMatrix layout_unitary(const CircuitLayout& layout);

nlohmann::json layout_to_json(const CircuitLayout& layout);
CircuitLayout layout_from_json(const nlohmann::json& j);
/// One text line per chain row: '.' free, '#' outside the lattice, stripe
/// index (mod 36) where a stripe covers the cell, '|' marks column k.
std::string text_map(const CircuitLayout& layout);

}  // namespace ergo
