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
#include <optional>
#include <string>
#include <vector>

#include "ergo/layout.hpp"
#include "ergo/linalg.hpp"

namespace ergo {

/// G_j = exp(i theta_j X) G0 exp(-i theta_j X), theta_j = 2 pi (j-1)/(l-1).
struct LoopFamily {
  ComplexMatrix generator;
  ComplexMatrix base;
  int steps = 400;
  double step_duration = 5.0;

  void validate() const;
  double angle(int j) const;
  ComplexMatrix member(int j) const;
  /// ||G_1 - G_l||, zero when exp(2 pi i X) commutes with G0.
  double closure_defect() const;
};

/// Per-step durations and zero-Hamiltonian gaps; empty vectors mean
/// uniform step_duration and no gaps.
struct Schedule {
  std::vector<double> durations;  // size l
  std::vector<double> gaps;       // size l-1, inserted after step j

  /// durations tau * (1 + u), u uniform in [-jitter, jitter].
  static Schedule jittered(int steps, double step_duration, double jitter,
                           std::uint64_t seed);
};

/// Product of exp(-i G_j tau_j) over j = 1 .. l, last step leftmost.
ComplexMatrix integrate_loop(const LoopFamily& family, const Schedule& schedule = {});

/// Logical basis of an encoded register inside a spin space.
struct CodeSpace {
  ComplexMatrix isometry;  // columns = logical basis states

  ComplexMatrix projector() const { return isometry * isometry.adjoint(); }
  Eigen::Index logical_dimension() const { return isometry.cols(); }
  ComplexMatrix restrict(const ComplexMatrix& u) const {
    return isometry.adjoint() * u * isometry;
  }
  /// ||(1 - Q) U Q||
  double leakage(const ComplexMatrix& u) const;

  /// span{|du>, |ud>} in the two-spin space, index 2 s1 + s2 (0 = down).
  static CodeSpace one_qubit();
  /// Logical (upper, lower) qubits on four spins.
  static CodeSpace two_qubit();
};

struct GateReport {
  std::string name;
  ComplexMatrix implemented;  // restriction to the code space
  ComplexMatrix target;
  double fidelity = 0.0;
  double distance = 0.0;  // phase-stripped
  double leakage = 0.0;
  double unitarity_defect = 0.0;
  double phi = 0.0;
  int steps = 0;
  double step_duration = 0.0;

  static GateReport compare(std::string name, ComplexMatrix implemented,
                            ComplexMatrix target);
};

/// Spin operators of the stripe families, qubit basis index 0 = down.
namespace stripe {
/// sigma_axis (x) (cos phi sigma_x + sin phi sigma_z)
ComplexMatrix one_qubit_generator(double phi, Axis axis);
/// sigma_z (x) 1 + 1 (x) sigma_z on two spins.
ComplexMatrix pair_base();
/// V_j on the two-spin space of rows (a, a+1).
ComplexMatrix one_qubit_step(int j, int steps, double phi, Axis axis);
/// Three-spin generator and base of the controlled family.
///
/// below: spins (target top, target bottom, control atom), active when the
/// control atom is up. above: spins (control atom, target top, target
/// bottom), active when the control atom is down. Both are the state of
/// the control atom in logical |1>.
ComplexMatrix two_qubit_generator(double phi, ControlSide side);
ComplexMatrix two_qubit_base(ControlSide side);
ComplexMatrix two_qubit_step(int j, int steps, double phi, ControlSide side);
}  // namespace stripe

ComplexMatrix rotation(Axis axis, double theta);  // exp(-i theta sigma_axis)

GateReport one_qubit_gate(double phi, Axis axis, int steps, double step_duration,
                          const Schedule& schedule = {});

struct TwoQubitReport {
  GateReport full;         // on C (x) C, (upper, lower) order
  GateReport branch_down;  // control atom down, target pair block
  GateReport branch_up;
  ControlSide side = ControlSide::below;
};

TwoQubitReport two_qubit_gate(double phi, int steps, double step_duration,
                              ControlSide side = ControlSide::below,
                              const Schedule& schedule = {});

/// Local-equivalence invariants (G1 complex, G2 real) of a two-qubit gate.
struct MakhlinInvariants {
  cd g1;
  double g2 = 0.0;
};
MakhlinInvariants makhlin_invariants(const ComplexMatrix& u);

struct WitnessReport {
  std::vector<GateReport> gates;  // generators, then composites
  double cz_invariant_distance = 0.0;
};

WitnessReport universality_witness(int steps, double step_duration);

}  // namespace ergo
