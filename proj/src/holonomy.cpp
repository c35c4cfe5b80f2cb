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

#include "ergo/holonomy.hpp"

#include <cmath>
#include <random>

namespace ergo {

namespace {

ComplexMatrix kron3(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c) {
  return linalg::kron(linalg::kron(a, b), c);
}

ComplexMatrix tilted(double phi) {
  return std::cos(phi) * pauli::x() + std::sin(phi) * pauli::z();
}

void check_schedule(const LoopFamily& family, const Schedule& schedule) {
  const auto l = static_cast<std::size_t>(family.steps);
  if (!schedule.durations.empty() && schedule.durations.size() != l) {
    throw PreconditionError("schedule: need one duration per step");
  }
  if (!schedule.gaps.empty() && schedule.gaps.size() != l - 1) {
    throw PreconditionError("schedule: need one gap between consecutive steps");
  }
  for (double d : schedule.durations) {
    if (!(d > 0.0)) throw PreconditionError("schedule: durations must be positive");
  }
  for (double g : schedule.gaps) {
    if (g < 0.0) throw PreconditionError("schedule: gaps must be non-negative");
  }
}

}  // namespace

void LoopFamily::validate() const {
  if (steps < 2) throw PreconditionError("loop family: need at least 2 steps");
  if (!(step_duration > 0.0)) throw PreconditionError("loop family: step duration must be positive");
  if (generator.rows() != base.rows() || generator.cols() != base.cols() ||
      generator.rows() != generator.cols()) {
    throw PreconditionError("loop family: generator and base must be square of equal size");
  }
  if (linalg::hermiticity_defect(generator) > 1e-12 || linalg::hermiticity_defect(base) > 1e-12) {
    throw PreconditionError("loop family: generator and base must be Hermitian");
  }
}

double LoopFamily::angle(int j) const {
  return 2.0 * kPi * static_cast<double>(j - 1) / static_cast<double>(steps - 1);
}

ComplexMatrix LoopFamily::member(int j) const {
  const ComplexMatrix r = linalg::expm_hermitian(generator, -angle(j));
  return r * base * r.adjoint();
}

double LoopFamily::closure_defect() const {
  return (member(1) - member(steps)).cwiseAbs().maxCoeff();
}

Schedule Schedule::jittered(int steps, double step_duration, double jitter,
                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-jitter, jitter);
  Schedule s;
  s.durations.reserve(static_cast<std::size_t>(steps));
  for (int j = 0; j < steps; ++j) s.durations.push_back(step_duration * (1.0 + u(rng)));
  return s;
}

ComplexMatrix integrate_loop(const LoopFamily& family, const Schedule& schedule) {
  family.validate();
  check_schedule(family, schedule);
  const auto gen = linalg::eigh(family.generator);
  const auto base = linalg::eigh(family.base);
  const Eigen::Index d = family.base.rows();
  const ComplexMatrix zero = ComplexMatrix::Zero(d, d);

  ComplexMatrix u = ComplexMatrix::Identity(d, d);
  for (int j = 1; j <= family.steps; ++j) {
    const auto idx = static_cast<std::size_t>(j - 1);
    const double tau = schedule.durations.empty() ? family.step_duration : schedule.durations[idx];
    // exp(i theta X) exp(-i G0 tau) exp(-i theta X)
    const ComplexMatrix r = linalg::propagate(gen, -family.angle(j));
    u = r * linalg::propagate(base, tau) * r.adjoint() * u;
    if (!schedule.gaps.empty() && j < family.steps) {
      u = linalg::expm_hermitian(zero, schedule.gaps[idx]) * u;
    }
  }
  return u;
}

double CodeSpace::leakage(const ComplexMatrix& u) const {
  const Eigen::Index d = isometry.rows();
  const ComplexMatrix q = projector();
  const ComplexMatrix out = (ComplexMatrix::Identity(d, d) - q) * u * q;
  return linalg::operator_norm(out);
}

CodeSpace CodeSpace::one_qubit() {
  CodeSpace c;
  c.isometry = ComplexMatrix::Zero(4, 2);
  c.isometry(1, 0) = 1.0;  // |0>_l = down up
  c.isometry(2, 1) = 1.0;  // |1>_l = up down
  return c;
}

CodeSpace CodeSpace::two_qubit() {
  const CodeSpace one = one_qubit();
  return {linalg::kron(one.isometry, one.isometry)};
}

GateReport GateReport::compare(std::string name, ComplexMatrix implemented,
                               ComplexMatrix target) {
  GateReport r;
  r.name = std::move(name);
  r.fidelity = linalg::phase_invariant_fidelity(implemented, target);
  r.distance = linalg::phase_stripped_distance(implemented, target);
  r.unitarity_defect = linalg::unitarity_defect(implemented);
  r.implemented = std::move(implemented);
  r.target = std::move(target);
  return r;
}

namespace stripe {

ComplexMatrix one_qubit_generator(double phi, Axis axis) {
  const ComplexMatrix first = axis == Axis::x ? pauli::x() : pauli::y();
  return linalg::kron(first, tilted(phi));
}

ComplexMatrix pair_base() {
  return linalg::kron(pauli::z(), pauli::identity()) + linalg::kron(pauli::identity(), pauli::z());
}

ComplexMatrix one_qubit_step(int j, int steps, double phi, Axis axis) {
  return LoopFamily{one_qubit_generator(phi, axis), pair_base(), steps, 1.0}.member(j);
}

ComplexMatrix two_qubit_generator(double phi, ControlSide side) {
  const ComplexMatrix id = pauli::identity();
  if (side == ControlSide::below) return kron3(id, tilted(phi), pauli::up_projector());
  return kron3(pauli::down_projector(), tilted(phi), id);
}

ComplexMatrix two_qubit_base(ControlSide side) {
  const ComplexMatrix id = pauli::identity();
  if (side == ControlSide::below) return kron3(pauli::z(), id, id) + kron3(id, pauli::z(), id);
  return kron3(id, id, pauli::z()) + kron3(id, pauli::z(), id);
}

ComplexMatrix two_qubit_step(int j, int steps, double phi, ControlSide side) {
  return LoopFamily{two_qubit_generator(phi, side), two_qubit_base(side), steps, 1.0}.member(j);
}

}  // namespace stripe

ComplexMatrix rotation(Axis axis, double theta) {
  const ComplexMatrix s = axis == Axis::x ? pauli::x() : pauli::y();
  return linalg::expm_hermitian(s, theta);
}

GateReport one_qubit_gate(double phi, Axis axis, int steps, double step_duration,
                          const Schedule& schedule) {
  if (steps < 50) throw PreconditionError("one_qubit_gate: need l >= 50");
  const LoopFamily family{stripe::one_qubit_generator(phi, axis), stripe::pair_base(), steps,
                          step_duration};
  const ComplexMatrix u = integrate_loop(family, schedule);
  const CodeSpace code = CodeSpace::one_qubit();
  const LogicalGate gate = axis == Axis::x ? LogicalGate::rot_x(1, 2.0 * kPi * std::cos(phi))
                                           : LogicalGate::rot_y(1, 2.0 * kPi * std::cos(phi));
  GateReport r = GateReport::compare(axis == Axis::x ? "one_qubit_x" : "one_qubit_y",
                                     code.restrict(u), gate_unitary(gate, 1));
  r.leakage = code.leakage(u);
  r.phi = phi;
  r.steps = steps;
  r.step_duration = step_duration;
  return r;
}

TwoQubitReport two_qubit_gate(double phi, int steps, double step_duration, ControlSide side,
                              const Schedule& schedule) {
  if (steps < 50) throw PreconditionError("two_qubit_gate: need l >= 50");
  const LoopFamily family{stripe::two_qubit_generator(phi, side), stripe::two_qubit_base(side),
                          steps, step_duration};
  const ComplexMatrix u3 = integrate_loop(family, schedule);
  const ComplexMatrix id = pauli::identity();

  // Four spins: rows of the upper and lower logical qubit.
  const ComplexMatrix u4 =
      side == ControlSide::below ? linalg::kron(u3, id) : linalg::kron(id, u3);
  const CodeSpace code = CodeSpace::two_qubit();
  const double angle = 2.0 * kPi * std::sin(phi);
  const LogicalGate gate = side == ControlSide::below ? LogicalGate::cphase(2, 1, angle)
                                                      : LogicalGate::cphase(1, 2, -angle);

  TwoQubitReport rep;
  rep.side = side;
  rep.full = GateReport::compare("cphase", code.restrict(u4), gate_unitary(gate, 2));
  rep.full.leakage = code.leakage(u4);

  // Target-pair blocks with the control atom frozen.
  const CodeSpace one = CodeSpace::one_qubit();
  const ComplexMatrix rot = linalg::expm_hermitian(pauli::z(), side == ControlSide::below ? -angle : angle);
  for (int c = 0; c < 2; ++c) {
    ComplexMatrix pick = ComplexMatrix::Zero(2, 1);
    pick(c, 0) = 1.0;
    const ComplexMatrix embed = side == ControlSide::below
                                    ? linalg::kron(ComplexMatrix::Identity(4, 4), pick)
                                    : linalg::kron(pick, ComplexMatrix::Identity(4, 4));
    const ComplexMatrix block = embed.adjoint() * u3 * embed;
    const bool active = (side == ControlSide::below) == (c == 1);
    GateReport g = GateReport::compare(c == 0 ? "branch_down" : "branch_up", one.restrict(block),
                                       active ? rot : ComplexMatrix(id));
    g.leakage = one.leakage(block);
    (c == 0 ? rep.branch_down : rep.branch_up) = std::move(g);
  }
  for (GateReport* g : {&rep.full, &rep.branch_down, &rep.branch_up}) {
    g->phi = phi;
    g->steps = steps;
    g->step_duration = step_duration;
  }
  return rep;
}

MakhlinInvariants makhlin_invariants(const ComplexMatrix& u) {
  if (u.rows() != 4 || u.cols() != 4) throw PreconditionError("makhlin_invariants: need 4x4");
  const double s = 1.0 / std::sqrt(2.0);
  const cd i(0.0, 1.0);
  ComplexMatrix q(4, 4);
  q << s, 0, 0, i * s,
       0, i * s, s, 0,
       0, i * s, -s, 0,
       s, 0, 0, -i * s;
  const ComplexMatrix ub = q.adjoint() * u * q;
  const ComplexMatrix m = ub.transpose() * ub;
  const cd det = u.determinant();
  const cd tr = m.trace();
  const cd tr2 = (m * m).trace();
  return {tr * tr / (16.0 * det), ((tr * tr - tr2) / (4.0 * det)).real()};
}

WitnessReport universality_witness(int steps, double step_duration) {
  WitnessReport w;
  auto one = [&](Axis axis, double theta, const std::string& name) {
    GateReport r = one_qubit_gate(one_qubit_phi(theta), axis, steps, step_duration);
    r.name = name;
    return r;
  };
  const GateReport rx = one(Axis::x, kPi / 2.0, "rot_x(pi/2)");
  const GateReport ry = one(Axis::y, kPi / 4.0, "rot_y(pi/4)");
  const GateReport rx_fwd = one(Axis::x, kPi / 3.0, "rot_x(pi/3)");
  const GateReport rx_back = one(Axis::x, -kPi / 3.0, "rot_x(-pi/3)");
  // Entangling class of CZ: the phase sum phi00 + phi11 - phi01 - phi10 is pi.
  TwoQubitReport cp = two_qubit_gate(two_qubit_phi(kPi / 2.0, ControlSide::below), steps,
                                     step_duration, ControlSide::below);
  cp.full.name = "cphase(pi/2)";

  ComplexMatrix hadamard(2, 2);
  hadamard << 1.0, 1.0, 1.0, -1.0;
  hadamard /= std::sqrt(2.0);
  GateReport h = GateReport::compare("hadamard_composite", rx.implemented * ry.implemented, hadamard);
  GateReport e = GateReport::compare("identity_composite", rx_back.implemented * rx_fwd.implemented,
                                     ComplexMatrix::Identity(2, 2));

  ComplexMatrix cz = ComplexMatrix::Identity(4, 4);
  cz(3, 3) = -1.0;
  const MakhlinInvariants a = makhlin_invariants(cp.full.implemented);
  const MakhlinInvariants b = makhlin_invariants(cz);
  w.cz_invariant_distance = std::abs(a.g1 - b.g1) + std::abs(a.g2 - b.g2);

  w.gates = {rx, ry, rx_fwd, rx_back, cp.full, h, e};
  return w;
}

}  // namespace ergo
