#pragma once

#include <map>
#include <string>
#include <vector>

#include "hbg/solution.hpp"

namespace hbg {

enum class GateKind { kH, kX, kS, kSdg, kCnot, kRz };

std::string_view to_string(GateKind kind);
GateKind gate_kind_from_string(std::string_view name);

/// Elementary gate. CNOT targets are (control, target). RZ(angle) is the
/// standard exp(-i angle Z / 2).
struct Gate {
  GateKind kind = GateKind::kH;
  std::vector<int> targets;
  double angle = 0.0;

  static Gate h(int q) { return {GateKind::kH, {q}, 0.0}; }
  static Gate x(int q) { return {GateKind::kX, {q}, 0.0}; }
  static Gate s(int q) { return {GateKind::kS, {q}, 0.0}; }
  static Gate sdg(int q) { return {GateKind::kSdg, {q}, 0.0}; }
  static Gate cnot(int control, int target) {
    return {GateKind::kCnot, {control, target}, 0.0};
  }
  static Gate rz(int q, double angle) { return {GateKind::kRz, {q}, angle}; }

  /// Throws kInvalidArgument if the arity or angle is malformed.
  void validate() const;
  bool operator==(const Gate&) const = default;
};

using GateList = std::vector<Gate>;

/// Alice owns qubits 0..L-1 and Bob owns L..2L-1; qubit 0 is the least
/// significant bit of a basis-state index. Each measurement circuit ends with
/// H on the player's first qubit, after which that qubit is read out in the
/// computational basis (0 -> +1, 1 -> -1). Bob answers the product of the
/// two outcomes, or default_answers[t] for columns without a circuit.
struct CircuitSpec {
  int qubits_per_player = 0;
  GateList prep;
  std::map<std::string, GateList> alice;
  std::map<std::string, GateList> bob;
  std::map<std::string, int> default_answers;
};

enum class Role { kAlice, kBob };

/// Coefficients c_j of the measurement operator sum_j c_j T_j.
struct MeasurementCoefficients {
  std::vector<double> c;
};

/// Alice uses her vector as is. Bob's operator uses transposed T's, which
/// flips the sign of every even (1-based) component.
MeasurementCoefficients measurement_coefficients(const Eigen::VectorXd& v,
                                                 Role role);

struct RotationAngles {
  /// theta_j, j = 1..L: removes the Y term on qubit j.
  std::vector<double> theta;
  /// phi_j, j = 2..L (phi[0] is phi_2): folds qubit j into qubit j-1.
  std::vector<double> phi;
};

RotationAngles rotation_angles(const MeasurementCoefficients& coefficients);

/// Gates that rotate sum_j c_j T_j into ||c|| X on the register's first
/// qubit, followed by the H that turns the X readout into a Z readout.
/// `offset` is the index of the register's first qubit.
GateList measurement_circuit(const MeasurementCoefficients& coefficients,
                             int qubits, int offset);

/// H on every Alice qubit, then CNOT(Alice_i -> Bob_i).
GateList entangled_state_prep(int qubits_per_player);

int qubits_for_dimension(int d);

CircuitSpec build_circuit(const HyperbitStrategy& strategy);

}  // namespace hbg
