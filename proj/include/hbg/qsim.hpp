#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "hbg/circuit.hpp"

namespace hbg {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr int kMaxSimulatedQubits = 12;

/// Dense statevector; qubit 0 is the least significant index bit.
class StateVector {
 public:
  /// |0...0> on `num_qubits` qubits.
  explicit StateVector(int num_qubits);
  StateVector(int num_qubits, std::vector<Complex> amplitudes);

  int num_qubits() const { return num_qubits_; }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  Complex operator[](std::size_t i) const { return amps_[i]; }
  double norm_squared() const;

  void apply(const Gate& gate);
  void apply(const GateList& gates);

 private:
  int num_qubits_;
  std::vector<Complex> amps_;
};

StateVector apply_gate(StateVector state, const Gate& gate);

/// Unitary of a gate list on `num_qubits` qubits.
ComplexMatrix circuit_unitary(const GateList& gates, int num_qubits);

/// T_{2i-1} = X_i Z_{i-1}...Z_1 and T_{2i} = Y_i Z_{i-1}...Z_1 (k is 1-based)
/// on an L-qubit register.
ComplexMatrix t_operator(int qubits, int k);

/// sum_j c_j T_j for Alice, sum_j v_j T_j^T for Bob.
ComplexMatrix measurement_operator(const Eigen::VectorXd& v, int qubits,
                                   Role role);

/// <Psi| A_s (x) B_t |Psi> with the dense operators and the prepared state.
/// Throws kInvalidArgument when gamma_t != 0.
double expectation_AB(const HyperbitStrategy& strategy, int s, int t);

/// Exact <(-1)^(a xor b)> after running prep, Alice's circuit for s and Bob's
/// for t, reading qubit 0 and qubit L.
double simulated_correlation(const CircuitSpec& circuit, const std::string& s,
                             const std::string& t);

/// Shot-based estimate of the same correlation with a seeded generator.
double sampled_correlation(const CircuitSpec& circuit, const std::string& s,
                           const std::string& t, int shots, std::uint64_t seed);

struct VerificationEntry {
  std::string s;
  std::string t;
  bool is_default = false;
  double expected = 0.0;
  double simulated = 0.0;
};

struct VerificationReport {
  std::vector<VerificationEntry> entries;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  /// Value of the game under the simulated S; only set when a game is given.
  double simulated_value = 0.0;
};

/// Compares simulated answer expectations with gamma_t + x_s . y_t for every
/// (s, t). A deviation above `tol` yields passed == false.
VerificationReport verify_strategy(const HyperbitStrategy& strategy,
                                   const CircuitSpec& circuit, double tol,
                                   const GameMatrix* game = nullptr);

}  // namespace hbg
