#pragma once

#include "hbg/game.hpp"

namespace hbg {

enum class OptimumCase { kBoundaryMinus, kBoundaryPlus, kInterior };

std::string_view to_string(OptimumCase c);

/// f(z) = sum_s sqrt(C_s1^2 + C_s2^2 + 2 C_s1 C_s2 z) and f'(z). At an
/// endpoint where a radicand vanishes with C_s1 C_s2 != 0, the one-sided
/// derivative is +-infinity (`derivative_infinite` is set).
struct FValue {
  double f = 0.0;
  double derivative = 0.0;
  bool derivative_infinite = false;
};

FValue f_and_derivative(const GameMatrix& game, double z);

struct ThreeTwoAnalysis {
  double delta_star = 0.0;
  /// 1..5: which single-bit strategy is optimal, in the order
  /// |C12|, |C21|, |C22|, |C31|, |C11| + |C32|.
  int delta_index = 0;
  double z_star = 0.0;
  OptimumCase optimum_case = OptimumCase::kInterior;
  double f_at_z_star = 0.0;
  double classical_value = 0.0;
  /// max(f(z*), classical_value): branches with a nonzero default answer
  /// reproduce classical strategies.
  double hyperbit_value = 0.0;
  double unlimited_value = 0.0;
  double advantage = 0.0;
  bool has_quantum_advantage = false;
};

inline constexpr double kAdvantageTolerance = 1e-9;

/// Exact three-regime solution of a canonical 3x2 game (sign pattern
/// [[+,+],[+,-],[-,-]]). f is concave in z, so z* is an endpoint when f' keeps
/// one sign and otherwise the root of f' located by bisection to 1e-12.
/// Throws kInvalidArgument for non-canonical input.
ThreeTwoAnalysis solve_3x2(const GameMatrix& game);

}  // namespace hbg
