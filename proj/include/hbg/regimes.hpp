#pragma once

#include <optional>
#include <string>

#include "hbg/analytic32.hpp"
#include "hbg/classical.hpp"
#include "hbg/hyperbit.hpp"

namespace hbg {

struct RegimeOptions {
  HyperbitOptions hyperbit;
  int classical_cap = kDefaultEnumerationCap;
  /// When false, the hyperbit regime may be settled by a value shortcut
  /// (analytic 3x2, or I_C = I_U) without producing explicit vectors.
  bool want_strategies = true;
};

/// How the hyperbit value was obtained.
enum class HyperbitMethod {
  /// Every column was homogeneous; all regimes coincide.
  kTrivial,
  /// Classical already reaches the unlimited value.
  kClassicalSaturates,
  /// Reduced game is a 3x2 with three distinct sign rows.
  kAnalytic3x2,
  /// Gamma enumeration with see-saw ascent.
  kAscent,
};

std::string_view to_string(HyperbitMethod method);

struct RegimeReport {
  StrategySolution unlimited;
  StrategySolution classical;
  /// S may be empty (0 x 0) when want_strategies is false and a shortcut
  /// fixed the value.
  StrategySolution hyperbit;
  HyperbitMethod method = HyperbitMethod::kAscent;
  /// Set for kAnalytic3x2; describes the canonical form of the reduced game.
  std::optional<ThreeTwoAnalysis> analysis;
  /// Value reached by the ascent when it ran, for cross-checking.
  std::optional<double> ascent_value;
  int dropped_columns = 0;

  double advantage() const { return hyperbit.value - classical.value; }
};

/// Embeds a single-bit strategy as a hyperbit strategy with d = 1: columns
/// where alpha = beta become default answers, the rest use x_s = +-1 by p_s
/// and y_t = (alpha_t - beta_t) / 2.
HyperbitStrategy hyperbit_from_classical(const ClassicalStrategy& strategy,
                                         const GameMatrix& game);

/// Solves all three regimes, reducing homogeneous columns first. Values are
/// reported for the original game.
RegimeReport solve_all_regimes(const GameMatrix& game,
                               const RegimeOptions& options = {});

}  // namespace hbg
