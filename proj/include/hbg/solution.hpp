#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hbg/game.hpp"

namespace hbg {

enum class Regime { kUnlimited, kClassical, kHyperbit };

std::string_view to_string(Regime regime);

/// Deterministic one-bit classical strategy: Alice announces +1 on rows with
/// p[s] set; Bob answers alpha[t] after +1 and beta[t] after -1.
struct ClassicalStrategy {
  std::vector<bool> p;
  std::vector<int> alpha;
  std::vector<int> beta;

  StrategyMatrix induced() const;
};

/// Default answer per column: 0 means Bob uses the hyperbit, +-1 means he
/// answers that value regardless of communication.
struct GammaVector {
  std::vector<int> values;

  int size() const { return static_cast<int>(values.size()); }
  int zero_count() const;
  /// Nonzero entries must equal sgn(sum_s C_st), with sgn(0) := +1.
  bool consistent_with(const GameMatrix& game) const;
  auto operator<=>(const GammaVector&) const = default;
};

/// Hyperbit strategy S_st = gamma_t + x_s . y_t. Rows of `x` are Alice's unit
/// vectors; rows of `y` are Bob's vectors, zero wherever gamma_t != 0.
struct HyperbitStrategy {
  GammaVector gamma;
  Matrix x;
  Matrix y;
  int d = 0;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;

  StrategyMatrix induced() const;
};

struct HyperbitDetails {
  HyperbitStrategy strategy;
  std::uint64_t seed = 0;
  int restarts = 0;
  /// Every gamma whose branch value is within 1e-9 of the optimum.
  std::vector<GammaVector> near_optimal;
  std::vector<std::string> warnings;
};

struct StrategySolution {
  Regime regime = Regime::kUnlimited;
  double value = 0.0;
  StrategyMatrix S{Matrix()};
  std::optional<ClassicalStrategy> classical;
  std::optional<HyperbitDetails> hyperbit;
};

}  // namespace hbg
