#pragma once

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

#include "hbg/error.hpp"

namespace hbg {

using Matrix = Eigen::MatrixXd;
using SignEntries = Eigen::MatrixXi;

/// Coefficient matrix of a two-party one-bit game. Entry (s, t) is the
/// prior-weighted payoff bias toward Bob answering +1 when Alice holds s and
/// Bob holds t. Rows are Alice's private inputs, columns Bob's.
class GameMatrix {
 public:
  /// Empty label lists default to "s0".."s{M-1}" and "t0".."t{N-1}".
  explicit GameMatrix(Matrix entries, std::vector<std::string> row_labels = {},
                      std::vector<std::string> col_labels = {});

  const Matrix& entries() const { return entries_; }
  int rows() const { return static_cast<int>(entries_.rows()); }
  int cols() const { return static_cast<int>(entries_.cols()); }
  double operator()(int s, int t) const { return entries_(s, t); }

  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

 private:
  Matrix entries_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

/// Expected value of Bob's +-1 answer per (s, t). Entries lie in [-1, 1]; a
/// slack of kStrategySlack absorbs rounding from inner products of unit
/// vectors.
class StrategyMatrix {
 public:
  static constexpr double kStrategySlack = 1e-9;

  explicit StrategyMatrix(Matrix entries);

  const Matrix& entries() const { return entries_; }
  int rows() const { return static_cast<int>(entries_.rows()); }
  int cols() const { return static_cast<int>(entries_.cols()); }
  double operator()(int s, int t) const { return entries_(s, t); }

 private:
  Matrix entries_;
};

/// Entrywise sign of a coefficient matrix, values in {-1, 0, +1}.
class SignMatrix {
 public:
  explicit SignMatrix(const GameMatrix& game);

  const SignEntries& entries() const { return entries_; }
  int operator()(int s, int t) const { return entries_(s, t); }
  int distinct_rows() const;
  bool column_homogeneous(int t) const;

 private:
  SignEntries entries_;
};

/// Relabeling of a game: transformed entry (i, j) is
///   neg_j * C(row_permutation[i], col_permutation[j])
/// where neg_j = -1 if col_negations[j]. Columns listed in dropped_columns are
/// absent from the transformed game; Bob answers them with dropped_signs.
struct GameTransform {
  int original_rows = 0;
  int original_cols = 0;
  std::vector<int> row_permutation;
  std::vector<int> col_permutation;
  std::vector<bool> col_negations;
  std::vector<int> dropped_columns;
  std::vector<int> dropped_signs;
  /// Sum of |C| over dropped columns, added back to recover full game values.
  double dropped_value = 0.0;

  static GameTransform identity(int rows, int cols);

  GameMatrix apply(const GameMatrix& game) const;
  StrategyMatrix apply(const StrategyMatrix& strategy) const;
  /// Maps a strategy for the transformed game back onto the original game.
  StrategyMatrix restore(const StrategyMatrix& transformed) const;
  /// Transform taking the transformed game back to the original. Only defined
  /// when nothing was dropped.
  GameTransform inverse() const;
};

/// <C, S> = sum_{s,t} C_st S_st.
double game_value(const GameMatrix& game, const StrategyMatrix& strategy);

double absolute_sum(const GameMatrix& game);

struct Reduction {
  /// nullopt when every column was homogeneous.
  std::optional<GameMatrix> game;
  GameTransform transform;
};

/// Drops every column whose nonzero entries share one sign (all-zero columns
/// included). Those columns are won outright in every regime.
Reduction reduce_homogeneous_columns(const GameMatrix& game);

struct CanonicalForm {
  GameMatrix game;
  GameTransform transform;
};

/// Target sign pattern for 3x2 analysis: [[+,+],[+,-],[-,-]].
bool is_canonical_3x2(const GameMatrix& game);

/// Permutes rows/columns and negates columns so that the sign matrix becomes
/// [[+,+],[+,-],[-,-]]. The lexicographically smallest (rows, cols, negations)
/// triple is chosen. Throws ErrorCode::kTrivialGame when the pattern has two
/// or fewer distinct rows or a homogeneous column, and kInvalidArgument for
/// zero entries or a non-3x2 shape.
CanonicalForm canonicalize_3x2(const GameMatrix& game);

}  // namespace hbg
