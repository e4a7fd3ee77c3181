#pragma once

#include <cstdint>
#include <vector>

#include "hbg/solution.hpp"

namespace hbg {

struct AscentOptions {
  int restarts = 32;
  std::uint64_t seed = 0;
  /// Stop a restart once one full x/y sweep raises the objective by less
  /// than this and every x_s is within 1e-8 of its normalized field.
  double tolerance = 1e-10;
  int max_iterations = 10000;
  /// Vector dimension used during ascent; 0 means min(m, n).
  int rank_cap = 0;
  /// Extra stream index mixed into the seed so that independent subproblems
  /// (one per gamma) draw independent starting points.
  std::uint64_t stream = 0;
};

/// Optimal Gram matrix of the hyperbit subproblem
///   max sum_{s,t} C'_st x_s . y_t   over unit x_s, y_t,
/// laid out as [[X^T X, X^T Y], [Y^T X, Y^T Y]].
struct GramSolution {
  Matrix G;
  double objective = 0.0;
  int m = 0;
  int n = 0;
  /// Objective after each sweep of the winning restart.
  std::vector<double> history;
  int winning_restart = 0;
  /// Columns of C' (resp. rows) whose update direction vanished; the vector
  /// was set to e_1 and contributes nothing.
  std::vector<int> zero_direction_cols;
  std::vector<int> zero_direction_rows;
};

/// All 2^N default vectors, each gamma_t in {0, sgn sum_s C_st}, sorted
/// lexicographically.
std::vector<GammaVector> enumerate_gammas(const GameMatrix& game);

/// Seeded multi-start block-coordinate ascent. Each sweep sets every x_s to
/// the normalized sum_t C'_st y_t and then every y_t to the normalized
/// sum_s C'_st x_s; both steps are exact block maximizations, so the
/// objective never decreases.
GramSolution solve_subproblem(const GameMatrix& c_prime,
                              const AscentOptions& options = {});

/// Recovers dimension-min(m, n) vectors from a Gram solution: the smaller
/// of the X^T X / Y^T Y blocks is factorized with pivoted Cholesky and the
/// other side follows from its optimality condition. Throws kNumerical when
/// the recovered vectors disagree with G by more than 1e-6.
HyperbitStrategy extract_vectors(const GramSolution& gram,
                                 const GammaVector& gamma,
                                 const GameMatrix& game);

struct HyperbitOptions {
  AscentOptions ascent;
  int enumeration_cap = 20;
  /// Branches whose upper bound falls below this (minus 1e-9) are skipped.
  /// Pass the classical value to prune; the result is unchanged.
  double lower_bound = -1.0;
};

/// Best hyperbit strategy over all default vectors. A branch whose
/// subproblem throws is skipped and reported in the warnings list.
StrategySolution solve_hyperbit(const GameMatrix& game,
                                const HyperbitOptions& options = {});

/// Pivoted Cholesky of a PSD matrix: returns L (n x n, zero-padded columns
/// past the numerical rank) with A = L L^T. Pivots below `threshold` end the
/// factorization.
Matrix pivoted_cholesky(const Matrix& a, double threshold = 1e-10);

}  // namespace hbg
