#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hbg/blackjack.hpp"
#include "hbg/regimes.hpp"

namespace hbg {

/// One-parameter family C(t) = A + B t sampled on [t_min, t_max].
struct SweepSpec {
  Matrix a;
  Matrix b;
  double t_min = 0.0;
  double t_max = 0.0;
  double step = 1.0;

  /// Throws kInvalidArgument / kDimensionMismatch.
  void validate() const;
  /// Grid t_min + i * step, with t_max appended when the grid misses it.
  std::vector<double> grid() const;
  GameMatrix at(double t) const;
};

struct SweepPoint {
  double t = 0.0;
  double unlimited = 0.0;
  double classical = 0.0;
  double hyperbit = 0.0;
  /// Empty unless the solvers failed at this point; values are then NaN.
  std::string error;
};

/// Regime options tuned for value-only evaluation.
RegimeOptions value_only_options(std::uint64_t seed = 0, int restarts = 32);

std::vector<SweepPoint> sweep(const SweepSpec& spec,
                              const RegimeOptions& options = value_only_options(),
                              int workers = 1);

enum class BoundaryKind { kSignFlip, kSmallestEntrySwitch, kHyperbitOnset, kHyperbitOffset };

std::string_view to_string(BoundaryKind kind);

struct Boundary {
  double t = 0.0;
  BoundaryKind kind = BoundaryKind::kSignFlip;
};

/// Locates regime boundaries by bisecting between grid points where one of
/// three indicators changes: the sign matrix, the classical structure (the
/// minimizing entry of a 3x2 game, else the optimal announcement map), and
/// whether I_H exceeds I_C. Boundaries are refined to `width` and sorted by t.
/// Structure and advantage changes that coincide with a sign flip (within
/// 1e-6) are reported only as the sign flip.
std::vector<Boundary> detect_boundaries(const SweepSpec& spec, double width = 1e-10,
                                        const RegimeOptions& options = value_only_options());

using blackjack::Rank;
using UpcardPair = std::pair<Rank, Rank>;  // (bob, dealer)

struct AdvantageRecord {
  blackjack::RoundConfig config;
  double unlimited = 0.0;
  double classical = 0.0;
  double hyperbit = 0.0;
  double advantage = 0.0;
  int rows = 0;
  int cols = 0;
  double shoe_weight = 0.0;

  int shoe_size() const { return blackjack::shoe_size(config.shoe); }
  /// "k:BOB:DEALER:SHOE", e.g. "4:9:T:AA8T".
  std::string key() const;
};

/// Advantage descending, then key ascending.
bool record_order(const AdvantageRecord& lhs, const AdvantageRecord& rhs);

struct SearchOptions {
  int shoe_size = 4;
  /// Empty means all ten ranks.
  std::vector<Rank> bob_upcards;
  std::vector<Rank> dealer_upcards;
  double threshold = 1e-6;
  int workers = 1;
  /// JSON-lines file; existing entries are replayed and skipped. Empty
  /// disables checkpointing.
  std::string checkpoint_path;
  RegimeOptions regime = value_only_options();
  /// Called after each completed multiset with (done, total).
  std::function<void(std::size_t, std::size_t)> progress;
};

struct Catalog {
  int shoe_size = 0;
  double threshold = 0.0;
  /// Upcard pairs that were searched exhaustively.
  std::set<UpcardPair> strata;
  std::vector<AdvantageRecord> records;
  std::size_t configurations = 0;
  std::vector<std::string> warnings;
};

/// Exhaustive search over every multiset of `shoe_size` cards crossed with
/// the requested upcard pairs. Output is independent of worker count.
Catalog search_shoes(const SearchOptions& options);

/// Probability of an upcard pair under independent infinite-deck draws.
double upcard_prior(const UpcardPair& pair);

/// sum over records of shoe_weight * upcard prior * advantage. Throws
/// kInvalidArgument naming missing strata unless all 100 upcard pairs were
/// searched for size k.
double expected_advantage(int k, const Catalog& catalog);

}  // namespace hbg
