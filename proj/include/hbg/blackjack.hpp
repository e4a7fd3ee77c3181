#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "hbg/game.hpp"

namespace hbg::blackjack {

/// Ten card types; kTen aggregates 10, J, Q, K.
enum class Rank : int { kAce = 0, kTwo, kThree, kFour, kFive, kSix, kSeven, kEight, kNine, kTen };

inline constexpr int kNumRanks = 10;
inline constexpr std::array<Rank, kNumRanks> kAllRanks{
    Rank::kAce, Rank::kTwo, Rank::kThree, Rank::kFour, Rank::kFive,
    Rank::kSix, Rank::kSeven, Rank::kEight, Rank::kNine, Rank::kTen};

int index_of(Rank r);
/// Point value with the ace counted as 1.
int point_value(Rank r);
/// Infinite-deck draw probability: 4/13 for ten-valued cards, else 1/13.
double draw_probability(Rank r);
/// Accepts A, 2..9, 10, T, J, Q, K.
Rank parse_rank(std::string_view text);
/// "A", "2".."9", "T".
std::string rank_symbol(Rank r);

struct HandState {
  int total = 0;
  /// An ace currently counts as 11.
  bool soft = false;

  bool bust() const { return total > 21; }
  bool operator==(const HandState&) const = default;
};

HandState add_card(HandState hand, Rank card);
HandState hand_of(Rank first);
HandState hand_of(Rank first, Rank second);

/// Dealer stands on hard 17+ and soft 18+, so hits soft 17.
bool dealer_stands(HandState hand);

/// Final-total distribution, index 0..4 for 17..21 and 5 for bust.
using DealerDistribution = std::array<double, 6>;
inline constexpr int kBustIndex = 5;

enum class Action { kStand, kHit };

struct Continuation {
  double value = 0.0;
  Action action = Action::kStand;
};

/// Infinite-deck dealer distributions and Bob's optimal continuation policy,
/// one table per dealer upcard. Immutable after construction.
class Tables {
 public:
  static constexpr int kMaxTotal = 31;

  Tables();

  /// Process-wide instance, built on first use.
  static const Tables& standard();

  /// Distribution starting from the upcard alone.
  const DealerDistribution& dealer_distribution(Rank upcard) const;
  /// Distribution starting from an arbitrary dealer hand.
  DealerDistribution dealer_distribution_from(HandState hand) const;

  /// +1 win, 0 tie, -1 loss when Bob stands on `hand`; -1 when bust.
  double stand_value(HandState hand, Rank dealer_upcard) const;
  /// max(stand, E[continue after one infinite-deck card]); -1 when bust.
  Continuation continuation(HandState hand, Rank dealer_upcard) const;

  /// Raw table access for serialization: [upcard][total][soft].
  const std::array<DealerDistribution, kNumRanks>& dealer_tables() const {
    return dealer_;
  }
  const std::vector<double>& continuation_values() const { return cont_value_; }
  const std::vector<int>& continuation_actions() const { return cont_hit_; }

  /// Rebuilds tables from serialized arrays; throws kSchema on shape errors.
  static Tables from_arrays(const std::array<DealerDistribution, kNumRanks>& dealer,
                            std::vector<double> values, std::vector<int> hits);

 private:
  static std::size_t slot(int upcard, int total, bool soft);

  std::array<DealerDistribution, kNumRanks> dealer_{};
  std::vector<double> cont_value_;
  std::vector<int> cont_hit_;
};

DealerDistribution dealer_distribution(Rank upcard);
double stand_value(HandState hand, Rank dealer_upcard);
Continuation continuation_value(HandState hand, Rank dealer_upcard);

/// Shoe contents after the face-up deal, counted per rank.
using ShoeCounts = std::array<int, kNumRanks>;

ShoeCounts parse_shoe(const std::vector<std::string>& cards);
int shoe_size(const ShoeCounts& shoe);
/// Sorted rank string, e.g. "AA8T".
std::string shoe_string(const ShoeCounts& shoe);

struct RoundConfig {
  Rank bob_upcard = Rank::kAce;
  Rank dealer_upcard = Rank::kAce;
  ShoeCounts shoe{};
};

struct PayoffTable {
  /// Expected payoff if Bob hits (first card from the finite shoe).
  Matrix v_plus;
  /// Expected payoff if Bob stands.
  Matrix v_minus;
  /// Probability that Alice holds s and Bob holds t.
  Matrix prior;
};

struct BuiltGame {
  GameMatrix game;
  PayoffTable payoffs;
};

/// Game for one round: rows/columns are the distinct ranks in the shoe,
/// prior is the ordered draw-without-replacement probability, and
/// C_st = prior * (V_hit - V_stand). Bob's first hit card comes from the shoe
/// minus {s, t}; everything after it is infinite-deck. Pairs with zero prior
/// carry V_hit = V_stand. Throws kInvalidArgument for shoes under 3 cards.
BuiltGame build_game(const RoundConfig& config,
                     const Tables& tables = Tables::standard());

/// Multinomial probability of drawing exactly this multiset from an
/// infinite deck.
double shoe_weight(const ShoeCounts& shoe);

/// Every multiset of `size` cards over the ten ranks, in lexicographic order
/// of sorted rank strings (ace first).
std::vector<ShoeCounts> enumerate_shoes(int size);

}  // namespace hbg::blackjack
