#pragma once

#include "hbg/solution.hpp"

namespace hbg {

inline constexpr int kDefaultEnumerationCap = 20;

/// S* = sgn C (sgn 0 := +1), value sum |C_st|.
StrategySolution solve_unlimited(const GameMatrix& game);

/// Exact single-bit optimum. Enumerates all 2^M deterministic announcement
/// maps; Bob's best response to each is the sign of the column sums over the
/// rows that announced +1 (alpha) and -1 (beta). The lexicographically
/// smallest optimal p is returned.
StrategySolution solve_classical(const GameMatrix& game,
                                 int enumeration_cap = kDefaultEnumerationCap);

}  // namespace hbg
