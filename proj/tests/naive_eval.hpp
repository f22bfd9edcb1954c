#pragma once

// Independent slow hand categorizer used as the test oracle. It knows nothing
// about lookup tables: every value is a (category, tiebreak ranks) key built
// straight from the rules, compared lexicographically. Greater compares as
// stronger in the kind's own sense, including the low kinds, so oracle order
// and table index order must agree everywhere.

#include <optional>
#include <span>
#include <vector>

#include "cardroom/cards.hpp"

namespace oracle {

struct Value {
  int category = 0;
  std::vector<int> keys;

  friend auto operator<=>(const Value&, const Value&) = default;
};

// Standard high: high card 0 .. straight flush 8, wheel counts, ace high.
Value standard5(std::span<const cardroom::Card> cards);

// Short deck: ranks six and up, A6789 is the low straight, flush outranks a
// full house.
Value short_deck5(std::span<const cardroom::Card> cards);

// Regular (razz-style) low: ace low, straights and flushes ignored, lower
// high-sense hand = greater value.
Value regular_low5(std::span<const cardroom::Card> cards);

// Eight-or-better low: five distinct ranks, all eight or below, ace low.
// Empty when the cards do not qualify.
std::optional<Value> eight_or_better5(std::span<const cardroom::Card> cards);

// Badugi: best subset with pairwise distinct ranks and suits; bigger subsets
// beat smaller, then lower (ace-low) card sets beat higher.
Value badugi4(std::span<const cardroom::Card> cards);

// Kuhn: single-card rank, J < Q < K.
Value kuhn1(std::span<const cardroom::Card> cards);

}  // namespace oracle
