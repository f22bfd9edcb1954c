#include "naive_eval.hpp"

#include <algorithm>
#include <array>
#include <cassert>

namespace oracle {

using cardroom::Card;
using cardroom::Rank;
using cardroom::value_of;

namespace {

enum Category {
  kHighCard = 0,
  kOnePair,
  kTwoPair,
  kTrips,
  kStraight,
  kFlush,
  kFullHouse,
  kQuads,
  kStraightFlush,
};

// rank value with the ace moved to the bottom
int ace_low(int r) { return r == value_of(Rank::kAce) ? -1 : r; }

// Tiebreak vector: ranks repeated-first, then descending. rank_value maps a
// raw rank to the comparison scale (identity for high, ace_low for low).
template <typename Map>
std::vector<int> group_key(std::span<const Card> cards, Map rank_value) {
  std::array<int, 13> count{};
  for (Card c : cards) count[value_of(c.rank)]++;
  std::vector<std::pair<int, int>> groups;  // (count, mapped rank)
  for (int r = 0; r < 13; ++r) {
    if (count[r] > 0) groups.emplace_back(count[r], rank_value(r));
  }
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a > b; });
  std::vector<int> key;
  for (const auto& [n, r] : groups) {
    for (int i = 0; i < n; ++i) key.push_back(r);
  }
  return key;
}

int pattern_category(std::span<const Card> cards) {
  std::array<int, 13> count{};
  for (Card c : cards) count[value_of(c.rank)]++;
  std::array<int, 5> of{};  // of[n] = number of ranks appearing n times
  for (int r = 0; r < 13; ++r) of[count[r]]++;
  if (of[4] == 1) return kQuads;
  if (of[3] == 1 && of[2] == 1) return kFullHouse;
  if (of[3] == 1) return kTrips;
  if (of[2] == 2) return kTwoPair;
  if (of[2] == 1) return kOnePair;
  return kHighCard;
}

bool all_same_suit(std::span<const Card> cards) {
  for (Card c : cards) {
    if (c.suit != cards[0].suit) return false;
  }
  return true;
}

// Returns the straight's high rank value, or -1. `wheel_low` is the rank that
// the ace may sit under (Two normally, Six in the short deck).
int straight_high(std::span<const Card> cards, Rank wheel_low) {
  std::array<bool, 13> has{};
  for (Card c : cards) {
    if (has[value_of(c.rank)]) return -1;
    has[value_of(c.rank)] = true;
  }
  int lo = 13, hi = -1;
  for (int r = 0; r < 13; ++r) {
    if (has[r]) {
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
  }
  if (hi - lo == 4) return hi;
  // ace-low variant: A + wheel_low..wheel_low+3
  if (has[value_of(Rank::kAce)] && lo == value_of(wheel_low) &&
      hi - lo == 3 && hi == value_of(wheel_low) + 3) {
    return hi;
  }
  return -1;
}

Value high_value(std::span<const Card> cards, Rank wheel_low,
                 bool flush_over_full) {
  assert(cards.size() == 5);
  const int cat = pattern_category(cards);
  const bool flush = all_same_suit(cards);
  const int run_high = cat == kHighCard ? straight_high(cards, wheel_low) : -1;
  auto identity = [](int r) { return r; };
  if (run_high >= 0) {
    return Value{flush ? kStraightFlush : kStraight, {run_high}};
  }
  int adjusted = cat;
  if (flush) adjusted = kFlush;
  if (flush_over_full) {
    // short-deck order swap: ... straight < full house < flush < quads ...
    if (adjusted == kFlush) {
      adjusted = kFullHouse;
    } else if (adjusted == kFullHouse) {
      adjusted = kFlush;
    }
  }
  return Value{adjusted, group_key(cards, identity)};
}

}  // namespace

Value standard5(std::span<const Card> cards) {
  return high_value(cards, Rank::kTwo, false);
}

Value short_deck5(std::span<const Card> cards) {
  return high_value(cards, Rank::kSix, true);
}

Value regular_low5(std::span<const Card> cards) {
  assert(cards.size() == 5);
  // high-sense value with ace low and no straights/flushes, then negated
  Value high{pattern_category(cards), group_key(cards, ace_low)};
  Value low{-high.category, {}};
  for (int k : high.keys) low.keys.push_back(-k);
  return low;
}

std::optional<Value> eight_or_better5(std::span<const Card> cards) {
  assert(cards.size() == 5);
  std::array<bool, 13> has{};
  for (Card c : cards) {
    const int r = value_of(c.rank);
    if (r > value_of(Rank::kEight) && c.rank != Rank::kAce) return std::nullopt;
    if (has[r]) return std::nullopt;  // paired hands never qualify
    has[r] = true;
  }
  Value v;
  std::vector<int> ranks;
  for (Card c : cards) ranks.push_back(ace_low(value_of(c.rank)));
  std::sort(ranks.rbegin(), ranks.rend());
  for (int r : ranks) v.keys.push_back(-r);
  return v;
}

Value badugi4(std::span<const Card> cards) {
  assert(cards.size() <= 4);
  const int n = static_cast<int>(cards.size());
  Value best{0, {}};
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<Card> sub;
    for (int i = 0; i < n; ++i) {
      if (mask & (1 << i)) sub.push_back(cards[i]);
    }
    bool ok = true;
    for (std::size_t i = 0; i < sub.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < sub.size(); ++j) {
        if (sub[i].rank == sub[j].rank || sub[i].suit == sub[j].suit) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    Value v{static_cast<int>(sub.size()), {}};
    std::vector<int> ranks;
    for (Card c : sub) ranks.push_back(ace_low(value_of(c.rank)));
    std::sort(ranks.rbegin(), ranks.rend());
    for (int r : ranks) v.keys.push_back(-r);
    if (v > best) best = v;
  }
  return best;
}

Value kuhn1(std::span<const Card> cards) {
  assert(cards.size() == 1);
  return Value{0, {value_of(cards[0].rank)}};
}

}  // namespace oracle
