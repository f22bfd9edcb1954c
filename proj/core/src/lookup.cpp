#include "cardroom/lookup.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace cardroom {

namespace {

constexpr std::array<std::uint64_t, 13> kPrimes = {2,  3,  5,  7,  11, 13, 17,
                                                   19, 23, 29, 31, 37, 41};

// Rank comparison scale; aces drop to the bottom in the low tables.
int order_value(Rank r, bool ace_low) {
  if (ace_low && r == Rank::kAce) return -1;
  return value_of(r);
}

struct ProtoClass {
  HandCategory category;
  std::vector<Rank> ranks;       // display order
  std::vector<int> key;          // comparison key, same expansion as ranks
  std::vector<bool> suitedness;  // entry variants, dump order
};

// Expands a rank-count map into (display ranks, key) with groups ordered by
// count descending then rank descending, the usual kicker order.
ProtoClass make_class(HandCategory cat, const std::array<int, 13>& count,
                      bool ace_low, std::vector<bool> suitedness) {
  std::vector<std::pair<int, int>> groups;  // (count, order value)
  for (int r = 0; r < kNumRanks; ++r) {
    if (count[r] > 0) groups.emplace_back(count[r], order_value(static_cast<Rank>(r), ace_low));
  }
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a > b; });
  ProtoClass pc{cat, {}, {}, std::move(suitedness)};
  for (const auto& [n, v] : groups) {
    const Rank r = ace_low && v == -1 ? Rank::kAce : static_cast<Rank>(v);
    for (int i = 0; i < n; ++i) {
      pc.ranks.push_back(r);
      pc.key.push_back(v);
    }
  }
  return pc;
}

// All rank multisets of the given group-size pattern over [low_rank, A],
// ascending by tiebreak key. `skip` filters out e.g. straights.
template <typename Skip>
std::vector<ProtoClass> multiset_classes(HandCategory cat,
                                         std::vector<int> pattern,
                                         Rank low_rank, bool ace_low,
                                         std::vector<bool> suitedness,
                                         Skip skip) {
  std::sort(pattern.rbegin(), pattern.rend());
  std::vector<ProtoClass> out;
  std::array<int, 13> count{};
  std::vector<int> chosen(pattern.size(), 0);
  const int lo = value_of(low_rank);

  // choose a distinct rank for every group; equal-sized groups keep their
  // ranks strictly descending so each multiset is produced once
  auto rec = [&](auto&& self, std::size_t g) -> void {
    if (g == pattern.size()) {
      if (!skip(count)) {
        out.push_back(make_class(cat, count, ace_low, suitedness));
      }
      return;
    }
    int hi = kNumRanks - 1;
    if (g > 0 && pattern[g] == pattern[g - 1]) hi = chosen[g - 1] - 1;
    for (int r = lo; r <= hi; ++r) {
      if (count[r] > 0) continue;
      count[r] = pattern[g];
      chosen[g] = r;
      self(self, g + 1);
      count[r] = 0;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(),
            [](const ProtoClass& a, const ProtoClass& b) { return a.key < b.key; });
  return out;
}

std::vector<ProtoClass> multiset_classes(HandCategory cat,
                                         std::vector<int> pattern,
                                         Rank low_rank, bool ace_low,
                                         std::vector<bool> suitedness) {
  return multiset_classes(cat, std::move(pattern), low_rank, ace_low,
                          std::move(suitedness),
                          [](const std::array<int, 13>&) { return false; });
}

// Five-in-a-row rank sets. `wheel_low` is the rank an ace may sit under.
struct StraightSet {
  std::array<int, 13> count{};
  int high;  // comparison value of the straight's top card
};

std::vector<StraightSet> straight_sets(Rank low_rank, Rank wheel_low) {
  std::vector<StraightSet> out;
  // ace-low wheel first (weakest straight)
  StraightSet wheel;
  wheel.count[value_of(Rank::kAce)] = 1;
  for (int r = value_of(wheel_low); r < value_of(wheel_low) + 4; ++r) {
    wheel.count[r] = 1;
  }
  wheel.high = value_of(wheel_low) + 3;
  out.push_back(wheel);
  for (int top = value_of(low_rank) + 4; top < kNumRanks; ++top) {
    StraightSet s;
    for (int r = top - 4; r <= top; ++r) s.count[r] = 1;
    s.high = top;
    out.push_back(s);
  }
  return out;
}

std::vector<ProtoClass> straight_classes(HandCategory cat, Rank low_rank,
                                         Rank wheel_low, bool suited) {
  std::vector<ProtoClass> out;
  for (const StraightSet& s : straight_sets(low_rank, wheel_low)) {
    ProtoClass pc{cat, {}, {s.high}, {suited}};
    for (int r = s.high; r > s.high - 5; --r) {
      // the wheel's fifth card is the ace
      pc.ranks.push_back(r >= value_of(low_rank) ? static_cast<Rank>(r)
                                                 : Rank::kAce);
    }
    out.push_back(pc);
  }
  return out;
}

bool is_straight_count(const std::array<int, 13>& count, Rank low_rank,
                       Rank wheel_low) {
  for (const StraightSet& s : straight_sets(low_rank, wheel_low)) {
    if (s.count == count) return true;
  }
  return false;
}

void append(std::vector<ProtoClass>& dst, std::vector<ProtoClass> src) {
  for (auto& c : src) dst.push_back(std::move(c));
}

std::vector<ProtoClass> standard_like_classes(Rank low_rank, Rank wheel_low,
                                              bool flush_over_full) {
  const std::vector<bool> off{false};
  const std::vector<bool> on{true};
  auto no_straights = [&](const std::array<int, 13>& c) {
    return is_straight_count(c, low_rank, wheel_low);
  };
  std::vector<ProtoClass> out;
  append(out, multiset_classes(HandCategory::kHighCard, {1, 1, 1, 1, 1},
                               low_rank, false, off, no_straights));
  append(out, multiset_classes(HandCategory::kOnePair, {2, 1, 1, 1}, low_rank,
                               false, off));
  append(out,
         multiset_classes(HandCategory::kTwoPair, {2, 2, 1}, low_rank, false, off));
  append(out, multiset_classes(HandCategory::kThreeOfAKind, {3, 1, 1},
                               low_rank, false, off));
  append(out, straight_classes(HandCategory::kStraight, low_rank, wheel_low,
                               false));
  auto flushes = multiset_classes(HandCategory::kFlush, {1, 1, 1, 1, 1},
                                  low_rank, false, on, no_straights);
  auto fulls =
      multiset_classes(HandCategory::kFullHouse, {3, 2}, low_rank, false, off);
  if (flush_over_full) {
    append(out, std::move(fulls));
    append(out, std::move(flushes));
  } else {
    append(out, std::move(flushes));
    append(out, std::move(fulls));
  }
  append(out, multiset_classes(HandCategory::kFourOfAKind, {4, 1}, low_rank,
                               false, off));
  append(out, straight_classes(HandCategory::kStraightFlush, low_rank,
                               wheel_low, true));
  return out;
}

// Regular low: ace low, straights and flushes ignored. Built high-sense
// ascending, then reversed so greater index = better low.
std::vector<ProtoClass> regular_classes() {
  const Rank lo = Rank::kTwo;
  const std::vector<bool> both{false, true};
  const std::vector<bool> off{false};
  std::vector<ProtoClass> out;
  append(out, multiset_classes(HandCategory::kHighCard, {1, 1, 1, 1, 1}, lo,
                               true, both));
  append(out, multiset_classes(HandCategory::kOnePair, {2, 1, 1, 1}, lo, true, off));
  append(out, multiset_classes(HandCategory::kTwoPair, {2, 2, 1}, lo, true, off));
  append(out,
         multiset_classes(HandCategory::kThreeOfAKind, {3, 1, 1}, lo, true, off));
  append(out, multiset_classes(HandCategory::kFullHouse, {3, 2}, lo, true, off));
  append(out, multiset_classes(HandCategory::kFourOfAKind, {4, 1}, lo, true, off));
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<ProtoClass> eight_or_better_classes() {
  auto over_eight = [](const std::array<int, 13>& c) {
    for (int r = value_of(Rank::kNine); r < value_of(Rank::kAce); ++r) {
      if (c[r] > 0) return true;
    }
    return false;
  };
  auto out = multiset_classes(HandCategory::kQualifiedLow, {1, 1, 1, 1, 1},
                              Rank::kTwo, true, {false, true}, over_eight);
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<ProtoClass> badugi_classes() {
  std::vector<ProtoClass> out;
  constexpr HandCategory cats[4] = {HandCategory::kBadugi1,
                                    HandCategory::kBadugi2,
                                    HandCategory::kBadugi3,
                                    HandCategory::kBadugi4};
  for (int k = 1; k <= 4; ++k) {
    auto sub = multiset_classes(cats[k - 1], std::vector<int>(k, 1),
                                Rank::kTwo, true, {k == 1});
    std::reverse(sub.begin(), sub.end());  // within a size, lower is stronger
    append(out, std::move(sub));
  }
  return out;
}

std::vector<ProtoClass> kuhn_classes() {
  std::vector<ProtoClass> out;
  for (Rank r : {Rank::kJack, Rank::kQueen, Rank::kKing}) {
    out.push_back(ProtoClass{HandCategory::kHighCard, {r}, {value_of(r)}, {true}});
  }
  return out;
}

std::uint64_t product_of(const std::vector<Rank>& ranks) {
  std::uint64_t p = 1;
  for (Rank r : ranks) p *= rank_prime(r);
  return p;
}

std::uint64_t mix(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::string_view to_string(LookupKind k) {
  switch (k) {
    case LookupKind::kStandard:
      return "standard";
    case LookupKind::kEightOrBetter:
      return "eight-or-better";
    case LookupKind::kShortDeck:
      return "short-deck";
    case LookupKind::kRegular:
      return "regular";
    case LookupKind::kBadugi:
      return "badugi";
    case LookupKind::kKuhn:
      return "kuhn";
  }
  return "?";
}

std::string_view to_string(HandCategory c) {
  switch (c) {
    case HandCategory::kHighCard:
      return "high-card";
    case HandCategory::kOnePair:
      return "one-pair";
    case HandCategory::kTwoPair:
      return "two-pair";
    case HandCategory::kThreeOfAKind:
      return "three-of-a-kind";
    case HandCategory::kStraight:
      return "straight";
    case HandCategory::kFlush:
      return "flush";
    case HandCategory::kFullHouse:
      return "full-house";
    case HandCategory::kFourOfAKind:
      return "four-of-a-kind";
    case HandCategory::kStraightFlush:
      return "straight-flush";
    case HandCategory::kQualifiedLow:
      return "qualified-low";
    case HandCategory::kBadugi1:
      return "badugi-1";
    case HandCategory::kBadugi2:
      return "badugi-2";
    case HandCategory::kBadugi3:
      return "badugi-3";
    case HandCategory::kBadugi4:
      return "badugi-4";
  }
  return "?";
}

LookupKind lookup_kind_from_string(std::string_view name) {
  for (int i = 0; i < kNumLookupKinds; ++i) {
    const auto k = static_cast<LookupKind>(i);
    if (name == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown lookup kind: \"" + std::string(name) +
                              "\"");
}

std::uint64_t rank_prime(Rank r) { return kPrimes[value_of(r)]; }

std::uint64_t prime_product(std::span<const Card> cards) {
  std::uint64_t p = 1;
  for (Card c : cards) p *= rank_prime(c.rank);
  return p;
}

std::string HandIdentity::canonical_cards() const {
  static constexpr Suit kCycle[4] = {Suit::kClubs, Suit::kDiamonds,
                                     Suit::kHearts, Suit::kSpades};
  std::string out;
  out.reserve(ranks.size() * 2);
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    out.push_back(rank_char(ranks[i]));
    out.push_back(suit_char(suited ? Suit::kSpades : kCycle[i % 4]));
  }
  return out;
}

void Lookup::insert(std::uint64_t key, std::uint32_t ordinal) {
  std::uint64_t slot = mix(key) & mask_;
  while (keys_[slot] != 0) slot = (slot + 1) & mask_;
  keys_[slot] = key;
  slots_[slot] = ordinal;
}

const HandIdentity* Lookup::find(std::uint64_t product, bool suited) const {
  const std::uint64_t key = product << 1 | static_cast<std::uint64_t>(suited);
  std::uint64_t slot = mix(key) & mask_;
  while (keys_[slot] != 0) {
    if (keys_[slot] == key) return &entries_[slots_[slot]];
    slot = (slot + 1) & mask_;
  }
  return nullptr;
}

Lookup build_lookup(LookupKind k) {
  std::vector<ProtoClass> classes;
  Lookup lk;
  lk.kind_ = k;
  switch (k) {
    case LookupKind::kStandard:
      classes = standard_like_classes(Rank::kTwo, Rank::kTwo, false);
      break;
    case LookupKind::kEightOrBetter:
      classes = eight_or_better_classes();
      break;
    case LookupKind::kShortDeck:
      classes = standard_like_classes(Rank::kSix, Rank::kSix, true);
      break;
    case LookupKind::kRegular:
      classes = regular_classes();
      break;
    case LookupKind::kBadugi:
      classes = badugi_classes();
      lk.arity_ = 4;
      break;
    case LookupKind::kKuhn:
      classes = kuhn_classes();
      lk.arity_ = 1;
      break;
  }

  lk.index_count_ = classes.size();
  std::size_t entry_total = 0;
  for (const auto& c : classes) entry_total += c.suitedness.size();
  lk.entries_.reserve(entry_total);

  std::size_t capacity = 16;
  while (capacity < entry_total * 2) capacity <<= 1;
  lk.keys_.assign(capacity, 0);
  lk.slots_.assign(capacity, 0);
  lk.mask_ = capacity - 1;

  std::uint16_t index = 0;
  for (const auto& c : classes) {
    for (bool suited : c.suitedness) {
      const auto ordinal = static_cast<std::uint16_t>(lk.entries_.size());
      lk.entries_.push_back(
          HandIdentity{index, ordinal, c.category, suited, c.ranks});
      lk.insert(product_of(c.ranks) << 1 | static_cast<std::uint64_t>(suited),
                ordinal);
    }
    ++index;
  }
  return lk;
}

const Lookup& Lookup::get(LookupKind k) {
  static const std::array<Lookup, kNumLookupKinds> tables = {
      build_lookup(LookupKind::kStandard),
      build_lookup(LookupKind::kEightOrBetter),
      build_lookup(LookupKind::kShortDeck),
      build_lookup(LookupKind::kRegular),
      build_lookup(LookupKind::kBadugi),
      build_lookup(LookupKind::kKuhn)};
  return tables[static_cast<int>(k)];
}

std::vector<Card> best_badugi_subset(std::span<const Card> cards) {
  const int n = static_cast<int>(cards.size());
  std::vector<Card> best;
  std::vector<int> best_key;
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<Card> sub;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (!(mask & (1 << i))) continue;
      for (const Card& c : sub) {
        if (c.rank == cards[i].rank || c.suit == cards[i].suit) {
          ok = false;
          break;
        }
      }
      if (ok) sub.push_back(cards[i]);
    }
    if (!ok) continue;
    // bigger subset wins; ties prefer lower cards (ace low)
    std::vector<int> key{static_cast<int>(sub.size())};
    std::vector<int> vals;
    for (Card c : sub) vals.push_back(order_value(c.rank, true));
    std::sort(vals.rbegin(), vals.rend());
    for (int v : vals) key.push_back(-v);
    if (key > best_key) {
      best_key = std::move(key);
      best = std::move(sub);
    }
  }
  return best;
}

const HandIdentity& Lookup::evaluate(std::span<const Card> cards) const {
  if (static_cast<int>(cards.size()) != arity_) {
    throw std::invalid_argument(std::string(to_string(kind_)) +
                                " evaluation needs " + std::to_string(arity_) +
                                " cards, got " + std::to_string(cards.size()));
  }
  for (std::size_t i = 0; i < cards.size(); ++i) {
    for (std::size_t j = i + 1; j < cards.size(); ++j) {
      if (cards[i] == cards[j]) {
        throw std::invalid_argument("duplicate card " + to_string(cards[i]));
      }
    }
  }
  for (Card c : cards) {
    if (kind_ == LookupKind::kShortDeck && c.rank < Rank::kSix) {
      throw std::invalid_argument("rank below six in a short-deck hand: " +
                                  to_string(c));
    }
    if (kind_ == LookupKind::kKuhn &&
        (c.rank < Rank::kJack || c.rank > Rank::kKing)) {
      throw std::invalid_argument("rank outside the Kuhn deck: " + to_string(c));
    }
  }

  std::uint64_t product;
  bool suited;
  std::vector<Card> badugi;
  if (kind_ == LookupKind::kBadugi) {
    badugi = best_badugi_subset(cards);
    product = prime_product(badugi);
    suited = badugi.size() == 1;
  } else {
    product = prime_product(cards);
    suited = true;
    for (Card c : cards) suited = suited && c.suit == cards[0].suit;
  }

  const HandIdentity* e = find(product, suited);
  if (e == nullptr) {
    if (kind_ == LookupKind::kEightOrBetter) {
      throw std::invalid_argument("hand does not qualify as an eight-or-better low: " +
                                  format_cards(cards));
    }
    throw std::logic_error("missing lookup entry");  // unreachable
  }
  return *e;
}

std::string dump_ordered_hands(const Lookup& lookup) {
  std::string out;
  for (const HandIdentity& e : lookup.entries()) {
    out += std::to_string(e.index);
    out += '\t';
    out += to_string(e.category);
    out += '\t';
    out += e.canonical_cards();
    out += '\n';
  }
  return out;
}

}  // namespace cardroom
