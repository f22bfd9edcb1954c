#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cardroom/cards.hpp"

namespace cardroom {

/// The six table families. Entry counts are fixed: standard 7462,
/// eight-or-better 112, short-deck 1404, regular 7462, badugi 1092, kuhn 3.
enum class LookupKind {
  kStandard,
  kEightOrBetter,
  kShortDeck,
  kRegular,
  kBadugi,
  kKuhn,
};

inline constexpr int kNumLookupKinds = 6;

enum class HandCategory {
  kHighCard,
  kOnePair,
  kTwoPair,
  kThreeOfAKind,
  kStraight,
  kFlush,
  kFullHouse,
  kFourOfAKind,
  kStraightFlush,
  kQualifiedLow,
  kBadugi1,
  kBadugi2,
  kBadugi3,
  kBadugi4,
};

std::string_view to_string(LookupKind k);
std::string_view to_string(HandCategory c);

/// Parses "standard", "eight-or-better", "short-deck", "regular", "badugi"
/// or "kuhn". Throws std::invalid_argument otherwise.
LookupKind lookup_kind_from_string(std::string_view name);

/// The first thirteen primes assigned to ranks in ascending order:
/// deuce -> 2, trey -> 3, ... king -> 37, ace -> 41.
std::uint64_t rank_prime(Rank r);

/// Product of the cards' rank primes. Order-independent and, by unique
/// factorization, injective over rank multisets.
std::uint64_t prime_product(std::span<const Card> cards);

/// One table entry: a rank multiset plus suitedness. `index` is the strength
/// class, contiguous from 0 with greater = stronger in the table's own sense
/// (low tables are reversed at build time). Where suits cannot matter
/// (regular, eight-or-better) the suited and unsuited twins of a rank set are
/// distinct entries sharing one index.
struct HandIdentity {
  std::uint16_t index;
  std::uint16_t ordinal;  // position in the weakest-to-strongest entry order
  HandCategory category;
  bool suited;
  std::vector<Rank> ranks;  // canonical tiebreak order

  /// Deterministic card rendering: all spades when suited, otherwise suits
  /// cycle c, d, h, s by position.
  std::string canonical_cards() const;

  bool operator==(const HandIdentity&) const = default;
};

/// An immutable perfect-hash table from (prime product, suitedness) to hand
/// identities. Build once via build_lookup or the shared get() cache; safe
/// for concurrent reads afterwards.
class Lookup {
 public:
  LookupKind kind() const { return kind_; }

  /// Number of cards evaluate() expects: 5, except badugi 4 and kuhn 1.
  int arity() const { return arity_; }

  std::size_t entry_count() const { return entries_.size(); }

  /// Distinct strength classes (< entry_count for the suit-blind low tables).
  std::size_t index_count() const { return index_count_; }

  const std::vector<HandIdentity>& entries() const { return entries_; }

  /// Validates arity, duplicates and deck membership, then hashes. Badugi
  /// inputs are reduced to their best badugi subset first. A non-qualifying
  /// eight-or-better hand is an error, not a weak hand.
  const HandIdentity& evaluate(std::span<const Card> cards) const;

  /// Raw probe without validation; nullptr when the key has no entry.
  const HandIdentity* find(std::uint64_t product, bool suited) const;

  static const Lookup& get(LookupKind k);

 private:
  friend Lookup build_lookup(LookupKind);
  Lookup() = default;

  void insert(std::uint64_t key, std::uint32_t ordinal);

  LookupKind kind_ = LookupKind::kStandard;
  int arity_ = 5;
  std::size_t index_count_ = 0;
  std::vector<HandIdentity> entries_;
  std::vector<std::uint64_t> keys_;   // open addressing; 0 marks an empty slot
  std::vector<std::uint32_t> slots_;  // parallel ordinals
  std::uint64_t mask_ = 0;
};

Lookup build_lookup(LookupKind k);

/// Best badugi subset of the cards: pairwise distinct ranks and suits,
/// largest first, then lowest with aces low.
std::vector<Card> best_badugi_subset(std::span<const Card> cards);

/// One line per entry, weakest to strongest:
/// "<index>\t<category>\t<canonical cards>\n". Byte-identical across runs
/// and platforms, suitable for checksumming.
std::string dump_ordered_hands(const Lookup& lookup);

}  // namespace cardroom
