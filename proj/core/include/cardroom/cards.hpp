#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cardroom {

enum class Rank : std::uint8_t {
  kTwo,
  kThree,
  kFour,
  kFive,
  kSix,
  kSeven,
  kEight,
  kNine,
  kTen,
  kJack,
  kQueen,
  kKing,
  kAce,
};

enum class Suit : std::uint8_t { kClubs, kDiamonds, kHearts, kSpades };

inline constexpr int kNumRanks = 13;
inline constexpr int kNumSuits = 4;
inline constexpr int kNumCards = 52;

constexpr int value_of(Rank r) { return static_cast<int>(r); }
constexpr int value_of(Suit s) { return static_cast<int>(s); }

char rank_char(Rank r);
char suit_char(Suit s);

/// A playing card. Value type; equality and ordering are by (rank, suit).
struct Card {
  Rank rank;
  Suit suit;

  auto operator<=>(const Card&) const = default;

  /// Dense id in [0, 52): rank-major, suit order c, d, h, s.
  constexpr int index() const {
    return value_of(rank) * kNumSuits + value_of(suit);
  }
};

std::string to_string(Card c);

/// Renders cards as concatenated two-character codes, e.g. "Ac2d".
/// Ten is always "T", never "10".
std::string format_cards(std::span<const Card> cards);

/// Inverse of format_cards. Rank characters are accepted case-insensitively,
/// suit characters must be lowercase. Throws std::invalid_argument on odd
/// length, unknown rank or suit characters, or a duplicate card.
std::vector<Card> parse_cards(std::string_view text);

enum class DeckKind { kStandard52, kShortDeck36, kKuhn3 };

std::string_view to_string(DeckKind k);

int deck_size(DeckKind k);

/// All cards of the deck in canonical order: ascending rank, suits in
/// c, d, h, s order within a rank. The short deck drops ranks below six.
/// The Kuhn deck is Js, Qs, Ks (spades fixed so the deck is deterministic;
/// only ranks carry strength there).
std::vector<Card> create_deck(DeckKind k);

/// Deterministic Fisher-Yates shuffle: positions are swapped from the back
/// using j = mt19937_64(seed) % (i + 1). mt19937_64 output is pinned by the
/// standard, so the permutation is identical on every platform.
std::vector<Card> shuffle_deck(std::vector<Card> deck, std::uint64_t seed);

}  // namespace cardroom
