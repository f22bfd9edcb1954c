#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cardroom/cards.hpp"
#include "cardroom/lookup.hpp"

namespace cardroom {

/// How a hand type builds its best hand from a game: which lookup, how many
/// cards are evaluated, and how many of them may come from the hole. The
/// qualifier of qualified types lives in the lookup itself (a non-qualifying
/// selection simply has no entry). `reversed` flips the index sense for
/// deuce-to-seven types, which share the standard table.
struct HandTypeSpec {
  std::string name;
  LookupKind lookup;
  int arity;
  int hole_min;  // cards that must come from the hole
  int hole_max;  // cards that may come from the hole
  bool reversed;

  bool operator==(const HandTypeSpec&) const = default;
};

/// Built-in hand types:
///   standard-high, standard-low, greek-holdem, omaha-holdem,
///   eight-or-better-low, omaha-eight-or-better-low, short-deck-holdem,
///   regular-low, omaha-regular-low, badugi, kuhn
std::span<const HandTypeSpec> hand_type_catalog();

/// Catalog lookup by name; a few aliases are accepted (omaha, texas, razz,
/// short-deck, deuce-to-seven, eight-or-better). Throws on unknown names.
const HandTypeSpec& hand_type(std::string_view name);

/// An evaluated, comparable hand. Hands of the same type compare by strength;
/// comparing across types throws std::invalid_argument.
class Hand {
 public:
  Hand(const HandTypeSpec& type, std::vector<Card> cards);

  const HandTypeSpec& type() const { return type_; }
  const std::vector<Card>& cards() const { return cards_; }
  const HandIdentity& identity() const { return *identity_; }

  friend std::strong_ordering compare_hands(const Hand& a, const Hand& b);
  friend bool operator==(const Hand& a, const Hand& b) {
    return compare_hands(a, b) == std::strong_ordering::equal;
  }
  friend bool operator<(const Hand& a, const Hand& b) {
    return compare_hands(a, b) == std::strong_ordering::less;
  }
  friend bool operator>(const Hand& a, const Hand& b) {
    return compare_hands(a, b) == std::strong_ordering::greater;
  }
  friend bool operator<=(const Hand& a, const Hand& b) { return !(a > b); }
  friend bool operator>=(const Hand& a, const Hand& b) { return !(a < b); }

 private:
  HandTypeSpec type_;
  std::vector<Card> cards_;
  const HandIdentity* identity_;
};

/// Evaluates exactly the given cards as a hand of the given type.
Hand hand_from_cards(const HandTypeSpec& type, std::span<const Card> cards);

/// Strongest hand over all selections that obey the type's hole/board rule;
/// empty when a qualified type has no qualifying selection. Throws on
/// incompatible counts or duplicate cards across hole and board.
std::optional<Hand> hand_from_game(const HandTypeSpec& type,
                                   std::span<const Card> hole,
                                   std::span<const Card> board);

std::strong_ordering compare_hands(const Hand& a, const Hand& b);

}  // namespace cardroom
