#include "cardroom/hands.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace cardroom {

namespace {

const std::array<HandTypeSpec, 11>& catalog() {
  static const std::array<HandTypeSpec, 11> types = {{
      {"standard-high", LookupKind::kStandard, 5, 0, 5, false},
      {"standard-low", LookupKind::kStandard, 5, 0, 5, true},
      {"greek-holdem", LookupKind::kStandard, 5, 2, 2, false},
      {"omaha-holdem", LookupKind::kStandard, 5, 2, 2, false},
      {"eight-or-better-low", LookupKind::kEightOrBetter, 5, 0, 5, false},
      {"omaha-eight-or-better-low", LookupKind::kEightOrBetter, 5, 2, 2, false},
      {"short-deck-holdem", LookupKind::kShortDeck, 5, 0, 5, false},
      {"regular-low", LookupKind::kRegular, 5, 0, 5, false},
      {"omaha-regular-low", LookupKind::kRegular, 5, 2, 2, false},
      {"badugi", LookupKind::kBadugi, 4, 0, 4, false},
      {"kuhn", LookupKind::kKuhn, 1, 0, 1, false},
  }};
  return types;
}

struct Alias {
  std::string_view alias;
  std::string_view target;
};

constexpr Alias kAliases[] = {
    {"texas", "standard-high"},
    {"texas-holdem", "standard-high"},
    {"standard", "standard-high"},
    {"omaha", "omaha-holdem"},
    {"greek", "greek-holdem"},
    {"razz", "regular-low"},
    {"regular", "regular-low"},
    {"short-deck", "short-deck-holdem"},
    {"deuce-to-seven", "standard-low"},
    {"eight-or-better", "eight-or-better-low"},
    {"omaha-eight-or-better", "omaha-eight-or-better-low"},
    {"kuhn-poker", "kuhn"},
};

// true iff `a` is stronger than `b` under the type's sense
bool stronger(const HandTypeSpec& t, const HandIdentity& a,
              const HandIdentity& b) {
  return t.reversed ? a.index < b.index : a.index > b.index;
}

void check_game_cards(const HandTypeSpec& type, std::span<const Card> hole,
                      std::span<const Card> board) {
  for (Card h : hole) {
    for (Card b : board) {
      if (h == b) {
        throw std::invalid_argument("card " + to_string(h) +
                                    " appears in both hole and board");
      }
    }
  }
  std::vector<Card> all(hole.begin(), hole.end());
  all.insert(all.end(), board.begin(), board.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (type.lookup == LookupKind::kShortDeck && all[i].rank < Rank::kSix) {
      throw std::invalid_argument("rank below six in a short-deck game: " +
                                  to_string(all[i]));
    }
    if (type.lookup == LookupKind::kKuhn &&
        (all[i].rank < Rank::kJack || all[i].rank > Rank::kKing)) {
      throw std::invalid_argument("rank outside the Kuhn deck: " +
                                  to_string(all[i]));
    }
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[i] == all[j]) {
        throw std::invalid_argument("duplicate card " + to_string(all[i]));
      }
    }
  }
}

template <typename Fn>
void for_each_combination(int n, int k, Fn&& fn) {
  if (k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

}  // namespace

std::span<const HandTypeSpec> hand_type_catalog() { return catalog(); }

const HandTypeSpec& hand_type(std::string_view name) {
  std::string_view resolved = name;
  for (const Alias& a : kAliases) {
    if (a.alias == name) {
      resolved = a.target;
      break;
    }
  }
  for (const HandTypeSpec& t : catalog()) {
    if (t.name == resolved) return t;
  }
  throw std::invalid_argument("unknown hand type: \"" + std::string(name) +
                              "\"");
}

Hand::Hand(const HandTypeSpec& type, std::vector<Card> cards)
    : type_(type), cards_(std::move(cards)) {
  identity_ = &Lookup::get(type_.lookup).evaluate(cards_);
}

Hand hand_from_cards(const HandTypeSpec& type, std::span<const Card> cards) {
  return Hand(type, std::vector<Card>(cards.begin(), cards.end()));
}

std::optional<Hand> hand_from_game(const HandTypeSpec& type,
                                   std::span<const Card> hole,
                                   std::span<const Card> board) {
  check_game_cards(type, hole, board);
  const int nh = static_cast<int>(hole.size());
  const int nb = static_cast<int>(board.size());
  const int lo = std::max(type.hole_min, type.arity - nb);
  const int hi = std::min({type.hole_max, nh, type.arity});
  if (lo > hi) {
    throw std::invalid_argument(
        "hole/board counts cannot satisfy the selection rule of " + type.name);
  }

  const Lookup& lookup = Lookup::get(type.lookup);
  const HandIdentity* best = nullptr;
  std::vector<Card> best_cards;
  std::vector<Card> pick(static_cast<std::size_t>(type.arity));
  for (int h = lo; h <= hi; ++h) {
    for_each_combination(nh, h, [&](const std::vector<int>& hsel) {
      for (int i = 0; i < h; ++i) {
        pick[static_cast<std::size_t>(i)] = hole[static_cast<std::size_t>(hsel[static_cast<std::size_t>(i)])];
      }
      for_each_combination(nb, type.arity - h, [&](const std::vector<int>& bsel) {
        for (int i = h; i < type.arity; ++i) {
          pick[static_cast<std::size_t>(i)] =
              board[static_cast<std::size_t>(bsel[static_cast<std::size_t>(i - h)])];
        }
        std::uint64_t product;
        bool suited;
        if (type.lookup == LookupKind::kBadugi) {
          const auto sub = best_badugi_subset(pick);
          product = prime_product(sub);
          suited = sub.size() == 1;
        } else {
          product = prime_product(pick);
          suited = true;
          for (Card c : pick) suited = suited && c.suit == pick[0].suit;
        }
        const HandIdentity* id = lookup.find(product, suited);
        if (id == nullptr) return;  // non-qualifying selection
        if (best == nullptr || stronger(type, *id, *best)) {
          best = id;
          best_cards = pick;
        }
      });
    });
  }
  if (best == nullptr) return std::nullopt;
  return Hand(type, std::move(best_cards));
}

std::strong_ordering compare_hands(const Hand& a, const Hand& b) {
  if (a.type_ != b.type_) {
    throw std::invalid_argument("cannot compare a " + a.type_.name +
                                " hand with a " + b.type_.name + " hand");
  }
  const auto ai = a.identity_->index;
  const auto bi = b.identity_->index;
  if (ai == bi) return std::strong_ordering::equal;
  const bool a_stronger = a.type_.reversed ? ai < bi : ai > bi;
  return a_stronger ? std::strong_ordering::greater
                    : std::strong_ordering::less;
}

}  // namespace cardroom
