#include "cardroom/cards.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <stdexcept>

namespace cardroom {

namespace {

constexpr std::string_view kRankChars = "23456789TJQKA";
constexpr std::string_view kSuitChars = "cdhs";

}  // namespace

char rank_char(Rank r) { return kRankChars[value_of(r)]; }

char suit_char(Suit s) { return kSuitChars[value_of(s)]; }

std::string to_string(Card c) {
  return std::string{rank_char(c.rank), suit_char(c.suit)};
}

std::string format_cards(std::span<const Card> cards) {
  std::string out;
  out.reserve(cards.size() * 2);
  for (Card c : cards) {
    out.push_back(rank_char(c.rank));
    out.push_back(suit_char(c.suit));
  }
  return out;
}

std::vector<Card> parse_cards(std::string_view text) {
  if (text.size() % 2 != 0) {
    throw std::invalid_argument("card string has odd length: \"" +
                                std::string(text) + "\"");
  }
  std::vector<Card> cards;
  cards.reserve(text.size() / 2);
  bool seen[kNumCards] = {};
  for (std::size_t i = 0; i < text.size(); i += 2) {
    const char rc = static_cast<char>(
        std::toupper(static_cast<unsigned char>(text[i])));
    const auto rpos = kRankChars.find(rc);
    if (rpos == std::string_view::npos) {
      throw std::invalid_argument(std::string("unknown rank character '") +
                                  text[i] + "'");
    }
    const auto spos = kSuitChars.find(text[i + 1]);
    if (spos == std::string_view::npos) {
      throw std::invalid_argument(std::string("unknown suit character '") +
                                  text[i + 1] + "'");
    }
    const Card c{static_cast<Rank>(rpos), static_cast<Suit>(spos)};
    if (seen[c.index()]) {
      throw std::invalid_argument("duplicate card " + to_string(c));
    }
    seen[c.index()] = true;
    cards.push_back(c);
  }
  return cards;
}

std::string_view to_string(DeckKind k) {
  switch (k) {
    case DeckKind::kStandard52:
      return "standard-52";
    case DeckKind::kShortDeck36:
      return "short-deck-36";
    case DeckKind::kKuhn3:
      return "kuhn-3";
  }
  return "?";
}

int deck_size(DeckKind k) {
  switch (k) {
    case DeckKind::kStandard52:
      return 52;
    case DeckKind::kShortDeck36:
      return 36;
    case DeckKind::kKuhn3:
      return 3;
  }
  return 0;
}

std::vector<Card> create_deck(DeckKind k) {
  std::vector<Card> deck;
  if (k == DeckKind::kKuhn3) {
    deck = {Card{Rank::kJack, Suit::kSpades}, Card{Rank::kQueen, Suit::kSpades},
            Card{Rank::kKing, Suit::kSpades}};
    return deck;
  }
  const int low = k == DeckKind::kShortDeck36 ? value_of(Rank::kSix) : 0;
  deck.reserve(static_cast<std::size_t>(deck_size(k)));
  for (int r = low; r < kNumRanks; ++r) {
    for (int s = 0; s < kNumSuits; ++s) {
      deck.push_back(Card{static_cast<Rank>(r), static_cast<Suit>(s)});
    }
  }
  return deck;
}

std::vector<Card> shuffle_deck(std::vector<Card> deck, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  for (std::size_t i = deck.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(gen() % i);
    std::swap(deck[i - 1], deck[j]);
  }
  return deck;
}

}  // namespace cardroom
