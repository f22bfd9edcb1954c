#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cardroom/cards.hpp"
#include "cardroom/hands.hpp"

namespace cardroom {

using Chips = std::int64_t;

enum class BettingStructure { kNoLimit, kPotLimit, kFixedLimit };

std::string_view to_string(BettingStructure s);

/// Who opens the betting on a street.
enum class OpenerRule {
  kPositionAfterBlinds,     // first seat past the last blind or straddle
  kBringIn,                 // stud first street: designated upcard brings in
  kBestExposedHand,         // stud later streets
  kFirstActiveAfterButton,  // post-flop and post-draw streets
};

std::string_view to_string(OpenerRule r);

/// One dealing-plus-betting round. `min_bet` of 0 means "derive from the
/// forced bets at state creation" (largest blind/straddle, else twice the
/// bring-in, else 1); `bet_scale` doubles big-bet streets under fixed-limit.
/// `max_raises` counts completions/bets/raises; empty = unbounded.
struct Street {
  bool burn = false;
  int hole_down = 0;  // face-down hole cards dealt to each player
  int hole_up = 0;    // face-up hole cards dealt to each player
  int board_count = 0;
  bool draw = false;  // players stand pat or discard-and-draw
  OpenerRule opener = OpenerRule::kFirstActiveAfterButton;
  Chips min_bet = 0;
  int bet_scale = 1;
  std::optional<int> max_raises;

  int hole_total() const { return hole_down + hole_up; }
  bool operator==(const Street&) const = default;
};

struct VariantDefinition {
  std::string name;
  DeckKind deck = DeckKind::kStandard52;
  std::vector<HandTypeSpec> hand_types;  // one, or two for high/low splits
  std::vector<Street> streets;
  BettingStructure structure = BettingStructure::kNoLimit;
  int max_players = 2;

  bool operator==(const VariantDefinition&) const = default;
};

/// The built-in catalog. Accepts the canonical kebab-case names below, an
/// optional "no-limit-"/"pot-limit-"/"fixed-limit-" prefix to override the
/// conventional betting structure, and spelling variations (spaces or
/// underscores for dashes, apostrophes dropped, "hold'em"). Unknown names
/// throw std::invalid_argument.
VariantDefinition builtin_variant(std::string_view name);

/// Canonical names of the 27 built-in variants.
std::span<const std::string_view> builtin_variant_names();

/// Checks every definition invariant and returns all violations (empty means
/// valid): street presence, hand-type count and low-qualifier naming,
/// selection-rule satisfiability, fixed-limit raise caps, and the worst-case
/// deck budget at max_players (draw streets count full replacement).
std::vector<std::string> validate_definition(const VariantDefinition& def);

}  // namespace cardroom
