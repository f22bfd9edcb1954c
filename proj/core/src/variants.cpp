#include "cardroom/variants.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

namespace cardroom {

namespace {

Street hole_deal_street(int down, int up, OpenerRule opener, int scale) {
  Street s;
  s.hole_down = down;
  s.hole_up = up;
  s.opener = opener;
  s.bet_scale = scale;
  return s;
}

Street board_street(int count, int scale, bool burn = true) {
  Street s;
  s.burn = burn;
  s.board_count = count;
  s.opener = OpenerRule::kFirstActiveAfterButton;
  s.bet_scale = scale;
  return s;
}

Street draw_street(int scale) {
  Street s;
  s.burn = true;
  s.draw = true;
  s.opener = OpenerRule::kFirstActiveAfterButton;
  s.bet_scale = scale;
  return s;
}

// flop/turn/river after an initial hole deal; Courchevel exposes the first
// board card with the hole cards
std::vector<Street> button_game_streets(int hole, bool courchevel) {
  std::vector<Street> streets;
  Street first = hole_deal_street(hole, 0, OpenerRule::kPositionAfterBlinds, 1);
  first.board_count = courchevel ? 1 : 0;
  streets.push_back(first);
  streets.push_back(board_street(courchevel ? 2 : 3, 1));
  streets.push_back(board_street(1, 2));
  streets.push_back(board_street(1, 2));
  return streets;
}

std::vector<Street> stud_streets(int up_rounds) {
  // third street, then one upcard per round, then a final downcard
  std::vector<Street> streets;
  streets.push_back(hole_deal_street(2, 1, OpenerRule::kBringIn, 1));
  for (int i = 0; i < up_rounds; ++i) {
    Street s = hole_deal_street(0, 1, OpenerRule::kBestExposedHand, i == 0 ? 1 : 2);
    s.burn = true;
    streets.push_back(s);
  }
  Street last = hole_deal_street(1, 0, OpenerRule::kBestExposedHand, 2);
  last.burn = true;
  streets.push_back(last);
  return streets;
}

std::vector<Street> five_card_stud_streets() {
  std::vector<Street> streets;
  streets.push_back(hole_deal_street(1, 1, OpenerRule::kBringIn, 1));
  for (int i = 0; i < 3; ++i) {
    Street s = hole_deal_street(0, 1, OpenerRule::kBestExposedHand, i == 0 ? 1 : 2);
    s.burn = true;
    streets.push_back(s);
  }
  return streets;
}

std::vector<Street> draw_game_streets(int hole, std::vector<int> draw_scales) {
  std::vector<Street> streets;
  streets.push_back(hole_deal_street(hole, 0, OpenerRule::kPositionAfterBlinds, 1));
  for (int scale : draw_scales) streets.push_back(draw_street(scale));
  return streets;
}

struct BuiltinSpec {
  std::string_view name;
  BettingStructure default_structure;
  DeckKind deck;
  std::vector<std::string_view> hand_types;
  std::vector<Street> streets;
  int max_players_override = 0;  // 0 = derive from the deck budget
};

std::vector<BuiltinSpec> make_builtins() {
  using BS = BettingStructure;
  const DeckKind std52 = DeckKind::kStandard52;
  std::vector<BuiltinSpec> v;

  v.push_back({"texas-holdem", BS::kNoLimit, std52, {"standard-high"},
               button_game_streets(2, false)});
  v.push_back({"greek-holdem", BS::kPotLimit, std52, {"greek-holdem"},
               button_game_streets(2, false)});
  v.push_back({"short-deck-holdem", BS::kNoLimit, DeckKind::kShortDeck36,
               {"short-deck-holdem"}, button_game_streets(2, false)});

  const struct {
    std::string_view base;
    std::string_view hl8;
    std::string_view hlr;
    int hole;
    bool courchevel;
  } omahas[] = {
      {"omaha-holdem", "omaha-holdem-hl8", "omaha-holdem-hlr", 4, false},
      {"five-card-omaha", "five-card-omaha-hl8", "five-card-omaha-hlr", 5, false},
      {"six-card-omaha", "six-card-omaha-hl8", "six-card-omaha-hlr", 6, false},
      {"courchevel", "courchevel-hl8", "courchevel-hlr", 5, true},
  };
  for (const auto& o : omahas) {
    v.push_back({o.base, BS::kPotLimit, std52, {"omaha-holdem"},
                 button_game_streets(o.hole, o.courchevel)});
    v.push_back({o.hl8, BS::kPotLimit, std52,
                 {"omaha-holdem", "omaha-eight-or-better-low"},
                 button_game_streets(o.hole, o.courchevel)});
    v.push_back({o.hlr, BS::kPotLimit, std52,
                 {"omaha-holdem", "omaha-regular-low"},
                 button_game_streets(o.hole, o.courchevel)});
  }

  v.push_back({"seven-card-stud", BS::kFixedLimit, std52, {"standard-high"},
               stud_streets(3)});
  v.push_back({"seven-card-stud-hl8", BS::kFixedLimit, std52,
               {"standard-high", "eight-or-better-low"}, stud_streets(3)});
  v.push_back({"seven-card-stud-hlr", BS::kFixedLimit, std52,
               {"standard-high", "regular-low"}, stud_streets(3)});
  v.push_back({"razz", BS::kFixedLimit, std52, {"regular-low"}, stud_streets(3)});

  v.push_back({"five-card-stud", BS::kFixedLimit, std52, {"standard-high"},
               five_card_stud_streets()});
  v.push_back({"five-card-stud-hl8", BS::kFixedLimit, std52,
               {"standard-high", "eight-or-better-low"},
               five_card_stud_streets()});
  v.push_back({"five-card-stud-hlr", BS::kFixedLimit, std52,
               {"standard-high", "regular-low"}, five_card_stud_streets()});

  v.push_back({"five-card-draw", BS::kNoLimit, std52, {"standard-high"},
               draw_game_streets(5, {2})});
  v.push_back({"deuce-to-seven-triple-draw", BS::kFixedLimit, std52,
               {"standard-low"}, draw_game_streets(5, {1, 2, 2})});
  v.push_back({"deuce-to-seven-single-draw", BS::kNoLimit, std52,
               {"standard-low"}, draw_game_streets(5, {2})});
  v.push_back({"badugi", BS::kFixedLimit, std52, {"badugi"},
               draw_game_streets(4, {1, 2, 2})});

  {
    BuiltinSpec kuhn{"kuhn-poker", BS::kFixedLimit, DeckKind::kKuhn3,
                     {"kuhn"}, {}, 2};
    Street s = hole_deal_street(1, 0, OpenerRule::kFirstActiveAfterButton, 1);
    s.max_raises = 1;  // one bet, no raises
    kuhn.streets.push_back(s);
    v.push_back(std::move(kuhn));
  }
  return v;
}

const std::vector<BuiltinSpec>& builtin_table() {
  static const std::vector<BuiltinSpec> table = make_builtins();
  return table;
}

int deck_budget(const VariantDefinition& def, int players) {
  int hole = 0;
  int burns = 0;
  int board = 0;
  int hole_before_draws = 0;
  for (const Street& s : def.streets) {
    hole_before_draws += s.hole_total();
    hole += s.hole_total();
    if (s.draw) hole += hole_before_draws;  // everyone may replace everything
    if (s.burn) burns += 1;
    board += s.board_count;
  }
  return players * hole + burns + board;
}

std::string normalize(std::string_view name) {
  std::string out;
  for (char c : name) {
    if (c == '\'') continue;
    if (c == ' ' || c == '_') c = '-';
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  // collapse digit spellings
  auto replace_all = [&](std::string_view from, std::string_view to) {
    std::size_t pos = 0;
    while ((pos = out.find(from, pos)) != std::string::npos) {
      out.replace(pos, from.size(), to);
      pos += to.size();
    }
  };
  replace_all("5-card", "five-card");
  replace_all("6-card", "six-card");
  replace_all("7-card", "seven-card");
  replace_all("2-to-7", "deuce-to-seven");
  replace_all("2-7", "deuce-to-seven");
  return out;
}

}  // namespace

std::string_view to_string(BettingStructure s) {
  switch (s) {
    case BettingStructure::kNoLimit:
      return "no-limit";
    case BettingStructure::kPotLimit:
      return "pot-limit";
    case BettingStructure::kFixedLimit:
      return "fixed-limit";
  }
  return "?";
}

std::string_view to_string(OpenerRule r) {
  switch (r) {
    case OpenerRule::kPositionAfterBlinds:
      return "position-after-blinds";
    case OpenerRule::kBringIn:
      return "bring-in";
    case OpenerRule::kBestExposedHand:
      return "best-exposed-hand";
    case OpenerRule::kFirstActiveAfterButton:
      return "first-active-after-button";
  }
  return "?";
}

std::span<const std::string_view> builtin_variant_names() {
  static const std::vector<std::string_view> names = [] {
    std::vector<std::string_view> out;
    for (const BuiltinSpec& spec : builtin_table()) out.push_back(spec.name);
    return out;
  }();
  return names;
}

VariantDefinition builtin_variant(std::string_view name) {
  std::string canonical = normalize(name);
  std::optional<BettingStructure> structure;
  for (BettingStructure s : {BettingStructure::kNoLimit,
                             BettingStructure::kPotLimit,
                             BettingStructure::kFixedLimit}) {
    const std::string prefix = std::string(to_string(s)) + "-";
    if (canonical.rfind(prefix, 0) == 0) {
      structure = s;
      canonical = canonical.substr(prefix.size());
      break;
    }
  }

  for (const BuiltinSpec& spec : builtin_table()) {
    if (canonical != spec.name) continue;
    VariantDefinition def;
    def.deck = spec.deck;
    def.structure = structure.value_or(spec.default_structure);
    def.name = std::string(to_string(def.structure)) + "-" + std::string(spec.name);
    for (std::string_view t : spec.hand_types) {
      def.hand_types.push_back(hand_type(t));
    }
    def.streets = spec.streets;
    for (Street& s : def.streets) {
      if (def.structure == BettingStructure::kFixedLimit) {
        if (!s.max_raises) s.max_raises = 4;  // a bet and three raises
      } else if (spec.name != "kuhn-poker") {
        s.max_raises.reset();
      }
    }
    if (spec.max_players_override > 0) {
      def.max_players = spec.max_players_override;
    } else {
      int players = 2;
      while (deck_budget(def, players + 1) <= deck_size(def.deck)) ++players;
      def.max_players = players;
    }
    return def;
  }
  throw std::invalid_argument("unknown variant: \"" + std::string(name) + "\"");
}

std::vector<std::string> validate_definition(const VariantDefinition& def) {
  std::vector<std::string> violations;
  if (def.streets.empty()) violations.push_back("empty streets");
  if (def.hand_types.empty() || def.hand_types.size() > 2) {
    violations.push_back("a variant needs one hand type, or two for a split");
  }
  if (def.hand_types.size() == 2) {
    const LookupKind low = def.hand_types[1].lookup;
    if (low != LookupKind::kEightOrBetter && low != LookupKind::kRegular) {
      violations.push_back(
          "the split low hand type must use the eight-or-better or regular lookup");
    }
  }
  if (def.max_players < 2) violations.push_back("max_players below two");

  int hole_total = 0;
  int board_total = 0;
  for (std::size_t i = 0; i < def.streets.size(); ++i) {
    const Street& s = def.streets[i];
    hole_total += s.hole_total();
    board_total += s.board_count;
    if (s.hole_down < 0 || s.hole_up < 0 || s.board_count < 0) {
      violations.push_back("street " + std::to_string(i) + ": negative deal count");
    }
    if (s.min_bet < 0) {
      violations.push_back("street " + std::to_string(i) + ": negative min bet");
    }
    if (s.bet_scale < 1) {
      violations.push_back("street " + std::to_string(i) + ": bet scale below one");
    }
    if (s.draw && i == 0) {
      violations.push_back("street 0 cannot be a draw street");
    }
    if (def.structure == BettingStructure::kFixedLimit && !s.max_raises) {
      violations.push_back("street " + std::to_string(i) +
                           ": fixed-limit streets need a raise cap");
    }
  }

  for (const HandTypeSpec& t : def.hand_types) {
    const int lo = std::max(t.hole_min, t.arity - board_total);
    const int hi = std::min({t.hole_max, hole_total, t.arity});
    if (lo > hi) {
      violations.push_back("hand type " + t.name +
                           " cannot be formed from the dealt cards");
    }
  }

  if (def.max_players >= 2 && deck_budget(def, def.max_players) > deck_size(def.deck)) {
    violations.push_back(
        "deck exhaustion possible: " + std::to_string(def.max_players) +
        " players need up to " + std::to_string(deck_budget(def, def.max_players)) +
        " cards from a " + std::to_string(deck_size(def.deck)) + "-card deck");
  }
  return violations;
}

}  // namespace cardroom
