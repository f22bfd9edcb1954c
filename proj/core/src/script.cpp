#include "cardroom/script.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "cardroom/variants.hpp"

namespace cardroom {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : line) {
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

[[noreturn]] void bad_line(int line, const std::string& msg) {
  throw std::invalid_argument("line " + std::to_string(line) + ": " + msg);
}

Chips parse_chips(int line, const std::string& tok) {
  Chips value = 0;
  const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || p != tok.data() + tok.size() || value < 0) {
    bad_line(line, "expected a non-negative amount, got \"" + tok + "\"");
  }
  return value;
}

int parse_seat(int line, const std::string& tok) {
  return static_cast<int>(parse_chips(line, tok));
}

std::vector<Chips> parse_amounts(int line, const std::vector<std::string>& toks) {
  std::vector<Chips> out;
  for (std::size_t i = 1; i < toks.size(); ++i) {
    out.push_back(parse_chips(line, toks[i]));
  }
  if (out.empty()) bad_line(line, "expected at least one amount");
  return out;
}

AutomationSet parse_automation(int line, const std::string& spec) {
  if (spec == "default") return AutomationSet::all_except_dealing();
  if (spec == "full") return AutomationSet::all();
  if (spec == "none") return AutomationSet::none();
  AutomationSet a;
  std::string flag;
  std::stringstream ss(spec);
  while (std::getline(ss, flag, ',')) {
    if (flag == "ante-posting") {
      a.ante_posting = true;
    } else if (flag == "bet-collection") {
      a.bet_collection = true;
    } else if (flag == "blind-or-straddle-posting") {
      a.blind_or_straddle_posting = true;
    } else if (flag == "card-burning") {
      a.card_burning = true;
    } else if (flag == "hole-dealing") {
      a.hole_dealing = true;
    } else if (flag == "board-dealing") {
      a.board_dealing = true;
    } else if (flag == "hole-cards-showing-or-mucking") {
      a.hole_cards_showing_or_mucking = true;
    } else if (flag == "hand-killing") {
      a.hand_killing = true;
    } else if (flag == "chips-pushing") {
      a.chips_pushing = true;
    } else if (flag == "chips-pulling") {
      a.chips_pulling = true;
    } else {
      bad_line(line, "unknown automation flag \"" + flag + "\"");
    }
  }
  return a;
}

std::vector<Card> parse_line_cards(int line, const std::string& tok) {
  try {
    return parse_cards(tok);
  } catch (const std::invalid_argument& e) {
    bad_line(line, e.what());
  }
}

}  // namespace

ReplayScript parse_script(std::string_view text) {
  ReplayScript script;
  bool saw_action = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    const auto toks = tokenize(line);
    if (toks.empty()) {
      if (pos > text.size()) break;
      continue;
    }
    const std::string& head = toks[0];

    auto expect_args = [&](std::size_t lo, std::size_t hi) {
      if (toks.size() - 1 < lo || toks.size() - 1 > hi) {
        bad_line(line_no, "wrong argument count for \"" + head + "\"");
      }
    };
    auto opt_seat = [&]() -> std::optional<int> {
      if (toks.size() > 1) return parse_seat(line_no, toks[1]);
      return std::nullopt;
    };
    auto push = [&](ScriptAction a) {
      a.line = line_no;
      script.actions.push_back(std::move(a));
      saw_action = true;
    };

    // header directives
    if (!saw_action && head == "variant") {
      expect_args(1, 1);
      script.variant = toks[1];
    } else if (!saw_action && head == "players") {
      expect_args(1, 1);
      script.players = parse_seat(line_no, toks[1]);
    } else if (!saw_action && head == "antes") {
      script.antes = parse_amounts(line_no, toks);
    } else if (!saw_action && head == "blinds") {
      script.blinds = parse_amounts(line_no, toks);
    } else if (!saw_action && head == "bring-in") {
      expect_args(1, 1);
      script.bring_in = parse_chips(line_no, toks[1]);
    } else if (!saw_action && head == "stacks") {
      script.stacks = parse_amounts(line_no, toks);
    } else if (!saw_action && head == "seed") {
      expect_args(1, 1);
      script.seed = static_cast<std::uint64_t>(parse_chips(line_no, toks[1]));
    } else if (!saw_action && head == "deck") {
      expect_args(1, 1);
      script.deck = parse_line_cards(line_no, toks[1]);
    } else if (!saw_action && head == "automation") {
      expect_args(1, 1);
      script.automations = parse_automation(line_no, toks[1]);

      // actions
    } else if (head == "post-ante") {
      expect_args(0, 1);
      push({0, ActionKind::kPostAnte, opt_seat(), {}, 0, {}});
    } else if (head == "collect-bets") {
      expect_args(0, 0);
      push({0, ActionKind::kCollectBets, {}, {}, 0, {}});
    } else if (head == "post-blind") {
      expect_args(0, 1);
      push({0, ActionKind::kPostBlindOrStraddle, opt_seat(), {}, 0, {}});
    } else if (head == "burn") {
      expect_args(0, 1);
      ScriptAction a{0, ActionKind::kBurnCard, {}, {}, 0, {}};
      if (toks.size() > 1) a.cards = parse_line_cards(line_no, toks[1]);
      push(std::move(a));
    } else if (head == "deal-hole") {
      expect_args(1, 2);
      ScriptAction a{0, ActionKind::kDealHole, {}, {}, 0, {}};
      a.cards = parse_line_cards(line_no, toks[1]);
      if (toks.size() > 2) a.player = parse_seat(line_no, toks[2]);
      push(std::move(a));
    } else if (head == "deal-board") {
      expect_args(1, 1);
      push({0, ActionKind::kDealBoard, {}, parse_line_cards(line_no, toks[1]),
            0, {}});
    } else if (head == "stand-pat") {
      expect_args(0, 0);
      push({0, ActionKind::kStandPatOrDiscard, {}, {}, 0, {}});
    } else if (head == "discard") {
      expect_args(1, 1);
      push({0, ActionKind::kStandPatOrDiscard, {},
            parse_line_cards(line_no, toks[1]), 0, {}});
    } else if (head == "fold") {
      expect_args(0, 0);
      push({0, ActionKind::kFold, {}, {}, 0, {}});
    } else if (head == "check-call") {
      expect_args(0, 0);
      push({0, ActionKind::kCheckOrCall, {}, {}, 0, {}});
    } else if (head == "bring-in") {
      expect_args(0, 0);
      push({0, ActionKind::kPostBringIn, {}, {}, 0, {}});
    } else if (head == "complete-bet-raise-to") {
      expect_args(1, 1);
      push({0, ActionKind::kCompleteBetOrRaiseTo, {}, {},
            parse_chips(line_no, toks[1]), {}});
    } else if (head == "show") {
      expect_args(0, 1);
      push({0, ActionKind::kShowOrMuck, opt_seat(), {}, 0, true});
    } else if (head == "muck") {
      expect_args(0, 1);
      push({0, ActionKind::kShowOrMuck, opt_seat(), {}, 0, false});
    } else if (head == "kill-hand") {
      expect_args(0, 1);
      push({0, ActionKind::kKillHand, opt_seat(), {}, 0, {}});
    } else if (head == "push-chips") {
      expect_args(0, 0);
      push({0, ActionKind::kPushChips, {}, {}, 0, {}});
    } else if (head == "pull-chips") {
      expect_args(0, 1);
      push({0, ActionKind::kPullChips, opt_seat(), {}, 0, {}});
    } else {
      bad_line(line_no, "unknown directive \"" + head + "\"");
    }
    if (pos > text.size()) break;
  }

  if (script.variant.empty()) {
    throw std::invalid_argument("script names no variant");
  }
  if (script.players < 2) {
    throw std::invalid_argument("script needs players >= 2");
  }
  if (script.stacks.empty()) {
    throw std::invalid_argument("script names no starting stacks");
  }
  return script;
}

GameState run_script(const ReplayScript& script) {
  GameState::DeckSource source = script.deck
                                     ? GameState::DeckSource::preset(*script.deck)
                                     : GameState::DeckSource::seeded(
                                           script.seed.value_or(0));
  GameState state = GameState::create(
      script.automations, builtin_variant(script.variant), script.antes,
      script.blinds, script.bring_in, script.stacks, script.players,
      std::move(source));

  for (const ScriptAction& a : script.actions) {
    try {
      switch (a.kind) {
        case ActionKind::kPostAnte:
          state.post_ante(a.player);
          break;
        case ActionKind::kCollectBets:
          state.collect_bets();
          break;
        case ActionKind::kPostBlindOrStraddle:
          state.post_blind_or_straddle(a.player);
          break;
        case ActionKind::kBurnCard:
          state.burn_card(a.cards.empty() ? std::optional<Card>{}
                                          : std::optional<Card>{a.cards[0]});
          break;
        case ActionKind::kDealHole:
          state.deal_hole(std::span<const Card>(a.cards), a.player);
          break;
        case ActionKind::kDealBoard:
          state.deal_board(std::span<const Card>(a.cards));
          break;
        case ActionKind::kStandPatOrDiscard:
          state.stand_pat_or_discard(std::span<const Card>(a.cards));
          break;
        case ActionKind::kFold:
          state.fold();
          break;
        case ActionKind::kCheckOrCall:
          state.check_or_call();
          break;
        case ActionKind::kPostBringIn:
          state.post_bring_in();
          break;
        case ActionKind::kCompleteBetOrRaiseTo:
          state.complete_bet_or_raise_to(a.amount);
          break;
        case ActionKind::kShowOrMuck:
          state.show_or_muck_hole_cards(a.show, a.player);
          break;
        case ActionKind::kKillHand:
          state.kill_hand(a.player);
          break;
        case ActionKind::kPushChips:
          state.push_chips();
          break;
        case ActionKind::kPullChips:
          state.pull_chips(a.player);
          break;
      }
    } catch (const RuleError& e) {
      throw ReplayError(a.line, e.what());
    } catch (const std::invalid_argument& e) {
      throw ReplayError(a.line, e.what());
    }
  }
  return state;
}

std::string serialize_script(const GameState& state) {
  std::string out;
  auto add = [&](const std::string& line) {
    out += line;
    out += '\n';
  };
  auto amounts = [](const std::vector<Chips>& v) {
    std::string s;
    for (Chips c : v) s += " " + std::to_string(c);
    return s;
  };

  add("variant " + state.variant().name);
  add("players " + std::to_string(state.player_count()));
  add("antes" + amounts(state.ante_config()));
  if (std::any_of(state.blind_config().begin(), state.blind_config().end(),
                  [](Chips c) { return c > 0; })) {
    add("blinds" + amounts(state.blind_config()));
  }
  if (state.bring_in() > 0) {
    add("bring-in " + std::to_string(state.bring_in()));
  }
  add("stacks" + amounts(state.starting_stacks()));
  add("deck " + format_cards(state.initial_deck()));
  add("automation none");

  for (const LoggedAction& a : state.action_log()) {
    std::string line;
    switch (a.kind) {
      case ActionKind::kPostAnte:
        line = "post-ante " + std::to_string(a.player);
        break;
      case ActionKind::kCollectBets:
        line = "collect-bets";
        break;
      case ActionKind::kPostBlindOrStraddle:
        line = "post-blind " + std::to_string(a.player);
        break;
      case ActionKind::kBurnCard:
        line = "burn " + format_cards(a.cards);
        break;
      case ActionKind::kDealHole:
        line = "deal-hole " + format_cards(a.cards) + " " +
               std::to_string(a.player);
        break;
      case ActionKind::kDealBoard:
        line = "deal-board " + format_cards(a.cards);
        break;
      case ActionKind::kStandPatOrDiscard:
        line = a.cards.empty() ? "stand-pat" : "discard " + format_cards(a.cards);
        break;
      case ActionKind::kFold:
        line = "fold";
        break;
      case ActionKind::kCheckOrCall:
        line = "check-call";
        break;
      case ActionKind::kPostBringIn:
        line = "bring-in";
        break;
      case ActionKind::kCompleteBetOrRaiseTo:
        line = "complete-bet-raise-to " + std::to_string(a.amount);
        break;
      case ActionKind::kShowOrMuck:
        line = (a.show == 1 ? "show " : "muck ") + std::to_string(a.player);
        break;
      case ActionKind::kKillHand:
        line = "kill-hand " + std::to_string(a.player);
        break;
      case ActionKind::kPushChips:
        line = "push-chips";
        break;
      case ActionKind::kPullChips:
        line = "pull-chips " + std::to_string(a.player);
        break;
    }
    add(line);
  }
  return out;
}

}  // namespace cardroom
