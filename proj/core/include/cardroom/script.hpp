#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cardroom/state.hpp"

namespace cardroom {

/// A replay script: line-oriented UTF-8 text. `#` starts a comment. Header
/// directives come first, then one action per line.
///
/// Header:
///   variant <name>              built-in variant name (structure prefix ok)
///   players <n>
///   antes <v> | <v0> <v1> ...   one value = uniform
///   blinds <v0> <v1> ...        from the small blind on; missing seats = 0
///   bring-in <v>
///   stacks <v0> <v1> ...
///   seed <n> | deck <cards>     shuffle seed or a full preset deck order
///   automation default|full|none|<flag,flag,...>
///
/// Actions (player and card arguments as the operations take them):
///   post-ante [seat]            collect-bets            post-blind [seat]
///   burn [card]                 deal-hole <cards> [seat]
///   deal-board <cards>          stand-pat | discard <cards>
///   fold                        check-call              bring-in
///   complete-bet-raise-to <n>   show [seat] | muck [seat]
///   kill-hand [seat]            push-chips              pull-chips [seat]
struct ScriptAction {
  int line = 0;
  ActionKind kind;
  std::optional<int> player;
  std::vector<Card> cards;
  Chips amount = 0;
  std::optional<bool> show;
};

struct ReplayScript {
  std::string variant;
  int players = 0;
  std::vector<Chips> antes;
  std::vector<Chips> blinds;
  Chips bring_in = 0;
  std::vector<Chips> stacks;
  std::optional<std::uint64_t> seed;
  std::optional<std::vector<Card>> deck;
  AutomationSet automations = AutomationSet::all_except_dealing();
  std::vector<ScriptAction> actions;
};

/// A rule violation while replaying; carries the offending script line.
class ReplayError : public std::runtime_error {
 public:
  ReplayError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Throws std::invalid_argument with a line reference on malformed text.
ReplayScript parse_script(std::string_view text);

/// Creates the state and applies every action. Throws ReplayError when an
/// action fails its verification.
GameState run_script(const ReplayScript& script);

/// Renders a finished (or partial) state as a script that replays to an
/// identical state: the header pins the initial deck order, automation is
/// off, and every logged operation becomes an explicit action line.
std::string serialize_script(const GameState& state);

}  // namespace cardroom
