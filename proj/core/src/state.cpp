#include "cardroom/state.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <numeric>

#include "cardroom/hands.hpp"

namespace cardroom {

namespace {

std::string seat_str(int seat) { return "seat " + std::to_string(seat); }

}  // namespace

std::string_view to_string(Phase p) {
  switch (p) {
    case Phase::kAntePosting:
      return "ante-posting";
    case Phase::kBetCollection:
      return "bet-collection";
    case Phase::kBlindOrStraddlePosting:
      return "blind-or-straddle-posting";
    case Phase::kDealing:
      return "dealing";
    case Phase::kBetting:
      return "betting";
    case Phase::kShowdown:
      return "showdown";
    case Phase::kHandKilling:
      return "hand-killing";
    case Phase::kChipsPushing:
      return "chips-pushing";
    case Phase::kChipsPulling:
      return "chips-pulling";
    case Phase::kTerminal:
      return "terminal";
  }
  return "?";
}

std::string_view to_string(ActionKind k) {
  switch (k) {
    case ActionKind::kPostAnte:
      return "post-ante";
    case ActionKind::kCollectBets:
      return "collect-bets";
    case ActionKind::kPostBlindOrStraddle:
      return "post-blind";
    case ActionKind::kBurnCard:
      return "burn";
    case ActionKind::kDealHole:
      return "deal-hole";
    case ActionKind::kDealBoard:
      return "deal-board";
    case ActionKind::kStandPatOrDiscard:
      return "discard";
    case ActionKind::kFold:
      return "fold";
    case ActionKind::kCheckOrCall:
      return "check-call";
    case ActionKind::kPostBringIn:
      return "bring-in";
    case ActionKind::kCompleteBetOrRaiseTo:
      return "complete-bet-raise-to";
    case ActionKind::kShowOrMuck:
      return "show-muck";
    case ActionKind::kKillHand:
      return "kill-hand";
    case ActionKind::kPushChips:
      return "push-chips";
    case ActionKind::kPullChips:
      return "pull-chips";
  }
  return "?";
}

AutomationSet AutomationSet::all() {
  AutomationSet a;
  a.ante_posting = a.bet_collection = a.blind_or_straddle_posting = true;
  a.card_burning = a.hole_dealing = a.board_dealing = true;
  a.hole_cards_showing_or_mucking = true;
  a.hand_killing = a.chips_pushing = a.chips_pulling = true;
  return a;
}

AutomationSet AutomationSet::all_except_dealing() {
  AutomationSet a = all();
  a.hole_dealing = false;
  a.board_dealing = false;
  return a;
}

std::vector<Pot> layered_pots(std::span<const Chips> contributions,
                              std::span<const bool> in_contention) {
  std::vector<Chips> levels(contributions.begin(), contributions.end());
  std::erase_if(levels, [](Chips c) { return c <= 0; });
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  std::vector<Pot> pots;
  Chips prev = 0;
  for (Chips level : levels) {
    Pot pot;
    for (std::size_t i = 0; i < contributions.size(); ++i) {
      const Chips in_layer =
          std::min(contributions[i], level) - std::min(contributions[i], prev);
      pot.amount += in_layer;
      if (contributions[i] >= level && in_contention[i]) {
        pot.eligible.push_back(static_cast<int>(i));
      }
    }
    if (!pots.empty() && pots.back().eligible == pot.eligible) {
      pots.back().amount += pot.amount;
    } else {
      pots.push_back(std::move(pot));
    }
    prev = level;
  }
  return pots;
}

GameState::DeckSource GameState::DeckSource::seeded(std::uint64_t seed) {
  DeckSource s;
  s.seed = seed;
  return s;
}

GameState::DeckSource GameState::DeckSource::preset(std::vector<Card> deck) {
  DeckSource s;
  s.deck = std::move(deck);
  return s;
}

GameState GameState::create(const AutomationSet& automations,
                            VariantDefinition variant,
                            std::vector<Chips> antes,
                            std::vector<Chips> blinds_or_straddles,
                            Chips bring_in, std::vector<Chips> starting_stacks,
                            int player_count, DeckSource deck_source) {
  const auto violations = validate_definition(variant);
  if (!violations.empty()) {
    std::string msg = "invalid variant definition:";
    for (const std::string& v : violations) msg += " " + v + ";";
    throw std::invalid_argument(msg);
  }
  if (player_count < 2 || player_count > variant.max_players) {
    throw std::invalid_argument(
        "player count " + std::to_string(player_count) + " outside [2, " +
        std::to_string(variant.max_players) + "] for " + variant.name);
  }
  const auto n = static_cast<std::size_t>(player_count);
  if (starting_stacks.size() != n) {
    throw std::invalid_argument("need one starting stack per player");
  }
  for (Chips s : starting_stacks) {
    if (s <= 0) throw std::invalid_argument("starting stacks must be positive");
  }
  if (antes.size() == 1) antes.assign(n, antes[0]);
  if (antes.empty()) antes.assign(n, 0);
  if (antes.size() != n) {
    throw std::invalid_argument("antes must be one value or one per player");
  }
  if (blinds_or_straddles.size() > n) {
    throw std::invalid_argument("more blinds than players");
  }
  blinds_or_straddles.resize(n, 0);
  for (Chips a : antes) {
    if (a < 0) throw std::invalid_argument("negative ante");
  }
  for (Chips b : blinds_or_straddles) {
    if (b < 0) throw std::invalid_argument("negative blind");
  }
  if (bring_in < 0) throw std::invalid_argument("negative bring-in");
  const bool has_bring_in_street =
      variant.streets[0].opener == OpenerRule::kBringIn;
  if (has_bring_in_street && bring_in == 0) {
    throw std::invalid_argument(variant.name + " needs a bring-in amount");
  }
  if (!has_bring_in_street && bring_in != 0) {
    throw std::invalid_argument(variant.name + " has no bring-in");
  }
  const Chips forced = std::accumulate(antes.begin(), antes.end(), Chips{0}) +
                       std::accumulate(blinds_or_straddles.begin(),
                                       blinds_or_straddles.end(), Chips{0}) +
                       bring_in;
  if (forced == 0) {
    throw std::invalid_argument(
        "at least one ante, blind/straddle or bring-in must be nonzero");
  }

  std::vector<Card> full = create_deck(variant.deck);
  std::vector<Card> deck;
  if (deck_source.seed) {
    deck = shuffle_deck(full, *deck_source.seed);
  } else {
    deck = deck_source.deck;
    auto a = deck;
    auto b = full;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) {
      throw std::invalid_argument("preset deck is not a permutation of the " +
                                  std::string(to_string(variant.deck)) +
                                  " deck");
    }
  }

  GameState st;
  st.variant_ = std::move(variant);
  st.automations_ = automations;
  st.ante_config_ = antes;
  st.ante_due_ = std::move(antes);
  st.blind_config_ = blinds_or_straddles;
  st.blind_due_ = std::move(blinds_or_straddles);
  st.starting_stacks_ = starting_stacks;
  st.bring_in_ = bring_in;
  st.initial_deck_ = deck;
  st.deck_ = std::move(deck);
  st.players_.resize(n);
  for (std::size_t i = 0; i < n; ++i) st.players_[i].stack = starting_stacks[i];
  st.contributions_.assign(n, 0);
  st.hole_dealt_this_street_.assign(n, 0);
  st.replacements_owed_.assign(n, 0);
  st.acted_since_full_raise_.assign(n, false);
  st.chip_total_ =
      std::accumulate(starting_stacks.begin(), starting_stacks.end(), Chips{0});

  st.plan_.push_back({Phase::kAntePosting, -1});
  st.plan_.push_back({Phase::kBetCollection, -1});
  st.plan_.push_back({Phase::kBlindOrStraddlePosting, -1});
  for (int i = 0; i < static_cast<int>(st.variant_.streets.size()); ++i) {
    st.plan_.push_back({Phase::kDealing, i});
    st.plan_.push_back({Phase::kBetting, i});
    st.plan_.push_back({Phase::kBetCollection, i});
  }
  st.plan_.push_back({Phase::kShowdown, -1});
  st.plan_.push_back({Phase::kHandKilling, -1});
  st.plan_.push_back({Phase::kChipsPushing, -1});
  st.plan_.push_back({Phase::kChipsPulling, -1});
  st.plan_.push_back({Phase::kTerminal, -1});

  st.enter_step();
  st.settle();
  return st;
}

// ---------------------------------------------------------------- views ---

Phase GameState::phase() const { return plan_[step_].phase; }

std::optional<int> GameState::street_index() const {
  const int s = plan_[step_].street;
  if (s < 0) return std::nullopt;
  return s;
}

Chips GameState::total_pot() const {
  Chips total = 0;
  for (const Pot& p : pots_) total += p.amount;
  for (const PlayerStatus& p : players_) total += p.bet;
  return total;
}

std::vector<Chips> GameState::stacks() const {
  std::vector<Chips> out;
  for (const PlayerStatus& p : players_) out.push_back(p.stack);
  return out;
}

std::vector<Chips> GameState::bets() const {
  std::vector<Chips> out;
  for (const PlayerStatus& p : players_) out.push_back(p.bet);
  return out;
}

std::optional<int> GameState::actor() const {
  switch (phase()) {
    case Phase::kAntePosting:
      return first_owed_ante();
    case Phase::kBlindOrStraddlePosting:
      return first_owed_blind();
    case Phase::kDealing:
      if (in_street_phase() && current_street().draw && !draw_queue_.empty() &&
          std::accumulate(replacements_owed_.begin(), replacements_owed_.end(),
                          0) == 0) {
        return draw_queue_.front();
      }
      return std::nullopt;
    case Phase::kBetting:
      if (!bet_queue_.empty()) return bet_queue_.front();
      return std::nullopt;
    case Phase::kShowdown:
      if (!show_queue_.empty()) return show_queue_.front();
      return std::nullopt;
    case Phase::kHandKilling:
      if (!kill_pending_.empty()) return kill_pending_.front();
      return std::nullopt;
    case Phase::kChipsPulling:
      return first_with_winnings();
    default:
      return std::nullopt;
  }
}

// ------------------------------------------------------------- helpers ---

int GameState::active_count() const {
  int n = 0;
  for (const PlayerStatus& p : players_) n += p.active ? 1 : 0;
  return n;
}

int GameState::seat_after(int seat) const {
  return (seat + 1) % player_count();
}

int GameState::button() const {
  // heads-up: the small blind holds the button
  return player_count() == 2 ? 0 : player_count() - 1;
}

Chips GameState::effective_min_bet(const Street& s) const {
  if (s.min_bet > 0) return s.min_bet;
  Chips base = 1;
  for (Chips b : blind_config_) base = std::max(base, b);
  base = std::max(base, 2 * bring_in_);
  if (variant_.structure == BettingStructure::kFixedLimit) {
    return base * s.bet_scale;
  }
  return base;
}

Chips GameState::max_posted_bet() const {
  Chips m = 0;
  for (const PlayerStatus& p : players_) m = std::max(m, p.bet);
  return m;
}

std::optional<int> GameState::first_owed_ante() const {
  for (int i = 0; i < player_count(); ++i) {
    if (ante_due_[static_cast<std::size_t>(i)] > 0 &&
        players_[static_cast<std::size_t>(i)].stack > 0) {
      return i;
    }
  }
  return std::nullopt;
}

std::optional<int> GameState::first_owed_blind() const {
  for (int i = 0; i < player_count(); ++i) {
    if (blind_due_[static_cast<std::size_t>(i)] > 0 &&
        players_[static_cast<std::size_t>(i)].stack > 0) {
      return i;
    }
  }
  return std::nullopt;
}

int GameState::hole_owed(int seat) const {
  const PlayerStatus& p = players_[static_cast<std::size_t>(seat)];
  if (!p.active) return 0;
  const Street& s = current_street();
  if (s.draw) return replacements_owed_[static_cast<std::size_t>(seat)];
  return s.hole_total() - hole_dealt_this_street_[static_cast<std::size_t>(seat)];
}

std::optional<int> GameState::next_hole_target() const {
  // deal one card per player per round, starting left of the button
  std::optional<int> best;
  int best_owed = 0;
  for (int k = 0; k < player_count(); ++k) {
    const int seat = (seat_after(button()) + k) % player_count();
    const int owed = hole_owed(seat);
    if (owed > best_owed) {
      best_owed = owed;
      best = seat;
    }
  }
  return best;
}

int GameState::board_owed() const {
  return current_street().board_count - board_dealt_this_street_;
}

bool GameState::burn_owed() const {
  return current_street().burn && !burned_this_street_;
}

bool GameState::deals_blocked_by_burn() const {
  return current_street().burn && !burned_this_street_;
}

namespace {

// exposed-hand comparison key: group counts first, then ranks, mapped so that
// greater = opens the betting
std::vector<int> exposed_key(const std::vector<HoleCard>& hole, bool razz) {
  std::array<int, 13> count{};
  for (const HoleCard& hc : hole) {
    if (hc.face_up) count[value_of(hc.card.rank)]++;
  }
  std::vector<std::pair<int, int>> groups;
  for (int r = 0; r < 13; ++r) {
    if (count[r] == 0) continue;
    int v = r;
    if (razz) {
      // ace plays low and the *lowest* exposed hand opens
      v = r == value_of(Rank::kAce) ? -1 : r;
      v = -v;
    }
    groups.emplace_back(count[r], v);
  }
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a > b; });
  std::vector<int> key;
  if (razz) {
    // fewer matched cards is better for a low board, so invert group counts
    for (auto& [n, v] : groups) {
      for (int i = 0; i < n; ++i) key.push_back(v - 100 * n);
    }
  } else {
    for (auto& [n, v] : groups) {
      for (int i = 0; i < n; ++i) key.push_back(v + 100 * n);
    }
  }
  return key;
}

}  // namespace

std::optional<int> GameState::compute_bring_in_seat() const {
  // high games: lowest upcard brings in; razz-style: highest (ace low).
  // suits break rank ties, clubs < diamonds < hearts < spades.
  const bool razz = variant_.hand_types.size() == 1 &&
                    variant_.hand_types[0].lookup == LookupKind::kRegular;
  std::optional<int> pick;
  std::optional<std::pair<int, int>> pick_key;  // (rank value, suit)
  for (int seat = 0; seat < player_count(); ++seat) {
    const PlayerStatus& p = players_[static_cast<std::size_t>(seat)];
    if (!p.active || p.all_in()) continue;
    for (const HoleCard& hc : p.hole) {
      if (!hc.face_up) continue;
      int rv = value_of(hc.card.rank);
      if (razz) rv = hc.card.rank == Rank::kAce ? -1 : rv;
      std::pair<int, int> key{razz ? -rv : rv, razz ? -value_of(hc.card.suit)
                                                    : value_of(hc.card.suit)};
      if (!pick_key || key < *pick_key) {
        pick_key = key;
        pick = seat;
      }
      break;  // first upcard decides on third street
    }
  }
  return pick;
}

int GameState::betting_opener(const Street& s) const {
  switch (s.opener) {
    case OpenerRule::kPositionAfterBlinds: {
      int last_blind = -1;
      for (int i = 0; i < player_count(); ++i) {
        if (blind_config_[static_cast<std::size_t>(i)] > 0) last_blind = i;
      }
      if (last_blind >= 0) return seat_after(last_blind);
      return seat_after(button());
    }
    case OpenerRule::kBringIn: {
      if (auto seat = compute_bring_in_seat()) return *seat;
      return seat_after(button());
    }
    case OpenerRule::kBestExposedHand: {
      const bool razz = variant_.hand_types.size() == 1 &&
                        variant_.hand_types[0].lookup == LookupKind::kRegular;
      std::optional<int> best;
      std::vector<int> best_key;
      for (int seat = 0; seat < player_count(); ++seat) {
        const PlayerStatus& p = players_[static_cast<std::size_t>(seat)];
        if (!p.active) continue;
        auto key = exposed_key(p.hole, razz);
        if (!best || key > best_key) {
          best = seat;
          best_key = std::move(key);
        }
      }
      return best.value_or(seat_after(button()));
    }
    case OpenerRule::kFirstActiveAfterButton:
      return seat_after(button());
  }
  return seat_after(button());
}

std::vector<int> GameState::contenders() const {
  std::vector<int> out;
  for (int i = 0; i < player_count(); ++i) {
    if (players_[static_cast<std::size_t>(i)].active) out.push_back(i);
  }
  return out;
}

std::optional<Hand> GameState::player_hand(int seat,
                                           const HandTypeSpec& type) const {
  std::vector<Card> hole;
  for (const HoleCard& hc : players_[static_cast<std::size_t>(seat)].hole) {
    hole.push_back(hc.card);
  }
  return hand_from_game(type, hole, board_);
}

std::vector<std::vector<int>> GameState::pot_winners(const Pot& pot) const {
  std::vector<int> cand;
  for (int seat : pot.eligible) {
    if (players_[static_cast<std::size_t>(seat)].active) cand.push_back(seat);
  }
  std::vector<std::vector<int>> winners(variant_.hand_types.size());
  if (cand.empty()) {
    throw std::logic_error("pot with no one in contention");
  }
  if (cand.size() == 1) {
    winners[0] = cand;
    return winners;
  }
  for (std::size_t ti = 0; ti < variant_.hand_types.size(); ++ti) {
    const HandTypeSpec& type = variant_.hand_types[ti];
    std::optional<Hand> best;
    for (int seat : cand) {
      auto h = player_hand(seat, type);
      if (!h) continue;
      if (!best || compare_hands(*h, *best) == std::strong_ordering::greater) {
        best = h;
        winners[ti].assign(1, seat);
      } else if (compare_hands(*h, *best) == std::strong_ordering::equal) {
        winners[ti].push_back(seat);
      }
    }
  }
  if (winners[0].empty()) {
    throw std::logic_error("pot with no high-hand winner");
  }
  return winners;
}

bool GameState::wins_any_share(int seat) const {
  for (const Pot& pot : pots_) {
    if (std::find(pot.eligible.begin(), pot.eligible.end(), seat) ==
        pot.eligible.end()) {
      continue;
    }
    const auto winners = pot_winners(pot);
    for (const auto& side : winners) {
      if (std::find(side.begin(), side.end(), seat) != side.end()) return true;
    }
  }
  return false;
}

std::vector<int> GameState::killable_players() const {
  std::vector<int> out;
  for (int seat = 0; seat < player_count(); ++seat) {
    const PlayerStatus& p = players_[static_cast<std::size_t>(seat)];
    if (p.active && p.shown && !wins_any_share(seat)) out.push_back(seat);
  }
  return out;
}

bool GameState::auto_show_decision(int seat) const {
  if (forced_show_) return true;
  // show exactly when the hand beats or ties every shown hand for some pot
  for (const Pot& pot : pots_) {
    if (std::find(pot.eligible.begin(), pot.eligible.end(), seat) ==
        pot.eligible.end()) {
      continue;
    }
    for (const HandTypeSpec& type : variant_.hand_types) {
      auto mine = player_hand(seat, type);
      if (!mine) continue;
      bool ok = true;
      for (int q : pot.eligible) {
        const PlayerStatus& other = players_[static_cast<std::size_t>(q)];
        if (q == seat || !other.active || !other.shown) continue;
        auto theirs = player_hand(q, type);
        if (theirs && compare_hands(*mine, *theirs) == std::strong_ordering::less) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
  }
  return false;
}

std::optional<int> GameState::first_with_winnings() const {
  for (int i = 0; i < player_count(); ++i) {
    if (players_[static_cast<std::size_t>(i)].winnings > 0) return i;
  }
  return std::nullopt;
}

void GameState::remove_from_deck(Card c) {
  const auto it = std::find(deck_.begin(), deck_.end(), c);
  assert(it != deck_.end());
  deck_.erase(it);
}

void GameState::give_hole_card(int seat, Card c) {
  const Street& s = current_street();
  const auto idx = static_cast<std::size_t>(seat);
  const bool up =
      !s.draw && hole_dealt_this_street_[idx] >= s.hole_down;
  players_[idx].hole.push_back(HoleCard{c, up});
  hole_dealt_this_street_[idx] += 1;
  if (s.draw && replacements_owed_[idx] > 0) replacements_owed_[idx] -= 1;
}

// ------------------------------------------------------- phase machinery ---

void GameState::enter_step() {
  switch (phase()) {
    case Phase::kDealing: {
      burned_this_street_ = false;
      board_dealt_this_street_ = 0;
      std::fill(hole_dealt_this_street_.begin(), hole_dealt_this_street_.end(), 0);
      std::fill(replacements_owed_.begin(), replacements_owed_.end(), 0);
      draw_queue_.clear();
      if (current_street().draw && active_count() > 1) {
        const int start = seat_after(button());
        for (int k = 0; k < player_count(); ++k) {
          const int seat = (start + k) % player_count();
          if (players_[static_cast<std::size_t>(seat)].active) {
            draw_queue_.push_back(seat);
          }
        }
      }
      break;
    }
    case Phase::kBetting: {
      const Street& s = current_street();
      bet_queue_.clear();
      max_bet_to_ = max_posted_bet();
      min_raise_increment_ = effective_min_bet(s);
      raise_cap_ = s.max_raises;
      last_aggressor_.reset();
      std::fill(acted_since_full_raise_.begin(), acted_since_full_raise_.end(),
                false);
      raise_count_ = 0;
      if (max_bet_to_ > 0) {
        raise_count_ = 1;  // the posted blind counts as the opening bet
        for (std::size_t i = 2; i < blind_config_.size(); ++i) {
          if (blind_config_[i] > 0) raise_count_ += 1;  // straddles
        }
      }
      bring_in_seat_.reset();
      bring_in_open_ = false;
      if (s.opener == OpenerRule::kBringIn && bring_in_ > 0 &&
          max_bet_to_ == 0) {
        bring_in_seat_ = compute_bring_in_seat();
        bring_in_open_ = bring_in_seat_.has_value();
      }

      if (active_count() <= 1) break;
      std::vector<int> capable;
      for (int i = 0; i < player_count(); ++i) {
        const PlayerStatus& p = players_[static_cast<std::size_t>(i)];
        if (p.active && !p.all_in()) capable.push_back(i);
      }
      if (capable.empty()) break;
      if (capable.size() == 1) {
        // a lone capable player only acts when facing a live wager
        const int seat = capable[0];
        if (max_bet_to_ > players_[static_cast<std::size_t>(seat)].bet) {
          bet_queue_.push_back(seat);
        }
        break;
      }
      const int start = bring_in_open_ ? *bring_in_seat_ : betting_opener(s);
      for (int k = 0; k < player_count(); ++k) {
        const int seat = (start + k) % player_count();
        const PlayerStatus& p = players_[static_cast<std::size_t>(seat)];
        if (p.active && !p.all_in()) bet_queue_.push_back(seat);
      }
      break;
    }
    case Phase::kShowdown: {
      show_queue_.clear();
      forced_show_ = false;
      const auto cs = contenders();
      if (cs.size() <= 1) break;
      for (int seat : cs) {
        if (players_[static_cast<std::size_t>(seat)].all_in()) {
          forced_show_ = true;
          break;
        }
      }
      int start;
      if (last_aggressor_ &&
          players_[static_cast<std::size_t>(*last_aggressor_)].active) {
        start = *last_aggressor_;
      } else {
        start = betting_opener(variant_.streets.back());
      }
      for (int k = 0; k < player_count(); ++k) {
        const int seat = (start + k) % player_count();
        if (players_[static_cast<std::size_t>(seat)].active) {
          show_queue_.push_back(seat);
        }
      }
      break;
    }
    case Phase::kHandKilling:
      kill_pending_ = killable_players();
      break;
    default:
      break;
  }
}

bool GameState::step_has_pending() const {
  switch (phase()) {
    case Phase::kAntePosting:
      return first_owed_ante().has_value();
    case Phase::kBetCollection:
      for (const PlayerStatus& p : players_) {
        if (p.bet > 0) return true;
      }
      return false;
    case Phase::kBlindOrStraddlePosting:
      return first_owed_blind().has_value();
    case Phase::kDealing: {
      if (active_count() <= 1) return false;
      if (burn_owed()) return true;
      for (int i = 0; i < player_count(); ++i) {
        if (hole_owed(i) > 0) return true;
      }
      if (board_owed() > 0) return true;
      return !draw_queue_.empty();
    }
    case Phase::kBetting:
      return !bet_queue_.empty();
    case Phase::kShowdown:
      return !show_queue_.empty();
    case Phase::kHandKilling:
      return !kill_pending_.empty();
    case Phase::kChipsPushing:
      return !pots_.empty();
    case Phase::kChipsPulling:
      return first_with_winnings().has_value();
    case Phase::kTerminal:
      return false;
  }
  return false;
}

void GameState::settle() {
  for (;;) {
    if (phase() == Phase::kTerminal) return;
    if (!step_has_pending()) {
      ++step_;
      enter_step();
      continue;
    }
    if (!run_one_automatic()) return;
  }
}

bool GameState::run_one_automatic() {
  switch (phase()) {
    case Phase::kAntePosting:
      if (!automations_.ante_posting) return false;
      apply_post_ante(*first_owed_ante());
      return true;
    case Phase::kBetCollection:
      if (!automations_.bet_collection) return false;
      apply_collect_bets();
      return true;
    case Phase::kBlindOrStraddlePosting:
      if (!automations_.blind_or_straddle_posting) return false;
      apply_post_blind(*first_owed_blind());
      return true;
    case Phase::kDealing: {
      if (burn_owed()) {
        if (!automations_.card_burning) return false;
        apply_burn(deck_.front());
        return true;
      }
      if (const auto target = next_hole_target()) {
        if (!automations_.hole_dealing || deals_blocked_by_burn()) return false;
        const Card c = deck_.front();
        apply_deal_hole(*target, std::span<const Card>(&c, 1));
        return true;
      }
      if (board_owed() > 0) {
        if (!automations_.board_dealing || deals_blocked_by_burn()) return false;
        const Card c = deck_.front();
        apply_deal_board(std::span<const Card>(&c, 1));
        return true;
      }
      return false;  // a stand-pat/discard decision is pending
    }
    case Phase::kBetting:
      return false;
    case Phase::kShowdown: {
      if (!automations_.hole_cards_showing_or_mucking) return false;
      const int seat = show_queue_.front();
      apply_show_or_muck(seat, auto_show_decision(seat));
      return true;
    }
    case Phase::kHandKilling:
      if (!automations_.hand_killing) return false;
      apply_kill(kill_pending_.front());
      return true;
    case Phase::kChipsPushing:
      if (!automations_.chips_pushing) return false;
      apply_push();
      return true;
    case Phase::kChipsPulling:
      if (!automations_.chips_pulling) return false;
      apply_pull(*first_with_winnings());
      return true;
    case Phase::kTerminal:
      return false;
  }
  return false;
}

// ------------------------------------------------------------ ante/blind ---

void GameState::verify_post_ante(std::optional<int> player) const {
  if (phase() != Phase::kAntePosting) {
    throw RuleError("no ante posting is pending");
  }
  const auto seat = player ? player : first_owed_ante();
  if (!seat) throw RuleError("no player owes an ante");
  if (*seat < 0 || *seat >= player_count()) {
    throw RuleError("no such seat: " + std::to_string(*seat));
  }
  if (ante_due_[static_cast<std::size_t>(*seat)] <= 0) {
    throw RuleError(seat_str(*seat) + " owes no ante");
  }
}

bool GameState::can_post_ante(std::optional<int> player) const {
  try {
    verify_post_ante(player);
  } catch (const RuleError&) {
    return false;
  }
  return true;
}

void GameState::post_ante(std::optional<int> player) {
  verify_post_ante(player);
  apply_post_ante(player ? *player : *first_owed_ante());
  settle();
}

void GameState::apply_post_ante(int seat) {
  PlayerStatus& p = players_[static_cast<std::size_t>(seat)];
  const Chips amount = std::min(ante_due_[static_cast<std::size_t>(seat)], p.stack);
  p.stack -= amount;
  p.bet += amount;
  ante_due_[static_cast<std::size_t>(seat)] = 0;
  log_.push_back({ActionKind::kPostAnte, seat, {}, amount, -1});
}

void GameState::verify_collect_bets() const {
  if (phase() != Phase::kBetCollection) {
    throw RuleError("no bet collection is pending");
  }
}

bool GameState::can_collect_bets() const {
  try {
    verify_collect_bets();
  } catch (const RuleError&) {
    return false;
  }
  return true;
}

void GameState::collect_bets() {
  verify_collect_bets();
  apply_collect_bets();
  settle();
}

void GameState::apply_collect_bets() {
  // an uncalled portion of the final bet goes back to the bettor, not the pot
  if (in_street_phase()) {
    int top = -1;
    Chips best = 0, second = 0;
    bool unique = false;
    for (int i = 0; i < player_count(); ++i) {
      const Chips b = players_[static_cast<std::size_t>(i)].bet;
      if (b > best) {
        second = best;
        best = b;
        top = i;
        unique = true;
      } else if (b == best && b > 0) {
        unique = false;
      } else {
        second = std::max(second, b);
      }
    }
    if (unique && top >= 0 && best > second) {
      PlayerStatus& p = players_[static_cast<std::size_t>(top)];
      p.stack += best - second;
      p.bet = second;
    }
  }
  for (int i = 0; i < player_count(); ++i) {
    PlayerStatus& p = players_[static_cast<std::size_t>(i)];
    contributions_[static_cast<std::size_t>(i)] += p.bet;
    p.bet = 0;
  }
  std::vector<bool> live;
  for (const PlayerStatus& p : players_) live.push_back(p.active);
  pots_ = layered_pots(contributions_, live);
  log_.push_back({ActionKind::kCollectBets, -1, {}, total_pot(), -1});
}

void GameState::verify_post_blind_or_straddle(std::optional<int> player) const {
  if (phase() != Phase::kBlindOrStraddlePosting) {
    throw RuleError("no blind or straddle posting is pending");
  }
  const auto seat = player ? player : first_owed_blind();
  if (!seat) throw RuleError("no player owes a blind or straddle");
  if (*seat < 0 || *seat >= player_count()) {
    throw RuleError("no such seat: " + std::to_string(*seat));
  }
  const auto idx = static_cast<std::size_t>(*seat);
  if (blind_due_[idx] <= 0 || players_[idx].stack <= 0) {
    throw RuleError(seat_str(*seat) + " owes no blind or straddle");
  }
}

bool GameState::can_post_blind_or_straddle(std::optional<int> player) const {
  try {
    verify_post_blind_or_straddle(player);
  } catch (const RuleError&) {
    return false;
  }
  return true;
}

void GameState::post_blind_or_straddle(std::optional<int> player) {
  verify_post_blind_or_straddle(player);
  apply_post_blind(player ? *player : *first_owed_blind());
  settle();
}

void GameState::apply_post_blind(int seat) {
  PlayerStatus& p = players_[static_cast<std::size_t>(seat)];
  const Chips amount = std::min(blind_due_[static_cast<std::size_t>(seat)], p.stack);
  p.stack -= amount;
  p.bet += amount;
  blind_due_[static_cast<std::size_t>(seat)] = 0;
  log_.push_back({ActionKind::kPostBlindOrStraddle, seat, {}, amount, -1});
}

// ---------------------------------------------------------------- dealing ---

void GameState::verify_burn_card(std::optional<Card> card) const {
  if (phase() != Phase::kDealing) throw RuleError("not in a dealing phase");
  if (!current_street().burn) {
    throw RuleError("this street does not burn a card");
  }
  if (burned_this_street_) throw RuleError("already burned this street");
  if (deck_.empty()) throw RuleError("deck is exhausted");
  if (card && std::find(deck_.begin(), deck_.end(), *card) == deck_.end()) {
    throw RuleError("card " + to_string(*card) + " is not in the deck");
  }
}

bool GameState::can_burn_card(std::optional<Card> card) const {
  try {
    verify_burn_card(card);
  } catch (const RuleError&) {
    return false;
  }
  return true;
}

void GameState::burn_card(std::optional<Card> card) {
  verify_burn_card(card);
  apply_burn(card ? *card : deck_.front());
  settle();
}

void GameState::apply_burn(Card c) {
  remove_from_deck(c);
  burned_.push_back(c);
  burned_this_street_ = true;
  log_.push_back({ActionKind::kBurnCard, -1, {c}, 0, -1});
}

void GameState::verify_deal_hole(std::span<const Card> cards,
                                 std::optional<int> player) const {
  if (phase() != Phase::kDealing) throw RuleError("not in a dealing phase");
  const auto target = player ? player : next_hole_target();
  if (!target) throw RuleError("no hole cards are owed");
  if (*target < 0 || *target >= player_count()) {
    throw RuleError("no such seat: " + std::to_string(*target));
  }
  const int owed = hole_owed(*target);
  if (owed <= 0) {
    throw RuleError(seat_str(*target) + " is not owed hole cards");
  }
  if (deals_blocked_by_burn()) throw RuleError("burn before dealing");
  if (cards.empty()) {
    if (deck_.empty()) throw RuleError("deck is exhausted");
    return;
  }
  if (static_cast<int>(cards.size()) > owed) {
    throw RuleError("dealt " + std::to_string(cards.size()) + " cards but " +
                    seat_str(*target) + " is owed " + std::to_string(owed));
  }
  for (std::size_t i = 0; i < cards.size(); ++i) {
    for (std::size_t j = i + 1; j < cards.size(); ++j) {
      if (cards[i] == cards[j]) {
        throw RuleError("duplicate card " + to_string(cards[i]));
      }
    }
    if (std::find(deck_.begin(), deck_.end(), cards[i]) == deck_.end()) {
      throw RuleError("card " + to_string(cards[i]) + " is not in the deck");
    }
  }
}

bool GameState::can_deal_hole(std::span<const Card> cards,
                              std::optional<int> player) const {
  try {
    verify_deal_hole(cards, player);
  } catch (const RuleError&) {
    return false;
  }
  return true;
}

void GameState::deal_hole(std::span<const Card> cards,
                          std::optional<int> player) {
  verify_deal_hole(cards, player);
  const int target = player ? *player : *next_hole_target();
  if (cards.empty()) {
    const Card c = deck_.front();
    apply_deal_hole(target, std::span<const Card>(&c, 1));
  } else {
    apply_deal_hole(target, cards);
  }
  settle();
}

void GameState::deal_hole(std::string_view cards, std::optional<int> player) {
  const auto parsed = parse_cards(cards);
  deal_hole(std::span<const Card>(parsed), player);
}

void GameState::apply_deal_hole(int seat, std::span<const Card> cards) {
  for (Card c : cards) {
    remove_from_deck(c);
    give_hole_card(seat, c);
  }
  log_.push_back({ActionKind::kDealHole, seat,
                  std::vector<Card>(cards.begin(), cards.end()), 0, -1});
}

void GameState::verify_deal_board(std::span<const Card> cards) const {
  if (phase() != Phase::kDealing) throw RuleError("not in a dealing phase");
  const int owed = board_owed();
  if (owed <= 0) throw RuleError("the board is complete for this street");
  if (deals_blocked_by_burn()) throw RuleError("burn before dealing");
  if (cards.empty()) {
    if (deck_.empty()) throw RuleError("deck is exhausted");
    return;
  }
  if (static_cast<int>(cards.size()) > owed) {
    throw RuleError("dealt " + std::to_string(cards.size()) +
                    " board cards but the street takes " + std::to_string(owed));
  }
  for (std::size_t i = 0; i < cards.size(); ++i) {
    for (std::size_t j = i + 1; j < cards.size(); ++j) {
      if (cards[i] == cards[j]) {
        throw RuleError("duplicate card " + to_string(cards[i]));
      }
    }
    if (std::find(deck_.begin(), deck_.end(), cards[i]) == deck_.end()) {
      throw RuleError("card " + to_string(cards[i]) + " is not in the deck");
    }
  }
}

bool GameState::can_deal_board(std::span<const Card> cards) const {
  try {
    verify_deal_board(cards);
  } catch (const RuleError&) {
    return false;
  }
  return true;
}

void GameState::deal_board(std::span<const Card> cards) {
  verify_deal_board(cards);
  if (cards.empty()) {
    const Card c = deck_.front();
    apply_deal_board(std::span<const Card>(&c, 1));
  } else {
    apply_deal_board(cards);
  }
  settle();
}

void GameState::deal_board(std::string_view cards) {
  const auto parsed = parse_cards(cards);
  deal_board(std::span<const Card>(parsed));
}

void GameState::apply_deal_board(std::span<const Card> cards) {
  for (Card c : cards) {
    remove_from_deck(c);
    board_.push_back(c);
    board_dealt_this_street_ += 1;
  }
  log_.push_back({ActionKind::kDealBoard, -1,
                  std::vector<Card>(cards.begin(), cards.end()), 0, -1});
}

void GameState::verify_stand_pat_or_discard(std::span<const Card> discards) const {
  if (phase() != Phase::kDealing || !in_street_phase() ||
      !current_street().draw) {
    throw RuleError("no draw is pending");
  }
  if (draw_queue_.empty()) throw RuleError("every player has drawn");
  if (std::accumulate(replacements_owed_.begin(), replacements_owed_.end(), 0) >
      0) {
    throw RuleError("replacement cards must be dealt first");
  }
  const int seat = draw_queue_.front();
  const auto& hole = players_[static_cast<std::size_t>(seat)].hole;
  for (std::size_t i = 0; i < discards.size(); ++i) {
    for (std::size_t j = i + 1; j < discards.size(); ++j) {
      if (discards[i] == discards[j]) {
        throw RuleError("duplicate card " + to_string(discards[i]));
      }
    }
    const bool held =
        std::any_of(hole.begin(), hole.end(), [&](const HoleCard& hc) {
          return hc.card == discards[i];
        });
    if (!held) {
      throw RuleError(seat_str(seat) + " does not hold " +
                      to_string(discards[i]));
    }
  }
}

bool GameState::can_stand_pat_or_discard(std::span<const Card> discards) const {
  try {
    verify_stand_pat_or_discard(discards);
  } catch (const RuleError&) {
    return false;
  }
  return true;
}

void GameState::stand_pat_or_discard(std::span<const Card> discards) {
  verify_stand_pat_or_discard(discards);
  apply_stand_pat_or_discard(discards);
  settle();
}

void GameState::stand_pat_or_discard(std::string_view discards) {
  const auto parsed = parse_cards(discards);
  stand_pat_or_discard(std::span<const Card>(parsed));
}

void GameState::apply_stand_pat_or_discard(std::span<const Card> discards) {
  const int seat = draw_queue_.front();
  draw_queue_.pop_front();
  auto& hole = players_[static_cast<std::size_t>(seat)].hole;
  for (Card c : discards) {
    const auto it =
        std::find_if(hole.begin(), hole.end(),
                     [&](const HoleCard& hc) { return hc.card == c; });
    mucked_.push_back(it->card);
    hole.erase(it);
  }
  replacements_owed_[static_cast<std::size_t>(seat)] =
      static_cast<int>(discards.size());
  log_.push_back({ActionKind::kStandPatOrDiscard, seat,
                  std::vector<Card>(discards.begin(), discards.end()), 0, -1});
}

// ---------------------------------------------------------------- betting ---

void GameState::verify_fold() const {
  if (phase() != Phase::kBetting || bet_queue_.empty()) {
    throw RuleError("no betting action is pending");
  }
  const int seat = bet_queue_.front();
  if (max_bet_to_ <= players_[static_cast<std::size_t>(seat)].bet) {
    throw RuleError("nothing to fold against: checking is free");
  }
}

bool GameState::can_fold() const {
  try {
    verify_fold();
  } catch (const RuleError&) {
    return false;
  }
  return true;
}

void GameState::fold() {
  verify_fold();
  apply_fold();
  settle();
}

void GameState::apply_fold() {
  const int seat = bet_queue_.front();
  bet_queue_.pop_front();
  PlayerStatus& p = players_[static_cast<std::size_t>(seat)];
  p.active = false;
  for (const HoleCard& hc : p.hole) mucked_.push_back(hc.card);
  p.hole.clear();
  if (active_count() <= 1) bet_queue_.clear();
  log_.push_back({ActionKind::kFold, seat, {}, 0, -1});
}

void GameState::verify_check_or_call() const {
  if (phase() != Phase::kBetting || bet_queue_.empty()) {
    throw RuleError("no betting action is pending");
  }
  const int seat = bet_queue_.front();
  if (bring_in_open_ && seat == *bring_in_seat_ && max_bet_to_ == 0) {
    throw RuleError("the bring-in must be posted or completed first");
  }
}

bool GameState::can_check_or_call() const {
  try {
    verify_check_or_call();
  } catch (const RuleError&) {
    return false;
  }
  return true;
}

void GameState::check_or_call() {
  verify_check_or_call();
  apply_check_or_call();
  settle();
}

void GameState::apply_check_or_call() {
  const int seat = bet_queue_.front();
  bet_queue_.pop_front();
  PlayerStatus& p = players_[static_cast<std::size_t>(seat)];
  const Chips pay = std::min(max_bet_to_ - p.bet, p.stack);
  p.stack -= pay;
  p.bet += pay;
  acted_since_full_raise_[static_cast<std::size_t>(seat)] = true;
  log_.push_back({ActionKind::kCheckOrCall, seat, {}, pay, -1});
}

void GameState::verify_post_bring_in() const {
  if (phase() != Phase::kBetting || bet_queue_.empty()) {
    throw RuleError("no betting action is pending");
  }
  if (bring_in_ == 0 ||
      current_street().opener != OpenerRule::kBringIn) {
    throw RuleError("this game has no bring-in");
  }
  if (!bring_in_open_) throw RuleError("the bring-in is no longer open");
  if (bet_queue_.front() != *bring_in_seat_) {
    throw RuleError("only " + seat_str(*bring_in_seat_) +
                    " may post the bring-in");
  }
}

bool GameState::can_post_bring_in() const {
  try {
    verify_post_bring_in();
  } catch (const RuleError&) {
    return false;
  }
  return true;
}

void GameState::post_bring_in() {
  verify_post_bring_in();
  apply_post_bring_in();
  settle();
}

void GameState::apply_post_bring_in() {
  const int seat = bet_queue_.front();
  bet_queue_.pop_front();
  PlayerStatus& p = players_[static_cast<std::size_t>(seat)];
  const Chips amount = std::min(bring_in_, p.stack);
  p.stack -= amount;
  p.bet += amount;
  max_bet_to_ = std::max(max_bet_to_, amount);
  bring_in_open_ = false;
  acted_since_full_raise_[static_cast<std::size_t>(seat)] = true;
  log_.push_back({ActionKind::kPostBringIn, seat, {}, amount, -1});
}

std::optional<Chips> GameState::min_completion_bet_or_raise_to() const {
  if (phase() != Phase::kBetting || bet_queue_.empty()) return std::nullopt;
  const int seat = bet_queue_.front();
  const auto idx = static_cast<std::size_t>(seat);
  if (raise_cap_ && raise_count_ >= *raise_cap_) return std::nullopt;
  if (acted_since_full_raise_[idx]) return std::nullopt;
  const PlayerStatus& p = players_[idx];
  const Chips all_in = p.bet + p.stack;
  if (all_in <= max_bet_to_) return std::nullopt;

  Chips lo;
  if (variant_.structure == BettingStructure::kFixedLimit) {
    const Chips size = effective_min_bet(current_street());
    lo = max_bet_to_ < size ? size : max_bet_to_ + size;
  } else {
    lo = max_bet_to_ == 0 ? effective_min_bet(current_street())
                          : max_bet_to_ + min_raise_increment_;
  }
  return std::min(lo, all_in);
}

std::optional<Chips> GameState::max_completion_bet_or_raise_to() const {
  const auto lo = min_completion_bet_or_raise_to();
  if (!lo) return std::nullopt;
  const int seat = bet_queue_.front();
  const PlayerStatus& p = players_[static_cast<std::size_t>(seat)];
  const Chips all_in = p.bet + p.stack;
  switch (variant_.structure) {
    case BettingStructure::kNoLimit:
      return all_in;
    case BettingStructure::kPotLimit: {
      Chips collected = 0;
      for (const Pot& pot : pots_) collected += pot.amount;
      Chips on_table = 0;
      for (const PlayerStatus& q : players_) on_table += q.bet;
      const Chips call_amount = max_bet_to_ - p.bet;
      const Chips pot_cap = max_bet_to_ + collected + on_table + call_amount;
      return std::max(*lo, std::min(all_in, pot_cap));
    }
    case BettingStructure::kFixedLimit:
      return *lo;  // exactly one legal amount
  }
  return *lo;
}

void GameState::verify_complete_bet_or_raise_to(Chips amount) const {
  if (phase() != Phase::kBetting || bet_queue_.empty()) {
    throw RuleError("no betting action is pending");
  }
  const int seat = bet_queue_.front();
  const auto idx = static_cast<std::size_t>(seat);
  if (raise_cap_ && raise_count_ >= *raise_cap_) {
    throw RuleError("the bet/raise cap for this street is reached");
  }
  if (acted_since_full_raise_[idx]) {
    throw RuleError("betting is not reopened for " + seat_str(seat));
  }
  const PlayerStatus& p = players_[idx];
  const Chips all_in = p.bet + p.stack;
  if (amount <= max_bet_to_) {
    throw RuleError("a completion, bet or raise must exceed the current wager of " +
                    std::to_string(max_bet_to_));
  }
  if (all_in <= max_bet_to_) {
    throw RuleError(seat_str(seat) + " cannot cover a raise");
  }
  const auto lo = min_completion_bet_or_raise_to();
  const auto hi = max_completion_bet_or_raise_to();
  if (!lo || !hi) throw RuleError("no completion, bet or raise is available");
  if (amount < *lo) {
    throw RuleError("amount " + std::to_string(amount) +
                    " is below the minimum of " + std::to_string(*lo));
  }
  if (amount > *hi) {
    throw RuleError("amount " + std::to_string(amount) +
                    " is above the maximum of " + std::to_string(*hi));
  }
  if (variant_.structure == BettingStructure::kFixedLimit && amount != *lo) {
    throw RuleError("fixed-limit bets are exactly " + std::to_string(*lo));
  }
}

bool GameState::can_complete_bet_or_raise_to(Chips amount) const {
  try {
    verify_complete_bet_or_raise_to(amount);
  } catch (const RuleError&) {
    return false;
  }
  return true;
}

void GameState::complete_bet_or_raise_to(Chips amount) {
  verify_complete_bet_or_raise_to(amount);
  apply_complete_bet_or_raise_to(amount);
  settle();
}

void GameState::apply_complete_bet_or_raise_to(Chips amount) {
  const int seat = bet_queue_.front();
  const auto idx = static_cast<std::size_t>(seat);
  PlayerStatus& p = players_[idx];
  p.stack -= amount - p.bet;
  p.bet = amount;

  // a completion of a short forced bet reopens the betting like a full bet
  const Chips eff = effective_min_bet(current_street());
  const bool full_raise = max_bet_to_ == 0 ||
                          amount - max_bet_to_ >= min_raise_increment_ ||
                          (max_bet_to_ < eff && amount >= eff);
  if (full_raise) {
    min_raise_increment_ = std::max(min_raise_increment_, amount - max_bet_to_);
    for (std::size_t q = 0; q < acted_since_full_raise_.size(); ++q) {
      acted_since_full_raise_[q] = q == idx;
    }
  } else {
    acted_since_full_raise_[idx] = true;
  }
  max_bet_to_ = amount;
  raise_count_ += 1;
  last_aggressor_ = seat;
  bring_in_open_ = false;

  bet_queue_.clear();
  for (int k = 1; k < player_count(); ++k) {
    const int s = (seat + k) % player_count();
    const PlayerStatus& q = players_[static_cast<std::size_t>(s)];
    if (q.active && !q.all_in()) bet_queue_.push_back(s);
  }
  log_.push_back({ActionKind::kCompleteBetOrRaiseTo, seat, {}, amount, -1});
}

// --------------------------------------------------------------- showdown ---

void GameState::verify_show_or_muck_hole_cards(std::optional<bool> show,
                                               std::optional<int> player) const {
  if (phase() != Phase::kShowdown || show_queue_.empty()) {
    throw RuleError("no showdown action is pending");
  }
  const int seat = player ? *player : show_queue_.front();
  if (seat != show_queue_.front()) {
    throw RuleError("it is not " + seat_str(seat) + "'s turn to show or muck");
  }
  if (show && !*show && forced_show_) {
    throw RuleError("all-in showdown: hands must be shown");
  }
}

bool GameState::can_show_or_muck_hole_cards(std::optional<bool> show,
                                            std::optional<int> player) const {
  try {
    verify_show_or_muck_hole_cards(show, player);
  } catch (const RuleError&) {
    return false;
  }
  return true;
}

void GameState::show_or_muck_hole_cards(std::optional<bool> show,
                                        std::optional<int> player) {
  verify_show_or_muck_hole_cards(show, player);
  const int seat = player ? *player : show_queue_.front();
  apply_show_or_muck(seat, show ? *show : auto_show_decision(seat));
  settle();
}

void GameState::apply_show_or_muck(int seat, bool show) {
  show_queue_.pop_front();
  PlayerStatus& p = players_[static_cast<std::size_t>(seat)];
  if (show) {
    for (HoleCard& hc : p.hole) hc.face_up = true;
    p.shown = true;
  } else {
    for (const HoleCard& hc : p.hole) mucked_.push_back(hc.card);
    p.hole.clear();
    p.active = false;
    if (active_count() <= 1) show_queue_.clear();
  }
  log_.push_back({ActionKind::kShowOrMuck, seat, {}, 0, show ? 1 : 0});
}

// ------------------------------------------------------- killing/pushing ---

void GameState::verify_kill_hand(std::optional<int> player) const {
  if (phase() != Phase::kHandKilling || kill_pending_.empty()) {
    throw RuleError("no hand killing is pending");
  }
  const int seat = player ? *player : kill_pending_.front();
  if (std::find(kill_pending_.begin(), kill_pending_.end(), seat) ==
      kill_pending_.end()) {
    throw RuleError(seat_str(seat) + "'s hand cannot be killed");
  }
}

bool GameState::can_kill_hand(std::optional<int> player) const {
  try {
    verify_kill_hand(player);
  } catch (const RuleError&) {
    return false;
  }
  return true;
}

void GameState::kill_hand(std::optional<int> player) {
  verify_kill_hand(player);
  apply_kill(player ? *player : kill_pending_.front());
  settle();
}

void GameState::apply_kill(int seat) {
  PlayerStatus& p = players_[static_cast<std::size_t>(seat)];
  for (const HoleCard& hc : p.hole) mucked_.push_back(hc.card);
  p.hole.clear();
  p.active = false;
  std::erase(kill_pending_, seat);
  log_.push_back({ActionKind::kKillHand, seat, {}, 0, -1});
}

void GameState::verify_push_chips() const {
  if (phase() != Phase::kChipsPushing || pots_.empty()) {
    throw RuleError("no chips pushing is pending");
  }
}

bool GameState::can_push_chips() const {
  try {
    verify_push_chips();
  } catch (const RuleError&) {
    return false;
  }
  return true;
}

void GameState::push_chips() {
  verify_push_chips();
  apply_push();
  settle();
}

void GameState::apply_push() {
  // outermost side pot first
  const Pot pot = pots_.back();
  pots_.pop_back();
  const auto winners = pot_winners(pot);
  const bool split = winners.size() > 1 && !winners[1].empty();
  const Chips high_amount = split ? (pot.amount + 1) / 2 : pot.amount;
  const Chips low_amount = pot.amount - high_amount;

  auto distribute = [&](const std::vector<int>& side, Chips amount) {
    if (side.empty() || amount == 0) return;
    // position order after the button, odd chips one per winner from the front
    std::vector<int> order = side;
    const int start = seat_after(button());
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      const int ra = (a - start + player_count()) % player_count();
      const int rb = (b - start + player_count()) % player_count();
      return ra < rb;
    });
    const Chips share = amount / static_cast<Chips>(order.size());
    Chips odd = amount % static_cast<Chips>(order.size());
    for (int seat : order) {
      Chips won = share;
      if (odd > 0) {
        won += 1;
        odd -= 1;
      }
      players_[static_cast<std::size_t>(seat)].winnings += won;
    }
  };
  distribute(winners[0], high_amount);
  if (split) distribute(winners[1], low_amount);
  log_.push_back({ActionKind::kPushChips, -1, {}, pot.amount, -1});
}

void GameState::verify_pull_chips(std::optional<int> player) const {
  if (phase() != Phase::kChipsPulling) {
    throw RuleError("no chips pulling is pending");
  }
  const auto seat = player ? player : first_with_winnings();
  if (!seat) throw RuleError("no player has chips to pull");
  if (*seat < 0 || *seat >= player_count() ||
      players_[static_cast<std::size_t>(*seat)].winnings <= 0) {
    throw RuleError(seat_str(seat.value_or(-1)) + " has nothing to pull");
  }
}

bool GameState::can_pull_chips(std::optional<int> player) const {
  try {
    verify_pull_chips(player);
  } catch (const RuleError&) {
    return false;
  }
  return true;
}

void GameState::pull_chips(std::optional<int> player) {
  verify_pull_chips(player);
  apply_pull(player ? *player : *first_with_winnings());
  settle();
}

void GameState::apply_pull(int seat) {
  PlayerStatus& p = players_[static_cast<std::size_t>(seat)];
  p.stack += p.winnings;
  p.winnings = 0;
  log_.push_back({ActionKind::kPullChips, seat, {}, 0, -1});
}

}  // namespace cardroom
