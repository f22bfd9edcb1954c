#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cardroom/cards.hpp"
#include "cardroom/variants.hpp"

namespace cardroom {

/// Raised by every verify_* method on a rule violation. The matching
/// operation runs its verify first, so a failing operation leaves the state
/// untouched.
class RuleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Phase {
  kAntePosting,
  kBetCollection,
  kBlindOrStraddlePosting,
  kDealing,
  kBetting,
  kShowdown,
  kHandKilling,
  kChipsPushing,
  kChipsPulling,
  kTerminal,
};

std::string_view to_string(Phase p);

/// Which operations the state runs by itself. Only these ten are ever
/// automatable; standing pat/discarding, folding, checking/calling, bring-in
/// posting and completion/bet/raise always need a caller.
struct AutomationSet {
  bool ante_posting = false;
  bool bet_collection = false;
  bool blind_or_straddle_posting = false;
  bool card_burning = false;
  bool hole_dealing = false;
  bool board_dealing = false;
  bool hole_cards_showing_or_mucking = false;
  bool hand_killing = false;
  bool chips_pushing = false;
  bool chips_pulling = false;

  static AutomationSet all();
  static AutomationSet none() { return {}; }
  /// Everything except hole/board dealing; the profile replay scripts use.
  static AutomationSet all_except_dealing();

  bool operator==(const AutomationSet&) const = default;
};

/// One pot layer. Side pots nest: each layer's eligible set is a subset of
/// the previous layer's.
struct Pot {
  Chips amount = 0;
  std::vector<int> eligible;

  bool operator==(const Pot&) const = default;
};

/// Splits cumulative contributions into main + side pots. Layers are cut at
/// every distinct contribution level; adjacent layers with identical eligible
/// sets merge. Chips from players no longer in contention stay in the layers
/// they reached.
std::vector<Pot> layered_pots(std::span<const Chips> contributions,
                              std::span<const bool> in_contention);

struct HoleCard {
  Card card;
  bool face_up = false;

  bool operator==(const HoleCard&) const = default;
};

struct PlayerStatus {
  Chips stack = 0;
  Chips bet = 0;
  std::vector<HoleCard> hole;
  bool active = true;  // false once folded, mucked or killed
  bool shown = false;
  Chips winnings = 0;  // pushed but not yet pulled

  bool all_in() const { return active && stack == 0; }
  bool operator==(const PlayerStatus&) const = default;
};

/// What happened, in order. Cards are the cards actually moved, so a log
/// replays identically without the original seed.
enum class ActionKind {
  kPostAnte,
  kCollectBets,
  kPostBlindOrStraddle,
  kBurnCard,
  kDealHole,
  kDealBoard,
  kStandPatOrDiscard,
  kFold,
  kCheckOrCall,
  kPostBringIn,
  kCompleteBetOrRaiseTo,
  kShowOrMuck,
  kKillHand,
  kPushChips,
  kPullChips,
};

std::string_view to_string(ActionKind k);

struct LoggedAction {
  ActionKind kind;
  int player = -1;
  std::vector<Card> cards;
  Chips amount = 0;  // raise-to amount, or the pot total after a collection
  int show = -1;     // 1 = shown, 0 = mucked

  bool operator==(const LoggedAction&) const = default;
};

/// A full table state: deck, board, discard piles, per-seat chips and cards,
/// pots and the current phase. Operations come in triplets: verify_x throws
/// RuleError describing any violation, can_x reports whether verify_x would
/// pass, and x runs verify_x first and then applies the change. After a
/// successful operation the state advances phases, skipping phases with
/// nothing to do, and runs every automated operation until a manual one is
/// pending or the hand is over.
///
/// Seats are clockwise: seat 0 posts the small blind, seat 1 the big blind,
/// and the last seat is the button (heads-up: seat 0 is the button and posts
/// the small blind). Single-owner mutable value; copy for snapshots.
class GameState {
 public:
  /// Either a shuffle seed or a preset full deck order.
  struct DeckSource {
    static DeckSource seeded(std::uint64_t seed);
    static DeckSource preset(std::vector<Card> deck);

    std::optional<std::uint64_t> seed;
    std::vector<Card> deck;
  };

  /// antes: one value (uniform) or one per seat. blinds_or_straddles: per
  /// seat from the small blind on; shorter vectors pad with zeros. At least
  /// one forced bet must be nonzero. Throws std::invalid_argument on bad
  /// configuration.
  static GameState create(const AutomationSet& automations,
                          VariantDefinition variant, std::vector<Chips> antes,
                          std::vector<Chips> blinds_or_straddles,
                          Chips bring_in, std::vector<Chips> starting_stacks,
                          int player_count, DeckSource deck_source);

  // --- ante posting ---
  void verify_post_ante(std::optional<int> player = {}) const;
  bool can_post_ante(std::optional<int> player = {}) const;
  void post_ante(std::optional<int> player = {});

  // --- bet collection ---
  void verify_collect_bets() const;
  bool can_collect_bets() const;
  void collect_bets();

  // --- blind / straddle posting ---
  void verify_post_blind_or_straddle(std::optional<int> player = {}) const;
  bool can_post_blind_or_straddle(std::optional<int> player = {}) const;
  void post_blind_or_straddle(std::optional<int> player = {});

  // --- dealing ---
  void verify_burn_card(std::optional<Card> card = {}) const;
  bool can_burn_card(std::optional<Card> card = {}) const;
  void burn_card(std::optional<Card> card = {});

  void verify_deal_hole(std::span<const Card> cards = {},
                        std::optional<int> player = {}) const;
  bool can_deal_hole(std::span<const Card> cards = {},
                     std::optional<int> player = {}) const;
  void deal_hole(std::span<const Card> cards = {},
                 std::optional<int> player = {});
  void deal_hole(std::string_view cards, std::optional<int> player = {});

  void verify_deal_board(std::span<const Card> cards = {}) const;
  bool can_deal_board(std::span<const Card> cards = {}) const;
  void deal_board(std::span<const Card> cards = {});
  void deal_board(std::string_view cards);

  void verify_stand_pat_or_discard(std::span<const Card> discards = {}) const;
  bool can_stand_pat_or_discard(std::span<const Card> discards = {}) const;
  void stand_pat_or_discard(std::span<const Card> discards = {});
  void stand_pat_or_discard(std::string_view discards);

  // --- betting ---
  void verify_fold() const;
  bool can_fold() const;
  void fold();

  void verify_check_or_call() const;
  bool can_check_or_call() const;
  void check_or_call();

  void verify_post_bring_in() const;
  bool can_post_bring_in() const;
  void post_bring_in();

  void verify_complete_bet_or_raise_to(Chips amount) const;
  bool can_complete_bet_or_raise_to(Chips amount) const;
  void complete_bet_or_raise_to(Chips amount);

  // --- showdown ---
  void verify_show_or_muck_hole_cards(std::optional<bool> show = {},
                                      std::optional<int> player = {}) const;
  bool can_show_or_muck_hole_cards(std::optional<bool> show = {},
                                   std::optional<int> player = {}) const;
  /// Empty `show` resolves automatically: forced in all-in pots, otherwise
  /// show exactly when the hand beats or ties every hand shown so far for
  /// some pot the player is eligible for.
  void show_or_muck_hole_cards(std::optional<bool> show = {},
                               std::optional<int> player = {});

  // --- hand killing ---
  void verify_kill_hand(std::optional<int> player = {}) const;
  bool can_kill_hand(std::optional<int> player = {}) const;
  void kill_hand(std::optional<int> player = {});

  // --- chips pushing / pulling ---
  void verify_push_chips() const;
  bool can_push_chips() const;
  void push_chips();

  void verify_pull_chips(std::optional<int> player = {}) const;
  bool can_pull_chips(std::optional<int> player = {}) const;
  void pull_chips(std::optional<int> player = {});

  // --- read-only views ---
  Phase phase() const;
  bool is_terminal() const { return phase() == Phase::kTerminal; }
  std::optional<int> street_index() const;
  const VariantDefinition& variant() const { return variant_; }
  const AutomationSet& automations() const { return automations_; }
  int player_count() const { return static_cast<int>(players_.size()); }
  const std::vector<PlayerStatus>& players() const { return players_; }
  const std::vector<Card>& deck() const { return deck_; }
  const std::vector<Card>& board() const { return board_; }
  const std::vector<Card>& burned() const { return burned_; }
  const std::vector<Card>& mucked() const { return mucked_; }
  const std::vector<Pot>& pots() const { return pots_; }
  Chips total_pot() const;
  std::vector<Chips> stacks() const;
  std::vector<Chips> bets() const;

  /// Seat due to act in the current phase, if any.
  std::optional<int> actor() const;

  /// Legal completion/bet/raise bounds for the actor, when betting.
  std::optional<Chips> min_completion_bet_or_raise_to() const;
  std::optional<Chips> max_completion_bet_or_raise_to() const;

  Chips chip_total() const { return chip_total_; }
  const std::vector<Card>& initial_deck() const { return initial_deck_; }
  const std::vector<LoggedAction>& action_log() const { return log_; }
  const std::vector<Chips>& ante_config() const { return ante_config_; }
  const std::vector<Chips>& blind_config() const { return blind_config_; }
  Chips bring_in() const { return bring_in_; }
  const std::vector<Chips>& starting_stacks() const { return starting_stacks_; }

  bool operator==(const GameState&) const = default;

 private:
  GameState() = default;

  struct PlanStep {
    Phase phase;
    int street = -1;

    bool operator==(const PlanStep&) const = default;
  };

  const Street& street(int i) const {
    return variant_.streets[static_cast<std::size_t>(i)];
  }
  const Street& current_street() const { return street(plan_[step_].street); }
  bool in_street_phase() const { return plan_[step_].street >= 0; }

  int active_count() const;
  int seat_after(int seat) const;
  int button() const;
  Chips effective_min_bet(const Street& s) const;
  Chips max_posted_bet() const;
  std::optional<int> first_owed_ante() const;
  std::optional<int> first_owed_blind() const;
  int hole_owed(int seat) const;
  std::optional<int> next_hole_target() const;
  int board_owed() const;
  bool burn_owed() const;
  bool deals_blocked_by_burn() const;
  std::optional<int> compute_bring_in_seat() const;
  int betting_opener(const Street& s) const;
  std::vector<int> contenders() const;
  std::optional<Hand> player_hand(int seat, const HandTypeSpec& type) const;
  std::vector<std::vector<int>> pot_winners(const Pot& pot) const;
  bool wins_any_share(int seat) const;
  std::vector<int> killable_players() const;
  bool auto_show_decision(int seat) const;
  std::optional<int> first_with_winnings() const;
  void remove_from_deck(Card c);
  void give_hole_card(int seat, Card c);
  void enter_step();
  bool step_has_pending() const;
  void settle();
  bool run_one_automatic();

  void apply_post_ante(int seat);
  void apply_collect_bets();
  void apply_post_blind(int seat);
  void apply_burn(Card c);
  void apply_deal_hole(int seat, std::span<const Card> cards);
  void apply_deal_board(std::span<const Card> cards);
  void apply_stand_pat_or_discard(std::span<const Card> discards);
  void apply_fold();
  void apply_check_or_call();
  void apply_post_bring_in();
  void apply_complete_bet_or_raise_to(Chips amount);
  void apply_show_or_muck(int seat, bool show);
  void apply_kill(int seat);
  void apply_push();
  void apply_pull(int seat);

  VariantDefinition variant_;
  AutomationSet automations_;
  std::vector<Chips> ante_config_;   // as configured; the *_due_ copies drain
  std::vector<Chips> ante_due_;
  std::vector<Chips> blind_config_;
  std::vector<Chips> blind_due_;
  std::vector<Chips> starting_stacks_;
  Chips bring_in_ = 0;
  std::vector<Card> initial_deck_;

  std::vector<Card> deck_;  // front is the next card
  std::vector<Card> board_;
  std::vector<Card> burned_;
  std::vector<Card> mucked_;
  std::vector<PlayerStatus> players_;
  std::vector<Pot> pots_;
  std::vector<Chips> contributions_;

  std::vector<PlanStep> plan_;
  std::size_t step_ = 0;

  // per-street dealing
  bool burned_this_street_ = false;
  int board_dealt_this_street_ = 0;
  std::vector<int> hole_dealt_this_street_;
  std::deque<int> draw_queue_;
  std::vector<int> replacements_owed_;

  // per-street betting
  std::deque<int> bet_queue_;
  Chips max_bet_to_ = 0;
  Chips min_raise_increment_ = 0;
  int raise_count_ = 0;
  std::optional<int> raise_cap_;
  std::vector<bool> acted_since_full_raise_;
  std::optional<int> last_aggressor_;
  std::optional<int> bring_in_seat_;
  bool bring_in_open_ = false;  // bring-in still expected as the first action

  // showdown / cleanup
  std::deque<int> show_queue_;
  bool forced_show_ = false;
  std::vector<int> kill_pending_;

  Chips chip_total_ = 0;
  std::vector<LoggedAction> log_;
};

}  // namespace cardroom
