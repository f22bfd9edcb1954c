#pragma once

#include <cstdint>

#include "cardroom/lookup.hpp"

namespace cardroom {

struct EnumerationResult {
  std::uint64_t hands = 0;             // combinations that evaluated to an entry
  std::uint64_t distinct_entries = 0;  // table entries reached by any evaluation
  double seconds = 0.0;

  double hands_per_second() const {
    return seconds > 0 ? static_cast<double>(hands) / seconds : 0.0;
  }
};

/// Evaluates every `deal_size`-card combination from the kind's own deck.
/// When deal_size exceeds the table arity, each hand is scored as the best
/// arity-subset, and every subset evaluation marks its entry, so a full
/// standard 7-card pass reaches all 7462 entries. Combinations with no entry
/// at all (non-qualifying eight-or-better deals) are not counted as hands.
/// The work is partitioned across threads (<= 0 picks the hardware count);
/// the entry coverage is merged before counting.
EnumerationResult enumerate_all_hands(LookupKind kind, int deal_size,
                                      int threads = 0);

}  // namespace cardroom
