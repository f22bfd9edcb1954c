#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "cardroom/cards.hpp"
#include "cardroom/hands.hpp"
#include "cardroom/lookup.hpp"
#include "cardroom/state.hpp"
#include "cardroom/variants.hpp"

namespace {

using namespace cardroom;

std::vector<std::vector<Card>> random_hands(int count, int size, std::uint64_t seed) {
  std::vector<std::vector<Card>> hands;
  const auto deck = create_deck(DeckKind::kStandard52);
  for (int i = 0; i < count; ++i) {
    auto shuffled = shuffle_deck(deck, seed + static_cast<std::uint64_t>(i));
    hands.emplace_back(shuffled.begin(), shuffled.begin() + size);
  }
  return hands;
}

void BM_Evaluate5Standard(benchmark::State& state) {
  const Lookup& lookup = Lookup::get(LookupKind::kStandard);
  const auto hands = random_hands(1024, 5, 17);
  std::size_t i = 0;
  for (auto _ : state) {
    const HandIdentity& id = lookup.evaluate(hands[i++ & 1023]);
    benchmark::DoNotOptimize(id.index);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Evaluate5Standard);

void BM_RawLookup5Standard(benchmark::State& state) {
  const Lookup& lookup = Lookup::get(LookupKind::kStandard);
  const auto hands = random_hands(1024, 5, 17);
  std::vector<std::pair<std::uint64_t, bool>> keys;
  for (const auto& h : hands) {
    bool suited = true;
    for (Card c : h) suited = suited && c.suit == h[0].suit;
    keys.emplace_back(prime_product(h), suited);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [product, suited] = keys[i++ & 1023];
    benchmark::DoNotOptimize(lookup.find(product, suited));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_RawLookup5Standard);

void BM_BestOfSevenStandard(benchmark::State& state) {
  const auto& type = hand_type("standard-high");
  const auto hands = random_hands(256, 7, 23);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& cards = hands[i++ & 255];
    const auto hand = hand_from_game(
        type, std::span<const Card>(cards.data(), 2),
        std::span<const Card>(cards.data() + 2, 5));
    benchmark::DoNotOptimize(hand->identity().index);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_BestOfSevenStandard);

void BM_BuildStandardLookup(benchmark::State& state) {
  for (auto _ : state) {
    const Lookup lookup = build_lookup(LookupKind::kStandard);
    benchmark::DoNotOptimize(lookup.entry_count());
  }
}
BENCHMARK(BM_BuildStandardLookup);

void BM_FullHandNoLimitHoldem(benchmark::State& state) {
  const auto variant = builtin_variant("texas-holdem");
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto game = GameState::create(AutomationSet::all(), variant, {0}, {1, 2}, 0,
                                  {200, 200, 200, 200}, 4,
                                  GameState::DeckSource::seeded(seed++));
    while (!game.is_terminal()) {
      if (game.can_check_or_call()) {
        game.check_or_call();
      } else {
        break;
      }
    }
    benchmark::DoNotOptimize(game.stacks());
  }
}
BENCHMARK(BM_FullHandNoLimitHoldem);

}  // namespace

BENCHMARK_MAIN();
