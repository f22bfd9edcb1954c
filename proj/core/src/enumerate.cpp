#include "cardroom/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <thread>
#include <vector>

namespace cardroom {

namespace {

struct Tables {
  std::vector<std::uint64_t> prime;
  std::vector<std::uint8_t> suit;
};

Tables card_tables(const std::vector<Card>& deck) {
  Tables t;
  for (Card c : deck) {
    t.prime.push_back(rank_prime(c.rank));
    t.suit.push_back(static_cast<std::uint8_t>(value_of(c.suit)));
  }
  return t;
}

struct Coverage {
  std::vector<std::uint64_t> words;

  explicit Coverage(std::size_t bits) : words((bits + 63) / 64, 0) {}
  void mark(std::size_t i) { words[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void merge(const Coverage& other) {
    for (std::size_t i = 0; i < words.size(); ++i) words[i] |= other.words[i];
  }
  std::uint64_t count() const {
    std::uint64_t n = 0;
    for (std::uint64_t w : words) n += static_cast<std::uint64_t>(__builtin_popcountll(w));
    return n;
  }
};

// index five-subsets of seven positions
constexpr int kFiveOfSeven[21][5] = {
    {0, 1, 2, 3, 4}, {0, 1, 2, 3, 5}, {0, 1, 2, 3, 6}, {0, 1, 2, 4, 5},
    {0, 1, 2, 4, 6}, {0, 1, 2, 5, 6}, {0, 1, 3, 4, 5}, {0, 1, 3, 4, 6},
    {0, 1, 3, 5, 6}, {0, 1, 4, 5, 6}, {0, 2, 3, 4, 5}, {0, 2, 3, 4, 6},
    {0, 2, 3, 5, 6}, {0, 2, 4, 5, 6}, {0, 3, 4, 5, 6}, {1, 2, 3, 4, 5},
    {1, 2, 3, 4, 6}, {1, 2, 3, 5, 6}, {1, 2, 4, 5, 6}, {1, 3, 4, 5, 6},
    {2, 3, 4, 5, 6}};

// iterate combinations c of size k from [0, n) with c[0] fixed
template <typename Fn>
void combinations_with_first(int n, int k, int first, Fn&& fn) {
  std::vector<int> c(static_cast<std::size_t>(k));
  c[0] = first;
  for (int i = 1; i < k; ++i) c[static_cast<std::size_t>(i)] = first + i;
  if (k > 1 && c[static_cast<std::size_t>(k - 1)] >= n) return;
  for (;;) {
    fn(c);
    int i = k - 1;
    while (i >= 1 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 1) return;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

}  // namespace

EnumerationResult enumerate_all_hands(LookupKind kind, int deal_size,
                                      int threads) {
  const Lookup& lookup = Lookup::get(kind);
  DeckKind deck_kind = DeckKind::kStandard52;
  if (kind == LookupKind::kShortDeck) deck_kind = DeckKind::kShortDeck36;
  if (kind == LookupKind::kKuhn) deck_kind = DeckKind::kKuhn3;
  const std::vector<Card> deck = create_deck(deck_kind);
  const int n = static_cast<int>(deck.size());
  const int arity = lookup.arity();
  if (deal_size < arity || deal_size > n) {
    throw std::invalid_argument("cannot deal " + std::to_string(deal_size) +
                                " cards for the " +
                                std::string(to_string(kind)) + " table");
  }
  if (deal_size != arity && !(arity == 5 && deal_size == 7)) {
    throw std::invalid_argument("unsupported deal size " +
                                std::to_string(deal_size));
  }

  const Tables tables = card_tables(deck);
  int worker_count = threads > 0
                         ? threads
                         : static_cast<int>(std::thread::hardware_concurrency());
  if (worker_count <= 0) worker_count = 1;
  worker_count = std::min(worker_count, n - deal_size + 1);

  const auto start_time = std::chrono::steady_clock::now();
  std::vector<std::uint64_t> hand_counts(static_cast<std::size_t>(worker_count), 0);
  std::vector<Coverage> coverages(static_cast<std::size_t>(worker_count),
                                  Coverage(lookup.entry_count()));

  auto worker = [&](int w) {
    std::uint64_t hands = 0;
    Coverage& cover = coverages[static_cast<std::size_t>(w)];
    for (int first = w; first <= n - deal_size; first += worker_count) {
      combinations_with_first(n, deal_size, first, [&](const std::vector<int>& c) {
        if (deal_size == arity && kind != LookupKind::kBadugi) {
          std::uint64_t product = 1;
          bool suited = true;
          for (int i = 0; i < arity; ++i) {
            const auto ci = static_cast<std::size_t>(c[static_cast<std::size_t>(i)]);
            product *= tables.prime[ci];
            suited = suited && tables.suit[ci] == tables.suit[static_cast<std::size_t>(c[0])];
          }
          if (const HandIdentity* e = lookup.find(product, suited)) {
            cover.mark(e->ordinal);
            ++hands;
          }
        } else if (deal_size == 7) {
          bool any = false;
          for (const auto& sel : kFiveOfSeven) {
            std::uint64_t product = 1;
            bool suited = true;
            const auto first_ci =
                static_cast<std::size_t>(c[static_cast<std::size_t>(sel[0])]);
            for (int i = 0; i < 5; ++i) {
              const auto ci =
                  static_cast<std::size_t>(c[static_cast<std::size_t>(sel[i])]);
              product *= tables.prime[ci];
              suited = suited && tables.suit[ci] == tables.suit[first_ci];
            }
            if (const HandIdentity* e = lookup.find(product, suited)) {
              cover.mark(e->ordinal);
              any = true;
            }
          }
          if (any) ++hands;
        } else {
          // badugi: reduce to the best subset
          std::vector<Card> cards;
          for (int i = 0; i < deal_size; ++i) {
            cards.push_back(deck[static_cast<std::size_t>(c[static_cast<std::size_t>(i)])]);
          }
          const HandIdentity& e = lookup.evaluate(cards);
          cover.mark(e.ordinal);
          ++hands;
        }
      });
    }
    hand_counts[static_cast<std::size_t>(w)] = hands;
  };

  if (worker_count == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < worker_count; ++w) pool.emplace_back(worker, w);
    for (auto& t : pool) t.join();
  }

  EnumerationResult result;
  for (std::uint64_t h : hand_counts) result.hands += h;
  Coverage merged(lookup.entry_count());
  for (const Coverage& c : coverages) merged.merge(c);
  result.distinct_entries = merged.count();
  result.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start_time)
                       .count();
  return result;
}

}  // namespace cardroom
