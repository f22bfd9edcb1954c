#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cardroom/enumerate.hpp"
#include "cardroom/hands.hpp"
#include "cardroom/md5.hpp"
#include "cardroom/script.hpp"

namespace {

using namespace cardroom;

std::string identity_line(const HandIdentity& id) {
  std::string out = std::to_string(id.index);
  out += '\t';
  out += to_string(id.category);
  out += '\t';
  out += id.canonical_cards();
  return out;
}

int cmd_eval(const std::string& type_name, const std::string& hole,
             const std::string& board) {
  const HandTypeSpec& type = hand_type(type_name);
  if (board.empty()) {
    const Hand hand = hand_from_cards(type, parse_cards(hole));
    std::cout << identity_line(hand.identity()) << "\n";
    return 0;
  }
  const auto hand = hand_from_game(type, parse_cards(hole), parse_cards(board));
  if (!hand) {
    std::cout << "no-hand\n";
    return 0;
  }
  std::cout << identity_line(hand->identity()) << "\n";
  return 0;
}

int cmd_replay(const std::string& path, std::optional<std::uint64_t> seed) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    return 1;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();

  ReplayScript script;
  try {
    script = parse_script(buffer.str());
  } catch (const std::invalid_argument& e) {
    std::cerr << path << ": " << e.what() << "\n";
    return 1;
  }
  if (seed) {
    script.seed = *seed;
    script.deck.reset();
  }
  GameState state = [&] {
    try {
      return run_script(script);
    } catch (const ReplayError& e) {
      std::cerr << path << ": " << e.what() << "\n";
      std::exit(2);
    } catch (const std::invalid_argument& e) {
      std::cerr << path << ": " << e.what() << "\n";
      std::exit(2);
    }
  }();

  for (const LoggedAction& a : state.action_log()) {
    if (a.kind == ActionKind::kCollectBets) {
      std::cout << "pot " << a.amount << "\n";
    }
  }
  std::string stacks_line;
  for (Chips s : state.stacks()) {
    if (!stacks_line.empty()) stacks_line += " ";
    stacks_line += std::to_string(s);
  }
  std::cout << stacks_line << "\n";
  return 0;
}

int cmd_dump(const std::string& kind_name, const std::string& output) {
  const LookupKind kind = lookup_kind_from_string(kind_name);
  const std::string text = dump_ordered_hands(Lookup::get(kind));
  if (output.empty() || output == "-") {
    std::cout << text;
    std::cerr << md5_hex(text) << "\n";
    return 0;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << output << "\n";
    return 1;
  }
  out << text;
  out.close();
  if (!out) {
    std::cerr << "cannot write " << output << "\n";
    return 1;
  }
  std::cout << md5_hex(text) << "\n";
  return 0;
}

int cmd_bench(const std::string& kind_name, const std::string& mode,
              int threads) {
  const LookupKind kind = lookup_kind_from_string(kind_name);
  int deal = Lookup::get(kind).arity();
  if (mode == "all-7-card") {
    if (deal != 5) {
      std::cerr << "all-7-card mode needs a five-card table\n";
      return 1;
    }
    deal = 7;
  } else if (mode != "all-5-card") {
    std::cerr << "unknown mode \"" << mode << "\"\n";
    return 1;
  }
  const EnumerationResult r = enumerate_all_hands(kind, deal, threads);
  std::printf("hands %llu\n", static_cast<unsigned long long>(r.hands));
  std::printf("classes %llu\n",
              static_cast<unsigned long long>(r.distinct_entries));
  std::printf("seconds %.3f\n", r.seconds);
  std::printf("hands-per-second %.1f\n", r.hands_per_second());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multi-variant poker engine and hand evaluator"};
  app.require_subcommand(1);

  std::string eval_type, eval_hole, eval_board;
  auto* eval = app.add_subcommand("eval", "evaluate a hand");
  eval->add_option("hand-type", eval_type, "hand type name")->required();
  eval->add_option("hole", eval_hole, "hole cards, e.g. Ac2d")->required();
  eval->add_option("board", eval_board, "board cards (optional)");

  std::string replay_path;
  std::uint64_t replay_seed = 0;
  auto* replay = app.add_subcommand("replay", "replay a hand history script");
  replay->add_option("script", replay_path, "script path")->required();
  auto* seed_opt =
      replay->add_option("--seed", replay_seed, "override the script's deck order");

  std::string dump_kind, dump_output;
  auto* dump = app.add_subcommand("dump", "write the ordered-hand table");
  dump->add_option("kind", dump_kind, "lookup kind")->required();
  dump->add_option("--output", dump_output, "output path (default stdout)");

  std::string bench_kind, bench_mode = "all-5-card";
  int bench_threads = 0;
  auto* bench = app.add_subcommand("bench", "enumerate and time evaluations");
  bench->add_option("kind", bench_kind, "lookup kind")->required();
  bench->add_option("--mode", bench_mode, "all-5-card or all-7-card");
  bench->add_option("--threads", bench_threads, "worker count (0 = hardware)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (eval->parsed()) return cmd_eval(eval_type, eval_hole, eval_board);
    if (replay->parsed()) {
      return cmd_replay(replay_path, seed_opt->count() > 0
                                         ? std::optional<std::uint64_t>{replay_seed}
                                         : std::nullopt);
    }
    if (dump->parsed()) return cmd_dump(dump_kind, dump_output);
    if (bench->parsed()) return cmd_bench(bench_kind, bench_mode, bench_threads);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 1;
}
