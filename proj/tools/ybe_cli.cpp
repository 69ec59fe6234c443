// Command-line front end. Talks to the library only through ybe.h.

#include "ybe/ybe.h"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(ybe_status status) {
  if (status != YBE_OK) throw Failure(ybe_last_error());
}

struct StringDeleter {
  void operator()(char* s) const { ybe_string_free(s); }
};
struct SolutionDeleter {
  void operator()(ybe_solution* s) const { ybe_solution_free(s); }
};
struct KeyDeleter {
  void operator()(ybe_key* k) const { ybe_key_free(k); }
};
struct CensusDeleter {
  void operator()(ybe_census* c) const { ybe_census_free(c); }
};

using SolutionPtr = std::unique_ptr<ybe_solution, SolutionDeleter>;
using KeyPtr = std::unique_ptr<ybe_key, KeyDeleter>;
using CensusPtr = std::unique_ptr<ybe_census, CensusDeleter>;

// Takes ownership of a library string.
std::string take(char* s) {
  std::unique_ptr<char, StringDeleter> owned(s);
  return s ? std::string(s) : std::string();
}

template <typename F>
std::string fetch(F&& f) {
  char* out = nullptr;
  check(f(&out));
  return take(out);
}

SolutionPtr load(const std::string& path) {
  ybe_solution* s = nullptr;
  check(ybe_solution_load(path.c_str(), &s));
  return SolutionPtr(s);
}

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    return std::stoull(v);
  } catch (const std::exception&) {
    throw Failure(std::string(name) + " must be a non-negative integer");
  }
}

double env_double(const char* name, double fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    return std::stod(v);
  } catch (const std::exception&) {
    throw Failure(std::string(name) + " must be a number");
  }
}

std::uint64_t materialize_bound() { return env_u64("YBE_MATERIALIZE_BOUND", 1'000'000); }

ybe_cost_constants cost_constants() {
  return {env_double("YBE_OP_SECONDS", 1e-9), env_double("YBE_SEARCH_SECONDS", 1e-8)};
}

KeyPtr make_key(const ybe_solution* base, const std::string& i, unsigned k, bool lazy) {
  ybe_key* key = nullptr;
  check(ybe_key_new(base, i.c_str(), k, lazy ? 0 : 1, materialize_bound(), &key));
  return KeyPtr(key);
}

std::string read_input(const std::optional<std::string>& message) {
  if (message) return *message;
  std::string all((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
  while (!all.empty() && (all.back() == '\n' || all.back() == '\r')) all.pop_back();
  return all;
}

const char* flag(int v) { return v ? "true" : "false"; }

std::string optional_count(int64_t v, const char* none) { return v < 0 ? none : std::to_string(v); }

struct KeyArgs {
  std::string file;
  unsigned k = 1;
  std::string i;
  bool lazy = false;
};

void add_key_args(CLI::App* cmd, KeyArgs& a) {
  cmd->add_option("solution", a.file, "Base solution file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--k", a.k, "Pump depth")->required();
  cmd->add_option("--i", a.i, "Public key index i")->required();
  cmd->add_flag("--lazy", a.lazy, "Evaluate through the tree without materializing");
}

int run_verify(const std::string& file) {
  SolutionPtr s = load(file);
  ybe_verify_report r{};
  check(ybe_verify(s.get(), &r));
  std::cout << "nondegenerate " << flag(r.nondegenerate) << "\n"
            << "involutive " << flag(r.involutive) << "\n"
            << "braided " << flag(r.braided) << "\n";
  if (r.has_involutive_witness) {
    std::cout << "involutive_witness " << r.involutive_witness[0] << " " << r.involutive_witness[1]
              << "\n";
  }
  if (r.has_braided_witness) {
    std::cout << "braided_witness " << r.braided_witness[0] << " " << r.braided_witness[1] << " "
              << r.braided_witness[2] << "\n";
  }
  if (!(r.nondegenerate && r.involutive && r.braided)) {
    throw Failure("not a solution: " + std::string(!r.involutive ? "r o r != id at the witness pair"
                                                                 : "braid relation fails at the witness triple"));
  }
  return 0;
}

int run_analyze(const std::string& file) {
  SolutionPtr s = load(file);
  ybe_analysis a{};
  check(ybe_analyze(s.get(), &a));
  std::cout << "nondegenerate " << flag(a.nondegenerate) << "\n"
            << "involutive " << flag(a.involutive) << "\n"
            << "braided " << flag(a.braided) << "\n";
  if (!(a.nondegenerate && a.involutive && a.braided)) throw Failure("not a solution; run verify for a witness");
  std::cout << "class_m " << optional_count(a.class_m, "exceeded") << "\n";
  if (a.class_m > 0) {
    std::cout << "class_witness " << fetch([&](char** o) { return ybe_class_witness(s.get(), 1, o); })
              << "\n";
    std::cout << "frozen_2 " << fetch([&](char** o) { return ybe_frozen_elements(s.get(), 2, o); })
              << "\n";
    std::cout << "frozen_m "
              << fetch([&](char** o) { return ybe_frozen_elements(s.get(), a.class_m, o); }) << "\n";
  }
  std::cout << "indecomposable " << flag(a.indecomposable) << "\n"
            << "orbits " << fetch([&](char** o) { return ybe_orbits(s.get(), o); }) << "\n"
            << "retract_level " << optional_count(a.retract_level, "irretractable") << "\n"
            << "condition_C " << flag(a.condition_C) << "\n"
            << "condition_C_column " << optional_count(a.condition_C_column, "none") << "\n"
            << "column_pair_condition " << flag(a.column_pair_condition) << "\n"
            << "iyb_order " << a.iyb_order << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Set-theoretic Yang-Baxter solutions: analysis, pump-up and toy protocols"};
  app.require_subcommand(1);

  std::string file;
  auto* verify = app.add_subcommand("verify", "Check non-degeneracy, involutivity and braiding");
  verify->add_option("solution", file)->required()->check(CLI::ExistingFile);

  auto* analyze = app.add_subcommand("analyze", "Print the full analysis report");
  analyze->add_option("solution", file)->required()->check(CLI::ExistingFile);

  unsigned iterations = 1;
  std::string output;
  std::vector<std::pair<unsigned, unsigned>> g_pairs;
  bool pairs = false;
  std::optional<std::size_t> check_census;
  auto* pump = app.add_subcommand("pump", "Pump a solution, print cycles of g_i^k, or check what pumping preserves");
  pump->add_option("solution", file)->required()->check(CLI::ExistingFile);
  pump->add_option("--iterations", iterations, "Number of pump steps");
  pump->add_option("-o,--output", output, "Write the pumped solution here instead of stdout");
  pump->add_option("--g", g_pairs, "Print the cycles of g_i^k instead (repeatable)");
  pump->add_flag("--pairs", pairs, "With --g, print points as T_j^l");
  pump->add_option("--check-census", check_census,
                   "Check preservation for this solution and every solution of size <= N");

  std::optional<std::uint64_t> tree_n;
  KeyArgs key_args;
  auto* tree = app.add_subcommand("tree", "Render the labelled tree of ghat_i");
  tree->add_option("solution", key_args.file, "Base solution (or give --n)")->check(CLI::ExistingFile);
  tree->add_option("--n", tree_n, "Base size");
  tree->add_option("--k", key_args.k)->required();
  tree->add_option("--i", key_args.i)->required();

  std::vector<std::string> points;
  bool inverse = false, all_points = false, check_key = false, show_tree = false;
  std::uint64_t random_count = 0;
  std::uint64_t seed = 20240101;
  auto* eval = app.add_subcommand("eval", "Evaluate ghat_i (or its inverse) at points");
  add_key_args(eval, key_args);
  eval->add_option("--point", points, "Point(s) to evaluate");
  eval->add_flag("--inverse", inverse);
  eval->add_flag("--tree", show_tree, "Print the labelled tree first");
  eval->add_flag("--check", check_key, "Check inverse round trips (and lazy = materialized) on the points");
  eval->add_flag("--all", all_points, "With the check, use every point of the domain");
  eval->add_option("--random", random_count, "With the check, add this many seeded random points");
  eval->add_option("--seed", seed, "Seed for --random");

  bool text = false;
  std::optional<std::string> message;
  std::string sender_j;
  auto add_stream = [&](CLI::App* cmd) {
    add_key_args(cmd, key_args);
    cmd->add_flag("--text", text, "Letter codec: blank=00, A=01, ..., Z=26");
    cmd->add_option("--message", message, "Input (otherwise read from stdin)");
  };
  auto* encrypt = app.add_subcommand("encrypt", "Encrypt blocks (or text) under ghat_i");
  add_stream(encrypt);
  auto* decrypt = app.add_subcommand("decrypt", "Decrypt blocks under ghat_i");
  add_stream(decrypt);
  auto* sign = app.add_subcommand("sign", "Sign with ghat_j^{-1}, then encrypt with ghat_i");
  add_stream(sign);
  sign->add_option("--j", sender_j, "Sender key index j")->required();
  auto* open = app.add_subcommand("open", "Open a signed message: ghat_j(ghat_i^{-1}(C))");
  add_stream(open);
  open->add_option("--j", sender_j, "Sender key index j")->required();

  std::string kx_j, kx_l;
  auto* kx = app.add_subcommand("kx", "Simulate the key exchange");
  add_key_args(kx, key_args);
  kx->add_option("--j", kx_j, "Bob's secret")->required();
  kx->add_option("--l", kx_l, "Alice's secret")->required();
  kx->add_option("--seed", seed, "Seed for sampled key comparison");

  std::size_t census_n = 0;
  int want_indecomposable = -1, want_irretractable = -1, want_condition_c = -1;
  int64_t want_class = 0;
  auto* enumerate = app.add_subcommand("enumerate", "Census of all solutions of size n <= 4");
  enumerate->add_option("--n", census_n)->required();
  enumerate->add_option("-o,--output", output, "Write representatives and summary.txt here");
  enumerate->add_option("--indecomposable", want_indecomposable, "Keep classes with this flag (0/1)");
  enumerate->add_option("--irretractable", want_irretractable, "Keep classes with this flag (0/1)");
  enumerate->add_option("--condition-c", want_condition_c, "Keep classes with this flag (0/1)");
  enumerate->add_option("--class", want_class, "Keep classes of this class m");

  bool frt = false;
  auto* relations = app.add_subcommand("relations", "Structure-group or FRT relations");
  relations->add_option("solution", file)->required()->check(CLI::ExistingFile);
  relations->add_flag("--frt", frt, "Relations of the pumped solution from the FRT generators");

  std::uint64_t cost_n = 0;
  unsigned cost_k = 0;
  bool small_i = false, table = false;
  std::optional<std::string> count;
  auto* cost = app.add_subcommand("cost", "Cost, attack and search-space estimates");
  cost->add_option("--n", cost_n);
  cost->add_option("--k", cost_k);
  cost->add_flag("--small-i", small_i, "Use the small-i variant");
  cost->add_option("--count", count, "Number of candidate base solutions for the attack estimate");
  cost->add_flag("--table", table, "Time to compute one ghat_i for n=2..10, k=2..4");

  std::uint64_t cycles_size = 0;
  std::string cycles_type;
  bool exact = false;
  auto* count_cycles = app.add_subcommand("count-cycles", "Number of permutations of a cycle type");
  count_cycles->add_option("--size", cycles_size, "N")->required();
  count_cycles->add_option("--type", cycles_type, "Terms d^count, e.g. 4^64")->required();
  count_cycles->add_flag("--exact", exact, "Also print the exact count");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return run_verify(file);
    if (analyze->parsed()) return run_analyze(file);

    if (pump->parsed()) {
      SolutionPtr s = load(file);
      if (check_census) {
        char* report = nullptr;
        int ok = 0;
        check(ybe_preservation_check(s.get(), *check_census, &report, &ok));
        std::cout << take(report);
        return ok ? 0 : 1;
      }
      if (!g_pairs.empty()) {
        for (const auto& [i, k] : g_pairs) {
          std::cout << fetch([&](char** o) { return ybe_g_cycles(s.get(), i, k, pairs ? 1 : 0, o); })
                    << "\n";
        }
        return 0;
      }
      ybe_solution* raw = nullptr;
      check(ybe_pump(s.get(), iterations, materialize_bound(), &raw));
      SolutionPtr pumped(raw);
      const std::string comment = "pumped from size " + std::to_string(ybe_solution_size(s.get())) +
                                  ", iterations " + std::to_string(iterations);
      if (output.empty()) {
        std::cout << fetch([&](char** o) { return ybe_solution_format(pumped.get(), comment.c_str(), o); });
      } else {
        check(ybe_solution_save(pumped.get(), output.c_str(), comment.c_str()));
      }
      return 0;
    }

    if (tree->parsed()) {
      std::uint64_t n = 0;
      if (tree_n) {
        n = *tree_n;
      } else if (!key_args.file.empty()) {
        n = ybe_solution_size(load(key_args.file).get());
      } else {
        throw Failure("tree needs a solution file or --n");
      }
      std::cout << fetch([&](char** o) { return ybe_tree_render(n, key_args.i.c_str(), key_args.k, o); });
      return 0;
    }

    if (eval->parsed()) {
      SolutionPtr s = load(key_args.file);
      check_key = check_key || all_points || random_count > 0;
      if (points.empty() && !check_key) throw Failure("eval needs --point, --all or --random");
      KeyPtr key = make_key(s.get(), key_args.i, key_args.k, key_args.lazy);
      if (show_tree) {
        const std::uint64_t n = ybe_solution_size(s.get());
        std::cout << fetch([&](char** o) { return ybe_tree_render(n, key_args.i.c_str(), key_args.k, o); });
      }
      std::string listed;
      for (const auto& p : points) {
        std::cout << fetch([&](char** o) { return ybe_key_eval(key.get(), p.c_str(), inverse, o); })
                  << "\n";
        listed += p + " ";
      }
      if (!check_key) return 0;
      char* report = nullptr;
      int ok = 0;
      check(ybe_key_check(key.get(), listed.c_str(), all_points, random_count, seed, &report, &ok));
      std::cout << take(report);
      return ok ? 0 : 1;
    }

    if (encrypt->parsed() || decrypt->parsed()) {
      SolutionPtr s = load(key_args.file);
      KeyPtr key = make_key(s.get(), key_args.i, key_args.k, key_args.lazy);
      std::string blocks = read_input(message);
      if (encrypt->parsed()) {
        if (text) blocks = fetch([&](char** o) { return ybe_encode_text(blocks.c_str(), o); });
        std::cout << fetch([&](char** o) { return ybe_encrypt(key.get(), blocks.c_str(), text, o); })
                  << "\n";
      } else {
        std::string plain = fetch([&](char** o) { return ybe_decrypt(key.get(), blocks.c_str(), text, o); });
        if (text) plain = fetch([&](char** o) { return ybe_decode_text(plain.c_str(), o); });
        std::cout << plain << "\n";
      }
      return 0;
    }

    if (sign->parsed() || open->parsed()) {
      SolutionPtr s = load(key_args.file);
      KeyPtr receiver = make_key(s.get(), key_args.i, key_args.k, key_args.lazy);
      KeyPtr sender = make_key(s.get(), sender_j, key_args.k, key_args.lazy);
      std::string blocks = read_input(message);
      if (sign->parsed()) {
        if (text) blocks = fetch([&](char** o) { return ybe_encode_text(blocks.c_str(), o); });
        char* mid = nullptr;
        char* sent = nullptr;
        check(ybe_sign(sender.get(), receiver.get(), blocks.c_str(), text, &mid, &sent));
        const std::string intermediate = take(mid);
        const std::string transmitted = take(sent);
        std::cout << "signature: " << intermediate << "\n" << "transmitted: " << transmitted << "\n";
      } else {
        std::string plain = fetch([&](char** o) {
          return ybe_open_signature(receiver.get(), sender.get(), blocks.c_str(), text, o);
        });
        if (text) plain = fetch([&](char** o) { return ybe_decode_text(plain.c_str(), o); });
        std::cout << plain << "\n";
      }
      return 0;
    }

    if (kx->parsed()) {
      SolutionPtr s = load(key_args.file);
      int equal = 0;
      char* transcript = nullptr;
      check(ybe_key_exchange(s.get(), key_args.k, key_args.i.c_str(), kx_j.c_str(), kx_l.c_str(), seed,
                             materialize_bound(), &transcript, &equal));
      std::cout << take(transcript);
      if (!equal) throw Failure("the two derived keys differ");
      return 0;
    }

    if (enumerate->parsed()) {
      ybe_census* raw = nullptr;
      check(ybe_census_build(census_n, &raw));
      CensusPtr census(raw);
      ybe_census_filter_spec spec{want_indecomposable, want_irretractable, want_condition_c, want_class};
      check(ybe_census_filter(census.get(), &spec, &raw));
      CensusPtr kept(raw);
      std::cout << fetch([&](char** o) { return ybe_census_summary(kept.get(), o); });
      if (!output.empty()) check(ybe_census_write(kept.get(), output.c_str()));
      return 0;
    }

    if (relations->parsed()) {
      SolutionPtr s = load(file);
      if (frt) {
        int ok = 0;
        std::cout << fetch([&](char** o) { return ybe_frt_relations(s.get(), o, &ok); });
        if (!ok) throw Failure("FRT report found a violated identity");
      } else {
        std::cout << fetch([&](char** o) { return ybe_structure_relations(s.get(), o); });
      }
      return 0;
    }

    if (cost->parsed()) {
      const ybe_cost_constants constants = cost_constants();
      if (table) {
        std::printf("%-4s %12s %12s %12s\n", "n", "k=2", "k=3", "k=4");
        for (std::uint64_t n = 2; n <= 10; ++n) {
          std::printf("%-4llu", static_cast<unsigned long long>(n));
          for (unsigned k = 2; k <= 4; ++k) {
            double seconds = 0;
            check(ybe_cost_model(n, k, 0, &constants, nullptr, &seconds, nullptr));
            std::printf(" %12.3g", seconds);
          }
          std::printf("\n");
        }
        return 0;
      }
      if (cost_n == 0 || cost_k == 0) throw Failure("cost needs --n and --k (or --table)");
      double seconds = 0;
      char* ops = nullptr;
      check(ybe_cost_model(cost_n, cost_k, small_i, &constants, &ops, &seconds, nullptr));
      std::cout << "operations " << take(ops) << "\n";
      std::printf("seconds %.6g\n", seconds);
      double log10_perms = 0, log10_search = 0;
      check(ybe_search_space(cost_n, cost_k, &constants, &log10_perms, &log10_search));
      std::printf("search_space_log10 %.4f\n", log10_perms);
      std::printf("search_seconds_log10 %.4f\n", log10_search);
      if (count) {
        double attack = 0, log10_attack = 0;
        check(ybe_attack_cost(cost_n, cost_k, count->c_str(), &constants, &attack, &log10_attack));
        std::printf("attack_seconds %.6g\n", attack);
        std::printf("attack_seconds_log10 %.4f\n", log10_attack);
      }
      return 0;
    }

    if (count_cycles->parsed()) {
      double lg = 0;
      char* exact_text = nullptr;
      check(ybe_cycle_type_count(cycles_size, cycles_type.c_str(), &lg, exact ? &exact_text : nullptr));
      std::printf("log10 %.6f\n", lg);
      if (exact) std::cout << "exact " << take(exact_text) << "\n";
      return 0;
    }
  } catch (const Failure& e) {
    std::cerr << "ybe: error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
