// acwb -- command-line workbench for Andrews-Curtis transformation
// dynamics.  Every subcommand is batch-oriented and reproducible: all
// randomness is seeded and the seed is printed in the report header;
// result content never depends on the thread count.
//
// Exit codes: 0 affirmative/found, 1 negative/not-found (conclusive),
// 2 budget exhausted (inconclusive), 3 usage or input error, 4 internal
// error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ac/equations.hpp"
#include "ac/finite.hpp"
#include "ac/moves.hpp"
#include "ac/search.hpp"
#include "ac/tuple.hpp"
#include "ac/word.hpp"

namespace {

constexpr int kExitFound = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUserError = 3;
constexpr int kExitInternalError = 4;

int default_threads() {
  if (const char* env = std::getenv("AC_WORKBENCH_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

// Output goes to --out when given, else stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::invalid_argument("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

ac::Strategy parse_strategy(const std::string& name) {
  if (name == "bfs") return ac::Strategy::Bfs;
  if (name == "iddfs") return ac::Strategy::Iddfs;
  if (name == "bidir" || name == "bidirectional") return ac::Strategy::Bidirectional;
  throw std::invalid_argument("unknown strategy: " + name);
}

ac::DedupMode parse_dedup(const std::string& name) {
  if (name == "exact") return ac::DedupMode::Exact;
  if (name == "orbit") return ac::DedupMode::OrbitNormalized;
  throw std::invalid_argument("unknown dedup mode: " + name);
}

int cmd_reduce(const std::string& text, int rank, const std::string& out_path) {
  const ac::Word w = ac::parse_word(text, rank);
  Sink sink(out_path);
  sink.stream() << ac::format_word(w) << '\n';
  return kExitFound;
}

int cmd_apply(const std::string& tuple_path, const std::string& moves_path,
              const std::string& out_path) {
  const ac::Tuple start = ac::read_tuple_file(tuple_path);
  const ac::MoveSequence seq = ac::read_moves_file(moves_path, start.size());
  const ac::Tuple end = ac::apply_sequence(start, seq);
  Sink sink(out_path);
  ac::write_tuple(sink.stream(), end);
  return kExitFound;
}

int cmd_ak(int n, const std::string& out_path) {
  Sink sink(out_path);
  ac::write_tuple(sink.stream(), ac::ak(n));
  return kExitFound;
}

int cmd_search(const std::string& tuple_path, int cap, std::uint64_t budget,
               const std::string& strategy, const std::string& dedup, std::uint64_t seed,
               int threads, const std::string& out_path) {
  const ac::Tuple start = ac::read_tuple_file(tuple_path);
  ac::SearchConfig cfg;
  cfg.length_cap = cap > 0 ? cap : static_cast<int>(ac::total_length(start)) + 2;
  cfg.node_budget = budget;
  cfg.strategy = parse_strategy(strategy);
  cfg.dedup = parse_dedup(dedup);
  cfg.seed = seed;
  cfg.threads = threads;
  const ac::SearchResult result = ac::trivialize(start, cfg);
  switch (result.status) {
    case ac::SearchStatus::Found: {
      Sink sink(out_path);
      ac::write_certificate(sink.stream(), *result.certificate, cfg.dedup, cfg.seed);
      std::cerr << "found: path length " << result.certificate->moves.moves.size() << ", states "
                << result.states_inserted << ", cap " << cfg.length_cap << "\n";
      return kExitFound;
    }
    case ac::SearchStatus::CapExhausted:
      std::cerr << "not found: frontier exhausted under cap " << cfg.length_cap
                << " (no path exists there), states " << result.states_inserted << "\n";
      return kExitNegative;
    case ac::SearchStatus::BudgetExhausted:
      std::cerr << "inconclusive: node budget " << budget << " exhausted, states "
                << result.states_inserted << "\n";
      return kExitInconclusive;
  }
  return kExitInternalError;
}

int cmd_verify(const std::string& tuple_path, const std::string& cert_path) {
  const ac::Tuple start = ac::read_tuple_file(tuple_path);
  std::ifstream in(cert_path);
  if (!in) throw std::invalid_argument("cannot open certificate file: " + cert_path);
  const ac::PathCertificate cert = ac::read_certificate(in, start);
  if (ac::verify(cert)) {
    std::cout << "valid: " << cert.moves.moves.size() << " moves end at "
              << ac::format_tuple_inline(cert.end) << "\n";
    return kExitFound;
  }
  std::cout << "invalid: replay does not reach the stated end tuple\n";
  return kExitNegative;
}

int cmd_classify(int enum_cap, int search_cap, std::uint64_t budget, const std::string& dedup,
                 std::uint64_t seed, const std::string& out_path) {
  const ac::ClassifyReport report =
      ac::classify(2, enum_cap, search_cap, budget, parse_dedup(dedup));
  Sink sink(out_path);
  sink.stream() << "# acwb classify enum_cap=" << enum_cap << " search_cap=" << search_cap
                << " budget=" << budget << " dedup=" << dedup << " seed=" << seed << "\n";
  ac::write_classify_report(sink.stream(), report);
  return report.budget_exhausted ? kExitInconclusive : kExitFound;
}

int cmd_identity(const std::string& moves_path, int k) {
  const ac::MoveSequence seq = ac::read_moves_file(moves_path, k);
  const bool trivial = ac::identity_check(seq, seq.k);
  std::cout << (trivial ? "identity: yes" : "identity: no") << "\n";
  if (!trivial) {
    const auto words = ac::extract_words(seq, seq.k);
    for (std::size_t i = 0; i < words.size(); ++i) {
      const ac::Equation view{seq.k, seq.k, words[i], false};
      std::cout << "W_" << (i + 1) << " = " << ac::format_equation(view) << "\n";
    }
  }
  return trivial ? kExitFound : kExitNegative;
}

int cmd_witness(const std::string& moves_path, const std::string& tuple_path, std::uint64_t seed,
                const std::string& out_path) {
  const ac::Tuple u = ac::read_tuple_file(tuple_path);
  const ac::MoveSequence seq = ac::read_moves_file(moves_path, u.size());
  const auto witness = ac::faithfulness_witness(seq, u);
  Sink sink(out_path);
  sink.stream() << "# acwb witness seed=" << seed << "\n";
  if (!witness) {
    sink.stream() << "identity: the sequence fixes every tuple; no moved point exists\n";
    return kExitNegative;
  }
  for (std::size_t i = 0; i < witness->size(); ++i) {
    sink.stream() << "h_" << (i + 1) << " = " << ac::format_word((*witness)[i]) << "\n";
  }
  std::vector<ac::Word> moved;
  for (int i = 0; i < u.size(); ++i) {
    moved.push_back(ac::conjugate(u.entry(i), (*witness)[static_cast<std::size_t>(i)]));
  }
  const ac::Tuple conj(u.rank(), moved);
  sink.stream() << "moved point: " << ac::format_tuple_inline(conj) << " -> "
                << ac::format_tuple_inline(ac::apply_sequence(conj, seq)) << "\n";
  return kExitFound;
}

int cmd_finite(const std::string& group_path, int k, bool perms, const std::string& out_path) {
  std::ifstream in(group_path);
  if (!in) throw std::invalid_argument("cannot open group file: " + group_path);
  const ac::FiniteGroup g = perms ? ac::FiniteGroup::from_permutations(
                                        ac::read_permutation_generators(in))
                                  : ac::read_group_table(in);
  Sink sink(out_path);
  sink.stream() << "# acwb finite order=" << g.order() << " k=" << k << "\n";
  const auto nk = ac::n_k_set(g, k);
  if (nk.empty()) {
    sink.stream() << "N_k empty: lambda is undefined for this group and k\n";
    return kExitNegative;
  }
  const ac::KernelReport kernel = ac::kernel_of_lambda(g, k);
  const ac::OrbitReport orbit_report = ac::orbits(g, k, ac::OrbitDomain::All);
  sink.stream() << "fac_order=" << ac::to_decimal(kernel.fac_order)
                << " ac_order=" << ac::to_decimal(kernel.ac_order)
                << " kernel_order=" << ac::to_decimal(kernel.kernel_order)
                << " transitive_on_N=" << (orbit_report.transitive_on_n_k ? "yes" : "no")
                << " orbit_sizes=";
  for (std::size_t i = 0; i < orbit_report.orbits.size(); ++i) {
    sink.stream() << (i ? "," : "") << orbit_report.orbits[i].size();
  }
  sink.stream() << "\n";
  sink.stream() << "n_k_size=" << kernel.n_k_size << "\n";
  for (const ac::Permutation& p : kernel.kernel_generators) {
    sink.stream() << "kernel_generator:";
    for (std::uint32_t x = 0; x < p.degree(); ++x) sink.stream() << ' ' << p[x];
    sink.stream() << "\n";
  }
  return kExitFound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Andrews-Curtis transformation workbench"};
  app.require_subcommand(1);

  std::string word_text, tuple_path, moves_path, cert_path, group_path, out_path;
  std::string strategy = "bfs", dedup = "exact";
  int rank = 26, k = 0, ak_n = 3, cap = 0, enum_cap = 4, search_cap = 0, finite_k = 2;
  std::uint64_t budget = 1'000'000, seed = 0;
  int threads = default_threads();
  bool perms = false;

  auto* reduce = app.add_subcommand("reduce", "freely reduce a word");
  reduce->add_option("word", word_text, "word in text format")->required();
  reduce->add_option("--rank", rank, "alphabet rank (default 26)");
  reduce->add_option("--out", out_path, "output file");

  auto* apply = app.add_subcommand("apply", "apply a move sequence to a tuple");
  apply->add_option("tuple", tuple_path, "tuple file")->required();
  apply->add_option("moves", moves_path, "moves file")->required();
  apply->add_option("--out", out_path, "output file");

  auto* akc = app.add_subcommand("ak", "emit the AK(n) relator pair");
  akc->add_option("n", ak_n, "parameter n >= 2")->required();
  akc->add_option("--out", out_path, "output file");

  auto* search = app.add_subcommand("search", "search for a trivialization path");
  search->add_option("tuple", tuple_path, "start tuple file")->required();
  search->add_option("--cap", cap, "total length cap (default start length + 2)");
  search->add_option("--budget", budget, "node budget (dedup insertions)");
  search->add_option("--strategy", strategy, "bfs | iddfs | bidir");
  search->add_option("--dedup", dedup, "exact | orbit");
  search->add_option("--seed", seed, "seed recorded in reports");
  search->add_option("--threads", threads, "worker threads (env AC_WORKBENCH_THREADS)");
  search->add_option("--out", out_path, "certificate output file");

  auto* verify = app.add_subcommand("verify", "replay and check a path certificate");
  verify->add_option("tuple", tuple_path, "start tuple file")->required();
  verify->add_option("certificate", cert_path, "certificate file")->required();

  auto* classify = app.add_subcommand("classify", "component sweep of candidate presentations");
  classify->add_option("--enum-cap", enum_cap, "total length cap for enumerated pairs");
  classify->add_option("--cap", search_cap, "search cap (default enum cap + 2)");
  classify->add_option("--budget", budget, "node budget");
  classify->add_option("--dedup", dedup, "exact | orbit");
  classify->add_option("--seed", seed, "seed recorded in reports");
  classify->add_option("--out", out_path, "report output file");

  auto* identity = app.add_subcommand("identity", "decide whether a sequence is the identity");
  identity->add_option("moves", moves_path, "moves file")->required();
  identity->add_option("--k", k, "tuple size (default: inferred)");

  auto* witness = app.add_subcommand("witness", "moved-point witness for a non-identity sequence");
  witness->add_option("moves", moves_path, "moves file")->required();
  witness->add_option("tuple", tuple_path, "tuple file (no identity entries)")->required();
  witness->add_option("--seed", seed, "seed recorded in reports");
  witness->add_option("--out", out_path, "output file");

  auto* finite = app.add_subcommand("finite", "exact FAC/AC/kernel report for a finite group");
  finite->add_option("group", group_path, "group table file (or generators with --perms)")
      ->required();
  finite->add_option("--k", finite_k, "tuple size (default 2)");
  finite->add_flag("--perms", perms, "input is a permutation-generator file");
  finite->add_option("--out", out_path, "report output file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (reduce->parsed()) return cmd_reduce(word_text, rank, out_path);
    if (apply->parsed()) return cmd_apply(tuple_path, moves_path, out_path);
    if (akc->parsed()) return cmd_ak(ak_n, out_path);
    if (search->parsed()) {
      return cmd_search(tuple_path, cap, budget, strategy, dedup, seed, threads, out_path);
    }
    if (verify->parsed()) return cmd_verify(tuple_path, cert_path);
    if (classify->parsed()) {
      const int sc = search_cap > 0 ? search_cap : enum_cap + 2;
      return cmd_classify(enum_cap, sc, budget, dedup, seed, out_path);
    }
    if (identity->parsed()) return cmd_identity(moves_path, k);
    if (witness->parsed()) return cmd_witness(moves_path, tuple_path, seed, out_path);
    if (finite->parsed()) return cmd_finite(group_path, finite_k, perms, out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUserError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUserError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
  return kExitUserError;
}
