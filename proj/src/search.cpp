#include "ac/search.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <deque>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace ac {

namespace {

constexpr std::uint64_t kHeartbeatInterval = 1u << 22;

void heartbeat(std::uint64_t inserted) {
  if (inserted % kHeartbeatInterval == 0) {
    std::fprintf(stderr, "acwb: %llu states\n", static_cast<unsigned long long>(inserted));
  }
}

std::string pack_variant(const Tuple& t, const std::vector<int>& perm, unsigned inv_mask) {
  std::string key;
  key.reserve(total_length(t) + static_cast<std::size_t>(t.size()));
  for (int i = 0; i < t.size(); ++i) {
    if (i > 0) key.push_back('\0');
    const Word& w = t.entry(perm[static_cast<std::size_t>(i)]);
    if (inv_mask & (1u << i)) {
      for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
        key.push_back(static_cast<char>(it->inverse().code()));
      }
    } else {
      for (Letter l : w.letters()) key.push_back(static_cast<char>(l.code()));
    }
  }
  return key;
}

// One growing side of a search: packed states, parent links, dedup index.
class BfsStore {
 public:
  BfsStore(int rank, int k, DedupMode mode) : rank_(rank), k_(k), mode_(mode) {}

  std::size_t size() const { return parent_.size(); }
  int rank() const { return rank_; }
  int k() const { return k_; }
  DedupMode mode() const { return mode_; }

  std::optional<std::uint32_t> find(const std::string& canon) const {
    auto it = index_.find(std::string_view(canon));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::uint32_t insert(std::string canon, std::string rep, std::int32_t parent,
                       std::int32_t via_move, std::int32_t depth) {
    canon_.push_back(std::move(canon));
    if (mode_ == DedupMode::OrbitNormalized) rep_.push_back(std::move(rep));
    parent_.push_back(parent);
    via_move_.push_back(via_move);
    depth_.push_back(depth);
    const auto idx = static_cast<std::uint32_t>(parent_.size() - 1);
    index_.emplace(std::string_view(canon_.back()), idx);
    return idx;
  }

  const std::string& representative(std::uint32_t idx) const {
    return mode_ == DedupMode::OrbitNormalized ? rep_[idx] : canon_[idx];
  }

  Tuple tuple_at(std::uint32_t idx) const {
    return unpack_tuple(representative(idx), rank_, k_);
  }

  std::int32_t depth(std::uint32_t idx) const { return depth_[idx]; }

  std::vector<Move> path_moves(std::uint32_t idx, const std::vector<Move>& table) const {
    std::vector<Move> out;
    for (std::int32_t cur = static_cast<std::int32_t>(idx); parent_[static_cast<std::size_t>(
             cur)] >= 0;
         cur = parent_[static_cast<std::size_t>(cur)]) {
      out.push_back(table[static_cast<std::size_t>(via_move_[static_cast<std::size_t>(cur)])]);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  int rank_;
  int k_;
  DedupMode mode_;
  std::deque<std::string> canon_;
  std::deque<std::string> rep_;
  std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> via_move_;
  std::vector<std::int32_t> depth_;
  std::unordered_map<std::string_view, std::uint32_t> index_;
};

struct Expansion {
  std::uint32_t parent;
  std::uint16_t move_index;
  std::string rep_key;
  std::string canon_key;
};

// Expands one BFS layer.  Children are produced in (parent, move) order
// regardless of the thread count; the caller merges them sequentially.
std::vector<std::vector<Expansion>> expand_layer(const BfsStore& store, std::uint32_t begin,
                                                 std::uint32_t end,
                                                 const std::vector<Move>& moves, int cap,
                                                 int threads) {
  const std::uint32_t count = end - begin;
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(count)));
  std::vector<std::vector<Expansion>> chunks(static_cast<std::size_t>(workers));

  auto work = [&](int w) {
    const std::uint32_t lo = begin + count * static_cast<std::uint32_t>(w) /
                                         static_cast<std::uint32_t>(workers);
    const std::uint32_t hi = begin + count * static_cast<std::uint32_t>(w + 1) /
                                         static_cast<std::uint32_t>(workers);
    auto& out = chunks[static_cast<std::size_t>(w)];
    for (std::uint32_t idx = lo; idx < hi; ++idx) {
      const Tuple t = store.tuple_at(idx);
      for (std::size_t m = 0; m < moves.size(); ++m) {
        const Tuple child = apply_move(t, moves[m]);
        if (static_cast<int>(total_length(child)) > cap) continue;
        std::string rep = pack_tuple(child);
        std::string canon = store.mode() == DedupMode::Exact
                                ? rep
                                : canonical_key(child, DedupMode::OrbitNormalized);
        out.push_back(Expansion{idx, static_cast<std::uint16_t>(m), std::move(rep),
                                std::move(canon)});
      }
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  return chunks;
}

MoveSequence to_sequence(int k, std::vector<Move> moves) {
  MoveSequence s{k, std::move(moves)};
  return s;
}

// Lexicographic comparison in the canonical move order.
bool lex_less(const std::vector<Move>& a, const std::vector<Move>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

PathCertificate make_certificate(const Tuple& start, std::vector<Move> moves, DedupMode mode,
                                 const Tuple& target) {
  MoveSequence seq = to_sequence(start.size(), std::move(moves));
  Tuple end = apply_sequence(start, seq);
  if (mode == DedupMode::OrbitNormalized && end != target) {
    const MoveSequence suffix = realize_variant(end, target);
    seq = concat(seq, suffix);
    end = apply_sequence(start, seq);
  }
  return PathCertificate{start, std::move(seq), std::move(end)};
}

SearchResult run_bfs(const Tuple& start, const Tuple& target, const SearchConfig& cfg) {
  const int k = start.size();
  const std::vector<Move> moves = enumerate_moves(k, start.rank());
  const std::string target_canon = canonical_key(target, cfg.dedup);

  BfsStore store(start.rank(), k, cfg.dedup);
  std::uint64_t inserted = 0;

  const std::string start_canon = canonical_key(start, cfg.dedup);
  if (inserted >= cfg.node_budget) {
    return SearchResult{SearchStatus::BudgetExhausted, std::nullopt, inserted};
  }
  store.insert(start_canon, pack_tuple(start), -1, -1, 0);
  ++inserted;
  if (start_canon == target_canon) {
    return SearchResult{SearchStatus::Found,
                        make_certificate(start, {}, cfg.dedup, target), inserted};
  }

  std::uint32_t layer_begin = 0;
  std::uint32_t layer_end = 1;
  while (layer_begin < layer_end) {
    auto chunks = expand_layer(store, layer_begin, layer_end, moves, cfg.length_cap, cfg.threads);
    for (const auto& chunk : chunks) {
      for (const Expansion& e : chunk) {
        if (store.find(e.canon_key)) continue;
        if (e.canon_key == target_canon) {
          std::vector<Move> path = store.path_moves(e.parent, moves);
          path.push_back(moves[e.move_index]);
          return SearchResult{SearchStatus::Found,
                              make_certificate(start, std::move(path), cfg.dedup, target),
                              inserted};
        }
        if (inserted >= cfg.node_budget) {
          return SearchResult{SearchStatus::BudgetExhausted, std::nullopt, inserted};
        }
        store.insert(e.canon_key, e.rep_key, static_cast<std::int32_t>(e.parent),
                     static_cast<std::int32_t>(e.move_index), store.depth(e.parent) + 1);
        ++inserted;
        heartbeat(inserted);
      }
    }
    layer_begin = layer_end;
    layer_end = static_cast<std::uint32_t>(store.size());
  }
  return SearchResult{SearchStatus::CapExhausted, std::nullopt, inserted};
}

struct IddfsContext {
  const std::vector<Move>* moves;
  const std::string* target_canon;
  const SearchConfig* cfg;
  std::unordered_map<std::string, int> seen_depth;
  std::uint64_t inserted = 0;
  bool budget_out = false;
  bool cutoff = false;
  std::vector<Move> path;
  std::optional<std::vector<Move>> found;
};

void iddfs_visit(IddfsContext& ctx, const Tuple& t, int depth, int limit) {
  if (ctx.found || ctx.budget_out) return;
  if (depth == limit) {
    ctx.cutoff = true;
    return;
  }
  for (std::size_t m = 0; m < ctx.moves->size(); ++m) {
    const Tuple child = apply_move(t, (*ctx.moves)[m]);
    if (static_cast<int>(total_length(child)) > ctx.cfg->length_cap) continue;
    std::string canon = canonical_key(child, ctx.cfg->dedup);
    if (canon == *ctx.target_canon) {
      ctx.path.push_back((*ctx.moves)[m]);
      ctx.found = ctx.path;
      ctx.path.pop_back();
      return;
    }
    auto it = ctx.seen_depth.find(canon);
    if (it != ctx.seen_depth.end() && it->second <= depth + 1) continue;
    if (it == ctx.seen_depth.end()) {
      if (ctx.inserted >= ctx.cfg->node_budget) {
        ctx.budget_out = true;
        return;
      }
      ctx.seen_depth.emplace(std::move(canon), depth + 1);
      ++ctx.inserted;
      heartbeat(ctx.inserted);
    } else {
      it->second = depth + 1;
    }
    ctx.path.push_back((*ctx.moves)[m]);
    iddfs_visit(ctx, child, depth + 1, limit);
    ctx.path.pop_back();
    if (ctx.found || ctx.budget_out) return;
  }
}

SearchResult run_iddfs(const Tuple& start, const Tuple& target, const SearchConfig& cfg) {
  const int k = start.size();
  const std::vector<Move> moves = enumerate_moves(k, start.rank());
  const std::string target_canon = canonical_key(target, cfg.dedup);
  const std::string start_canon = canonical_key(start, cfg.dedup);

  std::uint64_t inserted_total = 0;
  if (start_canon == target_canon) {
    return SearchResult{SearchStatus::Found, make_certificate(start, {}, cfg.dedup, target), 1};
  }

  for (int limit = 1;; ++limit) {
    IddfsContext ctx;
    ctx.moves = &moves;
    ctx.target_canon = &target_canon;
    ctx.cfg = &cfg;
    if (inserted_total >= cfg.node_budget) {
      return SearchResult{SearchStatus::BudgetExhausted, std::nullopt, inserted_total};
    }
    ctx.seen_depth.emplace(start_canon, 0);
    ctx.inserted = inserted_total + 1;
    iddfs_visit(ctx, start, 0, limit);
    inserted_total = ctx.inserted;
    if (ctx.found) {
      return SearchResult{SearchStatus::Found,
                          make_certificate(start, std::move(*ctx.found), cfg.dedup, target),
                          inserted_total};
    }
    if (ctx.budget_out) {
      return SearchResult{SearchStatus::BudgetExhausted, std::nullopt, inserted_total};
    }
    if (!ctx.cutoff) {
      return SearchResult{SearchStatus::CapExhausted, std::nullopt, inserted_total};
    }
  }
}

SearchResult run_bidirectional(const Tuple& start, const Tuple& target,
                               const SearchConfig& cfg) {
  const int k = start.size();
  const std::vector<Move> moves = enumerate_moves(k, start.rank());

  BfsStore fwd(start.rank(), k, cfg.dedup);
  BfsStore bwd(start.rank(), k, cfg.dedup);
  std::uint64_t inserted = 0;

  const std::string start_canon = canonical_key(start, cfg.dedup);
  const std::string target_canon = canonical_key(target, cfg.dedup);
  if (start_canon == target_canon) {
    return SearchResult{SearchStatus::Found, make_certificate(start, {}, cfg.dedup, target), 1};
  }
  fwd.insert(start_canon, pack_tuple(start), -1, -1, 0);
  bwd.insert(target_canon, pack_tuple(target), -1, -1, 0);
  inserted += 2;

  struct Meet {
    std::uint32_t fwd_idx;
    std::uint32_t bwd_idx;
    int total;
  };
  std::vector<Meet> meets;
  int best = -1;

  std::uint32_t fwd_begin = 0, fwd_end = 1;
  std::uint32_t bwd_begin = 0, bwd_end = 1;
  int fwd_depth = 0, bwd_depth = 0;

  auto stitch = [&](const Meet& m) {
    std::vector<Move> path = fwd.path_moves(m.fwd_idx, moves);
    MoveSequence fwd_part = to_sequence(k, path);
    const Tuple a = apply_sequence(start, fwd_part);
    const Tuple b = bwd.tuple_at(m.bwd_idx);
    MoveSequence middle{k, {}};
    if (a != b) middle = realize_variant(a, b);
    const MoveSequence bwd_part = invert_sequence(to_sequence(k, bwd.path_moves(m.bwd_idx, moves)));
    return concat(concat(fwd_part, middle), bwd_part);
  };

  bool budget_out = false;
  while (!budget_out && (fwd_begin < fwd_end || bwd_begin < bwd_end)) {
    // Stop once no remaining meet can beat the best one found; a side
    // with an exhausted frontier has its whole component explored.
    if (best >= 0 && fwd_depth + bwd_depth >= best) break;
    if (best < 0 && (fwd_begin == fwd_end || bwd_begin == bwd_end)) break;

    const bool fwd_smaller = (fwd_end - fwd_begin) <= (bwd_end - bwd_begin);
    const bool expand_fwd = (fwd_begin < fwd_end) && (fwd_smaller || bwd_begin >= bwd_end);
    BfsStore& self = expand_fwd ? fwd : bwd;
    BfsStore& other = expand_fwd ? bwd : fwd;
    std::uint32_t& begin = expand_fwd ? fwd_begin : bwd_begin;
    std::uint32_t& end = expand_fwd ? fwd_end : bwd_end;
    int& depth = expand_fwd ? fwd_depth : bwd_depth;

    auto chunks = expand_layer(self, begin, end, moves, cfg.length_cap, cfg.threads);
    for (const auto& chunk : chunks) {
      if (budget_out) break;
      for (const Expansion& e : chunk) {
        if (self.find(e.canon_key)) continue;
        if (inserted >= cfg.node_budget) {
          budget_out = true;
          break;
        }
        const std::uint32_t idx =
            self.insert(e.canon_key, e.rep_key, static_cast<std::int32_t>(e.parent),
                        static_cast<std::int32_t>(e.move_index), self.depth(e.parent) + 1);
        ++inserted;
        heartbeat(inserted);
        if (auto hit = other.find(e.canon_key)) {
          const int total = self.depth(idx) + other.depth(*hit);
          const Meet meet = expand_fwd ? Meet{idx, *hit, total} : Meet{*hit, idx, total};
          if (best < 0 || total < best) best = total;
          meets.push_back(meet);
        }
      }
    }
    begin = end;
    end = static_cast<std::uint32_t>(self.size());
    ++depth;
  }

  if (best < 0) {
    return SearchResult{budget_out ? SearchStatus::BudgetExhausted : SearchStatus::CapExhausted,
                        std::nullopt, inserted};
  }
  std::optional<MoveSequence> best_seq;
  for (const Meet& m : meets) {
    if (m.total != best) continue;
    MoveSequence seq = stitch(m);
    if (!best_seq || lex_less(seq.moves, best_seq->moves)) best_seq = std::move(seq);
  }
  PathCertificate cert = make_certificate(start, best_seq->moves, cfg.dedup, target);
  // Stitched certificates are re-verified rather than trusted.
  if (apply_sequence(cert.start, cert.moves) != cert.end || cert.end != target) {
    throw std::runtime_error("bidirectional stitch failed verification (bug)");
  }
  return SearchResult{SearchStatus::Found, std::move(cert), inserted};
}

}  // namespace

Tuple ak(int n) {
  if (n < 2) throw std::invalid_argument("ak(n) requires n >= 2");
  std::vector<Letter> u;
  for (int i = 0; i < n; ++i) u.push_back(Letter(1, +1));
  for (int i = 0; i < n + 1; ++i) u.push_back(Letter(2, -1));
  const std::vector<Letter> v{Letter(1, +1), Letter(2, +1), Letter(1, +1),
                              Letter(2, -1), Letter(1, -1), Letter(2, -1)};
  return Tuple(2, {Word::reduce(2, u), Word::reduce(2, v)});
}

SearchResult trivialize(const Tuple& start, const SearchConfig& cfg) {
  if (start.rank() != start.size()) {
    throw std::invalid_argument("trivialize: start must be balanced (rank == size)");
  }
  if (static_cast<int>(total_length(start)) > cfg.length_cap) {
    throw std::invalid_argument("trivialize: start exceeds the length cap");
  }
  if (cfg.node_budget == 0) throw std::invalid_argument("trivialize: node budget must be positive");
  const Tuple target = generator_tuple(start.size());
  switch (cfg.strategy) {
    case Strategy::Bfs:
      return run_bfs(start, target, cfg);
    case Strategy::Iddfs:
      return run_iddfs(start, target, cfg);
    case Strategy::Bidirectional:
      return run_bidirectional(start, target, cfg);
  }
  throw std::logic_error("unreachable");
}

bool verify(const PathCertificate& cert) {
  if (cert.moves.k != cert.start.size()) return false;
  try {
    return apply_sequence(cert.start, cert.moves) == cert.end;
  } catch (const std::exception&) {
    return false;
  }
}

namespace {

// Signed generator exponent sums; the 2x2 abelianization determinant.
long long abelian_det(const Tuple& t) {
  long long e[2][2] = {{0, 0}, {0, 0}};
  for (int i = 0; i < 2; ++i) {
    for (Letter l : t.entry(i).letters()) {
      e[i][l.index() - 1] += l.sign();
    }
  }
  return e[0][0] * e[1][1] - e[0][1] * e[1][0];
}

// All reduced rank-2 words of each length up to cap, in shortlex order.
std::vector<std::vector<Word>> reduced_words_by_length(int cap) {
  std::vector<std::vector<Word>> by_len(static_cast<std::size_t>(cap) + 1);
  by_len[0].push_back(Word(2));
  std::vector<Letter> alphabet = {Letter(1, +1), Letter(1, -1), Letter(2, +1), Letter(2, -1)};
  std::sort(alphabet.begin(), alphabet.end());
  for (int len = 1; len <= cap; ++len) {
    for (const Word& w : by_len[static_cast<std::size_t>(len - 1)]) {
      for (Letter l : alphabet) {
        if (!w.empty() && w.back() == l.inverse()) continue;
        std::vector<Letter> raw = w.letters();
        raw.push_back(l);
        by_len[static_cast<std::size_t>(len)].push_back(Word::reduce(2, raw));
      }
    }
  }
  return by_len;
}

}  // namespace

ClassifyReport classify(int k, int enum_cap, int search_cap, std::uint64_t node_budget,
                        DedupMode dedup) {
  if (k != 2) throw std::invalid_argument("classify: only k == 2 is supported");
  if (enum_cap < 2 || enum_cap > search_cap) {
    throw std::invalid_argument("classify: need 2 <= enum_cap <= search_cap");
  }
  const std::vector<Move> moves = enumerate_moves(2, 2);
  const auto by_len = reduced_words_by_length(enum_cap);

  std::vector<Tuple> candidates;
  for (int total = 2; total <= enum_cap; ++total) {
    for (int lu = 0; lu <= total; ++lu) {
      for (const Word& u : by_len[static_cast<std::size_t>(lu)]) {
        for (const Word& v : by_len[static_cast<std::size_t>(total - lu)]) {
          Tuple t(2, {u, v});
          const long long det = abelian_det(t);
          if (det == 1 || det == -1) candidates.push_back(std::move(t));
        }
      }
    }
  }

  ClassifyReport report;
  report.candidates = candidates.size();
  // canonical key -> component id, over every state touched by a flood
  std::unordered_map<std::string, std::uint32_t> visited;
  std::uint64_t inserted = 0;

  for (const Tuple& cand : candidates) {
    std::string canon = canonical_key(cand, dedup);
    if (visited.count(canon)) continue;
    const auto comp_id = static_cast<std::uint32_t>(report.components.size());
    report.components.push_back(ClassifyComponent{cand, 0});
    // flood the component under the search cap
    std::deque<std::string> frontier;  // packed representatives
    visited.emplace(canon, comp_id);
    ++inserted;
    frontier.push_back(pack_tuple(cand));
    while (!frontier.empty()) {
      const Tuple t = unpack_tuple(frontier.front(), 2, 2);
      frontier.pop_front();
      for (const Move& m : moves) {
        const Tuple child = apply_move(t, m);
        if (static_cast<int>(total_length(child)) > search_cap) continue;
        std::string child_canon = canonical_key(child, dedup);
        if (visited.count(child_canon)) continue;
        if (inserted >= node_budget) {
          report.budget_exhausted = true;
          report.states_inserted = inserted;
          return report;
        }
        visited.emplace(std::move(child_canon), comp_id);
        ++inserted;
        heartbeat(inserted);
        frontier.push_back(pack_tuple(child));
      }
    }
  }

  for (const Tuple& cand : candidates) {
    const auto it = visited.find(canonical_key(cand, dedup));
    ++report.components[it->second].candidates;
  }
  const auto gen_it = visited.find(canonical_key(generator_tuple(2), dedup));
  if (gen_it != visited.end()) {
    report.generator_component = static_cast<int>(gen_it->second);
  }
  report.states_inserted = inserted;
  return report;
}

void write_classify_report(std::ostream& out, const ClassifyReport& report) {
  for (std::size_t i = 0; i < report.components.size(); ++i) {
    const auto& c = report.components[i];
    out << "component " << i << " size " << c.candidates << " rep "
        << format_word(c.representative.entry(0)) << ' '
        << format_word(c.representative.entry(1)) << '\n';
  }
  out << "components " << report.components.size() << " candidates " << report.candidates
      << " generator_component " << report.generator_component
      << (report.budget_exhausted ? " (budget exhausted: partial)" : "") << '\n';
}

MoveSequence realize_variant(const Tuple& from, const Tuple& to) {
  if (from.rank() != to.rank() || from.size() != to.size()) {
    throw std::invalid_argument("realize_variant: shape mismatch");
  }
  const int k = from.size();
  MoveSequence seq{k, {}};
  Tuple cur = from;
  auto emit = [&](Move m) {
    seq.moves.push_back(m);
    cur = apply_move(cur, m);
  };
  for (int i = 0; i < k; ++i) {
    const Word& want = to.entry(i);
    int exact = -1, inverted = -1;
    for (int j = i; j < k; ++j) {
      if (exact < 0 && cur.entry(j) == want) exact = j;
      if (inverted < 0 && invert(cur.entry(j)) == want) inverted = j;
    }
    const int j = exact >= 0 ? exact : inverted;
    if (j < 0) {
      throw std::invalid_argument(
          "realize_variant: tuples are not permutation-inversion variants");
    }
    if (j != i) {
      // (p, q) at entries (i, j) -> (q, p); see the derivation in the tests.
      const Word p = cur.entry(i);
      emit(Move::right_multiply(i + 1, j + 1, +1));
      emit(Move::right_multiply(j + 1, i + 1, -1));
      emit(Move::right_multiply(i + 1, j + 1, +1));
      emit(Move::invert_entry(j + 1));
      for (Letter l : p.letters()) emit(Move::conjugate_entry(i + 1, l));
    }
    if (cur.entry(i) != want) emit(Move::invert_entry(i + 1));
    if (cur.entry(i) != want) {
      throw std::invalid_argument(
          "realize_variant: tuples are not permutation-inversion variants");
    }
  }
  if (cur != to) {
    throw std::invalid_argument("realize_variant: tuples are not permutation-inversion variants");
  }
  return seq;
}

std::string canonical_key(const Tuple& t, DedupMode mode) {
  if (mode == DedupMode::Exact) return pack_tuple(t);
  const int k = t.size();
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  bool first = true;
  do {
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      std::string key = pack_variant(t, perm, mask);
      if (first || key < best) {
        best = std::move(key);
        first = false;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

void write_certificate(std::ostream& out, const PathCertificate& cert, DedupMode mode,
                       std::uint64_t seed) {
  out << "# ac-workbench path certificate\n";
  out << "# seed: " << seed << "\n";
  out << "# dedup: " << (mode == DedupMode::Exact ? "exact" : "orbit") << "\n";
  out << "# start: " << format_tuple_inline(cert.start) << "\n";
  write_moves(out, cert.moves);
  out << "# end: " << format_tuple_inline(cert.end) << "\n";
}

PathCertificate read_certificate(std::istream& in, const Tuple& start) {
  MoveSequence seq{start.size(), {}};
  std::optional<Tuple> end;
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos) continue;
    if (line[i] == '#') {
      const std::size_t e = line.find("# end:", i);
      if (e != std::string::npos) {
        end = parse_tuple_inline(std::string_view(line).substr(e + 6), start.rank());
      }
      continue;
    }
    const std::size_t j = line.find_last_not_of(" \t\r");
    seq.moves.push_back(parse_move(std::string_view(line).substr(i, j - i + 1)));
  }
  if (!end) throw std::invalid_argument("certificate file has no '# end:' comment");
  validate_sequence(seq);
  return PathCertificate{start, std::move(seq), std::move(*end)};
}

}  // namespace ac
