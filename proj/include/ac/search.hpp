// search.hpp -- bounded exploration of the AC-graph: trivialization
// search with path certificates, AK(n) presets, and exhaustive
// classification sweeps at small total length.
//
// Determinism contract: for a fixed config the result (found or not,
// path length, report content) does not depend on the worker thread
// count; among equal-length paths the lexicographically least move
// sequence (canonical move order) is returned.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ac/moves.hpp"
#include "ac/tuple.hpp"

namespace ac {

enum class Strategy { Bfs, Iddfs, Bidirectional };
enum class DedupMode { Exact, OrbitNormalized };

struct SearchConfig {
  int length_cap = 0;  // prune states with total length above this
  std::uint64_t node_budget = 1'000'000;  // dedup-index insertions
  Strategy strategy = Strategy::Bfs;
  DedupMode dedup = DedupMode::Exact;
  std::uint64_t seed = 0;  // recorded in reports; no strategy randomizes ties
  int threads = 1;
};

/// A replayable search result: apply_sequence(start, moves) == end.
struct PathCertificate {
  Tuple start;
  MoveSequence moves;
  Tuple end;
};

enum class SearchStatus {
  Found,
  CapExhausted,     // frontier exhausted under the cap: no path exists there
  BudgetExhausted,  // inconclusive
};

struct SearchResult {
  SearchStatus status;
  std::optional<PathCertificate> certificate;
  std::uint64_t states_inserted = 0;
};

/// The AK(n) relator pair (a^n b^-(n+1), abaBAB) over rank 2; n >= 2.
Tuple ak(int n);

/// Searches for a move path from start to the generator tuple
/// (x_1,...,x_k), visiting only states of total length <= cap.  The
/// start must be balanced (rank == size) and within the cap.  The BFS
/// strategy returns a move-count-minimal path among paths whose every
/// intermediate state obeys the cap.  With orbit-normalized dedup the
/// path is extended by an explicit normalizing suffix so certificates
/// still end at the generator tuple exactly.
SearchResult trivialize(const Tuple& start, const SearchConfig& cfg);

/// Replays the moves and compares against the stored end; never trusts
/// the stored end tuple.
bool verify(const PathCertificate& cert);

struct ClassifyComponent {
  Tuple representative;       // least candidate in enumeration order
  std::uint64_t candidates;   // enumerated candidates lying in it
};

struct ClassifyReport {
  std::vector<ClassifyComponent> components;
  int generator_component = -1;  // index of the component of (a, b)
  bool budget_exhausted = false;
  std::uint64_t states_inserted = 0;
  std::uint64_t candidates = 0;
};

/// Enumerates all reduced rank-2 pairs with total length <= enum_cap
/// whose abelianization matrix has determinant +-1 (a necessary
/// condition to present the trivial group) and partitions them into
/// connected components of the AC-graph restricted to states of total
/// length <= search_cap.  Only k == 2 is supported.
ClassifyReport classify(int k, int enum_cap, int search_cap, std::uint64_t node_budget,
                        DedupMode dedup = DedupMode::Exact);

/// Writes the component report: one line per component
/// "component <id> size <n> rep <u> <v>".
void write_classify_report(std::ostream& out, const ClassifyReport& report);

/// Concrete move sequence carrying `from` to `to` when `to` is an
/// entry-permutation of `from` with some entries inverted (both maps are
/// realized by move compositions).  Throws std::invalid_argument when
/// the tuples are not related that way.
MoveSequence realize_variant(const Tuple& from, const Tuple& to);

/// Dedup key: the packed tuple, or the least packed key over all entry
/// permutations and entry inversions in orbit-normalized mode.
std::string canonical_key(const Tuple& t, DedupMode mode);

/// Certificate files are move files with "# start:" and "# end:" comment
/// lines holding inline tuples.  read_certificate takes the start tuple
/// from the caller and requires the end comment.
void write_certificate(std::ostream& out, const PathCertificate& cert, DedupMode mode,
                       std::uint64_t seed);
PathCertificate read_certificate(std::istream& in, const Tuple& start);

}  // namespace ac
