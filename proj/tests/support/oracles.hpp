// Independent brute-force oracles.  These deliberately avoid the search
// and stabilizer-chain code paths they are used to check.

#pragma once

#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ac/finite.hpp"
#include "ac/moves.hpp"
#include "ac/tuple.hpp"

namespace ac::testing {

/// Exact move-count distances from the source to every tuple reachable
/// through states of total length <= cap, by a plain breadth-first walk.
inline std::unordered_map<std::string, int> bfs_distances(const Tuple& source, int cap) {
  const std::vector<Move> moves = enumerate_moves(source.size(), source.rank());
  std::unordered_map<std::string, int> dist;
  std::deque<Tuple> queue;
  dist.emplace(pack_tuple(source), 0);
  queue.push_back(source);
  while (!queue.empty()) {
    const Tuple t = queue.front();
    queue.pop_front();
    const int d = dist.at(pack_tuple(t));
    for (const Move& m : moves) {
      Tuple child = apply_move(t, m);
      if (static_cast<int>(total_length(child)) > cap) continue;
      const std::string key = pack_tuple(child);
      if (dist.count(key)) continue;
      dist.emplace(key, d + 1);
      queue.push_back(std::move(child));
    }
  }
  return dist;
}

/// Brute-force closure size of a permutation group, or nullopt when the
/// cap is exceeded.
inline std::optional<std::size_t> closure_order(const std::vector<Permutation>& generators,
                                                std::size_t cap) {
  if (generators.empty()) return 1;
  const std::uint32_t degree = generators.front().degree();
  auto key_of = [](const Permutation& p) {
    std::string key;
    key.reserve(p.degree() * 4);
    for (std::uint32_t x = 0; x < p.degree(); ++x) {
      const std::uint32_t v = p[x];
      key.append(reinterpret_cast<const char*>(&v), 4);
    }
    return key;
  };
  std::unordered_set<std::string> seen;
  std::deque<Permutation> queue;
  const Permutation id(degree);
  seen.insert(key_of(id));
  queue.push_back(id);
  while (!queue.empty()) {
    const Permutation p = queue.front();
    queue.pop_front();
    for (const Permutation& g : generators) {
      Permutation q = compose(p, g);
      std::string key = key_of(q);
      if (seen.count(key)) continue;
      if (seen.size() >= cap) return std::nullopt;
      seen.insert(std::move(key));
      queue.push_back(std::move(q));
    }
  }
  return seen.size();
}

}  // namespace ac::testing
