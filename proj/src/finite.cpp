#include "ac/finite.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace ac {

namespace {

constexpr std::uint64_t kDomainCeiling = 1u << 24;
constexpr int kClosureCeiling = 10'000;
constexpr int kExhaustiveAssocOrder = 128;

unsigned __int128 checked_mul(unsigned __int128 a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<unsigned __int128>::max() / b) {
    throw std::overflow_error("group order exceeds 128 bits");
  }
  return a * b;
}

}  // namespace

FiniteGroup FiniteGroup::from_table(int order, std::vector<int> table) {
  if (order < 1) throw std::invalid_argument("group order must be positive");
  if (table.size() != static_cast<std::size_t>(order) * static_cast<std::size_t>(order)) {
    throw std::invalid_argument("group table has wrong size");
  }
  const auto at = [&](int a, int b) {
    return table[static_cast<std::size_t>(a) * static_cast<std::size_t>(order) +
                 static_cast<std::size_t>(b)];
  };
  for (int v : table) {
    if (v < 0 || v >= order) throw std::invalid_argument("group table entry out of range");
  }
  for (int a = 0; a < order; ++a) {
    if (at(0, a) != a || at(a, 0) != a) {
      throw std::invalid_argument("not a group table: element 0 is not an identity");
    }
  }
  std::vector<int> inverse(static_cast<std::size_t>(order), -1);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      if (at(a, b) == 0) {
        if (at(b, a) != 0) {
          throw std::invalid_argument("not a group table: one-sided inverse for element " +
                                      std::to_string(a));
        }
        inverse[static_cast<std::size_t>(a)] = b;
        break;
      }
    }
    if (inverse[static_cast<std::size_t>(a)] < 0) {
      throw std::invalid_argument("not a group table: element " + std::to_string(a) +
                                  " has no inverse");
    }
  }
  if (order <= kExhaustiveAssocOrder) {
    for (int a = 0; a < order; ++a) {
      for (int b = 0; b < order; ++b) {
        for (int c = 0; c < order; ++c) {
          if (at(at(a, b), c) != at(a, at(b, c))) {
            throw std::invalid_argument("not a group table: associativity fails at (" +
                                        std::to_string(a) + "," + std::to_string(b) + "," +
                                        std::to_string(c) + ")");
          }
        }
      }
    }
  } else {
    // Deterministic sample for large tables.
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    for (int trial = 0; trial < 1'000'000; ++trial) {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      const int a = static_cast<int>((state >> 33) % static_cast<std::uint64_t>(order));
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      const int b = static_cast<int>((state >> 33) % static_cast<std::uint64_t>(order));
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      const int c = static_cast<int>((state >> 33) % static_cast<std::uint64_t>(order));
      if (at(at(a, b), c) != at(a, at(b, c))) {
        throw std::invalid_argument("not a group table: associativity fails at (" +
                                    std::to_string(a) + "," + std::to_string(b) + "," +
                                    std::to_string(c) + ")");
      }
    }
  }
  return FiniteGroup(order, std::move(table), std::move(inverse));
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<int>>& generators) {
  if (generators.empty()) {
    return from_table(1, {0});
  }
  const std::size_t degree = generators.front().size();
  std::vector<std::vector<int>> gens;
  for (const auto& g : generators) {
    if (g.size() != degree) {
      throw std::invalid_argument("permutation generators disagree on degree");
    }
    std::vector<char> seen(degree, 0);
    for (int v : g) {
      if (v < 0 || static_cast<std::size_t>(v) >= degree || seen[static_cast<std::size_t>(v)]) {
        throw std::invalid_argument("generator line is not a permutation");
      }
      seen[static_cast<std::size_t>(v)] = 1;
    }
    gens.push_back(g);
  }

  std::vector<int> identity(degree);
  for (std::size_t i = 0; i < degree; ++i) identity[i] = static_cast<int>(i);

  auto key_of = [](const std::vector<int>& p) {
    std::string key;
    key.reserve(p.size() * sizeof(int));
    for (int v : p) key.append(reinterpret_cast<const char*>(&v), sizeof(int));
    return key;
  };

  std::vector<std::vector<int>> elements{identity};
  std::unordered_map<std::string, int> index;
  index.emplace(key_of(identity), 0);
  for (std::size_t pos = 0; pos < elements.size(); ++pos) {
    for (const auto& g : gens) {
      std::vector<int> prod(degree);
      for (std::size_t x = 0; x < degree; ++x) {
        prod[x] = g[static_cast<std::size_t>(elements[pos][x])];
      }
      const std::string key = key_of(prod);
      if (index.count(key)) continue;
      if (elements.size() >= kClosureCeiling) {
        throw std::invalid_argument("permutation closure exceeds the 10^4 element ceiling");
      }
      index.emplace(key, static_cast<int>(elements.size()));
      elements.push_back(std::move(prod));
    }
  }

  const int order = static_cast<int>(elements.size());
  std::vector<int> table(static_cast<std::size_t>(order) * static_cast<std::size_t>(order));
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      std::vector<int> prod(degree);
      for (std::size_t x = 0; x < degree; ++x) {
        prod[x] = elements[static_cast<std::size_t>(b)]
                          [static_cast<std::size_t>(elements[static_cast<std::size_t>(a)][x])];
      }
      table[static_cast<std::size_t>(a) * static_cast<std::size_t>(order) +
            static_cast<std::size_t>(b)] = index.at(key_of(prod));
    }
  }
  return from_table(order, std::move(table));
}

FiniteGroup read_group_table(std::istream& in) {
  std::vector<int> values;
  std::string line;
  bool have_order = false;
  int order = 0;
  while (std::getline(in, line)) {
    const std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos || line[i] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      if (!have_order && !std::isdigit(static_cast<unsigned char>(tok[0]))) continue;
      int v;
      try {
        v = std::stoi(tok);
      } catch (const std::exception&) {
        throw std::invalid_argument("group table: bad token '" + tok + "'");
      }
      if (!have_order) {
        order = v;
        have_order = true;
      } else {
        values.push_back(v);
      }
    }
  }
  if (!have_order) throw std::invalid_argument("group table: missing order line");
  return FiniteGroup::from_table(order, std::move(values));
}

FiniteGroup read_group_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open group file: " + path);
  return read_group_table(in);
}

void write_group_table(std::ostream& out, const FiniteGroup& g) {
  out << g.order() << '\n';
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) {
      out << g.mul(a, b) << (b + 1 == g.order() ? '\n' : ' ');
    }
  }
}

std::vector<std::vector<int>> read_permutation_generators(std::istream& in) {
  std::vector<std::vector<int>> gens;
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos || line[i] == '#') continue;
    std::istringstream ls(line);
    std::vector<int> images;
    int v;
    while (ls >> v) images.push_back(v);
    if (!images.empty()) gens.push_back(std::move(images));
  }
  return gens;
}

std::vector<int> normal_closure(const FiniteGroup& g, std::span<const int> elements) {
  const int n = g.order();
  std::vector<char> member(static_cast<std::size_t>(n), 0);
  std::vector<int> closure;
  auto add = [&](int x) {
    if (!member[static_cast<std::size_t>(x)]) {
      member[static_cast<std::size_t>(x)] = 1;
      closure.push_back(x);
    }
  };
  add(0);
  for (int x : elements) {
    if (x < 0 || x >= n) throw std::invalid_argument("normal_closure: element out of range");
    for (int w = 0; w < n; ++w) add(g.conj(x, w));
  }
  // Product closure with growing bounds; inverses come for free in a
  // finite group.
  for (std::size_t i = 0; i < closure.size(); ++i) {
    for (std::size_t j = 0; j < closure.size(); ++j) {
      add(g.mul(closure[i], closure[j]));
    }
  }
  std::sort(closure.begin(), closure.end());
  return closure;
}

std::uint64_t tuple_space_size(const FiniteGroup& g, int k) {
  if (k < 2) throw std::invalid_argument("tuple size k must be at least 2");
  std::uint64_t size = 1;
  for (int i = 0; i < k; ++i) {
    size *= static_cast<std::uint64_t>(g.order());
    if (size > kDomainCeiling) {
      throw std::invalid_argument("domain G^k exceeds the 2^24 point ceiling");
    }
  }
  return size;
}

std::uint32_t encode_tuple_index(const FiniteGroup& g, std::span<const int> entries) {
  std::uint64_t index = 0;
  for (std::size_t i = entries.size(); i-- > 0;) {
    index = index * static_cast<std::uint64_t>(g.order()) + static_cast<std::uint64_t>(entries[i]);
  }
  return static_cast<std::uint32_t>(index);
}

std::vector<int> decode_tuple_index(const FiniteGroup& g, int k, std::uint32_t index) {
  std::vector<int> entries(static_cast<std::size_t>(k));
  std::uint64_t rest = index;
  for (int i = 0; i < k; ++i) {
    entries[static_cast<std::size_t>(i)] = static_cast<int>(rest % g.order());
    rest /= static_cast<std::uint64_t>(g.order());
  }
  return entries;
}

std::vector<std::uint32_t> n_k_set(const FiniteGroup& g, int k) {
  const std::uint64_t size = tuple_space_size(g, k);
  std::map<std::vector<int>, bool> memo;  // by sorted unique entry set
  std::vector<std::uint32_t> out;
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    std::vector<int> entries = decode_tuple_index(g, k, static_cast<std::uint32_t>(idx));
    std::vector<int> key = entries;
    std::sort(key.begin(), key.end());
    key.erase(std::unique(key.begin(), key.end()), key.end());
    auto it = memo.find(key);
    bool generates;
    if (it != memo.end()) {
      generates = it->second;
    } else {
      generates = static_cast<int>(normal_closure(g, key).size()) == g.order();
      memo.emplace(std::move(key), generates);
    }
    if (generates) out.push_back(static_cast<std::uint32_t>(idx));
  }
  return out;
}

Permutation::Permutation(std::uint32_t degree) : images_(degree) {
  for (std::uint32_t i = 0; i < degree; ++i) images_[i] = i;
}

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (std::uint32_t v : images_) {
    if (v >= images_.size() || seen[v]) {
      throw std::invalid_argument("image array is not a permutation");
    }
    seen[v] = 1;
  }
}

bool Permutation::is_identity() const {
  for (std::uint32_t i = 0; i < degree(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::uint32_t i = 0; i < degree(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& f, const Permutation& g) {
  if (f.degree() != g.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<std::uint32_t> images(f.degree());
  for (std::uint32_t i = 0; i < f.degree(); ++i) images[i] = g[f[i]];
  return Permutation(std::move(images));
}

FiniteMove invert_move(const FiniteGroup& g, const FiniteMove& m) {
  FiniteMove out = m;
  switch (m.kind) {
    case FiniteMove::Kind::RightMultiply:
    case FiniteMove::Kind::LeftMultiply:
      out.sign = -m.sign;
      break;
    case FiniteMove::Kind::Invert:
      break;
    case FiniteMove::Kind::Conjugate:
      out.w = g.inv(m.w);
      break;
  }
  return out;
}

Permutation move_permutation(const FiniteGroup& g, int k, const FiniteMove& m) {
  const std::uint64_t size = tuple_space_size(g, k);
  if (m.i < 1 || m.i > k) throw std::invalid_argument("move entry index out of range");
  if ((m.kind == FiniteMove::Kind::RightMultiply || m.kind == FiniteMove::Kind::LeftMultiply) &&
      (m.j < 1 || m.j > k || m.j == m.i)) {
    throw std::invalid_argument("move entry index out of range");
  }
  if (m.kind == FiniteMove::Kind::Conjugate && (m.w < 0 || m.w >= g.order())) {
    throw std::invalid_argument("conjugator element out of range");
  }
  std::vector<std::uint32_t> images(size);
  std::vector<int> entries;
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    entries = decode_tuple_index(g, k, static_cast<std::uint32_t>(idx));
    int& ui = entries[static_cast<std::size_t>(m.i - 1)];
    switch (m.kind) {
      case FiniteMove::Kind::RightMultiply: {
        const int uj = entries[static_cast<std::size_t>(m.j - 1)];
        ui = g.mul(ui, m.sign > 0 ? uj : g.inv(uj));
        break;
      }
      case FiniteMove::Kind::LeftMultiply: {
        const int uj = entries[static_cast<std::size_t>(m.j - 1)];
        ui = g.mul(m.sign > 0 ? uj : g.inv(uj), ui);
        break;
      }
      case FiniteMove::Kind::Invert:
        ui = g.inv(ui);
        break;
      case FiniteMove::Kind::Conjugate:
        ui = g.conj(ui, m.w);
        break;
    }
    images[idx] = encode_tuple_index(g, entries);
  }
  return Permutation(std::move(images));
}

std::vector<FiniteMove> elementary_moves(const FiniteGroup& g, int k) {
  std::vector<FiniteMove> out;
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      if (i == j) continue;
      out.push_back(FiniteMove{FiniteMove::Kind::RightMultiply, i, j, +1, 0});
      out.push_back(FiniteMove{FiniteMove::Kind::RightMultiply, i, j, -1, 0});
      out.push_back(FiniteMove{FiniteMove::Kind::LeftMultiply, i, j, +1, 0});
      out.push_back(FiniteMove{FiniteMove::Kind::LeftMultiply, i, j, -1, 0});
    }
  }
  for (int i = 1; i <= k; ++i) {
    out.push_back(FiniteMove{FiniteMove::Kind::Invert, i, 0, +1, 0});
  }
  // w == 0 conjugates trivially and is omitted.
  for (int i = 1; i <= k; ++i) {
    for (int w = 1; w < g.order(); ++w) {
      out.push_back(FiniteMove{FiniteMove::Kind::Conjugate, i, 0, +1, w});
    }
  }
  return out;
}

StabilizerChain::StabilizerChain(std::uint32_t degree, std::vector<Permutation> generators,
                                 std::vector<std::uint32_t> prescribed_base)
    : degree_(degree) {
  for (std::uint32_t b : prescribed_base) {
    if (b >= degree_) throw std::invalid_argument("base point out of range");
    base_.push_back(b);
    levels_.push_back(Level{b, {}, {}});
  }
  for (Permutation& p : generators) {
    if (p.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
    if (p.is_identity()) continue;
    extend_base_for(p);
    entry_.push_back(entry_level(p));
    strong_.push_back(std::move(p));
  }

  if (levels_.empty()) return;

  std::size_t i = levels_.size();
  while (i-- > 0) {
    rebuild_orbit(i);
    bool complete = true;
    // Snapshot: adding a generator aborts the scan and revisits i anyway.
    const std::vector<std::uint32_t> orbit_snapshot = levels_[i].orbit;
    for (std::size_t oi = 0; oi < orbit_snapshot.size() && complete; ++oi) {
      const std::uint32_t beta = orbit_snapshot[oi];
      const Permutation u_beta = transversal(i, beta);
      for (std::size_t gi = 0; gi < strong_.size() && complete; ++gi) {
        if (entry_[gi] < i) continue;
        const Permutation& x = strong_[gi];
        const Permutation u_image = transversal(i, x[beta]);
        const Permutation schreier = compose(compose(u_beta, x), u_image.inverse());
        if (schreier.is_identity()) continue;
        auto [residue, level_hit] = sift_from(schreier, i + 1);
        if (residue.is_identity()) continue;
        if (level_hit == levels_.size()) {
          extend_base_for(residue);
        }
        entry_.push_back(entry_level(residue));
        strong_.push_back(std::move(residue));
        i = entry_.back() + 1;  // reprocess from the new generator's level down
        complete = false;
      }
    }
  }
}

void StabilizerChain::extend_base_for(const Permutation& p) {
  // Already moves a base point?
  for (std::uint32_t b : base_) {
    if (p[b] != b) return;
  }
  for (std::uint32_t x = 0; x < degree_; ++x) {
    if (p[x] != x) {
      base_.push_back(x);
      levels_.push_back(Level{x, {}, {}});
      return;
    }
  }
  throw std::logic_error("extend_base_for called with the identity");
}

std::size_t StabilizerChain::entry_level(const Permutation& p) const {
  for (std::size_t l = 0; l < base_.size(); ++l) {
    if (p[base_[l]] != base_[l]) return l;
  }
  throw std::logic_error("strong generator fixes the whole base");
}

void StabilizerChain::rebuild_orbit(std::size_t level) {
  Level& lv = levels_[level];
  lv.tree.assign(degree_, -1);
  lv.orbit.clear();
  lv.tree[lv.point] = (static_cast<std::int64_t>(0x7fffffff) << 32) |
                      static_cast<std::int64_t>(lv.point);
  lv.orbit.push_back(lv.point);
  for (std::size_t pos = 0; pos < lv.orbit.size(); ++pos) {
    const std::uint32_t gamma = lv.orbit[pos];
    for (std::size_t gi = 0; gi < strong_.size(); ++gi) {
      if (entry_[gi] < level) continue;
      const std::uint32_t delta = strong_[gi][gamma];
      if (lv.tree[delta] >= 0) continue;
      lv.tree[delta] = (static_cast<std::int64_t>(gi) << 32) | static_cast<std::int64_t>(gamma);
      lv.orbit.push_back(delta);
    }
  }
}

bool StabilizerChain::in_orbit(std::size_t level, std::uint32_t beta) const {
  return levels_[level].tree[beta] >= 0;
}

Permutation StabilizerChain::transversal(std::size_t level, std::uint32_t beta) const {
  const Level& lv = levels_[level];
  std::vector<std::uint32_t> gens_on_path;
  std::uint32_t cur = beta;
  while (cur != lv.point) {
    const std::int64_t packed = lv.tree[cur];
    const auto gi = static_cast<std::uint32_t>(packed >> 32);
    gens_on_path.push_back(gi);
    cur = static_cast<std::uint32_t>(packed & 0xffffffff);
  }
  Permutation u(degree_);
  for (auto it = gens_on_path.rbegin(); it != gens_on_path.rend(); ++it) {
    u = compose(u, strong_[*it]);
  }
  return u;
}

std::pair<Permutation, std::size_t> StabilizerChain::sift_from(Permutation p,
                                                               std::size_t level) const {
  for (std::size_t l = level; l < levels_.size(); ++l) {
    if (p.is_identity()) return {std::move(p), l};
    const std::uint32_t delta = p[levels_[l].point];
    if (delta == levels_[l].point) continue;
    if (!in_orbit(l, delta)) return {std::move(p), l};
    p = compose(p, transversal(l, delta).inverse());
  }
  return {std::move(p), levels_.size()};
}

std::size_t StabilizerChain::orbit_size(std::size_t level) const {
  return levels_[level].orbit.size();
}

unsigned __int128 StabilizerChain::order_from_level(std::size_t level) const {
  unsigned __int128 order = 1;
  for (std::size_t l = level; l < levels_.size(); ++l) {
    order = checked_mul(order, levels_[l].orbit.size());
  }
  return order;
}

bool StabilizerChain::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  auto [residue, level] = sift_from(p, 0);
  (void)level;
  return residue.is_identity();
}

std::vector<Permutation> StabilizerChain::strong_generators() const { return strong_; }

std::vector<Permutation> StabilizerChain::generators_from_level(std::size_t level) const {
  std::vector<Permutation> out;
  for (std::size_t gi = 0; gi < strong_.size(); ++gi) {
    if (entry_[gi] >= level) out.push_back(strong_[gi]);
  }
  return out;
}

std::string to_decimal(unsigned __int128 value) {
  if (value == 0) return "0";
  std::string out;
  while (value > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

namespace {

std::vector<Permutation> move_generators(const FiniteGroup& g, int k) {
  std::vector<Permutation> gens;
  for (const FiniteMove& m : elementary_moves(g, k)) {
    Permutation p = move_permutation(g, k, m);
    if (p.is_identity()) continue;
    if (std::find(gens.begin(), gens.end(), p) != gens.end()) continue;
    gens.push_back(std::move(p));
  }
  return gens;
}

}  // namespace

StabilizerChain fac_group(const FiniteGroup& g, int k) {
  const std::uint64_t size = tuple_space_size(g, k);
  return StabilizerChain(static_cast<std::uint32_t>(size), move_generators(g, k));
}

KernelReport kernel_of_lambda(const FiniteGroup& g, int k) {
  const std::uint64_t size = tuple_space_size(g, k);
  const std::vector<std::uint32_t> nk = n_k_set(g, k);
  if (nk.empty()) {
    throw std::invalid_argument("N_k(G) is empty: the restriction map is undefined");
  }
  StabilizerChain chain(static_cast<std::uint32_t>(size), move_generators(g, k), nk);

  KernelReport report;
  report.n_k_size = nk.size();
  report.fac_order = chain.order();
  report.kernel_order = chain.order_from_level(nk.size());
  // exact by Lagrange: the kernel levels are a suffix of the chain
  report.ac_order = report.fac_order / report.kernel_order;
  for (Permutation& p : chain.generators_from_level(nk.size())) {
    if (p.is_identity()) continue;
    for (std::uint32_t point : nk) {
      if (p[point] != point) {
        throw std::logic_error("kernel generator moves an N_k point (bug)");
      }
    }
    report.kernel_generators.push_back(std::move(p));
  }
  return report;
}

OrbitReport orbits(const FiniteGroup& g, int k, OrbitDomain domain) {
  const std::uint64_t size = tuple_space_size(g, k);
  const std::vector<Permutation> gens = move_generators(g, k);
  const std::vector<std::uint32_t> nk = n_k_set(g, k);
  std::vector<char> in_nk(static_cast<std::size_t>(size), 0);
  for (std::uint32_t p : nk) in_nk[p] = 1;

  std::vector<char> seen(static_cast<std::size_t>(size), 0);
  OrbitReport report;
  std::size_t nk_orbits = 0;
  std::size_t nk_orbit_points = 0;
  for (std::uint64_t seed = 0; seed < size; ++seed) {
    if (seen[seed]) continue;
    if (domain == OrbitDomain::NormalGenerating && !in_nk[seed]) continue;
    std::vector<std::uint32_t> orbit{static_cast<std::uint32_t>(seed)};
    seen[seed] = 1;
    for (std::size_t pos = 0; pos < orbit.size(); ++pos) {
      for (const Permutation& p : gens) {
        const std::uint32_t img = p[orbit[pos]];
        if (!seen[img]) {
          seen[img] = 1;
          orbit.push_back(img);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    if (std::any_of(orbit.begin(), orbit.end(), [&](std::uint32_t p) { return in_nk[p]; })) {
      ++nk_orbits;
      nk_orbit_points += orbit.size();
    }
    report.orbits.push_back(std::move(orbit));
  }
  // moves preserve N_k, so the single orbit meeting it must equal it
  report.transitive_on_n_k =
      nk.empty() ? true : (nk_orbits == 1 && nk_orbit_points == nk.size());
  return report;
}

}  // namespace ac
