// finite.hpp -- exact AC-group computations for small finite groups:
// N_k(G), the full AC group FAC_k(G) as a permutation group on G^k, the
// restriction epimorphism onto AC_k(G), and its kernel, read off a
// deterministic Schreier-Sims stabilizer chain whose base starts with
// the points of N_k(G).

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ac {

/// A finite group given by its multiplication table.  Element 0 is the
/// identity.  Tables are validated on construction (the failed axiom is
/// named); associativity is checked exhaustively for order <= 128 and on
/// a deterministic sample beyond that.
class FiniteGroup {
 public:
  static FiniteGroup from_table(int order, std::vector<int> table);

  /// Enumerates the group generated by permutations (image-list form) by
  /// closure; refuses beyond 10^4 elements.  Element 0 is the identity;
  /// the rest follow in breadth-first discovery order.
  static FiniteGroup from_permutations(const std::vector<std::vector<int>>& generators);

  int order() const { return order_; }
  int mul(int a, int b) const {
    return table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(order_) +
                  static_cast<std::size_t>(b)];
  }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int conj(int x, int w) const { return mul(mul(inv(w), x), w); }

 private:
  FiniteGroup(int order, std::vector<int> table, std::vector<int> inverse)
      : order_(order), table_(std::move(table)), inverse_(std::move(inverse)) {}

  int order_;
  std::vector<int> table_;
  std::vector<int> inverse_;
};

/// Group table file: first line the order (an optional leading word such
/// as "order" is skipped), then order x order integers.
FiniteGroup read_group_table(std::istream& in);
FiniteGroup read_group_table_file(const std::string& path);
void write_group_table(std::ostream& out, const FiniteGroup& g);

/// Permutation-generator file: one permutation per line in image-list
/// form, e.g. "0 2 1".
std::vector<std::vector<int>> read_permutation_generators(std::istream& in);

/// Smallest subset containing the elements and closed under products,
/// inverses and conjugation by all of G; sorted ascending.  The closure
/// of the empty set is {identity}.
std::vector<int> normal_closure(const FiniteGroup& g, std::span<const int> elements);

/// Number of points of G^k; refuses when it exceeds 2^24.
std::uint64_t tuple_space_size(const FiniteGroup& g, int k);

/// Base-order little-endian encoding of k-tuples over G: entry 0 is the
/// least significant digit, so index 0 is the trivial tuple (1,...,1).
std::uint32_t encode_tuple_index(const FiniteGroup& g, std::span<const int> entries);
std::vector<int> decode_tuple_index(const FiniteGroup& g, int k, std::uint32_t index);

/// All tuple indices whose entries generate G as a normal subgroup,
/// sorted ascending.  May be empty (reported, not an error).
std::vector<std::uint32_t> n_k_set(const FiniteGroup& g, int k);

/// A bijection of 0..degree-1 in image-array form, validated.
class Permutation {
 public:
  explicit Permutation(std::uint32_t degree);  // identity
  explicit Permutation(std::vector<std::uint32_t> images);

  std::uint32_t degree() const { return static_cast<std::uint32_t>(images_.size()); }
  std::uint32_t operator[](std::uint32_t x) const { return images_[x]; }
  const std::vector<std::uint32_t>& images() const { return images_; }
  bool is_identity() const;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

/// f then g: compose(f, g)[x] == g[f[x]].
Permutation compose(const Permutation& f, const Permutation& g);

/// An elementary AC-move on G^k.  For finite platforms the conjugator
/// ranges over all group elements, matching the definition exactly.
struct FiniteMove {
  enum class Kind : std::uint8_t { RightMultiply, LeftMultiply, Invert, Conjugate };
  Kind kind;
  int i = 1;  // 1-based entry indices
  int j = 2;
  int sign = +1;
  int w = 0;  // conjugator element
};

FiniteMove invert_move(const FiniteGroup& g, const FiniteMove& m);

/// The bijection of G^k induced by the move; fixes index 0.
Permutation move_permutation(const FiniteGroup& g, int k, const FiniteMove& m);

/// All elementary moves: R(i,j,+-), L(i,j,+-), I(i), C(i,w) for w != 0.
std::vector<FiniteMove> elementary_moves(const FiniteGroup& g, int k);

/// Deterministic Schreier-Sims stabilizer chain: exact order, membership
/// and pointwise stabilizers.  A prescribed base is honored verbatim
/// (redundant points keep their levels); extension points are the
/// smallest moved points, ascending.
class StabilizerChain {
 public:
  StabilizerChain(std::uint32_t degree, std::vector<Permutation> generators,
                  std::vector<std::uint32_t> prescribed_base = {});

  std::uint32_t degree() const { return degree_; }
  const std::vector<std::uint32_t>& base() const { return base_; }
  std::size_t num_levels() const { return levels_.size(); }
  std::size_t orbit_size(std::size_t level) const;

  unsigned __int128 order() const { return order_from_level(0); }
  /// Product of orbit sizes at the given level and below: the order of
  /// the pointwise stabilizer of the first `level` base points.
  unsigned __int128 order_from_level(std::size_t level) const;

  bool contains(const Permutation& p) const;

  std::vector<Permutation> strong_generators() const;
  /// Strong generators fixing the first `level` base points.
  std::vector<Permutation> generators_from_level(std::size_t level) const;

 private:
  struct Level {
    std::uint32_t point;
    // orbit tree: point -> (strong generator index, parent point); the
    // root maps to (-1, root).
    std::vector<std::int64_t> tree;  // packed (gen << 32 | parent), -1 if absent
    std::vector<std::uint32_t> orbit;  // discovery order
  };

  void rebuild_orbit(std::size_t level);
  Permutation transversal(std::size_t level, std::uint32_t beta) const;
  bool in_orbit(std::size_t level, std::uint32_t beta) const;
  std::pair<Permutation, std::size_t> sift_from(Permutation p, std::size_t level) const;
  std::size_t entry_level(const Permutation& p) const;
  void extend_base_for(const Permutation& p);

  std::uint32_t degree_;
  std::vector<std::uint32_t> base_;
  std::vector<Level> levels_;
  std::vector<Permutation> strong_;
  std::vector<std::size_t> entry_;  // strong_[i] fixes base_[0..entry_[i]-1]
};

std::string to_decimal(unsigned __int128 value);

/// Chain for the permutation group generated by all elementary move
/// permutations of G^k.
StabilizerChain fac_group(const FiniteGroup& g, int k);

struct KernelReport {
  unsigned __int128 fac_order = 1;
  unsigned __int128 ac_order = 1;
  unsigned __int128 kernel_order = 1;
  std::size_t n_k_size = 0;
  std::vector<Permutation> kernel_generators;  // nonidentity, fix N_k pointwise
};

/// Builds the chain with the points of N_k(G) first in the base and
/// reads the kernel of the restriction FAC_k(G) -> AC_k(G) off it as the
/// pointwise stabilizer of N_k(G).  Throws std::invalid_argument when
/// N_k(G) is empty (the restriction is undefined).
KernelReport kernel_of_lambda(const FiniteGroup& g, int k);

enum class OrbitDomain { All, NormalGenerating };

struct OrbitReport {
  std::vector<std::vector<std::uint32_t>> orbits;  // each sorted; by least point
  bool transitive_on_n_k = false;
};

/// Orbit partition of G^k (or of N_k(G)) under the elementary move
/// permutations, plus whether the action is transitive on N_k(G).
OrbitReport orbits(const FiniteGroup& g, int k, OrbitDomain domain);

}  // namespace ac
