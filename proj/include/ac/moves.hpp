// moves.hpp -- elementary Andrews-Curtis transformations on tuples.
//
// The move alphabet is finite for fixed tuple size: right/left relator
// multiplications R(i,j,+-), L(i,j,+-), entry inversion I(i), and
// conjugation C(i,c) by a single letter c.  Conjugation by an arbitrary
// word is a product of single-letter conjugations, so restricting the
// conjugator does not change the generated transformation group.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ac/tuple.hpp"
#include "ac/word.hpp"

namespace ac {

enum class MoveKind : std::uint8_t { RightMultiply, LeftMultiply, Invert, Conjugate };

/// One elementary AC-move.  Entry indices i, j are 1-based; i != j for
/// the multiplication moves.
class Move {
 public:
  static Move right_multiply(int i, int j, int sign);
  static Move left_multiply(int i, int j, int sign);
  static Move invert_entry(int i);
  static Move conjugate_entry(int i, Letter c);

  MoveKind kind() const { return kind_; }
  int i() const { return i_; }
  int j() const { return j_; }
  int sign() const { return aux_ < 0 ? -1 : +1; }
  Letter conjugator() const { return Letter::from_code(aux_); }

  Move inverse() const;

  friend bool operator==(const Move& a, const Move& b) {
    return a.kind_ == b.kind_ && a.i_ == b.i_ && a.j_ == b.j_ && a.aux_ == b.aux_;
  }
  friend bool operator!=(const Move& a, const Move& b) { return !(a == b); }
  /// Canonical order R < L < I < C, then by indices; this is the order
  /// that pins down "lexicographically least" move sequences.
  friend bool operator<(const Move& a, const Move& b);

 private:
  Move(MoveKind kind, int i, int j, std::int32_t aux)
      : kind_(kind), i_(static_cast<std::int16_t>(i)), j_(static_cast<std::int16_t>(j)), aux_(aux) {}

  MoveKind kind_;
  std::int16_t i_;
  std::int16_t j_;
  std::int32_t aux_;  // sign for R/L, letter code for C, unused for I
};

/// A composable program of elementary moves acting on k-tuples.
struct MoveSequence {
  int k = 2;
  std::vector<Move> moves;

  friend bool operator==(const MoveSequence&, const MoveSequence&) = default;
};

/// Throws std::out_of_range if a move's indices do not fit tuples of
/// size k (conjugator letters are checked against the rank at apply time).
void validate_sequence(const MoveSequence& s);

Tuple apply_move(const Tuple& t, const Move& m);
Move invert_move(const Move& m);
Tuple apply_sequence(const Tuple& t, const MoveSequence& s);
MoveSequence invert_sequence(const MoveSequence& s);
MoveSequence concat(const MoveSequence& a, const MoveSequence& b);

/// All elementary moves for k-tuples over words of the given rank, in
/// canonical order.
std::vector<Move> enumerate_moves(int k, int rank);

/// Runs the sequence formally on the tuple of indeterminants
/// (x_1, ..., x_k) over the doubled alphabet with constants first:
/// a_1..a_k are letters 1..k and x_1..x_k are letters k+1..2k.  The
/// conjugator letter of a C-move acts as the corresponding constant.
/// Substituting x_i -> u_i into the result and reducing reproduces
/// apply_sequence((u_1,...,u_k), s) entrywise.
std::vector<Word> extract_words(const MoveSequence& s, int k);

/// Same formal run with an independent constant rank: the result words
/// live in the free group of rank constant_rank + k, constants first.
std::vector<Word> extract_words_over(const MoveSequence& s, int k, int constant_rank);

/// True iff every extracted word is literally its own indeterminant,
/// i.e. the sequence is the identity of the full AC group over a free
/// group; equivalently it fixes every tuple.
bool identity_check(const MoveSequence& s, int k);

/// Move text format, one per line: "R i j +", "L i j -", "I i", "C i b".
std::string format_move(const Move& m);
Move parse_move(std::string_view line);

/// Reads a move file ('#' comments allowed).  If k == 0 the tuple size
/// is inferred as max(2, largest index mentioned, largest conjugator
/// letter index).
MoveSequence read_moves(std::istream& in, int k = 0);
MoveSequence read_moves_file(const std::string& path, int k = 0);
void write_moves(std::ostream& out, const MoveSequence& s);
void write_moves_file(const std::string& path, const MoveSequence& s);

std::ostream& operator<<(std::ostream& os, const Move& m);

}  // namespace ac
