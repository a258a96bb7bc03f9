// word.hpp -- freely reduced words over a ranked generator alphabet.
//
// Words are immutable values: every operation returns a new, freely
// reduced word.  Generators are numbered 1..rank; the text format maps
// generator i to the i-th lowercase Latin letter and its inverse to the
// uppercase letter, so the format caps rank at 26 while the internal
// representation does not.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ac {

/// A single generator or inverse generator.  index() is 1-based.
class Letter {
 public:
  constexpr Letter(int index, int sign) : code_(sign < 0 ? -index : index) {}

  constexpr int index() const { return code_ < 0 ? -code_ : code_; }
  constexpr int sign() const { return code_ < 0 ? -1 : +1; }
  constexpr Letter inverse() const { return Letter(-code_); }

  /// Signed compact code: +index for a generator, -index for its inverse.
  constexpr std::int32_t code() const { return code_; }
  static constexpr Letter from_code(std::int32_t code) { return Letter(code); }

  friend constexpr bool operator==(Letter a, Letter b) { return a.code_ == b.code_; }
  friend constexpr bool operator!=(Letter a, Letter b) { return a.code_ != b.code_; }
  /// Canonical order: a < A < b < B < ...
  friend constexpr bool operator<(Letter a, Letter b) {
    if (a.index() != b.index()) return a.index() < b.index();
    return a.sign() > b.sign();
  }

 private:
  explicit constexpr Letter(std::int32_t code) : code_(code) {}
  std::int32_t code_;
};

/// A freely reduced word of a given rank.  The empty word is the identity.
class Word {
 public:
  /// The empty word of the given rank (rank >= 1).
  explicit Word(int rank);

  /// Free reduction of a raw letter sequence; throws std::invalid_argument
  /// if any index is outside 1..rank.  Idempotent on reduced input.
  static Word reduce(int rank, std::span<const Letter> raw);

  int rank() const { return rank_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }
  const std::vector<Letter>& letters() const { return letters_; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  Word inverse() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.rank_ == b.rank_ && a.letters_ == b.letters_;
  }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
  /// Shortlex order (length first, then letterwise canonical order).
  friend bool operator<(const Word& a, const Word& b);

 private:
  struct AlreadyReduced {};
  Word(int rank, std::vector<Letter> letters, AlreadyReduced)
      : rank_(rank), letters_(std::move(letters)) {}

  int rank_;
  std::vector<Letter> letters_;

  friend Word multiply(const Word&, const Word&);
  friend Word invert(const Word&);
  friend Word conjugate(const Word&, const Word&);
  friend Word conjugate(const Word&, Letter);
  friend std::pair<Word, Word> cyclic_reduce(const Word&);
  friend Word power(const Word&, int);
  friend Word substitute(const Word&, int, std::span<const Word>);
  friend Word parse_word(std::string_view, int, bool);
};

/// Appends a letter to a reduced letter stack, cancelling inverse pairs.
inline void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == l.inverse()) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

/// Reduced product u * v.  Throws std::invalid_argument on rank mismatch.
Word multiply(const Word& u, const Word& v);

/// u^-1: reversed letters with flipped signs.
Word invert(const Word& u);

/// u^w = w^-1 * u * w (fixed global convention), reduced.
Word conjugate(const Word& u, const Word& w);

/// Fast path for single-letter conjugators.
Word conjugate(const Word& u, Letter c);

/// (core, conjugator) with u = conjugator^-1 * core * conjugator and the
/// core cyclically reduced (its first and last letters are not inverse).
std::pair<Word, Word> cyclic_reduce(const Word& u);

/// u^e for any integer e, reduced.
Word power(const Word& u, int e);

/// Substitutes into a word over a split alphabet: letters with index <=
/// num_constants are kept, letter num_constants+i becomes values[i-1]
/// (inverted for negative sign).  All values must share a rank >=
/// num_constants; the result has that rank.
Word substitute(const Word& body, int num_constants, std::span<const Word> values);

/// Parses the text format: lowercase i-th Latin letter = generator i,
/// uppercase = inverse; applies free reduction.  When allow_one_alias is
/// set, the exact string "1" denotes the empty word (file contexts only).
/// Throws std::invalid_argument with the offending position otherwise.
Word parse_word(std::string_view text, int rank, bool allow_one_alias = false);

/// Inverse of parse_word; the empty word prints as "".  Throws
/// std::invalid_argument if a letter index exceeds 26.
std::string format_word(const Word& u);

std::ostream& operator<<(std::ostream& os, const Word& u);

}  // namespace ac
