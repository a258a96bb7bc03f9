// tuple.hpp -- ordered k-tuples of words, the objects AC-moves act on.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ac/word.hpp"

namespace ac {

/// An ordered k-tuple (k >= 2) of words sharing one rank.  Immutable.
class Tuple {
 public:
  Tuple(int rank, std::vector<Word> entries);

  int rank() const { return rank_; }
  int size() const { return static_cast<int>(entries_.size()); }
  const Word& entry(int i) const { return entries_[static_cast<std::size_t>(i)]; }
  const std::vector<Word>& entries() const { return entries_; }

  /// Copy with entry i (0-based) replaced.
  Tuple with_entry(int i, Word w) const;

  friend bool operator==(const Tuple& a, const Tuple& b) {
    return a.rank_ == b.rank_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const Tuple& a, const Tuple& b) { return !(a == b); }
  friend bool operator<(const Tuple& a, const Tuple& b);

 private:
  int rank_;
  std::vector<Word> entries_;
};

/// Sum of entry lengths.
std::size_t total_length(const Tuple& t);

/// The generator tuple (x_1, ..., x_k) of rank k, the target of
/// trivialization searches.
Tuple generator_tuple(int k);

/// The all-identity tuple (1, ..., 1) of the given rank and size.
Tuple trivial_tuple(int rank, int k);

/// Compact byte key for dedup indices: letters as signed chars, entries
/// separated by 0.  Requires rank <= 127.
std::string pack_tuple(const Tuple& t);
Tuple unpack_tuple(const std::string& key, int rank, int k);

/// Tuple file format: first line "<rank> <k>" (an optional leading word
/// such as "rank" is skipped), then k lines of one word each; "1" is an
/// accepted alias for the empty word; lines starting with '#' and blank
/// lines are ignored.
Tuple read_tuple(std::istream& in);
Tuple read_tuple_file(const std::string& path);
void write_tuple(std::ostream& out, const Tuple& t);
void write_tuple_file(const std::string& path, const Tuple& t);

/// One-line display form: ("ab", "b").  Parseable by parse_tuple_inline.
std::string format_tuple_inline(const Tuple& t);
Tuple parse_tuple_inline(std::string_view text, int rank);

std::ostream& operator<<(std::ostream& os, const Tuple& t);

}  // namespace ac
