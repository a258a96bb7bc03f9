#include "ac/word.hpp"

#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace ac {

namespace {

void check_rank(int rank) {
  if (rank < 1) throw std::invalid_argument("word rank must be at least 1");
}

void check_letter(Letter l, int rank, std::size_t pos) {
  if (l.index() < 1 || l.index() > rank) {
    throw std::invalid_argument("letter index " + std::to_string(l.index()) +
                                " out of range 1.." + std::to_string(rank) +
                                " at position " + std::to_string(pos));
  }
}

}  // namespace

Word::Word(int rank) : rank_(rank) { check_rank(rank); }

Word Word::reduce(int rank, std::span<const Letter> raw) {
  check_rank(rank);
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    check_letter(raw[i], rank, i);
    push_reduced(out, raw[i]);
  }
  return Word(rank, std::move(out), AlreadyReduced{});
}

Word Word::inverse() const { return invert(*this); }

bool operator<(const Word& a, const Word& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  for (std::size_t i = 0; i < a.length(); ++i) {
    if (a.letters()[i] != b.letters()[i]) return a.letters()[i] < b.letters()[i];
  }
  return false;
}

Word multiply(const Word& u, const Word& v) {
  if (u.rank() != v.rank()) {
    throw std::invalid_argument("multiply: rank mismatch (" + std::to_string(u.rank()) +
                                " vs " + std::to_string(v.rank()) + ")");
  }
  std::vector<Letter> out;
  out.reserve(u.length() + v.length());
  out = u.letters_;
  for (Letter l : v.letters_) push_reduced(out, l);
  return Word(u.rank(), std::move(out), Word::AlreadyReduced{});
}

Word invert(const Word& u) {
  std::vector<Letter> out;
  out.reserve(u.length());
  for (auto it = u.letters_.rbegin(); it != u.letters_.rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(u.rank(), std::move(out), Word::AlreadyReduced{});
}

Word conjugate(const Word& u, const Word& w) {
  if (u.rank() != w.rank()) {
    throw std::invalid_argument("conjugate: rank mismatch");
  }
  std::vector<Letter> out;
  out.reserve(u.length() + 2 * w.length());
  for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it) {
    out.push_back(it->inverse());
  }
  for (Letter l : u.letters_) push_reduced(out, l);
  for (Letter l : w.letters_) push_reduced(out, l);
  return Word(u.rank(), std::move(out), Word::AlreadyReduced{});
}

Word conjugate(const Word& u, Letter c) {
  check_letter(c, u.rank(), 0);
  if (u.empty()) return u;
  const bool drop_front = u.front() == c;
  const bool drop_back = u.back() == c.inverse();
  std::vector<Letter> out;
  out.reserve(u.length() + 2);
  auto first = u.letters_.begin() + (drop_front ? 1 : 0);
  auto last = u.letters_.end() - (drop_back ? 1 : 0);
  if (!drop_front) out.push_back(c.inverse());
  out.insert(out.end(), first, last);
  if (!drop_back) out.push_back(c);
  return Word(u.rank(), std::move(out), Word::AlreadyReduced{});
}

std::pair<Word, Word> cyclic_reduce(const Word& u) {
  std::size_t lo = 0, hi = u.length();
  while (hi - lo >= 2 && u.letters_[lo] == u.letters_[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  std::vector<Letter> core(u.letters_.begin() + lo, u.letters_.begin() + hi);
  // u = conj^-1 * core * conj with conj the peeled tail, outermost last.
  std::vector<Letter> conj(u.letters_.begin() + hi, u.letters_.end());
  return {Word(u.rank(), std::move(core), Word::AlreadyReduced{}),
          Word(u.rank(), std::move(conj), Word::AlreadyReduced{})};
}

Word power(const Word& u, int e) {
  if (e == 0 || u.empty()) return Word(u.rank());
  auto [core, conj] = cyclic_reduce(u);
  const Word base = e > 0 ? core : invert(core);
  const std::size_t reps = static_cast<std::size_t>(e > 0 ? e : -e);
  std::vector<Letter> out;
  out.reserve(2 * conj.length() + reps * base.length());
  for (auto it = conj.letters_.rbegin(); it != conj.letters_.rend(); ++it) {
    out.push_back(it->inverse());
  }
  // The core is cyclically reduced, so its powers concatenate without
  // cancellation; only the seams with the conjugator can cancel.
  for (std::size_t r = 0; r < reps; ++r) {
    for (Letter l : base.letters_) push_reduced(out, l);
  }
  for (Letter l : conj.letters_) push_reduced(out, l);
  return Word(u.rank(), std::move(out), Word::AlreadyReduced{});
}

Word substitute(const Word& body, int num_constants, std::span<const Word> values) {
  if (num_constants < 0) throw std::invalid_argument("substitute: negative constant count");
  int target_rank = num_constants > 0 ? num_constants : 1;
  if (!values.empty()) {
    target_rank = values.front().rank();
    for (const Word& v : values) {
      if (v.rank() != target_rank) {
        throw std::invalid_argument("substitute: values disagree on rank");
      }
    }
    if (target_rank < num_constants) {
      throw std::invalid_argument("substitute: value rank below constant count");
    }
  }
  std::vector<Letter> out;
  out.reserve(body.length());
  for (Letter l : body.letters_) {
    if (l.index() <= num_constants) {
      push_reduced(out, l);
      continue;
    }
    const std::size_t v = static_cast<std::size_t>(l.index() - num_constants) - 1;
    if (v >= values.size()) {
      throw std::invalid_argument("substitute: variable x" + std::to_string(v + 1) +
                                  " has no value");
    }
    const auto& w = values[v].letters_;
    if (l.sign() > 0) {
      for (Letter x : w) push_reduced(out, x);
    } else {
      for (auto it = w.rbegin(); it != w.rend(); ++it) push_reduced(out, it->inverse());
    }
  }
  return Word(target_rank, std::move(out), Word::AlreadyReduced{});
}

Word parse_word(std::string_view text, int rank, bool allow_one_alias) {
  check_rank(rank);
  if (allow_one_alias && text == "1") return Word(rank);
  std::vector<Letter> out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    int index, sign;
    if (ch >= 'a' && ch <= 'z') {
      index = ch - 'a' + 1;
      sign = +1;
    } else if (ch >= 'A' && ch <= 'Z') {
      index = ch - 'A' + 1;
      sign = -1;
    } else {
      throw std::invalid_argument("parse_word: non-alphabetic character '" +
                                  std::string(1, ch) + "' at position " + std::to_string(i));
    }
    if (index > rank) {
      throw std::invalid_argument("parse_word: letter '" + std::string(1, ch) +
                                  "' beyond rank " + std::to_string(rank) +
                                  " at position " + std::to_string(i));
    }
    push_reduced(out, Letter(index, sign));
  }
  return Word(rank, std::move(out), Word::AlreadyReduced{});
}

std::string format_word(const Word& u) {
  std::string out;
  out.reserve(u.length());
  for (Letter l : u.letters()) {
    if (l.index() > 26) {
      throw std::invalid_argument("format_word: index " + std::to_string(l.index()) +
                                  " exceeds the 26-letter text alphabet");
    }
    out.push_back(static_cast<char>((l.sign() > 0 ? 'a' : 'A') + l.index() - 1));
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Word& u) { return os << format_word(u); }

}  // namespace ac
