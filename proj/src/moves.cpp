#include "ac/moves.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace ac {

namespace {

void check_index(int i, int k, const char* what) {
  if (i < 1 || i > k) {
    throw std::out_of_range(std::string(what) + " index " + std::to_string(i) +
                            " out of range 1.." + std::to_string(k));
  }
}

int kind_rank(MoveKind k) { return static_cast<int>(k); }

// Order key for the canonical move order.  For C-moves the conjugator
// follows the a < A < b < B letter order.
std::tuple<int, int, int, int, int> order_key(const Move& m) {
  switch (m.kind()) {
    case MoveKind::RightMultiply:
    case MoveKind::LeftMultiply:
      return {kind_rank(m.kind()), m.i(), m.j(), m.sign() > 0 ? 0 : 1, 0};
    case MoveKind::Invert:
      return {kind_rank(m.kind()), m.i(), 0, 0, 0};
    case MoveKind::Conjugate:
      return {kind_rank(m.kind()), m.i(), 0, m.conjugator().index(),
              m.conjugator().sign() > 0 ? 0 : 1};
  }
  return {};
}

}  // namespace

Move Move::right_multiply(int i, int j, int sign) {
  if (i == j) throw std::invalid_argument("R move requires i != j");
  return Move(MoveKind::RightMultiply, i, j, sign < 0 ? -1 : +1);
}

Move Move::left_multiply(int i, int j, int sign) {
  if (i == j) throw std::invalid_argument("L move requires i != j");
  return Move(MoveKind::LeftMultiply, i, j, sign < 0 ? -1 : +1);
}

Move Move::invert_entry(int i) { return Move(MoveKind::Invert, i, 0, 0); }

Move Move::conjugate_entry(int i, Letter c) {
  return Move(MoveKind::Conjugate, i, 0, c.code());
}

Move Move::inverse() const {
  switch (kind_) {
    case MoveKind::RightMultiply:
      return Move(MoveKind::RightMultiply, i_, j_, -aux_);
    case MoveKind::LeftMultiply:
      return Move(MoveKind::LeftMultiply, i_, j_, -aux_);
    case MoveKind::Invert:
      return *this;
    case MoveKind::Conjugate:
      return Move(MoveKind::Conjugate, i_, 0, -aux_);
  }
  throw std::logic_error("unreachable");
}

bool operator<(const Move& a, const Move& b) { return order_key(a) < order_key(b); }

void validate_sequence(const MoveSequence& s) {
  for (const Move& m : s.moves) {
    check_index(m.i(), s.k, "move");
    if (m.kind() == MoveKind::RightMultiply || m.kind() == MoveKind::LeftMultiply) {
      check_index(m.j(), s.k, "move");
    }
  }
}

Tuple apply_move(const Tuple& t, const Move& m) {
  const int k = t.size();
  check_index(m.i(), k, "move");
  const int i = m.i() - 1;
  switch (m.kind()) {
    case MoveKind::RightMultiply: {
      check_index(m.j(), k, "move");
      const Word& uj = t.entry(m.j() - 1);
      return t.with_entry(i, multiply(t.entry(i), m.sign() > 0 ? uj : invert(uj)));
    }
    case MoveKind::LeftMultiply: {
      check_index(m.j(), k, "move");
      const Word& uj = t.entry(m.j() - 1);
      return t.with_entry(i, multiply(m.sign() > 0 ? uj : invert(uj), t.entry(i)));
    }
    case MoveKind::Invert:
      return t.with_entry(i, invert(t.entry(i)));
    case MoveKind::Conjugate:
      return t.with_entry(i, conjugate(t.entry(i), m.conjugator()));
  }
  throw std::logic_error("unreachable");
}

Move invert_move(const Move& m) { return m.inverse(); }

Tuple apply_sequence(const Tuple& t, const MoveSequence& s) {
  if (s.k != t.size()) {
    throw std::invalid_argument("apply_sequence: sequence is for " + std::to_string(s.k) +
                                "-tuples, got size " + std::to_string(t.size()));
  }
  Tuple result = t;
  for (const Move& m : s.moves) result = apply_move(result, m);
  return result;
}

MoveSequence invert_sequence(const MoveSequence& s) {
  MoveSequence out{s.k, {}};
  out.moves.reserve(s.moves.size());
  for (auto it = s.moves.rbegin(); it != s.moves.rend(); ++it) {
    out.moves.push_back(it->inverse());
  }
  return out;
}

MoveSequence concat(const MoveSequence& a, const MoveSequence& b) {
  if (a.k != b.k) throw std::invalid_argument("concat: tuple sizes differ");
  MoveSequence out = a;
  out.moves.insert(out.moves.end(), b.moves.begin(), b.moves.end());
  return out;
}

std::vector<Move> enumerate_moves(int k, int rank) {
  std::vector<Move> out;
  out.reserve(static_cast<std::size_t>(4 * k * (k - 1) + k + 2 * k * rank));
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      if (i == j) continue;
      out.push_back(Move::right_multiply(i, j, +1));
      out.push_back(Move::right_multiply(i, j, -1));
    }
  }
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      if (i == j) continue;
      out.push_back(Move::left_multiply(i, j, +1));
      out.push_back(Move::left_multiply(i, j, -1));
    }
  }
  for (int i = 1; i <= k; ++i) out.push_back(Move::invert_entry(i));
  for (int i = 1; i <= k; ++i) {
    for (int g = 1; g <= rank; ++g) {
      out.push_back(Move::conjugate_entry(i, Letter(g, +1)));
      out.push_back(Move::conjugate_entry(i, Letter(g, -1)));
    }
  }
  return out;
}

std::vector<Word> extract_words_over(const MoveSequence& s, int k, int constant_rank) {
  validate_sequence(s);
  const int rank = constant_rank + k;
  std::vector<Word> formal;
  formal.reserve(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) {
    Letter x(constant_rank + i, +1);
    formal.push_back(Word::reduce(rank, std::span<const Letter>(&x, 1)));
  }
  for (const Move& m : s.moves) {
    const std::size_t i = static_cast<std::size_t>(m.i() - 1);
    switch (m.kind()) {
      case MoveKind::RightMultiply: {
        const Word& wj = formal[static_cast<std::size_t>(m.j() - 1)];
        formal[i] = multiply(formal[i], m.sign() > 0 ? wj : invert(wj));
        break;
      }
      case MoveKind::LeftMultiply: {
        const Word& wj = formal[static_cast<std::size_t>(m.j() - 1)];
        formal[i] = multiply(m.sign() > 0 ? wj : invert(wj), formal[i]);
        break;
      }
      case MoveKind::Invert:
        formal[i] = invert(formal[i]);
        break;
      case MoveKind::Conjugate: {
        const Letter c = m.conjugator();
        if (c.index() > constant_rank) {
          throw std::out_of_range("extract_words: conjugator letter index " +
                                  std::to_string(c.index()) + " exceeds constant rank " +
                                  std::to_string(constant_rank));
        }
        formal[i] = conjugate(formal[i], Letter(c.index(), c.sign()));
        break;
      }
    }
  }
  return formal;
}

std::vector<Word> extract_words(const MoveSequence& s, int k) {
  return extract_words_over(s, k, k);
}

bool identity_check(const MoveSequence& s, int k) {
  const std::vector<Word> words = extract_words(s, k);
  for (int i = 0; i < k; ++i) {
    const Word& w = words[static_cast<std::size_t>(i)];
    if (w.length() != 1) return false;
    if (w.front() != Letter(k + i + 1, +1)) return false;
  }
  return true;
}

std::string format_move(const Move& m) {
  switch (m.kind()) {
    case MoveKind::RightMultiply:
      return "R " + std::to_string(m.i()) + " " + std::to_string(m.j()) +
             (m.sign() > 0 ? " +" : " -");
    case MoveKind::LeftMultiply:
      return "L " + std::to_string(m.i()) + " " + std::to_string(m.j()) +
             (m.sign() > 0 ? " +" : " -");
    case MoveKind::Invert:
      return "I " + std::to_string(m.i());
    case MoveKind::Conjugate: {
      const Letter c = m.conjugator();
      if (c.index() > 26) throw std::invalid_argument("format_move: conjugator beyond 'z'");
      const char ch = static_cast<char>((c.sign() > 0 ? 'a' : 'A') + c.index() - 1);
      return "C " + std::to_string(m.i()) + " " + std::string(1, ch);
    }
  }
  throw std::logic_error("unreachable");
}

Move parse_move(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::string op;
  if (!(in >> op)) throw std::invalid_argument("parse_move: empty line");
  auto read_int = [&](const char* what) {
    int v;
    if (!(in >> v)) {
      throw std::invalid_argument("parse_move: missing " + std::string(what) + " in '" +
                                  std::string(line) + "'");
    }
    return v;
  };
  if (op == "R" || op == "L") {
    const int i = read_int("i");
    const int j = read_int("j");
    std::string sign;
    if (!(in >> sign) || (sign != "+" && sign != "-")) {
      throw std::invalid_argument("parse_move: expected '+' or '-' in '" + std::string(line) + "'");
    }
    const int s = sign == "+" ? +1 : -1;
    return op == "R" ? Move::right_multiply(i, j, s) : Move::left_multiply(i, j, s);
  }
  if (op == "I") {
    return Move::invert_entry(read_int("i"));
  }
  if (op == "C") {
    const int i = read_int("i");
    std::string letter;
    if (!(in >> letter) || letter.size() != 1) {
      throw std::invalid_argument("parse_move: expected a single letter in '" +
                                  std::string(line) + "'");
    }
    const char ch = letter[0];
    if (ch >= 'a' && ch <= 'z') return Move::conjugate_entry(i, Letter(ch - 'a' + 1, +1));
    if (ch >= 'A' && ch <= 'Z') return Move::conjugate_entry(i, Letter(ch - 'A' + 1, -1));
    throw std::invalid_argument("parse_move: bad conjugator letter in '" + std::string(line) + "'");
  }
  throw std::invalid_argument("parse_move: unknown move '" + op + "'");
}

namespace {

// One line of a move file.  "C i w" with a multi-letter word expands to
// single-letter conjugations, leftmost letter first.
std::vector<Move> parse_move_line(std::string_view line) {
  std::istringstream probe{std::string(line)};
  std::string op, idx, arg;
  probe >> op >> idx >> arg;
  if (op == "C" && arg.size() > 1) {
    std::vector<Move> out;
    for (char ch : arg) {
      out.push_back(parse_move("C " + idx + " " + std::string(1, ch)));
    }
    return out;
  }
  return {parse_move(line)};
}

}  // namespace

MoveSequence read_moves(std::istream& in, int k) {
  MoveSequence s{k == 0 ? 2 : k, {}};
  std::string line;
  int max_index = 2;
  while (std::getline(in, line)) {
    const std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos || line[i] == '#') continue;
    const std::size_t j = line.find_last_not_of(" \t\r");
    for (const Move& m : parse_move_line(std::string_view(line).substr(i, j - i + 1))) {
      max_index = std::max(max_index, m.i());
      if (m.kind() == MoveKind::RightMultiply || m.kind() == MoveKind::LeftMultiply) {
        max_index = std::max(max_index, m.j());
      }
      if (m.kind() == MoveKind::Conjugate) {
        max_index = std::max(max_index, m.conjugator().index());
      }
      s.moves.push_back(m);
    }
  }
  if (k == 0) s.k = max_index;
  validate_sequence(s);
  return s;
}

MoveSequence read_moves_file(const std::string& path, int k) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open moves file: " + path);
  return read_moves(in, k);
}

void write_moves(std::ostream& out, const MoveSequence& s) {
  for (const Move& m : s.moves) out << format_move(m) << '\n';
}

void write_moves_file(const std::string& path, const MoveSequence& s) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open moves file for writing: " + path);
  write_moves(out, s);
}

std::ostream& operator<<(std::ostream& os, const Move& m) { return os << format_move(m); }

}  // namespace ac
