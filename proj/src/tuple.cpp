#include "ac/tuple.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ac {

Tuple::Tuple(int rank, std::vector<Word> entries) : rank_(rank), entries_(std::move(entries)) {
  if (entries_.size() < 2) {
    throw std::invalid_argument("tuple size must be at least 2");
  }
  for (const Word& w : entries_) {
    if (w.rank() != rank_) {
      throw std::invalid_argument("tuple entries disagree on rank");
    }
  }
}

Tuple Tuple::with_entry(int i, Word w) const {
  std::vector<Word> entries = entries_;
  entries.at(static_cast<std::size_t>(i)) = std::move(w);
  return Tuple(rank_, std::move(entries));
}

bool operator<(const Tuple& a, const Tuple& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (int i = 0; i < a.size(); ++i) {
    if (a.entry(i) != b.entry(i)) return a.entry(i) < b.entry(i);
  }
  return false;
}

std::size_t total_length(const Tuple& t) {
  std::size_t sum = 0;
  for (const Word& w : t.entries()) sum += w.length();
  return sum;
}

Tuple generator_tuple(int k) {
  std::vector<Word> entries;
  entries.reserve(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) {
    Letter l(i, +1);
    entries.push_back(Word::reduce(k, std::span<const Letter>(&l, 1)));
  }
  return Tuple(k, std::move(entries));
}

Tuple trivial_tuple(int rank, int k) {
  return Tuple(rank, std::vector<Word>(static_cast<std::size_t>(k), Word(rank)));
}

std::string pack_tuple(const Tuple& t) {
  if (t.rank() > 127) throw std::invalid_argument("pack_tuple: rank exceeds 127");
  std::string key;
  key.reserve(total_length(t) + static_cast<std::size_t>(t.size()));
  for (int i = 0; i < t.size(); ++i) {
    if (i > 0) key.push_back('\0');
    for (Letter l : t.entry(i).letters()) {
      key.push_back(static_cast<char>(l.code()));
    }
  }
  return key;
}

Tuple unpack_tuple(const std::string& key, int rank, int k) {
  std::vector<Word> entries;
  entries.reserve(static_cast<std::size_t>(k));
  std::vector<Letter> letters;
  for (std::size_t pos = 0; pos <= key.size(); ++pos) {
    if (pos == key.size() || key[pos] == '\0') {
      entries.push_back(Word::reduce(rank, letters));
      letters.clear();
    } else {
      letters.push_back(Letter::from_code(static_cast<signed char>(key[pos])));
    }
  }
  if (entries.size() != static_cast<std::size_t>(k)) {
    throw std::invalid_argument("unpack_tuple: wrong entry count");
  }
  return Tuple(rank, std::move(entries));
}

namespace {

// Next content line, with '#' comments and blank lines skipped.
bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos || line[i] == '#') continue;
    std::size_t j = line.find_last_not_of(" \t\r");
    line = line.substr(i, j - i + 1);
    return true;
  }
  return false;
}

// Next word line: comments are skipped but blank lines stay, as the
// empty word prints as the empty string.
bool next_word_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos) {
      line.clear();
      return true;
    }
    if (line[i] == '#') continue;
    std::size_t j = line.find_last_not_of(" \t\r");
    line = line.substr(i, j - i + 1);
    return true;
  }
  return false;
}

}  // namespace

Tuple read_tuple(std::istream& in) {
  std::string line;
  if (!next_line(in, line)) throw std::invalid_argument("tuple file: missing header line");
  std::istringstream header(line);
  std::string tok;
  header >> tok;
  if (!tok.empty() && !std::isdigit(static_cast<unsigned char>(tok[0]))) header >> tok;
  int rank = 0, k = 0;
  try {
    rank = std::stoi(tok);
  } catch (const std::exception&) {
    throw std::invalid_argument("tuple file: bad rank in header '" + line + "'");
  }
  if (!(header >> k)) throw std::invalid_argument("tuple file: bad size in header '" + line + "'");
  if (k < 2) throw std::invalid_argument("tuple file: size must be at least 2");
  std::vector<Word> entries;
  entries.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    if (!next_word_line(in, line)) throw std::invalid_argument("tuple file: missing word line");
    entries.push_back(parse_word(line, rank, /*allow_one_alias=*/true));
  }
  return Tuple(rank, std::move(entries));
}

Tuple read_tuple_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open tuple file: " + path);
  return read_tuple(in);
}

void write_tuple(std::ostream& out, const Tuple& t) {
  out << t.rank() << ' ' << t.size() << '\n';
  for (int i = 0; i < t.size(); ++i) out << format_word(t.entry(i)) << '\n';
}

void write_tuple_file(const std::string& path, const Tuple& t) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open tuple file for writing: " + path);
  write_tuple(out, t);
}

std::string format_tuple_inline(const Tuple& t) {
  std::string out = "(";
  for (int i = 0; i < t.size(); ++i) {
    if (i > 0) out += ", ";
    out += '"';
    out += format_word(t.entry(i));
    out += '"';
  }
  out += ')';
  return out;
}

Tuple parse_tuple_inline(std::string_view text, int rank) {
  std::vector<Word> entries;
  std::size_t pos = 0;
  while (true) {
    std::size_t open = text.find('"', pos);
    if (open == std::string_view::npos) break;
    std::size_t close = text.find('"', open + 1);
    if (close == std::string_view::npos) {
      throw std::invalid_argument("parse_tuple_inline: unbalanced quote");
    }
    entries.push_back(parse_word(text.substr(open + 1, close - open - 1), rank));
    pos = close + 1;
  }
  return Tuple(rank, std::move(entries));
}

std::ostream& operator<<(std::ostream& os, const Tuple& t) {
  return os << format_tuple_inline(t);
}

}  // namespace ac
