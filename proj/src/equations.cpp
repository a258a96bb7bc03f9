#include "ac/equations.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ac {

namespace {

bool is_variable(Letter l, int constant_rank) { return l.index() > constant_rank; }

Word rotate_to_variable_start(const Word& core, int rank, int constant_rank) {
  const auto& letters = core.letters();
  std::size_t offset = 0;
  while (offset < letters.size() && !is_variable(letters[offset], constant_rank)) ++offset;
  if (offset == 0 || offset == letters.size()) return core;
  std::vector<Letter> rotated;
  rotated.reserve(letters.size());
  rotated.insert(rotated.end(), letters.begin() + static_cast<std::ptrdiff_t>(offset),
                 letters.end());
  rotated.insert(rotated.end(), letters.begin(),
                 letters.begin() + static_cast<std::ptrdiff_t>(offset));
  // A rotation of a cyclically reduced word stays reduced.
  return Word::reduce(rank, rotated);
}

// The image of the body under killing all variables, as a rank-r word.
Word constant_projection(const Equation& e) {
  std::vector<Letter> out;
  for (Letter l : e.body.letters()) {
    if (!is_variable(l, e.constant_rank)) push_reduced(out, l);
  }
  return Word::reduce(e.constant_rank, out);
}

Word restrict_to_constants(const Word& w, int constant_rank) {
  return Word::reduce(constant_rank, w.letters());
}

Word embed(const Word& w, int rank) { return Word::reduce(rank, w.letters()); }

}  // namespace

Equation make_equation(int constant_rank, int num_variables, Word body) {
  if (constant_rank < 1) throw std::invalid_argument("equation needs constant rank >= 1");
  if (num_variables < 0) throw std::invalid_argument("equation needs num_variables >= 0");
  const int rank = constant_rank + std::max(num_variables, 1) - (num_variables > 0 ? 0 : 1);
  if (body.rank() != constant_rank + num_variables && body.rank() != rank) {
    throw std::invalid_argument("equation body rank must be constant_rank + num_variables");
  }
  return Equation{constant_rank, num_variables, std::move(body), false};
}

Equation normalize(const Equation& e) {
  Equation out = e;
  auto [core, conj] = cyclic_reduce(e.body);
  (void)conj;  // conjugation does not change the solution set
  out.body = rotate_to_variable_start(core, e.body.rank(), e.constant_rank);
  out.normalized = true;
  return out;
}

bool constant_false(const Equation& e) {
  const Equation n = e.normalized ? e : normalize(e);
  if (n.body.empty()) return false;
  for (Letter l : n.body.letters()) {
    if (is_variable(l, n.constant_rank)) return false;
  }
  return true;
}

Word evaluate(const Equation& e, std::span<const Word> assignment) {
  if (assignment.size() != static_cast<std::size_t>(e.num_variables)) {
    throw std::invalid_argument("evaluate: expected " + std::to_string(e.num_variables) +
                                " assignment words");
  }
  if (e.num_variables == 0) return restrict_to_constants(e.body, e.constant_rank);
  for (const Word& g : assignment) {
    if (g.rank() != e.constant_rank) {
      throw std::invalid_argument("evaluate: assignment words must have the constant rank");
    }
  }
  return substitute(e.body, e.constant_rank, assignment);
}

bool is_trivial(const Equation& e) { return e.body.empty(); }

ConjugatePowerForm conjugate_power_form(const Equation& e) {
  const Equation n = e.normalized ? e : normalize(e);
  if (!constant_projection(n).empty()) {
    throw std::invalid_argument(
        "conjugate_power_form: constant product is not the identity, the form does not apply");
  }
  ConjugatePowerForm form{n.constant_rank, n.num_variables, {}};
  Word prefix(n.constant_rank);
  std::vector<Letter> block;
  const auto& letters = n.body.letters();
  std::size_t pos = 0;
  bool first_syllable = true;
  while (pos < letters.size()) {
    if (is_variable(letters[pos], n.constant_rank)) {
      if (!first_syllable) {
        prefix = multiply(prefix, Word::reduce(n.constant_rank, block));
      }
      block.clear();
      const Letter run = letters[pos];
      int count = 0;
      while (pos < letters.size() && letters[pos] == run) {
        ++count;
        ++pos;
      }
      form.syllables.push_back(
          PowerSyllable{prefix, run.index() - n.constant_rank, run.sign() * count});
      first_syllable = false;
    } else {
      block.push_back(letters[pos]);
      ++pos;
    }
  }
  return form;
}

Word reassemble(const ConjugatePowerForm& f) {
  const int rank = f.constant_rank + f.num_variables;
  Word out(rank);
  for (const PowerSyllable& s : f.syllables) {
    const Word p = embed(s.prefix, rank);
    Word x(rank);
    {
      Letter l(f.constant_rank + s.variable, s.exponent < 0 ? -1 : +1);
      std::vector<Letter> run(static_cast<std::size_t>(std::abs(s.exponent)), l);
      x = Word::reduce(rank, run);
    }
    out = multiply(out, multiply(p, multiply(x, invert(p))));
  }
  return out;
}

Word primitive_root(const Word& u) {
  if (u.empty()) throw std::invalid_argument("primitive_root: empty word");
  auto [core, conj] = cyclic_reduce(u);
  const auto& letters = core.letters();
  const std::size_t n = letters.size();
  std::size_t period = n;
  for (std::size_t p = 1; p <= n / 2; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = 0; i + p < n && ok; ++i) {
      ok = letters[i] == letters[i + p];
    }
    if (ok) {
      period = p;
      break;
    }
  }
  Word root = Word::reduce(u.rank(), std::span<const Letter>(letters.data(), period));
  return conjugate(root, conj);
}

bool commute(const Word& u, const Word& v) {
  if (u.empty() || v.empty()) return true;
  auto canonical = [](const Word& w) {
    Word r = primitive_root(w);
    Word ri = invert(r);
    return r < ri ? r : ri;
  };
  return canonical(u) == canonical(v);
}

namespace {

// Deterministic base candidates: the generators first, then reduced
// length-2 words.
std::vector<Word> base_candidates(int rank) {
  std::vector<Word> out;
  for (int g = 1; g <= rank; ++g) {
    Letter l(g, +1);
    out.push_back(Word::reduce(rank, std::span<const Letter>(&l, 1)));
  }
  for (int g1 = 1; g1 <= rank; ++g1) {
    for (int s1 : {+1, -1}) {
      for (int g2 = 1; g2 <= rank; ++g2) {
        for (int s2 : {+1, -1}) {
          const Letter a(g1, s1), b(g2, s2);
          if (b == a.inverse()) continue;
          const std::vector<Letter> raw{a, b};
          out.push_back(Word::reduce(rank, raw));
        }
      }
    }
  }
  return out;
}

// Constant block between consecutive syllables j and j+1, i.e.
// prefix_j^-1 * prefix_{j+1}.
Word block_between(const ConjugatePowerForm& form, std::size_t j) {
  return multiply(invert(form.syllables[j].prefix), form.syllables[j + 1].prefix);
}

// Backtracking choice of one base word per variable such that for every
// consecutive syllable pair the bases do not commute after conjugating
// the right one by the separating constant block.
bool choose_bases(const ConjugatePowerForm& form, const std::vector<Word>& candidates,
                  std::vector<Word>& bases, std::vector<bool>& assigned, std::size_t var_pos,
                  const std::vector<int>& var_order) {
  if (var_pos == var_order.size()) return true;
  const int v = var_order[var_pos];
  const std::size_t vi = static_cast<std::size_t>(v - 1);
  for (const Word& cand : candidates) {
    bases[vi] = cand;
    assigned[vi] = true;
    bool ok = true;
    for (std::size_t j = 0; ok && j + 1 < form.syllables.size(); ++j) {
      const int va = form.syllables[j].variable;
      const int vb = form.syllables[j + 1].variable;
      if (!assigned[static_cast<std::size_t>(va - 1)] ||
          !assigned[static_cast<std::size_t>(vb - 1)]) {
        continue;
      }
      const Word mid = block_between(form, j);
      const Word right = conjugate(bases[static_cast<std::size_t>(vb - 1)], invert(mid));
      ok = !commute(bases[static_cast<std::size_t>(va - 1)], right);
    }
    if (ok && choose_bases(form, candidates, bases, assigned, var_pos + 1, var_order)) {
      return true;
    }
  }
  assigned[vi] = false;
  return false;
}

}  // namespace

std::optional<std::vector<Word>> find_nonsolution(const Equation& e, WitnessOptions opt) {
  const Equation n = e.normalized ? e : normalize(e);
  if (n.num_variables == 0) {
    throw std::invalid_argument("find_nonsolution: equation has no variables");
  }
  if (is_trivial(n)) return std::nullopt;
  if (n.constant_rank < 2) {
    throw std::invalid_argument("find_nonsolution: constant group must be free of rank >= 2");
  }

  // The all-identity assignment evaluates to the constant product; when
  // that is nonidentity it is already a witness.
  std::vector<Word> identity_assignment(static_cast<std::size_t>(n.num_variables),
                                        Word(n.constant_rank));
  if (!evaluate(n, identity_assignment).empty()) return identity_assignment;

  const ConjugatePowerForm form = conjugate_power_form(n);
  std::vector<int> var_order;
  for (const PowerSyllable& s : form.syllables) {
    if (std::find(var_order.begin(), var_order.end(), s.variable) == var_order.end()) {
      var_order.push_back(s.variable);
    }
  }

  const std::vector<Word> candidates = base_candidates(n.constant_rank);
  std::vector<Word> bases(static_cast<std::size_t>(n.num_variables), Word(n.constant_rank));
  std::vector<bool> assigned(static_cast<std::size_t>(n.num_variables), false);
  if (!choose_bases(form, candidates, bases, assigned, 0, var_order)) {
    throw std::runtime_error(
        "find_nonsolution: no base choice satisfies the non-commutation constraints (bug)");
  }
  for (int v = 0; v < n.num_variables; ++v) {
    if (!assigned[static_cast<std::size_t>(v)]) {
      bases[static_cast<std::size_t>(v)] = candidates.front();
    }
  }

  for (int exp = opt.exponent_start; exp <= opt.exponent_ceiling; exp *= 2) {
    std::vector<Word> assignment;
    assignment.reserve(bases.size());
    for (const Word& b : bases) assignment.push_back(power(b, exp));
    if (!evaluate(n, assignment).empty()) return assignment;
  }
  throw std::runtime_error(
      "find_nonsolution: exponent ceiling reached without a witness; this signals a bug");
}

std::optional<std::vector<Word>> faithfulness_witness(const MoveSequence& s, const Tuple& u,
                                                      WitnessOptions opt) {
  const int k = u.size();
  if (s.k != k) throw std::invalid_argument("faithfulness_witness: tuple size mismatch");
  const int r = u.rank();
  if (r < 2) throw std::invalid_argument("faithfulness_witness: free group rank must be >= 2");
  for (const Word& w : u.entries()) {
    if (w.empty()) {
      throw std::invalid_argument("faithfulness_witness: tuple has an identity entry");
    }
  }

  const std::vector<Word> words = extract_words_over(s, k, r);
  const int rank = r + k;

  // Conjugated indeterminants x_j^-1 u_j x_j over the split alphabet.
  std::vector<Word> conjugated;
  conjugated.reserve(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    std::vector<Letter> raw;
    raw.push_back(Letter(r + j + 1, -1));
    for (Letter l : u.entry(j).letters()) raw.push_back(l);
    raw.push_back(Letter(r + j + 1, +1));
    conjugated.push_back(Word::reduce(rank, raw));
  }

  bool is_identity = true;
  std::optional<std::vector<Word>> witness;
  for (int i = 0; i < k && !witness; ++i) {
    const Word& wi = words[static_cast<std::size_t>(i)];
    if (wi.length() == 1 && wi.front() == Letter(r + i + 1, +1)) continue;
    is_identity = false;
    const Word lhs = substitute(wi, r, conjugated);
    const Word body = multiply(lhs, invert(conjugated[static_cast<std::size_t>(i)]));
    if (body.empty()) continue;  // cannot happen for u without identity entries
    witness = find_nonsolution(make_equation(r, k, body), opt);
  }
  if (is_identity) return std::nullopt;
  if (!witness) {
    throw std::runtime_error("faithfulness_witness: no usable entry equation (bug)");
  }

  // Re-verify by direct application before returning.
  std::vector<Word> moved;
  moved.reserve(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    moved.push_back(conjugate(u.entry(j), (*witness)[static_cast<std::size_t>(j)]));
  }
  const Tuple conjugate_tuple(r, moved);
  if (apply_sequence(conjugate_tuple, s) == conjugate_tuple) {
    throw std::runtime_error("faithfulness_witness: witness failed re-verification (bug)");
  }
  return witness;
}

Equation parse_equation(std::string_view text, int constant_rank, int num_variables) {
  if (constant_rank < 1 || constant_rank > 26) {
    throw std::invalid_argument("parse_equation: constant rank must be in 1..26");
  }
  struct Tok {
    bool variable;
    int index;  // variable index, or 0 for constant runs
    int sign;
    std::string run;
  };
  std::vector<Tok> toks;
  std::istringstream in{std::string(text)};
  std::string tok;
  int max_var = 0;
  while (in >> tok) {
    if (tok == "1") continue;
    if (tok[0] == 'x' && tok.size() > 1 && std::isdigit(static_cast<unsigned char>(tok[1]))) {
      std::size_t p = 1;
      int idx = 0;
      while (p < tok.size() && std::isdigit(static_cast<unsigned char>(tok[p]))) {
        idx = idx * 10 + (tok[p] - '0');
        ++p;
      }
      int sign = +1;
      if (p < tok.size() && tok[p] == '\'') {
        sign = -1;
        ++p;
      }
      if (p != tok.size() || idx < 1) {
        throw std::invalid_argument("parse_equation: bad variable token '" + tok + "'");
      }
      max_var = std::max(max_var, idx);
      toks.push_back(Tok{true, idx, sign, {}});
    } else {
      toks.push_back(Tok{false, 0, 0, tok});
    }
  }
  const int m = num_variables < 0 ? max_var : num_variables;
  if (max_var > m) {
    throw std::invalid_argument("parse_equation: variable index exceeds declared count");
  }
  const int rank = constant_rank + m;
  std::vector<Letter> raw;
  for (const Tok& t : toks) {
    if (t.variable) {
      raw.push_back(Letter(constant_rank + t.index, t.sign));
    } else {
      const Word w = parse_word(t.run, constant_rank);
      for (Letter l : w.letters()) raw.push_back(l);
    }
  }
  return make_equation(constant_rank, m, Word::reduce(rank, raw));
}

std::string format_equation(const Equation& e) {
  if (e.body.empty()) return "1";
  std::string out;
  std::string run;
  auto flush = [&] {
    if (run.empty()) return;
    if (!out.empty()) out += ' ';
    out += run;
    run.clear();
  };
  for (Letter l : e.body.letters()) {
    if (is_variable(l, e.constant_rank)) {
      flush();
      if (!out.empty()) out += ' ';
      out += 'x';
      out += std::to_string(l.index() - e.constant_rank);
      if (l.sign() < 0) out += '\'';
    } else {
      run.push_back(static_cast<char>((l.sign() > 0 ? 'a' : 'A') + l.index() - 1));
    }
  }
  flush();
  return out;
}

}  // namespace ac
