// equations.hpp -- equations over G*X with G a finitely generated free
// group: an equation in m variables is a word over the split alphabet
// with the r constants a_1..a_r first and the variables x_1..x_m after
// them.  A tuple of constant words solves the equation when substituting
// and reducing yields the empty word.

#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ac/moves.hpp"
#include "ac/tuple.hpp"
#include "ac/word.hpp"

namespace ac {

struct Equation {
  int constant_rank = 1;  // r: constants a_1..a_r
  int num_variables = 0;  // m: variables x_1..x_m
  Word body;              // freely reduced word of rank r + m
  bool normalized = false;

  friend bool operator==(const Equation&, const Equation&) = default;
};

/// Builds an equation, validating that the body rank is r + m.
Equation make_equation(int constant_rank, int num_variables, Word body);

/// Cyclically reduces the body and rotates it to start at a variable
/// power, so it has the shape x^d a x^d a ... with maximal variable runs
/// (conjugation does not change the solution set).  Bodies without a
/// variable occurrence are only cyclically reduced; a nonempty one is a
/// constant-false equation (no tuple solves it).
Equation normalize(const Equation& e);

/// True iff the normalized body is a nonempty constant (no solutions).
bool constant_false(const Equation& e);

/// Substitutes assignment[i-1] for x_i and reduces; the assignment words
/// have rank r.  The result is empty exactly on solutions.
Word evaluate(const Equation& e, std::span<const Word> assignment);

/// True iff the body reduces to the empty word of the rank-(r+m) free
/// group; equivalently (for free G) every assignment is a solution.
bool is_trivial(const Equation& e);

/// One factor prefix * x_v^exponent * prefix^-1 of the conjugate-powers
/// shape; prefixes are the partial products of the constant blocks.
struct PowerSyllable {
  Word prefix;   // over the constants only (rank r)
  int variable;  // 1-based
  int exponent;  // nonzero
};

struct ConjugatePowerForm {
  int constant_rank = 1;
  int num_variables = 0;
  std::vector<PowerSyllable> syllables;
};

/// Rewrites a normalized equation as a product of conjugates of variable
/// powers.  Requires the constant product (the image under killing all
/// variables) to be the identity; throws std::invalid_argument otherwise.
ConjugatePowerForm conjugate_power_form(const Equation& e);

/// Reassembles the form and reduces; equals the source body exactly.
Word reassemble(const ConjugatePowerForm& f);

struct WitnessOptions {
  int exponent_start = 2;
  int exponent_ceiling = 1 << 10;
};

/// For a nontrivial equation returns an assignment that fails to solve
/// it (verified by reduction); for the trivial equation returns nullopt.
/// Bases are chosen so consecutive conjugated powers do not commute and
/// exponents escalate geometrically from exponent_start.  Equations with
/// no variables are rejected with std::invalid_argument; hitting the
/// exponent ceiling raises std::runtime_error (an implementation bug,
/// not a property of the input).
std::optional<std::vector<Word>> find_nonsolution(const Equation& e, WitnessOptions opt = {});

/// Moved-point witness for a non-identity move sequence: conjugators
/// h_1..h_k such that s does not fix (u_1^{h_1}, ..., u_k^{h_k}).
/// Returns nullopt when identity_check(s, u.size()) holds.  Requires all
/// u_i != 1 and rank >= 2; the output is re-verified by direct
/// application before being returned.
std::optional<std::vector<Word>> faithfulness_witness(const MoveSequence& s, const Tuple& u,
                                                      WitnessOptions opt = {});

/// Primitive root: the shortest word z with u = z^e, e >= 1 (u nonempty).
Word primitive_root(const Word& u);

/// Exact commutation test in a free group: nontrivial words commute iff
/// they are powers of a common root.
bool commute(const Word& u, const Word& v);

/// Equation text: whitespace-separated tokens, each either a run of
/// constant letters in word format or a variable token "x3" / "x3'" (the
/// apostrophe inverts).  "1" denotes the empty equation.  With
/// num_variables < 0 the variable count is inferred from the largest
/// index used.
Equation parse_equation(std::string_view text, int constant_rank, int num_variables = -1);
std::string format_equation(const Equation& e);

}  // namespace ac
