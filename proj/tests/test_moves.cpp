#include <sstream>

#include "ac/moves.hpp"
#include "doctest.h"
#include "support/random_gen.hpp"

using namespace ac;
using ac::testing::Rng;

namespace {

Word w(const std::string& text, int rank = 2) { return parse_word(text, rank); }
Tuple ab() { return Tuple(2, {w("a"), w("b")}); }

}  // namespace

TEST_CASE("elementary moves act as defined") {
  CHECK(apply_move(ab(), Move::right_multiply(1, 2, +1)) == Tuple(2, {w("ab"), w("b")}));
  CHECK(apply_move(Tuple(2, {w("ab"), w("b")}), Move::invert_entry(1)) ==
        Tuple(2, {w("BA"), w("b")}));
  CHECK(apply_move(ab(), Move::conjugate_entry(1, Letter(2, +1))) ==
        Tuple(2, {w("Bab"), w("b")}));
  CHECK(apply_move(ab(), Move::left_multiply(1, 2, -1)) == Tuple(2, {w("Ba"), w("b")}));
  CHECK_THROWS_AS(apply_move(ab(), Move::right_multiply(1, 3, +1)), std::out_of_range);
  CHECK_THROWS_AS(Move::right_multiply(1, 1, +1), std::invalid_argument);
}

TEST_CASE("move inverses") {
  CHECK(invert_move(Move::right_multiply(1, 2, +1)) == Move::right_multiply(1, 2, -1));
  CHECK(invert_move(Move::invert_entry(2)) == Move::invert_entry(2));
  CHECK(invert_move(Move::conjugate_entry(1, Letter(2, +1))) ==
        Move::conjugate_entry(1, Letter(2, -1)));
}

TEST_CASE("sequence application and inversion") {
  const MoveSequence empty{2, {}};
  CHECK(apply_sequence(ab(), empty) == ab());

  const MoveSequence one{2, {Move::right_multiply(1, 2, +1)}};
  CHECK(apply_sequence(ab(), one) == Tuple(2, {w("ab"), w("b")}));

  const MoveSequence three{2,
                           {Move::right_multiply(1, 2, +1), Move::invert_entry(1),
                            Move::right_multiply(1, 2, +1)}};
  CHECK(apply_sequence(ab(), three) == Tuple(2, {w("BAb"), w("b")}));

  CHECK(invert_sequence(empty).moves.empty());
  CHECK(invert_sequence(MoveSequence{2, {Move::invert_entry(1)}}).moves ==
        std::vector<Move>{Move::invert_entry(1)});
  const MoveSequence pair{2, {Move::right_multiply(1, 2, +1),
                              Move::conjugate_entry(1, Letter(2, +1))}};
  const MoveSequence expected{2, {Move::conjugate_entry(1, Letter(2, -1)),
                                  Move::right_multiply(1, 2, -1)}};
  CHECK(invert_sequence(pair) == expected);
}

TEST_CASE("sequences are bijections") {
  Rng rng(2001);
  for (int trial = 0; trial < 1000; ++trial) {
    const int k = 2 + trial % 2;
    const Tuple t = ac::testing::random_tuple(rng, k, k, 8);
    const MoveSequence s = ac::testing::random_sequence(rng, k, k, 1 + trial % 10);
    CHECK(apply_sequence(apply_sequence(t, s), invert_sequence(s)) == t);
  }
}

TEST_CASE("the trivial tuple is fixed by every sequence") {
  Rng rng(2002);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 2 + trial % 3;
    const MoveSequence s = ac::testing::random_sequence(rng, k, k, 1 + trial % 12);
    CHECK(apply_sequence(trivial_tuple(k, k), s) == trivial_tuple(k, k));
  }
}

TEST_CASE("extract_words formal run") {
  SUBCASE("identity sequence") {
    const auto words = extract_words(MoveSequence{2, {}}, 2);
    CHECK(words[0] == parse_word("c", 4));  // x_1 is letter 3 of the doubled alphabet
    CHECK(words[1] == parse_word("d", 4));
  }
  SUBCASE("right multiplication") {
    const auto words = extract_words(MoveSequence{2, {Move::right_multiply(1, 2, +1)}}, 2);
    CHECK(words[0] == parse_word("cd", 4));
    CHECK(words[1] == parse_word("d", 4));
  }
  SUBCASE("conjugation by a constant") {
    const auto words = extract_words(MoveSequence{2, {Move::conjugate_entry(1, Letter(2, +1))}},
                                     2);
    CHECK(words[0] == parse_word("Bcb", 4));  // a_2^-1 x_1 a_2
    CHECK(words[1] == parse_word("d", 4));
  }
}

TEST_CASE("substitution coherence of extract_words") {
  Rng rng(2003);
  for (int trial = 0; trial < 500; ++trial) {
    const int k = 2;
    const MoveSequence s = ac::testing::random_sequence(rng, k, k, 1 + trial % 12);
    const Tuple u = ac::testing::random_tuple(rng, k, k, 6);
    const auto words = extract_words(s, k);
    const Tuple direct = apply_sequence(u, s);
    for (int i = 0; i < k; ++i) {
      CHECK(substitute(words[static_cast<std::size_t>(i)], k, u.entries()) == direct.entry(i));
    }
  }
}

TEST_CASE("identity_check") {
  CHECK(identity_check(MoveSequence{2, {}}, 2));
  CHECK(identity_check(MoveSequence{2, {Move::invert_entry(1), Move::invert_entry(1)}}, 2));
  CHECK_FALSE(identity_check(MoveSequence{2, {Move::right_multiply(1, 2, +1)}}, 2));

  Rng rng(2004);
  SUBCASE("s followed by its inverse is the identity") {
    for (int trial = 0; trial < 100; ++trial) {
      const MoveSequence s = ac::testing::random_sequence(rng, 2, 2, 1 + trial % 10);
      CHECK(identity_check(concat(s, invert_sequence(s)), 2));
    }
  }
  SUBCASE("identity sequences fix random tuples exactly") {
    for (int trial = 0; trial < 100; ++trial) {
      const MoveSequence s = ac::testing::random_sequence(rng, 2, 2, 1 + trial % 8);
      const MoveSequence id_seq = concat(s, invert_sequence(s));
      REQUIRE(identity_check(id_seq, 2));
      const Tuple t = ac::testing::random_tuple(rng, 2, 2, 7);
      CHECK(apply_sequence(t, id_seq) == t);
    }
  }
}

TEST_CASE("move text format") {
  const MoveSequence s{2,
                       {Move::right_multiply(1, 2, +1), Move::left_multiply(2, 1, -1),
                        Move::invert_entry(2), Move::conjugate_entry(1, Letter(2, -1))}};
  std::stringstream ss;
  write_moves(ss, s);
  CHECK(ss.str() == "R 1 2 +\nL 2 1 -\nI 2\nC 1 B\n");
  const MoveSequence parsed = read_moves(ss, 2);
  CHECK(parsed == s);

  std::stringstream commented("# header\nR 1 2 +\n# tail\n");
  CHECK(read_moves(commented).moves.size() == 1);

  CHECK_THROWS_AS(parse_move("R 1 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_move("Q 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_move("C 1 ?"), std::invalid_argument);

  // k inference covers move indices and conjugator letters
  std::stringstream inferred("R 1 3 +\nC 1 b\n");
  CHECK(read_moves(inferred).k == 3);
  std::stringstream too_small("R 1 3 +\n");
  CHECK_THROWS_AS(read_moves(too_small, 2), std::out_of_range);

  // a C move with a word argument expands to single-letter conjugations
  std::stringstream worded("C 1 aB\n");
  const MoveSequence expanded = read_moves(worded, 2);
  CHECK(expanded.moves == std::vector<Move>{Move::conjugate_entry(1, Letter(1, +1)),
                                            Move::conjugate_entry(1, Letter(2, -1))});
  const Tuple t(2, {parse_word("b", 2), parse_word("a", 2)});
  CHECK(apply_sequence(t, expanded).entry(0) == conjugate(t.entry(0), parse_word("aB", 2)));
  CHECK_THROWS_AS(parse_move("C 1 aB"), std::invalid_argument);  // strict per-move format
}

TEST_CASE("canonical move order is R < L < I < C with numeric ties") {
  const std::vector<Move> all = enumerate_moves(2, 2);
  CHECK(all.size() == 18);
  CHECK(std::is_sorted(all.begin(), all.end(),
                       [](const Move& a, const Move& b) { return a < b; }));
  CHECK(all.front() == Move::right_multiply(1, 2, +1));
  CHECK(all.back() == Move::conjugate_entry(2, Letter(2, -1)));
}
