#include <random>

#include "doctest.h"
#include "pointlike/corpus.hpp"
#include "pointlike/errors.hpp"
#include "pointlike/term.hpp"

using namespace pointlike;

namespace {

Term random_term(std::mt19937& rng, unsigned depth, unsigned letters) {
  std::uniform_int_distribution<int> pick(0, depth == 0 ? 0 : 9);
  int branch = pick(rng);
  if (depth == 0 || branch < 4) {
    std::uniform_int_distribution<int> letter(0, letters - 1);
    return make_letter(std::string(1, static_cast<char>('a' + letter(rng))));
  }
  if (branch < 7) {
    return make_concat(random_term(rng, depth - 1, letters),
                       random_term(rng, depth - 1, letters));
  }
  if (branch < 9) {
    return omega_power(random_term(rng, depth - 1, letters));
  }
  std::uniform_int_distribution<std::uint64_t> exp(2, 3);
  return make_power(random_term(rng, depth - 1, letters),
                    ProfiniteExponent::finite(exp(rng)));
}

}  // namespace

TEST_CASE("parse examples") {
  Term t = parse_term("(* a (pow (* a b) w))");
  REQUIRE(t->kind == TermNode::Kind::concat);
  CHECK(t->left->kind == TermNode::Kind::letter);
  CHECK(t->right->kind == TermNode::Kind::power);
  CHECK(t->right->exp.kind() == ExpKind::omega);

  Term p = parse_term("(pow a mu:2)");
  CHECK(p->kind == TermNode::Kind::power);
  CHECK(p->exp == ProfiniteExponent::mu(2));

  CHECK_THROWS_AS(parse_term("(pow a 1)"), SyntaxError);
  CHECK_THROWS_AS(parse_term("(* a)"), SyntaxError);
  CHECK_THROWS_AS(parse_term("(pow a w"), SyntaxError);
  CHECK_THROWS_AS(parse_term(""), SyntaxError);
  CHECK_THROWS_AS(parse_term("a b"), SyntaxError);
}

TEST_CASE("format flattens left spines only") {
  Term left_heavy = make_concat(make_concat(make_letter("a"), make_letter("b")),
                                make_letter("c"));
  CHECK(format_term(left_heavy) == "(* a b c)");
  Term right_heavy = make_concat(make_letter("a"),
                                 make_concat(make_letter("b"), make_letter("c")));
  CHECK(format_term(right_heavy) == "(* a (* b c))");
}

TEST_CASE("parse after format is the identity") {
  std::mt19937 rng(20240811);
  for (int i = 0; i < 300; ++i) {
    Term t = random_term(rng, 6, 3);
    Term back = parse_term(format_term(t));
    CAPTURE(format_term(t));
    CHECK(term_equal(t, back));
    CHECK(format_term(back) == format_term(t));
  }
}

TEST_CASE("content") {
  CHECK(content(parse_term("a")) == std::set<std::string>{"a"});
  CHECK(content(parse_term("(pow (* a b) w)")) == std::set<std::string>{"a", "b"});
  CHECK(content(parse_term("(* a (pow b w) a)")) == std::set<std::string>{"a", "b"});
}

TEST_CASE("eval examples") {
  PrimeSet empty = PrimeSet::empty();
  SUBCASE("z2 witness term") {
    Presentation P(make_cyclic(2), {"a"}, {1});
    Term t = parse_term("(* a a (pow (* a a) mu:2) a)");
    CHECK(eval_term(P, t, empty) == 1);
  }
  SUBCASE("omega power in z3") {
    Presentation P(make_cyclic(3), {"a"}, {1});
    CHECK(eval_term(P, parse_term("(pow a w)"), empty) == 0);
  }
  SUBCASE("(ab)^w in B_2 is the idempotent ab") {
    Presentation P(make_brandt_b2(), {"a", "b"}, {0, 1});
    CHECK(eval_term(P, parse_term("(pow (* a b) w)"), empty) == 2);
  }
  SUBCASE("unknown letter") {
    Presentation P(make_cyclic(2), {"a"}, {1});
    CHECK_THROWS_AS(eval_term(P, parse_term("(* a c)"), empty), UnknownLetter);
  }
}

TEST_CASE("eval respects structure") {
  std::mt19937 rng(7);
  Presentation P(make_brandt_b2(), {"a", "b"}, {0, 1});
  PrimeSet empty = PrimeSet::empty();
  for (int i = 0; i < 100; ++i) {
    Term s = random_term(rng, 4, 2);
    Term t = random_term(rng, 4, 2);
    CHECK(eval_term(P, make_concat(s, t), empty)
          == P.semigroup().product(eval_term(P, s, empty), eval_term(P, t, empty)));
    unsigned om = eval_term(P, omega_power(s), empty);
    CHECK(P.semigroup().product(om, om) == om);
  }
}

TEST_CASE("finite words agree with the letter map fold") {
  Presentation P(make_brandt_b2(), {"a", "b"}, {0, 1});
  PrimeSet empty = PrimeSet::empty();
  Term t = parse_term("(* a b (pow (* a b) 2) a)");
  auto word = finite_word(t);
  REQUIRE(word.has_value());
  std::vector<unsigned> indices;
  for (auto const& symbol : *word) {
    indices.push_back(*P.letter_index(symbol));
  }
  CHECK(P.image_of_word(indices) == eval_term(P, t, empty));
  CHECK(!finite_word(parse_term("(pow a w)")).has_value());
}
