#include <random>

#include "doctest.h"
#include "pointlike/corpus.hpp"

using namespace pointlike;

TEST_CASE("small semigroup counts up to isomorphism") {
  CHECK(all_semigroups_upto_iso(1).size() == 1);
  CHECK(all_semigroups_upto_iso(2).size() == 5);
  CHECK(all_semigroups_upto_iso(3).size() == 24);
  CHECK(all_semigroups_upto_iso(4).size() == 188);
}

TEST_CASE("random semigroups are valid and reproducible") {
  std::mt19937 rng(99);
  for (int i = 0; i < 10; ++i) {
    FiniteSemigroup S = random_semigroup(5, rng);
    CHECK(S.order() == 5);  // from_cayley already checked associativity
  }
  std::mt19937 a(1234), b(1234);
  CHECK(random_semigroup(4, a) == random_semigroup(4, b));
}

TEST_CASE("canonical keys identify isomorphic tables") {
  // Z/2 versus the 2-element semilattice
  FiniteSemigroup z2 = make_cyclic(2);
  FiniteSemigroup sl = FiniteSemigroup::from_cayley(2, {{0, 0}, {0, 1}});
  CHECK(!is_isomorphic(z2, sl));
  // relabeled copy of B_2
  FiniteSemigroup b2 = make_brandt_b2();
  std::vector<unsigned> perm = {4, 3, 1, 0, 2};
  std::vector<std::vector<unsigned>> table(5, std::vector<unsigned>(5));
  for (unsigned x = 0; x < 5; ++x) {
    for (unsigned y = 0; y < 5; ++y) {
      table[perm[x]][perm[y]] = perm[b2.product(x, y)];
    }
  }
  CHECK(is_isomorphic(b2, FiniteSemigroup::from_cayley(5, table)));
}

TEST_CASE("corpus generation follows the membership test") {
  SUBCASE("aperiodic order 2") {
    Corpus corpus = generate_corpus(Variety::aperiodic(), 2);
    // the five order-2 classes minus Z/2, plus the trivial semigroup and the
    // curated aperiodic members of larger order
    unsigned order2 = 0;
    bool has_z2 = false;
    for (auto const& member : corpus.members) {
      if (member.semigroup().order() == 2) {
        ++order2;
        if (is_isomorphic(member.semigroup(), make_cyclic(2))) {
          has_z2 = true;
        }
      }
    }
    CHECK(order2 == 4);
    CHECK(!has_z2);
    bool has_b2 = false;
    for (auto const& member : corpus.members) {
      has_b2 |= member.semigroup().order() == 5
                && is_isomorphic(member.semigroup(), make_brandt_b2());
    }
    CHECK(has_b2);
  }
  SUBCASE("DA order 2 excludes non-idempotent regular elements") {
    Corpus corpus = generate_corpus(Variety::da(), 2);
    for (auto const& member : corpus.members) {
      CHECK(membership(member.semigroup(), Variety::da()));
    }
  }
  SUBCASE("G_2-bar includes Z/2") {
    Corpus corpus = generate_corpus(Variety::g_pi_bar(PrimeSet::of({2})), 2);
    bool has_z2 = false;
    for (auto const& member : corpus.members) {
      has_z2 |= member.semigroup().order() == 2
                && is_isomorphic(member.semigroup(), make_cyclic(2));
    }
    CHECK(has_z2);
  }
}

TEST_CASE("corpus_distinguish") {
  PrimeSet empty = PrimeSet::empty();
  Term omega_a = parse_term("(pow a w)");
  Term omega_a_a = parse_term("(* (pow a w) a)");
  SUBCASE("aperiodic corpus cannot tell x^w from x^{w+1}") {
    Corpus corpus = generate_corpus(Variety::aperiodic(), 3);
    CHECK(!corpus_distinguish({omega_a, omega_a_a}, corpus, empty));
  }
  SUBCASE("a corpus containing Z/2 does") {
    Corpus corpus = generate_corpus(Variety::g_pi_bar(PrimeSet::of({2})), 2);
    auto cex = corpus_distinguish({omega_a, omega_a_a}, corpus, empty);
    REQUIRE(cex.has_value());
    CHECK(cex->value_i != cex->value_j);
  }
  SUBCASE("B_2 distinguishes (ab)^w from (ba)^w") {
    Corpus corpus = generate_corpus(Variety::aperiodic(), 2);
    auto cex = corpus_distinguish(
        {parse_term("(pow (* a b) w)"), parse_term("(pow (* b a) w)")}, corpus,
        empty);
    REQUIRE(cex.has_value());
  }
  SUBCASE("identical terms are never distinguished") {
    Corpus corpus = generate_corpus(Variety::aperiodic(), 2);
    Term t = parse_term("(* a (pow (* a b) w) b)");
    CHECK(!corpus_distinguish({t, t}, corpus, empty));
  }
}
