#include "doctest.h"
#include "pointlike/corpus.hpp"
#include "pointlike/errors.hpp"
#include "pointlike/witness.hpp"

using namespace pointlike;

namespace {

Presentation z2_pres() { return Presentation(make_cyclic(2), {"a"}, {1}); }

}  // namespace

TEST_CASE("set factorizations") {
  SUBCASE("Z/2 base {g} with k = 2") {
    auto fact = set_factorizations(make_cyclic(2), 0b10, 2, 1);
    CHECK(fact.s == std::vector<unsigned>{1, 1});
    CHECK(fact.e == std::vector<unsigned>{1, 1});
    CHECK(fact.t == 1);
  }
  SUBCASE("idempotent set with k = 1") {
    FiniteSemigroup sl = make_semilattice(2);
    auto fact = set_factorizations(sl, 0b111, 1, 2);
    CHECK(fact.s.size() == 1);
    CHECK(fact.e.size() == 1);
    unsigned value = sl.product(sl.product(fact.s[0], fact.e[0]), fact.t);
    CHECK(value == 2);
  }
  SUBCASE("trivial semigroup") {
    auto fact = set_factorizations(make_cyclic(1), 0b1, 1, 0);
    CHECK(fact.s == std::vector<unsigned>{0});
    CHECK(fact.t == 0);
  }
  SUBCASE("Z/3 base {g} with k = 3") {
    auto fact = set_factorizations(make_cyclic(3), 0b010, 3, 1);
    CHECK(fact.s == std::vector<unsigned>{1, 1, 1});
    CHECK(fact.e == std::vector<unsigned>{1, 1, 1});
    CHECK(fact.t == 1);
  }
}

TEST_CASE("the Z/2 worked example") {
  Presentation P = z2_pres();
  PrimeSet pi = PrimeSet::empty();
  SaturationResult r = saturate(P.semigroup(), pi);
  WitnessSynthesizer synth(P, pi, r);

  SUBCASE("singleton base case") {
    WitnessMap w = synth.synthesize(0b10);
    CHECK(format_term(w.assignments.at(1)) == "a");
    CHECK(!w.idempotent_projection);
  }
  SUBCASE("the full subset") {
    WitnessMap w = synth.synthesize(0b11);
    CHECK(format_term(w.assignments.at(1)) == "(* a a (pow (* a a) mu:2) a)");
    CHECK(term_equal(w.assignments.at(0),
                     make_concat(w.assignments.at(1), w.assignments.at(1))));
    CHECK(w.idempotent_projection);
    Corpus corpus = generate_corpus(Variety::g_pi_bar(pi), 4);
    WitnessReport report = verify_witness(P, pi, w, corpus);
    CHECK(report.passed());
  }
  SUBCASE("idempotent singleton") {
    WitnessMap w = synth.synthesize(0b01);
    CHECK(format_term(w.assignments.at(0)) == "(* a a)");
  }
  SUBCASE("not in family") {
    SaturationResult trivial = saturate(P.semigroup(), PrimeSet::of({2}));
    WitnessSynthesizer s2(P, PrimeSet::of({2}), trivial);
    CHECK_THROWS_AS(s2.synthesize(0b11), NotInFamily);
  }
}

TEST_CASE("beta transform shape") {
  Presentation P = z2_pres();
  PrimeSet pi = PrimeSet::empty();
  SaturationResult r = saturate(P.semigroup(), pi);
  WitnessSynthesizer synth(P, pi, r);
  WitnessMap alpha = synth.synthesize(0b10);
  WitnessMap beta = synth.beta_transform(alpha, 2);
  CHECK(beta.idempotent_projection);
  // s-block (e-block)^{mu:2} t-block with two factors in each block
  CHECK(format_term(beta.assignments.at(1)) == "(* a a (pow (* a a) mu:2) a)");
  CHECK(eval_term(P, beta.assignments.at(1), pi) == 1);
}

TEST_CASE("beta transform over Z/3 with pi = {2}") {
  Presentation P(make_cyclic(3), {"a"}, {1});
  PrimeSet pi = PrimeSet::of({2});
  SaturationResult r = saturate(P.semigroup(), pi);
  WitnessSynthesizer synth(P, pi, r);
  WitnessMap w = synth.synthesize(0b111);
  CHECK(w.idempotent_projection);
  for (unsigned x = 0; x < 3; ++x) {
    CHECK(eval_term(P, w.assignments.at(x), pi) == x);
  }
  // the beta terms carry the mu:3 exponent of the order-3 group
  CHECK(format_term(w.assignments.at(1)).find("mu:3") != std::string::npos);
  Corpus corpus = generate_corpus(Variety::g_pi_bar(pi), 4);
  CHECK(verify_witness(P, pi, w, corpus).passed());
}

TEST_CASE("verify_witness reports corruption") {
  Presentation P = z2_pres();
  PrimeSet pi = PrimeSet::empty();
  Corpus corpus = generate_corpus(Variety::g_pi_bar(pi), 3);
  SUBCASE("phi check") {
    WitnessMap bad;
    bad.subset = 0b10;
    bad.assignments[1] = parse_term("(* a a)");  // phi(aa) = e, not g
    WitnessReport report = verify_witness(P, pi, bad, corpus);
    CHECK(!report.phi_ok);
    CHECK(!report.passed());
  }
  SUBCASE("projection check") {
    // phi(a) = phi(b) = g on the two-letter presentation of Z/2, but the
    // letters a and b separate over any corpus with at least two elements
    Presentation Q(make_cyclic(2), {"a", "b"}, {1, 1});
    WitnessMap bad;
    bad.subset = 0b10;
    bad.assignments[1] = parse_term("a");
    WitnessReport solo = verify_witness(Q, pi, bad, corpus);
    CHECK(solo.passed());  // a single assignment has nothing to distinguish
    WitnessMap pair;
    pair.subset = 0b11;
    pair.assignments[0] = parse_term("(* a a)");
    pair.assignments[1] = parse_term("b");
    WitnessReport report = verify_witness(Q, pi, pair, corpus);
    CHECK(report.projection_counterexample.has_value());
    CHECK(!report.passed());
  }
}

TEST_CASE("witness synthesis is deterministic") {
  Presentation P(make_cyclic(6), {"a"}, {1});
  PrimeSet pi = PrimeSet::empty();
  SaturationResult r = saturate(P.semigroup(), pi);
  WitnessMap w1 = synthesize(P, pi, r, 0b111111);
  WitnessMap w2 = synthesize(P, pi, r, 0b111111);
  for (unsigned x = 0; x < 6; ++x) {
    CHECK(format_term(w1.assignments.at(x)) == format_term(w2.assignments.at(x)));
  }
}

TEST_CASE("idempotent witness synthesis") {
  Presentation P = z2_pres();
  PrimeSet pi = PrimeSet::empty();
  SaturationResult r = saturate(P.semigroup(), pi);
  WitnessSynthesizer synth(P, pi, r);
  SUBCASE("the group subset is idempotent pointlike") {
    WitnessMap w = synth.synthesize_idempotent(0b11);
    CHECK(w.idempotent_projection);
    Corpus corpus = generate_corpus(Variety::g_pi_bar(pi), 4);
    CHECK(verify_witness(P, pi, w, corpus).passed());
  }
  SUBCASE("non-idempotent singleton {g} still sits inside {e,g}") {
    WitnessMap w = synth.synthesize_idempotent(0b10);
    CHECK(w.idempotent_projection);
    CHECK(w.assignments.size() == 1);
    CHECK(eval_term(P, w.assignments.at(1), pi) == 1);
  }
  SUBCASE("no idempotent container under pi = all") {
    SaturationResult singletons = saturate(P.semigroup(), PrimeSet::all());
    WitnessSynthesizer s2(P, PrimeSet::all(), singletons);
    CHECK_THROWS_AS(s2.synthesize_idempotent(0b10), NotInFamily);
    WitnessMap ok = s2.synthesize_idempotent(0b01);  // {e} is idempotent
    CHECK(eval_term(P, ok.assignments.at(0), PrimeSet::all()) == 0);
  }
}
