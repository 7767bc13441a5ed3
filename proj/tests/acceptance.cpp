// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Every check is exact; runtimes are printed for the budgeted criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "pointlike/cbf.hpp"
#include "pointlike/corpus.hpp"
#include "pointlike/da_reduction.hpp"
#include "pointlike/dfa.hpp"
#include "pointlike/saturation.hpp"
#include "pointlike/variety.hpp"
#include "pointlike/witness.hpp"

using namespace pointlike;

namespace {

struct Harness {
  int failures = 0;

  void run(int number, std::string const& title, std::function<bool()> body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
      ok = body();
    } catch (std::exception const& e) {
      note = std::string(" (exception: ") + e.what() + ")";
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::printf("[%s] %d: %s%s (%lld ms)\n", ok ? "PASS" : "FAIL", number,
                title.c_str(), note.c_str(), static_cast<long long>(ms));
    std::fflush(stdout);
    if (!ok) {
      ++failures;
    }
  }
};

std::vector<PrimeSet> pi_grid() {
  return {PrimeSet::empty(), PrimeSet::of({2}), PrimeSet::of({3}), PrimeSet::all()};
}

std::set<Subset> family_set(SaturationResult const& r) {
  return {r.members.begin(), r.members.end()};
}

std::vector<FiniteSemigroup> order_leq(unsigned max_order) {
  std::vector<FiniteSemigroup> out;
  for (unsigned n = 1; n <= max_order; ++n) {
    auto all = all_semigroups_upto_iso(n);
    out.insert(out.end(), all.begin(), all.end());
  }
  return out;
}

std::vector<FiniteSemigroup> curated() {
  std::vector<FiniteSemigroup> out;
  for (unsigned n = 5; n <= 6; ++n) {
    out.push_back(make_cyclic(n));
  }
  out.push_back(make_brandt_b2());
  out.push_back(make_b2_with_identity());
  out.push_back(make_semilattice(3));
  return out;
}

bool criterion_oracle_equivalence() {
  std::vector<FiniteSemigroup> suite = order_leq(4);
  std::mt19937 rng(20240903);
  for (int i = 0; i < 50; ++i) {
    suite.push_back(random_semigroup(5, rng));
  }
  for (auto const& S : suite) {
    for (auto const& pi : pi_grid()) {
      auto expected = pointlike_tests::naive_family(S, pi);
      SaturationResult r = saturate(S, pi);
      if (family_set(r) != std::set<Subset>(expected.begin(), expected.end())) {
        return false;
      }
    }
  }
  return true;
}

bool criterion_triviality_on_members() {
  std::vector<FiniteSemigroup> suite = order_leq(4);
  auto extra = curated();
  suite.insert(suite.end(), extra.begin(), extra.end());
  for (auto const& pi : pi_grid()) {
    Variety variety = Variety::g_pi_bar(pi);
    for (auto const& S : suite) {
      if (!membership(S, variety)) {
        continue;
      }
      SaturationResult r = saturate(S, pi);
      if (r.members.size() != S.order()) {
        return false;
      }
      for (Subset P : r.members) {
        if (subset_elements(P).size() != 1) {
          return false;
        }
      }
    }
  }
  return true;
}

bool criterion_z2_worked_example() {
  Presentation P(make_cyclic(2), {"a"}, {1});
  PrimeSet pi = PrimeSet::empty();
  SaturationResult r = saturate(P.semigroup(), pi);
  if (family_set(r) != std::set<Subset>{0b01, 0b10, 0b11}) {
    return false;
  }
  WitnessMap w = synthesize(P, pi, r, 0b11);
  if (format_term(w.assignments.at(1)) != "(* a a (pow (* a a) mu:2) a)") {
    return false;
  }
  if (!term_equal(w.assignments.at(0),
                  make_concat(w.assignments.at(1), w.assignments.at(1)))) {
    return false;
  }
  if (eval_term(P, w.assignments.at(1), pi) != 1
      || eval_term(P, w.assignments.at(0), pi) != 0) {
    return false;
  }
  Corpus corpus = generate_corpus(Variety::g_pi_bar(pi), 4);
  return verify_witness(P, pi, w, corpus).passed();
}

bool criterion_witness_soundness_sweep() {
  for (auto const& pi : pi_grid()) {
    Corpus corpus = generate_corpus(Variety::g_pi_bar(pi), 4);
    for (auto const& S : order_leq(3)) {
      Presentation P = present_with_minimal_generators(S);
      SaturationResult r = saturate(S, pi);
      WitnessSynthesizer synth(P, pi, r);
      for (Subset member : r.members) {
        WitnessMap w = synth.synthesize(member);
        for (auto const& [x, term] : w.assignments) {
          if (eval_term(P, term, pi) != x) {
            return false;
          }
        }
        if (!verify_witness(P, pi, w, corpus).passed()) {
          return false;
        }
      }
    }
  }
  return true;
}

bool criterion_pi_monotonicity() {
  auto grid = pi_grid();
  for (auto const& S : order_leq(4)) {
    std::vector<std::set<Subset>> families;
    for (auto const& pi : grid) {
      families.push_back(family_set(saturate(S, pi)));
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
      for (std::size_t j = 0; j < grid.size(); ++j) {
        if (i == j || !grid[i].subset_of(grid[j])) {
          continue;
        }
        for (Subset P : families[j]) {
          if (families[i].count(P) == 0) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) {
      result = result * base % m;
    }
    base = base * base % m;
    exp >>= 1;
  }
  return result;
}

bool criterion_exponent_arithmetic() {
  std::vector<std::vector<unsigned>> subsets = {{},     {2},    {3},       {5},
                                                {2, 3}, {2, 5}, {3, 5},    {2, 3, 5}};
  for (auto const& primes : subsets) {
    PrimeSet pi = primes.empty() ? PrimeSet::empty() : PrimeSet::of(primes);
    for (std::uint64_t m = 1; m <= 100; ++m) {
      std::uint64_t nu = exponent_mod(ProfiniteExponent::nu_pi(), pi, m);
      if (primes.empty()) {
        if (nu != 1 % m) {  // nu_empty = omega + 1
          return false;
        }
      } else {
        // direct modular exponentiation of ((p_1...p_n)^{n!}) until stable
        for (unsigned n = 12; n <= 24; ++n) {
          std::uint64_t product = 1 % m;
          for (unsigned i = 0; i < n; ++i) {
            product = product * (primes[i % primes.size()] % m) % m;
          }
          std::uint64_t value = product;
          for (unsigned j = 2; j <= n; ++j) {
            value = powmod(value, j, m);
          }
          if (value != nu) {
            return false;
          }
        }
      }
      // mu-consistency: k (mu + 1) = nu - 1 mod k*m
      for (std::uint64_t k = 1; k <= 10; ++k) {
        if (!pi.is_pi_prime_number(k)) {
          continue;
        }
        std::uint64_t mu = exponent_mod(ProfiniteExponent::mu(k), pi, m);
        std::uint64_t nu_km = exponent_mod(ProfiniteExponent::nu_pi(), pi, k * m);
        if (k * (mu + 1) % (k * m) != (nu_km + k * m - 1) % (k * m)) {
          return false;
        }
      }
    }
  }
  return true;
}

Term random_omega_term(std::mt19937& rng, unsigned depth, unsigned letters) {
  std::uniform_int_distribution<int> pick(0, depth == 0 ? 0 : 9);
  int branch = pick(rng);
  if (depth == 0 || branch < 4) {
    std::uniform_int_distribution<int> letter(0, letters - 1);
    return make_letter(std::string(1, static_cast<char>('a' + letter(rng))));
  }
  if (branch < 7) {
    return make_concat(random_omega_term(rng, depth - 1, letters),
                       random_omega_term(rng, depth - 1, letters));
  }
  if (branch < 9) {
    return omega_power(random_omega_term(rng, depth - 1, letters));
  }
  std::uniform_int_distribution<std::uint64_t> exp(2, 3);
  return make_power(random_omega_term(rng, depth - 1, letters),
                    ProfiniteExponent::finite(exp(rng)));
}

Term reassemble_cbf(Term const& t) {
  CbfResult r = cbf(t);
  std::vector<Term> parts;
  if (auto const* f = std::get_if<CbfFull>(&r)) {
    parts = {f->prefix, make_letter(f->a0), f->middle, make_letter(f->b0),
             f->suffix};
  } else if (auto const* s = std::get_if<CbfSharedMarker>(&r)) {
    parts = {s->alpha, make_letter(s->x), s->beta};
  } else if (auto const* c = std::get_if<CbfCrossed>(&r)) {
    parts = {c->alpha, make_letter(c->y), c->beta, make_letter(c->x), c->gamma};
  } else {
    parts = {make_letter(std::get<CbfTooShort>(r).letter)};
  }
  std::vector<Term> nonnull;
  for (auto const& p : parts) {
    if (p) {
      nonnull.push_back(p);
    }
  }
  return make_concat_all(nonnull);
}

bool criterion_cbf_soundness() {
  // all semigroups of order <= 3 plus the curated family, no variety filter
  Corpus corpus = generate_corpus(Variety::g_pi_bar(PrimeSet::all()), 3);
  std::mt19937 rng(777001);
  for (int i = 0; i < 1000; ++i) {
    Term t = random_omega_term(rng, 5, 3);
    Term back = reassemble_cbf(t);
    if (corpus_distinguish({t, back}, corpus, PrimeSet::empty())) {
      return false;
    }
  }
  return true;
}

bool criterion_da_reduction() {
  Presentation P(make_brandt_b2(), {"a", "b"}, {0, 1});
  Term u1 = parse_term("(pow (* a b) w)");
  Term u2 = parse_term("(* (pow (* a b) w) (pow (* b a) w) (pow (* a b) w))");
  Term uu = make_concat(u1, u1);

  ReduceReport showcase = reduce_and_verify(P, {u1, u2}, false);
  if (!showcase.passed()) {
    return false;
  }
  if (eval_term(P, showcase.outputs[0], PrimeSet::empty())
          != eval_term(P, u1, PrimeSet::empty())
      || eval_term(P, showcase.outputs[1], PrimeSet::empty())
             != eval_term(P, u2, PrimeSet::empty())) {
    return false;
  }

  ReduceReport identical = reduce_and_verify(P, {u1, u1}, false);
  if (!identical.passed()) {
    return false;
  }
  ReduceReport words = reduce_and_verify(P, {parse_term("(* a b)"),
                                             parse_term("(* a b)")},
                                         false);
  if (!words.passed()) {
    return false;
  }

  ReduceReport idem_single = reduce_and_verify(P, {u1}, true);
  ReduceReport idem_pair = reduce_and_verify(P, {u1, uu}, true);
  return idem_single.passed() && idem_pair.passed();
}

bool criterion_ingestion() {
  Dfa dfa{3, 0, {0}, {"a", "b"}, {{1, 2, 2}, {2, 0, 2}}};
  Presentation P = syntactic_from_dfa(dfa);
  if (P.semigroup().order() != 5) {
    return false;
  }
  if (!is_isomorphic(P.semigroup(), make_brandt_b2())) {
    return false;
  }
  return membership(P.semigroup(), Variety::aperiodic())
         && !membership(P.semigroup(), Variety::da());
}

}  // namespace

int main() {
  Harness harness;
  harness.run(1, "saturation equals the naive fixed point (order <= 4 exhaustive, 50 random order-5, 4 prime sets)",
              criterion_oracle_equivalence);
  harness.run(2, "semigroups inside G_pi-bar have singleton families",
              criterion_triviality_on_members);
  harness.run(3, "Z/2 worked example: family, exact witness terms, aperiodic corpus",
              criterion_z2_worked_example);
  harness.run(4, "witness soundness sweep over the order <= 3 corpus",
              criterion_witness_soundness_sweep);
  harness.run(5, "pi-monotonicity of the families over the grid",
              criterion_pi_monotonicity);
  harness.run(6, "exponent arithmetic against the defining sequences (m <= 100, pi within {2,3,5})",
              criterion_exponent_arithmetic);
  harness.run(7, "cbf reassembly identity on 1000 random omega-terms",
              criterion_cbf_soundness);
  harness.run(8, "DA reduction suite: images, pure omega-terms, corpus checks",
              criterion_da_reduction);
  harness.run(9, "(ab)* ingestion gives B_2 with A true and DA false",
              criterion_ingestion);
  if (harness.failures > 0) {
    std::printf("%d criterion(s) failed\n", harness.failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
