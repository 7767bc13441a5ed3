#include "pointlike/witness.hpp"

#include <algorithm>

#include "pointlike/errors.hpp"

namespace pointlike {

namespace {

std::string subset_string(Subset P) {
  std::string out = "{";
  bool first = true;
  for (unsigned x : subset_elements(P)) {
    if (!first) {
      out += ",";
    }
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

}  // namespace

namespace {

// Lexicographically minimal (b_1, ..., b_count) over B with the given
// product; greedy, guarded by a reachability check against the powers of B.
std::vector<unsigned> split_over(FiniteSemigroup const& S, Subset B,
                                 std::vector<Subset> const& pow, unsigned count,
                                 unsigned target) {
  std::vector<unsigned> factors;
  bool have_prefix = false;
  unsigned prefix = 0;
  for (unsigned pos = 0; pos < count; ++pos) {
    unsigned remaining = count - pos - 1;
    bool placed = false;
    for (unsigned b : subset_elements(B)) {
      unsigned acc = have_prefix ? S.product(prefix, b) : b;
      bool feasible;
      if (remaining == 0) {
        feasible = (acc == target);
      } else {
        feasible = false;
        for (unsigned y : subset_elements(pow[remaining])) {
          if (S.product(acc, y) == target) {
            feasible = true;
            break;
          }
        }
      }
      if (feasible) {
        factors.push_back(b);
        prefix = acc;
        have_prefix = true;
        placed = true;
        break;
      }
    }
    if (!placed) {
      return {};
    }
  }
  return factors;
}

}  // namespace

SetFactorization set_factorizations(FiniteSemigroup const& S, Subset B, unsigned k,
                                    unsigned p) {
  std::vector<Subset> pow(k + 1, 0);
  pow[1] = B;
  for (unsigned d = 2; d <= k; ++d) {
    pow[d] = subset_product(S, pow[d - 1], B);
  }
  // E = B^k is the identity subset of the cyclic group generated by B
  Subset E = pow[k];
  std::vector<unsigned> e_candidates;
  for (unsigned e : subset_elements(E)) {
    if (S.is_idempotent(e)) {
      e_candidates.push_back(e);
    }
  }
  for (unsigned s : subset_elements(E)) {
    for (unsigned e : e_candidates) {
      unsigned se = S.product(s, e);
      for (unsigned t : subset_elements(B)) {
        if (S.product(se, t) != p) {
          continue;
        }
        SetFactorization fact;
        fact.t = t;
        fact.s = split_over(S, B, pow, k, s);
        fact.e = split_over(S, B, pow, k, e);
        if (fact.s.size() == k && fact.e.size() == k) {
          return fact;
        }
      }
    }
  }
  throw FactorizationNotFound("no (s, e, t) factorization of " + std::to_string(p)
                              + " over " + subset_string(B) + " with k = "
                              + std::to_string(k));
}

WitnessSynthesizer::WitnessSynthesizer(Presentation const& P, PrimeSet pi,
                                       SaturationResult const& result)
    : pres_(P), pi_(std::move(pi)), result_(result) {
  if (P.semigroup().order() != result.order) {
    throw Error("witness synthesis: presentation and saturation orders differ");
  }
}

void WitnessSynthesizer::check_phi(WitnessMap const& w) const {
  for (auto const& [x, term] : w.assignments) {
    unsigned image = eval_term(pres_, term, pi_);
    if (image != x) {
      throw Error("internal: witness term for element " + std::to_string(x)
                  + " evaluates to " + std::to_string(image));
    }
  }
}

WitnessMap WitnessSynthesizer::restrict_to(WitnessMap const& w, Subset target) const {
  if ((target & ~w.subset) != 0) {
    throw Error("internal: restriction target is not a subset");
  }
  WitnessMap out;
  out.subset = target;
  out.idempotent_projection = w.idempotent_projection;
  for (unsigned x : subset_elements(target)) {
    out.assignments.emplace(x, w.assignments.at(x));
  }
  return out;
}

std::vector<unsigned> WitnessSynthesizer::minimal_factorization(Subset B,
                                                                unsigned count,
                                                                unsigned target) const {
  FiniteSemigroup const& S = pres_.semigroup();
  std::vector<Subset> pow(count + 1, 0);
  pow[1] = B;
  for (unsigned d = 2; d <= count; ++d) {
    pow[d] = subset_product(S, pow[d - 1], B);
  }
  std::vector<unsigned> factors = split_over(S, B, pow, count, target);
  if (factors.size() != count) {
    throw FactorizationNotFound("no factorization of " + std::to_string(target)
                                + " into " + std::to_string(count)
                                + " factors from " + subset_string(B));
  }
  return factors;
}

WitnessMap WitnessSynthesizer::beta_transform(WitnessMap const& alpha, unsigned k) {
  FiniteSemigroup const& S = pres_.semigroup();
  Subset B = alpha.subset;
  ProfiniteExponent mu = mu_for_order(k, pi_);
  WitnessMap out;
  out.subset = B;
  out.idempotent_projection = true;
  for (unsigned p : subset_elements(B)) {
    SetFactorization fact = set_factorizations(S, B, k, p);
    std::vector<Term> factors;
    factors.reserve(k + 2);
    for (unsigned s : fact.s) {
      factors.push_back(alpha.assignments.at(s));
    }
    std::vector<Term> e_block;
    e_block.reserve(k);
    for (unsigned e : fact.e) {
      e_block.push_back(alpha.assignments.at(e));
    }
    factors.push_back(make_power(make_concat_all(e_block), mu));
    factors.push_back(alpha.assignments.at(fact.t));
    out.assignments.emplace(p, make_concat_all(factors));
  }
  check_phi(out);
  return out;
}

WitnessMap const& WitnessSynthesizer::witness_for_member(std::uint32_t id) {
  auto found = memo_.find(id);
  if (found != memo_.end()) {
    return found->second;
  }
  DerivationStep const& step = result_.steps[id];
  Subset subset = result_.members[id];
  WitnessMap w;
  w.subset = subset;
  switch (step.kind) {
    case DerivationStep::Kind::singleton: {
      std::vector<unsigned> const& word = pres_.word_for(step.element);
      std::vector<Term> letters;
      letters.reserve(word.size());
      for (unsigned a : word) {
        letters.push_back(make_letter(pres_.alphabet()[a]));
      }
      w.assignments.emplace(step.element, make_concat_all(letters));
      break;
    }
    case DerivationStep::Kind::subset_of: {
      w = restrict_to(witness_for_member(step.parent), subset);
      break;
    }
    case DerivationStep::Kind::product: {
      WitnessMap const& left = witness_for_member(step.left);
      WitnessMap const& right = witness_for_member(step.right);
      FiniteSemigroup const& S = pres_.semigroup();
      for (unsigned r : subset_elements(subset)) {
        bool done = false;
        for (unsigned l : subset_elements(left.subset)) {
          for (unsigned q : subset_elements(right.subset)) {
            if (S.product(l, q) == r) {
              w.assignments.emplace(
                  r, make_concat(left.assignments.at(l), right.assignments.at(q)));
              done = true;
              break;
            }
          }
          if (done) {
            break;
          }
        }
        if (!done) {
          throw Error("internal: product member misses a factorization");
        }
      }
      break;
    }
    case DerivationStep::Kind::omega_star: {
      WitnessMap const& base = witness_for_member(step.base);
      WitnessMap beta = beta_transform(base, step.k);
      FiniteSemigroup const& S = pres_.semigroup();
      Subset B = base.subset;
      std::vector<Subset> pow(step.k + 1, 0);
      pow[1] = B;
      for (unsigned d = 2; d <= step.k; ++d) {
        pow[d] = subset_product(S, pow[d - 1], B);
      }
      for (unsigned q : subset_elements(subset)) {
        unsigned n = 0;
        for (unsigned d = 1; d <= step.k; ++d) {
          if (subset_contains(pow[d], q)) {
            n = d;
            break;
          }
        }
        if (n == 0) {
          throw Error("internal: omega-star member misses a power");
        }
        std::vector<unsigned> factors = minimal_factorization(B, n, q);
        std::vector<Term> terms;
        terms.reserve(n);
        for (unsigned b : factors) {
          terms.push_back(beta.assignments.at(b));
        }
        w.assignments.emplace(q, make_concat_all(terms));
      }
      w.idempotent_projection = true;
      break;
    }
  }
  check_phi(w);
  auto [it, fresh] = memo_.emplace(id, std::move(w));
  (void)fresh;
  return it->second;
}

WitnessMap WitnessSynthesizer::synthesize(Subset target) {
  if (target == 0) {
    throw NotInFamily("the empty subset is not pointlike");
  }
  if (auto id = result_.find(target)) {
    return witness_for_member(*id);
  }
  if (!is_pointlike(result_, target)) {
    throw NotInFamily("subset " + subset_string(target)
                      + " is not in the saturation family");
  }
  // not recorded explicitly: restrict the first discovered container
  for (std::uint32_t id = 0; id < result_.members.size(); ++id) {
    if ((target & ~result_.members[id]) == 0) {
      return restrict_to(witness_for_member(id), target);
    }
  }
  throw NotInFamily("subset " + subset_string(target)
                    + " has no recorded container");
}

WitnessMap WitnessSynthesizer::synthesize_idempotent(Subset target) {
  if (target == 0) {
    throw NotInFamily("the empty subset is not idempotent pointlike");
  }
  FiniteSemigroup const& S = pres_.semigroup();
  // smallest (by mask) idempotent member containing the target
  std::optional<Subset> found;
  if (result_.family_complete) {
    std::vector<Subset> sorted = result_.members;
    std::sort(sorted.begin(), sorted.end());
    for (Subset E : sorted) {
      if ((target & ~E) == 0 && subset_product(S, E, E) == E) {
        found = E;
        break;
      }
    }
  } else {
    for (Subset M : result_.maximal) {
      if ((target & ~M) != 0) {
        continue;
      }
      // scan supersets of target inside M in increasing mask order
      Subset free = M & ~target;
      std::vector<Subset> candidates;
      for (Subset x = free;; x = (x - 1) & free) {
        candidates.push_back(target | x);
        if (x == 0) {
          break;
        }
      }
      std::sort(candidates.begin(), candidates.end());
      for (Subset E : candidates) {
        if (subset_product(S, E, E) == E) {
          found = E;
          break;
        }
      }
      if (found) {
        break;
      }
    }
  }
  if (!found) {
    throw NotInFamily("subset " + subset_string(target)
                      + " is not contained in an idempotent member");
  }
  WitnessMap alpha = synthesize(*found);
  WitnessMap beta = beta_transform(alpha, 1);
  return restrict_to(beta, target);
}

WitnessMap synthesize(Presentation const& P, PrimeSet const& pi,
                      SaturationResult const& result, Subset target) {
  WitnessSynthesizer synth(P, pi, result);
  return synth.synthesize(target);
}

WitnessMap synthesize_idempotent(Presentation const& P, PrimeSet const& pi,
                                 SaturationResult const& result, Subset target) {
  WitnessSynthesizer synth(P, pi, result);
  return synth.synthesize_idempotent(target);
}

WitnessReport verify_witness(Presentation const& P, PrimeSet const& pi,
                             WitnessMap const& w, Corpus const& corpus) {
  WitnessReport report;
  for (auto const& [x, term] : w.assignments) {
    unsigned image = eval_term(P, term, pi);
    if (image != x) {
      report.phi_ok = false;
      report.phi_failures.push_back("element " + std::to_string(x)
                                    + " maps to " + std::to_string(image));
    }
  }
  std::vector<Term> terms;
  terms.reserve(w.assignments.size());
  for (auto const& [x, term] : w.assignments) {
    terms.push_back(term);
  }
  report.projection_counterexample = corpus_distinguish(terms, corpus, pi);
  if (w.idempotent_projection && !report.projection_counterexample) {
    std::vector<Term> doubled = terms;
    for (auto const& t : terms) {
      doubled.push_back(make_concat(t, t));
    }
    report.idempotent_counterexample = corpus_distinguish(doubled, corpus, pi);
  }
  return report;
}

}  // namespace pointlike
