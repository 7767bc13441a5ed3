#ifndef POINTLIKE_DA_REDUCTION_HPP_
#define POINTLIKE_DA_REDUCTION_HPP_

#include <optional>
#include <vector>

#include "pointlike/corpus.hpp"
#include "pointlike/term.hpp"

namespace pointlike {

struct ReduceOptions {
  std::size_t tower_cap = 64;      // layers before Undetermined
  unsigned corpus_max_order = 3;   // DA falsification corpus size
};

/// Rewrites a tuple of omega-terms with equal contents, assumed to agree
/// over DA (checked by corpus falsification only), into plain omega-terms
/// with the same images under the presentation and the same projections.
/// The presentation is content-augmented internally.  Throws
/// PreconditionFalsified when the corpus (or the structure of the inputs)
/// disproves the premise, and TowerUndetermined when a factorization tower
/// cannot be classified within the cap.
std::vector<Term> reduce_tuple(Presentation const& P, std::vector<Term> const& terms,
                               ReduceOptions const& options = {});

/// The idempotent variant: additionally assumes the common projection is
/// idempotent (the squared last term joins the corpus check), and requires
/// the towers to be infinite; a finite tower contradicts the hypothesis and
/// raises NotIdempotentLike.
std::vector<Term> reduce_idempotent_tuple(Presentation const& P,
                                          std::vector<Term> const& terms,
                                          ReduceOptions const& options = {});

struct ReduceReport {
  std::vector<Term> outputs;
  bool phi_preserved = false;
  bool outputs_pure_omega = false;
  std::optional<Counterexample> corpus_counterexample;
  std::optional<Counterexample> squared_counterexample;  // idempotent variant
  bool passed() const {
    return phi_preserved && outputs_pure_omega && !corpus_counterexample
           && !squared_counterexample;
  }
};

/// Runs the reduction and verifies the outputs: exact phi-images over the
/// original presentation, omega-only exponents, and corpus
/// indistinguishability (plus the squared check for the idempotent variant).
ReduceReport reduce_and_verify(Presentation const& P, std::vector<Term> const& terms,
                               bool idempotent, ReduceOptions const& options = {});

/// True when every exponent in the term is omega.
bool pure_omega_term(Term const& t);

}  // namespace pointlike

#endif  // POINTLIKE_DA_REDUCTION_HPP_
