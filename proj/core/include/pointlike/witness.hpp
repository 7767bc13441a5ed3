#ifndef POINTLIKE_WITNESS_HPP_
#define POINTLIKE_WITNESS_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pointlike/corpus.hpp"
#include "pointlike/saturation.hpp"
#include "pointlike/term.hpp"

namespace pointlike {

/// For a pointlike subset P, a map P -> terms with exact phi-images and a
/// common (corpus-indistinguishable) projection.  idempotent_projection is
/// set when the map went through the beta transform, which turns the common
/// projection into an idempotent.
struct WitnessMap {
  Subset subset = 0;
  std::map<unsigned, Term> assignments;
  bool idempotent_projection = false;
};

/// Factors of p = (s_1...s_k) * (e_1...e_k)^mu * t over a subset B with
/// cyclic pi'-group order k: s and e multiply into the group identity subset
/// B^k, e is an idempotent of the semigroup, everything comes from B.
struct SetFactorization {
  std::vector<unsigned> s;  // k factors in B
  std::vector<unsigned> e;  // k factors in B, product idempotent
  unsigned t;               // in B
};

/// Deterministic search for the factorization: s, then e, then t are scanned
/// in element order; the k-factor splittings are lexicographically minimal.
/// Existence is guaranteed for members of the saturation family; exhaustion
/// raises FactorizationNotFound to surface implementation bugs.
SetFactorization set_factorizations(FiniteSemigroup const& S, Subset B, unsigned k,
                                    unsigned p);

/// Replays the derivation DAG of a saturation to synthesize witnesses.
/// Results are memoized per member, so repeated targets share structure and
/// synthesis is deterministic.
class WitnessSynthesizer {
 public:
  WitnessSynthesizer(Presentation const& P, PrimeSet pi, SaturationResult const& result);

  /// Witness for a member of the family; NotInFamily otherwise.
  WitnessMap synthesize(Subset target);

  /// Witness for a subset of an idempotent member, built with the k = 1
  /// beta transform so the common projection is idempotent.
  WitnessMap synthesize_idempotent(Subset target);

  /// Rewrites each assignment of alpha into the s-block (e-block)^mu(k)
  /// t-block shape; phi-images are preserved and the projection becomes
  /// idempotent.
  WitnessMap beta_transform(WitnessMap const& alpha, unsigned k);

 private:
  WitnessMap const& witness_for_member(std::uint32_t id);
  WitnessMap restrict_to(WitnessMap const& w, Subset target) const;
  void check_phi(WitnessMap const& w) const;
  std::vector<unsigned> minimal_factorization(Subset B, unsigned count,
                                              unsigned target) const;

  Presentation const& pres_;
  PrimeSet pi_;
  SaturationResult const& result_;
  std::map<std::uint32_t, WitnessMap> memo_;
};

/// One-shot helpers.
WitnessMap synthesize(Presentation const& P, PrimeSet const& pi,
                      SaturationResult const& result, Subset target);
WitnessMap synthesize_idempotent(Presentation const& P, PrimeSet const& pi,
                                 SaturationResult const& result, Subset target);

struct WitnessReport {
  bool phi_ok = true;
  std::vector<std::string> phi_failures;
  std::optional<Counterexample> projection_counterexample;
  std::optional<Counterexample> idempotent_counterexample;
  bool passed() const {
    return phi_ok && !projection_counterexample && !idempotent_counterexample;
  }
};

/// Exact phi check, pairwise corpus check over the assignments, and the
/// squared-term corpus check when the witness is flagged idempotent.
WitnessReport verify_witness(Presentation const& P, PrimeSet const& pi,
                             WitnessMap const& w, Corpus const& corpus);

}  // namespace pointlike

#endif  // POINTLIKE_WITNESS_HPP_
