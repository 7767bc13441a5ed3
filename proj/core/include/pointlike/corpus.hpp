#ifndef POINTLIKE_CORPUS_HPP_
#define POINTLIKE_CORPUS_HPP_

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pointlike/term.hpp"
#include "pointlike/variety.hpp"

namespace pointlike {

/// A family of presentations whose semigroups lie in a target pseudovariety.
/// Used as a sound falsifier for projection equality: a counterexample
/// disproves equality over the variety, absence of one proves nothing.
struct Corpus {
  Variety variety;
  std::vector<Presentation> members;
  std::vector<std::string> labels;  // provenance, parallel to members
};

/// All associative multiplication tables on order elements, up to
/// isomorphism, in a deterministic order.  Exhaustive search is intended for
/// order <= 4 (results for small orders are cached).
std::vector<FiniteSemigroup> all_semigroups_upto_iso(unsigned order);

/// A random associative table found by a value-shuffled backtracking fill.
FiniteSemigroup random_semigroup(unsigned order, std::mt19937& rng);

/// Canonical key of the table under relabeling; equal keys <=> isomorphic.
std::vector<unsigned> canonical_table_key(FiniteSemigroup const& S);
bool is_isomorphic(FiniteSemigroup const& A, FiniteSemigroup const& B);

// Curated small semigroups.
FiniteSemigroup make_cyclic(unsigned n);
FiniteSemigroup make_brandt_b2();
FiniteSemigroup make_b2_with_identity();
/// Free semilattice on k letters: nonempty subsets under union.
FiniteSemigroup make_semilattice(unsigned k);
/// Z/2 x left-zero(k); its saturation has small maximal members, which makes
/// it a convenient instance above the dense-engine cutoff.
FiniteSemigroup make_z2_left_zero(unsigned k);

/// Exhaustive members of order <= max_order (max_order <= 4) passing the
/// membership test, plus the curated family (cyclic groups up to 6, B_2,
/// B_2 with identity, free semilattices) filtered the same way.
Corpus generate_corpus(Variety const& variety, unsigned max_order);

struct Counterexample {
  std::size_t member;      // index into corpus.members
  std::string label;
  LetterAssignment assignment;
  std::size_t i, j;        // indices of the distinguished terms
  unsigned value_i, value_j;
  std::string to_string() const;
};

/// Evaluates the terms in every member under every interpretation of their
/// letters and reports the first pair with different values, in canonical
/// enumeration order (member, interpretation, pair); nullopt otherwise.
std::optional<Counterexample> corpus_distinguish(std::vector<Term> const& terms,
                                                 Corpus const& corpus,
                                                 PrimeSet const& pi);

}  // namespace pointlike

#endif  // POINTLIKE_CORPUS_HPP_
