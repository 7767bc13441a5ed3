#ifndef POINTLIKE_SATURATION_HPP_
#define POINTLIKE_SATURATION_HPP_

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "pointlike/pi_set.hpp"
#include "pointlike/semigroup.hpp"

namespace pointlike {

/// A nonempty subset of a semigroup with order <= 64, as a bitmask.
using Subset = std::uint64_t;

Subset singleton_subset(unsigned x);
bool subset_contains(Subset P, unsigned x);
std::vector<unsigned> subset_elements(Subset P);

/// {p*q : p in P, q in Q}.
Subset subset_product(FiniteSemigroup const& S, Subset P, Subset Q);

/// If P lies on the cycle of its own power trajectory (P^{k+1} = P for a
/// minimal k >= 1) and k is a pi'-number, returns k; otherwise nullopt.
/// k = 1 means P is idempotent.
std::optional<unsigned> cyclic_group_order(FiniteSemigroup const& S, Subset P,
                                           PrimeSet const& pi);

/// The union P u P^2 u ... u P^k; requires cyclic_group_order(S, P) = k,
/// throws NotCyclicGroup otherwise.
Subset omega_star(FiniteSemigroup const& S, Subset P, unsigned k);

/// One closure step per discovered subset, referencing earlier discoveries.
struct DerivationStep {
  enum class Kind { singleton, subset_of, product, omega_star };
  Kind kind;
  unsigned element = 0;     // singleton
  std::uint32_t parent = 0; // subset_of
  std::uint32_t left = 0, right = 0;  // product
  std::uint32_t base = 0;   // omega_star
  unsigned k = 0;           // omega_star: cyclic pi'-group order of the base
};

enum class SaturationEngine { automatic, dense, representative };

/// The closure family: smallest downward-closed subsemigroup of the power
/// semigroup containing the singletons and closed under omega_star on
/// members that generate cyclic pi'-groups.
struct SaturationResult {
  unsigned order = 0;
  PrimeSet pi = PrimeSet::empty();
  SaturationEngine engine_used = SaturationEngine::dense;
  /// Discovered subsets in discovery order.  With the dense engine this is
  /// the whole family; the representative engine records singletons,
  /// non-dominated products/omega-stars and omega-star bases only.
  std::vector<Subset> members;
  std::vector<DerivationStep> steps;  // parallel to members
  std::unordered_map<Subset, std::uint32_t> index;
  std::vector<Subset> maximal;  // inclusion-maximal members, ascending masks
  bool family_complete = false; // members lists the family exhaustively

  std::optional<std::uint32_t> find(Subset P) const;
};

/// Least fixed point via a FIFO worklist.  Subsets generated by one step are
/// enqueued in increasing mask order; product partners are scanned in
/// discovery order; the first derivation of each subset wins.  The dense
/// engine (order <= 16) materializes the family; the representative engine
/// (order <= 64) tracks the maximal antichain and enumerates sub-subsets
/// explicitly for the omega-star rule.
SaturationResult saturate(FiniteSemigroup const& S, PrimeSet const& pi,
                          SaturationEngine engine = SaturationEngine::automatic);

/// Membership of P in the family (downward closure of the maximal members).
bool is_pointlike(SaturationResult const& result, Subset P);

struct IdempotentPointlikes {
  std::vector<Subset> members;   // full listing when complete
  std::vector<Subset> maximal;   // maximal idempotent members
  bool complete = false;
};

/// Downward closure of the idempotent members of the family.
IdempotentPointlikes idempotent_pointlikes(FiniteSemigroup const& S,
                                           SaturationResult const& result);

}  // namespace pointlike

#endif  // POINTLIKE_SATURATION_HPP_
