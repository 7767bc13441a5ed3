#include "pointlike/saturation.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <unordered_set>

#include "pointlike/errors.hpp"

namespace pointlike {

Subset singleton_subset(unsigned x) { return Subset{1} << x; }

bool subset_contains(Subset P, unsigned x) { return (P >> x) & 1; }

std::vector<unsigned> subset_elements(Subset P) {
  std::vector<unsigned> out;
  while (P) {
    out.push_back(static_cast<unsigned>(std::countr_zero(P)));
    P &= P - 1;
  }
  return out;
}

Subset subset_product(FiniteSemigroup const& S, Subset P, Subset Q) {
  Subset result = 0;
  for (Subset p = P; p; p &= p - 1) {
    unsigned x = static_cast<unsigned>(std::countr_zero(p));
    for (Subset q = Q; q; q &= q - 1) {
      unsigned y = static_cast<unsigned>(std::countr_zero(q));
      result |= singleton_subset(S.product(x, y));
    }
  }
  return result;
}

std::optional<unsigned> cyclic_group_order(FiniteSemigroup const& S, Subset P,
                                           PrimeSet const& pi) {
  if (P == 0) {
    return std::nullopt;
  }
  // walk P, P^2, ... until any repeat; P recurs iff it lies on its own cycle
  std::map<Subset, unsigned> seen;  // subset -> 1-based position
  Subset cur = P;
  unsigned step = 1;
  while (true) {
    auto [it, fresh] = seen.emplace(cur, step);
    if (!fresh) {
      if (cur != P) {
        return std::nullopt;
      }
      unsigned k = step - it->second;
      return pi.is_pi_prime_number(k) ? std::optional<unsigned>(k) : std::nullopt;
    }
    cur = subset_product(S, cur, P);
    ++step;
  }
}

Subset omega_star(FiniteSemigroup const& S, Subset P, unsigned k) {
  auto check = cyclic_group_order(S, P, PrimeSet::empty());
  // the pi'-condition is the caller's concern; here only the group structure
  if (!check || *check != k) {
    throw NotCyclicGroup("omega_star: subset does not generate a cyclic group of order "
                         + std::to_string(k));
  }
  Subset acc = 0;
  Subset cur = P;
  for (unsigned i = 0; i < k; ++i) {
    acc |= cur;
    cur = subset_product(S, cur, P);
  }
  return acc;
}

std::optional<std::uint32_t> SaturationResult::find(Subset P) const {
  auto it = index.find(P);
  if (it == index.end()) {
    return std::nullopt;
  }
  return it->second;
}

namespace {

constexpr unsigned kDenseLimit = 16;
constexpr unsigned kSubsetLimit = 64;

class Builder {
 public:
  Builder(FiniteSemigroup const& S, PrimeSet const& pi) : S_(S), pi_(pi) {
    result_.order = S.order();
    result_.pi = pi;
  }

  // Records P with its first derivation; enqueues it when freshly seen.
  std::uint32_t add(Subset P, DerivationStep step, bool enqueue = true) {
    auto it = result_.index.find(P);
    if (it != result_.index.end()) {
      return it->second;
    }
    auto id = static_cast<std::uint32_t>(result_.members.size());
    result_.members.push_back(P);
    result_.steps.push_back(step);
    result_.index.emplace(P, id);
    if (enqueue) {
      queue_.push_back(id);
    }
    return id;
  }

  SaturationResult dense() {
    result_.engine_used = SaturationEngine::dense;
    result_.family_complete = true;
    seed_singletons();
    while (!queue_.empty()) {
      std::uint32_t id = queue_.front();
      queue_.pop_front();
      Subset P = result_.members[id];
      // 1. downward closure, in increasing mask order
      std::vector<Subset> subs;
      for (Subset q = (P - 1) & P; q; q = (q - 1) & P) {
        subs.push_back(q);
      }
      std::sort(subs.begin(), subs.end());
      for (Subset q : subs) {
        DerivationStep step;
        step.kind = DerivationStep::Kind::subset_of;
        step.parent = id;
        add(q, step);
      }
      // 2. products against everything discovered so far, both sides
      for (std::uint32_t r = 0; r < result_.members.size(); ++r) {
        Subset R = result_.members[r];
        DerivationStep step;
        step.kind = DerivationStep::Kind::product;
        step.left = id;
        step.right = r;
        add(subset_product(S_, P, R), step);
        step.left = r;
        step.right = id;
        add(subset_product(S_, R, P), step);
      }
      // 3. omega-star on cyclic pi'-group generators
      if (auto k = cyclic_group_order(S_, P, pi_)) {
        Subset star = omega_star(S_, P, *k);
        DerivationStep step;
        step.kind = DerivationStep::Kind::omega_star;
        step.base = id;
        step.k = *k;
        add(star, step);
      }
    }
    compute_maximal();
    return std::move(result_);
  }

  SaturationResult representative() {
    result_.engine_used = SaturationEngine::representative;
    result_.family_complete = false;
    seed_singletons();
    for (std::uint32_t id = 0; id < result_.members.size(); ++id) {
      antichain_insert(result_.members[id]);
    }
    while (!queue_.empty()) {
      std::uint32_t id = queue_.front();
      queue_.pop_front();
      Subset P = result_.members[id];
      if (strictly_dominated(P)) {
        continue;  // a superset arrived meanwhile and will cover this work
      }
      std::vector<Subset> partners(antichain_.begin(), antichain_.end());
      std::sort(partners.begin(), partners.end());
      for (Subset R : partners) {
        std::uint32_t r = result_.index.at(R);
        maybe_add_product(id, r);
        maybe_add_product(r, id);
      }
      // the omega-star rule must see non-maximal members: enumerate the
      // sub-subsets of P explicitly, in increasing mask order
      std::vector<Subset> subs;
      for (Subset q = P;; q = (q - 1) & P) {
        if (q != 0) {
          subs.push_back(q);
        }
        if (q == 0) {
          break;
        }
      }
      std::sort(subs.begin(), subs.end());
      for (Subset q : subs) {
        if (!omega_checked_.insert(q).second) {
          continue;
        }
        auto k = cyclic_group_order(S_, q, pi_);
        if (!k) {
          continue;
        }
        Subset star = omega_star(S_, q, *k);
        if (dominated(star)) {
          continue;
        }
        std::uint32_t base_id;
        if (auto existing = result_.find(q)) {
          base_id = *existing;
        } else {
          DerivationStep sub;
          sub.kind = DerivationStep::Kind::subset_of;
          sub.parent = id;
          base_id = add(q, sub, /*enqueue=*/false);
        }
        if (!result_.find(star)) {
          DerivationStep step;
          step.kind = DerivationStep::Kind::omega_star;
          step.base = base_id;
          step.k = *k;
          add(star, step);
          antichain_insert(star);
        }
      }
    }
    compute_maximal();
    return std::move(result_);
  }

 private:
  void seed_singletons() {
    for (unsigned x = 0; x < S_.order(); ++x) {
      DerivationStep step;
      step.kind = DerivationStep::Kind::singleton;
      step.element = x;
      add(singleton_subset(x), step);
    }
  }

  void maybe_add_product(std::uint32_t left, std::uint32_t right) {
    Subset prod = subset_product(S_, result_.members[left], result_.members[right]);
    if (dominated(prod)) {
      return;
    }
    if (!result_.find(prod)) {
      DerivationStep step;
      step.kind = DerivationStep::Kind::product;
      step.left = left;
      step.right = right;
      add(prod, step);
      antichain_insert(prod);
    }
  }

  bool dominated(Subset P) const {
    return std::any_of(antichain_.begin(), antichain_.end(),
                       [&](Subset M) { return (P & ~M) == 0; });
  }

  bool strictly_dominated(Subset P) const {
    return std::any_of(antichain_.begin(), antichain_.end(),
                       [&](Subset M) { return M != P && (P & ~M) == 0; });
  }

  void antichain_insert(Subset P) {
    if (dominated(P)) {
      return;
    }
    std::erase_if(antichain_, [&](Subset M) { return (M & ~P) == 0; });
    antichain_.push_back(P);
  }

  void compute_maximal() {
    std::vector<Subset> const& members = result_.members;
    for (Subset P : members) {
      bool is_max = std::none_of(members.begin(), members.end(), [&](Subset Q) {
        return Q != P && (P & ~Q) == 0;
      });
      if (is_max) {
        result_.maximal.push_back(P);
      }
    }
    std::sort(result_.maximal.begin(), result_.maximal.end());
    result_.maximal.erase(
        std::unique(result_.maximal.begin(), result_.maximal.end()),
        result_.maximal.end());
  }

  FiniteSemigroup const& S_;
  PrimeSet pi_;
  SaturationResult result_;
  std::deque<std::uint32_t> queue_;
  std::vector<Subset> antichain_;
  std::unordered_set<Subset> omega_checked_;
};

}  // namespace

SaturationResult saturate(FiniteSemigroup const& S, PrimeSet const& pi,
                          SaturationEngine engine) {
  if (S.order() > kSubsetLimit) {
    throw Error("saturate: semigroups of order > 64 are not supported");
  }
  if (engine == SaturationEngine::automatic) {
    engine = S.order() <= kDenseLimit ? SaturationEngine::dense
                                      : SaturationEngine::representative;
  }
  if (engine == SaturationEngine::dense && S.order() > kDenseLimit) {
    throw Error("saturate: the dense engine handles order <= 16 only");
  }
  Builder builder(S, pi);
  return engine == SaturationEngine::dense ? builder.dense()
                                           : builder.representative();
}

bool is_pointlike(SaturationResult const& result, Subset P) {
  if (P == 0) {
    return false;
  }
  if (result.family_complete) {
    return result.index.contains(P);
  }
  return std::any_of(result.maximal.begin(), result.maximal.end(),
                     [&](Subset M) { return (P & ~M) == 0; });
}

IdempotentPointlikes idempotent_pointlikes(FiniteSemigroup const& S,
                                           SaturationResult const& result) {
  IdempotentPointlikes out;
  std::vector<Subset> idem;
  if (result.family_complete) {
    for (Subset P : result.members) {
      if (subset_product(S, P, P) == P) {
        idem.push_back(P);
      }
    }
    out.complete = true;
    std::unordered_set<Subset> closure;
    for (Subset E : idem) {
      for (Subset q = E;; q = (q - 1) & E) {
        if (q != 0) {
          closure.insert(q);
        }
        if (q == 0) {
          break;
        }
      }
    }
    out.members.assign(closure.begin(), closure.end());
    std::sort(out.members.begin(), out.members.end());
  } else {
    // enumerate sub-subsets of the maximal members for idempotent ones
    std::unordered_set<Subset> checked;
    for (Subset M : result.maximal) {
      for (Subset q = M;; q = (q - 1) & M) {
        if (q != 0 && checked.insert(q).second
            && subset_product(S, q, q) == q) {
          idem.push_back(q);
        }
        if (q == 0) {
          break;
        }
      }
    }
    out.complete = false;
  }
  for (Subset E : idem) {
    bool is_max = std::none_of(idem.begin(), idem.end(), [&](Subset F) {
      return F != E && (E & ~F) == 0;
    });
    if (is_max) {
      out.maximal.push_back(E);
    }
  }
  std::sort(out.maximal.begin(), out.maximal.end());
  return out;
}

}  // namespace pointlike
