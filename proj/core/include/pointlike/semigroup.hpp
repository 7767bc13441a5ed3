#ifndef POINTLIKE_SEMIGROUP_HPP_
#define POINTLIKE_SEMIGROUP_HPP_

#include <cstdint>
#include <vector>

#include "pointlike/exponent.hpp"
#include "pointlike/pi_set.hpp"

namespace pointlike {

/// Index and period of an element x of a finite semigroup: the minimal
/// (i, m) with x^i = x^{i+m}, together with the unique idempotent of the
/// cyclic subsemigroup generated by x.
struct ElementPowerData {
  unsigned index;             // i >= 1
  unsigned period;            // m >= 1
  unsigned idempotent_power;  // x^n for the multiple n of m in [i, i+m)
};

/// A finite semigroup given by its Cayley table.  Elements are the indices
/// 0 .. order-1.  Immutable after construction; construction validates
/// associativity on all triples and throws AssociativityViolation with a
/// witness otherwise.
class FiniteSemigroup {
 public:
  static FiniteSemigroup from_cayley(unsigned order,
                                     std::vector<std::vector<unsigned>> const& table);

  unsigned order() const { return order_; }

  unsigned product(unsigned x, unsigned y) const {
    return table_[static_cast<std::size_t>(x) * order_ + y];
  }

  /// Product of a nonempty sequence of elements, left to right.
  unsigned product_word(std::vector<unsigned> const& elements) const;

  /// x^n for n >= 1, by repeated squaring.
  unsigned power_finite(unsigned x, std::uint64_t n) const;

  bool is_idempotent(unsigned x) const { return product(x, x) == x; }

  ElementPowerData index_period(unsigned x) const;

  bool operator==(FiniteSemigroup const&) const = default;

 private:
  FiniteSemigroup(unsigned order, std::vector<unsigned> table)
      : order_(order), table_(std::move(table)) {}

  unsigned order_;
  std::vector<unsigned> table_;  // row-major, table_[x*order_+y] = x*y
};

/// Image of x under a profinite exponent: a finite exponent is an iterated
/// product, and an infinite one evaluates as x^omega * x^r with
/// r = exponent_mod(e, pi, period(x)).  Throws InvalidExponent for mu(k)
/// with k not a pi'-number.
unsigned power(FiniteSemigroup const& S, unsigned x, ProfiniteExponent const& e,
               PrimeSet const& pi);

}  // namespace pointlike

#endif  // POINTLIKE_SEMIGROUP_HPP_
