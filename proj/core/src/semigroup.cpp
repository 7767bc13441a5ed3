#include "pointlike/semigroup.hpp"

#include "pointlike/errors.hpp"

namespace pointlike {

FiniteSemigroup FiniteSemigroup::from_cayley(
    unsigned order, std::vector<std::vector<unsigned>> const& table) {
  if (order == 0) {
    throw Error("semigroup order must be positive");
  }
  if (table.size() != order) {
    throw Error("multiplication table has " + std::to_string(table.size())
                + " rows, expected " + std::to_string(order));
  }
  std::vector<unsigned> flat;
  flat.reserve(static_cast<std::size_t>(order) * order);
  for (auto const& row : table) {
    if (row.size() != order) {
      throw Error("multiplication table is not square");
    }
    for (unsigned v : row) {
      if (v >= order) {
        throw Error("table entry " + std::to_string(v) + " out of range");
      }
      flat.push_back(v);
    }
  }
  FiniteSemigroup S(order, std::move(flat));
  for (unsigned x = 0; x < order; ++x) {
    for (unsigned y = 0; y < order; ++y) {
      unsigned xy = S.product(x, y);
      for (unsigned z = 0; z < order; ++z) {
        if (S.product(xy, z) != S.product(x, S.product(y, z))) {
          throw AssociativityViolation(x, y, z);
        }
      }
    }
  }
  return S;
}

unsigned FiniteSemigroup::product_word(std::vector<unsigned> const& elements) const {
  if (elements.empty()) {
    throw Error("product of the empty word is undefined");
  }
  unsigned acc = elements[0];
  for (std::size_t i = 1; i < elements.size(); ++i) {
    acc = product(acc, elements[i]);
  }
  return acc;
}

unsigned FiniteSemigroup::power_finite(unsigned x, std::uint64_t n) const {
  if (n == 0) {
    throw Error("power_finite: exponent must be >= 1");
  }
  unsigned acc = x;
  --n;
  unsigned base = x;
  while (n > 0) {
    if (n & 1) {
      acc = product(acc, base);
    }
    base = product(base, base);
    n >>= 1;
  }
  return acc;
}

ElementPowerData FiniteSemigroup::index_period(unsigned x) const {
  // walk x, x^2, ... until the first revisited element
  std::vector<unsigned> first_seen(order_, 0);  // 0 = unseen, else 1-based step
  unsigned cur = x;
  unsigned step = 1;
  while (first_seen[cur] == 0) {
    first_seen[cur] = step;
    cur = product(cur, x);
    ++step;
  }
  unsigned index = first_seen[cur];
  unsigned period = step - index;
  unsigned n = ((index + period - 1) / period) * period;
  return ElementPowerData{index, period, power_finite(x, n)};
}

unsigned power(FiniteSemigroup const& S, unsigned x, ProfiniteExponent const& e,
               PrimeSet const& pi) {
  if (e.is_finite()) {
    return S.power_finite(x, e.value());
  }
  ElementPowerData ip = S.index_period(x);
  std::uint64_t r = exponent_mod(e, pi, ip.period);
  unsigned result = ip.idempotent_power;
  if (r > 0) {
    result = S.product(result, S.power_finite(x, r));
  }
  return result;
}

}  // namespace pointlike
