#include "pointlike/pi_set.hpp"

#include <algorithm>
#include <sstream>

#include "pointlike/errors.hpp"

namespace pointlike {

bool is_prime(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

PrimeSet::PrimeSet(std::vector<unsigned> primes, bool complement)
    : primes_(std::move(primes)), complement_(complement) {
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
  for (unsigned p : primes_) {
    if (!is_prime(p)) {
      throw Error("PrimeSet entry " + std::to_string(p) + " is not prime");
    }
  }
}

PrimeSet PrimeSet::empty() { return PrimeSet({}, false); }

PrimeSet PrimeSet::all() { return PrimeSet({}, true); }

PrimeSet PrimeSet::of(std::vector<unsigned> primes) {
  return PrimeSet(std::move(primes), false);
}

PrimeSet PrimeSet::complement_of(std::vector<unsigned> primes) {
  return PrimeSet(std::move(primes), true);
}

bool PrimeSet::contains(unsigned p) const {
  bool listed = std::binary_search(primes_.begin(), primes_.end(), p);
  return complement_ ? !listed : listed;
}

bool PrimeSet::is_pi_number(std::uint64_t k) const {
  for (std::uint64_t d = 2; d * d <= k; ++d) {
    if (k % d == 0) {
      if (!contains(static_cast<unsigned>(d))) {
        return false;
      }
      while (k % d == 0) {
        k /= d;
      }
    }
  }
  if (k > 1 && !contains(static_cast<unsigned>(k))) {
    return false;
  }
  return true;
}

bool PrimeSet::is_pi_prime_number(std::uint64_t k) const {
  for (std::uint64_t d = 2; d * d <= k; ++d) {
    if (k % d == 0) {
      if (contains(static_cast<unsigned>(d))) {
        return false;
      }
      while (k % d == 0) {
        k /= d;
      }
    }
  }
  if (k > 1 && contains(static_cast<unsigned>(k))) {
    return false;
  }
  return true;
}

std::uint64_t PrimeSet::pi_part(std::uint64_t m) const {
  std::uint64_t part = 1;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      std::uint64_t power = 1;
      while (m % d == 0) {
        m /= d;
        power *= d;
      }
      if (contains(static_cast<unsigned>(d))) {
        part *= power;
      }
    }
  }
  if (m > 1 && contains(static_cast<unsigned>(m))) {
    part *= m;
  }
  return part;
}

std::uint64_t PrimeSet::pi_prime_part(std::uint64_t m) const {
  return m / pi_part(m);
}

bool PrimeSet::subset_of(PrimeSet const& other) const {
  if (!complement_ && !other.complement_) {
    return std::includes(other.primes_.begin(), other.primes_.end(),
                         primes_.begin(), primes_.end());
  }
  if (!complement_ && other.complement_) {
    // finite subset of a complement: no listed prime may be excluded
    return std::none_of(primes_.begin(), primes_.end(),
                        [&](unsigned p) { return !other.contains(p); });
  }
  if (complement_ && !other.complement_) {
    return false;  // a cofinite set is never inside a finite one
  }
  // complement(A) subset of complement(B) iff B subset of A
  return std::includes(primes_.begin(), primes_.end(), other.primes_.begin(),
                       other.primes_.end());
}

std::string PrimeSet::to_string() const {
  if (primes_.empty()) {
    return complement_ ? "all" : "empty";
  }
  std::ostringstream out;
  if (complement_) {
    out << "all-except-";
  }
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i > 0) {
      out << ',';
    }
    out << primes_[i];
  }
  return out.str();
}

namespace {

std::vector<unsigned> parse_prime_list(std::string const& text) {
  std::vector<unsigned> primes;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) {
      throw Error("empty entry in prime list '" + text + "'");
    }
    primes.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  if (primes.empty()) {
    throw Error("empty prime list");
  }
  return primes;
}

}  // namespace

PrimeSet PrimeSet::parse(std::string const& text) {
  if (text == "empty") {
    return PrimeSet::empty();
  }
  if (text == "all") {
    return PrimeSet::all();
  }
  constexpr char const* kPrefix = "all-except-";
  if (text.rfind(kPrefix, 0) == 0) {
    return PrimeSet::complement_of(parse_prime_list(text.substr(11)));
  }
  return PrimeSet::of(parse_prime_list(text));
}

}  // namespace pointlike
