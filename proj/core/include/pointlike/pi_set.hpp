#ifndef POINTLIKE_PI_SET_HPP_
#define POINTLIKE_PI_SET_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace pointlike {

/// A set of primes, stored either as an explicit finite set or as the
/// complement of one, so that both pi and pi' arithmetic stay exact.
class PrimeSet {
 public:
  static PrimeSet empty();
  static PrimeSet all();
  /// Finite set of primes; rejects non-prime entries.
  static PrimeSet of(std::vector<unsigned> primes);
  /// Complement of a finite set of primes.
  static PrimeSet complement_of(std::vector<unsigned> primes);

  bool contains(unsigned p) const;

  /// k is a pi-number: every prime factor of k lies in the set (1 counts).
  bool is_pi_number(std::uint64_t k) const;
  /// k is a pi'-number: no prime factor of k lies in the set (1 counts).
  bool is_pi_prime_number(std::uint64_t k) const;

  /// Largest divisor of m whose prime factors all lie in the set.
  std::uint64_t pi_part(std::uint64_t m) const;
  /// m / pi_part(m).
  std::uint64_t pi_prime_part(std::uint64_t m) const;

  bool subset_of(PrimeSet const& other) const;

  bool is_complement() const { return complement_; }
  std::vector<unsigned> const& basis() const { return primes_; }

  /// "empty", "all", "2,3" or "all-except-2,3".
  std::string to_string() const;
  static PrimeSet parse(std::string const& text);

  bool operator==(PrimeSet const& other) const = default;

 private:
  PrimeSet(std::vector<unsigned> primes, bool complement);

  std::vector<unsigned> primes_;  // sorted, unique
  bool complement_ = false;
};

/// Trial-division primality check for the small numbers handled here.
bool is_prime(std::uint64_t n);

}  // namespace pointlike

#endif  // POINTLIKE_PI_SET_HPP_
