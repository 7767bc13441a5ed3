#ifndef POINTLIKE_EXPONENT_HPP_
#define POINTLIKE_EXPONENT_HPP_

#include <cstdint>
#include <string>

#include "pointlike/pi_set.hpp"

namespace pointlike {

enum class ExpKind { finite, omega, omega_minus_one, nu_pi, mu };

/// A symbolic profinite exponent: a finite power, omega, omega-1, nu_pi, or
/// a member mu(k) of the mu family defined by k*(mu+1) = nu_pi - 1.  nu_pi
/// and mu(k) are interpreted relative to a prime set supplied at evaluation
/// time.  The type is a closed enumeration; no free exponent arithmetic.
class ProfiniteExponent {
 public:
  static ProfiniteExponent finite(std::uint64_t n);  // n >= 1
  static ProfiniteExponent omega();
  static ProfiniteExponent omega_minus_one();
  static ProfiniteExponent nu_pi();
  static ProfiniteExponent mu(std::uint64_t k);  // k >= 1

  ExpKind kind() const { return kind_; }
  /// The n of finite(n) or the k of mu(k).
  std::uint64_t value() const { return value_; }
  bool is_finite() const { return kind_ == ExpKind::finite; }

  bool operator==(ProfiniteExponent const&) const = default;

 private:
  ProfiniteExponent(ExpKind kind, std::uint64_t value)
      : kind_(kind), value_(value) {}

  ExpKind kind_;
  std::uint64_t value_;
};

/// Residue of the exponent modulo m, in [0, m).
///
/// omega evaluates to 0 and omega-1 to m-1, because omega is the limit of
/// n! which is eventually divisible by every m.  nu_pi is the limit of
/// (p_1...p_n)^{n!} over an enumeration of pi: modulo the pi-part of m the
/// terms are eventually 0, and modulo the pi'-part they are eventually 1
/// (Euler with exponent n!), so the residue is fixed by CRT.  mu(k) is
/// recovered from k*(mu+1) = nu_pi - 1, which requires k to be a
/// pi'-number; otherwise NotPiPrimeOrder is thrown.
std::uint64_t exponent_mod(ProfiniteExponent const& e, PrimeSet const& pi,
                           std::uint64_t m);

/// The exponent mu(k) tied to the cyclic pi'-group order k; throws
/// NotPiPrimeOrder when k is not a pi'-number.  No omega-term
/// simplification is attempted, that is a formatting concern.
ProfiniteExponent mu_for_order(std::uint64_t k, PrimeSet const& pi);

/// Textual syntax: "w", "w-1", "nu", "mu:k", or a decimal integer >= 1.
ProfiniteExponent parse_exponent(std::string const& text);
std::string format_exponent(ProfiniteExponent const& e);

}  // namespace pointlike

#endif  // POINTLIKE_EXPONENT_HPP_
