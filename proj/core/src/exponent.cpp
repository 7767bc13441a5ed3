#include "pointlike/exponent.hpp"

#include <cstdlib>

#include "pointlike/errors.hpp"

namespace pointlike {

ProfiniteExponent ProfiniteExponent::finite(std::uint64_t n) {
  if (n < 1) {
    throw Error("finite exponent must be >= 1");
  }
  return {ExpKind::finite, n};
}

ProfiniteExponent ProfiniteExponent::omega() { return {ExpKind::omega, 0}; }

ProfiniteExponent ProfiniteExponent::omega_minus_one() {
  return {ExpKind::omega_minus_one, 0};
}

ProfiniteExponent ProfiniteExponent::nu_pi() { return {ExpKind::nu_pi, 0}; }

ProfiniteExponent ProfiniteExponent::mu(std::uint64_t k) {
  if (k < 1) {
    throw Error("mu index must be >= 1");
  }
  return {ExpKind::mu, k};
}

namespace {

// r = 0 mod a, r = 1 mod b for coprime a, b; returns r in [0, a*b).
std::uint64_t crt_zero_one(std::uint64_t a, std::uint64_t b) {
  // extended gcd to invert a modulo b
  std::int64_t old_r = static_cast<std::int64_t>(a % b), r = static_cast<std::int64_t>(b);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  // old_r == gcd == 1 since a, b coprime
  std::int64_t inv = old_s % static_cast<std::int64_t>(b);
  if (inv < 0) {
    inv += static_cast<std::int64_t>(b);
  }
  return a * static_cast<std::uint64_t>(inv) % (a * b);
}

}  // namespace

std::uint64_t exponent_mod(ProfiniteExponent const& e, PrimeSet const& pi,
                           std::uint64_t m) {
  if (m == 0) {
    throw Error("exponent_mod: modulus must be positive");
  }
  switch (e.kind()) {
    case ExpKind::finite:
      return e.value() % m;
    case ExpKind::omega:
      return 0;
    case ExpKind::omega_minus_one:
      return (m - 1) % m;
    case ExpKind::nu_pi: {
      std::uint64_t m_pi = pi.pi_part(m);
      std::uint64_t m_rest = m / m_pi;
      if (m_pi == 1) {
        return 1 % m;
      }
      if (m_rest == 1) {
        return 0;
      }
      return crt_zero_one(m_pi, m_rest);
    }
    case ExpKind::mu: {
      std::uint64_t k = e.value();
      if (!pi.is_pi_prime_number(k)) {
        throw NotPiPrimeOrder("mu(" + std::to_string(k)
                              + ") is undefined: k is not a pi'-number for pi = "
                              + pi.to_string());
      }
      // nu - 1 = k*(mu + 1); reduce nu modulo k*m and divide out k.
      std::uint64_t km = k * m;
      std::uint64_t nu = exponent_mod(ProfiniteExponent::nu_pi(), pi, km);
      std::uint64_t diff = (nu + km - 1) % km;  // (nu - 1) mod km
      // diff is divisible by k exactly because k is a pi'-number
      std::uint64_t mu_plus_one = (diff / k) % m;
      return (mu_plus_one + m - 1) % m;
    }
  }
  throw Error("exponent_mod: unreachable");
}

ProfiniteExponent mu_for_order(std::uint64_t k, PrimeSet const& pi) {
  if (!pi.is_pi_prime_number(k)) {
    throw NotPiPrimeOrder("mu_for_order: " + std::to_string(k)
                          + " is not a pi'-number for pi = " + pi.to_string());
  }
  return ProfiniteExponent::mu(k);
}

ProfiniteExponent parse_exponent(std::string const& text) {
  if (text == "w") {
    return ProfiniteExponent::omega();
  }
  if (text == "w-1") {
    return ProfiniteExponent::omega_minus_one();
  }
  if (text == "nu") {
    return ProfiniteExponent::nu_pi();
  }
  if (text.rfind("mu:", 0) == 0) {
    std::string digits = text.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw SyntaxError("malformed mu exponent '" + text + "'", 0);
    }
    std::uint64_t k = std::strtoull(digits.c_str(), nullptr, 10);
    if (k < 1) {
      throw SyntaxError("mu index must be >= 1", 0);
    }
    return ProfiniteExponent::mu(k);
  }
  if (!text.empty() && text.find_first_not_of("0123456789") == std::string::npos) {
    std::uint64_t n = std::strtoull(text.c_str(), nullptr, 10);
    if (n < 1) {
      throw SyntaxError("finite exponent must be >= 1", 0);
    }
    return ProfiniteExponent::finite(n);
  }
  throw SyntaxError("unrecognized exponent '" + text + "'", 0);
}

std::string format_exponent(ProfiniteExponent const& e) {
  switch (e.kind()) {
    case ExpKind::finite:
      return std::to_string(e.value());
    case ExpKind::omega:
      return "w";
    case ExpKind::omega_minus_one:
      return "w-1";
    case ExpKind::nu_pi:
      return "nu";
    case ExpKind::mu:
      return "mu:" + std::to_string(e.value());
  }
  return {};
}

}  // namespace pointlike
