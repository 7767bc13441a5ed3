#ifndef POINTLIKE_VARIETY_HPP_
#define POINTLIKE_VARIETY_HPP_

#include <string>

#include "pointlike/pi_set.hpp"
#include "pointlike/semigroup.hpp"

namespace pointlike {

enum class VarietyKind {
  aperiodic,        // A: all subgroups trivial
  g_pi_bar,         // subgroups have pi-number order
  da,               // every regular element is idempotent
  d_o,              // regular J-classes are rectangular groups
  do_cap_g_pi_bar,  // both of the previous two conditions
};

struct Variety {
  VarietyKind kind;
  PrimeSet pi = PrimeSet::empty();  // used by the G_pi-bar variants

  static Variety aperiodic() { return {VarietyKind::aperiodic}; }
  static Variety g_pi_bar(PrimeSet pi) { return {VarietyKind::g_pi_bar, std::move(pi)}; }
  static Variety da() { return {VarietyKind::da}; }
  static Variety d_o() { return {VarietyKind::d_o}; }
  static Variety do_cap_g_pi_bar(PrimeSet pi) {
    return {VarietyKind::do_cap_g_pi_bar, std::move(pi)};
  }

  std::string to_string() const;
  /// "A" | "G-pi-bar" | "DA" | "DO" | "DO-G-pi-bar"
  static Variety parse(std::string const& name, PrimeSet pi);
};

bool membership(FiniteSemigroup const& S, Variety const& variety);

}  // namespace pointlike

#endif  // POINTLIKE_VARIETY_HPP_
