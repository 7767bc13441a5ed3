#include "pointlike/variety.hpp"

#include "pointlike/errors.hpp"
#include "pointlike/green.hpp"

namespace pointlike {

std::string Variety::to_string() const {
  switch (kind) {
    case VarietyKind::aperiodic:
      return "A";
    case VarietyKind::g_pi_bar:
      return "G-pi-bar(" + pi.to_string() + ")";
    case VarietyKind::da:
      return "DA";
    case VarietyKind::d_o:
      return "DO";
    case VarietyKind::do_cap_g_pi_bar:
      return "DO-G-pi-bar(" + pi.to_string() + ")";
  }
  return {};
}

Variety Variety::parse(std::string const& name, PrimeSet pi) {
  if (name == "A") {
    return Variety::aperiodic();
  }
  if (name == "G-pi-bar") {
    return Variety::g_pi_bar(std::move(pi));
  }
  if (name == "DA") {
    return Variety::da();
  }
  if (name == "DO") {
    return Variety::d_o();
  }
  if (name == "DO-G-pi-bar") {
    return Variety::do_cap_g_pi_bar(std::move(pi));
  }
  throw Error("unknown variety '" + name + "'");
}

namespace {

bool subgroups_have_pi_order(GreenData const& g, PrimeSet const& pi) {
  for (auto const& sub : g.max_subgroups) {
    if (!pi.is_pi_number(sub.order)) {
      return false;
    }
  }
  return true;
}

bool regulars_are_idempotent(GreenData const& g) {
  for (std::size_t x = 0; x < g.regular.size(); ++x) {
    if (g.regular[x] && !g.idempotent[x]) {
      return false;
    }
  }
  return true;
}

// Every regular J-class must be a rectangular group: for idempotents e, f of
// the class, ef stays in the class and is idempotent.  (The membership of ef
// in the class is what makes the class closed under multiplication; the
// idempotency of ef is orthodoxy.)
bool regular_j_classes_are_rectangular_groups(FiniteSemigroup const& S,
                                              GreenData const& g) {
  for (auto const& j_class : g.j_classes) {
    bool is_regular_class = false;
    std::vector<unsigned> idempotents;
    for (unsigned x : j_class) {
      if (g.regular[x]) {
        is_regular_class = true;
      }
      if (g.idempotent[x]) {
        idempotents.push_back(x);
      }
    }
    if (!is_regular_class) {
      continue;
    }
    unsigned j_id = g.j_class_of[j_class.front()];
    for (unsigned e : idempotents) {
      for (unsigned f : idempotents) {
        unsigned ef = S.product(e, f);
        if (g.j_class_of[ef] != j_id || !S.is_idempotent(ef)) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

bool membership(FiniteSemigroup const& S, Variety const& variety) {
  GreenData g = green_classes(S);
  switch (variety.kind) {
    case VarietyKind::aperiodic:
      return subgroups_have_pi_order(g, PrimeSet::empty());
    case VarietyKind::g_pi_bar:
      return subgroups_have_pi_order(g, variety.pi);
    case VarietyKind::da:
      return regulars_are_idempotent(g);
    case VarietyKind::d_o:
      return regular_j_classes_are_rectangular_groups(S, g);
    case VarietyKind::do_cap_g_pi_bar:
      return regular_j_classes_are_rectangular_groups(S, g)
             && subgroups_have_pi_order(g, variety.pi);
  }
  return false;
}

}  // namespace pointlike
