#ifndef POINTLIKE_GREEN_HPP_
#define POINTLIKE_GREEN_HPP_

#include <vector>

#include "pointlike/semigroup.hpp"

namespace pointlike {

struct MaxSubgroup {
  unsigned idempotent;
  std::vector<unsigned> elements;  // the H-class of the idempotent
  unsigned order;
};

/// Green's relations of a finite semigroup, computed from principal ideals,
/// plus the regular elements, the idempotents and the maximal subgroups.
struct GreenData {
  std::vector<unsigned> r_class_of;
  std::vector<unsigned> l_class_of;
  std::vector<unsigned> j_class_of;
  std::vector<unsigned> h_class_of;
  std::vector<std::vector<unsigned>> r_classes;
  std::vector<std::vector<unsigned>> l_classes;
  std::vector<std::vector<unsigned>> j_classes;
  std::vector<std::vector<unsigned>> h_classes;
  std::vector<bool> regular;     // per element
  std::vector<bool> idempotent;  // per element
  std::vector<MaxSubgroup> max_subgroups;  // one per idempotent
};

GreenData green_classes(FiniteSemigroup const& S);

}  // namespace pointlike

#endif  // POINTLIKE_GREEN_HPP_
