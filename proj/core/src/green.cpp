#include "pointlike/green.hpp"

#include <map>

namespace pointlike {

namespace {

using Ideal = std::vector<std::uint64_t>;  // bitset over elements

void set_bit(Ideal& ideal, unsigned x) { ideal[x >> 6] |= std::uint64_t{1} << (x & 63); }

std::vector<unsigned> classify(std::vector<Ideal> const& ideals,
                               std::vector<unsigned>& class_of) {
  std::map<Ideal, unsigned> ids;
  std::vector<unsigned> order_of_discovery;
  for (unsigned x = 0; x < class_of.size(); ++x) {
    auto [it, fresh] = ids.emplace(ideals[x], static_cast<unsigned>(ids.size()));
    class_of[x] = it->second;
    if (fresh) {
      order_of_discovery.push_back(x);
    }
  }
  return order_of_discovery;
}

std::vector<std::vector<unsigned>> group_classes(std::vector<unsigned> const& class_of,
                                                 unsigned count) {
  std::vector<std::vector<unsigned>> classes(count);
  for (unsigned x = 0; x < class_of.size(); ++x) {
    classes[class_of[x]].push_back(x);
  }
  return classes;
}

}  // namespace

GreenData green_classes(FiniteSemigroup const& S) {
  unsigned n = S.order();
  std::size_t blocks = (n + 63) / 64;

  std::vector<Ideal> right(n, Ideal(blocks, 0));
  std::vector<Ideal> left(n, Ideal(blocks, 0));
  std::vector<Ideal> two_sided(n, Ideal(blocks, 0));
  for (unsigned x = 0; x < n; ++x) {
    set_bit(right[x], x);
    set_bit(left[x], x);
    set_bit(two_sided[x], x);
    for (unsigned s = 0; s < n; ++s) {
      set_bit(right[x], S.product(x, s));
      set_bit(left[x], S.product(s, x));
      set_bit(two_sided[x], S.product(x, s));
      set_bit(two_sided[x], S.product(s, x));
      for (unsigned t = 0; t < n; ++t) {
        set_bit(two_sided[x], S.product(S.product(s, x), t));
      }
    }
  }

  GreenData g;
  g.r_class_of.assign(n, 0);
  g.l_class_of.assign(n, 0);
  g.j_class_of.assign(n, 0);
  classify(right, g.r_class_of);
  classify(left, g.l_class_of);
  classify(two_sided, g.j_class_of);

  // H = R meet L
  g.h_class_of.assign(n, 0);
  std::map<std::pair<unsigned, unsigned>, unsigned> h_ids;
  for (unsigned x = 0; x < n; ++x) {
    auto key = std::make_pair(g.r_class_of[x], g.l_class_of[x]);
    auto [it, fresh] = h_ids.emplace(key, static_cast<unsigned>(h_ids.size()));
    (void)fresh;
    g.h_class_of[x] = it->second;
  }

  auto count = [](std::vector<unsigned> const& class_of) {
    unsigned m = 0;
    for (unsigned c : class_of) {
      m = std::max(m, c + 1);
    }
    return m;
  };
  g.r_classes = group_classes(g.r_class_of, count(g.r_class_of));
  g.l_classes = group_classes(g.l_class_of, count(g.l_class_of));
  g.j_classes = group_classes(g.j_class_of, count(g.j_class_of));
  g.h_classes = group_classes(g.h_class_of, count(g.h_class_of));

  g.regular.assign(n, false);
  g.idempotent.assign(n, false);
  for (unsigned x = 0; x < n; ++x) {
    g.idempotent[x] = S.is_idempotent(x);
    for (unsigned y = 0; y < n && !g.regular[x]; ++y) {
      if (S.product(S.product(x, y), x) == x) {
        g.regular[x] = true;
      }
    }
  }

  for (unsigned e = 0; e < n; ++e) {
    if (!g.idempotent[e]) {
      continue;
    }
    MaxSubgroup sub;
    sub.idempotent = e;
    sub.elements = g.h_classes[g.h_class_of[e]];
    sub.order = static_cast<unsigned>(sub.elements.size());
    g.max_subgroups.push_back(std::move(sub));
  }
  return g;
}

}  // namespace pointlike
