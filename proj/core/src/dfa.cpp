#include "pointlike/dfa.hpp"

#include <deque>
#include <map>

#include "pointlike/errors.hpp"

namespace pointlike {

Presentation syntactic_from_dfa(Dfa const& dfa) {
  if (dfa.states == 0) {
    throw IncompleteAutomaton("automaton has no states");
  }
  if (dfa.alphabet.empty()) {
    throw IncompleteAutomaton("automaton has an empty alphabet");
  }
  if (dfa.delta.size() != dfa.alphabet.size()) {
    throw IncompleteAutomaton("delta must define one row per letter");
  }
  for (auto const& row : dfa.delta) {
    if (row.size() != dfa.states) {
      throw IncompleteAutomaton("delta row does not cover every state");
    }
    for (unsigned q : row) {
      if (q >= dfa.states) {
        throw IncompleteAutomaton("delta target out of range");
      }
    }
  }

  using Action = std::vector<unsigned>;  // state map, diagrammatic order
  std::map<Action, unsigned> index;
  std::vector<Action> actions;
  auto intern = [&](Action const& f) {
    auto [it, fresh] = index.emplace(f, static_cast<unsigned>(actions.size()));
    if (fresh) {
      actions.push_back(f);
    }
    return std::make_pair(it->second, fresh);
  };

  std::deque<unsigned> queue;
  for (auto const& row : dfa.delta) {
    auto [id, fresh] = intern(row);
    if (fresh) {
      queue.push_back(id);
    }
  }
  auto compose = [&](Action const& f, Action const& g) {
    Action h(f.size());
    for (std::size_t q = 0; q < f.size(); ++q) {
      h[q] = g[f[q]];
    }
    return h;
  };
  while (!queue.empty()) {
    Action cur = actions[queue.front()];
    queue.pop_front();
    for (auto const& row : dfa.delta) {
      auto [id, fresh] = intern(compose(cur, row));
      if (fresh) {
        queue.push_back(id);
      }
    }
  }

  unsigned order = static_cast<unsigned>(actions.size());
  std::vector<std::vector<unsigned>> table(order, std::vector<unsigned>(order));
  for (unsigned x = 0; x < order; ++x) {
    for (unsigned y = 0; y < order; ++y) {
      table[x][y] = index.at(compose(actions[x], actions[y]));
    }
  }

  std::vector<unsigned> letter_images;
  for (auto const& row : dfa.delta) {
    letter_images.push_back(index.at(row));
  }
  return Presentation(FiniteSemigroup::from_cayley(order, table), dfa.alphabet,
                      letter_images);
}

}  // namespace pointlike
