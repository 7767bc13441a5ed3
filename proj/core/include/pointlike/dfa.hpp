#ifndef POINTLIKE_DFA_HPP_
#define POINTLIKE_DFA_HPP_

#include <string>
#include <vector>

#include "pointlike/presentation.hpp"

namespace pointlike {

/// A complete deterministic finite automaton.
struct Dfa {
  unsigned states;
  unsigned initial;
  std::vector<unsigned> accepting;
  std::vector<std::string> alphabet;
  std::vector<std::vector<unsigned>> delta;  // delta[letter][state]
};

/// Transition semigroup of a complete DFA: the semigroup generated by the
/// letter actions on states, with the letters as generators.  Actions are
/// numbered in order of discovery (shortest word, ties lexicographic).
/// Throws IncompleteAutomaton when delta is not total.
Presentation syntactic_from_dfa(Dfa const& dfa);

}  // namespace pointlike

#endif  // POINTLIKE_DFA_HPP_
