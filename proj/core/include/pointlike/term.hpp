#ifndef POINTLIKE_TERM_HPP_
#define POINTLIKE_TERM_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pointlike/exponent.hpp"
#include "pointlike/presentation.hpp"

namespace pointlike {

struct TermNode;

/// Terms are immutable and shared; synthesized terms reuse subterm
/// structure, which keeps certificates small and evaluation memoizable.
using Term = std::shared_ptr<TermNode const>;

/// AST of a kappa_pi-term: letters, binary concatenation, symbolic powers.
/// Power exponents are never finite(1).
struct TermNode {
  enum class Kind { letter, concat, power };
  Kind kind;
  std::string letter;                            // kind == letter
  Term left, right;                              // kind == concat
  Term base;                                     // kind == power
  ProfiniteExponent exp = ProfiniteExponent::omega();  // kind == power
};

Term make_letter(std::string symbol);
Term make_concat(Term left, Term right);
Term make_power(Term base, ProfiniteExponent exp);
/// Left fold of a nonempty sequence.
Term make_concat_all(std::vector<Term> const& factors);

Term omega_power(Term base);

/// Set of letters occurring in the term; powers do not change content.
std::set<std::string> content(Term const& t);

bool term_equal(Term const& a, Term const& b);
/// Number of nodes of the underlying DAG, counted with multiplicity.
std::size_t term_size(Term const& t);

/// Letters of the term as a word, if every exponent is finite (powers are
/// expanded).  Terms with infinite exponents yield nullopt.
std::optional<std::vector<std::string>> finite_word(Term const& t);

/// True when all exponents are omega or finite.
bool is_omega_term(Term const& t);

/// A letter interpretation into a semigroup; small and linear-scanned.
using LetterAssignment = std::vector<std::pair<std::string, unsigned>>;

/// Structural evaluation under an assignment of letters to elements.
/// Shared subterms are evaluated once.  Throws UnknownLetter.
unsigned eval_term(FiniteSemigroup const& S, LetterAssignment const& assign,
                   Term const& t, PrimeSet const& pi);

/// Evaluation under a presentation's letter map.
unsigned eval_term(Presentation const& P, Term const& t, PrimeSet const& pi);

/// S-expression grammar:
///   term := letter | "(* " term term+ ")" | "(pow " term exp ")"
/// with exponents as in exponent.hpp.  parse(format(t)) == t structurally;
/// the printer flattens left spines only.
Term parse_term(std::string const& text);
std::string format_term(Term const& t);

}  // namespace pointlike

#endif  // POINTLIKE_TERM_HPP_
