#ifndef POINTLIKE_CBF_HPP_
#define POINTLIKE_CBF_HPP_

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "pointlike/term.hpp"

namespace pointlike {

/// Central basic factorization u = prefix a0 . middle . b0 suffix where
/// prefix a0 is the shortest full-content prefix and b0 suffix the shortest
/// full-content suffix.  Parts may be empty (null terms).  Omega powers are
/// peeled through the exact identities x^w = x x^w and x^w = x^w x, so all
/// parts remain omega-terms and reassembly is the identity in every finite
/// semigroup.
struct CbfFull {
  Term prefix;
  std::string a0;
  Term middle;
  std::string b0;
  Term suffix;
};

/// The two full-content markers are the same occurrence: u = alpha x beta
/// with c(u) = c(alpha) + {x} = c(beta) + {x}.
struct CbfSharedMarker {
  Term alpha;
  std::string x;
  Term beta;
};

/// The suffix begins before the prefix ends: u = alpha y beta x gamma with
/// c(u) = c(alpha y beta) + {x} = c(beta x gamma) + {y}.
struct CbfCrossed {
  Term alpha;
  std::string y;
  Term beta;
  std::string x;
  Term gamma;
};

/// A bare letter; no factorization applies.
struct CbfTooShort {
  std::string letter;
};

using CbfResult = std::variant<CbfFull, CbfSharedMarker, CbfCrossed, CbfTooShort>;

/// Requires an omega-term (exponents omega or finite).
CbfResult cbf(Term const& t);

struct CbfLayer {
  Term prefix;     // u_{i,p}
  std::string a;   // a_p
  std::string b;   // b_p
  Term suffix;     // u''_{i,p}
};

/// Iterated central basic factorizations of the middle while its content
/// stays full.  finite: the middle degenerated (smaller content, possibly
/// empty) or presented an overlap form; infinite: a canonicalized middle
/// recurred, so the layers are eventually periodic; undetermined: the cap
/// was reached without a classification.
struct CbfTower {
  enum class Status { finite, infinite, undetermined };
  Status status = Status::undetermined;
  std::vector<CbfLayer> layers;
  std::vector<Term> middles;  // middles[p] feeds layer p; middles[0] = input
  std::size_t cycle_start = 0;   // infinite only
  std::size_t cycle_period = 0;  // infinite only

  /// The norm parameter: index of the last full layer (layers.size() - 1);
  /// meaningful for finite towers with at least one layer.
  Term final_middle() const { return middles.back(); }
  CbfLayer const& layer_at(std::size_t p) const;
  Term middle_at(std::size_t p) const;
};

CbfTower cbf_tower(Term const& t, std::size_t cap);

}  // namespace pointlike

#endif  // POINTLIKE_CBF_HPP_
