#include "pointlike/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "pointlike/errors.hpp"

namespace pointlike {

namespace {

constexpr unsigned kUndef = 0xffffffffu;

// Checks every triple whose products are all determined.
bool partial_associative(std::vector<unsigned> const& t, unsigned n) {
  for (unsigned x = 0; x < n; ++x) {
    for (unsigned y = 0; y < n; ++y) {
      unsigned xy = t[x * n + y];
      if (xy == kUndef) {
        continue;
      }
      for (unsigned z = 0; z < n; ++z) {
        unsigned yz = t[y * n + z];
        if (yz == kUndef) {
          continue;
        }
        unsigned left = t[xy * n + z];
        unsigned right = t[x * n + yz];
        if (left != kUndef && right != kUndef && left != right) {
          return false;
        }
      }
    }
  }
  return true;
}

void enumerate_tables(std::vector<unsigned>& t, unsigned n, std::size_t cell,
                      std::set<std::vector<unsigned>>& canonical) {
  if (cell == static_cast<std::size_t>(n) * n) {
    std::vector<std::vector<unsigned>> rows(n, std::vector<unsigned>(n));
    for (unsigned x = 0; x < n; ++x) {
      for (unsigned y = 0; y < n; ++y) {
        rows[x][y] = t[x * n + y];
      }
    }
    canonical.insert(canonical_table_key(FiniteSemigroup::from_cayley(n, rows)));
    return;
  }
  for (unsigned v = 0; v < n; ++v) {
    t[cell] = v;
    if (partial_associative(t, n)) {
      enumerate_tables(t, n, cell + 1, canonical);
    }
  }
  t[cell] = kUndef;
}

bool random_fill(std::vector<unsigned>& t, unsigned n, std::size_t cell,
                 std::mt19937& rng) {
  if (cell == static_cast<std::size_t>(n) * n) {
    return true;
  }
  std::vector<unsigned> values(n);
  std::iota(values.begin(), values.end(), 0u);
  std::shuffle(values.begin(), values.end(), rng);
  for (unsigned v : values) {
    t[cell] = v;
    if (partial_associative(t, n) && random_fill(t, n, cell + 1, rng)) {
      return true;
    }
  }
  t[cell] = kUndef;
  return false;
}

FiniteSemigroup from_flat(std::vector<unsigned> const& flat, unsigned n) {
  std::vector<std::vector<unsigned>> rows(n, std::vector<unsigned>(n));
  for (unsigned x = 0; x < n; ++x) {
    for (unsigned y = 0; y < n; ++y) {
      rows[x][y] = flat[x * n + y];
    }
  }
  return FiniteSemigroup::from_cayley(n, rows);
}

}  // namespace

std::vector<unsigned> canonical_table_key(FiniteSemigroup const& S) {
  unsigned n = S.order();
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::vector<unsigned> best;
  std::vector<unsigned> candidate(static_cast<std::size_t>(n) * n);
  do {
    for (unsigned x = 0; x < n; ++x) {
      for (unsigned y = 0; y < n; ++y) {
        candidate[perm[x] * n + perm[y]] = perm[S.product(x, y)];
      }
    }
    if (best.empty() || candidate < best) {
      best = candidate;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool is_isomorphic(FiniteSemigroup const& A, FiniteSemigroup const& B) {
  if (A.order() != B.order()) {
    return false;
  }
  return canonical_table_key(A) == canonical_table_key(B);
}

std::vector<FiniteSemigroup> all_semigroups_upto_iso(unsigned order) {
  static std::map<unsigned, std::vector<FiniteSemigroup>> cache;
  auto it = cache.find(order);
  if (it != cache.end()) {
    return it->second;
  }
  if (order == 0) {
    return {};
  }
  std::set<std::vector<unsigned>> canonical;
  std::vector<unsigned> t(static_cast<std::size_t>(order) * order, kUndef);
  enumerate_tables(t, order, 0, canonical);
  std::vector<FiniteSemigroup> result;
  result.reserve(canonical.size());
  for (auto const& key : canonical) {
    result.push_back(from_flat(key, order));
  }
  cache.emplace(order, result);
  return result;
}

FiniteSemigroup random_semigroup(unsigned order, std::mt19937& rng) {
  if (order == 0) {
    throw Error("random_semigroup: order must be positive");
  }
  std::vector<unsigned> t(static_cast<std::size_t>(order) * order, kUndef);
  if (!random_fill(t, order, 0, rng)) {
    throw Error("random_semigroup: search failed");  // cannot happen
  }
  return from_flat(t, order);
}

FiniteSemigroup make_cyclic(unsigned n) {
  std::vector<std::vector<unsigned>> table(n, std::vector<unsigned>(n));
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      table[i][j] = (i + j) % n;
    }
  }
  return FiniteSemigroup::from_cayley(n, table);
}

FiniteSemigroup make_brandt_b2() {
  // elements: 0 = a, 1 = b, 2 = ab, 3 = ba, 4 = zero
  std::vector<std::vector<unsigned>> table = {
      {4, 2, 4, 0, 4},
      {3, 4, 1, 4, 4},
      {0, 4, 2, 4, 4},
      {4, 1, 4, 3, 4},
      {4, 4, 4, 4, 4},
  };
  return FiniteSemigroup::from_cayley(5, table);
}

FiniteSemigroup make_b2_with_identity() {
  FiniteSemigroup b2 = make_brandt_b2();
  unsigned n = b2.order();
  std::vector<std::vector<unsigned>> table(n + 1, std::vector<unsigned>(n + 1));
  for (unsigned x = 0; x < n; ++x) {
    for (unsigned y = 0; y < n; ++y) {
      table[x][y] = b2.product(x, y);
    }
    table[x][n] = x;
    table[n][x] = x;
  }
  table[n][n] = n;
  return FiniteSemigroup::from_cayley(n + 1, table);
}

FiniteSemigroup make_semilattice(unsigned k) {
  if (k == 0 || k > 16) {
    throw Error("make_semilattice: unsupported alphabet size");
  }
  unsigned order = (1u << k) - 1;
  std::vector<std::vector<unsigned>> table(order, std::vector<unsigned>(order));
  for (unsigned x = 0; x < order; ++x) {
    for (unsigned y = 0; y < order; ++y) {
      table[x][y] = ((x + 1) | (y + 1)) - 1;
    }
  }
  return FiniteSemigroup::from_cayley(order, table);
}

FiniteSemigroup make_z2_left_zero(unsigned k) {
  unsigned order = 2 * k;
  std::vector<std::vector<unsigned>> table(order, std::vector<unsigned>(order));
  for (unsigned i = 0; i < k; ++i) {
    for (unsigned g = 0; g < 2; ++g) {
      for (unsigned j = 0; j < k; ++j) {
        for (unsigned h = 0; h < 2; ++h) {
          table[i * 2 + g][j * 2 + h] = i * 2 + ((g + h) % 2);
        }
      }
    }
  }
  return FiniteSemigroup::from_cayley(order, table);
}

Corpus generate_corpus(Variety const& variety, unsigned max_order) {
  if (max_order > 4) {
    throw Error("generate_corpus: exhaustive mode supports max_order <= 4");
  }
  Corpus corpus;
  corpus.variety = variety;
  for (unsigned n = 1; n <= max_order; ++n) {
    auto all = all_semigroups_upto_iso(n);
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (membership(all[i], variety)) {
        corpus.members.push_back(present_with_minimal_generators(all[i]));
        corpus.labels.push_back("exhaustive:order=" + std::to_string(n) + ":"
                                + std::to_string(i));
      }
    }
  }
  auto add_curated = [&](FiniteSemigroup const& S, std::string const& label) {
    if (S.order() <= max_order) {
      return;  // covered by the exhaustive part, up to isomorphism
    }
    if (membership(S, variety)) {
      corpus.members.push_back(present_with_minimal_generators(S));
      corpus.labels.push_back(label);
    }
  };
  for (unsigned n = 1; n <= 6; ++n) {
    add_curated(make_cyclic(n), "cyclic:" + std::to_string(n));
  }
  add_curated(make_brandt_b2(), "brandt:B2");
  add_curated(make_b2_with_identity(), "brandt:B2^1");
  add_curated(make_semilattice(2), "semilattice:2");
  add_curated(make_semilattice(3), "semilattice:3");
  return corpus;
}

std::string Counterexample::to_string() const {
  std::ostringstream out;
  out << "member#" << member << "(" << label << ") with [";
  for (std::size_t k = 0; k < assignment.size(); ++k) {
    if (k > 0) {
      out << ", ";
    }
    out << assignment[k].first << "->" << assignment[k].second;
  }
  out << "] distinguishes terms " << i << " and " << j << " (" << value_i
      << " != " << value_j << ")";
  return out.str();
}

std::optional<Counterexample> corpus_distinguish(std::vector<Term> const& terms,
                                                 Corpus const& corpus,
                                                 PrimeSet const& pi) {
  if (terms.size() < 2) {
    return std::nullopt;
  }
  std::set<std::string> letter_set;
  for (auto const& t : terms) {
    auto c = content(t);
    letter_set.insert(c.begin(), c.end());
  }
  std::vector<std::string> letters(letter_set.begin(), letter_set.end());

  for (std::size_t m = 0; m < corpus.members.size(); ++m) {
    FiniteSemigroup const& S = corpus.members[m].semigroup();
    unsigned n = S.order();
    std::vector<unsigned> values(letters.size(), 0);
    while (true) {
      LetterAssignment assign;
      assign.reserve(letters.size());
      for (std::size_t k = 0; k < letters.size(); ++k) {
        assign.emplace_back(letters[k], values[k]);
      }
      std::vector<unsigned> evals;
      evals.reserve(terms.size());
      for (auto const& t : terms) {
        evals.push_back(eval_term(S, assign, t, pi));
      }
      for (std::size_t i = 0; i < terms.size(); ++i) {
        for (std::size_t j = i + 1; j < terms.size(); ++j) {
          if (evals[i] != evals[j]) {
            return Counterexample{m,       corpus.labels[m], assign, i, j,
                                  evals[i], evals[j]};
          }
        }
      }
      // advance the odometer, last letter fastest
      std::size_t k = letters.size();
      while (k > 0) {
        --k;
        if (++values[k] < n) {
          break;
        }
        values[k] = 0;
        if (k == 0) {
          goto next_member;
        }
      }
      if (letters.empty()) {
        break;
      }
    }
  next_member:;
  }
  return std::nullopt;
}

}  // namespace pointlike
