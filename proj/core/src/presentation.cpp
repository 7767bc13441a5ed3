#include "pointlike/presentation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "pointlike/errors.hpp"

namespace pointlike {

Presentation::Presentation(FiniteSemigroup semigroup,
                           std::vector<std::string> alphabet,
                           std::vector<unsigned> letter_images)
    : semigroup_(std::move(semigroup)),
      alphabet_(std::move(alphabet)),
      letter_images_(std::move(letter_images)) {
  if (alphabet_.empty()) {
    throw Error("presentation needs a nonempty alphabet");
  }
  if (alphabet_.size() != letter_images_.size()) {
    throw Error("alphabet and letter map sizes differ");
  }
  std::set<std::string> seen(alphabet_.begin(), alphabet_.end());
  if (seen.size() != alphabet_.size()) {
    throw Error("alphabet contains a repeated symbol");
  }
  for (unsigned img : letter_images_) {
    if (img >= semigroup_.order()) {
      throw Error("letter image out of range");
    }
  }

  // BFS over the right Cayley graph; first discovery is the shortest word,
  // and expanding letters in alphabet order makes ties lexicographic.
  shortest_words_.assign(semigroup_.order(), {});
  std::vector<bool> found(semigroup_.order(), false);
  std::deque<unsigned> queue;
  for (unsigned a = 0; a < alphabet_.size(); ++a) {
    unsigned s = letter_images_[a];
    if (!found[s]) {
      found[s] = true;
      shortest_words_[s] = {a};
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    unsigned s = queue.front();
    queue.pop_front();
    for (unsigned a = 0; a < alphabet_.size(); ++a) {
      unsigned t = semigroup_.product(s, letter_images_[a]);
      if (!found[t]) {
        found[t] = true;
        shortest_words_[t] = shortest_words_[s];
        shortest_words_[t].push_back(a);
        queue.push_back(t);
      }
    }
  }
  for (unsigned s = 0; s < semigroup_.order(); ++s) {
    if (!found[s]) {
      throw Error("letter map is not onto: element " + std::to_string(s)
                  + " is not the image of any word");
    }
  }
}

std::optional<unsigned> Presentation::letter_index(std::string const& symbol) const {
  for (unsigned a = 0; a < alphabet_.size(); ++a) {
    if (alphabet_[a] == symbol) {
      return a;
    }
  }
  return std::nullopt;
}

unsigned Presentation::image_of_word(std::vector<unsigned> const& word) const {
  if (word.empty()) {
    throw Error("image of the empty word is undefined");
  }
  unsigned acc = letter_images_[word[0]];
  for (std::size_t i = 1; i < word.size(); ++i) {
    acc = semigroup_.product(acc, letter_images_[word[i]]);
  }
  return acc;
}

std::vector<unsigned> const& Presentation::word_for(unsigned s) const {
  if (s >= semigroup_.order()) {
    throw Error("word_for: element out of range");
  }
  return shortest_words_[s];
}

std::string Presentation::word_string(std::vector<unsigned> const& word) const {
  std::string out;
  for (unsigned a : word) {
    out += alphabet_[a];
  }
  return out;
}

Presentation content_augment(Presentation const& P) {
  FiniteSemigroup const& S = P.semigroup();
  unsigned letters = static_cast<unsigned>(P.alphabet().size());

  using Pair = std::pair<unsigned, std::uint64_t>;  // (element, content mask)
  std::map<Pair, unsigned> index;
  std::vector<Pair> elements;
  auto intern = [&](Pair const& p) {
    auto [it, fresh] = index.emplace(p, static_cast<unsigned>(elements.size()));
    if (fresh) {
      elements.push_back(p);
    }
    return std::make_pair(it->second, fresh);
  };

  std::vector<Pair> generators;
  std::deque<unsigned> queue;
  for (unsigned a = 0; a < letters; ++a) {
    Pair g{P.letter_image(a), std::uint64_t{1} << a};
    generators.push_back(g);
    auto [id, fresh] = intern(g);
    if (fresh) {
      queue.push_back(id);
    }
  }
  while (!queue.empty()) {
    Pair cur = elements[queue.front()];
    queue.pop_front();
    for (Pair const& g : generators) {
      Pair next{S.product(cur.first, g.first), cur.second | g.second};
      auto [id, fresh] = intern(next);
      if (fresh) {
        queue.push_back(id);
      }
    }
  }

  unsigned order = static_cast<unsigned>(elements.size());
  std::vector<std::vector<unsigned>> table(order, std::vector<unsigned>(order));
  for (unsigned x = 0; x < order; ++x) {
    for (unsigned y = 0; y < order; ++y) {
      Pair prod{S.product(elements[x].first, elements[y].first),
                elements[x].second | elements[y].second};
      table[x][y] = index.at(prod);
    }
  }

  std::vector<unsigned> letter_images;
  for (unsigned a = 0; a < letters; ++a) {
    letter_images.push_back(index.at(generators[a]));
  }
  return Presentation(FiniteSemigroup::from_cayley(order, table), P.alphabet(),
                      letter_images);
}

namespace {

bool generates(FiniteSemigroup const& S, std::vector<unsigned> const& gens) {
  std::vector<bool> reached(S.order(), false);
  std::deque<unsigned> queue;
  for (unsigned g : gens) {
    if (!reached[g]) {
      reached[g] = true;
      queue.push_back(g);
    }
  }
  std::size_t count = queue.size();
  while (!queue.empty()) {
    unsigned s = queue.front();
    queue.pop_front();
    for (unsigned g : gens) {
      unsigned t = S.product(s, g);
      if (!reached[t]) {
        reached[t] = true;
        ++count;
        queue.push_back(t);
      }
    }
  }
  return count == S.order();
}

void combinations(unsigned n, unsigned k, std::vector<unsigned>& current,
                  unsigned next, std::vector<unsigned>* found,
                  FiniteSemigroup const& S) {
  if (!found->empty()) {
    return;
  }
  if (current.size() == k) {
    if (generates(S, current)) {
      *found = current;
    }
    return;
  }
  for (unsigned i = next; i < n; ++i) {
    current.push_back(i);
    combinations(n, k, current, i + 1, found, S);
    current.pop_back();
    if (!found->empty()) {
      return;
    }
  }
}

}  // namespace

std::vector<unsigned> minimal_generating_set(FiniteSemigroup const& S) {
  for (unsigned k = 1; k <= S.order(); ++k) {
    std::vector<unsigned> found;
    std::vector<unsigned> current;
    combinations(S.order(), k, current, 0, &found, S);
    if (!found.empty()) {
      return found;
    }
  }
  throw Error("no generating set found");  // unreachable: all elements generate
}

Presentation present_with_minimal_generators(FiniteSemigroup const& S) {
  std::vector<unsigned> gens = minimal_generating_set(S);
  std::vector<std::string> alphabet;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i < 26) {
      alphabet.push_back(std::string(1, static_cast<char>('a' + i)));
    } else {
      alphabet.push_back("g" + std::to_string(i));
    }
  }
  return Presentation(S, alphabet, gens);
}

}  // namespace pointlike
