#ifndef POINTLIKE_PRESENTATION_HPP_
#define POINTLIKE_PRESENTATION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "pointlike/semigroup.hpp"

namespace pointlike {

/// A finite semigroup together with an ordered alphabet and the images of
/// the letters (the restriction of the evaluation homomorphism).  The letter
/// map must be onto: every element is the image of some nonempty word;
/// construction verifies this.  Shortest-word representatives (ties broken
/// lexicographically in alphabet order) are precomputed.
class Presentation {
 public:
  Presentation(FiniteSemigroup semigroup, std::vector<std::string> alphabet,
               std::vector<unsigned> letter_images);

  FiniteSemigroup const& semigroup() const { return semigroup_; }
  std::vector<std::string> const& alphabet() const { return alphabet_; }

  unsigned letter_image(unsigned letter) const { return letter_images_[letter]; }
  std::optional<unsigned> letter_index(std::string const& symbol) const;

  /// Image of a word given as letter indices.
  unsigned image_of_word(std::vector<unsigned> const& word) const;

  /// Shortest word (as letter indices) evaluating to s.
  std::vector<unsigned> const& word_for(unsigned s) const;
  std::string word_string(std::vector<unsigned> const& word) const;

 private:
  FiniteSemigroup semigroup_;
  std::vector<std::string> alphabet_;
  std::vector<unsigned> letter_images_;
  std::vector<std::vector<unsigned>> shortest_words_;  // per element
};

/// The presentation of the subsemigroup of S x (nonempty subsets of A)
/// generated by the pairs (phi(a), {a}).  In the result the image of a word
/// determines its content and distinct letters have distinct images.
Presentation content_augment(Presentation const& P);

/// First (by size, then lexicographically by index tuple) subset of elements
/// that generates S.  Used to present corpus members compactly.
std::vector<unsigned> minimal_generating_set(FiniteSemigroup const& S);

/// Presentation of S over its minimal generating set, letters "a", "b", ...
Presentation present_with_minimal_generators(FiniteSemigroup const& S);

}  // namespace pointlike

#endif  // POINTLIKE_PRESENTATION_HPP_
