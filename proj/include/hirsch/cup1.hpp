#pragma once

#include "hirsch/tensor_algebra.hpp"

#include <optional>
#include <vector>

namespace hirsch {

/// A bundle a_1 ⌣₁ ... ⌣₁ a_n of distinct generators of resolution degree 0,
/// factors stored in increasing generator id order. A bundle of length one is
/// the plain generator itself.
struct Cup1Monomial {
  std::vector<GeneratorId> factors;

  [[nodiscard]] std::size_t length() const { return factors.size(); }
  [[nodiscard]] bool is_plain() const { return factors.size() == 1; }

  friend auto operator<=>(const Cup1Monomial&, const Cup1Monomial&) = default;
  friend bool operator==(const Cup1Monomial&, const Cup1Monomial&) = default;
};

/// Bidegree (-(n-1), sum of internal degrees).
Bidegree letter_bidegree(const Alphabet& alphabet, const Cup1Monomial& m);
std::string format_letter(const Alphabet& alphabet, const Cup1Monomial& m, bool in_product);

using MixedElement = FreeElement<Cup1Monomial>;
using MixedWord = MixedElement::Word;

struct SignedMonomial {
  int sign = 1;
  Cup1Monomial monomial;
};

/// Sorts a bundle into canonical order. Each inverted pair (a, b) contributes
/// (-1)^{(|a|+1)(|b|+1)}. A repeated factor of even degree gives nullopt (the
/// bundle is zero); a repeated odd factor or a factor of nonzero resolution
/// degree is a DomainError.
std::optional<SignedMonomial> normalize_cup1(const Alphabet& alphabet,
                                             const std::vector<GeneratorId>& bundle);

/// The plain generators viewed as length-one bundles.
MixedElement to_mixed(const TensorElement& x);
/// Inverse of to_mixed; throws DomainError if a bundle of length >= 2 occurs.
TensorElement to_tensor(const MixedElement& x);

MixedElement plain(const AlphabetPtr& alphabet, GeneratorId g, const Integer& c = 1);
MixedElement bundle(const AlphabetPtr& alphabet, const std::vector<GeneratorId>& factors);

/// c ⌣₁ (w_1 ... w_k) by the Hirsch formula
///   c ⌣₁ (uw) = (c ⌣₁ u) w + (-1)^{|u|(|c|+1)} u (c ⌣₁ w),
/// splitting off the first letter each time. Throws on an empty word.
MixedElement hirsch_expand(const Cup1Monomial& c, const MixedWord& product,
                           const AlphabetPtr& alphabet);

/// Same expansion, but the first application splits the word at `split`
/// (1 <= split < length). Agrees with hirsch_expand for every split.
MixedElement hirsch_expand_at(const Cup1Monomial& c, const MixedWord& product, std::size_t split,
                              const AlphabetPtr& alphabet);

/// Bilinear ⌣₁ on mixed elements. For single letters the bundles are merged
/// and normalized; a word on the right is expanded by the Hirsch formula; a
/// word on the left facing a single letter is first moved to the right with
/// the symmetry sign (-1)^{(|u|+1)(|v|+1)}. Products with the unit vanish.
MixedElement cup1_product(const MixedElement& u, const MixedElement& v);

/// d of a bundle, computed on the right-most association a_1 ⌣₁ z with
///   d(a ⌣₁ z) = da ⌣₁ z - (-1)^{|a|} a ⌣₁ dz + (-1)^{|a|} a z - (-1)^{|a|(|z|+1)} z a.
/// `ambient` gives d on the plain generators (missing images are closed).
MixedElement cup1_boundary(const Cup1Monomial& m, const Derivation& ambient);

/// Extends cup1_boundary and `ambient` to a derivation on mixed elements.
MixedElement mixed_differential(const MixedElement& x, const Derivation& ambient);

}  // namespace hirsch
