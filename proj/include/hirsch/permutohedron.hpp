#pragma once

#include "hirsch/cup1.hpp"
#include "hirsch/homology.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hirsch {

/// A face of the permutohedron P_n: an ordered partition of {1..n} into
/// nonempty blocks, each block kept sorted. Dimension n - #blocks.
struct Face {
  std::vector<std::vector<int>> blocks;

  [[nodiscard]] int n() const;
  [[nodiscard]] int dimension() const { return n() - static_cast<int>(blocks.size()); }
  /// "({1,3},{2})"
  [[nodiscard]] std::string to_string() const;
  /// Inverse of to_string; validates that the blocks partition {1..n}.
  static Face parse(std::string_view text);

  friend auto operator<=>(const Face&, const Face&) = default;
  friend bool operator==(const Face&, const Face&) = default;
};

constexpr int kMaxPermutohedron = 7;

/// All faces of P_n grouped by dimension 0..n-1, each group sorted.
/// Throws SizeError unless 1 <= n <= 7.
std::vector<std::vector<Face>> enumerate_faces(int n);
std::vector<std::size_t> f_vector(int n);

/// The letters a, b, c, ... in bidegree (0, 2), one per element of {1..n}.
AlphabetPtr standard_letters(int n);

/// Block {i_1 < ... < i_k} goes to a_{i_1} ⌣₁ ... ⌣₁ a_{i_k}; block order is
/// product order. `letters` must hold n distinct generators of bidegree
/// (0, even).
MixedElement monomial_of_face(const Face& f, const AlphabetPtr& letters);
/// Inverse of monomial_of_face for one word of bundles covering every letter
/// exactly once.
Face face_of_monomial(const MixedWord& w, const Alphabet& letters);
/// Same for a single-term element; the coefficient must be +1 or -1.
Face face_of_monomial(const MixedElement& m);

using SignedFace = std::pair<Integer, Face>;

/// Cellular boundary, obtained by transporting d of the face's monomial with
/// closed even letters back through the bijection. Throws DomainError on a
/// vertex.
std::vector<SignedFace> face_boundary(const Face& f);

/// Cellular chain complex of P_n; chain degree k is spanned by the
/// k-dimensional faces in enumerate_faces order.
ChainComplex permutohedron_complex(int n);

/// Text listing of the cells of P_n with their cup-1 labels and boundaries.
std::string export_complex(int n);

}  // namespace hirsch
