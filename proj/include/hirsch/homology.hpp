#pragma once

#include "hirsch/abelian_group.hpp"
#include "hirsch/linalg.hpp"

#include <vector>

namespace hirsch {

/// A bounded chain complex C_0 <- C_1 <- ... <- C_n of free abelian groups.
/// boundaries[k-1] is the matrix of d_k : C_k -> C_{k-1}.
class ChainComplex {
 public:
  /// Dimensions are read off the matrices; consecutive shapes must agree.
  explicit ChainComplex(std::vector<SparseIntMatrix> boundaries);
  /// For complexes whose top or bottom groups have no boundary information.
  ChainComplex(std::vector<Index> dimensions, std::vector<SparseIntMatrix> boundaries);

  [[nodiscard]] Index top_degree() const { return static_cast<Index>(dims_.size()) - 1; }
  [[nodiscard]] Index dimension(Index k) const { return dims_[static_cast<std::size_t>(k)]; }
  /// d_k for 1 <= k <= top_degree().
  [[nodiscard]] const SparseIntMatrix& boundary(Index k) const {
    return boundaries_[static_cast<std::size_t>(k - 1)];
  }

 private:
  std::vector<Index> dims_;
  std::vector<SparseIntMatrix> boundaries_;
};

/// Throws DomainError naming the degree k when d_k o d_{k+1} != 0.
void check_boundary_squares(const ChainComplex& complex);

/// H_k = ker d_k / im d_{k+1} for k = 0..top_degree(), canonical form.
std::vector<FGAbelianGroup> homology(const ChainComplex& complex);

/// Dense convenience overload: boundaries[k-1] = d_k.
std::vector<FGAbelianGroup> homology(const std::vector<IntMatrix>& boundaries);

}  // namespace hirsch
