#include "hirsch/homology.hpp"

#include "hirsch/errors.hpp"

#include <string>

namespace hirsch {

ChainComplex::ChainComplex(std::vector<SparseIntMatrix> boundaries)
    : boundaries_(std::move(boundaries)) {
  if (boundaries_.empty()) throw DomainError("chain complex needs at least one boundary map");
  dims_.push_back(boundaries_.front().rows());
  for (std::size_t k = 0; k < boundaries_.size(); ++k) {
    if (boundaries_[k].rows() != dims_.back()) {
      throw DomainError("boundary d_" + std::to_string(k + 1) + " has " +
                        std::to_string(boundaries_[k].rows()) + " rows, expected " +
                        std::to_string(dims_.back()));
    }
    dims_.push_back(boundaries_[k].cols());
  }
}

ChainComplex::ChainComplex(std::vector<Index> dimensions, std::vector<SparseIntMatrix> boundaries)
    : dims_(std::move(dimensions)), boundaries_(std::move(boundaries)) {
  if (dims_.empty() || boundaries_.size() + 1 != dims_.size()) {
    throw DomainError("chain complex: need one boundary per positive degree");
  }
  for (std::size_t k = 0; k < boundaries_.size(); ++k) {
    if (boundaries_[k].rows() != dims_[k] || boundaries_[k].cols() != dims_[k + 1]) {
      throw DomainError("boundary d_" + std::to_string(k + 1) + " has the wrong shape");
    }
  }
}

void check_boundary_squares(const ChainComplex& complex) {
  for (Index k = 1; k < complex.top_degree(); ++k) {
    if (!(complex.boundary(k) * complex.boundary(k + 1)).is_zero()) {
      throw DomainError("d_" + std::to_string(k) + " o d_" + std::to_string(k + 1) +
                        " != 0 (boundary squares to nonzero in degree " + std::to_string(k + 1) +
                        ")");
    }
  }
}

std::vector<FGAbelianGroup> homology(const ChainComplex& complex) {
  check_boundary_squares(complex);
  const Index top = complex.top_degree();
  // factors[k] = invariant factors of d_k, k = 1..top
  std::vector<std::vector<Integer>> factors(static_cast<std::size_t>(top) + 2);
  for (Index k = 1; k <= top; ++k) {
    factors[static_cast<std::size_t>(k)] = invariant_factors(complex.boundary(k));
  }
  std::vector<FGAbelianGroup> out;
  for (Index k = 0; k <= top; ++k) {
    const auto rank_out = static_cast<Index>(factors[static_cast<std::size_t>(k)].size());
    const auto& incoming = factors[static_cast<std::size_t>(k) + 1];
    const Index free_rank = complex.dimension(k) - rank_out - static_cast<Index>(incoming.size());
    out.push_back(FGAbelianGroup::from_cyclic(free_rank, incoming));
  }
  return out;
}

std::vector<FGAbelianGroup> homology(const std::vector<IntMatrix>& boundaries) {
  std::vector<SparseIntMatrix> sparse;
  sparse.reserve(boundaries.size());
  for (const auto& b : boundaries) sparse.push_back(SparseIntMatrix::from_dense(b));
  return homology(ChainComplex(std::move(sparse)));
}

}  // namespace hirsch
