#pragma once

#include "hirsch/abelian_group.hpp"
#include "hirsch/tensor_algebra.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hirsch {

/// Sparse combination of basis elements.
using SparseVector = std::vector<std::pair<Index, Integer>>;
/// Elements are dense coordinate vectors over the basis.
using DgaElement = IntVector;

struct BasisElement {
  std::string name;
  Bidegree degree;
};

/// A bigraded dga of finite total rank: basis, differential of bidegree (1, 0)
/// and a bilinear product given on basis pairs. Signs use the total degree.
class BigradedDga {
 public:
  virtual ~BigradedDga() = default;

  [[nodiscard]] Index dimension() const { return static_cast<Index>(basis_.size()); }
  [[nodiscard]] const BasisElement& basis(Index i) const {
    return basis_[static_cast<std::size_t>(i)];
  }
  [[nodiscard]] int total_degree(Index i) const { return basis(i).degree.total(); }
  /// Basis indices of bidegree b, ascending.
  [[nodiscard]] const std::vector<Index>& component(Bidegree b) const;
  /// Bidegrees with nonzero rank, ascending.
  [[nodiscard]] std::vector<Bidegree> bidegrees() const;
  [[nodiscard]] Index rank(Bidegree b) const { return static_cast<Index>(component(b).size()); }

  [[nodiscard]] const SparseVector& differential(Index i) const {
    return differential_[static_cast<std::size_t>(i)];
  }
  [[nodiscard]] virtual SparseVector basis_product(Index i, Index j) const = 0;

  [[nodiscard]] DgaElement zero() const { return DgaElement::Constant(dimension(), Integer(0)); }
  [[nodiscard]] const DgaElement& unit() const { return unit_; }
  [[nodiscard]] DgaElement basis_vector(Index i) const;

  [[nodiscard]] DgaElement d(const DgaElement& x) const;
  /// Products; with a truncation, components of perturbation degree above it
  /// are dropped.
  [[nodiscard]] DgaElement multiply(const DgaElement& x, const DgaElement& y,
                                    std::optional<int> truncation = {}) const;

  /// Part of x in bidegree b, or in perturbation degree r.
  [[nodiscard]] DgaElement project(const DgaElement& x, Bidegree b) const;
  [[nodiscard]] DgaElement perturbation_part(const DgaElement& x, int r) const;
  /// Drops perturbation degrees above n.
  [[nodiscard]] DgaElement truncate(const DgaElement& x, int n) const;

  /// Coordinates of x on component(b), and back.
  [[nodiscard]] IntVector coordinates(const DgaElement& x, Bidegree b) const;
  [[nodiscard]] DgaElement embed(const IntVector& coords, Bidegree b) const;
  /// Matrix of d : A^b -> A^{b + (1,0)} on the component bases.
  [[nodiscard]] IntMatrix differential_matrix(Bidegree b) const;

  /// "2 e1 - e3"
  [[nodiscard]] std::string format(const DgaElement& x) const;
  [[nodiscard]] std::optional<Index> find(const std::string& name) const;

 protected:
  explicit BigradedDga(std::vector<BasisElement> elements);
  void set_differential(std::vector<SparseVector> d);
  void set_unit(DgaElement unit);

 private:
  std::vector<BasisElement> basis_;
  std::map<Bidegree, std::vector<Index>> components_;
  std::vector<SparseVector> differential_;
  DgaElement unit_;
};

using DgaPtr = std::shared_ptr<const BigradedDga>;

/// Explicit structure constants; unlisted products are zero.
class TableDga : public BigradedDga {
 public:
  /// Throws DegreeError when an image has the wrong bidegree and DomainError
  /// on out-of-range indices.
  TableDga(std::vector<BasisElement> elements, const std::map<Index, SparseVector>& differential,
           std::map<std::pair<Index, Index>, SparseVector> products, DgaElement unit);

  [[nodiscard]] SparseVector basis_product(Index i, Index j) const override;
  [[nodiscard]] const std::map<std::pair<Index, Index>, SparseVector>& products() const {
    return products_;
  }

 private:
  std::map<std::pair<Index, Index>, SparseVector> products_;
};

/// A finite simplicial complex on vertices 0..n-1, closed under faces.
struct SimplicialComplex {
  std::vector<std::vector<int>> simplices;  // sorted vertex lists, by dimension then lexicographic

  /// Closure of the given simplices.
  static SimplicialComplex generated_by(std::vector<std::vector<int>> maximal);
  [[nodiscard]] int dimension() const;
};

/// Ordered simplicial cochains with the Alexander-Whitney cup product;
/// C^i sits in bidegree (i, 0).
class CochainDga : public BigradedDga {
 public:
  explicit CochainDga(SimplicialComplex x);
  [[nodiscard]] SparseVector basis_product(Index i, Index j) const override;
  [[nodiscard]] const SimplicialComplex& complex() const { return x_; }

 private:
  SimplicialComplex x_;
  std::map<std::vector<int>, Index> index_;
};

/// Hom(RH, RH) for the canonical two-stage free resolutions of H_q:
/// R_0 H_q on the canonical generators, R_1 H_q on the torsion relations.
/// A map R_j H_q -> R_{j-s} H_{q-t} has bidegree (s, t); the product is
/// composition and d f = df - (-1)^{|f|} f d.
class HomDga : public BigradedDga {
 public:
  /// groups[q] = H_q.
  explicit HomDga(std::vector<FGAbelianGroup> groups);
  [[nodiscard]] SparseVector basis_product(Index i, Index j) const override;

  struct Slot {
    int stage = 0;  // resolution degree j
    int q = 0;
    Index index = 0;
  };
  /// Basis of RH itself.
  [[nodiscard]] const std::vector<Slot>& slots() const { return slots_; }

 private:
  std::vector<FGAbelianGroup> groups_;
  std::vector<Slot> slots_;
  Index width_ = 0;
};

/// B (x) C with A^{r,t} = sum_{i+j=r} B^{i,*} (x) C^{j,t}; the first grading of
/// B is its only grading (its second must be 0).
class TensorDga : public BigradedDga {
 public:
  TensorDga(DgaPtr b, DgaPtr c);
  [[nodiscard]] SparseVector basis_product(Index i, Index j) const override;
  [[nodiscard]] const DgaPtr& left() const { return b_; }
  [[nodiscard]] const DgaPtr& right() const { return c_; }

 private:
  DgaPtr b_;
  DgaPtr c_;
};

DgaPtr tensor_dga(DgaPtr b, DgaPtr c);

constexpr Index kMaxDgaDimension = 20000;

/// (C^*(X; Hom(RH, RH)), d^C + d^R). Throws SizeError when the result would
/// exceed kMaxDgaDimension.
DgaPtr build_DX(const SimplicialComplex& x, const std::vector<FGAbelianGroup>& groups);

struct DgaCheckReport {
  bool passed = true;
  std::string failure;
  bool exhaustive = true;  // false when triples were sampled
};

/// d^2 = 0, unit, bidegrees of d and of products, Leibniz rule and
/// associativity. Triples are sampled deterministically past `triple_budget`.
DgaCheckReport check_dga(const BigradedDga& a, std::size_t triple_budget = 200000);

/// A linear map preserving the bigrading; matrix is target x source.
struct DgaMap {
  DgaPtr source;
  DgaPtr target;
  IntMatrix matrix;

  [[nodiscard]] DgaElement operator()(const DgaElement& x) const { return matrix * x; }
};

DgaMap identity_map(const DgaPtr& a);
DgaMap compose(const DgaMap& g, const DgaMap& f);

/// Bigrading, unit, chain map and multiplicativity on all basis pairs. With a
/// truncation, both sides are compared below perturbation degree n + 1.
/// Returns the first failure.
std::optional<std::string> dga_map_defect(const DgaMap& f, std::optional<int> truncation = {});

}  // namespace hirsch
