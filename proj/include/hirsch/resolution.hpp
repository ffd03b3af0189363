#pragma once

#include "hirsch/cup1.hpp"
#include "hirsch/linalg.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hirsch {

/// Generators of a graded commutative algebra with no relations in range.
/// `m` empty means m = infinity (polynomial algebra).
struct CgaPresentation {
  struct Gen {
    std::string name;
    int degree = 0;
    friend bool operator==(const Gen&, const Gen&) = default;
  };
  std::vector<Gen> generators;
  std::optional<int> m;

  friend bool operator==(const CgaPresentation&, const CgaPresentation&) = default;
};

struct ValidationReport {
  bool passed = true;
  std::vector<std::string> violations;
};

/// Checks the m-relation-free discipline: positive degrees, unique names,
/// no odd generator in degrees <= m + 1 (all degrees when m is infinite).
ValidationReport validate_presentation(const CgaPresentation& p);

/// Exponent vector over the plain generators; the commutative normal form.
using CommutativeMonomial = std::vector<int>;
using Polynomial = std::map<CommutativeMonomial, Integer>;

/// Multiset of plain generators occurring in a word, sorted.
std::vector<GeneratorId> word_content(const MixedWord& w);

/// The multiplicative resolution RH in range: plain generators in bidegree
/// (0, q) with q <= range, and bundles of distinct plain generators of total
/// degree between 1 and range.
class Resolution {
 public:
  Resolution(CgaPresentation presentation, int range);

  [[nodiscard]] const CgaPresentation& presentation() const { return presentation_; }
  [[nodiscard]] int range() const { return range_; }
  [[nodiscard]] const AlphabetPtr& alphabet() const { return alphabet_; }
  /// Plain generators first, then bundles by length, then lexicographically.
  [[nodiscard]] const std::vector<Cup1Monomial>& generators() const { return generators_; }
  [[nodiscard]] bool has_generator(const Cup1Monomial& m) const { return images_.count(m) != 0; }
  /// d of a generator; throws DomainError outside the generator set.
  [[nodiscard]] const MixedElement& image(const Cup1Monomial& m) const;
  [[nodiscard]] const std::map<Cup1Monomial, MixedElement>& images() const { return images_; }

  [[nodiscard]] MixedElement d(const MixedElement& x) const;
  /// rho: words of plain letters go to their commutative monomial, words
  /// containing a bundle go to zero.
  [[nodiscard]] Polynomial augmentation(const MixedElement& x) const;

  [[nodiscard]] MixedElement letter(const Cup1Monomial& m) const;
  [[nodiscard]] MixedElement plain_letter(std::string_view name) const;

  /// A copy whose differential on one generator is replaced (for negative
  /// controls); the image must live over the same generator set.
  [[nodiscard]] Resolution with_generator_differential(const Cup1Monomial& m,
                                                       MixedElement image) const;

 private:
  CgaPresentation presentation_;
  int range_ = 0;
  AlphabetPtr alphabet_;
  std::vector<Cup1Monomial> generators_;
  std::map<Cup1Monomial, MixedElement> images_;
};

using ResolutionPtr = std::shared_ptr<const Resolution>;

/// Throws DomainError when validation fails or when m is infinite and no
/// truncation is given. A truncation below a finite m shrinks the range.
Resolution build_resolution(const CgaPresentation& p, std::optional<int> truncation = {});

struct DifferentialSquareReport {
  bool passed = true;
  std::optional<Cup1Monomial> failing_generator;
  std::optional<MixedElement> witness;
};

DifferentialSquareReport check_d_squared(const Resolution& r);

struct DegreeCertificate {
  int total_degree = 0;
  std::size_t positions = 0;  // (content, resolution degree) pairs checked
  Index max_rank = 0;         // largest chain group met
  bool passed = true;
};

struct CertificationReport {
  bool passed = true;
  std::string failure;  // empty when passed
  std::vector<DegreeCertificate> degrees;
  bool content_strata = true;  // false when internal-degree strata were needed
};

/// Exactness of the augmented complex ... -> RH^{-1,q} -> RH^{0,q} -> H^q -> 0
/// at every position of total degree <= range. Propagates DomainError when d
/// does not square to zero.
CertificationReport certify_resolution(const Resolution& r);

/// Some x with d(x) = rhs, or nullopt if rhs is not a boundary in range.
/// rhs must be homogeneous.
std::optional<MixedElement> solve_boundary(const Resolution& r, const MixedElement& rhs);

/// A multiplicative map of resolutions given on generators.
struct ResolutionMap {
  ResolutionPtr source;
  ResolutionPtr target;
  std::map<Cup1Monomial, MixedElement> images;

  [[nodiscard]] MixedElement operator()(const MixedElement& x) const;
  [[nodiscard]] const MixedElement& image(const Cup1Monomial& m) const;
};

class ChainMapError : public DomainError {
 public:
  ChainMapError(const std::string& what, Cup1Monomial generator)
      : DomainError(what), generator_(std::move(generator)) {}
  [[nodiscard]] const Cup1Monomial& generator() const { return generator_; }

 private:
  Cup1Monomial generator_;
};

/// The first source generator g with F(dg) != dF(g), if any.
std::optional<Cup1Monomial> chain_map_defect(const ResolutionMap& f);

/// RH(f): plain generators go to the given images (missing ones to zero),
/// bundles a_1 ⌣₁ ... ⌣₁ a_n to f(a_1) ⌣₁ (f(a_2) ⌣₁ (...)). Throws
/// DegreeError on images of the wrong degree and ChainMapError when the
/// result is not a chain map in range.
ResolutionMap build_rh_map(const std::map<std::string, TensorElement>& f_on_generators,
                           ResolutionPtr source, ResolutionPtr target);

ResolutionMap compose(const ResolutionMap& g, const ResolutionMap& f);

/// An (alpha, beta)-derivation homotopy of degree -1, given on generators:
/// s(xy) = (-1)^{|x|} alpha(x) s(y) + s(x) beta(y).
struct DerivationHomotopy {
  std::shared_ptr<const ResolutionMap> alpha;
  std::shared_ptr<const ResolutionMap> beta;
  std::map<Cup1Monomial, MixedElement> values;

  [[nodiscard]] MixedElement operator()(const MixedElement& x) const;
};

struct HomotopyReport {
  bool passed = true;
  std::string law;      // which identity failed
  std::string element;  // where
  std::size_t generators_checked = 0;
  std::size_t products_checked = 0;
};

struct HomotopyResult {
  DerivationHomotopy s;
  HomotopyReport report;
};

/// Extends s0 from plain generators to bundles by
///   s(a ⌣₁ z) = -alpha(a) ⌣₁ s(z) + s(a) ⌣₁ beta(z) + s(z) s(a)
/// and verifies alpha - beta = sd + ds on every generator and the derivation
/// law on products of two and three generators. Throws PreconditionError
/// naming the plain generator where d s0 != alpha - beta.
HomotopyResult extend_homotopy(const ResolutionMap& alpha, const ResolutionMap& beta,
                               const std::map<std::string, MixedElement>& s0);

}  // namespace hirsch
