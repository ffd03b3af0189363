#pragma once

#include "hirsch/abelian_group.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hirsch {

/// A homomorphism between canonical presentations: column j is the image of
/// source generator j in target generator coordinates.
struct GroupHom {
  FGAbelianGroup source;
  FGAbelianGroup target;
  IntMatrix matrix;

  /// Throws DomainError when the shape is wrong or the matrix does not
  /// respect the torsion of the source.
  void validate() const;

  static GroupHom multiplication(const FGAbelianGroup& g, const Integer& k);
  static GroupHom zero(const FGAbelianGroup& source, const FGAbelianGroup& target);
};

/// Z^n / column span of `relations` (n = rows), canonical form.
FGAbelianGroup quotient_group(const IntMatrix& relations);

/// Tor_1(A, B): sum over torsion pairs of Z/gcd(d_i, e_j).
FGAbelianGroup tor(const FGAbelianGroup& a, const FGAbelianGroup& b);

FGAbelianGroup cokernel(const GroupHom& h);
FGAbelianGroup kernel(const GroupHom& h);
bool is_injective(const GroupHom& h);

/// Data for the hypothesis check in the range m: H^k(X) by degree and the
/// Hurewicz maps u_i : pi_i -> H_i by degree. Missing cohomology is zero;
/// a missing u_i means pi_i = 0.
struct HypothesisInstance {
  int m = 1;
  std::map<int, FGAbelianGroup> cohomology;
  std::map<int, GroupHom> hurewicz;
};

struct DegreeVerdict {
  int degree = 0;
  bool checked = false;  // pi_i != 0
  bool injective = true;
  FGAbelianGroup kernel;
  FGAbelianGroup cokernel;
  FGAbelianGroup cohomology;  // H^{i+1}(X)
  FGAbelianGroup tor;
  bool passed = true;
  std::string note;
};

struct HypothesisReport {
  bool passed = true;
  std::optional<int> failed_degree;
  std::vector<DegreeVerdict> degrees;  // i = 1 .. m-1
  std::string condition;               // which sufficient condition was verified
};

/// For 1 <= i < m with pi_i != 0: u_i injective and Tor(H^{i+1}(X), Coker u_i) = 0.
HypothesisReport check_hypotheses(const HypothesisInstance& inst);

/// G = U(n), m = 2n: u_{2i-1} = multiplication by (i-1)! on Z, pi_{2i} = 0.
HypothesisInstance unitary_instance(int n, std::map<int, FGAbelianGroup> cohomology);

}  // namespace hirsch
