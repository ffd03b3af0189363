#pragma once

#include "hirsch/dga.hpp"

#include <optional>
#include <string>

namespace hirsch {

/// a = a^2 + ... + a^N with a^r in A^{r,1-r}; N is the truncation level.
struct TwistingElement {
  int truncation = 2;
  DgaElement value;
};

/// p = 1 + p' with p' = p^1 + ... + p^{N-1}, p^r in A^{r,-r}.
struct GaugeElement {
  int truncation = 2;
  DgaElement p_prime;
};

/// Throw DegreeError when a component lies outside the allowed bidegrees.
void check_twisting_shape(const BigradedDga& a, const TwistingElement& x);
void check_gauge_shape(const BigradedDga& a, const GaugeElement& p);

TwistingElement zero_twisting(const BigradedDga& a, int truncation);
GaugeElement gauge_unit(const BigradedDga& a, int truncation);

struct TwistingReport {
  bool passed = true;
  int failed_level = 0;  // the r with d(a^r) != -sum_{i+j=r+1} a^i a^j
  std::string message;
};

/// d(a^r) = -sum_{i+j=r+1} a^i a^j for 2 <= r <= N.
TwistingReport is_twisting(const BigradedDga& a, const TwistingElement& x);

/// p^{-1} = sum_k (-p')^k, truncated at N - 1.
DgaElement gauge_inverse(const BigradedDga& a, const GaugeElement& p);
/// (pq)' truncated at N - 1.
GaugeElement gauge_product(const BigradedDga& a, const GaugeElement& p, const GaugeElement& q);

/// a * p = p^{-1} a p + p^{-1} dp in perturbation degrees <= N.
TwistingElement gauge_act(const BigradedDga& a, const TwistingElement& x, const GaugeElement& p);

/// b - a = a p' - p' b + dp' in perturbation degrees <= N.
bool orbit_relation_holds(const BigradedDga& a, const TwistingElement& x, const TwistingElement& y,
                          const GaugeElement& p);

enum class GaugeVerdict { equivalent, refuted, inconclusive };

std::string to_string(GaugeVerdict v);

struct GaugeSearchResult {
  GaugeVerdict verdict = GaugeVerdict::inconclusive;
  std::optional<GaugeElement> witness;  // verified
  int level = 0;                        // refuting level, or deepest level reached
  int box = 0;                          // largest kernel coefficient bound searched
  std::size_t nodes = 0;
  std::string certificate;
};

/// Degreewise search for p' with b - a = a p' - p' b + dp'. At level L the
/// unknown p^{L-1} enters through d, so each level is an integer linear
/// system; earlier levels range over particular + kernel * c with
/// |c_i| <= box for box = 0..budget. Refutation is reported only when the
/// search was exhaustive (level 2, or no free kernel directions on the way).
/// Throws PreconditionError unless both elements are twisting.
GaugeSearchResult gauge_equivalent(const BigradedDga& a, const TwistingElement& x,
                                   const TwistingElement& y, int budget,
                                   std::size_t node_limit = 100000);

/// Component-wise image; throws DomainError when phi is not a bigraded dga
/// map in the truncation.
TwistingElement push_twisting(const DgaMap& phi, const TwistingElement& x);
GaugeElement push_gauge(const DgaMap& phi, const GaugeElement& p);

struct HomotopyOrbitReport {
  bool passed = true;
  std::string law;      // which identity failed
  std::string element;  // where
  std::optional<GaugeElement> witness;  // p' = -s(a)
};

/// Checks f - g = sd + ds and s(xy) = (-1)^{|x|} f(x)s(y) + s(x)g(y) on the
/// basis of the source (pairs for the second law), then that p' = -s(a)
/// carries f(a) to g(a). Everything is compared in perturbation degrees
/// <= a.truncation of the target. s is target x source of bidegree (-1, 0).
HomotopyOrbitReport homotopy_orbit_check(const DgaMap& f, const DgaMap& g, const IntMatrix& s,
                                         const TwistingElement& x);

/// The free dga on a^2, a^3, ... with d a^r = -sum_{i+j=r+1} a^i a^j, kept
/// through perturbation degree N + 1, and its tautological twisting element
/// a^2 + ... + a^N.
struct UniversalTwisting {
  DgaPtr dga;
  TwistingElement a;
};

UniversalTwisting universal_twisting_dga(int truncation);

/// The map a^r -> b^r; a dga map in perturbation degrees <= N.
DgaMap classifying_map(const UniversalTwisting& u, DgaPtr target, const TwistingElement& b);

struct HomotopyTriple {
  DgaMap f;
  DgaMap g;
  IntMatrix s;
};

/// f classifies b; s(a^r) = sigma^{r-1} with sigma shaped like a gauge
/// element; g is forced by g = f - sd - ds on generators and s extends as an
/// (f, g)-derivation over words.
HomotopyTriple construct_homotopy_triple(const UniversalTwisting& u, DgaPtr target,
                                         const TwistingElement& b, const GaugeElement& sigma);

}  // namespace hirsch
