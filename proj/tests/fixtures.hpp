#pragma once

#include "hirsch/twisting.hpp"

#include <random>

namespace fixtures {

using namespace hirsch;

inline IntVector random_vector(std::mt19937_64& rng, Index n, int bound) {
  std::uniform_int_distribution<int> coef(-bound, bound);
  IntVector v(n);
  for (Index i = 0; i < n; ++i) v(i) = coef(rng);
  return v;
}

inline FGAbelianGroup random_group(std::mt19937_64& rng) {
  static const char* choices[] = {"Z", "Z/2", "Z/3", "Z+Z/2", "Z/4", "0"};
  std::uniform_int_distribution<int> pick(0, 5);
  return FGAbelianGroup::parse(choices[pick(rng)]);
}

/// D(X;H) for a random complex on at most three vertices and H in degrees 0..2.
inline DgaPtr random_dx(std::mt19937_64& rng) {
  static const std::vector<std::vector<std::vector<int>>> complexes = {
      {{0}},
      {{0, 1}},
      {{0, 1}, {1, 2}},
      {{0, 1}, {1, 2}, {0, 2}},
      {{0, 1, 2}},
  };
  std::uniform_int_distribution<std::size_t> pick(0, complexes.size() - 1);
  const auto x = SimplicialComplex::generated_by(complexes[pick(rng)]);
  std::vector<FGAbelianGroup> h{random_group(rng), random_group(rng)};
  if (rng() % 3 == 0) h.push_back(random_group(rng));
  if (h[0].is_trivial() || h[1].is_trivial()) h[0] = FGAbelianGroup::free(1);
  if (h[1].is_trivial()) h[1] = FGAbelianGroup::cyclic(2);
  return build_DX(x, h);
}

inline GaugeElement random_gauge(std::mt19937_64& rng, const BigradedDga& a, int n, int bound = 2) {
  DgaElement p = a.zero();
  for (int r = 1; r <= n - 1; ++r) p += a.embed(random_vector(rng, a.rank({r, -r}), bound), {r, -r});
  return {n, p};
}

inline IntMatrix kernel_basis(const IntMatrix& m) {
  if (m.rows() == 0) return IntMatrix::Identity(m.cols(), m.cols());
  return solve_integer(m, IntVector::Constant(m.rows(), Integer(0)))->kernel;
}

/// Degreewise construction: a^2 a random cocycle, each higher a^r a random
/// solution of d a^r = -sum a^i a^j; then a random gauge transform.
inline TwistingElement random_twisting(std::mt19937_64& rng, const BigradedDga& a, int n) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<DgaElement> parts(static_cast<std::size_t>(n) + 1, a.zero());
    bool ok = true;
    for (int r = 2; r <= n && ok; ++r) {
      DgaElement rhs = a.zero();
      for (int i = 2; i <= r - 1; ++i) {
        rhs -= a.multiply(parts[static_cast<std::size_t>(i)], parts[static_cast<std::size_t>(r + 1 - i)]);
      }
      const Bidegree b{r, 1 - r};
      const IntMatrix dm = a.differential_matrix(b);
      IntVector coords = IntVector::Constant(dm.cols(), Integer(0));
      if (dm.cols() > 0) {
        IntMatrix kernel;
        if (dm.rows() == 0) {
          kernel = IntMatrix::Identity(dm.cols(), dm.cols());
        } else {
          const auto sol = solve_integer(dm, a.coordinates(rhs, b + Bidegree{1, 0}));
          if (!sol) {
            ok = false;
            break;
          }
          coords = sol->particular;
          kernel = sol->kernel;
        }
        if (kernel.cols() > 0) coords += kernel * random_vector(rng, kernel.cols(), 2);
      } else if (!rhs.isZero()) {
        ok = false;
      }
      parts[static_cast<std::size_t>(r)] = a.embed(coords, b);
    }
    if (!ok) continue;
    DgaElement v = a.zero();
    for (const auto& part : parts) v += part;
    return gauge_act(a, TwistingElement{n, v}, random_gauge(rng, a, n, 1));
  }
  return gauge_act(a, zero_twisting(a, n), random_gauge(rng, a, n, 1));
}

}  // namespace fixtures
