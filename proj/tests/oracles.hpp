#pragma once

// Brute-force references shared by the unit tests and the acceptance run.

#include "hirsch/linalg.hpp"

#include <vector>

namespace oracles {

using hirsch::Index;
using hirsch::IntMatrix;
using hirsch::Integer;

// Determinant by cofactor expansion, small sizes only.
inline Integer det(const IntMatrix& m) {
  const Index n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer out = 0;
  for (Index j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    IntMatrix minor(n - 1, n - 1);
    for (Index i = 1; i < n; ++i) {
      Index cc = 0;
      for (Index k = 0; k < n; ++k) {
        if (k == j) continue;
        minor(i - 1, cc++) = m(i, k);
      }
    }
    const Integer term = m(0, j) * det(minor);
    out += (j % 2 == 0) ? term : -term;
  }
  return out;
}

inline void subsets(Index n, Index k, Index start, std::vector<Index>& cur,
             std::vector<std::vector<Index>>& out) {
  if (static_cast<Index>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (Index i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors from determinantal divisors: d_k = D_k / D_{k-1},
// D_k = gcd of all k x k minors.
inline std::vector<Integer> oracle_invariant_factors(const IntMatrix& m) {
  std::vector<Integer> out;
  Integer prev = 1;
  for (Index k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    std::vector<std::vector<Index>> rs, cs;
    std::vector<Index> cur;
    subsets(m.rows(), k, 0, cur, rs);
    subsets(m.cols(), k, 0, cur, cs);
    Integer g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        IntMatrix sub(k, k);
        for (Index i = 0; i < k; ++i)
          for (Index j = 0; j < k; ++j) sub(i, j) = m(r[i], c[j]);
        g = gcd(g, det(sub));
      }
    if (g.is_zero()) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

// |{x in Z/n : m x = 0}| by enumeration
inline long kernel_order(long m, long n) {
  long count = 0;
  for (long x = 0; x < n; ++x) count += (m * x) % n == 0;
  return count;
}

}  // namespace oracles
