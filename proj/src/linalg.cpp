#include "hirsch/linalg.hpp"

#include "hirsch/errors.hpp"

#include <set>
#include <tuple>

namespace hirsch {

void SparseIntMatrix::add(Index r, Index c, const Integer& v) {
  if (r < 0 || r >= rows() || c < 0 || c >= cols_) {
    throw DomainError("sparse matrix index out of range");
  }
  if (v.is_zero()) return;
  auto& row = rows_[static_cast<std::size_t>(r)];
  auto [it, inserted] = row.try_emplace(c, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) row.erase(it);
  }
}

std::size_t SparseIntMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

IntMatrix SparseIntMatrix::to_dense() const {
  IntMatrix m = IntMatrix::Zero(rows(), cols_);
  for (Index r = 0; r < rows(); ++r) {
    for (const auto& [c, v] : row(r)) m(r, c) = v;
  }
  return m;
}

SparseIntMatrix SparseIntMatrix::from_dense(const IntMatrix& m) {
  SparseIntMatrix s(m.rows(), m.cols());
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) s.add(r, c, m(r, c));
  }
  return s;
}

SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("sparse product: shape mismatch");
  SparseIntMatrix out(a.rows(), b.cols());
  for (Index r = 0; r < a.rows(); ++r) {
    for (const auto& [k, v] : a.row(r)) {
      for (const auto& [c, w] : b.row(k)) out.add(r, c, v * w);
    }
  }
  return out;
}

std::vector<Integer> canonical_invariant_factors(std::vector<Integer> d) {
  for (auto& x : d) x = abs(x);
  std::erase_if(d, [](const Integer& x) { return x.is_zero(); });
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const Integer g = gcd(d[i], d[j]);
      const Integer l = (d[i] / g) * d[j];
      d[i] = g;
      d[j] = l;
    }
  }
  return d;
}

namespace {

using SparseRow = std::vector<std::pair<Index, Integer>>;

// row_i -= q * row_r, keeping column membership in sync
void subtract_row(std::vector<SparseRow>& rows, std::vector<std::set<Index>>& col_rows, Index i,
                  Index r, const Integer& q) {
  const SparseRow& src = rows[static_cast<std::size_t>(r)];
  SparseRow& dst = rows[static_cast<std::size_t>(i)];
  SparseRow merged;
  merged.reserve(dst.size() + src.size());
  auto a = dst.begin();
  auto b = src.begin();
  while (a != dst.end() || b != src.end()) {
    if (b == src.end() || (a != dst.end() && a->first < b->first)) {
      merged.push_back(std::move(*a));
      ++a;
    } else if (a == dst.end() || b->first < a->first) {
      merged.emplace_back(b->first, -(q * b->second));
      col_rows[static_cast<std::size_t>(b->first)].insert(i);
      ++b;
    } else {
      Integer v = a->second - q * b->second;
      if (v.is_zero()) {
        col_rows[static_cast<std::size_t>(a->first)].erase(i);
      } else {
        merged.emplace_back(a->first, std::move(v));
      }
      ++a;
      ++b;
    }
  }
  dst = std::move(merged);
}

const Integer* find_entry(const SparseRow& row, Index c) {
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, Index col) { return e.first < col; });
  if (it == row.end() || it->first != c) return nullptr;
  return &it->second;
}

}  // namespace

std::vector<Integer> invariant_factors(const SparseIntMatrix& m) {
  const auto nrows = static_cast<std::size_t>(m.rows());
  std::vector<SparseRow> rows(nrows);
  std::vector<std::set<Index>> col_rows(static_cast<std::size_t>(m.cols()));
  std::set<Index> active;
  for (Index r = 0; r < m.rows(); ++r) {
    for (const auto& [c, v] : m.row(r)) {
      rows[static_cast<std::size_t>(r)].emplace_back(c, v);
      col_rows[static_cast<std::size_t>(c)].insert(r);
    }
    if (!m.row(r).empty()) active.insert(r);
  }

  std::vector<Integer> pivots;
  for (;;) {
    // minimal |entry|, ties broken by Markowitz cost to limit fill
    Index pr = -1;
    Index pc = -1;
    Integer best_abs;
    std::size_t best_cost = 0;
    for (Index r : active) {
      const auto& row = rows[static_cast<std::size_t>(r)];
      for (const auto& [c, v] : row) {
        const Integer a = abs(v);
        const std::size_t cost =
            (row.size() - 1) * (col_rows[static_cast<std::size_t>(c)].size() - 1);
        if (pr < 0 || a < best_abs || (a == best_abs && cost < best_cost)) {
          pr = r;
          pc = c;
          best_abs = a;
          best_cost = cost;
        }
      }
      if (pr >= 0 && best_abs == Integer(1) && best_cost == 0) break;
    }
    if (pr < 0) break;

    const Integer p = *find_entry(rows[static_cast<std::size_t>(pr)], pc);
    bool clean = true;
    const std::vector<Index> others(col_rows[static_cast<std::size_t>(pc)].begin(),
                                    col_rows[static_cast<std::size_t>(pc)].end());
    for (Index i : others) {
      if (i == pr) continue;
      const Integer a = *find_entry(rows[static_cast<std::size_t>(i)], pc);
      const Integer q = a / p;
      if (!q.is_zero()) subtract_row(rows, col_rows, i, pr, q);
      if (!(a % p).is_zero()) clean = false;
      if (rows[static_cast<std::size_t>(i)].empty()) active.erase(i);
    }
    if (!clean) continue;

    // column pc now lives only in row pr; column operations touch only that row
    auto& prow = rows[static_cast<std::size_t>(pr)];
    for (auto& [c, v] : prow) {
      if (c == pc) continue;
      if (!(v % p).is_zero()) {
        v = v % p;
        clean = false;
      }
    }
    if (!clean) {
      std::erase_if(prow, [&](const auto& e) {
        if (e.second.is_zero()) {
          col_rows[static_cast<std::size_t>(e.first)].erase(pr);
          return true;
        }
        return false;
      });
      continue;
    }
    pivots.push_back(abs(p));
    for (const auto& [c, v] : prow) col_rows[static_cast<std::size_t>(c)].erase(pr);
    prow.clear();
    active.erase(pr);
  }
  return canonical_invariant_factors(std::move(pivots));
}

}  // namespace hirsch
