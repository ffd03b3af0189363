#include "hirsch/dga.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace hirsch {

namespace {

int parity_sign(int n) { return (n % 2 == 0) ? 1 : -1; }

void accumulate(DgaElement& out, const SparseVector& v, const Integer& c) {
  for (const auto& [i, x] : v) out(i) += c * x;
}

}  // namespace

BigradedDga::BigradedDga(std::vector<BasisElement> elements) : basis_(std::move(elements)) {
  for (Index i = 0; i < dimension(); ++i) components_[basis(i).degree].push_back(i);
  differential_.resize(basis_.size());
  unit_ = zero();
}

void BigradedDga::set_differential(std::vector<SparseVector> d) {
  if (d.size() != basis_.size()) throw DomainError("differential size mismatch");
  differential_ = std::move(d);
}

void BigradedDga::set_unit(DgaElement unit) {
  if (unit.size() != dimension()) throw DomainError("unit size mismatch");
  unit_ = std::move(unit);
}

const std::vector<Index>& BigradedDga::component(Bidegree b) const {
  static const std::vector<Index> empty;
  const auto it = components_.find(b);
  return it == components_.end() ? empty : it->second;
}

std::vector<Bidegree> BigradedDga::bidegrees() const {
  std::vector<Bidegree> out;
  for (const auto& [b, _] : components_) out.push_back(b);
  return out;
}

DgaElement BigradedDga::basis_vector(Index i) const {
  DgaElement out = zero();
  out(i) = 1;
  return out;
}

DgaElement BigradedDga::d(const DgaElement& x) const {
  DgaElement out = zero();
  for (Index i = 0; i < dimension(); ++i) {
    if (!x(i).is_zero()) accumulate(out, differential(i), x(i));
  }
  return out;
}

DgaElement BigradedDga::multiply(const DgaElement& x, const DgaElement& y,
                                 std::optional<int> truncation) const {
  std::vector<Index> xs, ys;
  for (Index i = 0; i < dimension(); ++i) {
    if (!x(i).is_zero()) xs.push_back(i);
    if (!y(i).is_zero()) ys.push_back(i);
  }
  DgaElement out = zero();
  for (Index i : xs) {
    for (Index j : ys) {
      if (truncation && basis(i).degree.first + basis(j).degree.first > *truncation) continue;
      accumulate(out, basis_product(i, j), x(i) * y(j));
    }
  }
  return out;
}

DgaElement BigradedDga::project(const DgaElement& x, Bidegree b) const {
  DgaElement out = zero();
  for (Index i : component(b)) out(i) = x(i);
  return out;
}

DgaElement BigradedDga::perturbation_part(const DgaElement& x, int r) const {
  DgaElement out = zero();
  for (Index i = 0; i < dimension(); ++i) {
    if (basis(i).degree.first == r) out(i) = x(i);
  }
  return out;
}

DgaElement BigradedDga::truncate(const DgaElement& x, int n) const {
  DgaElement out = x;
  for (Index i = 0; i < dimension(); ++i) {
    if (basis(i).degree.first > n) out(i) = 0;
  }
  return out;
}

IntVector BigradedDga::coordinates(const DgaElement& x, Bidegree b) const {
  const auto& idx = component(b);
  IntVector out(static_cast<Index>(idx.size()));
  for (std::size_t k = 0; k < idx.size(); ++k) out(static_cast<Index>(k)) = x(idx[k]);
  return out;
}

DgaElement BigradedDga::embed(const IntVector& coords, Bidegree b) const {
  const auto& idx = component(b);
  if (coords.size() != static_cast<Index>(idx.size())) throw DomainError("coordinate size mismatch");
  DgaElement out = zero();
  for (std::size_t k = 0; k < idx.size(); ++k) out(idx[k]) = coords(static_cast<Index>(k));
  return out;
}

IntMatrix BigradedDga::differential_matrix(Bidegree b) const {
  const auto& cols = component(b);
  const auto& rows = component(b + Bidegree{1, 0});
  IntMatrix m = IntMatrix::Constant(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()),
                                    Integer(0));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (const auto& [i, c] : differential(cols[j])) {
      const auto it = std::lower_bound(rows.begin(), rows.end(), i);
      m(it - rows.begin(), static_cast<Index>(j)) += c;
    }
  }
  return m;
}

std::string BigradedDga::format(const DgaElement& x) const {
  std::string out;
  for (Index i = 0; i < dimension(); ++i) {
    const Integer& c = x(i);
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const Integer a = abs(c);
    if (a != Integer(1)) out += a.to_string() + " ";
    out += basis(i).name;
  }
  return out.empty() ? "0" : out;
}

std::optional<Index> BigradedDga::find(const std::string& name) const {
  for (Index i = 0; i < dimension(); ++i) {
    if (basis(i).name == name) return i;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

TableDga::TableDga(std::vector<BasisElement> elements, const std::map<Index, SparseVector>& differential,
                   std::map<std::pair<Index, Index>, SparseVector> products, DgaElement unit)
    : BigradedDga(std::move(elements)), products_(std::move(products)) {
  const Index n = dimension();
  auto check_index = [&](Index i) {
    if (i < 0 || i >= n) throw DomainError("basis index " + std::to_string(i) + " out of range");
  };
  auto check_image = [&](const SparseVector& v, Bidegree want, const std::string& what) {
    for (const auto& [i, c] : v) {
      check_index(i);
      if (!c.is_zero() && basis(i).degree != want) {
        throw DegreeError(what + " has a term '" + basis(i).name + "' of bidegree " +
                          to_string(basis(i).degree) + ", expected " + to_string(want));
      }
    }
  };
  std::vector<SparseVector> d(static_cast<std::size_t>(n));
  for (const auto& [i, v] : differential) {
    check_index(i);
    check_image(v, basis(i).degree + Bidegree{1, 0}, "d(" + basis(i).name + ")");
    d[static_cast<std::size_t>(i)] = v;
  }
  for (const auto& [ij, v] : products_) {
    check_index(ij.first);
    check_index(ij.second);
    check_image(v, basis(ij.first).degree + basis(ij.second).degree,
                basis(ij.first).name + "*" + basis(ij.second).name);
  }
  set_differential(std::move(d));
  set_unit(std::move(unit));
}

SparseVector TableDga::basis_product(Index i, Index j) const {
  const auto it = products_.find({i, j});
  return it == products_.end() ? SparseVector{} : it->second;
}

// ---------------------------------------------------------------------------

SimplicialComplex SimplicialComplex::generated_by(std::vector<std::vector<int>> maximal) {
  std::set<std::vector<int>> all;
  for (auto s : maximal) {
    std::sort(s.begin(), s.end());
    if (s.empty() || std::adjacent_find(s.begin(), s.end()) != s.end() || s.front() < 0) {
      throw DomainError("simplices must be nonempty sets of nonnegative vertices");
    }
    if (s.size() > 20) throw SizeError("simplex dimension above 19");
    const unsigned full = (1u << s.size()) - 1;
    for (unsigned sub = 1; sub <= full; ++sub) {
      std::vector<int> face;
      for (std::size_t k = 0; k < s.size(); ++k) {
        if ((sub >> k) & 1u) face.push_back(s[k]);
      }
      all.insert(std::move(face));
    }
  }
  SimplicialComplex x;
  x.simplices.assign(all.begin(), all.end());
  std::stable_sort(x.simplices.begin(), x.simplices.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return x;
}

int SimplicialComplex::dimension() const {
  int out = -1;
  for (const auto& s : simplices) out = std::max(out, static_cast<int>(s.size()) - 1);
  return out;
}

namespace {

std::vector<BasisElement> cochain_basis(const SimplicialComplex& x) {
  std::vector<BasisElement> out;
  for (const auto& s : x.simplices) {
    std::string name = "c[";
    for (std::size_t k = 0; k < s.size(); ++k) name += (k ? "," : "") + std::to_string(s[k]);
    out.push_back({name + "]", {static_cast<int>(s.size()) - 1, 0}});
  }
  return out;
}

}  // namespace

CochainDga::CochainDga(SimplicialComplex x) : BigradedDga(cochain_basis(x)), x_(std::move(x)) {
  for (Index i = 0; i < dimension(); ++i) index_.emplace(x_.simplices[static_cast<std::size_t>(i)], i);
  // (delta phi)(rho) = sum_k (-1)^k phi(rho without its k-th vertex)
  std::vector<SparseVector> d(static_cast<std::size_t>(dimension()));
  for (const auto& rho : x_.simplices) {
    if (rho.size() < 2) continue;
    const Index r = index_.at(rho);
    for (std::size_t k = 0; k < rho.size(); ++k) {
      auto face = rho;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
      d[static_cast<std::size_t>(index_.at(face))].emplace_back(r, Integer(parity_sign(static_cast<int>(k))));
    }
  }
  set_differential(std::move(d));
  DgaElement unit = zero();
  for (const auto& s : x_.simplices) {
    if (s.size() == 1) unit(index_.at(s)) = 1;
  }
  set_unit(std::move(unit));
}

SparseVector CochainDga::basis_product(Index i, Index j) const {
  const auto& a = x_.simplices[static_cast<std::size_t>(i)];
  const auto& b = x_.simplices[static_cast<std::size_t>(j)];
  if (a.back() != b.front()) return {};
  std::vector<int> joined = a;
  joined.insert(joined.end(), b.begin() + 1, b.end());
  const auto it = index_.find(joined);
  if (it == index_.end()) return {};
  return {{it->second, Integer(1)}};
}

// ---------------------------------------------------------------------------

namespace {

std::vector<HomDga::Slot> resolution_slots(const std::vector<FGAbelianGroup>& groups) {
  std::vector<HomDga::Slot> out;
  for (std::size_t q = 0; q < groups.size(); ++q) {
    for (Index k = 0; k < groups[q].generator_count(); ++k) out.push_back({0, static_cast<int>(q), k});
    for (Index k = 0; k < static_cast<Index>(groups[q].torsion().size()); ++k) {
      out.push_back({1, static_cast<int>(q), k});
    }
  }
  return out;
}

std::string slot_name(const HomDga::Slot& s) {
  return "r" + std::to_string(s.stage) + "h" + std::to_string(s.q) + "g" + std::to_string(s.index);
}

std::vector<BasisElement> hom_basis(const std::vector<FGAbelianGroup>& groups) {
  const auto slots = resolution_slots(groups);
  std::vector<BasisElement> out;
  for (const auto& a : slots) {
    for (const auto& b : slots) {
      out.push_back({slot_name(a) + "<" + slot_name(b), {b.stage - a.stage, b.q - a.q}});
    }
  }
  return out;
}

}  // namespace

HomDga::HomDga(std::vector<FGAbelianGroup> groups)
    : BigradedDga(hom_basis(groups)), groups_(std::move(groups)), slots_(resolution_slots(groups_)) {
  width_ = static_cast<Index>(slots_.size());
  // boundary of RH: relation k of H_q goes to order_k times its torsion generator
  std::vector<std::optional<std::pair<Index, Integer>>> down(slots_.size());
  std::vector<std::optional<std::pair<Index, Integer>>> up(slots_.size());
  for (Index a = 0; a < width_; ++a) {
    const auto& s = slots_[static_cast<std::size_t>(a)];
    if (s.stage != 1) continue;
    const auto& g = groups_[static_cast<std::size_t>(s.q)];
    for (Index b = 0; b < width_; ++b) {
      const auto& t = slots_[static_cast<std::size_t>(b)];
      if (t.stage == 0 && t.q == s.q && t.index == g.rank() + s.index) {
        const Integer order = g.torsion()[static_cast<std::size_t>(s.index)];
        down[static_cast<std::size_t>(a)] = std::pair{b, order};
        up[static_cast<std::size_t>(b)] = std::pair{a, order};
      }
    }
  }
  std::vector<SparseVector> d(static_cast<std::size_t>(dimension()));
  for (Index a = 0; a < width_; ++a) {
    for (Index b = 0; b < width_; ++b) {
      const Index e = a * width_ + b;
      SparseVector& out = d[static_cast<std::size_t>(e)];
      if (const auto& t = down[static_cast<std::size_t>(a)]) out.emplace_back(t->first * width_ + b, t->second);
      if (const auto& t = up[static_cast<std::size_t>(b)]) {
        out.emplace_back(a * width_ + t->first, Integer(-parity_sign(total_degree(e))) * t->second);
      }
    }
  }
  set_differential(std::move(d));
  DgaElement unit = zero();
  for (Index a = 0; a < width_; ++a) unit(a * width_ + a) = 1;
  set_unit(std::move(unit));
}

SparseVector HomDga::basis_product(Index i, Index j) const {
  if (i % width_ != j / width_) return {};
  return {{(i / width_) * width_ + j % width_, Integer(1)}};
}

// ---------------------------------------------------------------------------

namespace {

std::vector<BasisElement> tensor_basis(const BigradedDga& b, const BigradedDga& c) {
  std::vector<BasisElement> out;
  for (Index k = 0; k < b.dimension(); ++k) {
    if (b.basis(k).degree.second != 0) {
      throw DomainError("left tensor factor must be singly graded (second degree 0)");
    }
    for (Index l = 0; l < c.dimension(); ++l) {
      out.push_back({b.basis(k).name + "⊗" + c.basis(l).name,
                     {b.basis(k).degree.first + c.basis(l).degree.first, c.basis(l).degree.second}});
    }
  }
  return out;
}

}  // namespace

TensorDga::TensorDga(DgaPtr b, DgaPtr c)
    : BigradedDga(tensor_basis(*b, *c)), b_(std::move(b)), c_(std::move(c)) {
  const Index nc = c_->dimension();
  std::vector<SparseVector> d(static_cast<std::size_t>(dimension()));
  for (Index k = 0; k < b_->dimension(); ++k) {
    const Integer sign(parity_sign(b_->total_degree(k)));
    for (Index l = 0; l < nc; ++l) {
      auto& out = d[static_cast<std::size_t>(k * nc + l)];
      for (const auto& [k2, x] : b_->differential(k)) out.emplace_back(k2 * nc + l, x);
      for (const auto& [l2, x] : c_->differential(l)) out.emplace_back(k * nc + l2, sign * x);
    }
  }
  set_differential(std::move(d));
  DgaElement unit = zero();
  const DgaElement& ub = b_->unit();
  const DgaElement& uc = c_->unit();
  for (Index k = 0; k < b_->dimension(); ++k) {
    if (ub(k).is_zero()) continue;
    for (Index l = 0; l < nc; ++l) {
      if (!uc(l).is_zero()) unit(k * nc + l) = ub(k) * uc(l);
    }
  }
  set_unit(std::move(unit));
}

SparseVector TensorDga::basis_product(Index i, Index j) const {
  const Index nc = c_->dimension();
  const Index k1 = i / nc, l1 = i % nc, k2 = j / nc, l2 = j % nc;
  const auto pb = b_->basis_product(k1, k2);
  if (pb.empty()) return {};
  const auto pc = c_->basis_product(l1, l2);
  if (pc.empty()) return {};
  const Integer sign(parity_sign(c_->total_degree(l1) * b_->total_degree(k2)));
  SparseVector out;
  for (const auto& [k, x] : pb) {
    for (const auto& [l, y] : pc) out.emplace_back(k * nc + l, sign * x * y);
  }
  return out;
}

DgaPtr tensor_dga(DgaPtr b, DgaPtr c) {
  if (b->dimension() * c->dimension() > kMaxDgaDimension) {
    throw SizeError("tensor dga of rank " + std::to_string(b->dimension() * c->dimension()) +
                    " exceeds " + std::to_string(kMaxDgaDimension));
  }
  return std::make_shared<TensorDga>(std::move(b), std::move(c));
}

DgaPtr build_DX(const SimplicialComplex& x, const std::vector<FGAbelianGroup>& groups) {
  Index width = 0;
  for (const auto& g : groups) width += g.generator_count() + static_cast<Index>(g.torsion().size());
  const Index cells = static_cast<Index>(x.simplices.size());
  if (width * width > kMaxDgaDimension || width * width * cells > kMaxDgaDimension) {
    throw SizeError("D(X;H) window too large: " + std::to_string(cells) + " cells, resolution rank " +
                    std::to_string(width));
  }
  return tensor_dga(std::make_shared<CochainDga>(x), std::make_shared<HomDga>(groups));
}

// ---------------------------------------------------------------------------

namespace {

DgaElement product_of(const BigradedDga& a, Index i, Index j) {
  DgaElement out = a.zero();
  accumulate(out, a.basis_product(i, j), Integer(1));
  return out;
}

}  // namespace

DgaCheckReport check_dga(const BigradedDga& a, std::size_t triple_budget) {
  DgaCheckReport r;
  auto fail = [&](std::string why) {
    r.passed = false;
    r.failure = std::move(why);
    return r;
  };
  const Index n = a.dimension();
  for (Index i = 0; i < n; ++i) {
    for (const auto& [j, c] : a.differential(i)) {
      if (!c.is_zero() && a.basis(j).degree != a.basis(i).degree + Bidegree{1, 0}) {
        return fail("d(" + a.basis(i).name + ") leaves bidegree " + to_string(a.basis(i).degree) +
                    " + (1,0)");
      }
    }
    if (!a.d(a.d(a.basis_vector(i))).isZero()) return fail("d^2(" + a.basis(i).name + ") != 0");
  }
  if (!a.d(a.unit()).isZero()) return fail("d(1) != 0");
  if (a.unit() != a.project(a.unit(), {0, 0})) return fail("unit is not of bidegree (0,0)");
  for (Index i = 0; i < a.dimension(); ++i) {
    const DgaElement e = a.basis_vector(i);
    if (a.multiply(a.unit(), e) != e || a.multiply(e, a.unit()) != e) {
      return fail("unit law fails on " + a.basis(i).name);
    }
  }

  std::mt19937_64 rng(0x5eed);
  const std::size_t pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  const bool sample_pairs = pairs > triple_budget;
  const std::size_t pair_count = sample_pairs ? triple_budget : pairs;
  std::uniform_int_distribution<Index> pick(0, n > 0 ? n - 1 : 0);
  for (std::size_t p = 0; p < pair_count && n > 0; ++p) {
    const Index i = sample_pairs ? pick(rng) : static_cast<Index>(p / static_cast<std::size_t>(n));
    const Index j = sample_pairs ? pick(rng) : static_cast<Index>(p % static_cast<std::size_t>(n));
    const auto prod = a.basis_product(i, j);
    for (const auto& [k, c] : prod) {
      if (!c.is_zero() && a.basis(k).degree != a.basis(i).degree + a.basis(j).degree) {
        return fail("product " + a.basis(i).name + "*" + a.basis(j).name + " has the wrong bidegree");
      }
    }
    const DgaElement x = a.basis_vector(i), y = a.basis_vector(j);
    const DgaElement lhs = a.d(product_of(a, i, j));
    const DgaElement rhs = a.multiply(a.d(x), y) +
                           Integer(parity_sign(a.total_degree(i))) * a.multiply(x, a.d(y));
    if (lhs != rhs) return fail("Leibniz rule fails on " + a.basis(i).name + ", " + a.basis(j).name);
  }
  const std::size_t triples = pairs * static_cast<std::size_t>(n);
  const bool sample = triples > triple_budget;
  r.exhaustive = !sample && !sample_pairs;
  const std::size_t count = sample ? triple_budget : triples;
  for (std::size_t t = 0; t < count && n > 0; ++t) {
    Index i, j, k;
    if (sample) {
      i = pick(rng), j = pick(rng), k = pick(rng);
    } else {
      const auto un = static_cast<std::size_t>(n);
      i = static_cast<Index>(t / (un * un));
      j = static_cast<Index>((t / un) % un);
      k = static_cast<Index>(t % un);
    }
    const auto ij = a.basis_product(i, j);
    const auto jk = a.basis_product(j, k);
    if (ij.empty() && jk.empty()) continue;
    DgaElement left = a.zero(), right = a.zero();
    for (const auto& [m, c] : ij) accumulate(left, a.basis_product(m, k), c);
    for (const auto& [m, c] : jk) accumulate(right, a.basis_product(i, m), c);
    if (left != right) {
      return fail("associativity fails on " + a.basis(i).name + ", " + a.basis(j).name + ", " +
                  a.basis(k).name);
    }
  }
  return r;
}

DgaMap identity_map(const DgaPtr& a) {
  return DgaMap{a, a, IntMatrix::Identity(a->dimension(), a->dimension())};
}

DgaMap compose(const DgaMap& g, const DgaMap& f) {
  if (f.target.get() != g.source.get()) throw DomainError("composed maps do not match");
  return DgaMap{f.source, g.target, g.matrix * f.matrix};
}

std::optional<std::string> dga_map_defect(const DgaMap& f, std::optional<int> truncation) {
  const auto& a = *f.source;
  const auto& b = *f.target;
  if (f.matrix.rows() != b.dimension() || f.matrix.cols() != a.dimension()) {
    return "matrix shape does not match the dgas";
  }
  auto cut = [&](const DgaElement& x) { return truncation ? b.truncate(x, *truncation) : x; };
  for (Index j = 0; j < a.dimension(); ++j) {
    for (Index i = 0; i < b.dimension(); ++i) {
      if (!f.matrix(i, j).is_zero() && b.basis(i).degree != a.basis(j).degree) {
        return "image of " + a.basis(j).name + " leaves bidegree " + to_string(a.basis(j).degree);
      }
    }
  }
  if (cut(f(a.unit())) != cut(b.unit())) return std::string("unit is not preserved");
  auto image = [&](const SparseVector& v) {
    DgaElement out = b.zero();
    for (const auto& [k, c] : v) out += c * f.matrix.col(k);
    return out;
  };
  for (Index j = 0; j < a.dimension(); ++j) {
    if (cut(image(a.differential(j))) != cut(b.d(f.matrix.col(j)))) {
      return "f d != d f on " + a.basis(j).name;
    }
  }
  for (Index i = 0; i < a.dimension(); ++i) {
    const DgaElement fi = f.matrix.col(i);
    for (Index j = 0; j < a.dimension(); ++j) {
      const DgaElement fj = f.matrix.col(j);
      const DgaElement lhs = cut(image(a.basis_product(i, j)));
      const DgaElement rhs = b.multiply(fi, fj, truncation);
      if (lhs != rhs) return "f is not multiplicative on " + a.basis(i).name + ", " + a.basis(j).name;
    }
  }
  return std::nullopt;
}

}  // namespace hirsch
