#include "hirsch/twisting.hpp"

#include <functional>

namespace hirsch {

namespace {

int parity_sign(int n) { return (n % 2 == 0) ? 1 : -1; }

void check_shape(const BigradedDga& a, const DgaElement& x, int lo, int hi, int shift,
                 const std::string& what) {
  if (x.size() != a.dimension()) throw DegreeError(what + " has the wrong length");
  for (Index i = 0; i < a.dimension(); ++i) {
    if (x(i).is_zero()) continue;
    const Bidegree b = a.basis(i).degree;
    if (b.first < lo || b.first > hi || b.second != shift - b.first) {
      throw DegreeError(what + " has a component '" + a.basis(i).name + "' in bidegree " +
                        to_string(b));
    }
  }
}

void check_same_level(const TwistingElement& x, const GaugeElement& p) {
  if (x.truncation != p.truncation) {
    throw DomainError("truncation levels differ: " + std::to_string(x.truncation) + " vs " +
                      std::to_string(p.truncation));
  }
}

}  // namespace

void check_twisting_shape(const BigradedDga& a, const TwistingElement& x) {
  if (x.truncation < 2) throw DomainError("twisting truncation must be at least 2");
  check_shape(a, x.value, 2, x.truncation, 1, "twisting element");
}

void check_gauge_shape(const BigradedDga& a, const GaugeElement& p) {
  if (p.truncation < 2) throw DomainError("gauge truncation must be at least 2");
  check_shape(a, p.p_prime, 1, p.truncation - 1, 0, "gauge element");
}

TwistingElement zero_twisting(const BigradedDga& a, int truncation) {
  return {truncation, a.zero()};
}

GaugeElement gauge_unit(const BigradedDga& a, int truncation) { return {truncation, a.zero()}; }

TwistingReport is_twisting(const BigradedDga& a, const TwistingElement& x) {
  TwistingReport r;
  try {
    check_twisting_shape(a, x);
  } catch (const DegreeError& e) {
    r.passed = false;
    r.message = e.what();
    return r;
  }
  const int n = x.truncation;
  std::vector<DgaElement> parts(static_cast<std::size_t>(n) + 1);
  for (int k = 2; k <= n; ++k) parts[static_cast<std::size_t>(k)] = a.perturbation_part(x.value, k);
  for (int k = 2; k <= n; ++k) {
    DgaElement defect = a.d(parts[static_cast<std::size_t>(k)]);
    for (int i = 2; i <= k - 1; ++i) {
      defect += a.multiply(parts[static_cast<std::size_t>(i)], parts[static_cast<std::size_t>(k + 1 - i)]);
    }
    if (!defect.isZero()) {
      r.passed = false;
      r.failed_level = k;
      r.message = "d(a^" + std::to_string(k) + ") + sum a^i a^j = " + a.format(defect);
      return r;
    }
  }
  return r;
}

DgaElement gauge_inverse(const BigradedDga& a, const GaugeElement& p) {
  check_gauge_shape(a, p);
  const int cut = p.truncation - 1;
  DgaElement out = a.unit();
  DgaElement power = a.unit();
  const DgaElement minus = -p.p_prime;
  for (int k = 1; k <= cut; ++k) {
    power = a.multiply(power, minus, cut);
    if (power.isZero()) break;
    out += power;
  }
  return out;
}

GaugeElement gauge_product(const BigradedDga& a, const GaugeElement& p, const GaugeElement& q) {
  check_gauge_shape(a, p);
  check_gauge_shape(a, q);
  if (p.truncation != q.truncation) throw DomainError("truncation levels differ");
  const int cut = p.truncation - 1;
  return {p.truncation, p.p_prime + q.p_prime + a.multiply(p.p_prime, q.p_prime, cut)};
}

TwistingElement gauge_act(const BigradedDga& a, const TwistingElement& x, const GaugeElement& p) {
  check_twisting_shape(a, x);
  check_gauge_shape(a, p);
  check_same_level(x, p);
  const int n = x.truncation;
  const DgaElement inv = gauge_inverse(a, p);
  const DgaElement full = a.unit() + p.p_prime;
  DgaElement out = a.multiply(a.multiply(inv, x.value, n), full, n) +
                   a.multiply(inv, a.truncate(a.d(p.p_prime), n), n);
  TwistingElement result{n, a.truncate(out, n)};
  check_twisting_shape(a, result);
  return result;
}

bool orbit_relation_holds(const BigradedDga& a, const TwistingElement& x, const TwistingElement& y,
                          const GaugeElement& p) {
  check_same_level(x, p);
  check_same_level(y, p);
  const int n = x.truncation;
  const DgaElement rhs = a.multiply(x.value, p.p_prime, n) - a.multiply(p.p_prime, y.value, n) +
                         a.truncate(a.d(p.p_prime), n);
  return y.value - x.value == rhs;
}

std::string to_string(GaugeVerdict v) {
  switch (v) {
    case GaugeVerdict::equivalent: return "equivalent";
    case GaugeVerdict::refuted: return "refuted";
    case GaugeVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

class GaugeSearch {
 public:
  GaugeSearch(const BigradedDga& a, const TwistingElement& x, const TwistingElement& y,
              std::size_t node_limit)
      : a_(a), n_(x.truncation), node_limit_(node_limit) {
    for (int k = 0; k <= n_; ++k) {
      xs_.push_back(a.perturbation_part(x.value, k));
      ys_.push_back(a.perturbation_part(y.value, k));
    }
  }

  /// true when a witness was found with kernel coefficients bounded by box
  bool run(int box) {
    box_ = box;
    ps_.assign(static_cast<std::size_t>(n_), a_.zero());
    return level(2);
  }

  [[nodiscard]] GaugeElement witness() const {
    DgaElement p = a_.zero();
    for (const auto& part : ps_) p += part;
    return {n_, p};
  }

  bool used_kernel = false;
  bool hit_limit = false;
  int deepest = 1;
  int first_failure = 0;
  std::size_t nodes = 0;

 private:
  bool level(int l) {
    if (l > n_) return true;
    deepest = std::max(deepest, l);
    if (++nodes > node_limit_) {
      hit_limit = true;
      return false;
    }
    const auto L = static_cast<std::size_t>(l);
    DgaElement rhs = ys_[L] - xs_[L];
    for (int i = 2; i <= l - 1; ++i) {
      const auto& pj = ps_[static_cast<std::size_t>(l - i)];
      rhs -= a_.multiply(xs_[static_cast<std::size_t>(i)], pj) - a_.multiply(pj, ys_[static_cast<std::size_t>(i)]);
    }
    const Bidegree unknown{l - 1, 1 - l};
    const Bidegree target{l, 1 - l};
    if (rhs != a_.project(rhs, target)) throw DomainError("internal: level equation leaves its bidegree");
    const IntMatrix dm = a_.differential_matrix(unknown);
    const IntVector b = a_.coordinates(rhs, target);
    std::optional<IntegerSolution<Integer>> sol;
    if (dm.cols() == 0) {
      if (b.isZero()) sol = IntegerSolution<Integer>{IntVector(0), IntMatrix(0, 0)};
    } else if (dm.rows() == 0) {
      sol = IntegerSolution<Integer>{IntVector::Constant(dm.cols(), Integer(0)),
                                     IntMatrix::Identity(dm.cols(), dm.cols())};
    } else {
      sol = solve_integer(dm, b);
    }
    if (!sol) {
      if (first_failure == 0 || l < first_failure) first_failure = l;
      return false;
    }
    const Index k = sol->kernel.cols();
    if (k > 0 && l < n_) used_kernel = true;
    std::vector<int> c(static_cast<std::size_t>(k), -box_);
    while (true) {
      IntVector coords = sol->particular;
      for (Index j = 0; j < k; ++j) coords += Integer(c[static_cast<std::size_t>(j)]) * sol->kernel.col(j);
      ps_[static_cast<std::size_t>(l - 1)] = a_.embed(coords, unknown);
      if (level(l + 1)) return true;
      if (hit_limit) return false;
      Index j = 0;
      while (j < k && c[static_cast<std::size_t>(j)] == box_) c[static_cast<std::size_t>(j++)] = -box_;
      if (j == k) break;
      ++c[static_cast<std::size_t>(j)];
    }
    ps_[static_cast<std::size_t>(l - 1)] = a_.zero();
    return false;
  }

  const BigradedDga& a_;
  int n_;
  std::size_t node_limit_;
  int box_ = 0;
  std::vector<DgaElement> xs_, ys_, ps_;
};

}  // namespace

GaugeSearchResult gauge_equivalent(const BigradedDga& a, const TwistingElement& x,
                                   const TwistingElement& y, int budget, std::size_t node_limit) {
  if (x.truncation != y.truncation) throw DomainError("truncation levels differ");
  for (const auto* e : {&x, &y}) {
    const auto rep = is_twisting(a, *e);
    if (!rep.passed) throw PreconditionError("not a twisting element: " + rep.message);
  }
  GaugeSearchResult out;
  GaugeSearch search(a, x, y, node_limit);
  for (int box = 0; box <= std::max(budget, 0); ++box) {
    out.box = box;
    if (search.run(box)) {
      auto w = search.witness();
      if (!orbit_relation_holds(a, x, y, w)) throw DomainError("internal: witness fails verification");
      out.verdict = GaugeVerdict::equivalent;
      out.witness = std::move(w);
      out.level = x.truncation;
      out.nodes = search.nodes;
      out.certificate = "p' = " + a.format(out.witness->p_prime);
      return out;
    }
    if (search.first_failure == 2) {
      out.verdict = GaugeVerdict::refuted;
      out.level = 2;
      out.nodes = search.nodes;
      out.certificate = "b^2 - a^2 = " + a.format(a.perturbation_part(y.value - x.value, 2)) +
                        " is not a coboundary";
      return out;
    }
    if (!search.used_kernel && !search.hit_limit) {
      out.verdict = GaugeVerdict::refuted;
      out.level = search.first_failure;
      out.nodes = search.nodes;
      out.certificate = "level " + std::to_string(search.first_failure) +
                        " equation unsolvable and every earlier level was forced";
      return out;
    }
    if (search.hit_limit) break;
  }
  out.verdict = GaugeVerdict::inconclusive;
  out.level = search.deepest;
  out.nodes = search.nodes;
  out.certificate = "no witness with kernel coefficients bounded by " + std::to_string(out.box) +
                    (search.hit_limit ? " (node limit)" : "");
  return out;
}

TwistingElement push_twisting(const DgaMap& phi, const TwistingElement& x) {
  check_twisting_shape(*phi.source, x);
  if (const auto defect = dga_map_defect(phi, x.truncation)) {
    throw DomainError("not a dga map: " + *defect);
  }
  return {x.truncation, phi(x.value)};
}

GaugeElement push_gauge(const DgaMap& phi, const GaugeElement& p) {
  check_gauge_shape(*phi.source, p);
  if (const auto defect = dga_map_defect(phi, p.truncation)) {
    throw DomainError("not a dga map: " + *defect);
  }
  return {p.truncation, phi(p.p_prime)};
}

HomotopyOrbitReport homotopy_orbit_check(const DgaMap& f, const DgaMap& g, const IntMatrix& s,
                                         const TwistingElement& x) {
  HomotopyOrbitReport r;
  auto fail = [&](std::string law, std::string element) {
    r.passed = false;
    r.law = std::move(law);
    r.element = std::move(element);
    return r;
  };
  const auto& a = *f.source;
  const auto& b = *f.target;
  const int n = x.truncation;
  if (g.source.get() != f.source.get() || g.target.get() != f.target.get()) {
    return fail("f and g share source and target", "");
  }
  if (s.rows() != b.dimension() || s.cols() != a.dimension()) return fail("shape of s", "");
  for (Index j = 0; j < a.dimension(); ++j) {
    for (Index i = 0; i < b.dimension(); ++i) {
      if (!s(i, j).is_zero() && b.basis(i).degree != a.basis(j).degree + Bidegree{-1, 0}) {
        return fail("s has bidegree (-1,0)", a.basis(j).name);
      }
    }
  }
  if (const auto d = dga_map_defect(f, n)) return fail("f is a dga map", *d);
  if (const auto d = dga_map_defect(g, n)) return fail("g is a dga map", *d);
  auto cut = [&](const DgaElement& v) { return b.truncate(v, n); };
  for (Index j = 0; j < a.dimension(); ++j) {
    const DgaElement e = a.basis_vector(j);
    const DgaElement lhs = f(e) - g(e);
    const DgaElement rhs = s * a.d(e) + b.d(s * e);
    if (cut(lhs) != cut(rhs)) return fail("f - g = sd + ds", a.basis(j).name);
  }
  for (Index i = 0; i < a.dimension(); ++i) {
    const DgaElement fi = f.matrix.col(i), gi = g.matrix.col(i);
    const DgaElement si = s.col(i);
    for (Index j = 0; j < a.dimension(); ++j) {
      DgaElement prod = a.zero();
      for (const auto& [k, c] : a.basis_product(i, j)) prod(k) += c;
      const DgaElement lhs = s * prod;
      const DgaElement rhs = Integer(parity_sign(a.total_degree(i))) * b.multiply(fi, s.col(j), n) +
                             b.multiply(si, g.matrix.col(j), n);
      if (cut(lhs) != rhs) {
        return fail("s(xy) = (-1)^|x| f(x)s(y) + s(x)g(y)", a.basis(i).name + ", " + a.basis(j).name);
      }
    }
  }
  const TwistingElement fa{n, cut(f(x.value))};
  const TwistingElement ga{n, cut(g(x.value))};
  GaugeElement p{n, cut(-(s * x.value))};
  try {
    check_gauge_shape(b, p);
  } catch (const DegreeError& e) {
    return fail("p' = -s(a) is a gauge element", e.what());
  }
  if (!orbit_relation_holds(b, fa, ga, p)) return fail("g(a) - f(a) = f(a)p' - p'g(a) + dp'", "a");
  if (gauge_act(b, fa, p).value != ga.value) return fail("f(a) * (1 + p') = g(a)", "a");
  r.witness = std::move(p);
  return r;
}

// ---------------------------------------------------------------------------

namespace {

using Word = std::vector<int>;

int weight(const Word& w) {
  int s = 0;
  for (int r : w) s += r;
  return s;
}

std::string word_name(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (int r : w) out += "a" + std::to_string(r);
  return out;
}

/// Words in letters >= 2 of weight <= top, by weight then length then lexicographic.
std::vector<Word> words_up_to(int top) {
  std::vector<Word> out{{}};
  std::function<void(Word&, int)> rec = [&](Word& w, int left) {
    for (int r = 2; r <= left; ++r) {
      w.push_back(r);
      out.push_back(w);
      rec(w, left - r);
      w.pop_back();
    }
  };
  Word w;
  rec(w, top);
  std::stable_sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    if (weight(a) != weight(b)) return weight(a) < weight(b);
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace

UniversalTwisting universal_twisting_dga(int truncation) {
  if (truncation < 2) throw DomainError("truncation must be at least 2");
  if (truncation > 12) throw SizeError("universal twisting dga above truncation 12");
  const int top = truncation + 1;
  const auto words = words_up_to(top);
  std::map<Word, Index> index;
  std::vector<BasisElement> basis;
  for (const auto& w : words) {
    index.emplace(w, static_cast<Index>(basis.size()));
    basis.push_back({word_name(w), {weight(w), static_cast<int>(w.size()) - weight(w)}});
  }
  std::map<Index, SparseVector> d;
  for (const auto& w : words) {
    std::map<Index, Integer> acc;
    for (std::size_t k = 0; k < w.size(); ++k) {
      const Integer sign(-parity_sign(static_cast<int>(k)));
      for (int i = 2; i <= w[k] - 1; ++i) {
        Word v(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
        v.push_back(i);
        v.push_back(w[k] + 1 - i);
        v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(k) + 1, w.end());
        const auto it = index.find(v);
        if (it != index.end()) acc[it->second] += sign;
      }
    }
    SparseVector img;
    for (const auto& [i, c] : acc) {
      if (!c.is_zero()) img.emplace_back(i, c);
    }
    if (!img.empty()) d.emplace(index.at(w), std::move(img));
  }
  std::map<std::pair<Index, Index>, SparseVector> products;
  for (const auto& u : words) {
    for (const auto& v : words) {
      if (weight(u) + weight(v) > top) continue;
      Word uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      products[{index.at(u), index.at(v)}] = {{index.at(uv), Integer(1)}};
    }
  }
  DgaElement unit = DgaElement::Constant(static_cast<Index>(basis.size()), Integer(0));
  unit(0) = 1;
  auto dga = std::make_shared<TableDga>(std::move(basis), d, std::move(products), std::move(unit));
  DgaElement a = dga->zero();
  for (int r = 2; r <= truncation; ++r) a(index.at(Word{r})) = 1;
  return {dga, {truncation, a}};
}

namespace {

/// Parses a basis name of the universal dga back into its word.
Word word_of(const BasisElement& e) {
  Word w;
  if (e.name == "1") return w;
  std::size_t pos = 0;
  while (pos < e.name.size()) {
    const std::size_t next = e.name.find('a', pos + 1);
    w.push_back(std::stoi(e.name.substr(pos + 1, next - pos - 1)));
    pos = next == std::string::npos ? e.name.size() : next;
  }
  return w;
}

DgaMap map_from_letters(const UniversalTwisting& u, const DgaPtr& target,
                        const std::vector<DgaElement>& letters) {
  const auto& src = *u.dga;
  IntMatrix m = IntMatrix::Constant(target->dimension(), src.dimension(), Integer(0));
  for (Index j = 0; j < src.dimension(); ++j) {
    DgaElement img = target->unit();
    for (int r : word_of(src.basis(j))) {
      img = static_cast<std::size_t>(r) < letters.size() ? target->multiply(img, letters[static_cast<std::size_t>(r)])
                                                         : target->zero();
    }
    m.col(j) = img;
  }
  return DgaMap{u.dga, target, m};
}

std::vector<DgaElement> letters_of(const BigradedDga& b, const TwistingElement& x) {
  std::vector<DgaElement> out(static_cast<std::size_t>(x.truncation) + 1, b.zero());
  for (int r = 2; r <= x.truncation; ++r) out[static_cast<std::size_t>(r)] = b.perturbation_part(x.value, r);
  return out;
}

}  // namespace

DgaMap classifying_map(const UniversalTwisting& u, DgaPtr target, const TwistingElement& b) {
  check_twisting_shape(*target, b);
  if (b.truncation != u.a.truncation) throw DomainError("truncation levels differ");
  return map_from_letters(u, target, letters_of(*target, b));
}

HomotopyTriple construct_homotopy_triple(const UniversalTwisting& u, DgaPtr target,
                                         const TwistingElement& b, const GaugeElement& sigma) {
  const auto& B = *target;
  const int n = b.truncation;
  check_twisting_shape(B, b);
  check_gauge_shape(B, sigma);
  if (sigma.truncation != n || u.a.truncation != n) throw DomainError("truncation levels differ");
  const auto fl = letters_of(B, b);
  std::vector<DgaElement> sl(static_cast<std::size_t>(n) + 1, B.zero());
  for (int r = 2; r <= n; ++r) sl[static_cast<std::size_t>(r)] = B.perturbation_part(sigma.p_prime, r - 1);
  std::vector<DgaElement> gl(static_cast<std::size_t>(n) + 1, B.zero());
  for (int r = 2; r <= n; ++r) {
    // s(d a^r) = -sum s(a^i a^j) = sum (f(a^i) s(a^j) - s(a^i) g(a^j))
    DgaElement sd = B.zero();
    for (int i = 2; i <= r - 1; ++i) {
      const auto j = static_cast<std::size_t>(r + 1 - i);
      sd += B.multiply(fl[static_cast<std::size_t>(i)], sl[j]) - B.multiply(sl[static_cast<std::size_t>(i)], gl[j]);
    }
    gl[static_cast<std::size_t>(r)] = fl[static_cast<std::size_t>(r)] - sd - B.d(sl[static_cast<std::size_t>(r)]);
  }
  HomotopyTriple t{classifying_map(u, target, b), map_from_letters(u, target, gl), IntMatrix()};
  const auto& src = *u.dga;
  t.s = IntMatrix::Constant(B.dimension(), src.dimension(), Integer(0));
  for (Index j = 0; j < src.dimension(); ++j) {
    const Word w = word_of(src.basis(j));
    DgaElement total = B.zero();
    for (std::size_t m = 0; m < w.size(); ++m) {
      if (static_cast<std::size_t>(w[m]) >= sl.size()) continue;
      DgaElement term = B.unit();
      for (std::size_t k = 0; k < m; ++k) {
        term = static_cast<std::size_t>(w[k]) < fl.size() ? B.multiply(term, fl[static_cast<std::size_t>(w[k])]) : B.zero();
      }
      term = B.multiply(term, sl[static_cast<std::size_t>(w[m])]);
      for (std::size_t k = m + 1; k < w.size(); ++k) {
        term = static_cast<std::size_t>(w[k]) < gl.size() ? B.multiply(term, gl[static_cast<std::size_t>(w[k])]) : B.zero();
      }
      total += Integer(parity_sign(static_cast<int>(m))) * term;
    }
    t.s.col(j) = total;
  }
  return t;
}

}  // namespace hirsch
