#include "hirsch/resolution.hpp"

#include "hirsch/homology.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace hirsch {

namespace {

bool odd(int k) { return (k % 2) != 0; }

std::string letter_name(const Alphabet& al, const Cup1Monomial& m) {
  return format_letter(al, m, false);
}

std::string content_string(const Alphabet& al, const std::vector<GeneratorId>& content) {
  std::string out;
  for (std::size_t i = 0; i < content.size();) {
    std::size_t j = i;
    while (j < content.size() && content[j] == content[i]) ++j;
    if (!out.empty()) out += " ";
    out += al[content[i]].name;
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace

ValidationReport validate_presentation(const CgaPresentation& p) {
  ValidationReport r;
  auto fail = [&r](std::string msg) {
    r.passed = false;
    r.violations.push_back(std::move(msg));
  };
  if (p.m && *p.m < 1) fail("m must be a positive integer, got " + std::to_string(*p.m));
  std::set<std::string> names;
  for (const auto& g : p.generators) {
    if (g.name.empty()) fail("generator with empty name");
    if (!names.insert(g.name).second) fail("duplicate generator '" + g.name + "'");
    if (g.degree < 1) {
      fail("generator '" + g.name + "' has non-positive degree " + std::to_string(g.degree));
      continue;
    }
    const bool in_range = !p.m || g.degree <= *p.m + 1;
    if (odd(g.degree) && in_range) {
      fail("odd generator '" + g.name + "' of degree " + std::to_string(g.degree) +
           (p.m ? " in range <= m+1 = " + std::to_string(*p.m + 1)
                : std::string(" in a polynomial (m = infinity) presentation")) +
           ": an m-relation-free algebra vanishes in odd degrees there");
    }
  }
  return r;
}

std::vector<GeneratorId> word_content(const MixedWord& w) {
  std::vector<GeneratorId> out;
  for (const auto& l : w) out.insert(out.end(), l.factors.begin(), l.factors.end());
  std::sort(out.begin(), out.end());
  return out;
}

Resolution::Resolution(CgaPresentation presentation, int range)
    : presentation_(std::move(presentation)), range_(range) {
  std::vector<Generator> gens;
  for (const auto& g : presentation_.generators) {
    if (g.degree <= range_) gens.push_back({g.name, {0, g.degree}});
  }
  alphabet_ = make_alphabet(std::move(gens));
  const auto n = static_cast<GeneratorId>(alphabet_->size());

  // bundles: subsets of size >= 2 with 1 <= total <= range; totals grow with
  // every added factor (degrees >= 2), so the search prunes on the total.
  std::vector<Cup1Monomial> bundles;
  std::vector<GeneratorId> cur;
  std::function<void(GeneratorId, int)> rec = [&](GeneratorId start, int total) {
    for (GeneratorId g = start; g < n; ++g) {
      const int deg = (*alphabet_)[g].degree.second;
      const int next = cur.empty() ? deg : total + deg - 1;
      if (next > range_) continue;
      cur.push_back(g);
      if (cur.size() >= 2 && next >= 1) bundles.push_back(Cup1Monomial{cur});
      rec(g + 1, next);
      cur.pop_back();
    }
  };
  rec(0, 0);
  std::stable_sort(bundles.begin(), bundles.end(), [](const auto& a, const auto& b) {
    return a.length() < b.length();
  });

  const Derivation ambient(alphabet_, {});
  for (GeneratorId g = 0; g < n; ++g) {
    generators_.push_back(Cup1Monomial{{g}});
    images_.emplace(generators_.back(), MixedElement(alphabet_));
  }
  for (auto& b : bundles) {
    generators_.push_back(b);
    images_.emplace(b, MixedElement(alphabet_));
  }
  // bundles are ordered by length, so every letter in d(b) is already known
  for (const auto& b : bundles) images_.at(b) = cup1_boundary(b, ambient);
}

const MixedElement& Resolution::image(const Cup1Monomial& m) const {
  auto it = images_.find(m);
  if (it == images_.end()) {
    throw DomainError("'" + letter_name(*alphabet_, m) + "' is not a generator in range " +
                      std::to_string(range_));
  }
  return it->second;
}

MixedElement Resolution::d(const MixedElement& x) const {
  x.check_same_universe(MixedElement(alphabet_));
  return apply_derivation(x, [this](const Cup1Monomial& l) -> const MixedElement& {
    return image(l);
  });
}

Polynomial Resolution::augmentation(const MixedElement& x) const {
  Polynomial out;
  for (const auto& [w, c] : x.terms()) {
    if (std::any_of(w.begin(), w.end(), [](const auto& l) { return !l.is_plain(); })) continue;
    CommutativeMonomial mono(alphabet_->size(), 0);
    for (const auto& l : w) ++mono[l.factors.front()];
    auto [it, inserted] = out.try_emplace(mono, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

MixedElement Resolution::letter(const Cup1Monomial& m) const {
  (void)image(m);
  return MixedElement::letter(alphabet_, m);
}

MixedElement Resolution::plain_letter(std::string_view name) const {
  return letter(Cup1Monomial{{alphabet_->id(name)}});
}

Resolution Resolution::with_generator_differential(const Cup1Monomial& m,
                                                   MixedElement new_image) const {
  new_image.check_same_universe(MixedElement(alphabet_));
  (void)image(m);
  const Bidegree want = letter_bidegree(*alphabet_, m) + Bidegree{1, 0};
  if (!new_image.is_zero() && new_image.bidegree() != std::optional<Bidegree>(want)) {
    throw DegreeError("replacement differential has the wrong bidegree");
  }
  Resolution out = *this;
  out.images_.at(m) = std::move(new_image);
  return out;
}

Resolution build_resolution(const CgaPresentation& p, std::optional<int> truncation) {
  const auto report = validate_presentation(p);
  if (!report.passed) {
    std::string msg = "presentation is not m-relation free:";
    for (const auto& v : report.violations) msg += " " + v + ";";
    throw DomainError(msg);
  }
  if (!p.m && !truncation) {
    throw DomainError("m = infinity needs an explicit truncation degree");
  }
  int range = p.m ? *p.m : *truncation;
  if (truncation) {
    if (*truncation < 1) throw DomainError("truncation must be positive");
    range = std::min(range, *truncation);
  }
  return Resolution(p, range);
}

DifferentialSquareReport check_d_squared(const Resolution& r) {
  DifferentialSquareReport report;
  for (const auto& g : r.generators()) {
    MixedElement dd = r.d(r.image(g));
    if (!dd.is_zero()) {
      report.passed = false;
      report.failing_generator = g;
      report.witness = std::move(dd);
      return report;
    }
  }
  return report;
}

namespace {

using Content = std::vector<GeneratorId>;

/// Words with the given letter content and resolution degree exactly -k whose
/// letters are generators of r.
void enumerate_words(const Resolution& r, std::vector<int>& counts, int remaining, int k_left,
                     MixedWord& cur, std::vector<MixedWord>& out) {
  if (remaining == 0) {
    if (k_left == 0) out.push_back(cur);
    return;
  }
  const int max_mult = *std::max_element(counts.begin(), counts.end());
  if (k_left > remaining - max_mult) return;
  std::vector<GeneratorId> present;
  for (GeneratorId g = 0; g < counts.size(); ++g) {
    if (counts[g] > 0) present.push_back(g);
  }
  const unsigned limit = 1u << present.size();
  for (unsigned mask = 1; mask < limit; ++mask) {
    Cup1Monomial letter;
    for (std::size_t i = 0; i < present.size(); ++i) {
      if ((mask >> i) & 1u) letter.factors.push_back(present[i]);
    }
    const int reduction = static_cast<int>(letter.length()) - 1;
    if (reduction > k_left || !r.has_generator(letter)) continue;
    for (auto g : letter.factors) --counts[g];
    cur.push_back(letter);
    enumerate_words(r, counts, remaining - static_cast<int>(letter.length()), k_left - reduction,
                    cur, out);
    cur.pop_back();
    for (auto g : letter.factors) ++counts[g];
  }
}

std::vector<MixedWord> words_of(const Resolution& r, const Content& content, int k) {
  std::vector<int> counts(r.alphabet()->size(), 0);
  for (auto g : content) ++counts[g];
  std::vector<MixedWord> out;
  MixedWord cur;
  enumerate_words(r, counts, static_cast<int>(content.size()), k, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

int max_resolution_degree(const Content& c) {
  int max_mult = 0;
  for (std::size_t i = 0; i < c.size();) {
    std::size_t j = i;
    while (j < c.size() && c[j] == c[i]) ++j;
    max_mult = std::max(max_mult, static_cast<int>(j - i));
    i = j;
  }
  return static_cast<int>(c.size()) - max_mult;
}

int internal_degree(const Alphabet& al, const Content& c) {
  int q = 0;
  for (auto g : c) q += al[g].degree.second;
  return q;
}

struct WordIndex {
  std::vector<MixedWord> words;
  std::map<MixedWord, Index> index;

  Index add(const MixedWord& w) {
    auto [it, inserted] = index.try_emplace(w, static_cast<Index>(words.size()));
    if (inserted) words.push_back(w);
    return it->second;
  }
  [[nodiscard]] std::optional<Index> find(const MixedWord& w) const {
    auto it = index.find(w);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
};

struct StratumOutcome {
  bool escaped = false;  // d left the stratum
  bool passed = true;
  std::string failure;
};

class Certifier {
 public:
  explicit Certifier(const Resolution& r) : r_(r), al_(*r.alphabet()) {}

  StratumOutcome check(const std::vector<Content>& contents, CertificationReport& report) {
    StratumOutcome outcome;
    const int q = internal_degree(al_, contents.front());
    const int k_lo = std::max(0, q - r_.range());
    int k_hi = 0;
    for (const auto& c : contents) k_hi = std::max(k_hi, max_resolution_degree(c));
    if (k_lo > k_hi) return outcome;

    std::vector<WordIndex> levels(static_cast<std::size_t>(k_hi - k_lo + 1));
    for (int k = k_lo; k <= k_hi; ++k) {
      for (const auto& c : contents) {
        for (auto& w : words_of(r_, c, k)) levels[static_cast<std::size_t>(k - k_lo)].add(w);
      }
    }

    std::vector<SparseIntMatrix> boundaries;
    // bottom map: rho when k_lo = 0, otherwise d into whatever it hits
    const auto& base = levels.front();
    if (k_lo == 0) {
      std::map<Content, Index> rows;
      for (const auto& c : contents) rows.emplace(c, static_cast<Index>(rows.size()));
      SparseIntMatrix rho(static_cast<Index>(rows.size()), static_cast<Index>(base.words.size()));
      for (Index j = 0; j < static_cast<Index>(base.words.size()); ++j) {
        rho.add(rows.at(word_content(base.words[static_cast<std::size_t>(j)])), j, 1);
      }
      boundaries.push_back(std::move(rho));
    } else {
      WordIndex below;
      std::vector<std::vector<std::pair<Index, Integer>>> cols;
      for (const auto& w : base.words) {
        auto& col = cols.emplace_back();
        const auto dw = r_.d(MixedElement::word(r_.alphabet(), w));
        for (const auto& [v, c] : dw.terms()) {
          col.emplace_back(below.add(v), c);
        }
      }
      SparseIntMatrix m(static_cast<Index>(below.words.size()), static_cast<Index>(cols.size()));
      for (std::size_t j = 0; j < cols.size(); ++j) {
        for (const auto& [i, c] : cols[j]) m.add(i, static_cast<Index>(j), c);
      }
      boundaries.push_back(std::move(m));
    }
    for (int k = k_lo + 1; k <= k_hi; ++k) {
      const auto& src = levels[static_cast<std::size_t>(k - k_lo)];
      const auto& dst = levels[static_cast<std::size_t>(k - k_lo - 1)];
      SparseIntMatrix m(static_cast<Index>(dst.words.size()), static_cast<Index>(src.words.size()));
      for (Index j = 0; j < static_cast<Index>(src.words.size()); ++j) {
        const auto dw = r_.d(MixedElement::word(r_.alphabet(), src.words[static_cast<std::size_t>(j)]));
        for (const auto& [v, c] : dw.terms()) {
          const auto i = dst.find(v);
          if (!i) {
            outcome.escaped = true;
            return outcome;
          }
          m.add(*i, j, c);
        }
      }
      boundaries.push_back(std::move(m));
    }

    const auto h = homology(ChainComplex(std::move(boundaries)));
    auto record = [&](int t, Index rank, bool ok) {
      if (t < 0) return;
      if (report.degrees.size() <= static_cast<std::size_t>(t)) {
        const auto old = report.degrees.size();
        report.degrees.resize(static_cast<std::size_t>(t) + 1);
        for (auto i = old; i < report.degrees.size(); ++i) {
          report.degrees[i].total_degree = static_cast<int>(i);
        }
      }
      auto& cert = report.degrees[static_cast<std::size_t>(t)];
      ++cert.positions;
      cert.max_rank = std::max(cert.max_rank, rank);
      cert.passed = cert.passed && ok;
    };
    std::string label = content_string(al_, contents.front());
    if (contents.size() > 1) label = "internal degree " + std::to_string(q);
    if (k_lo == 0) {
      const bool ok = h[0].is_trivial();
      record(q, static_cast<Index>(contents.size()), ok);
      if (!ok && outcome.passed) {
        outcome.passed = false;
        outcome.failure = "augmentation not onto at content " + label + ": cokernel " +
                          h[0].to_string();
      }
    }
    for (int k = k_lo; k <= k_hi; ++k) {
      const auto& hk = h[static_cast<std::size_t>(k - k_lo + 1)];
      const auto rank = static_cast<Index>(levels[static_cast<std::size_t>(k - k_lo)].words.size());
      const bool ok = hk.is_trivial();
      record(q - k, rank, ok);
      if (!ok && outcome.passed) {
        outcome.passed = false;
        outcome.failure = (k == 0 ? std::string("ker rho != im d") : "homology " + hk.to_string()) +
                          " at bidegree (" + std::to_string(-k) + "," + std::to_string(q) +
                          "), content " + label +
                          (k == 0 ? " (quotient " + hk.to_string() + ")" : "");
      }
    }
    return outcome;
  }

 private:
  const Resolution& r_;
  const Alphabet& al_;
};

}  // namespace

CertificationReport certify_resolution(const Resolution& r) {
  CertificationReport report;
  const Alphabet& al = *r.alphabet();
  const int range = r.range();

  for (const auto& g : r.generators()) {
    const auto rho_d = r.augmentation(r.image(g));
    if (!rho_d.empty()) {
      report.passed = false;
      report.failure = "rho o d != 0 on generator " + format_letter(al, g, false) +
                       ": d = " + r.image(g).to_string();
      return report;
    }
  }

  // contents with q - |C| + 1 <= range; every factor adds deg - 1 >= 1
  std::vector<Content> contents;
  Content cur;
  std::function<void(GeneratorId, int)> rec = [&](GeneratorId start, int excess) {
    for (GeneratorId g = start; g < al.size(); ++g) {
      const int next = excess + al[g].degree.second - 1;
      if (next + 1 > range) continue;
      cur.push_back(g);
      contents.push_back(cur);
      rec(g, next);
      cur.pop_back();
    }
  };
  rec(0, 0);

  Certifier certifier(r);
  std::map<int, std::vector<Content>> fallback;
  for (const auto& c : contents) {
    auto outcome = certifier.check({c}, report);
    if (outcome.escaped) {
      fallback[internal_degree(al, c)];
      continue;
    }
    if (!outcome.passed && report.passed) {
      report.passed = false;
      report.failure = outcome.failure;
    }
  }
  if (!fallback.empty()) {
    // d does not preserve letter content; regroup by internal degree
    report.content_strata = false;
    report.degrees.clear();
    report.passed = true;
    report.failure.clear();
    std::map<int, std::vector<Content>> by_q;
    for (const auto& c : contents) by_q[internal_degree(al, c)].push_back(c);
    for (const auto& [q, group] : by_q) {
      auto outcome = certifier.check(group, report);
      if (outcome.escaped) throw DomainError("differential leaves its internal degree");
      if (!outcome.passed && report.passed) {
        report.passed = false;
        report.failure = outcome.failure;
      }
    }
  }
  return report;
}

std::optional<MixedElement> solve_boundary(const Resolution& r, const MixedElement& rhs) {
  MixedElement out(r.alphabet());
  if (rhs.is_zero()) return out;
  const auto bd = rhs.bidegree();
  if (!bd) throw DegreeError("solve_boundary needs a homogeneous right-hand side");
  const int k = 1 - bd->first;
  if (k < 1) return std::nullopt;

  std::map<Content, MixedElement> parts;
  for (const auto& [w, c] : rhs.terms()) {
    parts.try_emplace(word_content(w), r.alphabet()).first->second.add_term(w, c);
  }
  for (const auto& [content, part] : parts) {
    const auto unknowns = words_of(r, content, k);
    WordIndex rows;
    std::vector<MixedElement> images;
    for (const auto& w : unknowns) {
      images.push_back(r.d(MixedElement::word(r.alphabet(), w)));
      for (const auto& [v, c] : images.back().terms()) rows.add(v);
    }
    for (const auto& [v, c] : part.terms()) rows.add(v);
    IntMatrix a = IntMatrix::Zero(static_cast<Index>(rows.words.size()),
                                  static_cast<Index>(unknowns.size()));
    for (std::size_t j = 0; j < images.size(); ++j) {
      for (const auto& [v, c] : images[j].terms()) a(*rows.find(v), static_cast<Index>(j)) = c;
    }
    IntVector b = IntVector::Zero(static_cast<Index>(rows.words.size()));
    for (const auto& [v, c] : part.terms()) b(*rows.find(v)) = c;
    const auto sol = solve_integer(a, b);
    if (!sol) return std::nullopt;
    for (std::size_t j = 0; j < unknowns.size(); ++j) {
      out.add_term(unknowns[j], sol->particular(static_cast<Index>(j)));
    }
  }
  return out;
}

MixedElement ResolutionMap::operator()(const MixedElement& x) const {
  x.check_same_universe(MixedElement(source->alphabet()));
  MixedElement out(target->alphabet());
  for (const auto& [w, c] : x.terms()) {
    MixedElement term = MixedElement::unit(target->alphabet(), c);
    for (const auto& l : w) {
      term = term * image(l);
      if (term.is_zero()) break;
    }
    out.add(term);
  }
  return out;
}

const MixedElement& ResolutionMap::image(const Cup1Monomial& m) const {
  auto it = images.find(m);
  if (it == images.end()) {
    throw DomainError("map undefined on '" + format_letter(*source->alphabet(), m, false) + "'");
  }
  return it->second;
}

std::optional<Cup1Monomial> chain_map_defect(const ResolutionMap& f) {
  for (const auto& g : f.source->generators()) {
    if (f(f.source->image(g)) != f.target->d(f.image(g))) return g;
  }
  return std::nullopt;
}

ResolutionMap build_rh_map(const std::map<std::string, TensorElement>& f_on_generators,
                           ResolutionPtr source, ResolutionPtr target) {
  const Alphabet& sal = *source->alphabet();
  ResolutionMap f{source, target, {}};
  for (const auto& [name, img] : f_on_generators) {
    if (!sal.find(name)) {
      bool known = false;
      for (const auto& g : source->presentation().generators) known = known || g.name == name;
      if (!known) throw DomainError("unknown source generator '" + name + "'");
    }
  }
  for (GeneratorId g = 0; g < sal.size(); ++g) {
    MixedElement img(target->alphabet());
    if (auto it = f_on_generators.find(sal[g].name); it != f_on_generators.end()) {
      img = to_mixed(it->second);
      img.check_same_universe(MixedElement(target->alphabet()));
    }
    if (!img.is_zero() && img.bidegree() != std::optional<Bidegree>(sal[g].degree)) {
      throw DegreeError("image of '" + sal[g].name + "' is not homogeneous of bidegree " +
                        to_string(sal[g].degree));
    }
    f.images.emplace(Cup1Monomial{{g}}, std::move(img));
  }
  for (const auto& b : source->generators()) {
    if (b.is_plain()) continue;
    MixedElement acc = f.images.at(Cup1Monomial{{b.factors.back()}});
    for (auto it = b.factors.rbegin() + 1; it != b.factors.rend(); ++it) {
      acc = cup1_product(f.images.at(Cup1Monomial{{*it}}), acc);
    }
    for (const auto& [w, c] : acc.terms()) {
      for (const auto& l : w) {
        if (!target->has_generator(l)) {
          throw DomainError("image of '" + format_letter(sal, b, false) +
                            "' leaves the target range");
        }
      }
    }
    f.images.emplace(b, std::move(acc));
  }
  if (auto bad = chain_map_defect(f)) {
    throw ChainMapError("RH(f) is not a chain map on generator '" +
                            format_letter(sal, *bad, false) + "'",
                        *bad);
  }
  return f;
}

ResolutionMap compose(const ResolutionMap& g, const ResolutionMap& f) {
  if (f.target != g.source && !(*f.target->alphabet() == *g.source->alphabet())) {
    throw DomainError("maps are not composable");
  }
  ResolutionMap out{f.source, g.target, {}};
  for (const auto& [m, img] : f.images) {
    MixedElement moved(g.source->alphabet());
    for (const auto& [w, c] : img.terms()) moved.add_term(w, c);
    out.images.emplace(m, g(moved));
  }
  return out;
}

MixedElement DerivationHomotopy::operator()(const MixedElement& x) const {
  const auto& tal = alpha->target->alphabet();
  const Alphabet& sal = *alpha->source->alphabet();
  MixedElement out(tal);
  for (const auto& [w, c] : x.terms()) {
    // sum_i (-1)^{|w_<i|} alpha(w_<i) s(w_i) beta(w_>i)
    MixedElement prefix = MixedElement::unit(tal, c);
    int prefix_degree = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto it = values.find(w[i]);
      if (it == values.end()) {
        throw DomainError("homotopy undefined on '" + format_letter(sal, w[i], false) + "'");
      }
      if (!it->second.is_zero() && !prefix.is_zero()) {
        MixedElement term = prefix * it->second;
        for (std::size_t j = i + 1; j < w.size() && !term.is_zero(); ++j) {
          term = term * beta->image(w[j]);
        }
        out.add(term, odd(prefix_degree) ? -1 : 1);
      }
      prefix = prefix * alpha->image(w[i]);
      prefix_degree += letter_bidegree(sal, w[i]).total();
    }
  }
  return out;
}

HomotopyResult extend_homotopy(const ResolutionMap& alpha, const ResolutionMap& beta,
                               const std::map<std::string, MixedElement>& s0) {
  if (alpha.source != beta.source || alpha.target != beta.target) {
    if (!(*alpha.source->alphabet() == *beta.source->alphabet()) ||
        !(*alpha.target->alphabet() == *beta.target->alphabet())) {
      throw DomainError("alpha and beta must share source and target");
    }
  }
  const Resolution& src = *alpha.source;
  const Resolution& tgt = *alpha.target;
  const Alphabet& sal = *src.alphabet();

  HomotopyResult result;
  auto& s = result.s;
  s.alpha = std::make_shared<const ResolutionMap>(alpha);
  s.beta = std::make_shared<const ResolutionMap>(beta);

  for (const auto& [name, v] : s0) {
    if (!sal.find(name)) throw DomainError("s0 given on unknown generator '" + name + "'");
  }
  for (GeneratorId g = 0; g < sal.size(); ++g) {
    const Cup1Monomial m{{g}};
    MixedElement v(tgt.alphabet());
    if (auto it = s0.find(sal[g].name); it != s0.end()) {
      v = it->second;
      v.check_same_universe(MixedElement(tgt.alphabet()));
    }
    const Bidegree want = sal[g].degree + Bidegree{-1, 0};
    if (!v.is_zero() && v.bidegree() != std::optional<Bidegree>(want)) {
      throw DegreeError("s0(" + sal[g].name + ") must have bidegree " + to_string(want));
    }
    if (tgt.d(v) != alpha.image(m) - beta.image(m)) {
      throw PreconditionError("d s0 != alpha - beta on generator '" + sal[g].name + "'");
    }
    s.values.emplace(m, std::move(v));
  }
  for (const auto& b : src.generators()) {
    if (b.is_plain()) continue;
    const Cup1Monomial a{{b.factors.front()}};
    const Cup1Monomial z{std::vector<GeneratorId>(b.factors.begin() + 1, b.factors.end())};
    const MixedElement& sa = s.values.at(a);
    const MixedElement& sz = s.values.at(z);
    MixedElement v = -cup1_product(alpha.image(a), sz);
    v.add(cup1_product(sa, beta.image(z)));
    v.add(sz * sa);
    s.values.emplace(b, std::move(v));
  }

  auto& rep = result.report;
  for (const auto& g : src.generators()) {
    ++rep.generators_checked;
    const MixedElement lhs = alpha.image(g) - beta.image(g);
    const MixedElement rhs = s(src.image(g)) + tgt.d(s.values.at(g));
    if (lhs != rhs) {
      rep.passed = false;
      rep.law = "alpha - beta = sd + ds";
      rep.element = format_letter(sal, g, false);
      return result;
    }
  }
  // derivation law on short products, split at every position
  const auto& gens = src.generators();
  const std::size_t limit = std::min<std::size_t>(gens.size(), 12);
  auto check_split = [&](const MixedWord& w) {
    const MixedElement whole = s(MixedElement::word(src.alphabet(), w));
    for (std::size_t cut = 1; cut < w.size(); ++cut) {
      const MixedElement x = MixedElement::word(src.alphabet(), MixedWord(w.begin(), w.begin() + static_cast<long>(cut)));
      const MixedElement y = MixedElement::word(src.alphabet(), MixedWord(w.begin() + static_cast<long>(cut), w.end()));
      const int xdeg = x.bidegree()->total();
      MixedElement split = alpha(x) * s(y);
      if (odd(xdeg)) split = -split;
      split.add(s(x) * beta(y));
      ++rep.products_checked;
      if (split != whole) {
        rep.passed = false;
        rep.law = "s(xy) = (-1)^|x| alpha(x) s(y) + s(x) beta(y)";
        rep.element = MixedElement::word(src.alphabet(), w).to_string();
        return false;
      }
    }
    return true;
  };
  for (std::size_t i = 0; i < limit; ++i) {
    for (std::size_t j = 0; j < limit; ++j) {
      if (!check_split({gens[i], gens[j]})) return result;
      if (limit <= 8) {
        for (std::size_t k = 0; k < limit; ++k) {
          if (!check_split({gens[i], gens[j], gens[k]})) return result;
        }
      }
    }
  }
  return result;
}

}  // namespace hirsch
