#include "hirsch/cup1.hpp"

#include <map>

namespace hirsch {

namespace {

bool odd(int k) { return (k % 2) != 0; }

int word_degree(const Alphabet& alphabet, const MixedWord& w) {
  int deg = 0;
  for (const auto& l : w) deg += letter_bidegree(alphabet, l).total();
  return deg;
}

MixedElement merge_letters(const AlphabetPtr& alphabet, const Cup1Monomial& a,
                           const Cup1Monomial& b) {
  std::vector<GeneratorId> factors = a.factors;
  factors.insert(factors.end(), b.factors.begin(), b.factors.end());
  MixedElement out(alphabet);
  if (auto n = normalize_cup1(*alphabet, factors)) {
    out.add_term({n->monomial}, n->sign);
  }
  return out;
}

MixedElement cup1_words(const AlphabetPtr& alphabet, const MixedWord& u, const MixedWord& v) {
  MixedElement out(alphabet);
  if (u.empty() || v.empty()) return out;
  const Alphabet& al = *alphabet;
  if (v.size() >= 2) {
    const MixedWord head{v.front()};
    const MixedWord tail(v.begin() + 1, v.end());
    const int head_deg = letter_bidegree(al, v.front()).total();
    const int u_deg = word_degree(al, u);
    out.add(cup1_words(alphabet, u, head) * MixedElement::word(alphabet, tail));
    const int sign = odd(head_deg * (u_deg + 1)) ? -1 : 1;
    out.add(MixedElement::word(alphabet, head) * cup1_words(alphabet, u, tail), sign);
    return out;
  }
  if (u.size() == 1) return merge_letters(alphabet, u.front(), v.front());
  const int sign = odd((word_degree(al, u) + 1) * (word_degree(al, v) + 1)) ? -1 : 1;
  out.add(cup1_words(alphabet, v, u), sign);
  return out;
}

}  // namespace

Bidegree letter_bidegree(const Alphabet& alphabet, const Cup1Monomial& m) {
  Bidegree b{-static_cast<int>(m.factors.size()) + 1, 0};
  for (auto g : m.factors) b = b + alphabet[g].degree;
  return b;
}

std::string format_letter(const Alphabet& alphabet, const Cup1Monomial& m, bool in_product) {
  if (m.factors.size() == 1) return alphabet[m.factors.front()].name;
  std::string out;
  for (std::size_t i = 0; i < m.factors.size(); ++i) {
    if (i > 0) out += "⌣₁";
    out += alphabet[m.factors[i]].name;
  }
  return in_product ? "(" + out + ")" : out;
}

std::optional<SignedMonomial> normalize_cup1(const Alphabet& alphabet,
                                             const std::vector<GeneratorId>& bundle) {
  if (bundle.empty()) throw DomainError("empty cup-1 bundle");
  for (auto g : bundle) {
    if (alphabet[g].degree.first != 0) {
      throw DomainError("cup-1 factor '" + alphabet[g].name +
                        "' must have resolution degree 0");
    }
  }
  for (std::size_t i = 0; i < bundle.size(); ++i) {
    for (std::size_t j = i + 1; j < bundle.size(); ++j) {
      if (bundle[i] != bundle[j]) continue;
      if (odd(alphabet[bundle[i]].total_degree())) {
        throw DomainError("repeated odd-degree factor '" + alphabet[bundle[i]].name +
                          "' in cup-1 bundle");
      }
      return std::nullopt;
    }
  }
  int sign = 1;
  for (std::size_t i = 0; i < bundle.size(); ++i) {
    for (std::size_t j = i + 1; j < bundle.size(); ++j) {
      if (bundle[i] < bundle[j]) continue;
      const int a = alphabet[bundle[i]].total_degree();
      const int b = alphabet[bundle[j]].total_degree();
      if (odd((a + 1) * (b + 1))) sign = -sign;
    }
  }
  SignedMonomial out;
  out.sign = sign;
  out.monomial.factors = bundle;
  std::sort(out.monomial.factors.begin(), out.monomial.factors.end());
  return out;
}

MixedElement to_mixed(const TensorElement& x) {
  MixedElement out(x.alphabet_ptr());
  for (const auto& [w, c] : x.terms()) {
    MixedWord mw;
    mw.reserve(w.size());
    for (auto g : w) mw.push_back(Cup1Monomial{{g}});
    out.add_term(std::move(mw), c);
  }
  return out;
}

TensorElement to_tensor(const MixedElement& x) {
  TensorElement out(x.alphabet_ptr());
  for (const auto& [w, c] : x.terms()) {
    TensorWord tw;
    tw.reserve(w.size());
    for (const auto& l : w) {
      if (!l.is_plain()) throw DomainError("element contains a cup-1 bundle");
      tw.push_back(l.factors.front());
    }
    out.add_term(std::move(tw), c);
  }
  return out;
}

MixedElement plain(const AlphabetPtr& alphabet, GeneratorId g, const Integer& c) {
  return MixedElement::letter(alphabet, Cup1Monomial{{g}}, c);
}

MixedElement bundle(const AlphabetPtr& alphabet, const std::vector<GeneratorId>& factors) {
  MixedElement out(alphabet);
  if (auto n = normalize_cup1(*alphabet, factors)) out.add_term({n->monomial}, n->sign);
  return out;
}

MixedElement hirsch_expand(const Cup1Monomial& c, const MixedWord& product,
                           const AlphabetPtr& alphabet) {
  if (product.empty()) throw DomainError("Hirsch expansion of the empty word");
  return cup1_words(alphabet, {c}, product);
}

MixedElement hirsch_expand_at(const Cup1Monomial& c, const MixedWord& product, std::size_t split,
                              const AlphabetPtr& alphabet) {
  if (product.empty()) throw DomainError("Hirsch expansion of the empty word");
  if (split == 0 || split >= product.size()) {
    throw DomainError("split position out of range");
  }
  const MixedWord u(product.begin(), product.begin() + static_cast<long>(split));
  const MixedWord w(product.begin() + static_cast<long>(split), product.end());
  const int c_deg = letter_bidegree(*alphabet, c).total();
  MixedElement out = hirsch_expand(c, u, alphabet) * MixedElement::word(alphabet, w);
  const int sign = odd(word_degree(*alphabet, u) * (c_deg + 1)) ? -1 : 1;
  out.add(MixedElement::word(alphabet, u) * hirsch_expand(c, w, alphabet), sign);
  return out;
}

MixedElement cup1_product(const MixedElement& u, const MixedElement& v) {
  u.check_same_universe(v);
  MixedElement out(u.alphabet_ptr());
  for (const auto& [wu, cu] : u.terms()) {
    for (const auto& [wv, cv] : v.terms()) {
      out.add(cup1_words(u.alphabet_ptr(), wu, wv), cu * cv);
    }
  }
  return out;
}

namespace {

using BoundaryCache = std::map<Cup1Monomial, MixedElement>;

MixedElement boundary_cached(const AlphabetPtr& alphabet, const Cup1Monomial& m,
                             const Derivation& ambient, BoundaryCache& cache);

MixedElement differential_cached(const MixedElement& x, const Derivation& ambient,
                                 BoundaryCache& cache) {
  return apply_derivation(x, [&](const Cup1Monomial& l) {
    return boundary_cached(x.alphabet_ptr(), l, ambient, cache);
  });
}

MixedElement boundary_cached(const AlphabetPtr& alphabet, const Cup1Monomial& m,
                             const Derivation& ambient, BoundaryCache& cache) {
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  MixedElement out(alphabet);
  if (m.factors.empty()) throw DomainError("empty cup-1 bundle");
  if (m.is_plain()) {
    out = to_mixed(ambient.image(m.factors.front()));
  } else {
    const Cup1Monomial a{{m.factors.front()}};
    const Cup1Monomial z{std::vector<GeneratorId>(m.factors.begin() + 1, m.factors.end())};
    const int a_deg = letter_bidegree(*alphabet, a).total();
    const int z_deg = letter_bidegree(*alphabet, z).total();
    const MixedElement a_el = MixedElement::letter(alphabet, a);
    const MixedElement z_el = MixedElement::letter(alphabet, z);
    const Integer sa = odd(a_deg) ? -1 : 1;
    out.add(cup1_product(boundary_cached(alphabet, a, ambient, cache), z_el));
    out.add(cup1_product(a_el, boundary_cached(alphabet, z, ambient, cache)), -sa);
    out.add(a_el * z_el, sa);
    out.add(z_el * a_el, odd(a_deg * (z_deg + 1)) ? 1 : -1);
  }
  cache.emplace(m, out);
  return out;
}

}  // namespace

MixedElement cup1_boundary(const Cup1Monomial& m, const Derivation& ambient) {
  BoundaryCache cache;
  return boundary_cached(ambient.alphabet_ptr(), m, ambient, cache);
}

MixedElement mixed_differential(const MixedElement& x, const Derivation& ambient) {
  x.check_same_universe(MixedElement(ambient.alphabet_ptr()));
  BoundaryCache cache;
  return differential_cached(x, ambient, cache);
}

}  // namespace hirsch
