#pragma once

#include "hirsch/errors.hpp"
#include "hirsch/integer.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hirsch {

/// (first, second) grading. For resolutions `first` is the resolution degree
/// (<= 0) and `second` the internal degree; for twisting calculus `first` is
/// the perturbation degree.
struct Bidegree {
  int first = 0;
  int second = 0;

  [[nodiscard]] constexpr int total() const { return first + second; }
  friend constexpr Bidegree operator+(Bidegree a, Bidegree b) {
    return {a.first + b.first, a.second + b.second};
  }
  friend constexpr auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

std::string to_string(Bidegree b);

struct Generator {
  std::string name;
  Bidegree degree;

  [[nodiscard]] int total_degree() const { return degree.total(); }
  friend bool operator==(const Generator&, const Generator&) = default;
};

using GeneratorId = std::uint32_t;

/// An ordered, immutable generator set. Ids follow insertion order, which is
/// also the canonical total order used to normalize cup-1 bundles.
class Alphabet {
 public:
  explicit Alphabet(std::vector<Generator> generators);

  [[nodiscard]] std::size_t size() const { return generators_.size(); }
  [[nodiscard]] const Generator& operator[](GeneratorId id) const { return generators_.at(id); }
  [[nodiscard]] const std::vector<Generator>& generators() const { return generators_; }
  [[nodiscard]] std::optional<GeneratorId> find(std::string_view name) const;
  /// Throws DomainError for unknown names.
  [[nodiscard]] GeneratorId id(std::string_view name) const;
  /// True when every name is one character, so words print without separators.
  [[nodiscard]] bool compact_names() const { return compact_; }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.generators_ == b.generators_;
  }

 private:
  std::vector<Generator> generators_;
  std::map<std::string, GeneratorId, std::less<>> index_;
  bool compact_ = true;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<Generator> generators);

inline Bidegree letter_bidegree(const Alphabet& alphabet, GeneratorId g) {
  return alphabet[g].degree;
}
std::string format_letter(const Alphabet& alphabet, GeneratorId g, bool in_product);

/// Finite integer combination of words in a free associative algebra.
///
/// Letter is either a plain GeneratorId (the tensor algebra T(V)) or a cup-1
/// bundle (the extended generator set of a resolution). Terms are kept in a
/// sorted map with no zero coefficients; the empty word is the unit.
template <typename Letter>
class FreeElement {
 public:
  using Word = std::vector<Letter>;
  using Terms = std::map<Word, Integer>;

  explicit FreeElement(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
    if (!alphabet_) throw DomainError("element needs a generator set");
  }

  static FreeElement unit(AlphabetPtr alphabet, const Integer& c = 1) {
    return word(std::move(alphabet), {}, c);
  }
  static FreeElement word(AlphabetPtr alphabet, Word w, const Integer& c = 1) {
    FreeElement x(std::move(alphabet));
    x.add_term(std::move(w), c);
    return x;
  }
  static FreeElement letter(AlphabetPtr alphabet, Letter l, const Integer& c = 1) {
    return word(std::move(alphabet), Word{std::move(l)}, c);
  }

  [[nodiscard]] const Alphabet& alphabet() const { return *alphabet_; }
  [[nodiscard]] const AlphabetPtr& alphabet_ptr() const { return alphabet_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  [[nodiscard]] Integer coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  /// Accumulates c * w; cancelling terms are removed.
  void add_term(Word w, const Integer& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(w), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Accumulates c * other.
  void add(const FreeElement& other, const Integer& c = 1) {
    check_same_universe(other);
    for (const auto& [w, v] : other.terms_) add_term(w, v * c);
  }

  [[nodiscard]] Bidegree word_bidegree(const Word& w) const {
    Bidegree b;
    for (const auto& l : w) b = b + letter_bidegree(*alphabet_, l);
    return b;
  }
  [[nodiscard]] int word_degree(const Word& w) const { return word_bidegree(w).total(); }

  /// Common bidegree of all terms; nullopt for zero or mixed elements.
  [[nodiscard]] std::optional<Bidegree> bidegree() const {
    std::optional<Bidegree> b;
    for (const auto& [w, v] : terms_) {
      const Bidegree wb = word_bidegree(w);
      if (b && *b != wb) return std::nullopt;
      b = wb;
    }
    return b;
  }
  [[nodiscard]] bool is_homogeneous() const { return is_zero() || bidegree().has_value(); }

  /// Homogeneous parts keyed by bidegree.
  [[nodiscard]] std::map<Bidegree, FreeElement> homogeneous_parts() const {
    std::map<Bidegree, FreeElement> out;
    for (const auto& [w, v] : terms_) {
      out.try_emplace(word_bidegree(w), alphabet_).first->second.add_term(w, v);
    }
    return out;
  }

  template <typename Pred>
  [[nodiscard]] FreeElement filter(Pred&& keep_word) const {
    FreeElement out(alphabet_);
    for (const auto& [w, v] : terms_) {
      if (keep_word(w)) out.terms_.emplace(w, v);
    }
    return out;
  }

  void check_same_universe(const FreeElement& other) const {
    if (alphabet_ != other.alphabet_ && !(*alphabet_ == *other.alphabet_)) {
      throw DomainError("elements over different generator sets");
    }
  }

  [[nodiscard]] std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, v] : terms_) {
      Integer c = v;
      if (first) {
        if (c.sign() < 0) {
          out += "-";
          c = -c;
        }
      } else {
        out += c.sign() < 0 ? " - " : " + ";
        if (c.sign() < 0) c = -c;
      }
      first = false;
      const bool unit_coeff = (c == Integer(1));
      if (!unit_coeff) out += c.to_string();
      if (w.empty()) {
        if (unit_coeff) out += "1";
        continue;
      }
      if (!unit_coeff) out += " ";
      out += format_word(w);
    }
    return out;
  }

  [[nodiscard]] std::string format_word(const Word& w) const {
    std::string out;
    const bool in_product = w.size() > 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0 && !alphabet_->compact_names()) out += " ";
      out += format_letter(*alphabet_, w[i], in_product);
    }
    return out;
  }

  friend FreeElement operator+(FreeElement a, const FreeElement& b) {
    a.add(b);
    return a;
  }
  friend FreeElement operator-(FreeElement a, const FreeElement& b) {
    a.add(b, -1);
    return a;
  }
  friend FreeElement operator-(const FreeElement& a) { return Integer(-1) * a; }
  friend FreeElement operator*(const Integer& c, const FreeElement& a) {
    FreeElement out(a.alphabet_);
    if (c.is_zero()) return out;
    for (const auto& [w, v] : a.terms_) out.terms_.emplace(w, v * c);
    return out;
  }
  /// Concatenation product, bilinear and associative, unit = empty word.
  friend FreeElement operator*(const FreeElement& a, const FreeElement& b) {
    a.check_same_universe(b);
    FreeElement out(a.alphabet_);
    for (const auto& [u, x] : a.terms_) {
      for (const auto& [w, y] : b.terms_) {
        Word uw = u;
        uw.insert(uw.end(), w.begin(), w.end());
        out.add_term(std::move(uw), x * y);
      }
    }
    return out;
  }
  friend bool operator==(const FreeElement& a, const FreeElement& b) {
    return a.terms_ == b.terms_ && (a.alphabet_ == b.alphabet_ || *a.alphabet_ == *b.alphabet_);
  }

 private:
  AlphabetPtr alphabet_;
  Terms terms_;
};

using TensorElement = FreeElement<GeneratorId>;
using TensorWord = TensorElement::Word;

/// Free-algebra product; throws DomainError for mismatched generator sets.
TensorElement word_multiply(const TensorElement& x, const TensorElement& y);

/// Leibniz extension of letter images with the Koszul sign of a degree-one
/// map: d(uw) = d(u) w + (-1)^{|u|} u d(w), |u| the total degree.
template <typename Letter, typename ImageFn>
FreeElement<Letter> apply_derivation(const FreeElement<Letter>& x, ImageFn&& image) {
  FreeElement<Letter> out(x.alphabet_ptr());
  for (const auto& [w, c] : x.terms()) {
    int prefix_degree = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const auto& dl = image(w[i]);
      if (!dl.is_zero()) {
        const Integer sign = (prefix_degree % 2 == 0) ? c : -c;
        for (const auto& [v, k] : dl.terms()) {
          typename FreeElement<Letter>::Word nw(w.begin(), w.begin() + static_cast<long>(i));
          nw.insert(nw.end(), v.begin(), v.end());
          nw.insert(nw.end(), w.begin() + static_cast<long>(i) + 1, w.end());
          out.add_term(std::move(nw), sign * k);
        }
      }
      prefix_degree += letter_bidegree(x.alphabet(), w[i]).total();
    }
  }
  return out;
}

/// A derivation of bidegree (1, 0) on a free algebra, given on generators.
/// Generators without an image are closed.
class Derivation {
 public:
  /// Throws DegreeError when an image is not homogeneous of bidegree
  /// generator + (1, 0).
  Derivation(AlphabetPtr alphabet, std::map<GeneratorId, TensorElement> images);

  [[nodiscard]] const AlphabetPtr& alphabet_ptr() const { return alphabet_; }
  [[nodiscard]] TensorElement image(GeneratorId g) const;
  [[nodiscard]] const std::map<GeneratorId, TensorElement>& images() const { return images_; }
  [[nodiscard]] TensorElement operator()(const TensorElement& x) const;

 private:
  AlphabetPtr alphabet_;
  std::map<GeneratorId, TensorElement> images_;
};

TensorElement extend_derivation(const std::map<GeneratorId, TensorElement>& images,
                                const TensorElement& x);

/// Free bigraded dga presentation: generators plus differential images.
struct FreeDga {
  AlphabetPtr alphabet;
  Derivation differential;
};

struct DSquaredReport {
  bool passed = true;
  std::optional<GeneratorId> failing_generator;
  std::optional<TensorElement> witness;  // d(d(g)) for the failing generator
};

/// Checks d(d(g)) = 0 on every generator of total degree <= max_total_degree,
/// in generator order.
DSquaredReport check_d_squared(const FreeDga& dga, int max_total_degree);

}  // namespace hirsch
