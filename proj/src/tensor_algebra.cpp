#include "hirsch/tensor_algebra.hpp"

namespace hirsch {

std::string to_string(Bidegree b) {
  return "(" + std::to_string(b.first) + "," + std::to_string(b.second) + ")";
}

Alphabet::Alphabet(std::vector<Generator> generators) : generators_(std::move(generators)) {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& name = generators_[i].name;
    if (name.empty()) throw DomainError("generator with empty name");
    if (!index_.emplace(name, static_cast<GeneratorId>(i)).second) {
      throw DomainError("duplicate generator name '" + name + "'");
    }
    if (name.size() != 1) compact_ = false;
  }
}

std::optional<GeneratorId> Alphabet::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

GeneratorId Alphabet::id(std::string_view name) const {
  if (auto g = find(name)) return *g;
  throw DomainError("unknown generator '" + std::string(name) + "'");
}

AlphabetPtr make_alphabet(std::vector<Generator> generators) {
  return std::make_shared<const Alphabet>(std::move(generators));
}

std::string format_letter(const Alphabet& alphabet, GeneratorId g, bool /*in_product*/) {
  return alphabet[g].name;
}

TensorElement word_multiply(const TensorElement& x, const TensorElement& y) { return x * y; }

Derivation::Derivation(AlphabetPtr alphabet, std::map<GeneratorId, TensorElement> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
  for (auto it = images_.begin(); it != images_.end();) {
    const auto& [g, img] = *it;
    if (g >= alphabet_->size()) throw DomainError("differential given on unknown generator");
    img.check_same_universe(TensorElement(alphabet_));
    if (img.is_zero()) {
      it = images_.erase(it);
      continue;
    }
    const Bidegree want = (*alphabet_)[g].degree + Bidegree{1, 0};
    const auto got = img.bidegree();
    if (!got) {
      throw DegreeError("d(" + (*alphabet_)[g].name + ") = " + img.to_string() +
                        " is not homogeneous");
    }
    if (*got != want) {
      throw DegreeError("d(" + (*alphabet_)[g].name + ") has bidegree " + to_string(*got) +
                        ", expected " + to_string(want));
    }
    ++it;
  }
}

TensorElement Derivation::image(GeneratorId g) const {
  auto it = images_.find(g);
  return it == images_.end() ? TensorElement(alphabet_) : it->second;
}

TensorElement Derivation::operator()(const TensorElement& x) const {
  x.check_same_universe(TensorElement(alphabet_));
  return apply_derivation(x, [this](GeneratorId g) { return image(g); });
}

TensorElement extend_derivation(const std::map<GeneratorId, TensorElement>& images,
                                const TensorElement& x) {
  return Derivation(x.alphabet_ptr(), images)(x);
}

DSquaredReport check_d_squared(const FreeDga& dga, int max_total_degree) {
  DSquaredReport report;
  const auto& alphabet = *dga.alphabet;
  for (GeneratorId g = 0; g < alphabet.size(); ++g) {
    if (alphabet[g].total_degree() > max_total_degree) continue;
    TensorElement dd = dga.differential(dga.differential.image(g));
    if (!dd.is_zero()) {
      report.passed = false;
      report.failing_generator = g;
      report.witness = std::move(dd);
      return report;
    }
  }
  return report;
}

}  // namespace hirsch
