#include "hirsch/permutohedron.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

namespace hirsch {

int Face::n() const {
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.size());
  return n;
}

std::string Face::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i > 0) out += ",";
    out += "{";
    for (std::size_t j = 0; j < blocks[i].size(); ++j) {
      if (j > 0) out += ",";
      out += std::to_string(blocks[i][j]);
    }
    out += "}";
  }
  return out + ")";
}

namespace {

void check_partition(const Face& f) {
  const int n = f.n();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (const auto& b : f.blocks) {
    if (b.empty()) throw DomainError("face " + f.to_string() + " has an empty block");
    if (!std::is_sorted(b.begin(), b.end())) {
      throw DomainError("face " + f.to_string() + " has an unsorted block");
    }
    for (int i : b) {
      if (i < 1 || i > n || seen[static_cast<std::size_t>(i)]) {
        throw DomainError("face " + f.to_string() + " is not an ordered partition of {1.." +
                          std::to_string(n) + "}");
      }
      seen[static_cast<std::size_t>(i)] = true;
    }
  }
}

}  // namespace

Face Face::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  auto bad = [&]() { return DomainError("malformed face '" + std::string(text) + "'"); };
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw bad();
  Face f;
  std::size_t pos = 1;
  while (pos + 1 < s.size()) {
    if (s[pos] != '{') throw bad();
    const std::size_t close = s.find('}', pos);
    if (close == std::string::npos) throw bad();
    std::vector<int> block;
    std::stringstream ss(s.substr(pos + 1, close - pos - 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit)) throw bad();
      block.push_back(std::stoi(item));
    }
    std::sort(block.begin(), block.end());
    f.blocks.push_back(std::move(block));
    pos = close + 1;
    if (pos + 1 < s.size()) {
      if (s[pos] != ',') throw bad();
      ++pos;
    }
  }
  if (f.blocks.empty()) throw bad();
  check_partition(f);
  return f;
}

std::vector<std::vector<Face>> enumerate_faces(int n) {
  if (n < 1 || n > kMaxPermutohedron) {
    throw SizeError("permutohedron size n = " + std::to_string(n) + " outside 1.." +
                    std::to_string(kMaxPermutohedron));
  }
  std::vector<std::vector<Face>> out(static_cast<std::size_t>(n));
  Face cur;
  std::function<void(unsigned)> rec = [&](unsigned remaining) {
    if (remaining == 0) {
      out[static_cast<std::size_t>(cur.dimension())].push_back(cur);
      return;
    }
    // every nonempty subset of the remaining elements can be the next block
    for (unsigned sub = remaining; sub != 0; sub = (sub - 1) & remaining) {
      std::vector<int> block;
      for (int i = 0; i < n; ++i) {
        if ((sub >> i) & 1u) block.push_back(i + 1);
      }
      cur.blocks.push_back(std::move(block));
      rec(remaining & ~sub);
      cur.blocks.pop_back();
    }
  };
  rec((1u << n) - 1);
  for (auto& group : out) std::sort(group.begin(), group.end());
  return out;
}

std::vector<std::size_t> f_vector(int n) {
  std::vector<std::size_t> out;
  for (const auto& group : enumerate_faces(n)) out.push_back(group.size());
  return out;
}

AlphabetPtr standard_letters(int n) {
  if (n < 1 || n > 26) throw SizeError("need 1 to 26 letters");
  std::vector<Generator> gens;
  for (int i = 0; i < n; ++i) gens.push_back({std::string(1, static_cast<char>('a' + i)), {0, 2}});
  return make_alphabet(std::move(gens));
}

namespace {

void check_letters(const Alphabet& letters, int n) {
  if (static_cast<int>(letters.size()) != n) {
    throw DomainError("need exactly " + std::to_string(n) + " letters, got " +
                      std::to_string(letters.size()));
  }
  for (const auto& g : letters.generators()) {
    if (g.degree.first != 0 || g.degree.second % 2 != 0) {
      throw DomainError("letter '" + g.name + "' must have bidegree (0, even)");
    }
  }
}

}  // namespace

MixedElement monomial_of_face(const Face& f, const AlphabetPtr& letters) {
  check_partition(f);
  check_letters(*letters, f.n());
  MixedWord w;
  for (const auto& b : f.blocks) {
    Cup1Monomial m;
    for (int i : b) m.factors.push_back(static_cast<GeneratorId>(i - 1));
    w.push_back(std::move(m));
  }
  return MixedElement::word(letters, std::move(w));
}

Face face_of_monomial(const MixedWord& w, const Alphabet& letters) {
  const int n = static_cast<int>(letters.size());
  check_letters(letters, n);
  Face f;
  std::vector<bool> seen(letters.size(), false);
  for (const auto& l : w) {
    std::vector<int> block;
    for (auto g : l.factors) {
      if (g >= letters.size() || seen[g]) {
        throw DomainError("monomial repeats letter '" + letters[g].name + "'");
      }
      seen[g] = true;
      block.push_back(static_cast<int>(g) + 1);
    }
    std::sort(block.begin(), block.end());
    f.blocks.push_back(std::move(block));
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
    throw DomainError("monomial does not cover every letter");
  }
  return f;
}

Face face_of_monomial(const MixedElement& m) {
  if (m.size() != 1) throw DomainError("expected a single monomial");
  const auto& [w, c] = *m.terms().begin();
  if (abs(c) != Integer(1)) throw DomainError("monomial coefficient must be +1 or -1");
  return face_of_monomial(w, m.alphabet());
}

std::vector<SignedFace> face_boundary(const Face& f) {
  check_partition(f);
  if (f.dimension() == 0) throw DomainError("vertex " + f.to_string() + " has no boundary");
  const auto letters = standard_letters(f.n());
  const auto d = mixed_differential(monomial_of_face(f, letters), Derivation(letters, {}));
  std::vector<SignedFace> out;
  for (const auto& [w, c] : d.terms()) out.emplace_back(c, face_of_monomial(w, *letters));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

ChainComplex permutohedron_complex(int n) {
  const auto faces = enumerate_faces(n);
  std::vector<Index> dims;
  for (const auto& group : faces) dims.push_back(static_cast<Index>(group.size()));
  std::vector<SparseIntMatrix> boundaries;
  for (std::size_t k = 1; k < faces.size(); ++k) {
    std::map<Face, Index> row;
    for (const auto& f : faces[k - 1]) row.emplace(f, static_cast<Index>(row.size()));
    SparseIntMatrix m(dims[k - 1], dims[k]);
    for (Index j = 0; j < dims[k]; ++j) {
      for (const auto& [c, g] : face_boundary(faces[k][static_cast<std::size_t>(j)])) {
        m.add(row.at(g), j, c);
      }
    }
    boundaries.push_back(std::move(m));
  }
  return ChainComplex(std::move(dims), std::move(boundaries));
}

std::string export_complex(int n) {
  const auto faces = enumerate_faces(n);
  const auto letters = standard_letters(n);
  std::ostringstream os;
  os << "P_" << n << " f-vector:";
  for (const auto& group : faces) os << " " << group.size();
  os << "\n";
  for (std::size_t k = faces.size(); k-- > 0;) {
    os << "dim " << k << "\n";
    for (const auto& f : faces[k]) {
      os << "  " << f.to_string() << "  " << monomial_of_face(f, letters).to_string();
      if (k > 0) {
        os << "  d =";
        for (const auto& [c, g] : face_boundary(f)) {
          os << " " << (c.sign() < 0 ? "-" : "+") << g.to_string();
        }
      }
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace hirsch
