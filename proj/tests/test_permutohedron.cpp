#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hirsch/permutohedron.hpp"

#include <fstream>
#include <set>
#include <sstream>

using namespace hirsch;

namespace {

// Stirling numbers of the second kind times k!, from the recurrence.
std::size_t ordered_partitions(int n, int k) {
  std::vector<std::vector<std::size_t>> s(static_cast<std::size_t>(n) + 1,
                                          std::vector<std::size_t>(static_cast<std::size_t>(n) + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) s[i][j] = static_cast<std::size_t>(j) * s[i - 1][j] + s[i - 1][j - 1];
  }
  std::size_t fact = 1;
  for (int j = 2; j <= k; ++j) fact *= static_cast<std::size_t>(j);
  return s[n][k] * fact;
}

// Faces obtained by splitting one block into an ordered pair of nonempty parts.
std::set<Face> splittings(const Face& f) {
  std::set<Face> out;
  for (std::size_t i = 0; i < f.blocks.size(); ++i) {
    const auto& b = f.blocks[i];
    const unsigned full = (1u << b.size()) - 1;
    for (unsigned sub = 1; sub < full; ++sub) {
      std::vector<int> left, right;
      for (std::size_t j = 0; j < b.size(); ++j) ((sub >> j) & 1u ? left : right).push_back(b[j]);
      Face g = f;
      g.blocks[i] = left;
      g.blocks.insert(g.blocks.begin() + static_cast<std::ptrdiff_t>(i) + 1, right);
      out.insert(g);
    }
  }
  return out;
}

MixedElement transported(const std::vector<SignedFace>& faces, const AlphabetPtr& letters) {
  MixedElement out(letters);
  for (const auto& [c, g] : faces) out = out + c * monomial_of_face(g, letters);
  return out;
}

}  // namespace

TEST_CASE("face text form") {
  const auto f = Face::parse("({1,3},{2})");
  CHECK(f.blocks == std::vector<std::vector<int>>{{1, 3}, {2}});
  CHECK(f.n() == 3);
  CHECK(f.dimension() == 1);
  CHECK(f.to_string() == "({1,3},{2})");
  CHECK(Face::parse(" ( {3, 1} , {2} ) ") == f);
  CHECK_THROWS_AS(Face::parse("({1,1},{2})"), DomainError);
  CHECK_THROWS_AS(Face::parse("({1,4})"), DomainError);
  CHECK_THROWS_AS(Face::parse("({1},{})"), DomainError);
  CHECK_THROWS_AS(Face::parse("{1,2}"), DomainError);
  CHECK_THROWS_AS(Face::parse("({1,x})"), DomainError);
}

TEST_CASE("f-vectors") {
  CHECK(f_vector(1) == std::vector<std::size_t>{1});
  CHECK(f_vector(2) == std::vector<std::size_t>{2, 1});
  CHECK(f_vector(3) == std::vector<std::size_t>{6, 6, 1});
  CHECK(f_vector(4) == std::vector<std::size_t>{24, 36, 14, 1});
  for (int n = 1; n <= 7; ++n) {
    const auto fv = f_vector(n);
    for (int k = 0; k < n; ++k) CHECK(fv[static_cast<std::size_t>(k)] == ordered_partitions(n, n - k));
    CHECK(fv[static_cast<std::size_t>(n - 2 < 0 ? 0 : n - 2)] ==
          (n == 1 ? 1u : (std::size_t{1} << n) - 2));
  }
  CHECK_THROWS_AS(enumerate_faces(0), SizeError);
  CHECK_THROWS_AS(enumerate_faces(8), SizeError);
}

TEST_CASE("monomial bijection") {
  const auto letters = standard_letters(3);
  CHECK(monomial_of_face(Face::parse("({1,2,3})"), letters).to_string() == "a⌣₁b⌣₁c");
  CHECK(monomial_of_face(Face::parse("({2},{1},{3})"), letters).to_string() == "bac");
  CHECK(monomial_of_face(Face::parse("({1,3},{2})"), letters).to_string() == "(a⌣₁c)b");
  for (int n = 1; n <= 5; ++n) {
    const auto al = standard_letters(n);
    for (const auto& group : enumerate_faces(n)) {
      for (const auto& f : group) CHECK(face_of_monomial(monomial_of_face(f, al)) == f);
    }
  }
  MixedWord repeated{Cup1Monomial{{0, 1}}, Cup1Monomial{{1, 2}}};
  CHECK_THROWS_AS(face_of_monomial(repeated, *letters), DomainError);
  MixedWord partial{Cup1Monomial{{0, 1}}};
  CHECK_THROWS_AS(face_of_monomial(partial, *letters), DomainError);
  CHECK_THROWS_AS(face_of_monomial(Integer(2) * monomial_of_face(Face::parse("({1,2,3})"), letters)),
                  DomainError);
  const auto odd = make_alphabet({{"a", {0, 3}}, {"b", {0, 2}}});
  CHECK_THROWS_AS(monomial_of_face(Face::parse("({1},{2})"), odd), DomainError);
  CHECK_THROWS_AS(monomial_of_face(Face::parse("({1},{2})"), letters), DomainError);
}

TEST_CASE("face boundary") {
  const auto edge = face_boundary(Face::parse("({1,2},{3})"));
  REQUIRE(edge.size() == 2);
  std::map<Face, Integer> signs;
  for (const auto& [c, g] : edge) signs[g] = c;
  const auto v1 = Face::parse("({1},{2},{3})");
  const auto v2 = Face::parse("({2},{1},{3})");
  REQUIRE(signs.count(v1) == 1);
  REQUIRE(signs.count(v2) == 1);
  CHECK(signs[v1] == -signs[v2]);
  CHECK(abs(signs[v1]) == Integer(1));

  const auto top = face_boundary(Face::parse("({1,2,3})"));
  CHECK(top.size() == 6);
  const auto letters = standard_letters(3);
  CHECK(transported(top, letters) ==
        cup1_boundary(Cup1Monomial{{0, 1, 2}}, Derivation(letters, {})));

  CHECK_THROWS_AS(face_boundary(Face::parse("({1},{2})")), DomainError);
}

TEST_CASE("boundary is the set of block splittings with unit signs") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& group : enumerate_faces(n)) {
      for (const auto& f : group) {
        if (f.dimension() == 0) continue;
        const auto b = face_boundary(f);
        std::set<Face> got;
        for (const auto& [c, g] : b) {
          CHECK(abs(c) == Integer(1));
          CHECK(g.dimension() == f.dimension() - 1);
          got.insert(g);
        }
        CHECK(got.size() == b.size());
        CHECK(got == splittings(f));
      }
    }
  }
}

TEST_CASE("compatibility with the cup-1 boundary") {
  for (int n = 2; n <= 5; ++n) {
    const auto letters = standard_letters(n);
    const Derivation zero(letters, {});
    for (const auto& group : enumerate_faces(n)) {
      for (const auto& f : group) {
        if (f.dimension() == 0) continue;
        CHECK(transported(face_boundary(f), letters) ==
              mixed_differential(monomial_of_face(f, letters), zero));
      }
    }
  }
}

TEST_CASE("top cell boundary has 2^n - 2 terms") {
  for (int n = 2; n <= 7; ++n) {
    Face top;
    top.blocks.emplace_back();
    for (int i = 1; i <= n; ++i) top.blocks[0].push_back(i);
    CHECK(face_boundary(top).size() == (std::size_t{1} << n) - 2);
  }
}

TEST_CASE("boundary squares to zero") {
  Face top{{{1, 2, 3, 4}}};
  std::map<Face, Integer> dd;
  for (const auto& [c, g] : face_boundary(top)) {
    for (const auto& [c2, h] : face_boundary(g)) dd[h] += c * c2;
  }
  for (const auto& [h, c] : dd) CHECK_MESSAGE(c.is_zero(), h.to_string());

  for (int n = 1; n <= 6; ++n) {
    const auto cx = permutohedron_complex(n);
    for (Index k = 1; k < cx.top_degree(); ++k) CHECK((cx.boundary(k) * cx.boundary(k + 1)).is_zero());
    CHECK_NOTHROW(check_boundary_squares(cx));
  }
}

TEST_CASE("permutohedra are acyclic") {
  for (int n = 1; n <= 6; ++n) {
    const auto h = homology(permutohedron_complex(n));
    REQUIRE(h.size() == static_cast<std::size_t>(n));
    CHECK(h[0] == FGAbelianGroup::free(1));
    for (std::size_t k = 1; k < h.size(); ++k) CHECK_MESSAGE(h[k].is_trivial(), n, " ", k);
  }
}

TEST_CASE("P3 golden export") {
  std::ifstream in(std::string(HIRSCH_TEST_DATA) + "/golden/p3_complex.txt");
  REQUIRE(in.good());
  std::stringstream golden;
  golden << in.rdbuf();
  const auto text = export_complex(3);
  CHECK(text == golden.str());
  for (const char* label : {"a⌣₁b⌣₁c", "(a⌣₁b)c", "c(a⌣₁b)", "a(b⌣₁c)", "b(a⌣₁c)", "(a⌣₁c)b",
                            "(b⌣₁c)a", "abc", "acb", "bac", "bca", "cab", "cba"}) {
    const bool found = text.find(std::string("  ") + label + "  ") != std::string::npos ||
                       text.find(std::string("  ") + label + "\n") != std::string::npos;
    CHECK_MESSAGE(found, label);
  }
}
