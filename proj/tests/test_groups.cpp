#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "hirsch/errors.hpp"
#include "hirsch/groups.hpp"

#include <numeric>
#include <random>

using namespace hirsch;
using oracles::kernel_order;

namespace {

FGAbelianGroup G(const char* s) { return FGAbelianGroup::parse(s); }

// Tor(A, B) = sum_i ker(x d_i on B), each kernel counted by enumeration
FGAbelianGroup tor_oracle(const FGAbelianGroup& a, const FGAbelianGroup& b) {
  std::vector<Integer> orders;
  for (const auto& d : a.torsion()) {
    for (const auto& e : b.torsion()) orders.push_back(kernel_order(d.to_long(), e.to_long()));
  }
  return FGAbelianGroup::from_cyclic(0, orders);
}

FGAbelianGroup random_group(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> rank(0, 2), count(0, 3), order(2, 12);
  std::vector<Integer> t;
  for (int k = count(rng); k > 0; --k) t.push_back(order(rng));
  return FGAbelianGroup::from_cyclic(rank(rng), t);
}

}  // namespace

TEST_CASE("tor examples") {
  CHECK(tor(G("Z^3"), G("Z/6")).is_trivial());
  CHECK(tor(G("Z/4"), G("Z/6")) == G("Z/2"));
  CHECK(tor(G("Z/2+Z"), G("Z/2")) == G("Z/2"));
  CHECK(tor(G("Z/6"), G("Z/4+Z/9")) == G("Z/2+Z/3"));
}

TEST_CASE("tor agrees with the kernel oracle on cyclic groups") {
  for (long m = 1; m <= 24; ++m) {
    for (long n = 1; n <= 24; ++n) {
      const auto t = tor(FGAbelianGroup::cyclic(m), FGAbelianGroup::cyclic(n));
      CHECK(t == FGAbelianGroup::cyclic(kernel_order(m, n)));
      CHECK(t == FGAbelianGroup::cyclic(std::gcd(m, n)));
    }
  }
}

TEST_CASE("tor is symmetric and additive") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_group(rng), b = random_group(rng), c = random_group(rng);
    CHECK(tor(a, b) == tor(b, a));
    CHECK(tor(a, b) == tor_oracle(a, b));
    CHECK(tor(a + b, c) == tor(a, c) + tor(b, c));
    CHECK(tor(FGAbelianGroup::free(a.rank()), b).is_trivial());
  }
}

TEST_CASE("cokernel") {
  const auto z = G("Z");
  CHECK(cokernel(GroupHom{z, z, IntMatrix::Constant(1, 1, Integer(2))}) == G("Z/2"));  // (3-1)!
  CHECK(cokernel(GroupHom::multiplication(G("Z^2+Z/4"), 1)).is_trivial());
  CHECK(cokernel(GroupHom::zero(z, G("Z/6"))) == G("Z/6"));
  // Z -> Z/4 + Z, 1 -> (1, 2)
  IntMatrix m(2, 1);
  m << Integer(2), Integer(1);  // free coordinate first
  CHECK(cokernel(GroupHom{z, G("Z+Z/4"), m}) == G("Z/8"));

  // unchanged by an automorphism of the source
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> e(-4, 4);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix h(3, 2);
    for (Index i = 0; i < 3; ++i)
      for (Index j = 0; j < 2; ++j) h(i, j) = e(rng);
    IntMatrix u(2, 2);
    u << Integer(1), Integer(e(rng)), Integer(0), Integer(1);
    IntMatrix v(2, 2);
    v << Integer(0), Integer(1), Integer(1), Integer(0);
    const GroupHom f{G("Z^2"), G("Z^3"), h};
    CHECK(cokernel(f) == cokernel(GroupHom{f.source, f.target, h * u * v}));
  }
  CHECK_THROWS_AS(cokernel(GroupHom{G("Z/2"), z, IntMatrix::Constant(1, 1, Integer(1))}), DomainError);
  CHECK_THROWS_AS(cokernel(GroupHom{z, z, IntMatrix::Constant(2, 1, Integer(1))}), DomainError);
}

TEST_CASE("is_injective") {
  const auto z = G("Z");
  CHECK(is_injective(GroupHom::multiplication(z, 2)));
  CHECK_FALSE(is_injective(GroupHom::zero(G("Z/2"), z)));
  CHECK(is_injective(GroupHom::zero(G("0"), z)));
  const auto twice = GroupHom::multiplication(G("Z/4"), 2);
  CHECK_FALSE(is_injective(twice));
  CHECK(kernel(twice) == G("Z/2"));
  // brute force kernel of x k on Z/n
  for (long n = 2; n <= 12; ++n) {
    for (long k = 0; k < n; ++k) {
      CHECK(kernel(GroupHom::multiplication(FGAbelianGroup::cyclic(n), k)) ==
            FGAbelianGroup::cyclic(kernel_order(k, n)));
    }
  }
  // Z/2 -> Z/4, 1 -> 2 is injective
  CHECK(is_injective(GroupHom{G("Z/2"), G("Z/4"), IntMatrix::Constant(1, 1, Integer(2))}));
  // Z^2 -> Z, (a, b) -> a + b has kernel Z
  IntMatrix sum(1, 2);
  sum << Integer(1), Integer(1);
  CHECK(kernel(GroupHom{G("Z^2"), z, sum}) == z);
}

TEST_CASE("check_hypotheses") {
  // U(n): torsion of H^{2i} coprime to (i-1)!
  for (int n = 1; n <= 6; ++n) {
    std::map<int, FGAbelianGroup> h;
    for (int i = 1; i <= n; ++i) {
      // torsion coprime to every (i-1)! with i <= 6
      h[2 * i] = FGAbelianGroup::from_cyclic(1, {i <= 3 ? Integer(7) : Integer(11 * 13 * 17)});
    }
    const auto rep = check_hypotheses(unitary_instance(n, h));
    CHECK_MESSAGE(rep.passed, n);
    CHECK(rep.degrees.size() == static_cast<std::size_t>(2 * n - 1));
  }
  // a Z/2 in H^6 meets (3-1)! = 2 in Hurewicz degree 5
  const auto bad = check_hypotheses(unitary_instance(3, {{6, G("Z+Z/2")}}));
  CHECK_FALSE(bad.passed);
  REQUIRE(bad.failed_degree);
  CHECK(*bad.failed_degree == 5);
  CHECK(bad.degrees[4].tor == G("Z/2"));
  CHECK(bad.degrees[4].cokernel == G("Z/2"));
  CHECK(bad.degrees[4].note == "Tor(Z + Z/2, Z/2) = Z/2");
  // a Z/3 there is harmless
  CHECK(check_hypotheses(unitary_instance(3, {{6, G("Z/3")}})).passed);
  // m = 1: nothing to check
  const auto empty = check_hypotheses(HypothesisInstance{1, {}, {}});
  CHECK(empty.passed);
  CHECK(empty.degrees.empty());
  // a non-injective u_2
  HypothesisInstance inst{3, {}, {{2, GroupHom::zero(G("Z/2"), G("Z"))}}};
  const auto ni = check_hypotheses(inst);
  CHECK_FALSE(ni.passed);
  CHECK(*ni.failed_degree == 2);
  CHECK_FALSE(ni.degrees[1].injective);
  // degree 1 carries the standing-assumption note
  CHECK(check_hypotheses(unitary_instance(1, {})).degrees[0].note.find("u_1") != std::string::npos);
}
