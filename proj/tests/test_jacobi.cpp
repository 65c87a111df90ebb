#include <gtest/gtest.h>

#include "jdeform/jacobi.hpp"
#include "support.hpp"

using namespace jdeform;
using namespace jdeform::testing;

namespace {

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(BuildJacobi, AbelianE1) {
  auto J = build_jacobi(e1(), 3);
  EXPECT_TRUE(J.total.d.is_zero());
  for (std::size_t p = 1; p <= 3; ++p) EXPECT_EQ(J.term(p).size(), 1u);
  EXPECT_EQ(J.total.space[2].name, "x*x*x");
}

TEST(BuildJacobi, E2Differential) {
  auto J = build_jacobi(e2(), 2);
  ASSERT_TRUE(check_complex(J.total).pass);
  auto xx = *J.basis.find(Monomial{0, 0});
  auto y = *J.basis.find(Monomial{1});
  // monomial basis: D(x*x) = [x,x] = y; divided basis e = x*x/2
  auto terms = jacobi_differential(*J.alg, J.L, Monomial{0, 0});
  ASSERT_EQ(terms.size(), 1u);
  EXPECT_EQ(terms[0].first, Scalar(1));
  EXPECT_EQ(terms[0].second, Monomial{1});
  EXPECT_EQ(J.total.d.at(y, xx), Scalar(1, 2));
  EXPECT_EQ(J.external(2).at(1, 0), Scalar(1, 2));  // λ¹ rows x, y
}

TEST(BuildJacobi, OrderOneIsShiftedL) {
  auto L = e2prime();
  auto J = build_jacobi(L, 1);
  auto os = jacobi_h0(J);
  EXPECT_EQ(os.dim(), cohomology(L.complex(), 1).dim());
}

TEST(BuildJacobi, RandomSquaresToZero) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    DGLA L = random_dgla(rng);
    ASSERT_TRUE(check_dgla(L).pass) << trial;
    for (std::size_t n = 1; n <= 3; ++n) {
      auto J = build_jacobi(L, n);
      auto r = check_complex(J.total);
      EXPECT_TRUE(r.pass) << trial << " n=" << n << " " << r.message;
    }
  }
}

TEST(BuildJacobi, ThreadsAreDeterministic) {
  std::mt19937 rng(5);
  DGLA L = random_dgla(rng);
  JacobiOptions one, four;
  four.threads = 4;
  EXPECT_EQ(build_jacobi(L, 4, one).total.d, build_jacobi(L, 4, four).total.d);
}

TEST(BuildJacobi, ResourceCap) {
  JacobiOptions tight;
  tight.max_basis = 2;
  EXPECT_THROW(build_jacobi(e2prime(), 2, tight), ResourceError);
  auto bad = make_dgla({{"x", 2}, {"y", 4}}, {}, {{0, 0, 1, Scalar(1)}});
  EXPECT_THROW(build_jacobi(bad, 2), PreconditionError);
}

TEST(JacobiH0, Examples) {
  auto os1 = jacobi_h0(build_jacobi(e1(), 3));
  EXPECT_EQ(os1.dim(), 3u);
  EXPECT_EQ(os1.filtration, (std::vector<std::size_t>{1, 2, 3}));
  auto os2 = jacobi_h0(build_jacobi(e2(), 2));
  EXPECT_EQ(os2.dim(), 1u);
  EXPECT_EQ(os2.filtration, (std::vector<std::size_t>{1, 1}));
  auto zero = jacobi_h0(build_jacobi(make_dgla({{"y", 2}}), 3));
  EXPECT_EQ(zero.dim(), 0u);
}

TEST(SymbolMap, E1) {
  auto os = jacobi_h0(build_jacobi(e1(), 3));
  // basis v1 = x, v2 = x*x/2, v3 = x*x*x/6 (divided powers)
  const std::size_t d = os.dim();
  EXPECT_TRUE(os.sigma.column(0).empty());
  EXPECT_EQ(os.sigma.at(0 * d + 0, 1), Scalar(1));
  EXPECT_EQ(os.sigma.at(0 * d + 1, 2), Scalar(1));
  EXPECT_EQ(os.sigma.at(1 * d + 0, 2), Scalar(1));
  EXPECT_EQ(os.sigma.column(2).nnz(), 2u);
}

TEST(Obstructions, E1) {
  auto ob = obstruction_tower(e1(), 4);
  ASSERT_EQ(ob.levels.size(), 3u);
  for (const auto& l : ob.levels) {
    EXPECT_TRUE(l.big.is_zero());
    EXPECT_EQ(l.kernel_big.dim(), 1u);
  }
}

TEST(Obstructions, E2) {
  auto ob = obstruction_tower(e2(), 2);
  ASSERT_EQ(ob.levels.size(), 1u);
  const auto& l = ob.levels[0];
  EXPECT_EQ(l.big.to_dense(), (std::vector<Vec>{{Scalar(1)}}));
  EXPECT_EQ(l.small.to_dense(), (std::vector<Vec>{{Scalar(1)}}));
  EXPECT_EQ(l.kernel_big.dim(), 0u);
  EXPECT_EQ(l.kernel_small.dim(), 0u);
}

TEST(Obstructions, E2Prime) {
  auto ob = obstruction_tower(e2prime(), 2);
  const auto& l = ob.levels[0];
  ASSERT_EQ(l.sym.size(), 3u);  // x1², x1x2, x2²
  EXPECT_EQ(l.kernel_big.dim(), 2u);
  Subspace expect{3, {Vec{Scalar(1), Scalar(0), Scalar(0)}, Vec{Scalar(0), Scalar(0), Scalar(1)}}};
  EXPECT_TRUE(l.kernel_big.same_span(expect));
  EXPECT_TRUE(l.kernel_small.same_span(expect));
}

TEST(Obstructions, RefusesNonvanishingH0) {
  EXPECT_THROW(obstruction_tower(make_dgla({{"a", 0}, {"x", 1}}), 2), PreconditionError);
}

TEST(Obstructions, DimensionGrowthMatchesKernel) {
  std::mt19937 rng(3);
  int checked = 0;
  for (int trial = 0; trial < 40 && checked < 12; ++trial) {
    DGLA L = random_dgla(rng);
    if (!h_nonpositive_vanishes(L)) continue;
    ++checked;
    auto ob = obstruction_tower(L, 3);
    std::size_t prev = jacobi_h0(build_jacobi(L, 1)).dim();
    for (const auto& lvl : ob.levels) {
      std::size_t cur = jacobi_h0(build_jacobi(L, lvl.n)).dim();
      EXPECT_EQ(cur - prev, lvl.kernel_big.dim()) << trial;
      EXPECT_TRUE(lvl.kernel_big.same_span(lvl.kernel_small)) << trial;
      prev = cur;
    }
  }
  EXPECT_GT(checked, 3);
}

TEST(Kunneth, ZeroBracket) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    // L⁰ -> L¹ injective, L¹ -> L² random, no bracket
    std::size_t a = rng() % 2, r = 1 + rng() % 2;
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < a; ++i) gens.push_back({"u" + std::to_string(i), 0});
    for (std::size_t i = 0; i < a + r; ++i) gens.push_back({"x" + std::to_string(i), 1});
    gens.push_back({"w", 2});
    std::vector<std::tuple<int, int, Scalar>> d;
    for (std::size_t i = 0; i < a; ++i) d.push_back({int(i), int(a + i), Scalar(1)});
    if (rng() % 2) d.push_back({int(2 * a), int(2 * a + r), Scalar(1)});
    DGLA L = change_basis(make_dgla(gens, d), random_basis_change(rng, GradedSpace(gens)));
    std::size_t h = cohomology(L.complex(), 1).dim();
    for (std::size_t n = 1; n <= 4; ++n) {
      std::size_t expect = 0;
      for (std::size_t p = 1; p <= n; ++p) expect += binom(h + p - 1, p);
      EXPECT_EQ(jacobi_h0(build_jacobi(L, n)).dim(), expect) << trial << " n=" << n;
    }
  }
}
