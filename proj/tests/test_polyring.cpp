#include "ncsurf/algebraic.hpp"
#include "ncsurf/error.hpp"
#include "ncsurf/poly.hpp"
#include "ncsurf/resultant.hpp"
#include "ncsurf/unipoly.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace ncsurf;

namespace {

const UniPoly t{0, 1};

UniPoly random_uni(std::mt19937_64& rng, int deg, int h) {
  std::vector<Rational> c;
  for (int i = 0; i <= deg; ++i) c.emplace_back(static_cast<long long>(rng() % (2 * h + 1)) - h);
  if (c.back().is_zero()) c.back() = 1;
  return UniPoly(c);
}

// Polynomial reduction to F_p as a coefficient vector, with an independent
// Euclidean gcd there.
using ModPoly = std::vector<std::int64_t>;

ModPoly mod_trim(ModPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

ModPoly mod_rem(ModPoly a, const ModPoly& b, std::int64_t p) {
  a = mod_trim(a);
  std::int64_t inv = oracle::invmod(b.back(), p);
  while (a.size() >= b.size()) {
    std::int64_t f = oracle::mulmod(a.back(), inv, p);
    std::size_t s = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[s + i] = ((a[s + i] - oracle::mulmod(f, b[i], p)) % p + p) % p;
    a = mod_trim(a);
  }
  return a;
}

ModPoly mod_gcd(ModPoly a, ModPoly b, std::int64_t p) {
  a = mod_trim(a);
  b = mod_trim(b);
  while (!b.empty()) {
    ModPoly r = mod_rem(a, b, p);
    a = b;
    b = r;
  }
  if (a.empty()) return a;
  std::int64_t inv = oracle::invmod(a.back(), p);
  for (auto& x : a) x = oracle::mulmod(x, inv, p);
  return a;
}

Poly var(int i) { return Poly::variable(3, static_cast<std::size_t>(i)); }

HomForm form(const Poly& p) { return HomForm(p.total_degree(), p); }

}  // namespace

TEST(UniPoly, GcdExamples) {
  EXPECT_EQ(gcd(t * t - 1, t - 1), t - 1);
  EXPECT_EQ(gcd(t * t, t * t * t), t * t);
  EXPECT_EQ(gcd((t - 2) * (t * t + 1), (t - 2) * (t + 3)), t - 2);
}

TEST(UniPoly, GcdCommutesWithReduction) {
  std::mt19937_64 rng(21);
  int checked = 0;
  for (int it = 0; it < 30; ++it) {
    UniPoly c = random_uni(rng, 2, 3);
    UniPoly a = c * random_uni(rng, 3, 4);
    UniPoly b = c * random_uni(rng, 2, 4);
    UniPoly g = gcd(a, b);
    EXPECT_TRUE(divides(g, a));
    EXPECT_TRUE(divides(g, b));
    EXPECT_TRUE(divides(c, g * Rational(1)) || divides(c.monic(), g));
    for (std::int64_t p : {101, 211, 307}) {
      auto ap = reduce_mod_p(a, p), bp = reduce_mod_p(b, p);
      // Skip primes that drop a leading coefficient.
      if (static_cast<int>(ap.size()) != a.degree() + 1 || static_cast<int>(bp.size()) != b.degree() + 1) continue;
      ModPoly gp = mod_gcd(ap, bp, p);
      // Good primes preserve the gcd degree; at unlucky primes it can only grow.
      EXPECT_GE(static_cast<int>(gp.size()) - 1, g.degree());
      if (static_cast<int>(gp.size()) - 1 == g.degree()) {
        EXPECT_EQ(gp, reduce_mod_p(g, p));
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 60);
}

TEST(UniPoly, ExtendedGcdBezout) {
  std::mt19937_64 rng(22);
  for (int it = 0; it < 20; ++it) {
    UniPoly a = random_uni(rng, 4, 5), b = random_uni(rng, 3, 5);
    auto e = extended_gcd(a, b);
    EXPECT_EQ(e.s * a + e.t * b, e.g);
    EXPECT_EQ(e.g, gcd(a, b));
  }
}

TEST(UniPoly, SquarefreeDecomposition) {
  auto d1 = squarefree_decomposition(pow(t - 1, 2) * (t + 2));
  ASSERT_EQ(d1.size(), 2u);
  EXPECT_EQ(d1[0], std::make_pair(t + 2, 1));
  EXPECT_EQ(d1[1], std::make_pair(t - 1, 2));
  auto d2 = squarefree_decomposition(pow(t, 4));
  ASSERT_EQ(d2.size(), 1u);
  EXPECT_EQ(d2[0], std::make_pair(t, 4));
  UniPoly a = pow(t * t + 1, 3) * (t * t - 2);
  auto d3 = squarefree_decomposition(a);
  ASSERT_EQ(d3.size(), 2u);
  EXPECT_EQ(d3[0], std::make_pair(t * t - 2, 1));
  EXPECT_EQ(d3[1], std::make_pair(t * t + 1, 3));
  UniPoly re = 1;
  for (const auto& [g, m] : d3) re *= pow(g, static_cast<unsigned>(m));
  EXPECT_EQ(re, a);
}

TEST(UniPoly, SquarefreeRandomReexpands) {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 20; ++it) {
    UniPoly a = random_uni(rng, 1, 3) * pow(random_uni(rng, 2, 3), 2) * pow(random_uni(rng, 1, 2), 3);
    auto dec = squarefree_decomposition(a);
    UniPoly re = 1;
    for (const auto& [g, m] : dec) {
      EXPECT_EQ(gcd(g, g.derivative()).degree(), 0);
      re *= pow(g, static_cast<unsigned>(m));
    }
    EXPECT_EQ(re.monic(), a.monic());
    for (std::size_t i = 0; i < dec.size(); ++i)
      for (std::size_t j = i + 1; j < dec.size(); ++j) EXPECT_EQ(gcd(dec[i].first, dec[j].first).degree(), 0);
  }
}

TEST(UniPoly, GcdFreeBasis) {
  auto b1 = gcd_free_basis({t * t - 1, t - 1});
  EXPECT_EQ(b1.basis.size(), 2u);
  auto b2 = gcd_free_basis({t * t + 1});
  ASSERT_EQ(b2.basis.size(), 1u);
  EXPECT_EQ(b2.basis[0], t * t + 1);
  std::vector<UniPoly> in{(t - 1) * (t - 2), (t - 2) * (t - 3)};
  auto b3 = gcd_free_basis(in);
  EXPECT_EQ(b3.basis.size(), 3u);
  for (std::size_t i = 0; i < in.size(); ++i) {
    UniPoly re = 1;
    for (std::size_t k = 0; k < b3.basis.size(); ++k) re *= pow(b3.basis[k], static_cast<unsigned>(b3.exponents[i][k]));
    EXPECT_EQ(re, in[i].monic());
  }
  for (std::size_t i = 0; i < b3.basis.size(); ++i)
    for (std::size_t j = i + 1; j < b3.basis.size(); ++j) EXPECT_EQ(gcd(b3.basis[i], b3.basis[j]).degree(), 0);
}

TEST(Resultant, HandSylvester) {
  // Res_x(x - c, x - d) = c - d, coefficients in Q[y] with c = y, d = 2.
  UniPoly y{0, 1};
  EXPECT_EQ(resultant(std::vector<UniPoly>{-y, 1}, std::vector<UniPoly>{UniPoly(-2), 1}), y - 2);
  // Res_x(x^2 - y, x - y): 3x3 Sylvester determinant expanded by hand is y^2 - y.
  EXPECT_EQ(resultant(std::vector<UniPoly>{-y, 0, 1}, std::vector<UniPoly>{-y, 1}), y * y - y);
}

TEST(Resultant, SpecializationAndSymmetry) {
  std::mt19937_64 rng(24);
  for (int it = 0; it < 5; ++it) {
    std::vector<UniPoly> a, b;
    for (int i = 0; i <= 3; ++i) a.push_back(random_uni(rng, 2, 3));
    for (int i = 0; i <= 2; ++i) b.push_back(random_uni(rng, 2, 3));
    UniPoly r = resultant(a, b);
    UniPoly rs = resultant(b, a);
    EXPECT_EQ(rs, r);  // (-1)^{3*2} = 1
    // Specializing y commutes with the resultant whenever leading terms survive.
    for (int s = -10; s < 10; ++s) {
      UniPoly as, bs;
      for (std::size_t i = 0; i < a.size(); ++i) as += UniPoly::monomial(a[i].eval(s), i);
      for (std::size_t i = 0; i < b.size(); ++i) bs += UniPoly::monomial(b[i].eval(s), i);
      if (as.degree() != 3 || bs.degree() != 2) continue;
      EXPECT_EQ(resultant(as, bs), r.eval(s));
      EXPECT_EQ(resultant(as, bs).is_zero(), gcd(as, bs).degree() > 0);
    }
  }
  // Odd degree product flips the sign.
  EXPECT_EQ(resultant(t * t * t + 2, t - 5), -resultant(t - 5, t * t * t + 2));
}

TEST(Resultant, Multivariate) {
  Poly x = var(0), y = var(1);
  Poly r = resultant(x * x - y, x - y, 0);
  EXPECT_EQ(r, y * y - y);
}

TEST(FiniteField, PointCounts) {
  Poly x = var(0), y = var(1), z = var(2);
  // Three lines pairwise meeting: 3(p+1) - 3.
  EXPECT_EQ(count_projective_points(reduce_mod_p(form(x * y * z), 5)), 15);
  EXPECT_EQ(count_projective_points(reduce_mod_p(form(x * x * x), 7)), 8);
  Poly smooth = y * y * z - x * x * x - x * z * z - z * z * z;
  for (std::int64_t p : oracle_primes()) {
    auto n = count_projective_points(reduce_mod_p(form(smooth), p));
    EXPECT_LE(std::abs(static_cast<double>(n - (p + 1))), 2 * std::sqrt(static_cast<double>(p)));
  }
  EXPECT_THROW(reduce_mod_p(form(Rational(1, 7) * x), 7), Error);
}

TEST(AlgebraicContext, SplitsOnZeroDivisors) {
  AlgebraicContext ctx((t - 1) * (t + 1) * (t * t + 1));
  auto s = ctx.split_on(t - 1);
  ASSERT_TRUE(s.zero && s.unit);
  EXPECT_EQ(s.zero->modulus(), t - 1);
  EXPECT_EQ(s.unit->degree(), 3);
  UniPoly inv = s.unit->inverse(t - 1);
  EXPECT_EQ(s.unit->mul(inv, t - 1), UniPoly(1));
  EXPECT_THROW(AlgebraicContext(pow(t, 2)), Error);
}

TEST(AlgebraicContext, GcdSplitsBranches) {
  // Over Q[t]/(t(t-1)): gcd(X - t, X^2 - X) is X - t on both branches,
  // gcd(X - 1, X - t) is 1 where t != 1 and X - 1 where t = 1.
  AlgebraicContext ctx(t * (t - 1));
  auto g = gcd_over_context(ctx, {{UniPoly{-1}, 1}, {-t, 1}});
  std::size_t total = 0;
  for (const auto& b : g) {
    total += static_cast<std::size_t>(b.context.degree());
    if (b.context.modulus() == t - 1) {
      EXPECT_EQ(b.gcd.size(), 2u);
    } else {
      EXPECT_EQ(b.gcd.size(), 1u);
    }
  }
  EXPECT_EQ(total, 2u);
}

TEST(Solve, CoordinatePoint) {
  Poly x = var(0), y = var(1);
  auto r = dynamic_eval_solve({form(x), form(y)});
  EXPECT_EQ(r.count, 1u);
  ASSERT_EQ(r.points.size(), 1u);
  auto q = r.points[0].rational();
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, (std::vector<Rational>{0, 0, 1}));
}

TEST(Solve, SingularPointsOfTriangle) {
  Poly x = var(0), y = var(1), z = var(2);
  Poly f = x * y * z;
  auto r = dynamic_eval_solve({form(f.derivative(0)), form(f.derivative(1)), form(f.derivative(2))});
  EXPECT_EQ(r.count, 3u);
  std::vector<std::vector<Rational>> pts;
  for (const auto& p : r.points) {
    auto q = p.rational();
    ASSERT_TRUE(q.has_value());
    pts.push_back(*q);
  }
  std::sort(pts.begin(), pts.end());
  EXPECT_EQ(pts, (std::vector<std::vector<Rational>>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
}

TEST(Solve, CuspSingularPoint) {
  Poly x = var(0), y = var(1), z = var(2);
  Poly f = y * y * z - x * x * x;
  auto r = dynamic_eval_solve({form(f.derivative(0)), form(f.derivative(1)), form(f.derivative(2))});
  EXPECT_EQ(r.count, 1u);
  ASSERT_EQ(r.points.size(), 1u);
  EXPECT_EQ(*r.points[0].rational(), (std::vector<Rational>{0, 0, 1}));
}

TEST(Solve, IrrationalPointsAndInvariance) {
  // x^2 - 2 z^2 = 0, y^2 - 3 z^2 = 0: four conjugate points.
  Poly x = var(0), y = var(1), z = var(2);
  std::vector<HomForm> sys{form(x * x - Rational(2) * z * z), form(y * y - Rational(3) * z * z)};
  auto r = dynamic_eval_solve(sys);
  EXPECT_EQ(r.count, 4u);
  for (const auto& p : r.points)
    for (const auto& f : sys) EXPECT_TRUE(eval_at(f.poly(), p).is_zero());
  // Independent coordinate changes keep the count.
  Rng rng(99);
  for (int k = 0; k < 3; ++k) {
    Matrix m = random_unimodular(3, rng);
    std::vector<HomForm> moved;
    for (const auto& f : sys) moved.push_back(form(f.poly().linear_substitute(m)));
    EXPECT_EQ(dynamic_eval_solve(moved, 1000 + static_cast<std::uint64_t>(k)).count, 4u);
  }
}

TEST(Solve, RejectsInfiniteZeroSets) {
  Poly x = var(0), y = var(1), z = var(2);
  EXPECT_THROW(dynamic_eval_solve({form(x * y), form(x * z)}), Error);
  EXPECT_THROW(dynamic_eval_solve({form(x * y)}), Error);
}
