#include "ncsurf/matrix.hpp"
#include "ncsurf/rational.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ncsurf;

namespace {

Matrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng, int h) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(static_cast<long long>(rng() % (2 * h + 1)) - h);
  return m;
}

}  // namespace

TEST(Rational, NormalizesAndPrints) {
  EXPECT_EQ(Rational(6, -4).str(), "-3/2");
  EXPECT_EQ(Rational(0, 5).str(), "0");
  EXPECT_EQ(Rational::parse("10/5").str(), "2");
  EXPECT_EQ(Rational::parse("-7").str(), "-7");
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
}

TEST(Rational, PromotesToBigAndBack) {
  Rational big(1LL << 61);
  Rational sq = big * big * big;
  mpz_class expect = mpz_class(1) << 183;
  EXPECT_EQ(sq.str(), expect.get_str());
  Rational back = sq / (big * big);
  EXPECT_EQ(back, big);
  EXPECT_EQ((sq - sq), Rational(0));
  EXPECT_TRUE((sq - sq).is_zero());
  EXPECT_EQ(Rational::parse("123456789012345678901234567890/3").str(), "41152263004115226300411522630");
}

TEST(Rational, MatchesGmpOnRandomOperations) {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 2000; ++it) {
    long long a = static_cast<long long>(rng() >> (rng() % 60));
    long long b = static_cast<long long>(rng() >> (rng() % 60)) + 1;
    long long c = static_cast<long long>(rng() >> (rng() % 60));
    long long d = static_cast<long long>(rng() >> (rng() % 60)) + 1;
    if (rng() & 1) a = -a;
    mpq_class x(Rational(a).to_mpq() / Rational(b).to_mpq());
    mpq_class y(Rational(c).to_mpq() / Rational(d).to_mpq());
    x.canonicalize();
    y.canonicalize();
    Rational rx(a, b), ry(c, d);
    EXPECT_EQ((rx + ry).to_mpq(), mpq_class(x + y));
    EXPECT_EQ((rx - ry).to_mpq(), mpq_class(x - y));
    EXPECT_EQ((rx * ry).to_mpq(), mpq_class(x * y));
    if (c != 0) EXPECT_EQ((rx / ry).to_mpq(), mpq_class(x / y));
    EXPECT_EQ(rx < ry, x < y);
  }
}

TEST(Rational, ModularReduction) {
  EXPECT_EQ(Rational(1, 2).mod(7), 4);
  EXPECT_EQ(Rational(-1).mod(7), 6);
  EXPECT_TRUE(Rational(1, 14).bad_prime(7));
  EXPECT_THROW(Rational(1, 7).mod(7), std::exception);
}

TEST(Rref, IdentityAndRankOne) {
  auto r = rref(Matrix::identity(2));
  EXPECT_EQ(r.matrix, Matrix::identity(2));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
  auto s = rref(Matrix{{1, 2}, {2, 4}});
  EXPECT_EQ(s.matrix, (Matrix{{1, 2}, {0, 0}}));
  EXPECT_EQ(s.pivots, (std::vector<std::size_t>{0}));
}

TEST(Rref, RankAgreesWithModularOracle) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 40; ++it) {
    Matrix m = random_matrix(6, 9, rng, 4);
    // Force some rank deficiency in half of the cases.
    if (it % 2 == 0)
      for (std::size_t j = 0; j < 9; ++j) m(5, j) = m(0, j) * Rational(3) - m(1, j);
    std::size_t r = rank(m);
    for (std::int64_t p : {101, 211, 307}) EXPECT_EQ(oracle::rank_mod_p(oracle::reduce(m, p), p), r);
  }
}

TEST(Rref, IdempotentAndRowSpacePreserved) {
  std::mt19937_64 rng(12);
  for (int it = 0; it < 20; ++it) {
    Matrix m = random_matrix(5, 7, rng, 3);
    auto r = rref(m);
    EXPECT_EQ(rref(r.matrix).matrix, r.matrix);
    for (std::size_t i = 1; i < r.pivots.size(); ++i) EXPECT_LT(r.pivots[i - 1], r.pivots[i]);
    EchelonBasis span(7);
    for (std::size_t i = 0; i < r.matrix.rows(); ++i)
      span.insert(Vector(r.matrix.row(i).begin(), r.matrix.row(i).end()));
    for (std::size_t i = 0; i < m.rows(); ++i)
      EXPECT_TRUE(span.contains(Vector(m.row(i).begin(), m.row(i).end())));
    EXPECT_EQ(rank(m), rank(m.transpose()));
  }
}

TEST(Kernel, BasicCases) {
  EXPECT_TRUE(kernel_basis(Matrix::identity(3)).empty());
  EXPECT_EQ(kernel_basis(Matrix(2, 3)).size(), 3u);
  auto k = kernel_basis(Matrix{{1, 1, 0}, {0, 1, 1}});
  ASSERT_EQ(k.size(), 1u);
  // Proportional to (1,-1,1), found by solving the two equations by hand.
  EXPECT_EQ(k[0][1], -k[0][0]);
  EXPECT_EQ(k[0][2], k[0][0]);
}

TEST(Kernel, RankNullityAndNormalization) {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 20; ++it) {
    Matrix m = random_matrix(4, 8, rng, 2);
    auto k = kernel_basis(m);
    EXPECT_EQ(k.size() + rank(m), 8u);
    for (const auto& v : k) {
      EXPECT_TRUE(is_zero(m * v));
      bool has_one = false;
      for (const auto& x : v) has_one = has_one || x.is_one();
      EXPECT_TRUE(has_one);
    }
  }
}

TEST(Determinant, MatchesLeibnizAndModular) {
  std::mt19937_64 rng(14);
  for (int it = 0; it < 20; ++it) {
    Matrix m = random_matrix(5, 5, rng, 5);
    Rational d = determinant(m);
    EXPECT_EQ(d, oracle::det_leibniz(m));
    EXPECT_EQ(d.mod(101), oracle::det_mod_p(oracle::reduce(m, 101), 101));
  }
}

TEST(Charpoly, SmallCases) {
  EXPECT_EQ(charpoly(Matrix{{1, 0}, {0, 2}}), (UniPoly{2, -3, 1}));
  EXPECT_EQ(charpoly(Matrix{{0, 1}, {0, 0}}), (UniPoly{0, 0, 1}));
}

TEST(Charpoly, ConstantTermIsDeterminantOfNegation) {
  std::mt19937_64 rng(15);
  for (int it = 0; it < 20; ++it) {
    Matrix m = random_matrix(4, 4, rng, 6);
    UniPoly cp = charpoly(m);
    EXPECT_EQ(cp.degree(), 4);
    EXPECT_TRUE(cp.lead().is_one());
    EXPECT_EQ(cp.eval(0), oracle::det_leibniz(-m));
    // Reduction mod p commutes: charpoly(m)(a) = det(a I - m) mod p.
    for (std::int64_t a : {0, 1, 5, 17}) {
      Matrix s = Rational(a) * Matrix::identity(4) - m;
      EXPECT_EQ(cp.eval(a).mod(211), oracle::det_mod_p(oracle::reduce(s, 211), 211));
    }
  }
}

TEST(Inverse, RoundTrip) {
  std::mt19937_64 rng(16);
  for (int it = 0; it < 10; ++it) {
    Matrix m = random_matrix(4, 4, rng, 4);
    auto inv = inverse(m);
    if (determinant(m).is_zero()) {
      EXPECT_FALSE(inv.has_value());
    } else {
      ASSERT_TRUE(inv.has_value());
      EXPECT_EQ(*inv * m, Matrix::identity(4));
    }
  }
}

TEST(Spans, IntersectionAndCoordinates) {
  // span{e0,e1} and span{e1,e2} meet in span{e1}.
  std::vector<Vector> a{{1, 0, 0}, {0, 1, 0}};
  std::vector<Vector> b{{0, 1, 0}, {0, 0, 1}};
  auto c = intersect_spans(a, b, 3);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0], (Vector{0, 1, 0}));

  SpanCoordinates coords({{1, 1, 0}, {0, 1, 1}}, 3);
  auto x = coords.coordinates({2, 5, 3});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, (Vector{2, 3}));
  EXPECT_FALSE(coords.coordinates({1, 0, 0}).has_value());
}
