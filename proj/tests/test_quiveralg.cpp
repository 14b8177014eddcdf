#include "ncsurf/error.hpp"
#include "ncsurf/families.hpp"
#include "ncsurf/quiveralg.hpp"
#include "ncsurf/superpot.hpp"
#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace ncsurf;

namespace {

QuiverAlgebra plane_algebra(const Tensor& t) { return build_algebra(Kind::Quadratic, extract_relations(t).relations); }

QuiverAlgebra quadric_algebra() { return build_algebra(Kind::Cubic, commutative_quadric().relations); }

std::vector<std::size_t> component_dims(const QuiverAlgebra& a) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.vertices(); ++i)
    for (std::size_t j = i; j < a.vertices(); ++j) out.push_back(a.component_dim(i, j));
  return out;
}

Vector unit(const QuiverAlgebra& a) {
  Vector u(a.dim());
  for (std::size_t i = 0; i < a.vertices(); ++i) u[a.idempotent(i)] = 1;
  return u;
}

}  // namespace

TEST(QuiverAlgebra, CommutativePlane) {
  QuiverAlgebra a = plane_algebra(levi_civita());
  EXPECT_EQ(a.dim(), 15u);
  EXPECT_EQ(component_dims(a), (std::vector<std::size_t>{1, 3, 6, 1, 3, 1}));
  EXPECT_TRUE(a.is_associative());
  EXPECT_EQ(radical_nilpotency(a), 3u);
}

TEST(QuiverAlgebra, CommutativeQuadric) {
  QuiverAlgebra a = quadric_algebra();
  EXPECT_EQ(a.dim(), 24u);
  EXPECT_EQ(component_dims(a), (std::vector<std::size_t>{1, 2, 4, 6, 1, 2, 4, 1, 2, 1}));
  EXPECT_TRUE(a.is_associative());
  EXPECT_EQ(radical_nilpotency(a), 4u);
}

TEST(QuiverAlgebra, ExpectedDimsFollowTheResolution) {
  EXPECT_EQ(expected_component_dims(Kind::Quadratic), (std::vector<std::size_t>{1, 3, 6}));
  EXPECT_EQ(expected_component_dims(Kind::Cubic), (std::vector<std::size_t>{1, 2, 4, 6}));
}

TEST(QuiverAlgebra, IdempotentsSumToTheUnit) {
  QuiverAlgebra a = quadric_algebra();
  Vector u = unit(a);
  for (std::size_t k = 0; k < a.dim(); ++k) {
    Vector e = a.unit_vector(k);
    EXPECT_EQ(a.multiply(u, e), e);
    EXPECT_EQ(a.multiply(e, u), e);
  }
  for (std::size_t i = 0; i < a.vertices(); ++i)
    for (std::size_t j = 0; j < a.vertices(); ++j)
      for (std::size_t k : a.component(i, j)) {
        Vector e = a.unit_vector(k);
        EXPECT_EQ(a.multiply(a.unit_vector(a.idempotent(i)), e), e);
        EXPECT_EQ(a.multiply(e, a.unit_vector(a.idempotent(j))), e);
      }
}

TEST(QuiverAlgebra, RelationsVanishInTheAlgebra) {
  auto rels = extract_relations(sklyanin_plane(1, 2, 3)).relations;
  QuiverAlgebra a = build_algebra(Kind::Quadratic, rels);
  for (const auto& r : rels) {
    Vector sum(a.dim());
    for (std::size_t w = 0; w < r.size(); ++w) {
      if (r[w].is_zero()) continue;
      for (const auto& [idx, c] : a.path(0, word_of_index(w, 2, 3))) sum[idx] += r[w] * c;
    }
    EXPECT_TRUE(is_zero(sum));
  }
}

TEST(QuiverAlgebra, FullRelationSpanIsWrongHilbert) {
  std::vector<Vector> rels;
  for (std::size_t i = 0; i < 9; ++i) {
    Vector v(9);
    v[i] = 1;
    rels.push_back(v);
  }
  try {
    build_algebra(Kind::Quadratic, rels);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WrongHilbert);
  }
}

TEST(QuiverAlgebra, TruncationOnlySeesTheRelationCount) {
  // With one relation window, any independent relations of the right count
  // give the expected dimensions, even ones no tensor produces.
  std::vector<Vector> rels;
  for (std::size_t b = 0; b < 3; ++b) rels.push_back(relation_from_terms(Kind::Quadratic, {{1, {0, b}}}));
  QuiverAlgebra a(LinearQuiver::quadratic(), rels);
  EXPECT_EQ(a.dim(), 15u);
  std::vector<Vector> cubic_rels{relation_from_terms(Kind::Cubic, {{1, {0, 0, 0}}}),
                                 relation_from_terms(Kind::Cubic, {{1, {0, 0, 1}}})};
  QuiverAlgebra b(LinearQuiver::cubic(), cubic_rels);
  EXPECT_EQ(b.component_dim(0, 3), 6u);
}

TEST(QuiverAlgebra, BasisIndependentOfRelationBasis) {
  auto rels = commutative_quadric().relations;
  std::vector<Vector> other{rels[0], rels[1]};
  for (std::size_t i = 0; i < other[0].size(); ++i) other[0][i] = 2 * rels[0][i] - rels[1][i];
  for (std::size_t i = 0; i < other[1].size(); ++i) other[1][i] = rels[0][i] + 3 * rels[1][i];
  QuiverAlgebra a = build_algebra(Kind::Cubic, rels), b = build_algebra(Kind::Cubic, other);
  ASSERT_EQ(a.dim(), b.dim());
  for (std::size_t u = 0; u < a.dim(); ++u) {
    EXPECT_EQ(a.basis()[u].word, b.basis()[u].word);
    for (std::size_t v = 0; v < a.dim(); ++v) EXPECT_EQ(a.mult(u, v), b.mult(u, v));
  }
}

TEST(Cartan, PlaneAndQuadric) {
  CartanData p = cartan_and_coxeter(plane_algebra(levi_civita()));
  EXPECT_EQ(p.cartan, (Matrix{{1, 3, 6}, {0, 1, 3}, {0, 0, 1}}));
  EXPECT_TRUE(p.unipotent);
  EXPECT_EQ(p.serre_charpoly, (UniPoly{-1, 3, -3, 1}));
  CartanData q = cartan_and_coxeter(quadric_algebra());
  EXPECT_EQ(q.cartan, (Matrix{{1, 2, 4, 6}, {0, 1, 2, 4}, {0, 0, 1, 2}, {0, 0, 0, 1}}));
  EXPECT_TRUE(q.unipotent);
  Matrix cinv_t = inverse(q.cartan)->transpose();
  EXPECT_EQ(q.coxeter, -(cinv_t * q.cartan));
}

TEST(Cartan, KroneckerIsNotUnipotent) {
  QuiverAlgebra k(LinearQuiver::free(2, 2), {});
  CartanData d = cartan_and_coxeter(k);
  EXPECT_EQ(d.cartan, (Matrix{{1, 2}, {0, 1}}));
  // C^{-T} C = [[1, 2], [-2, -3]]: trace -2, determinant 1.
  EXPECT_EQ(d.serre_charpoly, (UniPoly{1, 2, 1}));
  EXPECT_FALSE(d.unipotent);
}

TEST(GlobalDimension, FamilyAlgebrasHaveDimensionTwo) {
  EXPECT_EQ(global_dimension(plane_algebra(levi_civita())), 2u);
  EXPECT_EQ(global_dimension(plane_algebra(sklyanin_plane(1, 2, 3))), 2u);
  EXPECT_EQ(global_dimension(quadric_algebra()), 2u);
  QuiverAlgebra a = plane_algebra(levi_civita());
  EXPECT_EQ(projective_dimension_of_simple(a, 0), 2u);
  EXPECT_EQ(projective_dimension_of_simple(a, 1), 1u);
  EXPECT_EQ(projective_dimension_of_simple(a, 2), 0u);
}

TEST(GlobalDimension, PathAlgebraIsHereditary) {
  EXPECT_EQ(global_dimension(QuiverAlgebra(LinearQuiver::free(3, 2), {})), 1u);
  EXPECT_EQ(global_dimension(QuiverAlgebra(LinearQuiver::free(2, 2), {})), 1u);
  EXPECT_EQ(global_dimension(QuiverAlgebra(LinearQuiver::free(1, 3), {})), 0u);
}

TEST(QuiverAlgebra, RandomPassTensors) {
  std::mt19937_64 rng(101);
  for (Kind kind : {Kind::Quadratic, Kind::Cubic}) {
    int done = 0;
    for (int i = 0; done < 10 && i < 100; ++i) {
      Tensor t = fixture::random_tensor(kind, rng, 3);
      if (!check_nondegenerate(t, rng()).pass) continue;
      QuiverAlgebra a = build_algebra(kind, extract_relations(t).relations);
      EXPECT_EQ(a.dim(), kind == Kind::Quadratic ? 15u : 24u);
      EXPECT_EQ(global_dimension(a), 2u);
      EXPECT_TRUE(cartan_and_coxeter(a).unipotent);
      ++done;
    }
    EXPECT_EQ(done, 10);
  }
}
