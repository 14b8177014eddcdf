#include "ncsurf/families.hpp"

namespace ncsurf {

namespace {

constexpr std::size_t X = 0, Y = 1, Z = 2;

}  // namespace

Tensor levi_civita() {
  Tensor t(Kind::Quadratic);
  const std::size_t perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  for (int p = 0; p < 6; ++p) t.at({perms[p][0], perms[p][1], perms[p][2]}) = p < 3 ? 1 : -1;
  return t;
}

Tensor sklyanin_plane(const Rational& a, const Rational& b, const Rational& c) {
  Tensor t(Kind::Quadratic);
  t.at({X, Y, Z}) = a;
  t.at({Y, Z, X}) = a;
  t.at({Z, X, Y}) = a;
  t.at({X, Z, Y}) = b;
  t.at({Z, Y, X}) = b;
  t.at({Y, X, Z}) = b;
  t.at({X, X, X}) = c;
  t.at({Y, Y, Y}) = c;
  t.at({Z, Z, Z}) = c;
  return t;
}

Vector relation_from_terms(Kind kind, const std::vector<std::pair<Rational, std::vector<std::size_t>>>& terms) {
  const std::size_t n = kind_dim(kind);
  const std::size_t len = kind == Kind::Quadratic ? 2 : 3;
  std::size_t size = 1;
  for (std::size_t i = 0; i < len; ++i) size *= n;
  Vector v(size);
  for (const auto& [c, w] : terms) v[word_index(w, n)] += c;
  return v;
}

GradedPresentation skew_plane(const Rational& q1, const Rational& q2, const Rational& q3) {
  const Kind k = Kind::Quadratic;
  return {k,
          {relation_from_terms(k, {{1, {Y, Z}}, {-q1, {Z, Y}}}), relation_from_terms(k, {{1, {Z, X}}, {-q2, {X, Z}}}),
           relation_from_terms(k, {{1, {X, Y}}, {-q3, {Y, X}}})}};
}

GradedPresentation commutative_quadric() {
  const Kind k = Kind::Cubic;
  return {k,
          {relation_from_terms(k, {{1, {X, X, Y}}, {-1, {Y, X, X}}}),
           relation_from_terms(k, {{1, {X, Y, Y}}, {-1, {Y, Y, X}}})}};
}

GradedPresentation cubic_sklyanin(const Rational& a, const Rational& b, const Rational& c) {
  const Kind k = Kind::Cubic;
  return {k,
          {relation_from_terms(k, {{a, {Y, Y, X}}, {b, {Y, X, Y}}, {a, {X, Y, Y}}, {c, {X, X, X}}}),
           relation_from_terms(k, {{a, {X, X, Y}}, {b, {X, Y, X}}, {a, {Y, X, X}}, {c, {Y, Y, Y}}})}};
}

}  // namespace ncsurf
