#pragma once

#include "ncsurf/tensor.hpp"

namespace ncsurf {

/// Closed-form families of tensors and presentations. Generators are
/// x, y, z (indices 0, 1, 2) for planes and x, y for quadrics.

/// Fully antisymmetric w: the commutative plane.
Tensor levi_civita();
/// a(xyz + yzx + zxy) + b(xzy + zyx + yxz) + c(xxx + yyy + zzz).
Tensor sklyanin_plane(const Rational& a, const Rational& b, const Rational& c);
/// Relations yz - q1 zy, zx - q2 xz, xy - q3 yx.
GradedPresentation skew_plane(const Rational& q1, const Rational& q2, const Rational& q3);
/// x^2 y - y x^2, x y^2 - y^2 x.
GradedPresentation commutative_quadric();
/// a y^2 x + b yxy + a x y^2 + c x^3 and the same with x and y swapped.
GradedPresentation cubic_sklyanin(const Rational& a, const Rational& b, const Rational& c);

/// Relation vector from a list of (coefficient, word) terms.
Vector relation_from_terms(Kind kind, const std::vector<std::pair<Rational, std::vector<std::size_t>>>& terms);

}  // namespace ncsurf
