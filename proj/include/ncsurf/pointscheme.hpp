#pragma once

#include "ncsurf/algebraic.hpp"
#include "ncsurf/matrix.hpp"
#include "ncsurf/poly.hpp"
#include "ncsurf/tensor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ncsurf {

enum class Family { Plane, Quadric };

/// One grouping polynomial (its roots share the block structure) and the
/// Jordan block sizes at each of its roots, in decreasing order.
struct SegreGroup {
  UniPoly grouping;
  std::vector<int> blocks;
};

struct SegreSymbol {
  std::vector<SegreGroup> groups;
  /// One entry per root: the groups repeated deg(grouping) times, in
  /// canonical order.
  std::vector<std::vector<int>> expansion;

  /// Bracket notation, e.g. "[(1,1),1,1]".
  std::string str() const;
};

struct CurveDiagnostics {
  bool zero_form = false;
  bool squarefree = true;
  bool hessian_vanishes = false;
  std::optional<std::size_t> singular_points;
  std::optional<std::size_t> tangent_cone_rank;
  /// Short description of the detected component structure.
  std::string components;
  bool degenerate_pencil = false;
};

struct CurveClass {
  Family family = Family::Plane;
  std::string verdict;  // "P1".."P9", "Q1".."Q13" or "Linear"
  std::optional<SegreSymbol> segre;
  CurveDiagnostics diagnostics;
};

/// det W_j(v): a ternary cubic (possibly zero).
HomForm plane_cubic(const Tensor& t, std::size_t slot = 2);

/// Decision tree over repeated factors, the Hessian and the singular points.
/// Throws Error(UnclassifiedCubic) on inconsistent diagnostics.
CurveClass classify_plane_cubic(const HomForm& f, std::uint64_t seed = kDefaultSolveSeed);

/// det M(p, q) with M(p, q)_{dc} = sum_{a,b} w_{abcd} p_a q_b, a form of
/// bidegree (2, 2) in (x, y; u, v) (variables 0..3).
HomForm quadric_divisor(const Tensor& t);

struct Pencil {
  Matrix m;  // the Segre quadric z1 z4 - z2 z3
  Matrix n;  // a symmetric lift of the divisor
};

/// Lift to P^3 through z1 = xu, z2 = xv, z3 = yu, z4 = yv; the mixed
/// monomial xyuv goes to z1 z4. Throws Error(DegeneratePencil) when the
/// lift is proportional to the Segre quadric (or f = 0).
Pencil segre_lift(const HomForm& f);

/// Segre symbol of the pencil lambda M + N from determinantal divisors.
/// Throws Error(SingularPencil) when det(lambda M + N) vanishes identically
/// or M is singular.
SegreSymbol segre_symbol(const Matrix& m, const Matrix& n);

/// Type lookup for an expanded Segre symbol; std::nullopt when the symbol is
/// not one of the thirteen divisor types.
std::optional<std::string> quadric_type_of_symbol(const std::string& symbol);

/// Linear for f = 0 or a degenerate pencil; otherwise the Segre type.
/// Throws Error(UnknownSymbol) for symbols outside the table.
CurveClass classify_quadric_divisor(const HomForm& f);

/// Expected type names in table order.
const std::vector<std::string>& plane_types();
const std::vector<std::string>& quadric_types();

}  // namespace ncsurf
