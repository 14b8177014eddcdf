#pragma once

#include "ncsurf/hochschild.hpp"
#include "ncsurf/pointscheme.hpp"
#include "ncsurf/quiveralg.hpp"
#include "ncsurf/superpot.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace ncsurf {

using Json = nlohmann::ordered_json;

/// "p/q", or "p" when q = 1.
Json to_json(const Rational& r);
/// Accepts "p/q", "p" or a JSON integer. Throws Error(InvalidInput).
Rational rational_from_json(const Json& j);

/// Variable names: x, y, z for ternary forms; x, y, u, v for (2,2) forms.
Json to_json(const HomForm& f);
HomForm homform_from_json(const Json& j);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json to_json(const Tensor& t);
Tensor tensor_from_json(const Json& j);

Json to_json(const GradedPresentation& p);
GradedPresentation presentation_from_json(const Json& j);

/// A tensor ({"kind","w"}) or a presentation ({"kind","relations"}).
using ProblemInput = std::variant<Tensor, GradedPresentation>;
ProblemInput input_from_json(const Json& j);

/// Pencil file: {"m": [[...]], "n": [[...]]} of 4x4 symmetric matrices, or
/// {"form": HomForm} for a (2,2) form to be lifted.
Pencil pencil_from_json(const Json& j);

Json to_json(const NondegeneracyVerdict& v);
Json to_json(const AlgebraicPoint& p);
Json to_json(const SegreSymbol& s);
Json to_json(const CurveClass& c);
Json to_json(const HHReport& r);
Json to_json(const CartanData& c);
/// Component dimensions, Cartan data and the structure-constant table.
Json algebra_to_json(const QuiverAlgebra& a);

Json read_json_file(const std::string& path);

}  // namespace ncsurf
