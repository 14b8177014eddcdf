#include "ncsurf/io.hpp"

#include "ncsurf/error.hpp"

#include <fstream>
#include <functional>

namespace ncsurf {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Kind kind_from_json(const Json& j) {
  const Json& k = field(j, "kind");
  if (k == "quadratic") return Kind::Quadratic;
  if (k == "cubic") return Kind::Cubic;
  bad("kind must be \"quadratic\" or \"cubic\"");
}

std::vector<std::string> var_names(std::size_t nvars) {
  if (nvars == 3) return {"x", "y", "z"};
  if (nvars == 4) return {"x", "y", "u", "v"};
  if (nvars == 2) return {"x", "y"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < nvars; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) bad("rational must be a string \"p/q\" or an integer");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception&) {
    bad("cannot parse rational \"" + j.get<std::string>() + "\"");
  }
}

Json to_json(const HomForm& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.poly().terms()) terms.push_back({{"exp", e}, {"c", to_json(c)}});
  return {{"vars", var_names(f.nvars())}, {"degree", f.degree()}, {"terms", terms}};
}

HomForm homform_from_json(const Json& j) {
  const Json& vars = field(j, "vars");
  if (!vars.is_array() || vars.empty()) bad("vars must be a nonempty array");
  const std::size_t n = vars.size();
  const int degree = field(j, "degree").get<int>();
  Poly p(n);
  for (const Json& t : field(j, "terms")) {
    auto e = field(t, "exp").get<std::vector<int>>();
    if (e.size() != n) bad("exponent length does not match vars");
    p.add_term(e, rational_from_json(field(t, "c")));
  }
  if (p.is_zero()) return HomForm(n, degree);
  try {
    return HomForm(degree, p);
  } catch (const std::exception& ex) {
    bad(ex.what());
  }
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) bad("matrix must be a nonempty array of rows");
  Matrix m(j.size(), j[0].size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != m.cols()) bad("ragged matrix");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rational_from_json(j[r][c]);
  }
  return m;
}

Json to_json(const Tensor& t) {
  // Build nested arrays slot by slot, first slot outermost.
  std::function<Json(std::vector<std::size_t>&)> nest = [&](std::vector<std::size_t>& idx) -> Json {
    if (idx.size() == t.order()) return to_json(t.at(idx));
    Json arr = Json::array();
    for (std::size_t a = 0; a < t.dim(); ++a) {
      idx.push_back(a);
      arr.push_back(nest(idx));
      idx.pop_back();
    }
    return arr;
  };
  std::vector<std::size_t> idx;
  return {{"kind", kind_name(t.kind())}, {"w", nest(idx)}};
}

Tensor tensor_from_json(const Json& j) {
  Tensor t(kind_from_json(j));
  std::function<void(const Json&, std::vector<std::size_t>&)> fill = [&](const Json& node, std::vector<std::size_t>& idx) {
    if (idx.size() == t.order()) {
      t.at(idx) = rational_from_json(node);
      return;
    }
    if (!node.is_array() || node.size() != t.dim())
      bad("w must be nested arrays of size " + std::to_string(t.dim()) + " and depth " + std::to_string(t.order()));
    for (std::size_t a = 0; a < t.dim(); ++a) {
      idx.push_back(a);
      fill(node[a], idx);
      idx.pop_back();
    }
  };
  std::vector<std::size_t> idx;
  fill(field(j, "w"), idx);
  if (t.is_zero()) bad("tensor is zero");
  return t;
}

Json to_json(const GradedPresentation& p) {
  const std::size_t n = kind_dim(p.kind);
  const std::size_t len = kind_order(p.kind) - 1;
  Json rels = Json::array();
  for (const Vector& r : p.relations) {
    Json terms = Json::array();
    for (std::size_t w = 0; w < r.size(); ++w)
      if (!r[w].is_zero()) terms.push_back({{"word", word_of_index(w, len, n)}, {"c", to_json(r[w])}});
    rels.push_back(terms);
  }
  return {{"kind", kind_name(p.kind)}, {"relations", rels}};
}

GradedPresentation presentation_from_json(const Json& j) {
  GradedPresentation p;
  p.kind = kind_from_json(j);
  const std::size_t n = kind_dim(p.kind);
  const std::size_t len = kind_order(p.kind) - 1;
  std::size_t words = 1;
  for (std::size_t i = 0; i < len; ++i) words *= n;
  for (const Json& rel : field(j, "relations")) {
    Vector v(words);
    for (const Json& term : rel) {
      auto w = field(term, "word").get<std::vector<std::size_t>>();
      if (w.size() != len) bad("relation words must have length " + std::to_string(len));
      for (std::size_t g : w)
        if (g >= n) bad("generator index out of range");
      v[word_index(w, n)] += rational_from_json(field(term, "c"));
    }
    p.relations.push_back(v);
  }
  if (p.relations.size() != kind_relations(p.kind))
    bad("expected " + std::to_string(kind_relations(p.kind)) + " relations");
  return p;
}

ProblemInput input_from_json(const Json& j) {
  if (j.is_object() && j.contains("w")) return tensor_from_json(j);
  if (j.is_object() && j.contains("relations")) return presentation_from_json(j);
  bad("input must contain \"w\" (tensor) or \"relations\" (presentation)");
}

Pencil pencil_from_json(const Json& j) {
  if (j.is_object() && j.contains("form")) return segre_lift(homform_from_json(j.at("form")));
  Pencil p{matrix_from_json(field(j, "m")), matrix_from_json(field(j, "n"))};
  if (p.m.rows() != 4 || p.m.cols() != 4 || p.n.rows() != 4 || p.n.cols() != 4) bad("pencil matrices must be 4x4");
  if (p.m != p.m.transpose() || p.n != p.n.transpose()) bad("pencil matrices must be symmetric");
  return p;
}

Json to_json(const AlgebraicPoint& p) {
  Json coords = Json::array();
  for (const UniPoly& c : p.coords) coords.push_back(c.str());
  return {{"modulus", p.modulus.str()}, {"coords", coords}};
}

Json to_json(const NondegeneracyVerdict& v) {
  Json j{{"pass", v.pass}};
  if (v.kernel_dims.empty()) j["elliptic"] = v.elliptic;
  j["failing_slot"] = optional_json(v.failing_slot);
  j["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  if (!v.kernel_dims.empty()) j["kernel_dims"] = v.kernel_dims;
  if (!v.reason.empty()) j["reason"] = v.reason;
  return j;
}

Json to_json(const SegreSymbol& s) {
  Json groups = Json::array();
  for (const auto& g : s.groups) groups.push_back({{"grouping", g.grouping.str()}, {"blocks", g.blocks}});
  return {{"symbol", s.str()}, {"groups", groups}};
}

Json to_json(const CurveClass& c) {
  const auto& d = c.diagnostics;
  Json diag{{"zero_form", d.zero_form},
            {"squarefree", d.squarefree},
            {"hessian_vanishes", d.hessian_vanishes},
            {"singular_points", optional_json(d.singular_points)},
            {"tangent_cone_rank", optional_json(d.tangent_cone_rank)},
            {"components", d.components},
            {"degenerate_pencil", d.degenerate_pencil}};
  if (c.segre) diag["segre_groups"] = to_json(*c.segre)["groups"];
  return {{"family", c.family == Family::Plane ? "plane" : "quadric"},
          {"verdict", c.verdict},
          {"segre", c.segre ? Json(c.segre->str()) : Json(nullptr)},
          {"diagnostics", diag}};
}

Json to_json(const HHReport& r) {
  return {{"h", r.h},
          {"euler", r.euler},
          {"bracket",
           {{"dim", r.invariants.dim},
            {"derived", r.invariants.derived},
            {"center", r.invariants.center},
            {"killing_rank", r.invariants.killing_rank}}},
          {"cup_rank", r.cup_rank}};
}

Json to_json(const CartanData& c) {
  return {{"cartan", to_json(c.cartan)},
          {"coxeter", to_json(c.coxeter)},
          {"serre_charpoly", c.serre_charpoly.str()},
          {"unipotent", c.unipotent}};
}

Json algebra_to_json(const QuiverAlgebra& a) {
  Json comps = Json::array();
  for (std::size_t i = 0; i < a.vertices(); ++i)
    for (std::size_t j = i; j < a.vertices(); ++j) comps.push_back({{"from", i}, {"to", j}, {"dim", a.component_dim(i, j)}});
  Json basis = Json::array();
  for (const auto& b : a.basis()) basis.push_back({{"source", b.source}, {"target", b.target}, {"word", b.word}});
  Json table = Json::array();
  for (std::size_t u = 0; u < a.dim(); ++u)
    for (std::size_t v = 0; v < a.dim(); ++v) {
      const auto& prod = a.mult(u, v);
      if (prod.empty()) continue;
      Json terms = Json::array();
      for (const auto& [k, c] : prod) terms.push_back({{"index", k}, {"c", to_json(c)}});
      table.push_back({{"u", u}, {"v", v}, {"product", terms}});
    }
  return {{"dim", a.dim()}, {"components", comps}, {"basis", basis}, {"structure_constants", table}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    bad(path + ": " + e.what());
  }
}

}  // namespace ncsurf
