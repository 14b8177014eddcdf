#include "ncsurf/pointscheme.hpp"

#include "ncsurf/error.hpp"
#include "ncsurf/resultant.hpp"
#include "ncsurf/superpot.hpp"

#include <algorithm>
#include <map>

namespace ncsurf {

namespace {

using PolyMatrix = std::vector<std::vector<Poly>>;

Poly det3(const PolyMatrix& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Poly linear_form(const Vector& l) {
  Poly p(l.size());
  for (std::size_t i = 0; i < l.size(); ++i)
    if (!l[i].is_zero()) p += l[i] * Poly::variable(l.size(), i);
  return p;
}

bool proportional(const Poly& a, const Poly& b) { return monic(a) == monic(b); }

// f restricted to the line s -> p + s q.
UniPoly restrict_to_line(const Poly& f, const Vector& p, const Vector& q) {
  std::vector<Poly> sub;
  for (std::size_t i = 0; i < p.size(); ++i)
    sub.push_back(Poly::constant(1, p[i]) + q[i] * Poly::variable(1, 0));
  Poly g = f.substitute(sub);
  std::vector<Rational> c(static_cast<std::size_t>(std::max(g.total_degree(), 0)) + 1);
  for (const auto& [e, x] : g.terms()) c[static_cast<std::size_t>(e[0])] = x;
  return UniPoly(c);
}

// Linear forms vanishing at every point (all conjugates included).
std::vector<Vector> lines_through(const std::vector<AlgebraicPoint>& pts) {
  std::vector<Vector> rows;
  for (const auto& pt : pts) {
    const auto d = static_cast<std::size_t>(pt.modulus.degree());
    for (std::size_t k = 0; k < d; ++k) {
      Vector row(3);
      for (std::size_t i = 0; i < 3; ++i) row[i] = (pt.coords[i] % pt.modulus).coeff(k);
      rows.push_back(row);
    }
  }
  return kernel_basis(Matrix::from_rows(rows, 3));
}

PolyMatrix hessian(const Poly& f) {
  PolyMatrix h(3, std::vector<Poly>(3, Poly(3)));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) h[i][j] = f.derivative(i).derivative(j);
  return h;
}

Matrix hessian_at(const PolyMatrix& h, const std::vector<Rational>& p) {
  Matrix m(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = h[i][j].eval(p);
  return m;
}

// f = L^2 M: the double line L from double roots on random lines.
std::optional<Poly> repeated_line(const Poly& f, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Vector> found;
  for (int attempt = 0; attempt < 40 && found.size() < 2; ++attempt) {
    Vector p(3), q(3);
    for (std::size_t i = 0; i < 3; ++i) {
      p[i] = Rational(static_cast<long>(rng.uniform(-9, 9)));
      q[i] = Rational(static_cast<long>(rng.uniform(-9, 9)));
    }
    UniPoly g = restrict_to_line(f, p, q);
    if (g.degree() != 3) continue;
    UniPoly r = squarefree_part(gcd(g, g.derivative()));
    if (r.degree() != 1) continue;
    Rational s = -r.coeff(0) / r.coeff(1);
    Vector pt(3);
    for (std::size_t i = 0; i < 3; ++i) pt[i] = p[i] + s * q[i];
    if (!found.empty() && rank(Matrix::from_rows({found[0], pt}, 3)) < 2) continue;
    found.push_back(pt);
  }
  if (found.size() < 2) return std::nullopt;
  auto ls = kernel_basis(Matrix::from_rows(found, 3));
  if (ls.size() != 1) return std::nullopt;
  Poly l = linear_form(ls[0]);
  if (!divides(l * l, f)) return std::nullopt;
  return l;
}

[[noreturn]] void unclassified(const std::string& why) { throw Error(ErrorCode::UnclassifiedCubic, why); }

}  // namespace

HomForm plane_cubic(const Tensor& t, std::size_t slot) { return HomForm(3, det3(contraction_matrix(t, slot))); }

CurveClass classify_plane_cubic(const HomForm& form, std::uint64_t seed) {
  if (form.nvars() != 3 || form.degree() != 3) throw Error(ErrorCode::InvalidInput, "expected a ternary cubic");
  CurveClass out;
  out.family = Family::Plane;
  auto& diag = out.diagnostics;
  const Poly& f = form.poly();
  if (f.is_zero()) {
    diag.zero_form = true;
    out.verdict = "Linear";
    return out;
  }

  // Every non-reduced cubic is a cone, as are three concurrent lines: these
  // are exactly the cubics with vanishing Hessian.
  const PolyMatrix h = hessian(f);
  if (det3(h).is_zero()) {
    diag.hessian_vanishes = true;
    if (auto l = repeated_line(f, seed)) {
      diag.squarefree = false;
      Poly rest = exact_div(f, *l * *l);
      if (proportional(rest, *l)) {
        diag.components = "triple line";
        out.verdict = "P8";
      } else {
        diag.components = "double line and line";
        out.verdict = "P9";
      }
    } else {
      diag.components = "three concurrent lines";
      out.verdict = "P5";
    }
    return out;
  }

  std::vector<HomForm> partials;
  for (std::size_t i = 0; i < 3; ++i) partials.emplace_back(2, f.derivative(i));
  SolveResult sing;
  try {
    sing = dynamic_eval_solve(partials, seed);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotZeroDimensional) throw;
    unclassified("reduced cubic with infinite singular locus");
  }
  diag.singular_points = sing.count;

  switch (sing.count) {
    case 0:
      diag.components = "smooth";
      out.verdict = "P1";
      return out;
    case 3:
      diag.components = "triangle";
      out.verdict = "P4";
      return out;
    case 2: {
      auto ls = lines_through(sing.points);
      if (ls.size() != 1 || !divides(linear_form(ls[0]), f)) unclassified("two singular points not on a component");
      diag.components = "conic and secant line";
      out.verdict = "P6";
      return out;
    }
    case 1: {
      auto p = sing.points.at(0).rational();
      if (!p) unclassified("single singular point is not rational");
      Matrix hp = hessian_at(h, *p);
      const std::size_t r = rank(hp);
      diag.tangent_cone_rank = r;
      if (r == 2) {
        diag.components = "nodal cubic";
        out.verdict = "P3";
        return out;
      }
      if (r != 1) unclassified("unexpected tangent cone rank");
      Vector row;
      for (std::size_t i = 0; i < 3 && row.empty(); ++i) {
        Vector ri(hp.row(i).begin(), hp.row(i).end());
        if (!is_zero(ri)) row = ri;
      }
      if (divides(linear_form(row), f)) {
        diag.components = "conic and tangent line";
        out.verdict = "P7";
      } else {
        diag.components = "cuspidal cubic";
        out.verdict = "P2";
      }
      return out;
    }
    default:
      unclassified("too many singular points for a reduced cubic");
  }
}

HomForm quadric_divisor(const Tensor& t) {
  if (t.kind() != Kind::Cubic) throw Error(ErrorCode::InvalidInput, "quadric_divisor needs a cubic tensor");
  PolyMatrix m(2, std::vector<Poly>(2, Poly(4)));
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      Poly pq = Poly::variable(4, a) * Poly::variable(4, 2 + b);
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t d = 0; d < 2; ++d) {
          const Rational& w = t.at({a, b, c, d});
          if (!w.is_zero()) m[d][c] += w * pq;
        }
    }
  return HomForm(4, m[0][0] * m[1][1] - m[0][1] * m[1][0]);
}

Pencil segre_lift(const HomForm& form) {
  if (form.nvars() != 4 || form.degree() != 4) throw Error(ErrorCode::InvalidInput, "expected a form of bidegree (2, 2)");
  Pencil out{Matrix(4, 4), Matrix(4, 4)};
  out.m(0, 3) = out.m(3, 0) = Rational(1, 2);
  out.m(1, 2) = out.m(2, 1) = Rational(-1, 2);
  for (const auto& [e, c] : form.poly().terms()) {
    if (e[0] + e[1] != 2 || e[2] + e[3] != 2) throw Error(ErrorCode::InvalidInput, "form is not of bidegree (2, 2)");
    // Split x^a y^(2-a) u^b v^(2-b) into two factors from {xu, xv, yu, yv};
    // for a = b = 1 the choice is xu * yv.
    std::vector<std::size_t> xs, us;
    for (int i = 0; i < e[0]; ++i) xs.push_back(0);
    for (int i = 0; i < e[1]; ++i) xs.push_back(1);
    for (int i = 0; i < e[2]; ++i) us.push_back(0);
    for (int i = 0; i < e[3]; ++i) us.push_back(1);
    const std::size_t z0 = xs[0] * 2 + us[0];
    const std::size_t z1 = xs[1] * 2 + us[1];
    if (z0 == z1) {
      out.n(z0, z0) += c;
    } else {
      out.n(z0, z1) += c / Rational(2);
      out.n(z1, z0) += c / Rational(2);
    }
  }
  Vector vm, vn;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      vm.push_back(out.m(i, j));
      vn.push_back(out.n(i, j));
    }
  if (rank(Matrix::from_rows({vm, vn}, 16)) < 2)
    throw Error(ErrorCode::DegeneratePencil, "lift is proportional to the Segre quadric");
  return out;
}

std::string SegreSymbol::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < expansion.size(); ++i) {
    if (i) s += ",";
    const auto& b = expansion[i];
    if (b.size() == 1) {
      s += std::to_string(b[0]);
    } else {
      s += "(";
      for (std::size_t k = 0; k < b.size(); ++k) s += (k ? "," : "") + std::to_string(b[k]);
      s += ")";
    }
  }
  return s + "]";
}

SegreSymbol segre_symbol(const Matrix& m, const Matrix& n) {
  const std::size_t dim = m.rows();
  if (!m.is_square() || n.rows() != dim || n.cols() != dim) throw Error(ErrorCode::InvalidInput, "pencil shape mismatch");
  if (determinant(m).is_zero()) throw Error(ErrorCode::SingularPencil, "M is singular");
  std::vector<std::vector<UniPoly>> p(dim, std::vector<UniPoly>(dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) p[i][j] = UniPoly{n(i, j), m(i, j)};

  // d_k = gcd of the k x k minors; invariant factors s_k = d_k / d_{k-1}.
  std::vector<UniPoly> d{UniPoly(1)};
  for (std::size_t k = 1; k <= dim; ++k) {
    UniPoly g;
    std::vector<bool> rsel(dim, false), csel(dim, false);
    std::fill(rsel.end() - static_cast<long>(k), rsel.end(), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.end() - static_cast<long>(k), csel.end(), true);
      do {
        std::vector<std::vector<UniPoly>> sub;
        for (std::size_t i = 0; i < dim; ++i) {
          if (!rsel[i]) continue;
          sub.emplace_back();
          for (std::size_t j = 0; j < dim; ++j)
            if (csel[j]) sub.back().push_back(p[i][j]);
        }
        g = gcd(g, bareiss_determinant(sub, UniPoly(1)));
      } while (std::next_permutation(csel.begin(), csel.end()));
    } while (std::next_permutation(rsel.begin(), rsel.end()));
    if (g.is_zero()) throw Error(ErrorCode::SingularPencil, "det(lambda M + N) vanishes identically");
    d.push_back(g);
  }
  std::vector<UniPoly> inv;
  for (std::size_t k = 1; k <= dim; ++k) inv.push_back(exact_div(d[k], d[k - 1]));

  std::vector<UniPoly> nonconst;
  for (const auto& s : inv)
    for (const auto& [g, mult] : squarefree_decomposition(s))
      if (!g.is_constant()) nonconst.push_back(g);
  SegreSymbol out;
  if (nonconst.empty()) return out;
  auto basis = gcd_free_basis(nonconst);
  for (const auto& g : basis.basis) {
    SegreGroup grp{g, {}};
    for (const auto& s : inv) {
      int e = multiplicity(g, s);
      if (e > 0) grp.blocks.push_back(e);
    }
    std::sort(grp.blocks.rbegin(), grp.blocks.rend());
    out.groups.push_back(grp);
  }
  auto key = [](const std::vector<int>& b) {
    int sum = 0;
    for (int x : b) sum += x;
    return std::make_tuple(-sum, b.size(), b);
  };
  std::sort(out.groups.begin(), out.groups.end(), [&](const SegreGroup& a, const SegreGroup& b) {
    auto ka = key(a.blocks), kb = key(b.blocks);
    if (std::get<0>(ka) != std::get<0>(kb)) return std::get<0>(ka) < std::get<0>(kb);
    if (std::get<1>(ka) != std::get<1>(kb)) return std::get<1>(ka) < std::get<1>(kb);
    return std::get<2>(ka) > std::get<2>(kb);
  });
  for (const auto& grp : out.groups)
    for (int r = 0; r < grp.grouping.degree(); ++r) out.expansion.push_back(grp.blocks);
  return out;
}

const std::vector<std::string>& plane_types() {
  static const std::vector<std::string> v{"P1", "P2", "P3", "P4", "P5", "P6", "P7", "P8", "P9"};
  return v;
}

const std::vector<std::string>& quadric_types() {
  static const std::vector<std::string> v{"Q1", "Q2", "Q3", "Q4",  "Q5",  "Q6", "Q7",
                                          "Q8", "Q9", "Q10", "Q11", "Q12", "Q13"};
  return v;
}

std::optional<std::string> quadric_type_of_symbol(const std::string& symbol) {
  static const std::map<std::string, std::string> table{
      {"[1,1,1,1]", "Q1"},     {"[3,1]", "Q2"},         {"[2,1,1]", "Q3"},   {"[(1,1),1,1]", "Q4"},
      {"[(2,1),1]", "Q5"},     {"[2,(1,1)]", "Q6"},     {"[(3,1)]", "Q7"},   {"[(1,1),(1,1)]", "Q8"},
      {"[2,2]", "Q9"},         {"[4]", "Q10"},          {"[(1,1,1),1]", "Q11"}, {"[(2,1,1)]", "Q12"},
      {"[(2,2)]", "Q13"}};
  auto it = table.find(symbol);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

CurveClass classify_quadric_divisor(const HomForm& f) {
  CurveClass out;
  out.family = Family::Quadric;
  if (f.is_zero()) {
    out.diagnostics.zero_form = true;
    out.verdict = "Linear";
    return out;
  }
  Pencil pencil;
  try {
    pencil = segre_lift(f);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegeneratePencil) throw;
    out.diagnostics.degenerate_pencil = true;
    out.verdict = "Linear";
    return out;
  }
  SegreSymbol sym = segre_symbol(pencil.m, pencil.n);
  auto type = quadric_type_of_symbol(sym.str());
  if (!type) throw Error(ErrorCode::UnknownSymbol, "Segre symbol " + sym.str() + " is not a divisor type");
  out.verdict = *type;
  out.segre = sym;
  return out;
}

}  // namespace ncsurf
