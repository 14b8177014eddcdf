#include "ncsurf/algebraic.hpp"

#include "ncsurf/error.hpp"
#include "ncsurf/resultant.hpp"

#include <algorithm>
#include <map>

namespace ncsurf {

AlgebraicContext::AlgebraicContext(const UniPoly& f) : f_(f.monic()) {
  if (f_.degree() < 1) throw Error(ErrorCode::InvalidInput, "context modulus must be nonconstant");
  if (gcd(f_, f_.derivative()).degree() > 0)
    throw Error(ErrorCode::InvalidInput, "context modulus must be squarefree");
}

UniPoly AlgebraicContext::inverse(const UniPoly& a) const {
  ExtendedGcd e = extended_gcd(a % f_, f_);
  if (e.g.degree() != 0) throw Error(ErrorCode::InternalInconsistency, "inverting a zero divisor");
  return e.s % f_;
}

AlgebraicContext::Split AlgebraicContext::split_on(const UniPoly& a) const {
  Split s;
  UniPoly r = a % f_;
  if (r.is_zero()) {
    s.zero = *this;
    return s;
  }
  UniPoly g = gcd(r, f_);
  if (g.degree() == 0) {
    s.unit = *this;
    return s;
  }
  s.zero = restrict_to(g);
  UniPoly rest = exact_div(f_, g);
  if (rest.degree() > 0) s.unit = restrict_to(rest);
  return s;
}

AlgebraicContext AlgebraicContext::restrict_to(const UniPoly& factor) const {
  if (!divides(factor, f_)) throw Error(ErrorCode::InternalInconsistency, "restriction to a non-factor");
  return AlgebraicContext(factor);
}

namespace {

void trim(ContextPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

ContextPoly reduce(const AlgebraicContext& ctx, const ContextPoly& p) {
  ContextPoly out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(ctx.reduce(c));
  trim(out);
  return out;
}

struct Branch {
  AlgebraicContext ctx;
  ContextPoly poly;  // monic or empty
};

// Makes p monic, splitting wherever its apparent leading coefficient vanishes.
void normalize(const AlgebraicContext& ctx, ContextPoly p, std::vector<Branch>& out) {
  p = reduce(ctx, p);
  if (p.empty()) {
    out.push_back({ctx, {}});
    return;
  }
  auto split = ctx.split_on(p.back());
  if (split.unit) {
    const AlgebraicContext& u = *split.unit;
    ContextPoly q = reduce(u, p);
    UniPoly inv = u.inverse(q.back());
    for (auto& c : q) c = u.mul(c, inv);
    out.push_back({u, std::move(q)});
  }
  if (split.zero) {
    p.pop_back();
    normalize(*split.zero, std::move(p), out);
  }
}

// Remainder of a modulo a monic b.
ContextPoly remainder(const AlgebraicContext& ctx, ContextPoly a, const ContextPoly& b) {
  a = reduce(ctx, a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    UniPoly lc = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = ctx.reduce(a[shift + i] - ctx.mul(lc, b[i]));
    a.pop_back();
    trim(a);
  }
  return a;
}

void gcd2(const AlgebraicContext& ctx, const ContextPoly& a, const ContextPoly& b,
          std::vector<Branch>& out) {
  std::vector<Branch> nb;
  normalize(ctx, b, nb);
  for (auto& [c1, bn] : nb) {
    if (bn.empty()) {
      normalize(c1, a, out);
      continue;
    }
    if (bn.size() == 1) {  // unit
      out.push_back({c1, bn});
      continue;
    }
    gcd2(c1, bn, remainder(c1, a, bn), out);
  }
}

}  // namespace

std::vector<ContextGcd> gcd_over_context(const AlgebraicContext& ctx,
                                         const std::vector<ContextPoly>& polys) {
  std::vector<Branch> cur{{ctx, {}}};
  for (const auto& p : polys) {
    std::vector<Branch> next;
    for (const auto& [c, g] : cur) gcd2(c, g, p, next);
    cur = std::move(next);
  }
  std::vector<ContextGcd> out;
  for (auto& [c, g] : cur) out.push_back({c, std::move(g)});
  return out;
}

std::optional<std::vector<Rational>> AlgebraicPoint::rational() const {
  if (modulus.degree() != 1) return std::nullopt;
  Rational root = -modulus.coeff(0) / modulus.coeff(1);
  std::vector<Rational> out;
  for (const auto& c : coords) out.push_back(c.eval(root));
  return out;
}

UniPoly eval_at(const Poly& p, const AlgebraicPoint& pt) {
  UniPoly acc;
  for (const auto& [e, c] : p.terms()) {
    UniPoly t(c);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t = (t * pt.coords[i]) % pt.modulus;
    acc += t;
  }
  return acc % pt.modulus;
}

Matrix random_unimodular(std::size_t n, Rng& rng, int bound) {
  Matrix lower = Matrix::identity(n);
  Matrix upper = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      lower(i, j) = Rational(rng.uniform(-bound, bound));
      upper(j, i) = Rational(rng.uniform(-bound, bound));
    }
  }
  return lower * upper;
}

namespace {

enum class Outcome { Ok, Degenerate, Collision };

struct Attempt {
  Outcome outcome = Outcome::Ok;
  std::vector<AlgebraicPoint> points;
};

// y1-coefficient lists (with y2 = 1, coefficients polynomials in y0).
ContextPoly as_bivariate(const Poly& g) {
  ContextPoly out;
  for (const auto& [e, c] : g.terms()) {
    auto k = static_cast<std::size_t>(e[1]);
    if (out.size() <= k) out.resize(k + 1);
    out[k] += UniPoly::monomial(c, static_cast<std::size_t>(e[0]));
  }
  trim(out);
  return out;
}

UniPoly binary_restriction(const Poly& g) {
  // g(s, 1, 0) as a polynomial in s.
  UniPoly out;
  for (const auto& [e, c] : g.terms())
    if (e[2] == 0) out += UniPoly::monomial(c, static_cast<std::size_t>(e[0]));
  return out;
}

Attempt solve_once(const std::vector<Poly>& forms, Rng& rng, int bound) {
  Attempt res;
  Matrix t = random_unimodular(3, rng, bound);
  std::vector<Poly> g;
  for (const auto& f : forms) g.push_back(f.linear_substitute(t));
  const int d = forms.front().total_degree();

  // Points on y2 = 0.
  std::vector<Rational> e100{1, 0, 0};
  bool all_at_e = true;
  UniPoly common;
  for (const auto& gi : g) {
    if (!gi.eval(e100).is_zero()) all_at_e = false;
    common = gcd(common, binary_restriction(gi));
  }
  if (common.is_zero()) {
    res.outcome = Outcome::Degenerate;
    return res;
  }

  Poly h1(3), h2(3);
  for (const auto& gi : g) {
    h1 += Rational(rng.uniform(1, 9)) * gi;
    h2 += Rational(rng.uniform(-9, 9)) * gi;
  }
  std::vector<Rational> e010{0, 1, 0};
  if (h1.eval(e010).is_zero() || h2.eval(e010).is_zero()) {
    res.outcome = Outcome::Collision;
    return res;
  }
  ContextPoly b1 = as_bivariate(h1);
  ContextPoly b2 = as_bivariate(h2);
  if (static_cast<int>(b1.size()) != d + 1 || static_cast<int>(b2.size()) != d + 1) {
    res.outcome = Outcome::Collision;
    return res;
  }
  UniPoly r = resultant(b1, b2);
  if (r.is_zero()) {
    res.outcome = Outcome::Degenerate;
    return res;
  }
  // A solution on the line at infinity is bad luck with the change; a curve
  // of solutions has already shown up as a vanishing resultant.
  if (all_at_e || common.degree() > 0) {
    res.outcome = Outcome::Collision;
    return res;
  }
  if (r.degree() <= 0) return res;
  AlgebraicContext ctx(squarefree_part(r));
  std::vector<ContextPoly> system;
  for (const auto& gi : g) system.push_back(as_bivariate(gi));
  for (auto& [c, gg] : gcd_over_context(ctx, system)) {
    if (gg.empty()) {
      res.outcome = Outcome::Degenerate;
      return res;
    }
    if (gg.size() == 1) continue;
    // A non-reduced point gives (y1 - a)^k; anything else with k > 1 means
    // two points share the abscissa.
    const auto k = static_cast<long>(gg.size() - 1);
    UniPoly root = c.reduce(-gg[k - 1] * UniPoly(Rational(1, k)));
    if (k > 1) {
      bool on_all = true;
      for (const auto& s : system) {
        UniPoly v;
        UniPoly pw(1);
        for (const auto& coef : s) {
          v = c.reduce(v + coef * pw);
          pw = c.mul(pw, root);
        }
        if (!v.is_zero()) on_all = false;
      }
      if (!on_all) {
        res.outcome = Outcome::Collision;
        return res;
      }
    }
    std::vector<UniPoly> y{UniPoly{0, 1}, root, UniPoly(1)};
    AlgebraicPoint pt;
    pt.modulus = c.modulus();
    for (std::size_t i = 0; i < 3; ++i) {
      UniPoly xi;
      for (std::size_t j = 0; j < 3; ++j) xi += UniPoly(t(i, j)) * y[j];
      pt.coords.push_back(c.reduce(xi));
    }
    res.points.push_back(std::move(pt));
  }
  return res;
}

// Splits a point so that each piece has first nonzero coordinate 1.
void normalize_point(const AlgebraicContext& ctx, const std::vector<UniPoly>& coords,
                     std::size_t k, std::vector<AlgebraicPoint>& out) {
  if (k == coords.size()) throw Error(ErrorCode::InternalInconsistency, "solver produced the zero vector");
  auto split = ctx.split_on(coords[k]);
  if (split.unit) {
    const AlgebraicContext& u = *split.unit;
    UniPoly inv = u.inverse(coords[k]);
    AlgebraicPoint pt;
    pt.modulus = u.modulus();
    for (const auto& c : coords) pt.coords.push_back(u.mul(c, inv));
    out.push_back(std::move(pt));
  }
  if (split.zero) normalize_point(*split.zero, coords, k + 1, out);
}

}  // namespace

SolveResult dynamic_eval_solve(const std::vector<HomForm>& system, std::uint64_t seed) {
  std::vector<Poly> forms;
  int degree = -1;
  for (const auto& f : system) {
    if (f.nvars() != 3) throw Error(ErrorCode::InvalidInput, "solver expects ternary forms");
    if (f.is_zero()) continue;
    if (degree >= 0 && f.degree() != degree)
      throw Error(ErrorCode::InvalidInput, "solver expects forms of equal degree");
    degree = f.degree();
    forms.push_back(f.poly());
  }
  if (forms.empty()) throw Error(ErrorCode::NotZeroDimensional, "empty system");
  {
    std::vector<Vector> rows;
    std::map<Poly::Exponent, std::size_t> index;
    for (const auto& f : forms)
      for (const auto& [e, c] : f.terms()) index.try_emplace(e, index.size());
    for (const auto& f : forms) {
      Vector v(index.size());
      for (const auto& [e, c] : f.terms()) v[index[e]] = c;
      rows.push_back(std::move(v));
    }
    if (degree == 0) {
      return {};
    }
    if (rank(Matrix::from_rows(rows, index.size())) <= 1)
      throw Error(ErrorCode::NotZeroDimensional, "a single curve has infinitely many points");
  }

  Rng rng(seed);
  int degenerate = 0;
  std::optional<Attempt> first;
  for (int attempt = 0; attempt < 16; ++attempt) {
    Attempt a = solve_once(forms, rng, 3 + attempt);
    if (a.outcome == Outcome::Degenerate) {
      if (++degenerate >= 3) throw Error(ErrorCode::NotZeroDimensional, "zero set is not finite");
      continue;
    }
    if (a.outcome == Outcome::Collision) continue;
    if (!first) {
      first = std::move(a);
      continue;
    }
    auto count = [](const Attempt& x) {
      std::size_t n = 0;
      for (const auto& p : x.points) n += p.multiplicity();
      return n;
    };
    if (count(*first) != count(a)) {
      first = std::move(a);
      continue;
    }
    SolveResult out;
    for (const auto& p : first->points) {
      AlgebraicContext ctx(p.modulus);
      normalize_point(ctx, p.coords, 0, out.points);
    }
    for (const auto& p : out.points) out.count += p.multiplicity();
    return out;
  }
  throw Error(ErrorCode::InternalInconsistency, "solver did not stabilize");
}

}  // namespace ncsurf
