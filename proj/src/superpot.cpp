#include "ncsurf/superpot.hpp"

#include "ncsurf/error.hpp"

namespace ncsurf {

std::vector<std::vector<Poly>> contraction_matrix(const Tensor& t, std::size_t j) {
  if (t.kind() != Kind::Quadratic) throw Error(ErrorCode::InvalidInput, "contraction_matrix needs a quadratic tensor");
  std::vector<std::vector<Poly>> m(3, std::vector<Poly>(3, Poly(3)));
  std::vector<std::size_t> idx(3);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      for (std::size_t k = 0; k < 3; ++k) {
        idx[j % 3] = k;
        idx[(j + 2) % 3] = r;
        idx[(j + 1) % 3] = c;
        const Rational& x = t.at(idx);
        if (!x.is_zero()) m[r][c] += x * Poly::variable(3, k);
      }
    }
  }
  return m;
}

namespace {

Poly det3(const std::vector<std::vector<Poly>>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

AlgebraicPoint rational_point(const std::vector<Rational>& coords) {
  AlgebraicPoint p;
  p.modulus = UniPoly{0, 1};
  for (const auto& c : coords) p.coords.emplace_back(c);
  return p;
}

// A common zero of the forms, which are known to have one; handles
// positive-dimensional zero sets by cutting with random lines.
AlgebraicPoint find_common_zero(const std::vector<HomForm>& forms, std::uint64_t seed) {
  try {
    auto r = dynamic_eval_solve(forms, seed);
    if (!r.points.empty()) return r.points.front();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotZeroDimensional) throw;
  }
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (int attempt = 0; attempt < 8; ++attempt) {
    Poly line(3);
    for (std::size_t i = 0; i < 3; ++i) line += Rational(rng.uniform(-5, 5)) * Poly::variable(3, i);
    if (line.is_zero()) continue;
    std::vector<HomForm> cut = forms;
    const int d = forms.front().degree();
    // Multiply the line by each variable power so that degrees stay equal.
    for (std::size_t i = 0; i < 3; ++i) {
      Poly m = line * pow(Poly::variable(3, i), static_cast<unsigned>(d - 1));
      cut.emplace_back(d, m);
    }
    try {
      auto r = dynamic_eval_solve(cut, seed + static_cast<std::uint64_t>(attempt) + 1);
      if (!r.points.empty()) return r.points.front();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotZeroDimensional) throw;
    }
  }
  throw Error(ErrorCode::InternalInconsistency, "could not locate a point on a degenerate locus");
}

}  // namespace

NondegeneracyVerdict check_quadruple(const Tensor& t, std::uint64_t seed) {
  if (t.kind() != Kind::Quadratic) throw Error(ErrorCode::InvalidInput, "check_quadruple needs a quadratic tensor");
  NondegeneracyVerdict v;
  v.elliptic = true;
  if (t.is_zero()) {
    v.reason = "zero tensor";
    v.elliptic = false;
    return v;
  }
  for (std::size_t j = 0; j < 3; ++j) {
    auto m = contraction_matrix(t, j);
    if (det3(m).is_zero()) v.elliptic = false;
    std::vector<HomForm> minors;
    for (std::size_t r0 = 0; r0 < 3; ++r0)
      for (std::size_t r1 = r0 + 1; r1 < 3; ++r1)
        for (std::size_t c0 = 0; c0 < 3; ++c0)
          for (std::size_t c1 = c0 + 1; c1 < 3; ++c1) {
            Poly minor = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
            if (!minor.is_zero()) minors.emplace_back(2, minor);
          }
    std::optional<AlgebraicPoint> witness;
    if (minors.empty()) {
      witness = rational_point({1, 0, 0});
    } else {
      bool finite = true;
      try {
        auto r = dynamic_eval_solve(minors, seed);
        if (r.count > 0) witness = r.points.front();
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotZeroDimensional) throw;
        finite = false;
      }
      if (!finite) witness = find_common_zero(minors, seed);
    }
    if (witness && !v.failing_slot) {
      v.failing_slot = j;
      v.witness = witness;
      v.reason = "contraction in slot " + std::to_string(j) + " drops to rank <= 1";
    }
  }
  v.pass = !v.failing_slot.has_value();
  if (!v.pass) v.elliptic = false;
  return v;
}

NondegeneracyVerdict check_quintuple(const Tensor& t) {
  if (t.kind() != Kind::Cubic) throw Error(ErrorCode::InvalidInput, "check_quintuple needs a cubic tensor");
  NondegeneracyVerdict v;
  if (t.is_zero()) {
    v.reason = "zero tensor";
    return v;
  }
  std::vector<std::size_t> idx(4);
  for (std::size_t j = 0; j < 4; ++j) {
    Matrix m(4, 4);
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b)
        for (std::size_t c = 0; c < 2; ++c)
          for (std::size_t d = 0; d < 2; ++d) {
            idx[j] = a;
            idx[(j + 1) % 4] = b;
            idx[(j + 2) % 4] = c;
            idx[(j + 3) % 4] = d;
            m(c * 2 + d, a * 2 + b) = t.at(idx);
          }
    auto k = kernel_basis(m);
    v.kernel_dims.push_back(k.size());
    if (k.empty() || v.failing_slot) continue;
    auto det2 = [](const Vector& x) { return x[0] * x[3] - x[1] * x[2]; };
    std::optional<AlgebraicPoint> witness;
    if (k.size() == 1) {
      if (det2(k[0]).is_zero()) witness = rational_point(k[0]);
    } else if (det2(k[0]).is_zero()) {
      witness = rational_point(k[0]);
    } else {
      // det(s k0 + k1) is a quadratic in s with nonzero leading term; any
      // root gives a decomposable kernel element.
      const Vector& p = k[0];
      const Vector& q = k[1];
      UniPoly f{q[0] * q[3] - q[1] * q[2], p[0] * q[3] + q[0] * p[3] - p[1] * q[2] - q[1] * p[2], det2(p)};
      UniPoly g = squarefree_part(f);
      AlgebraicPoint w;
      w.modulus = g;
      for (std::size_t i = 0; i < 4; ++i) w.coords.push_back((UniPoly{0, 1} * UniPoly(p[i]) + UniPoly(q[i])) % g);
      witness = w;
    }
    if (witness) {
      v.failing_slot = j;
      v.witness = witness;
      v.reason = "decomposable functional pairs to zero at slot " + std::to_string(j);
    } else if (k.size() >= 2) {
      v.failing_slot = j;
      v.reason = "pairing kernel of dimension >= 2 at slot " + std::to_string(j);
    }
  }
  v.pass = !v.failing_slot.has_value();
  return v;
}

NondegeneracyVerdict check_nondegenerate(const Tensor& t, std::uint64_t seed) {
  return t.kind() == Kind::Quadratic ? check_quadruple(t, seed) : check_quintuple(t);
}

GradedPresentation extract_relations(const Tensor& t) {
  const std::size_t n = t.dim();
  const std::size_t len = t.size() / n;
  std::vector<Vector> rels(n, Vector(len));
  for (std::size_t f = 0; f < t.size(); ++f) rels[f % n][f / n] = t.entries()[f];
  EchelonBasis span(len);
  for (const auto& r : rels) span.insert(r);
  const std::size_t want = kind_relations(t.kind());
  if (span.rank() != want)
    throw Error(ErrorCode::DegenerateRelations,
                "relation space has dimension " + std::to_string(span.rank()) + ", expected " + std::to_string(want));
  return {t.kind(), span.basis()};
}

GradedPresentation canonical_presentation(const GradedPresentation& p) {
  const std::size_t n = kind_dim(p.kind);
  const std::size_t len = p.kind == Kind::Quadratic ? n * n : n * n * n;
  EchelonBasis span(len);
  for (const auto& r : p.relations) {
    if (r.size() != len) throw Error(ErrorCode::InvalidInput, "relation vector has wrong length");
    span.insert(r);
  }
  const std::size_t want = kind_relations(p.kind);
  if (p.relations.size() != want || span.rank() != want)
    throw Error(ErrorCode::DegenerateRelations, "expected " + std::to_string(want) + " independent relations");
  return {p.kind, span.basis()};
}

Tensor recover_superpotential(const GradedPresentation& p) {
  GradedPresentation c = canonical_presentation(p);
  const std::size_t n = kind_dim(c.kind);
  const std::size_t len = c.relations.front().size();
  const std::size_t total = len * n;
  std::vector<Vector> left, right;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& r : c.relations) {
      Vector a(total), b(total);
      for (std::size_t k = 0; k < len; ++k) {
        a[i * len + k] = r[k];
        b[k * n + i] = r[k];
      }
      left.push_back(std::move(a));
      right.push_back(std::move(b));
    }
  }
  auto meet = intersect_spans(left, right, total);
  if (meet.size() != 1)
    throw Error(ErrorCode::NotPotential,
                "(V x R) meet (R x V) has dimension " + std::to_string(meet.size()) + ", expected 1");
  Vector w = meet.front();
  for (const auto& x : w) {
    if (!x.is_zero()) {
      w = scaled(w, x.inverse());
      break;
    }
  }
  return Tensor(c.kind, std::move(w));
}

}  // namespace ncsurf
