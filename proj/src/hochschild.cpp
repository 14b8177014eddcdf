#include "ncsurf/hochschild.hpp"

#include "ncsurf/error.hpp"

namespace ncsurf {

namespace {

// Position of each basis element inside its component's basis list.
std::vector<std::size_t> component_positions(const QuiverAlgebra& a) {
  std::vector<std::size_t> pos(a.dim());
  for (std::size_t i = 0; i < a.vertices(); ++i)
    for (std::size_t j = i; j < a.vertices(); ++j) {
      const auto& c = a.component(i, j);
      for (std::size_t k = 0; k < c.size(); ++k) pos[c[k]] = k;
    }
  return pos;
}

}  // namespace

RelativeComplex::RelativeComplex(const QuiverAlgebra& a) : a_(&a) {
  const auto& basis = a.basis();
  // C^0: one coordinate per vertex.
  dims_.push_back(a.vertices());
  std::vector<std::vector<std::size_t>> cur;
  for (std::size_t r : a.radical()) cur.push_back({r});
  for (std::size_t n = 1; !cur.empty(); ++n) {
    auto& offs = offsets_[n];
    auto& outs = outputs_[n];
    auto& idx = seq_index_[n];
    std::size_t total = 0;
    for (std::size_t s = 0; s < cur.size(); ++s) {
      const auto& seq = cur[s];
      idx[seq] = s;
      offs.push_back(total);
      outs.push_back(a.component(basis[seq.front()].source, basis[seq.back()].target));
      total += outs.back().size();
    }
    dims_.push_back(total);
    seqs_[n] = cur;
    std::vector<std::vector<std::size_t>> next;
    for (const auto& seq : cur)
      for (std::size_t r : a.radical())
        if (basis[r].source == basis[seq.back()].target) {
          auto ext = seq;
          ext.push_back(r);
          next.push_back(std::move(ext));
        }
    cur = std::move(next);
  }

  const auto pos = component_positions(a);
  for (std::size_t n = 0; n < dims_.size(); ++n) {
    Matrix d(dim(n + 1), dim(n));
    if (n + 1 < dims_.size()) {
      const auto& seqs = seqs_.at(n + 1);
      for (std::size_t si = 0; si < seqs.size(); ++si) {
        const auto& s = seqs[si];
        const std::size_t row0 = offsets_.at(n + 1)[si];
        if (n == 0) {
          // (df)(a) = a f - f a for f = sum lambda_k e_k.
          const BasisElement& el = basis[s[0]];
          d(row0 + pos[s[0]], el.target) += 1;
          d(row0 + pos[s[0]], el.source) -= 1;
          continue;
        }
        // a_1 f(a_2 ... a_{n+1})
        {
          std::vector<std::size_t> tail(s.begin() + 1, s.end());
          std::size_t ti = seq_index_.at(n).at(tail);
          std::size_t col0 = offsets_.at(n)[ti];
          const auto& outs = outputs_.at(n)[ti];
          for (std::size_t p = 0; p < outs.size(); ++p)
            for (const auto& [o, c] : a.mult(s[0], outs[p])) d(row0 + pos[o], col0 + p) += c;
        }
        // sum_k (-1)^k f(... a_k a_{k+1} ...)
        for (std::size_t k = 0; k + 1 < s.size(); ++k) {
          Rational sign = (k + 1) % 2 ? -1 : 1;
          for (const auto& [e, c] : a.mult(s[k], s[k + 1])) {
            std::vector<std::size_t> merged(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(k));
            merged.push_back(e);
            merged.insert(merged.end(), s.begin() + static_cast<std::ptrdiff_t>(k) + 2, s.end());
            std::size_t mi = seq_index_.at(n).at(merged);
            std::size_t col0 = offsets_.at(n)[mi];
            const auto& outs = outputs_.at(n)[mi];
            for (std::size_t p = 0; p < outs.size(); ++p) d(row0 + p, col0 + p) += sign * c;
          }
        }
        // (-1)^{n+1} f(a_1 ... a_n) a_{n+1}
        {
          std::vector<std::size_t> head(s.begin(), s.end() - 1);
          std::size_t hi = seq_index_.at(n).at(head);
          std::size_t col0 = offsets_.at(n)[hi];
          const auto& outs = outputs_.at(n)[hi];
          Rational sign = (n + 1) % 2 ? -1 : 1;
          for (std::size_t p = 0; p < outs.size(); ++p)
            for (const auto& [o, c] : a.mult(outs[p], s.back())) d(row0 + pos[o], col0 + p) += sign * c;
        }
      }
    }
    d_.push_back(std::move(d));
  }
}

std::size_t RelativeComplex::block_offset(std::size_t n, const std::vector<std::size_t>& seq) const {
  return offsets_.at(n)[seq_index_.at(n).at(seq)];
}

Vector RelativeComplex::eval1(const Vector& f, std::size_t radical_elem) const {
  std::size_t si = seq_index_.at(1).at({radical_elem});
  std::size_t off = offsets_.at(1)[si];
  const auto& outs = outputs_.at(1)[si];
  Vector v(a_->dim());
  for (std::size_t p = 0; p < outs.size(); ++p) v[outs[p]] = f[off + p];
  return v;
}

Vector RelativeComplex::from_values1(const std::vector<Vector>& values) const {
  Vector f(dim(1));
  const auto& rad = a_->radical();
  for (std::size_t k = 0; k < rad.size(); ++k) {
    std::size_t si = seq_index_.at(1).at({rad[k]});
    std::size_t off = offsets_.at(1)[si];
    const auto& outs = outputs_.at(1)[si];
    for (std::size_t p = 0; p < outs.size(); ++p) f[off + p] = values[k][outs[p]];
  }
  return f;
}

bool RelativeComplex::is_complex() const {
  for (std::size_t n = 0; n + 1 < d_.size(); ++n) {
    if (d_[n].rows() == 0 || d_[n + 1].rows() == 0) continue;
    if (!(d_[n + 1] * d_[n]).is_zero()) return false;
  }
  return true;
}

RelativeComplex build_complex(const QuiverAlgebra& a) {
  RelativeComplex c(a);
  if (!c.is_complex()) throw Error(ErrorCode::InternalInconsistency, "d^2 != 0 in the Hochschild complex");
  return c;
}

namespace {

std::size_t safe_rank(const Matrix& m) { return m.rows() == 0 || m.cols() == 0 ? 0 : rank(m); }

std::vector<Vector> columns_basis(const Matrix& m) {
  EchelonBasis b(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) b.insert(m.column(c));
  return b.basis();
}

}  // namespace

std::vector<std::size_t> hh_dimensions(const RelativeComplex& c) {
  std::vector<std::size_t> ranks;
  for (std::size_t n = 0; n < c.length(); ++n) ranks.push_back(safe_rank(c.differential(n)));
  std::vector<std::size_t> h;
  for (std::size_t n = 0; n <= 3; ++n) {
    std::size_t ker = c.dim(n) - (n < ranks.size() ? ranks[n] : 0);
    std::size_t im = n >= 1 && n - 1 < ranks.size() ? ranks[n - 1] : 0;
    h.push_back(ker - im);
  }
  long long euler = 0;
  for (std::size_t n = 0; n < h.size(); ++n) euler += (n % 2 ? -1 : 1) * static_cast<long long>(h[n]);
  // HH^n for n > 3 would break the identity too; check the full range.
  for (std::size_t n = 4; n < c.length(); ++n) {
    std::size_t ker = c.dim(n) - ranks[n];
    if (ker != ranks[n - 1]) throw Error(ErrorCode::InternalInconsistency, "HH^" + std::to_string(n) + " != 0");
  }
  if (h[0] != 1) throw Error(ErrorCode::InternalInconsistency, "HH^0 has dimension " + std::to_string(h[0]));
  if (h[3] != 0) throw Error(ErrorCode::InternalInconsistency, "HH^3 has dimension " + std::to_string(h[3]));
  if (euler != static_cast<long long>(c.algebra().vertices()))
    throw Error(ErrorCode::InternalInconsistency, "Euler characteristic " + std::to_string(euler));
  return h;
}

std::vector<Vector> hh1_basis(const RelativeComplex& c) {
  EchelonBasis span(c.dim(1));
  for (const auto& b : columns_basis(c.differential(0))) span.insert(b);
  std::vector<Vector> z1;
  const Matrix& d1 = c.differential(1);
  if (d1.rows() == 0) {
    for (std::size_t i = 0; i < c.dim(1); ++i) {
      Vector v(c.dim(1));
      v[i] = 1;
      z1.push_back(std::move(v));
    }
  } else {
    z1 = kernel_basis(d1);
  }
  std::vector<Vector> out;
  for (auto& z : z1)
    if (span.insert(z)) out.push_back(std::move(z));
  return out;
}

namespace {

Matrix left_mult(const QuiverAlgebra& a, const Vector& x) {
  const std::size_t d = a.dim();
  Matrix m(d, d);
  for (std::size_t u = 0; u < d; ++u) {
    if (x[u].is_zero()) continue;
    for (std::size_t b = 0; b < d; ++b)
      for (const auto& [k, c] : a.mult(u, b)) m(k, b) += x[u] * c;
  }
  return m;
}

Matrix right_mult(const QuiverAlgebra& a, const Vector& y) {
  const std::size_t d = a.dim();
  Matrix m(d, d);
  for (std::size_t v = 0; v < d; ++v) {
    if (y[v].is_zero()) continue;
    for (std::size_t b = 0; b < d; ++b)
      for (const auto& [k, c] : a.mult(b, v)) m(k, b) += y[v] * c;
  }
  return m;
}

Vector sparse_to_vector(const QuiverAlgebra& a, const std::vector<std::pair<std::size_t, Rational>>& s) {
  Vector v(a.dim());
  for (const auto& [k, c] : s) v[k] += c;
  return v;
}

// Accumulates block equations sum_g B_g D(g) = 0 (each B_g is d x d).
class DerivationSystem {
 public:
  DerivationSystem(std::size_t generators, std::size_t d) : gens_(generators), d_(d) {}
  void add(const std::vector<std::pair<std::size_t, Matrix>>& blocks) {
    for (std::size_t r = 0; r < d_; ++r) {
      Vector row(gens_ * d_);
      bool nonzero = false;
      for (const auto& [g, m] : blocks)
        for (std::size_t c = 0; c < d_; ++c)
          if (!m(r, c).is_zero()) {
            row[g * d_ + c] += m(r, c);
            nonzero = true;
          }
      if (nonzero) rows_.insert(row);
    }
  }
  std::size_t solution_dim() const { return gens_ * d_ - rows_.rank(); }

 private:
  std::size_t gens_, d_;
  EchelonBasis rows_{gens_ * d_};
};

}  // namespace

DerivationData hh1_via_derivations(const QuiverAlgebra& a) {
  const std::size_t d = a.dim();
  const std::size_t n = a.vertices();
  const auto& arrows = a.arrows();
  const std::size_t gens = n + arrows.size();
  const Matrix id = Matrix::identity(d);
  std::vector<Vector> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(a.unit_vector(a.idempotent(i)));

  DerivationSystem sys(gens, d);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // D(e_i) e_j + e_i D(e_j) = delta_ij D(e_i)
      if (i == j)
        sys.add({{i, right_mult(a, e[i]) + left_mult(a, e[i]) - id}});
      else
        sys.add({{i, right_mult(a, e[j])}, {j, left_mult(a, e[i])}});
    }
  }
  {
    std::vector<std::pair<std::size_t, Matrix>> blocks;
    for (std::size_t i = 0; i < n; ++i) blocks.emplace_back(i, id);
    sys.add(blocks);
  }
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const BasisElement& el = a.basis()[arrows[k]];
    Vector alpha = a.unit_vector(arrows[k]);
    // D(alpha) = D(e_s) alpha + e_s D(alpha)
    sys.add({{n + k, id - left_mult(a, e[el.source])}, {el.source, -right_mult(a, alpha)}});
    // D(alpha) = D(alpha) e_t + alpha D(e_t)
    sys.add({{n + k, id - right_mult(a, e[el.target])}, {el.target, -left_mult(a, alpha)}});
  }
  // Relations: D applied to each relation via the Leibniz rule.
  const LinearQuiver& q = a.quiver();
  auto arrow_gen = [&](std::size_t vertex, std::size_t letter) {
    auto p = a.path(vertex, {letter});
    for (std::size_t k = 0; k < arrows.size(); ++k)
      if (p.size() == 1 && p[0].first == arrows[k]) return k;
    throw Error(ErrorCode::InternalInconsistency, "arrow is not a basis element");
  };
  for (std::size_t s : q.relation_windows) {
    for (const auto& r : a.relations()) {
      std::map<std::size_t, Matrix> acc;
      for (std::size_t w = 0; w < r.size(); ++w) {
        if (r[w].is_zero()) continue;
        auto word = word_of_index(w, q.relation_length, q.arrows);
        for (std::size_t k = 0; k < word.size(); ++k) {
          std::vector<std::size_t> pre(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(k));
          std::vector<std::size_t> post(word.begin() + static_cast<std::ptrdiff_t>(k) + 1, word.end());
          Vector pv = sparse_to_vector(a, a.path(s, pre));
          Vector sv = sparse_to_vector(a, a.path(s + k + 1, post));
          Matrix m = r[w] * (left_mult(a, pv) * right_mult(a, sv));
          std::size_t g = n + arrow_gen(s + k, word[k]);
          auto it = acc.find(g);
          if (it == acc.end()) acc.emplace(g, m);
          else it->second = it->second + m;
        }
      }
      std::vector<std::pair<std::size_t, Matrix>> blocks(acc.begin(), acc.end());
      sys.add(blocks);
    }
  }
  DerivationData out;
  out.derivations = sys.solution_dim();
  // Center: z commuting with all generators.
  EchelonBasis cz(d);
  std::vector<Vector> gens_vec = e;
  for (std::size_t k : arrows) gens_vec.push_back(a.unit_vector(k));
  for (const auto& g : gens_vec) {
    Matrix m = right_mult(a, g) - left_mult(a, g);  // z -> z g - g z
    for (std::size_t r = 0; r < d; ++r) cz.insert(Vector(m.row(r).begin(), m.row(r).end()));
  }
  out.center = d - cz.rank();
  out.inner = d - out.center;
  out.hh1 = out.derivations - out.inner;
  return out;
}

DerivationData hh1_via_derivations(const QuiverAlgebra& a, std::size_t expected_h1) {
  DerivationData d = hh1_via_derivations(a);
  if (d.hh1 != expected_h1)
    throw Error(ErrorCode::MismatchWithComplex, "derivations give HH^1 = " + std::to_string(d.hh1) +
                                                    ", complex gives " + std::to_string(expected_h1));
  return d;
}

namespace {

Vector compose1(const RelativeComplex& c, const Vector& f, const Vector& g) {
  // (f o g)(r) = f(g(r)); g(r) lies in the radical.
  const QuiverAlgebra& a = c.algebra();
  std::vector<Vector> vals;
  for (std::size_t r : a.radical()) {
    Vector gr = c.eval1(g, r);
    Vector out(a.dim());
    for (std::size_t b = 0; b < a.dim(); ++b) {
      if (gr[b].is_zero()) continue;
      Vector fb = c.eval1(f, b);
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (!fb[k].is_zero()) out[k] += gr[b] * fb[k];
    }
    vals.push_back(std::move(out));
  }
  return c.from_values1(vals);
}

Vector bracket_coords(const std::vector<std::vector<Vector>>& t, const Vector& x, const Vector& y) {
  const std::size_t h = x.size();
  Vector out(h);
  for (std::size_t i = 0; i < h; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < h; ++j) {
      if (y[j].is_zero()) continue;
      for (std::size_t k = 0; k < h; ++k) out[k] += x[i] * y[j] * t[i][j][k];
    }
  }
  return out;
}

}  // namespace

LieBracket lie_bracket_hh1(const RelativeComplex& c) {
  LieBracket lb;
  lb.basis = hh1_basis(c);
  const std::size_t h = lb.basis.size();
  lb.invariants.dim = h;
  if (h == 0) return lb;
  std::vector<Vector> gens = lb.basis;
  for (const auto& b : columns_basis(c.differential(0))) gens.push_back(b);
  SpanCoordinates coords(gens, c.dim(1));
  lb.table.assign(h, std::vector<Vector>(h, Vector(h)));
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = i + 1; j < h; ++j) {
      Vector br = compose1(c, lb.basis[i], lb.basis[j]);
      Vector rev = compose1(c, lb.basis[j], lb.basis[i]);
      for (std::size_t k = 0; k < br.size(); ++k) br[k] -= rev[k];
      auto x = coords.coordinates(br);
      if (!x) throw Error(ErrorCode::InternalInconsistency, "bracket of cocycles is not a cocycle");
      Vector proj(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(h));
      lb.table[i][j] = proj;
      lb.table[j][i] = scaled(proj, -1);
    }
  }
  // Invariants.
  EchelonBasis derived(h);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) derived.insert(lb.table[i][j]);
  lb.invariants.derived = derived.rank();
  Matrix center(h * h, h);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j)
      for (std::size_t k = 0; k < h; ++k) center(j * h + k, i) = lb.table[i][j][k];
  lb.invariants.center = h - rank(center);
  std::vector<Matrix> ad(h, Matrix(h, h));
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j)
      for (std::size_t k = 0; k < h; ++k) ad[i](k, j) = lb.table[i][j][k];
  Matrix killing(h, h);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) {
      Matrix p = ad[i] * ad[j];
      Rational tr;
      for (std::size_t k = 0; k < h; ++k) tr += p(k, k);
      killing(i, j) = tr;
    }
  lb.invariants.killing_rank = rank(killing);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j)
      if (lb.table[i][j] != scaled(lb.table[j][i], -1)) lb.antisymmetric = false;
  std::vector<Vector> unit(h, Vector(h));
  for (std::size_t i = 0; i < h; ++i) unit[i][i] = 1;
  for (std::size_t i = 0; i < h && lb.jacobi; ++i)
    for (std::size_t j = i + 1; j < h && lb.jacobi; ++j)
      for (std::size_t k = j + 1; k < h && lb.jacobi; ++k) {
        Vector s = bracket_coords(lb.table, unit[i], lb.table[j][k]);
        Vector t2 = bracket_coords(lb.table, unit[j], lb.table[k][i]);
        Vector t3 = bracket_coords(lb.table, unit[k], lb.table[i][j]);
        for (std::size_t m = 0; m < h; ++m)
          if (!(s[m] + t2[m] + t3[m]).is_zero()) lb.jacobi = false;
      }
  return lb;
}

std::size_t cup_products(const RelativeComplex& c, const std::vector<Vector>& hh1) {
  if (hh1.empty() || c.length() < 3) return 0;
  const QuiverAlgebra& a = c.algebra();
  const std::size_t dim2 = c.dim(2);
  EchelonBasis span(dim2);
  for (const auto& b : columns_basis(c.differential(1))) span.insert(b);
  const std::size_t base = span.rank();
  const auto& seqs = c.sequences(2);
  std::vector<std::vector<Vector>> values(hh1.size());
  for (std::size_t i = 0; i < hh1.size(); ++i)
    for (std::size_t r = 0; r < a.dim(); ++r)
      values[i].push_back(a.basis()[r].length() > 0 ? c.eval1(hh1[i], r) : Vector(a.dim()));
  for (std::size_t i = 0; i < hh1.size(); ++i) {
    for (std::size_t j = i; j < hh1.size(); ++j) {
      Vector cup(dim2);
      for (std::size_t s = 0; s < seqs.size(); ++s) {
        Vector v = a.multiply(values[i][seqs[s][0]], values[j][seqs[s][1]]);
        std::size_t off = c.block_offset(2, seqs[s]);
        const auto& outs = c.block_outputs(2, s);
        for (std::size_t p = 0; p < outs.size(); ++p) cup[off + p] = v[outs[p]];
      }
      span.insert(cup);
    }
  }
  return span.rank() - base;
}

HHReport hochschild_report(const QuiverAlgebra& a) {
  RelativeComplex c = build_complex(a);
  HHReport r;
  r.h = hh_dimensions(c);
  r.euler = static_cast<long long>(r.h[0]) - static_cast<long long>(r.h[1]) + static_cast<long long>(r.h[2]) -
            static_cast<long long>(r.h[3]);
  LieBracket lb = lie_bracket_hh1(c);
  if (lb.basis.size() != r.h[1]) throw Error(ErrorCode::InternalInconsistency, "HH^1 basis size");
  r.bracket = lb.table;
  r.invariants = lb.invariants;
  r.jacobi = lb.jacobi && lb.antisymmetric;
  r.cup_rank = cup_products(c, lb.basis);
  return r;
}

}  // namespace ncsurf
