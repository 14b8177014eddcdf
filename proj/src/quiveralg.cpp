#include "ncsurf/quiveralg.hpp"

#include "ncsurf/error.hpp"

namespace ncsurf {

LinearQuiver LinearQuiver::quadratic() { return {3, 3, {0}, 2}; }
LinearQuiver LinearQuiver::cubic() { return {4, 2, {0}, 3}; }
LinearQuiver LinearQuiver::free(std::size_t vertices, std::size_t arrows) { return {vertices, arrows, {}, 0}; }

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

QuiverAlgebra::QuiverAlgebra(LinearQuiver q, std::vector<Vector> relations)
    : q_(std::move(q)), relations_(std::move(relations)) {
  const std::size_t n = q_.vertices;
  const std::size_t m = q_.arrows;
  if (!q_.relation_windows.empty()) {
    for (const auto& r : relations_)
      if (r.size() != ipow(m, q_.relation_length))
        throw Error(ErrorCode::InvalidInput, "relation does not live in the path space of its window");
  }
  comp_.assign(n, std::vector<std::vector<std::size_t>>(n));
  red_.assign(n, std::vector<Reduction>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const std::size_t len = j - i;
      const std::size_t count = ipow(m, len);
      EchelonBasis ideal(count);
      for (std::size_t s : q_.relation_windows) {
        if (s < i || s + q_.relation_length > j) continue;
        const std::size_t pre = s - i;
        const std::size_t post = j - s - q_.relation_length;
        for (const auto& r : relations_) {
          for (std::size_t p = 0; p < ipow(m, pre); ++p) {
            for (std::size_t sfx = 0; sfx < ipow(m, post); ++sfx) {
              Vector v(count);
              for (std::size_t w = 0; w < r.size(); ++w) {
                if (r[w].is_zero()) continue;
                v[(p * r.size() + w) * ipow(m, post) + sfx] = r[w];
              }
              ideal.insert(v);
            }
          }
        }
      }
      Reduction& red = red_[i][j];
      red.rows = ideal.basis();
      red.pivots = ideal.pivots();
      red.standard.assign(count, std::nullopt);
      std::vector<bool> is_pivot(count, false);
      for (std::size_t p : red.pivots) is_pivot[p] = true;
      for (std::size_t w = 0; w < count; ++w) {
        if (is_pivot[w]) continue;
        red.standard[w] = basis_.size();
        comp_[i][j].push_back(basis_.size());
        basis_.push_back({i, j, word_of_index(w, len, m)});
      }
    }
  }
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    if (basis_[b].length() > 0) radical_.push_back(b);
    if (basis_[b].length() == 1) arrows_.push_back(b);
  }
  const std::size_t d = basis_.size();
  table_.assign(d * d, {});
  for (std::size_t u = 0; u < d; ++u) {
    for (std::size_t v = 0; v < d; ++v) {
      if (basis_[u].target != basis_[v].source) continue;
      std::vector<std::size_t> w = basis_[u].word;
      w.insert(w.end(), basis_[v].word.begin(), basis_[v].word.end());
      table_[u * d + v] = path(basis_[u].source, w);
    }
  }
}

std::vector<std::pair<std::size_t, Rational>> QuiverAlgebra::path(std::size_t i,
                                                                  const std::vector<std::size_t>& word) const {
  const std::size_t j = i + word.size();
  if (j >= q_.vertices) return {};
  const Reduction& red = red_[i][j];
  std::size_t w = word_index(word, q_.arrows);
  if (red.standard[w]) return {{*red.standard[w], Rational(1)}};
  std::vector<std::pair<std::size_t, Rational>> out;
  for (std::size_t r = 0; r < red.pivots.size(); ++r) {
    if (red.pivots[r] != w) continue;
    const Vector& row = red.rows[r];
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k == w || row[k].is_zero()) continue;
      out.emplace_back(*red.standard[k], -row[k]);
    }
  }
  return out;
}

Vector QuiverAlgebra::multiply(const Vector& a, const Vector& b) const {
  const std::size_t d = dim();
  Vector out(d);
  for (std::size_t u = 0; u < d; ++u) {
    if (a[u].is_zero()) continue;
    for (std::size_t v = 0; v < d; ++v) {
      if (b[v].is_zero()) continue;
      Rational c = a[u] * b[v];
      for (const auto& [k, x] : mult(u, v)) out[k] += c * x;
    }
  }
  return out;
}

Vector QuiverAlgebra::unit_vector(std::size_t i) const {
  Vector v(dim());
  v.at(i) = 1;
  return v;
}

bool QuiverAlgebra::is_associative() const {
  const std::size_t d = dim();
  for (std::size_t u = 0; u < d; ++u) {
    for (std::size_t v = 0; v < d; ++v) {
      if (basis_[u].target != basis_[v].source) continue;
      for (std::size_t w = 0; w < d; ++w) {
        if (basis_[v].target != basis_[w].source) continue;
        Vector left(d), right(d);
        for (const auto& [k, x] : mult(u, v))
          for (const auto& [l, y] : mult(k, w)) left[l] += x * y;
        for (const auto& [k, x] : mult(v, w))
          for (const auto& [l, y] : mult(u, k)) right[l] += x * y;
        if (left != right) return false;
      }
    }
  }
  return true;
}

std::vector<std::size_t> expected_component_dims(Kind k) {
  return k == Kind::Quadratic ? std::vector<std::size_t>{1, 3, 6} : std::vector<std::size_t>{1, 2, 4, 6};
}

QuiverAlgebra build_algebra(Kind kind, const std::vector<Vector>& relations) {
  QuiverAlgebra a(LinearQuiver::for_kind(kind), relations);
  auto want = expected_component_dims(kind);
  for (std::size_t i = 0; i < a.vertices(); ++i) {
    for (std::size_t j = i; j < a.vertices(); ++j) {
      if (a.component_dim(i, j) != want[j - i])
        throw Error(ErrorCode::WrongHilbert, "dim A(" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                                                 std::to_string(a.component_dim(i, j)) + ", expected " +
                                                 std::to_string(want[j - i]));
    }
  }
  if (!a.is_associative()) throw Error(ErrorCode::InternalInconsistency, "multiplication is not associative");
  return a;
}

CartanData cartan_and_coxeter(const QuiverAlgebra& a) {
  const std::size_t n = a.vertices();
  CartanData out;
  out.cartan = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) out.cartan(i, j) = Rational(static_cast<long long>(a.component_dim(i, j)));
  auto inv = inverse(out.cartan.transpose());
  if (!inv) throw Error(ErrorCode::InternalInconsistency, "Cartan matrix is singular");
  Matrix serre = *inv * out.cartan;
  out.coxeter = -serre;
  out.serre_charpoly = charpoly(serre);
  out.unipotent = out.serre_charpoly == pow(UniPoly{-1, 1}, static_cast<unsigned>(n));
  return out;
}

namespace {

// A right submodule of the free module F = sum_t e_{k_t} A, stored by a
// spanning set of coordinate vectors over the basis of F.
struct FreeModule {
  std::vector<std::size_t> tops;                          // k_t
  std::vector<std::pair<std::size_t, std::size_t>> cells; // (t, basis index)
  std::vector<std::vector<std::optional<std::size_t>>> index;  // [t][basis] -> cell
};

FreeModule make_free(const QuiverAlgebra& a, const std::vector<std::size_t>& tops) {
  FreeModule f;
  f.tops = tops;
  f.index.assign(tops.size(), std::vector<std::optional<std::size_t>>(a.dim()));
  for (std::size_t t = 0; t < tops.size(); ++t) {
    for (std::size_t b = 0; b < a.dim(); ++b) {
      if (a.basis()[b].source != tops[t]) continue;
      f.index[t][b] = f.cells.size();
      f.cells.emplace_back(t, b);
    }
  }
  return f;
}

Vector act(const QuiverAlgebra& a, const FreeModule& f, const Vector& v, std::size_t elem) {
  Vector out(f.cells.size());
  for (std::size_t c = 0; c < f.cells.size(); ++c) {
    if (v[c].is_zero()) continue;
    auto [t, b] = f.cells[c];
    for (const auto& [k, x] : a.mult(b, elem)) out[*f.index[t][k]] += v[c] * x;
  }
  return out;
}

// Kernel of the minimal projective cover of the submodule spanned by `gens`;
// returns the new ambient free module and spanning set (empty when the
// submodule is projective).
std::pair<FreeModule, std::vector<Vector>> syzygy(const QuiverAlgebra& a, const FreeModule& f,
                                                  const std::vector<Vector>& gens) {
  std::vector<std::size_t> tops;
  std::vector<Vector> top_gens;
  for (std::size_t k = 0; k < a.vertices(); ++k) {
    EchelonBasis span(f.cells.size());
    for (const auto& g : gens)
      for (std::size_t r : a.radical())
        if (a.basis()[r].target == k) span.insert(act(a, f, g, r));
    for (const auto& g : gens) {
      Vector gk = act(a, f, g, a.idempotent(k));
      if (span.insert(gk)) {
        tops.push_back(k);
        top_gens.push_back(std::move(gk));
      }
    }
  }
  FreeModule p = make_free(a, tops);
  Matrix map(f.cells.size(), p.cells.size());
  for (std::size_t c = 0; c < p.cells.size(); ++c) {
    auto [t, b] = p.cells[c];
    Vector img = act(a, f, top_gens[t], b);
    for (std::size_t r = 0; r < img.size(); ++r) map(r, c) = img[r];
  }
  return {p, kernel_basis(map)};
}

}  // namespace

std::size_t projective_dimension_of_simple(const QuiverAlgebra& a, std::size_t i) {
  FreeModule f = make_free(a, {i});
  std::vector<Vector> gens;
  for (std::size_t r : a.radical()) {
    if (a.basis()[r].source != i) continue;
    Vector v(f.cells.size());
    v[*f.index[0][r]] = 1;
    gens.push_back(std::move(v));
  }
  std::size_t n = 0;
  while (!gens.empty()) {
    ++n;
    if (n > 2 * a.dim()) throw Error(ErrorCode::InternalInconsistency, "projective resolution does not terminate");
    auto [p, k] = syzygy(a, f, gens);
    f = std::move(p);
    gens = std::move(k);
  }
  return n;
}

std::size_t global_dimension(const QuiverAlgebra& a) {
  std::size_t g = 0;
  for (std::size_t i = 0; i < a.vertices(); ++i) g = std::max(g, projective_dimension_of_simple(a, i));
  return g;
}

std::size_t radical_nilpotency(const QuiverAlgebra& a) {
  std::vector<Vector> power;
  for (std::size_t r : a.radical()) power.push_back(a.unit_vector(r));
  std::size_t k = 1;
  while (!power.empty()) {
    EchelonBasis next(a.dim());
    for (const auto& p : power)
      for (std::size_t r : a.radical()) next.insert(a.multiply(p, a.unit_vector(r)));
    power = next.basis();
    ++k;
  }
  return k;
}

}  // namespace ncsurf
