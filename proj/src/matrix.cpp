#include "ncsurf/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace ncsurf {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
    for (const auto& x : r) a_.push_back(x);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("Matrix::from_rows: size mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("Matrix::from_columns: size mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& x : m.a_) x = -x;
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix +: shape");
  Matrix m = a;
  for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += b.a_[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix -: shape");
  Matrix m = a;
  for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] -= b.a_[i];
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix *: shape");
  Matrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& y = b(k, j);
        if (!y.is_zero()) m(i, j) += x * y;
      }
    }
  }
  return m;
}

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix m = a;
  for (auto& x : m.a_) x *= s;
  return m;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("Matrix * Vector: shape");
  Vector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    Rational acc;
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (!x.is_zero() && !v[k].is_zero()) acc += x * v[k];
    }
    out[i] = acc;
  }
  return out;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

RrefResult rref(Matrix m) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t prow = 0;
  for (std::size_t c = 0; c < cols && prow < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t r = prow; r < rows; ++r) {
      if (!m(r, c).is_zero()) {
        sel = r;
        break;
      }
    }
    if (sel == rows) continue;
    if (sel != prow) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(sel, k), m(prow, k));
    }
    Rational inv = m(prow, c).inverse();
    if (!inv.is_one()) {
      for (std::size_t k = c; k < cols; ++k)
        if (!m(prow, k).is_zero()) m(prow, k) *= inv;
    }
    // Collect nonzero columns of the pivot row once.
    std::vector<std::size_t> nz;
    for (std::size_t k = c; k < cols; ++k)
      if (!m(prow, k).is_zero()) nz.push_back(k);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == prow) continue;
      Rational f = m(r, c);
      if (f.is_zero()) continue;
      for (std::size_t k : nz) m(r, k) -= f * m(prow, k);
    }
    pivots.push_back(c);
    ++prow;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
  // Forward elimination only.
  EchelonBasis eb(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    eb.insert(Vector(row.begin(), row.end()));
    if (eb.rank() == m.cols()) break;
  }
  return eb.rank();
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  auto [r, pivots] = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

Rational determinant(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: non-square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss on integer-scaled rows would avoid fractions entirely; over Q the
  // same recurrence divides exactly by the previous pivot.
  Matrix a = m;
  Rational prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t sel = n;
      for (std::size_t r = k + 1; r < n; ++r)
        if (!a(r, k).is_zero()) {
          sel = r;
          break;
        }
      if (sel == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(sel, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  Rational d = a(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: non-square");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto [r, pivots] = rref(std::move(aug));
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: shape");
  const std::size_t cols = m.cols();
  Matrix aug(m.rows(), cols + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug(i, j) = m(i, j);
    aug(i, cols) = b[i];
  }
  auto [r, pivots] = rref(std::move(aug));
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  Vector x(cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r(i, cols);
  return x;
}

UniPoly charpoly(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("charpoly: non-square");
  const std::size_t n = m.rows();
  // c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k) / k.
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    Matrix am = m * mk;
    Rational tr;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / Rational(static_cast<long long>(k));
  }
  return UniPoly(std::move(c));
}

Vector EchelonBasis::reduce(Vector v) const {
  if (v.size() != dim_) throw std::invalid_argument("EchelonBasis: dimension mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational f = v[pivots_[i]];
    if (f.is_zero()) continue;
    const Vector& row = rows_[i];
    for (std::size_t k = pivots_[i]; k < dim_; ++k)
      if (!row[k].is_zero()) v[k] -= f * row[k];
  }
  return v;
}

bool EchelonBasis::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool EchelonBasis::insert(const Vector& v) {
  Vector r = reduce(v);
  std::size_t p = 0;
  while (p < dim_ && r[p].is_zero()) ++p;
  if (p == dim_) return false;
  Rational inv = r[p].inverse();
  for (std::size_t k = p; k < dim_; ++k)
    if (!r[k].is_zero()) r[k] *= inv;
  // Keep rows ordered by pivot so reduce() runs a single forward pass.
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  // Earlier rows may have a nonzero at column p; clear it to keep the
  // invariant that each pivot column is zero in all other rows.
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rational f = rows_[i][p];
    if (f.is_zero()) continue;
    for (std::size_t k = p; k < dim_; ++k)
      if (!r[k].is_zero()) rows_[i][k] -= f * r[k];
  }
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(r));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
  return true;
}

std::vector<Vector> EchelonBasis::basis() const { return rows_; }

SpanCoordinates::SpanCoordinates(const std::vector<Vector>& generators, std::size_t dim)
    : dim_(dim), count_(generators.size()) {
  for (std::size_t g = 0; g < generators.size(); ++g) {
    Vector v = generators[g];
    if (v.size() != dim_) throw std::invalid_argument("SpanCoordinates: dimension mismatch");
    Vector combo(count_);
    combo[g] = 1;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      Rational f = v[pivots_[i]];
      if (f.is_zero()) continue;
      for (std::size_t k = 0; k < dim_; ++k)
        if (!rows_[i][k].is_zero()) v[k] -= f * rows_[i][k];
      for (std::size_t k = 0; k < count_; ++k)
        if (!combos_[i][k].is_zero()) combo[k] -= f * combos_[i][k];
    }
    std::size_t p = 0;
    while (p < dim_ && v[p].is_zero()) ++p;
    if (p == dim_) throw std::invalid_argument("SpanCoordinates: generators are dependent");
    Rational inv = v[p].inverse();
    for (auto& x : v) x *= inv;
    for (auto& x : combo) x *= inv;
    rows_.push_back(std::move(v));
    combos_.push_back(std::move(combo));
    pivots_.push_back(p);
  }
}

std::optional<Vector> SpanCoordinates::coordinates(const Vector& target) const {
  if (target.size() != dim_) throw std::invalid_argument("SpanCoordinates: dimension mismatch");
  Vector v = target;
  Vector out(count_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rational f = v[pivots_[i]];
    if (f.is_zero()) continue;
    for (std::size_t k = 0; k < dim_; ++k)
      if (!rows_[i][k].is_zero()) v[k] -= f * rows_[i][k];
    for (std::size_t k = 0; k < count_; ++k)
      if (!combos_[i][k].is_zero()) out[k] += f * combos_[i][k];
  }
  if (!is_zero(v)) return std::nullopt;
  return out;
}

std::vector<Vector> intersect_spans(const std::vector<Vector>& a, const std::vector<Vector>& b,
                                    std::size_t dim) {
  // Solve sum x_i a_i = sum y_j b_j; the intersection is spanned by the
  // corresponding combinations of the a_i.
  std::vector<Vector> cols;
  for (const auto& v : a) cols.push_back(v);
  for (const auto& v : b) cols.push_back(scaled(v, Rational(-1)));
  if (cols.empty()) return {};
  Matrix m = Matrix::from_columns(cols, dim);
  EchelonBasis out(dim);
  for (const auto& k : kernel_basis(m)) {
    Vector w(dim);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (k[i].is_zero()) continue;
      for (std::size_t d = 0; d < dim; ++d) w[d] += k[i] * a[i][d];
    }
    out.insert(w);
  }
  return out.basis();
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vector scaled(const Vector& v, const Rational& s) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
  return out;
}

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational acc;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
  return acc;
}

}  // namespace ncsurf
