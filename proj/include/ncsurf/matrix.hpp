#pragma once

#include "ncsurf/rational.hpp"
#include "ncsurf/unipoly.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ncsurf {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {a_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;

  Matrix transpose() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix operator-() const;
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& a);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

struct RrefResult {
  Matrix matrix;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; the pivot in each column is the first row
/// (from the top) with a nonzero entry, which keeps bases reproducible.
RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);
/// Basis of the right null space. Each vector carries a 1 at its free
/// variable and zeros at the other free variables.
std::vector<Vector> kernel_basis(const Matrix& m);
/// Fraction-free (Bareiss) determinant.
Rational determinant(const Matrix& m);
/// Inverse of a nonsingular square matrix; std::nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);
/// Some solution x of m x = b, or std::nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
/// Monic characteristic polynomial det(t I - m) via Faddeev-LeVerrier.
UniPoly charpoly(const Matrix& m);

/// Incrementally maintained echelon basis of a subspace of Q^n.
/// Used for spans, rank accumulation and coordinates with respect to a
/// chosen spanning set.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// Reduces v against the basis; returns the residue.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  /// Adds v if independent; returns true when the rank grew.
  bool insert(const Vector& v);
  /// Rows of the fully reduced basis (an rref of the span).
  std::vector<Vector> basis() const;
  std::vector<std::size_t> pivots() const { return pivots_; }

 private:
  std::size_t dim_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Coordinates with respect to an ordered list of linearly independent
/// vectors: given generators g_1..g_k, `coordinates(v)` returns c with
/// v = sum c_i g_i, or std::nullopt when v is outside the span.
class SpanCoordinates {
 public:
  SpanCoordinates(const std::vector<Vector>& generators, std::size_t dim);
  std::optional<Vector> coordinates(const Vector& v) const;
  std::size_t size() const { return count_; }

 private:
  std::size_t dim_;
  std::size_t count_;
  // Echelon rows augmented with the combination of generators they encode.
  std::vector<Vector> rows_;
  std::vector<Vector> combos_;
  std::vector<std::size_t> pivots_;
};

/// Intersection of two subspaces given by spanning vectors (rref basis).
std::vector<Vector> intersect_spans(const std::vector<Vector>& a, const std::vector<Vector>& b,
                                    std::size_t dim);

bool is_zero(const Vector& v);
Vector scaled(const Vector& v, const Rational& s);
Rational dot(const Vector& a, const Vector& b);

}  // namespace ncsurf
