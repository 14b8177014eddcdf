#pragma once

#include "ncsurf/poly.hpp"
#include "ncsurf/unipoly.hpp"

#include <stdexcept>
#include <vector>

namespace ncsurf {

namespace detail {

inline bool ring_is_zero(const Rational& r) { return r.is_zero(); }
inline bool ring_is_zero(const UniPoly& r) { return r.is_zero(); }
inline bool ring_is_zero(const Poly& r) { return r.is_zero(); }
inline Rational ring_exact_div(const Rational& a, const Rational& b) { return a / b; }
inline UniPoly ring_exact_div(const UniPoly& a, const UniPoly& b) { return exact_div(a, b); }
inline Poly ring_exact_div(const Poly& a, const Poly& b) { return exact_div(a, b); }

}  // namespace detail

/// Determinant over an integral domain by Bareiss fraction-free elimination.
/// `one` supplies the ring's unit (needed for rings without a unit ctor).
template <class Ring>
Ring bareiss_determinant(std::vector<std::vector<Ring>> a, const Ring& one) {
  const std::size_t n = a.size();
  if (n == 0) return one;
  Ring prev = one;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (detail::ring_is_zero(a[k][k])) {
      std::size_t sel = n;
      for (std::size_t r = k + 1; r < n; ++r) {
        if (!detail::ring_is_zero(a[r][k])) {
          sel = r;
          break;
        }
      }
      if (sel == n) return one - one;
      std::swap(a[k], a[sel]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = detail::ring_exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
      }
      a[i][k] = one - one;
    }
    prev = a[k][k];
  }
  Ring d = a[n - 1][n - 1];
  return negate ? -d : d;
}

/// Sylvester resultant of a = sum a_i x^i and b = sum b_j x^j (ascending
/// coefficient lists over Ring, leading coefficients nonzero).
template <class Ring>
Ring sylvester_resultant(const std::vector<Ring>& a, const std::vector<Ring>& b, const Ring& one) {
  if (a.empty() || b.empty()) throw std::invalid_argument("resultant of zero polynomial");
  if (detail::ring_is_zero(a.back()) || detail::ring_is_zero(b.back()))
    throw std::invalid_argument("resultant: leading coefficient is zero");
  const std::size_t m = a.size() - 1;  // deg a
  const std::size_t n = b.size() - 1;  // deg b
  if (m == 0 && n == 0) return one;
  if (m == 0) {
    Ring r = one;
    for (std::size_t i = 0; i < n; ++i) r = r * a[0];
    return r;
  }
  if (n == 0) {
    Ring r = one;
    for (std::size_t i = 0; i < m; ++i) r = r * b[0];
    return r;
  }
  const std::size_t size = m + n;
  const Ring zero = one - one;
  std::vector<std::vector<Ring>> s(size, std::vector<Ring>(size, zero));
  // Rows 0..n-1: shifts of a (highest coefficient first); rows n..: shifts of b.
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i <= m; ++i) s[r][r + i] = a[m - i];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j <= n; ++j) s[n + r][r + j] = b[n - j];
  return bareiss_determinant(std::move(s), one);
}

/// Res_x over Q[y]: polynomials given as ascending coefficient lists in x.
UniPoly resultant(const std::vector<UniPoly>& a, const std::vector<UniPoly>& b);
/// Res with respect to variable `var` of two multivariate polynomials; the
/// result has the same variable count with `var` absent.
Poly resultant(const Poly& a, const Poly& b, std::size_t var);
/// Univariate resultant over Q.
Rational resultant(const UniPoly& a, const UniPoly& b);

}  // namespace ncsurf
