#pragma once

#include "ncsurf/rational.hpp"

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace ncsurf {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// The zero polynomial has no coefficients; otherwise the last one is nonzero.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(std::initializer_list<Rational> coeffs);
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  UniPoly(int c) : UniPoly(Rational(c)) {}  // NOLINT

  /// c * t^k
  static UniPoly monomial(const Rational& c, std::size_t k);
  /// t - r
  static UniPoly linear_root(const Rational& r);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational{}; }
  Rational lead() const { return c_.empty() ? Rational{} : c_.back(); }

  UniPoly monic() const;
  UniPoly derivative() const;
  Rational eval(const Rational& x) const;
  /// Composition self(other(t)).
  UniPoly compose(const UniPoly& other) const;
  /// Multiply by a nonzero scalar so the coefficients are coprime integers
  /// with positive leading coefficient.
  UniPoly primitive() const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly& operator+=(const UniPoly& b) { return *this = *this + b; }
  UniPoly& operator-=(const UniPoly& b) { return *this = *this - b; }
  UniPoly& operator*=(const UniPoly& b) { return *this = *this * b; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  /// Human-readable form in the variable `var`, e.g. "t^2 - 3*t + 2".
  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder with deg(r) < deg(b). Throws on b == 0.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);
/// Exact quotient; throws std::domain_error if b does not divide a.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
bool divides(const UniPoly& b, const UniPoly& a);

/// Monic gcd (zero only when both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
struct ExtendedGcd {
  UniPoly g, s, t;
};
ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b);

/// Monic squarefree part.
UniPoly squarefree_part(const UniPoly& a);

/// Yun decomposition a = c * prod g_i^{m_i}; factors monic, squarefree,
/// pairwise coprime, multiplicities strictly increasing.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& a);

/// Pairwise coprime monic nonconstant polynomials such that every input is,
/// up to a scalar, a product of basis elements. `exponents[i][k]` records how
/// often basis element k occurs in input i.
struct GcdFreeBasis {
  std::vector<UniPoly> basis;
  std::vector<std::vector<int>> exponents;
};
GcdFreeBasis gcd_free_basis(const std::vector<UniPoly>& polys);

/// Multiplicity of the squarefree polynomial g in a (largest e with g^e | a).
int multiplicity(const UniPoly& g, const UniPoly& a);

UniPoly pow(const UniPoly& a, unsigned e);

/// Coefficients reduced modulo p (ascending degree, trimmed).
std::vector<std::int64_t> reduce_mod_p(const UniPoly& a, std::int64_t p);

}  // namespace ncsurf
