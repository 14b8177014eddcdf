#pragma once

#include "ncsurf/matrix.hpp"
#include "ncsurf/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace ncsurf {

/// Sparse multivariate polynomial over Q in a fixed number of variables.
/// Terms are kept in descending lexicographic order of exponent vectors.
class Poly {
 public:
  using Exponent = std::vector<int>;
  using TermMap = std::map<Exponent, Rational, std::greater<>>;

  explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t i);
  static Poly monomial(std::size_t nvars, const Exponent& e, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(const Exponent& e) const;
  /// -1 for zero.
  int total_degree() const;
  /// Degree in variable i; -1 for zero.
  int degree_in(std::size_t i) const;
  bool is_homogeneous() const;

  void add_term(const Exponent& e, const Rational& c);

  Poly derivative(std::size_t i) const;
  Rational eval(const std::vector<Rational>& x) const;
  /// Substitute x_i -> sum_j t(i, j) * y_j (t is nvars x nvars).
  Poly linear_substitute(const Matrix& t) const;
  /// Substitute x_i -> polys[i]; the result lives in polys' ring.
  Poly substitute(const std::vector<Poly>& polys) const;
  /// Coefficient of x_i^k as a polynomial in the remaining variables
  /// (same variable count, x_i exponent zeroed).
  Poly coefficient_in(std::size_t i, int k) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& s, const Poly& a);
  Poly& operator+=(const Poly& b);
  Poly& operator-=(const Poly& b);
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// e.g. "x^2*y - 3*z^3" with names {"x","y","z"}; default names x0, x1, ...
  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  void check_same(const Poly& b) const;
  std::size_t nvars_;
  TermMap terms_;
};

Poly pow(const Poly& a, unsigned e);
/// Exact multivariate division; throws std::domain_error if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
bool divides(const Poly& b, const Poly& a);
/// Scale so that the leading coefficient is 1.
Poly monic(const Poly& a);

/// Homogeneous form: nvars in {2, 3, 4} and every term of total degree
/// `degree`. The zero form is allowed.
class HomForm {
 public:
  HomForm(std::size_t nvars, int degree) : nvars_(nvars), degree_(degree), poly_(nvars) {}
  HomForm(int degree, Poly poly);

  std::size_t nvars() const { return nvars_; }
  int degree() const { return degree_; }
  const Poly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }

  friend bool operator==(const HomForm& a, const HomForm& b) {
    return a.degree_ == b.degree_ && a.poly_ == b.poly_;
  }

 private:
  std::size_t nvars_;
  int degree_;
  Poly poly_;
};

/// Form with coefficients in F_p.
struct FiniteFieldForm {
  std::int64_t p = 0;
  std::size_t nvars = 0;
  std::vector<std::pair<Poly::Exponent, std::int64_t>> terms;

  std::int64_t eval(const std::vector<std::int64_t>& x) const;
};

/// Throws Error(BadPrime) when p divides a coefficient denominator.
FiniteFieldForm reduce_mod_p(const HomForm& form, std::int64_t p);
/// Number of F_p-points of a ternary form on P^2 (enumerates p^2 + p + 1 points).
std::int64_t count_projective_points(const FiniteFieldForm& form);
/// Number of F_p-points on P^1 x P^1 of a bihomogeneous form in (x, y; u, v).
std::int64_t count_points_p1xp1(const FiniteFieldForm& form);

/// Fixed prime list for modular cross-checks.
const std::vector<std::int64_t>& oracle_primes();

}  // namespace ncsurf
