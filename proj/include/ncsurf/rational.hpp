#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

namespace ncsurf {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in 62 bits are kept inline;
/// anything larger is promoted to a shared, immutable GMP rational. The
/// promotion is invisible to callers: equality, hashing and printing agree
/// across both representations.
class Rational {
 public:
  Rational() = default;
  Rational(long long n);  // NOLINT(google-explicit-constructor)
  Rational(int n) : Rational(static_cast<long long>(n)) {}  // NOLINT
  Rational(long n) : Rational(static_cast<long long>(n)) {}  // NOLINT
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& q);
  explicit Rational(const mpz_class& z);

  /// Parses "p", "-p", "p/q" (arbitrary length). Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  mpz_class numerator() const;
  mpz_class denominator() const;
  mpq_class to_mpq() const;

  /// Residue modulo a prime p; throws if p divides the denominator.
  std::int64_t mod(std::int64_t p) const;
  /// True when p divides the denominator.
  bool bad_prime(std::int64_t p) const;

  std::string str() const;

  Rational operator-() const;
  Rational inverse() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);

  std::size_t hash() const;

 private:
  static Rational from_mpq(mpq_class q);
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace ncsurf

template <>
struct std::hash<ncsurf::Rational> {
  std::size_t operator()(const ncsurf::Rational& q) const { return q.hash(); }
};
