#include "ncsurf/rational.hpp"

#include <functional>
#include <ostream>
#include <stdexcept>

namespace ncsurf {

namespace {

// Inline values stay below 2^62 in magnitude so that every intermediate of a
// single operation fits in a signed 128-bit integer.
constexpr std::int64_t kSmallLimit = std::int64_t{1} << 62;

bool fits_small(__int128 v) { return v > -kSmallLimit && v < kSmallLimit; }

unsigned __int128 gcd_u128(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

unsigned __int128 abs_u128(__int128 v) {
  return v < 0 ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
}

mpz_class to_mpz(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = abs_u128(v);
  auto hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
  auto lo = static_cast<unsigned long>(static_cast<std::uint64_t>(u));
  mpz_class r = hi;
  r <<= 64;
  r += lo;
  return neg ? mpz_class(-r) : r;
}

mpz_class to_mpz64(std::int64_t v) {
  mpz_class r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

}  // namespace

Rational::Rational(long long n) {
  if (fits_small(n)) {
    num_ = n;
  } else {
    *this = from_mpq(mpq_class(to_mpz64(n)));
  }
}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  *this = from_wide(num, den);
}

Rational::Rational(const mpq_class& q) { *this = from_mpq(q); }

Rational::Rational(const mpz_class& z) { *this = from_mpq(mpq_class(z)); }

Rational Rational::from_mpq(mpq_class q) {
  q.canonicalize();
  Rational r;
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (n.fits_slong_p() && d.fits_slong_p()) {
    long nv = n.get_si();
    long dv = d.get_si();
    if (fits_small(nv) && fits_small(dv)) {
      r.num_ = nv;
      r.den_ = dv;
      return r;
    }
  }
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rational Rational::from_wide(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rational{};
  unsigned __int128 g = gcd_u128(abs_u128(num), static_cast<unsigned __int128>(den));
  if (g > 1) {
    num /= static_cast<__int128>(g);
    den /= static_cast<__int128>(g);
  }
  Rational r;
  if (fits_small(num) && fits_small(den)) {
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  mpq_class q(to_mpz(num), to_mpz(den));
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.front() == ' ')) s.erase(s.begin());
  while (!s.empty() && (s.back() == ' ')) s.pop_back();
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string ns = s.substr(0, slash);
  std::string ds = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!ns.empty() && ns[0] == '+') ns.erase(ns.begin());
  if (!valid_int(ns) || !valid_int(ds)) throw std::invalid_argument("bad rational: " + s);
  mpz_class n(ns, 10);
  mpz_class d(ds, 10);
  if (d == 0) throw std::invalid_argument("bad rational (zero denominator): " + s);
  return from_mpq(mpq_class(n, d));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(big_->get_num());
  return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

mpz_class Rational::numerator() const { return big_ ? big_->get_num() : to_mpz64(num_); }

mpz_class Rational::denominator() const { return big_ ? big_->get_den() : to_mpz64(den_); }

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(to_mpz64(num_), to_mpz64(den_));
}

bool Rational::bad_prime(std::int64_t p) const {
  if (!big_) return den_ % p == 0;
  return mpz_divisible_ui_p(big_->get_den_mpz_t(), static_cast<unsigned long>(p)) != 0;
}

std::int64_t Rational::mod(std::int64_t p) const {
  if (bad_prime(p)) throw std::domain_error("prime divides denominator");
  auto residue = [p](const mpz_class& z) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(p));
    return static_cast<std::int64_t>(r.get_ui());
  };
  std::int64_t n;
  std::int64_t d;
  if (big_) {
    n = residue(big_->get_num());
    d = residue(big_->get_den());
  } else {
    n = ((num_ % p) + p) % p;
    d = den_ % p;
  }
  // d^(p-2) mod p
  auto mulmod = [p](std::int64_t a, std::int64_t b) {
    return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p);
  };
  std::int64_t inv = 1;
  std::int64_t base = d;
  for (std::int64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) inv = mulmod(inv, base);
    base = mulmod(base, base);
  }
  return mulmod(n, inv);
}

std::string Rational::str() const {
  if (big_) {
    if (big_->get_den() == 1) return big_->get_num().get_str();
    return big_->get_num().get_str() + "/" + big_->get_den().get_str();
  }
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (big_) return from_mpq(-*big_);
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  if (big_) return from_mpq(1 / *big_);
  return from_wide(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    if (a.den_ == b.den_) {
      if (a.den_ == 1) {
        __int128 s = static_cast<__int128>(a.num_) + b.num_;
        if (fits_small(s)) {
          Rational r;
          r.num_ = static_cast<std::int64_t>(s);
          return r;
        }
      }
      return Rational::from_wide(static_cast<__int128>(a.num_) + b.num_, a.den_);
    }
    return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_ +
                                   static_cast<__int128>(b.num_) * a.den_,
                               static_cast<__int128>(a.den_) * b.den_);
  }
  return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational{};
    if (a.den_ == 1 && b.den_ == 1) {
      __int128 p = static_cast<__int128>(a.num_) * b.num_;
      if (fits_small(p)) {
        Rational r;
        r.num_ = static_cast<std::int64_t>(p);
        return r;
      }
    }
    return Rational::from_wide(static_cast<__int128>(a.num_) * b.num_,
                               static_cast<__int128>(a.den_) * b.den_);
  }
  if (a.is_zero() || b.is_zero()) return Rational{};
  return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  if (!a.big_ && !b.big_) {
    return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_,
                               static_cast<__int128>(a.den_) * b.num_);
  }
  return Rational::from_mpq(a.to_mpq() / b.to_mpq());
}

bool operator==(const Rational& a, const Rational& b) {
  // Canonical forms: small values never appear in big form.
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_)
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  return a.to_mpq() < b.to_mpq();
}

std::size_t Rational::hash() const {
  if (!big_) return std::hash<std::int64_t>{}(num_) * 31u + std::hash<std::int64_t>{}(den_);
  return std::hash<std::string>{}(str());
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace ncsurf
