#include "ncsurf/poly.hpp"

#include "ncsurf/error.hpp"

#include <sstream>
#include <stdexcept>

namespace ncsurf {

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
  Exponent e(nvars, 0);
  e.at(i) = 1;
  return monomial(nvars, e, 1);
}

Poly Poly::monomial(std::size_t nvars, const Exponent& e, const Rational& c) {
  Poly p(nvars);
  p.add_term(e, c);
  return p;
}

Rational Poly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational{} : it->second;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

int Poly::degree_in(std::size_t i) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return d;
}

bool Poly::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    if (d >= 0 && s != d) return false;
    d = s;
  }
  return true;
}

void Poly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != nvars_) throw std::invalid_argument("Poly: exponent length mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::derivative(std::size_t i) const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponent f = e;
    f[i] -= 1;
    out.add_term(f, c * Rational(e[i]));
  }
  return out;
}

Rational Poly::eval(const std::vector<Rational>& x) const {
  if (x.size() != nvars_) throw std::invalid_argument("Poly::eval: arity");
  Rational acc;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    acc += t;
  }
  return acc;
}

Poly Poly::linear_substitute(const Matrix& t) const {
  if (t.rows() != nvars_ || t.cols() != nvars_)
    throw std::invalid_argument("Poly::linear_substitute: shape");
  std::vector<Poly> images;
  for (std::size_t i = 0; i < nvars_; ++i) {
    Poly li(nvars_);
    for (std::size_t j = 0; j < nvars_; ++j) li += t(i, j) * variable(nvars_, j);
    images.push_back(std::move(li));
  }
  return substitute(images);
}

Poly Poly::substitute(const std::vector<Poly>& polys) const {
  if (polys.size() != nvars_) throw std::invalid_argument("Poly::substitute: arity");
  std::size_t target = polys.empty() ? 0 : polys[0].nvars();
  // Cache powers of each image.
  std::vector<std::vector<Poly>> powers(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    powers[i].push_back(constant(target, 1));
    int d = degree_in(i);
    for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * polys[i]);
  }
  Poly out(target);
  for (const auto& [e, c] : terms_) {
    Poly t = constant(target, c);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i] > 0) t *= powers[i][static_cast<std::size_t>(e[i])];
    out += t;
  }
  return out;
}

Poly Poly::coefficient_in(std::size_t i, int k) const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] != k) continue;
    Exponent f = e;
    f[i] = 0;
    out.add_term(f, c);
  }
  return out;
}

Poly Poly::operator-() const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

void Poly::check_same(const Poly& b) const {
  if (nvars_ != b.nvars_) throw std::invalid_argument("Poly: variable count mismatch");
}

Poly& Poly::operator+=(const Poly& b) {
  check_same(b);
  for (const auto& [e, c] : b.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& b) {
  check_same(b);
  for (const auto& [e, c] : b.terms_) add_term(e, -c);
  return *this;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly out = a;
  out += b;
  return out;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly out = a;
  out -= b;
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same(b);
  Poly out(a.nvars_);
  Poly::Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Poly operator*(const Rational& s, const Poly& a) {
  Poly out(a.nvars_);
  if (s.is_zero()) return out;
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, c * s);
  return out;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (is_zero()) return "0";
  auto name = [&](std::size_t i) {
    return i < names.size() ? names[i] : "x" + std::to_string(i);
  };
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool neg = c.sign() < 0;
    Rational a = neg ? -c : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool constant_term = true;
    for (int x : e)
      if (x) constant_term = false;
    if (constant_term) {
      os << a;
      continue;
    }
    bool need_star = false;
    if (!a.is_one()) {
      os << a;
      need_star = true;
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << name(i);
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

Poly pow(const Poly& a, unsigned e) {
  Poly r = Poly::constant(a.nvars(), 1);
  for (unsigned i = 0; i < e; ++i) r *= a;
  return r;
}

Poly exact_div(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("Poly: division by zero");
  const std::size_t n = a.nvars();
  Poly q(n);
  Poly r = a;
  const auto& [lb_e, lb_c] = *b.terms().begin();
  Rational inv = lb_c.inverse();
  while (!r.is_zero()) {
    const auto& [le, lc] = *r.terms().begin();
    Poly::Exponent e(n);
    for (std::size_t i = 0; i < n; ++i) {
      e[i] = le[i] - lb_e[i];
      if (e[i] < 0) throw std::domain_error("Poly: inexact division");
    }
    Poly t = Poly::monomial(n, e, lc * inv);
    q += t;
    r -= t * b;
  }
  return q;
}

bool divides(const Poly& b, const Poly& a) {
  if (b.is_zero()) return a.is_zero();
  try {
    (void)exact_div(a, b);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

Poly monic(const Poly& a) {
  if (a.is_zero()) return a;
  return a.terms().begin()->second.inverse() * a;
}

HomForm::HomForm(int degree, Poly poly) : nvars_(poly.nvars()), degree_(degree), poly_(std::move(poly)) {
  for (const auto& [e, c] : poly_.terms()) {
    int s = 0;
    for (int x : e) s += x;
    if (s != degree_) throw Error(ErrorCode::InvalidInput, "HomForm: term of wrong degree");
  }
}

std::int64_t FiniteFieldForm::eval(const std::vector<std::int64_t>& x) const {
  std::int64_t acc = 0;
  for (const auto& [e, c] : terms) {
    std::int64_t t = c;
    for (std::size_t i = 0; i < nvars; ++i)
      for (int k = 0; k < e[i]; ++k) t = (t * x[i]) % p;
    acc = (acc + t) % p;
  }
  return acc;
}

FiniteFieldForm reduce_mod_p(const HomForm& form, std::int64_t p) {
  if (p <= 3) throw Error(ErrorCode::BadPrime, "prime must exceed 3");
  FiniteFieldForm out;
  out.p = p;
  out.nvars = form.nvars();
  for (const auto& [e, c] : form.poly().terms()) {
    if (c.bad_prime(p)) throw Error(ErrorCode::BadPrime, "p divides a coefficient denominator");
    std::int64_t r = c.mod(p);
    if (r != 0) out.terms.emplace_back(e, r);
  }
  return out;
}

std::int64_t count_projective_points(const FiniteFieldForm& form) {
  if (form.nvars != 3) throw std::invalid_argument("count_projective_points: need 3 variables");
  const std::int64_t p = form.p;
  std::int64_t n = 0;
  // Normalized representatives: (1:a:b), (0:1:b), (0:0:1).
  for (std::int64_t a = 0; a < p; ++a)
    for (std::int64_t b = 0; b < p; ++b)
      if (form.eval({1, a, b}) == 0) ++n;
  for (std::int64_t b = 0; b < p; ++b)
    if (form.eval({0, 1, b}) == 0) ++n;
  if (form.eval({0, 0, 1}) == 0) ++n;
  return n;
}

std::int64_t count_points_p1xp1(const FiniteFieldForm& form) {
  if (form.nvars != 4) throw std::invalid_argument("count_points_p1xp1: need 4 variables");
  const std::int64_t p = form.p;
  std::vector<std::pair<std::int64_t, std::int64_t>> line;
  for (std::int64_t a = 0; a < p; ++a) line.emplace_back(1, a);
  line.emplace_back(0, 1);
  std::int64_t n = 0;
  for (const auto& [x, y] : line)
    for (const auto& [u, v] : line)
      if (form.eval({x, y, u, v}) == 0) ++n;
  return n;
}

const std::vector<std::int64_t>& oracle_primes() {
  static const std::vector<std::int64_t> primes{101, 211, 307, 401, 503};
  return primes;
}

}  // namespace ncsurf
