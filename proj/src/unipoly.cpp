#include "ncsurf/unipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ncsurf {

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

UniPoly UniPoly::monomial(const Rational& c, std::size_t k) {
  if (c.is_zero()) return {};
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::linear_root(const Rational& r) { return UniPoly{-r, Rational(1)}; }

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::monic() const {
  if (is_zero() || lead().is_one()) return *this;
  Rational inv = lead().inverse();
  std::vector<Rational> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * inv;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long long>(i));
  return UniPoly(std::move(v));
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::compose(const UniPoly& other) const {
  UniPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * other + UniPoly(*it);
  return acc;
}

UniPoly UniPoly::primitive() const {
  if (is_zero()) return {};
  mpz_class l = 1;
  for (const auto& c : c_) {
    mpz_class d = c.denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  mpz_class g = 0;
  for (const auto& c : c_) {
    mpz_class n = c.numerator() * (l / c.denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  mpq_class scale(l, g);
  if (lead().sign() < 0) scale = -scale;
  Rational s(scale);
  std::vector<Rational> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * s;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-() const {
  std::vector<Rational> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
  return UniPoly(std::move(v));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
  return UniPoly(std::move(v));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(v));
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rational c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    bool neg = c.sign() < 0;
    Rational a = neg ? -c : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << a;
    } else {
      if (!a.is_one()) os << a << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("UniPoly: division by zero");
  if (a.degree() < b.degree()) return {UniPoly{}, a};
  std::vector<Rational> r = a.coeffs();
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const auto& bc = b.coeffs();
  Rational inv = b.lead().inverse();
  for (int k = a.degree(); k >= b.degree(); --k) {
    Rational c = r[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    c *= inv;
    std::size_t shift = static_cast<std::size_t>(k - b.degree());
    q[shift] = c;
    for (std::size_t j = 0; j < bc.size(); ++j) r[shift + j] -= c * bc[j];
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("UniPoly: inexact division");
  return q;
}

bool divides(const UniPoly& b, const UniPoly& a) {
  if (b.is_zero()) return a.is_zero();
  return (a % b).is_zero();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a;
  UniPoly y = b;
  while (!y.is_zero()) {
    UniPoly r = x % y;
    x = std::move(y);
    y = r.is_zero() ? r : r.primitive();
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly r0 = a, r1 = b;
  UniPoly s0 = 1, s1 = 0;
  UniPoly t0 = 0, t1 = 1;
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UniPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = r0.lead().inverse();
  return {r0.monic(), s0 * UniPoly(inv), t0 * UniPoly(inv)};
}

UniPoly squarefree_part(const UniPoly& a) {
  if (a.is_zero()) return a;
  UniPoly g = gcd(a, a.derivative());
  return exact_div(a, g).monic();
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& a) {
  if (a.is_zero()) throw std::invalid_argument("squarefree_decomposition of zero");
  std::vector<std::pair<UniPoly, int>> out;
  UniPoly f = a.monic();
  if (f.degree() <= 0) return out;
  // Yun's algorithm.
  UniPoly fp = f.derivative();
  UniPoly c = gcd(f, fp);
  UniPoly w = exact_div(f, c);
  UniPoly y = exact_div(fp, c);
  UniPoly z = y - w.derivative();
  int i = 1;
  while (w.degree() > 0) {
    UniPoly g = gcd(w, z);
    if (g.degree() > 0) out.emplace_back(g, i);
    w = exact_div(w, g);
    y = exact_div(z, g);
    z = y - w.derivative();
    ++i;
  }
  return out;
}

int multiplicity(const UniPoly& g, const UniPoly& a) {
  if (g.degree() <= 0) throw std::invalid_argument("multiplicity of a constant");
  if (a.is_zero()) throw std::invalid_argument("multiplicity in zero polynomial");
  int e = 0;
  UniPoly x = a;
  while (true) {
    auto [q, r] = divmod(x, g);
    if (!r.is_zero()) break;
    x = std::move(q);
    ++e;
  }
  return e;
}

UniPoly pow(const UniPoly& a, unsigned e) {
  UniPoly r = 1;
  for (unsigned i = 0; i < e; ++i) r *= a;
  return r;
}

GcdFreeBasis gcd_free_basis(const std::vector<UniPoly>& polys) {
  // Refine a working set until all pairs are coprime: replace a non-coprime
  // pair (a, b) with g = gcd(a, b), a/g, b/g.
  std::vector<UniPoly> work;
  for (const auto& p : polys) {
    if (p.degree() > 0) work.push_back(squarefree_part(p));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < work.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < work.size() && !changed; ++j) {
        UniPoly g = gcd(work[i], work[j]);
        if (g.degree() <= 0) continue;
        UniPoly a = exact_div(work[i], g).monic();
        UniPoly b = exact_div(work[j], g).monic();
        std::vector<UniPoly> next;
        for (std::size_t k = 0; k < work.size(); ++k)
          if (k != i && k != j) next.push_back(work[k]);
        next.push_back(g);
        if (a.degree() > 0) next.push_back(a);
        if (b.degree() > 0) next.push_back(b);
        work = std::move(next);
        changed = true;
      }
    }
  }
  // Deduplicate (equal monic entries are not coprime, so the loop above
  // already merged them) and sort for determinism.
  std::sort(work.begin(), work.end(), [](const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.str() < b.str();
  });
  GcdFreeBasis out;
  out.basis = work;
  for (const auto& p : polys) {
    std::vector<int> ex(work.size(), 0);
    if (!p.is_zero()) {
      for (std::size_t k = 0; k < work.size(); ++k) ex[k] = multiplicity(work[k], p);
    }
    out.exponents.push_back(std::move(ex));
  }
  return out;
}

std::vector<std::int64_t> reduce_mod_p(const UniPoly& a, std::int64_t p) {
  std::vector<std::int64_t> v;
  v.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) v.push_back(c.mod(p));
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace ncsurf
