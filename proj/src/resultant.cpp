#include "ncsurf/resultant.hpp"

namespace ncsurf {

UniPoly resultant(const std::vector<UniPoly>& a, const std::vector<UniPoly>& b) {
  std::vector<UniPoly> at = a;
  std::vector<UniPoly> bt = b;
  while (!at.empty() && at.back().is_zero()) at.pop_back();
  while (!bt.empty() && bt.back().is_zero()) bt.pop_back();
  return sylvester_resultant(at, bt, UniPoly(1));
}

Poly resultant(const Poly& a, const Poly& b, std::size_t var) {
  const std::size_t n = a.nvars();
  auto coeffs = [&](const Poly& p) {
    std::vector<Poly> c;
    int d = p.degree_in(var);
    for (int k = 0; k <= d; ++k) c.push_back(p.coefficient_in(var, k));
    return c;
  };
  return sylvester_resultant(coeffs(a), coeffs(b), Poly::constant(n, 1));
}

Rational resultant(const UniPoly& a, const UniPoly& b) {
  return sylvester_resultant(a.coeffs(), b.coeffs(), Rational(1));
}

}  // namespace ncsurf
