#pragma once

#include "ncsurf/poly.hpp"
#include "ncsurf/unipoly.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace ncsurf {

/// Arithmetic in Q[t]/(f) for a monic squarefree f, i.e. in a product of
/// number fields. Zero tests that are not uniform across the factors are
/// resolved by splitting the modulus (dynamic evaluation); a context never
/// commits to an irreducible factorization.
class AlgebraicContext {
 public:
  /// Throws Error(InvalidInput) unless f is nonconstant and squarefree.
  explicit AlgebraicContext(const UniPoly& f);

  const UniPoly& modulus() const { return f_; }
  int degree() const { return f_.degree(); }

  UniPoly reduce(const UniPoly& a) const { return a % f_; }
  UniPoly mul(const UniPoly& a, const UniPoly& b) const { return (a * b) % f_; }
  /// Inverse of an element that is a unit in every factor.
  UniPoly inverse(const UniPoly& a) const;

  /// Splits the context into the part where `a` vanishes and the part where
  /// it is a unit. Either part may be absent.
  struct Split;
  Split split_on(const UniPoly& a) const;

  /// Same context with a smaller modulus dividing f.
  AlgebraicContext restrict_to(const UniPoly& factor) const;

 private:
  UniPoly f_;
};

struct AlgebraicContext::Split {
  std::optional<AlgebraicContext> zero;
  std::optional<AlgebraicContext> unit;
};

/// Polynomial in one variable with coefficients in a context.
using ContextPoly = std::vector<UniPoly>;

struct ContextGcd {
  AlgebraicContext context;
  ContextPoly gcd;  // monic, or empty for the zero polynomial
};

/// Gcd of a family of polynomials over Q[t]/(f), splitting as needed. The
/// returned contexts partition the input context.
std::vector<ContextGcd> gcd_over_context(const AlgebraicContext& ctx,
                                         const std::vector<ContextPoly>& polys);

/// Projective point whose coordinates lie in Q[t]/(modulus); it stands for
/// deg(modulus) distinct points over the algebraic closure.
struct AlgebraicPoint {
  UniPoly modulus;
  std::vector<UniPoly> coords;

  std::size_t multiplicity() const { return static_cast<std::size_t>(modulus.degree()); }
  /// Rational coordinates when the modulus is linear.
  std::optional<std::vector<Rational>> rational() const;
};

struct SolveResult {
  std::vector<AlgebraicPoint> points;
  std::size_t count = 0;  // distinct points over the algebraic closure
};

inline constexpr std::uint64_t kDefaultSolveSeed = 0x6e637375726600ULL;

/// Common projective zeros of ternary forms of equal degree, assumed finite.
///
/// Works after a random unimodular integer change of coordinates: two random
/// combinations of the system are eliminated by a resultant, candidate
/// abscissae are lifted by a gcd over the split contexts of all forms, and
/// the whole computation is repeated under a fresh change until two runs
/// agree on the count. Points are normalized to have first nonzero
/// coordinate 1. Throws Error(NotZeroDimensional) when the zero set is
/// evidently infinite.
SolveResult dynamic_eval_solve(const std::vector<HomForm>& system,
                               std::uint64_t seed = kDefaultSolveSeed);

/// Evaluates a form at an algebraic point (result reduced mod the modulus).
UniPoly eval_at(const Poly& p, const AlgebraicPoint& pt);

/// Deterministic integer source used wherever the library randomizes
/// (coordinate changes, test generators). Independent of the standard
/// library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform-ish integer in [lo, hi].
  long long uniform(long long lo, long long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long long>(engine_() % span);
  }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Random unimodular integer matrix (product of unit lower and unit upper
/// triangular factors with entries in [-bound, bound]).
Matrix random_unimodular(std::size_t n, Rng& rng, int bound = 3);

}  // namespace ncsurf
