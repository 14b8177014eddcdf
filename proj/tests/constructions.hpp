#pragma once

// Closed-form constructions with known answers: normal-form plane cubics,
// Jordan-form quadric pencils and brute-force point counts over F_p.

#include "ncsurf/matrix.hpp"
#include "ncsurf/pointscheme.hpp"
#include "ncsurf/poly.hpp"
#include "ncsurf/resultant.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace constructions {

using namespace ncsurf;

inline Poly X3(std::size_t i) { return Poly::variable(3, i); }
inline Poly X4(std::size_t i) { return Poly::variable(4, i); }

inline std::int64_t eval_mod(const Poly& f, const std::vector<std::int64_t>& pt, std::int64_t p) {
  std::int64_t acc = 0;
  for (const auto& [e, c] : f.terms()) {
    std::int64_t term = c.mod(p);
    for (std::size_t i = 0; i < e.size(); ++i) term = oracle::mulmod(term, oracle::powmod(pt[i], e[i], p), p);
    acc = (acc + term) % p;
  }
  return acc;
}

// Brute-force count of F_p-points on the plane curve f = 0.
inline std::int64_t count_p2(const Poly& f, std::int64_t p) {
  std::int64_t n = 0;
  std::vector<std::vector<std::int64_t>> reps;
  for (std::int64_t a = 0; a < p; ++a)
    for (std::int64_t b = 0; b < p; ++b) reps.push_back({a, b, 1});
  for (std::int64_t a = 0; a < p; ++a) reps.push_back({a, 1, 0});
  reps.push_back({1, 0, 0});
  for (const auto& r : reps)
    if (eval_mod(f, r, p) == 0) ++n;
  return n;
}

// Brute-force count of F_p-points on the (2,2) curve f = 0 in P^1 x P^1.
inline std::int64_t count_p1p1(const Poly& f, std::int64_t p) {
  std::vector<std::pair<std::int64_t, std::int64_t>> line;
  for (std::int64_t a = 0; a < p; ++a) line.push_back({a, 1});
  line.push_back({1, 0});
  std::int64_t n = 0;
  for (const auto& [x, y] : line)
    for (const auto& [u, v] : line)
      if (eval_mod(f, {x, y, u, v}, p) == 0) ++n;
  return n;
}

struct NormalForm {
  std::string type;
  Poly f;
  // Expected point count as a function of p; P1 is checked against the
  // Hasse bound instead.
  std::int64_t (*count)(std::int64_t);
};

inline std::vector<NormalForm> plane_normal_forms() {
  const Poly x = X3(0), y = X3(1), z = X3(2);
  return {
      {"P1", y * y * z - x * x * x - x * z * z, nullptr},
      {"P2", y * y * z - x * x * x, [](std::int64_t p) { return p + 1; }},
      {"P3", y * y * z - x * x * (x + z), [](std::int64_t p) { return p; }},
      {"P4", x * y * z, [](std::int64_t p) { return 3 * p; }},
      {"P5", x * y * (x + y), [](std::int64_t p) { return 3 * p + 1; }},
      {"P6", x * (y * z - x * x), [](std::int64_t p) { return 2 * p; }},
      {"P7", z * (y * z - x * x), [](std::int64_t p) { return 2 * p + 1; }},
      {"P8", x * x * x, [](std::int64_t p) { return p + 1; }},
      {"P9", x * x * y, [](std::int64_t p) { return 2 * p + 1; }},
  };
}

// Block-diagonal Hankel pencil: each (eigenvalue, size) block contributes
// M_b = antidiagonal, N_b = M_b (eigenvalue + nilpotent shift), both
// symmetric, with M^{-1} N in Jordan form.
inline std::pair<Matrix, Matrix> hankel_pencil(const std::vector<std::pair<int, int>>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += static_cast<std::size_t>(b.second);
  Matrix m(n, n), nn(n, n);
  std::size_t off = 0;
  for (const auto& [ev, size] : blocks) {
    const auto k = static_cast<std::size_t>(size);
    Matrix a(k, k), j(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      a(i, k - 1 - i) = 1;
      j(i, i) = ev;
      if (i + 1 < k) j(i, i + 1) = 1;
    }
    Matrix b = a * j;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) {
        m(off + r, off + c) = a(r, c);
        nn(off + r, off + c) = b(r, c);
      }
    off += k;
  }
  return {m, nn};
}

// Jordan blocks of M^{-1} N at the eigenvalue -lambda0 (a root of the
// grouping polynomial) from ranks of (M^{-1} N + lambda0)^k over F_p.
inline std::vector<int> blocks_from_ranks(const Matrix& m, const Matrix& n, const UniPoly& g, std::int64_t& prime_used) {
  const Matrix a = *inverse(m) * n;
  const std::size_t dim = a.rows();
  for (std::int64_t p : {101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157}) {
    auto gp = reduce_mod_p(g, p);
    if (static_cast<int>(gp.size()) - 1 != g.degree()) continue;
    std::vector<std::int64_t> roots;
    for (std::int64_t r = 0; r < p; ++r) {
      std::int64_t v = 0;
      for (std::size_t i = gp.size(); i-- > 0;) v = (oracle::mulmod(v, r, p) + gp[i]) % p;
      if (v == 0) roots.push_back(r);
    }
    if (static_cast<int>(roots.size()) != g.degree()) continue;
    prime_used = p;
    std::vector<int> first;
    for (std::int64_t root : roots) {
      auto b = oracle::reduce(a, p);
      for (std::size_t i = 0; i < dim; ++i) b[i][i] = (b[i][i] + root) % p;
      std::vector<std::size_t> ranks{dim};
      auto power = b;
      for (std::size_t k = 1; k <= dim; ++k) {
        ranks.push_back(oracle::rank_mod_p(power, p));
        oracle::ModMatrix next(dim, std::vector<std::int64_t>(dim));
        for (std::size_t i = 0; i < dim; ++i)
          for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t l = 0; l < dim; ++l) next[i][j] = (next[i][j] + oracle::mulmod(power[i][l], b[l][j], p)) % p;
        power = next;
      }
      // #blocks of size >= k is ranks[k-1] - ranks[k].
      std::vector<int> blocks;
      for (std::size_t k = 1; k <= dim; ++k) {
        std::size_t at_least = ranks[k - 1] - ranks[k];
        std::size_t at_least_next = k < dim ? ranks[k] - ranks[k + 1] : 0;
        for (std::size_t c = 0; c < at_least - at_least_next; ++c) blocks.push_back(static_cast<int>(k));
      }
      std::sort(blocks.rbegin(), blocks.rend());
      if (first.empty()) first = blocks;
      if (blocks != first) return {};  // conjugate roots must agree
    }
    return first;
  }
  return {};
}

}  // namespace constructions
