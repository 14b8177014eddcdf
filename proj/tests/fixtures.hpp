#pragma once

#include "ncsurf/matrix.hpp"
#include "ncsurf/tensor.hpp"

#include <random>

namespace fixture {

inline ncsurf::Rational random_entry(std::mt19937_64& rng, int h) {
  return ncsurf::Rational(static_cast<long long>(rng() % static_cast<std::uint64_t>(2 * h + 1)) - h);
}

inline ncsurf::Tensor random_tensor(ncsurf::Kind kind, std::mt19937_64& rng, int h) {
  ncsurf::Tensor t(kind);
  std::vector<ncsurf::Rational> w;
  for (std::size_t i = 0; i < t.size(); ++i) w.push_back(random_entry(rng, h));
  return ncsurf::Tensor(kind, w);
}

inline ncsurf::Matrix random_invertible(std::size_t n, std::mt19937_64& rng, int h) {
  while (true) {
    ncsurf::Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = random_entry(rng, h);
    if (!ncsurf::determinant(m).is_zero()) return m;
  }
}

inline std::vector<ncsurf::Matrix> random_slot_changes(ncsurf::Kind kind, std::mt19937_64& rng, int h) {
  std::vector<ncsurf::Matrix> g;
  for (std::size_t s = 0; s < ncsurf::kind_order(kind); ++s) g.push_back(random_invertible(ncsurf::kind_dim(kind), rng, h));
  return g;
}

}  // namespace fixture
