#include "ncsurf/tensor.hpp"

#include "ncsurf/error.hpp"

namespace ncsurf {

std::string kind_name(Kind k) { return k == Kind::Quadratic ? "quadratic" : "cubic"; }

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

Tensor::Tensor(Kind kind) : kind_(kind), w_(ipow(kind_dim(kind), kind_order(kind))) {}

Tensor::Tensor(Kind kind, std::vector<Rational> entries) : kind_(kind), w_(std::move(entries)) {
  if (w_.size() != ipow(dim(), order()))
    throw Error(ErrorCode::InvalidInput, "tensor has " + std::to_string(w_.size()) + " entries, expected " +
                                             std::to_string(ipow(dim(), order())));
}

bool Tensor::is_zero() const { return ncsurf::is_zero(w_); }

std::size_t Tensor::index(const std::vector<std::size_t>& idx) const { return word_index(idx, dim()); }

std::vector<std::size_t> Tensor::multi_index(std::size_t flat) const { return word_of_index(flat, order(), dim()); }

Tensor Tensor::transformed(const std::vector<Matrix>& g) const {
  if (g.size() != order()) throw std::invalid_argument("Tensor::transformed: one matrix per slot");
  Tensor cur = *this;
  const std::size_t n = dim();
  for (std::size_t s = 0; s < order(); ++s) {
    Tensor next(kind_);
    for (std::size_t f = 0; f < w_.size(); ++f) {
      if (cur.w_[f].is_zero()) continue;
      auto idx = multi_index(f);
      std::size_t src = idx[s];
      for (std::size_t r = 0; r < n; ++r) {
        if (g[s](r, src).is_zero()) continue;
        idx[s] = r;
        next.at(idx) += g[s](r, src) * cur.w_[f];
      }
    }
    cur = std::move(next);
  }
  return cur;
}

Tensor Tensor::scaled(const Rational& s) const {
  Tensor out = *this;
  for (auto& x : out.w_) x *= s;
  return out;
}

std::size_t word_index(const std::vector<std::size_t>& word, std::size_t n) {
  std::size_t idx = 0;
  for (std::size_t a : word) {
    if (a >= n) throw std::out_of_range("word letter out of range");
    idx = idx * n + a;
  }
  return idx;
}

std::vector<std::size_t> word_of_index(std::size_t idx, std::size_t length, std::size_t n) {
  std::vector<std::size_t> w(length);
  for (std::size_t i = length; i-- > 0;) {
    w[i] = idx % n;
    idx /= n;
  }
  return w;
}

}  // namespace ncsurf
