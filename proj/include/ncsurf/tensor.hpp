#pragma once

#include "ncsurf/matrix.hpp"
#include "ncsurf/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace ncsurf {

/// Quadratic: three generators, relations of degree 2 (planes).
/// Cubic: two generators, relations of degree 3 (quadrics).
enum class Kind { Quadratic, Cubic };

std::string kind_name(Kind k);
/// Generators per slot: 3 or 2.
inline std::size_t kind_dim(Kind k) { return k == Kind::Quadratic ? 3 : 2; }
/// Tensor order: 3 or 4.
inline std::size_t kind_order(Kind k) { return k == Kind::Quadratic ? 3 : 4; }
/// Number of relations: 3 or 2.
inline std::size_t kind_relations(Kind k) { return k == Kind::Quadratic ? 3 : 2; }

/// Dense hypermatrix w in V_0 x V_1 x ... (row-major, first slot slowest).
class Tensor {
 public:
  explicit Tensor(Kind kind);
  Tensor(Kind kind, std::vector<Rational> entries);

  Kind kind() const { return kind_; }
  std::size_t dim() const { return kind_dim(kind_); }
  std::size_t order() const { return kind_order(kind_); }
  std::size_t size() const { return w_.size(); }
  const std::vector<Rational>& entries() const { return w_; }
  bool is_zero() const;

  std::size_t index(const std::vector<std::size_t>& idx) const;
  Rational& at(const std::vector<std::size_t>& idx) { return w_[index(idx)]; }
  const Rational& at(const std::vector<std::size_t>& idx) const { return w_[index(idx)]; }
  /// Multi-index of a flat position.
  std::vector<std::size_t> multi_index(std::size_t flat) const;

  /// Applies g_s to slot s (w -> (g_0 x g_1 x ...) w); one matrix per slot.
  Tensor transformed(const std::vector<Matrix>& g) const;
  Tensor scaled(const Rational& s) const;

  friend bool operator==(const Tensor& a, const Tensor& b) { return a.kind_ == b.kind_ && a.w_ == b.w_; }

 private:
  Kind kind_;
  std::vector<Rational> w_;
};

/// Relations as coefficient vectors over the words of length 2 (quadratic,
/// 9 entries) or 3 (cubic, 8 entries); word (a, b[, c]) sits at the
/// lexicographic index a*n + b (resp. (a*n + b)*n + c).
struct GradedPresentation {
  Kind kind = Kind::Quadratic;
  std::vector<Vector> relations;
};

/// Lexicographic index of a word over an alphabet of size n.
std::size_t word_index(const std::vector<std::size_t>& word, std::size_t n);
std::vector<std::size_t> word_of_index(std::size_t idx, std::size_t length, std::size_t n);

}  // namespace ncsurf
