#pragma once

#include "ncsurf/matrix.hpp"
#include "ncsurf/tensor.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ncsurf {

/// Linear quiver 0 -> 1 -> ... -> n-1 with the same number of arrows on
/// each step. A path from i to j is a word of length j - i over the arrow
/// alphabet; relations are attached to windows (s, s + length).
struct LinearQuiver {
  std::size_t vertices = 0;
  std::size_t arrows = 0;
  /// Start vertices of the relation windows.
  std::vector<std::size_t> relation_windows;
  std::size_t relation_length = 0;

  /// Three vertices, three arrows per step, degree-2 relations on (0, 2).
  static LinearQuiver quadratic();
  /// Four vertices, two arrows per step, degree-3 relations on (0, 3).
  static LinearQuiver cubic();
  static LinearQuiver for_kind(Kind k) { return k == Kind::Quadratic ? quadratic() : cubic(); }
  /// Relation-free path algebra fixture.
  static LinearQuiver free(std::size_t vertices, std::size_t arrows);
};

/// Basis element of A: a standard path monomial from `source` to `target`.
struct BasisElement {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> word;
  std::size_t length() const { return word.size(); }
};

/// Finite-dimensional algebra kQ/I with explicit multiplication. Elements
/// are vectors over the global basis; the product u*v means "u then v" and
/// is nonzero only when u ends where v starts.
class QuiverAlgebra {
 public:
  QuiverAlgebra(LinearQuiver q, std::vector<Vector> relations);

  const LinearQuiver& quiver() const { return q_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t vertices() const { return q_.vertices; }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const std::vector<Vector>& relations() const { return relations_; }

  /// Global indices of the basis of A(i, j) (empty when i > j).
  const std::vector<std::size_t>& component(std::size_t i, std::size_t j) const { return comp_[i][j]; }
  std::size_t component_dim(std::size_t i, std::size_t j) const { return comp_[i][j].size(); }
  std::size_t idempotent(std::size_t i) const { return comp_[i][i].front(); }
  /// Indices of the radical basis (positive length).
  const std::vector<std::size_t>& radical() const { return radical_; }
  /// Indices of the arrows (length one).
  const std::vector<std::size_t>& arrows() const { return arrows_; }

  /// Product of two basis elements, sparse (index, coefficient).
  const std::vector<std::pair<std::size_t, Rational>>& mult(std::size_t u, std::size_t v) const {
    return table_[u * basis_.size() + v];
  }
  Vector multiply(const Vector& a, const Vector& b) const;
  Vector unit_vector(std::size_t i) const;
  /// Normal form of a path word from vertex i (sparse over the basis).
  std::vector<std::pair<std::size_t, Rational>> path(std::size_t i, const std::vector<std::size_t>& word) const;

  /// Exhaustive check (uv)w = u(vw) on basis triples.
  bool is_associative() const;

 private:
  LinearQuiver q_;
  std::vector<Vector> relations_;
  std::vector<BasisElement> basis_;
  std::vector<std::vector<std::vector<std::size_t>>> comp_;
  std::vector<std::size_t> radical_;
  std::vector<std::size_t> arrows_;
  // Per component: rref of the ideal component and the column -> basis map.
  struct Reduction {
    std::vector<Vector> rows;
    std::vector<std::size_t> pivots;
    std::vector<std::optional<std::size_t>> standard;  // word index -> global basis index
  };
  std::vector<std::vector<Reduction>> red_;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> table_;
};

/// Component dimensions implied by the minimal resolutions of the simples:
/// quadratic 1, 3, 6; cubic 1, 2, 4, 6 (by distance j - i).
std::vector<std::size_t> expected_component_dims(Kind k);

/// Builds kQ/I for the relation space and checks the component dimensions
/// (Error(WrongHilbert)) and associativity (Error(InternalInconsistency)).
QuiverAlgebra build_algebra(Kind kind, const std::vector<Vector>& relations);

struct CartanData {
  Matrix cartan;   // C(i, j) = dim A(i, j): upper unitriangular
  Matrix coxeter;  // -C^{-T} C
  UniPoly serre_charpoly;  // characteristic polynomial of C^{-T} C
  bool unipotent = false;  // serre_charpoly == (t - 1)^n
};
CartanData cartan_and_coxeter(const QuiverAlgebra& a);

/// Max over vertices of the projective dimension of the simple module,
/// computed from minimal projective resolutions of right modules.
std::size_t global_dimension(const QuiverAlgebra& a);
/// Projective dimension of the simple right module at vertex i.
std::size_t projective_dimension_of_simple(const QuiverAlgebra& a, std::size_t i);

/// Nilpotency index: smallest k with J^k = 0.
std::size_t radical_nilpotency(const QuiverAlgebra& a);

}  // namespace ncsurf
