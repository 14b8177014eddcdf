#pragma once

#include "ncsurf/algebraic.hpp"
#include "ncsurf/matrix.hpp"
#include "ncsurf/poly.hpp"
#include "ncsurf/tensor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ncsurf {

/// Outcome of the nondegeneracy test on a tensor.
struct NondegeneracyVerdict {
  bool pass = false;
  /// Quadratic only: every determinant cubic det W_j(v) is nonzero.
  bool elliptic = false;
  /// Slot whose condition fails (when !pass).
  std::optional<std::size_t> failing_slot;
  /// A nonzero vector (over Q[t]/(modulus)) where the condition fails.
  std::optional<AlgebraicPoint> witness;
  /// Cubic only: kernel dimension of the pairing at each slot.
  std::vector<std::size_t> kernel_dims;
  std::string reason;
};

/// Contraction of a quadratic tensor with v in slot j: a 3x3 matrix of
/// linear forms in v, rows indexed by slot j-1 and columns by slot j+1
/// (indices mod 3).
std::vector<std::vector<Poly>> contraction_matrix(const Tensor& t, std::size_t j);

/// Quadratic tensors: for each slot the contraction must have rank >= 2 at
/// every nonzero v over the algebraic closure.
NondegeneracyVerdict check_quadruple(const Tensor& t, std::uint64_t seed = kDefaultSolveSeed);

/// Cubic tensors: for each j mod 4 the pairing of decomposable functionals
/// on slots j, j+1 with w never vanishes.
NondegeneracyVerdict check_quintuple(const Tensor& t);

/// Dispatches on the tensor kind.
NondegeneracyVerdict check_nondegenerate(const Tensor& t, std::uint64_t seed = kDefaultSolveSeed);

/// Relation space: contraction of the last slot, as an rref basis of
/// vectors over words of length order-1. Throws Error(DegenerateRelations).
GradedPresentation extract_relations(const Tensor& t);

/// The unique (up to scalar) w spanning (V x R) meet (R x V); normalized so
/// that its first nonzero entry is 1. Throws Error(NotPotential).
Tensor recover_superpotential(const GradedPresentation& p);

/// rref basis of a relation list (checks counts and independence).
GradedPresentation canonical_presentation(const GradedPresentation& p);

}  // namespace ncsurf
