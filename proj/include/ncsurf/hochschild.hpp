#pragma once

#include "ncsurf/matrix.hpp"
#include "ncsurf/quiveralg.hpp"

#include <map>
#include <vector>

namespace ncsurf {

/// Hochschild cochains relative to the vertex subalgebra E: C^n is the
/// space of E-bimodule maps from the n-fold tensor power of the radical J
/// over E to A. A basis cochain is a pair (composable sequence of radical
/// basis elements a_1 ... a_n from vertex i_0 to i_n, basis element of
/// A(i_0, i_n)); C^0 is indexed by the vertices.
class RelativeComplex {
 public:
  explicit RelativeComplex(const QuiverAlgebra& a);

  const QuiverAlgebra& algebra() const { return *a_; }
  /// Highest degree with a nonzero term plus one (the complex is zero beyond).
  std::size_t length() const { return dims_.size(); }
  std::size_t dim(std::size_t n) const { return n < dims_.size() ? dims_[n] : 0; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  /// d^n : C^n -> C^{n+1} (rows index C^{n+1}).
  const Matrix& differential(std::size_t n) const { return d_.at(n); }

  /// Sequences of radical basis indices of length n (n >= 1).
  const std::vector<std::vector<std::size_t>>& sequences(std::size_t n) const { return seqs_.at(n); }
  /// Offset of a sequence's block in C^n and the outputs it ranges over.
  std::size_t block_offset(std::size_t n, const std::vector<std::size_t>& seq) const;
  const std::vector<std::size_t>& block_outputs(std::size_t n, std::size_t seq_index) const {
    return outputs_.at(n)[seq_index];
  }
  std::size_t sequence_index(std::size_t n, const std::vector<std::size_t>& seq) const {
    return seq_index_.at(n).at(seq);
  }

  /// Value of a 1-cochain on a radical basis element, as a vector over A.
  Vector eval1(const Vector& f, std::size_t radical_elem) const;
  /// 1-cochain from its values on the radical basis.
  Vector from_values1(const std::vector<Vector>& values) const;

  /// True when every d^{n+1} d^n vanishes.
  bool is_complex() const;

 private:
  const QuiverAlgebra* a_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> d_;
  std::map<std::size_t, std::vector<std::vector<std::size_t>>> seqs_;
  std::map<std::size_t, std::map<std::vector<std::size_t>, std::size_t>> seq_index_;
  std::map<std::size_t, std::vector<std::size_t>> offsets_;
  std::map<std::size_t, std::vector<std::vector<std::size_t>>> outputs_;
};

struct BracketInvariants {
  std::size_t dim = 0;
  std::size_t derived = 0;
  std::size_t center = 0;
  std::size_t killing_rank = 0;
};

struct HHReport {
  std::vector<std::size_t> h;  // h0..h3
  long long euler = 0;
  /// bracket[i][j] = coordinates of [f_i, f_j] on the chosen HH^1 basis.
  std::vector<std::vector<Vector>> bracket;
  BracketInvariants invariants;
  bool jacobi = true;
  std::size_t cup_rank = 0;
};

/// Throws Error(InternalInconsistency) if d^2 != 0.
RelativeComplex build_complex(const QuiverAlgebra& a);

/// h_n = dim ker d^n - rank d^{n-1} for n = 0..3. Throws
/// Error(InternalInconsistency) unless h0 = 1, h3 = 0 and the Euler
/// characteristic equals the vertex count.
std::vector<std::size_t> hh_dimensions(const RelativeComplex& c);

/// Cocycle representatives of an HH^1 basis (complement of B^1 in Z^1).
std::vector<Vector> hh1_basis(const RelativeComplex& c);

struct DerivationData {
  std::size_t derivations = 0;  // dim Der(A)
  std::size_t center = 0;       // dim Z(A)
  std::size_t inner = 0;        // dim A - dim Z(A)
  std::size_t hh1 = 0;
};
/// HH^1 as outer derivations, computed directly from the algebra.
DerivationData hh1_via_derivations(const QuiverAlgebra& a);
/// Same, throwing Error(MismatchWithComplex) when it disagrees with h1.
DerivationData hh1_via_derivations(const QuiverAlgebra& a, std::size_t expected_h1);

/// Commutator bracket on HH^1 with invariants and a Jacobi check.
struct LieBracket {
  std::vector<Vector> basis;
  std::vector<std::vector<Vector>> table;
  BracketInvariants invariants;
  bool antisymmetric = true;
  bool jacobi = true;
};
LieBracket lie_bracket_hh1(const RelativeComplex& c);

/// Rank of the span of all cup products of HH^1 classes inside HH^2.
std::size_t cup_products(const RelativeComplex& c, const std::vector<Vector>& hh1);

/// Runs everything above.
HHReport hochschild_report(const QuiverAlgebra& a);

}  // namespace ncsurf
