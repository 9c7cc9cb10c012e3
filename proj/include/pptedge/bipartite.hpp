#pragma once

// Index bookkeeping on C^dA (x) C^dB.
//
// The composite basis index is A-major: (i, k) -> i * dB + k, with i the
// party A index and k the party B index. A product vector (s,t,v) (x) (x,y,z)
// therefore lays out as (sx, sy, sz, tx, ty, tz, vx, vy, vz).

#include <cstddef>

#include "pptedge/linalg.hpp"
#include "pptedge/rational.hpp"

namespace pptedge {

class BipartiteOperator {
 public:
  /// Throws ContractViolation unless `matrix` is (dimA*dimB) square.
  BipartiteOperator(int dim_a, int dim_b, ComplexMatrix matrix);

  static BipartiteOperator identity(int dim_a, int dim_b);

  int dim_a() const noexcept { return dim_a_; }
  int dim_b() const noexcept { return dim_b_; }
  int dim() const noexcept { return dim_a_ * dim_b_; }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

  /// Entry <i k| X |j l>.
  Complex operator()(int i, int k, int j, int l) const {
    return matrix_(i * dim_b_ + k, j * dim_b_ + l);
  }

  bool same_shape(const BipartiteOperator& other) const noexcept {
    return dim_a_ == other.dim_a_ && dim_b_ == other.dim_b_;
  }

 private:
  int dim_a_;
  int dim_b_;
  ComplexMatrix matrix_;
};

/// Checks for the density-matrix role: Hermitian within 1e-12, unit trace
/// within 1e-12, and no eigenvalue below -psd_tol. Throws InvalidStateError.
void require_density_matrix(const BipartiteOperator& rho, double psd_tol = 1e-12);

/// A pair of unit vectors (a, b), each phase-normalized so that its first
/// nonzero component is real and nonnegative.
class ProductVector {
 public:
  /// Normalizes both factors. Throws ContractViolation on a zero factor.
  ProductVector(ComplexVector a, ComplexVector b);

  const ComplexVector& a() const noexcept { return a_; }
  const ComplexVector& b() const noexcept { return b_; }
  int dim_a() const noexcept { return static_cast<int>(a_.size()); }
  int dim_b() const noexcept { return static_cast<int>(b_.size()); }

 private:
  ComplexVector a_;
  ComplexVector b_;
};

/// Entry ((i,k),(j,l)) of the result is entry ((i,l),(j,k)) of the input.
BipartiteOperator partial_transpose(const BipartiteOperator& rho);
ComplexMatrix partial_transpose(const ComplexMatrix& m, int dim_a, int dim_b);
RationalMatrix partial_transpose(const RationalMatrix& m, int dim_a, int dim_b);

/// Realigned matrix: row (i,j), column (k,l) holds rho((i,k),(j,l)).
/// Requires dimA == dimB; throws ContractViolation otherwise.
ComplexMatrix realign(const BipartiteOperator& rho);
ComplexMatrix realign(const ComplexMatrix& m, int dim);

/// Inverse of realign. The rearrangement swaps the two middle indices and is
/// its own inverse, so this is realign with the result re-wrapped.
BipartiteOperator unrealign(const ComplexMatrix& r, int dim);

/// Adjoint of realign under the bilinear pairing Tr(X Y):
/// Tr(realign_adjoint(Y) * rho) == Tr(Y * realign(rho)) for every rho.
/// Equals realign(Y^dagger)^dagger.
BipartiteOperator realign_adjoint(const ComplexMatrix& y, int dim);

/// a (x) b, component (i,k) = a_i b_k.
ComplexVector tensor(const ProductVector& p);
ComplexVector tensor(const ComplexVector& a, const ComplexVector& b);

/// a (x) conj(b).
ComplexVector conjugate_partner(const ProductVector& p);

/// Singular values (descending) of the dimA x dimB coefficient matrix
/// C(i,k) = v(i*dimB + k). Throws ContractViolation on the zero vector or a
/// size mismatch.
RealVector schmidt_coefficients(const ComplexVector& v, int dim_a, int dim_b);

/// Hilbert-Schmidt inner product Tr(X^dagger Y).
Complex hs_inner(const ComplexMatrix& x, const ComplexMatrix& y);

}  // namespace pptedge
