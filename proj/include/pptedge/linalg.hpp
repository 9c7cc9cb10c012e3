#pragma once

// Dense complex linear algebra on small matrices, plus exact rank over the
// rationals. Everything here is a pure function of its arguments.

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "pptedge/rational.hpp"

namespace pptedge {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kDefaultRankTol = 1e-9;
inline constexpr double kHermitianTol = 1e-12;

/// Spectral decomposition of a Hermitian matrix.
///
/// Eigenvalues are ascending. Every eigenvector has its first component of
/// largest modulus real and nonnegative; inside a degenerate cluster the
/// vectors are ordered lexicographically on (re, im) of their entries.
struct HermitianEigen {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;  // columns
};

/// M = U diag(singular_values) V^dagger with singular values descending.
struct SvdResult {
  ComplexMatrix u;
  RealVector singular_values;
  ComplexMatrix v;
};

/// Largest entrywise deviation from Hermiticity, max |M_ij - conj(M_ji)|.
double hermitian_defect(const ComplexMatrix& m);

/// True if square and Hermitian within `tol` scaled by max(1, max |M_ij|).
bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTol);

/// Throws ContractViolation unless `m` is square and Hermitian.
void require_hermitian(const ComplexMatrix& m, const char* what);

HermitianEigen hermitian_eig(const ComplexMatrix& m);

SvdResult svd(const ComplexMatrix& m);

/// Sum of singular values.
double trace_norm(const ComplexMatrix& m);

/// Rescale `v` so that its first component of largest modulus is real and
/// nonnegative. Zero vectors are returned unchanged.
ComplexVector fix_phase(const ComplexVector& v);

/// Number of eigenvalues above rel_tol * (largest eigenvalue).
/// Throws NotPsdError if some eigenvalue lies below -rel_tol * (largest).
std::size_t numeric_rank(const ComplexMatrix& m, double rel_tol = kDefaultRankTol);

/// Rank over the rationals by fraction-free elimination.
std::size_t exact_rank(const RationalMatrix& m);

/// Orthogonal projector onto the span of eigenvectors counted by numeric_rank.
ComplexMatrix range_projector(const ComplexMatrix& m, double rel_tol = kDefaultRankTol);

/// Identity minus range_projector.
ComplexMatrix kernel_projector(const ComplexMatrix& m, double rel_tol = kDefaultRankTol);

/// Orthogonal projector onto the column span of `basis`. Columns need not be
/// orthonormal but must be linearly independent.
ComplexMatrix span_projector(const ComplexMatrix& basis);

/// ||(I - P) v|| / ||v||, clamped into [0, 1].
double residual_norm(const ComplexVector& v, const ComplexMatrix& projector);

/// Minimal eigenpair of a Hermitian matrix under the ordering rules of
/// hermitian_eig. The input is symmetrized first so that rounding noise in
/// contracted operators does not trip the Hermiticity check.
std::pair<double, ComplexVector> min_eigenpair(const ComplexMatrix& m);

}  // namespace pptedge
