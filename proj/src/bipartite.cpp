#include "pptedge/bipartite.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "pptedge/errors.hpp"

namespace pptedge {

namespace {

void require_positive_dims(int dim_a, int dim_b) {
  if (dim_a <= 0 || dim_b <= 0) {
    throw ContractViolation("bipartite dimensions must be positive, got " +
                            std::to_string(dim_a) + "x" + std::to_string(dim_b));
  }
}

// First component with modulus above a tiny fraction of the norm is made
// real and nonnegative.
ComplexVector normalize_factor(ComplexVector v, const char* which) {
  const double norm = v.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw ContractViolation(std::string("ProductVector: factor ") + which +
                            " must be a finite nonzero vector");
  }
  v /= norm;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double a = std::abs(v(i));
    if (a > 1e-14) {
      v *= std::conj(v(i)) / a;
      v(i) = Complex(a, 0.0);
      break;
    }
  }
  return v;
}

}  // namespace

BipartiteOperator::BipartiteOperator(int dim_a, int dim_b, ComplexMatrix matrix)
    : dim_a_(dim_a), dim_b_(dim_b), matrix_(std::move(matrix)) {
  require_positive_dims(dim_a, dim_b);
  const Eigen::Index n = static_cast<Eigen::Index>(dim_a) * dim_b;
  if (matrix_.rows() != n || matrix_.cols() != n) {
    throw ContractViolation("BipartiteOperator: expected a " + std::to_string(n) + "x" +
                            std::to_string(n) + " matrix, got " +
                            std::to_string(matrix_.rows()) + "x" +
                            std::to_string(matrix_.cols()));
  }
}

BipartiteOperator BipartiteOperator::identity(int dim_a, int dim_b) {
  const Eigen::Index n = static_cast<Eigen::Index>(dim_a) * dim_b;
  return BipartiteOperator(dim_a, dim_b, ComplexMatrix::Identity(n, n));
}

void require_density_matrix(const BipartiteOperator& rho, double psd_tol) {
  const ComplexMatrix& m = rho.matrix();
  if (!is_hermitian(m)) {
    throw InvalidStateError("density matrix is not Hermitian (defect " +
                            std::to_string(hermitian_defect(m)) + ")");
  }
  const Complex tr = m.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > 1e-12) {
    throw InvalidStateError("density matrix trace is " + std::to_string(tr.real()) +
                            ", expected 1");
  }
  const double smallest = hermitian_eig(m).eigenvalues(0);
  if (smallest < -psd_tol) {
    throw InvalidStateError("density matrix is not positive semidefinite (min eigenvalue " +
                            std::to_string(smallest) + ")");
  }
}

ProductVector::ProductVector(ComplexVector a, ComplexVector b)
    : a_(normalize_factor(std::move(a), "a")), b_(normalize_factor(std::move(b), "b")) {}

ComplexMatrix partial_transpose(const ComplexMatrix& m, int dim_a, int dim_b) {
  require_positive_dims(dim_a, dim_b);
  ComplexMatrix out(m.rows(), m.cols());
  for (int i = 0; i < dim_a; ++i)
    for (int k = 0; k < dim_b; ++k)
      for (int j = 0; j < dim_a; ++j)
        for (int l = 0; l < dim_b; ++l)
          out(i * dim_b + k, j * dim_b + l) = m(i * dim_b + l, j * dim_b + k);
  return out;
}

BipartiteOperator partial_transpose(const BipartiteOperator& rho) {
  return BipartiteOperator(rho.dim_a(), rho.dim_b(),
                           partial_transpose(rho.matrix(), rho.dim_a(), rho.dim_b()));
}

RationalMatrix partial_transpose(const RationalMatrix& m, int dim_a, int dim_b) {
  require_positive_dims(dim_a, dim_b);
  const auto n = static_cast<std::size_t>(dim_a) * static_cast<std::size_t>(dim_b);
  if (m.rows() != n || m.cols() != n) {
    throw ContractViolation("partial_transpose: matrix size does not match dimensions");
  }
  RationalMatrix out(n, n);
  const auto db = static_cast<std::size_t>(dim_b);
  for (std::size_t i = 0; i < static_cast<std::size_t>(dim_a); ++i)
    for (std::size_t k = 0; k < db; ++k)
      for (std::size_t j = 0; j < static_cast<std::size_t>(dim_a); ++j)
        for (std::size_t l = 0; l < db; ++l) out(i * db + k, j * db + l) = m(i * db + l, j * db + k);
  return out;
}

ComplexMatrix realign(const ComplexMatrix& m, int dim) {
  const Eigen::Index n = static_cast<Eigen::Index>(dim) * dim;
  if (dim <= 0 || m.rows() != n || m.cols() != n) {
    throw ContractViolation("realign: expected a square (d*d)x(d*d) matrix");
  }
  ComplexMatrix out(n, n);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        for (int l = 0; l < dim; ++l) out(i * dim + j, k * dim + l) = m(i * dim + k, j * dim + l);
  return out;
}

ComplexMatrix realign(const BipartiteOperator& rho) {
  if (rho.dim_a() != rho.dim_b()) {
    throw ContractViolation("realign: unsupported shape " + std::to_string(rho.dim_a()) + "x" +
                            std::to_string(rho.dim_b()) + " (requires dimA == dimB)");
  }
  return realign(rho.matrix(), rho.dim_a());
}

BipartiteOperator unrealign(const ComplexMatrix& r, int dim) {
  return BipartiteOperator(dim, dim, realign(r, dim));
}

BipartiteOperator realign_adjoint(const ComplexMatrix& y, int dim) {
  return BipartiteOperator(dim, dim, realign(ComplexMatrix(y.adjoint()), dim).adjoint());
}

ComplexVector tensor(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

ComplexVector tensor(const ProductVector& p) { return tensor(p.a(), p.b()); }

ComplexVector conjugate_partner(const ProductVector& p) {
  return tensor(p.a(), ComplexVector(p.b().conjugate()));
}

RealVector schmidt_coefficients(const ComplexVector& v, int dim_a, int dim_b) {
  require_positive_dims(dim_a, dim_b);
  if (v.size() != static_cast<Eigen::Index>(dim_a) * dim_b) {
    throw ContractViolation("schmidt_coefficients: vector length does not match dimensions");
  }
  if (!(v.norm() > 0.0)) throw ContractViolation("schmidt_coefficients: zero vector");
  ComplexMatrix c(dim_a, dim_b);
  for (int i = 0; i < dim_a; ++i)
    for (int k = 0; k < dim_b; ++k) c(i, k) = v(i * dim_b + k);
  Eigen::JacobiSVD<ComplexMatrix> solver(c);
  return solver.singularValues();
}

Complex hs_inner(const ComplexMatrix& x, const ComplexMatrix& y) {
  return (x.adjoint() * y).trace();
}

}  // namespace pptedge
