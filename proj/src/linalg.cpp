#include "pptedge/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "pptedge/errors.hpp"

namespace pptedge {

namespace {

bool lexicographically_less(const ComplexVector& x, const ComplexVector& y) {
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x(i).real() != y(i).real()) return x(i).real() < y(i).real();
    if (x(i).imag() != y(i).imag()) return x(i).imag() < y(i).imag();
  }
  return false;
}

double max_abs_entry(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace

double hermitian_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return m.size() == 0 ? 0.0 : (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return hermitian_defect(m) <= tol * std::max(1.0, max_abs_entry(m));
}

void require_hermitian(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw ContractViolation(std::string(what) + ": matrix is not square (" +
                            std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ")");
  }
  if (!is_hermitian(m)) {
    throw ContractViolation(std::string(what) + ": matrix is not Hermitian (defect " +
                            std::to_string(hermitian_defect(m)) + ")");
  }
}

namespace {

// Unit phase that makes the first largest-modulus component of `v` real and
// nonnegative. Returns 1 for the zero vector.
Complex normalizing_phase(const ComplexVector& v, Eigen::Index* pivot_out = nullptr) {
  Eigen::Index pivot = 0;
  double largest = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double a = std::abs(v(i));
    // First index wins on near-ties.
    if (a > largest * (1.0 + 1e-12)) {
      largest = a;
      pivot = i;
    }
  }
  if (pivot_out != nullptr) *pivot_out = pivot;
  if (largest <= 0.0) return Complex(1.0, 0.0);
  return std::conj(v(pivot)) / largest;
}

}  // namespace

ComplexVector fix_phase(const ComplexVector& v) {
  Eigen::Index pivot = 0;
  ComplexVector out = v * normalizing_phase(v, &pivot);
  if (out.size() > 0) out(pivot) = Complex(std::abs(v(pivot)), 0.0);
  return out;
}

HermitianEigen hermitian_eig(const ComplexMatrix& m) {
  require_hermitian(m, "hermitian_eig");
  const Eigen::Index n = m.rows();
  HermitianEigen out;
  if (n == 0) return out;

  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("hermitian_eig: eigensolver did not converge");
  }
  out.eigenvalues = solver.eigenvalues();
  out.eigenvectors = solver.eigenvectors();
  for (Eigen::Index j = 0; j < n; ++j) out.eigenvectors.col(j) = fix_phase(out.eigenvectors.col(j));

  // Tie-break inside degenerate clusters.
  const double scale = std::max(1.0, out.eigenvalues.cwiseAbs().maxCoeff());
  const double cluster_tol = 1e-12 * scale;
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index stop = start + 1;
    while (stop < n && out.eigenvalues(stop) - out.eigenvalues(stop - 1) <= cluster_tol) ++stop;
    if (stop - start > 1) {
      std::vector<Eigen::Index> order(static_cast<std::size_t>(stop - start));
      std::iota(order.begin(), order.end(), start);
      std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        return lexicographically_less(out.eigenvectors.col(a), out.eigenvectors.col(b));
      });
      const ComplexMatrix block = out.eigenvectors.middleCols(start, stop - start);
      const RealVector values = out.eigenvalues.segment(start, stop - start);
      for (std::size_t k = 0; k < order.size(); ++k) {
        const auto src = order[k] - start;
        const auto dst = start + static_cast<Eigen::Index>(k);
        out.eigenvectors.col(dst) = block.col(src);
        out.eigenvalues(dst) = values(src);
      }
    }
    start = stop;
  }
  return out;
}

SvdResult svd(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> solver(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  SvdResult out{solver.matrixU(), solver.singularValues(), solver.matrixV()};
  // Fix the joint phase of each singular pair on the right factor.
  for (Eigen::Index j = 0; j < out.v.cols(); ++j) {
    const Complex phase = normalizing_phase(out.v.col(j));
    out.v.col(j) *= phase;
    if (j < out.u.cols()) out.u.col(j) *= phase;
  }
  return out;
}

double trace_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> solver(m);
  return solver.singularValues().sum();
}

namespace {

// Eigen decomposition plus the count of eigenvalues above the threshold,
// after the PSD check.
std::pair<HermitianEigen, std::size_t> psd_spectrum(const ComplexMatrix& m, double rel_tol) {
  HermitianEigen eig = hermitian_eig(m);
  const Eigen::Index n = eig.eigenvalues.size();
  if (n == 0) return {std::move(eig), 0};
  const double scale = eig.eigenvalues.cwiseAbs().maxCoeff();
  const double threshold = rel_tol * scale;
  const double smallest = eig.eigenvalues(0);
  if (smallest < -threshold) {
    throw NotPsdError("matrix is not positive semidefinite: eigenvalue " +
                          std::to_string(smallest) + " below -" + std::to_string(threshold),
                      smallest);
  }
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    if (eig.eigenvalues(i) > threshold) ++rank;
  return {std::move(eig), rank};
}

}  // namespace

std::size_t numeric_rank(const ComplexMatrix& m, double rel_tol) {
  return psd_spectrum(m, rel_tol).second;
}

std::size_t exact_rank(const RationalMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (rows == 0 || cols == 0) return 0;

  // Clear denominators row by row; rank is unchanged by nonzero row scaling.
  std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    BigInt lcm = 1;
    for (std::size_t c = 0; c < cols; ++c)
      lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(m(r, c)));
    for (std::size_t c = 0; c < cols; ++c) {
      const Rational scaled = m(r, c) * lcm;
      a[r][c] = boost::multiprecision::numerator(scaled);
    }
  }

  // Bareiss elimination with row pivoting and column skipping. Every
  // division below is exact: after k pivots each entry is a k+1 minor.
  BigInt previous_pivot = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot_row = rank;
    while (pivot_row < rows && a[pivot_row][c] == 0) ++pivot_row;
    if (pivot_row == rows) continue;
    std::swap(a[pivot_row], a[rank]);
    const BigInt& pivot = a[rank][c];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        BigInt numerator = pivot * a[r][k] - a[r][c] * a[rank][k];
        BigInt remainder;
        BigInt quotient;
        boost::multiprecision::divide_qr(numerator, previous_pivot, quotient, remainder);
        if (remainder != 0) throw NumericalError("exact_rank: inexact Bareiss division");
        a[r][k] = std::move(quotient);
      }
      a[r][c] = 0;
    }
    previous_pivot = a[rank][c];
    ++rank;
  }
  return rank;
}

ComplexMatrix range_projector(const ComplexMatrix& m, double rel_tol) {
  auto [eig, rank] = psd_spectrum(m, rel_tol);
  const ComplexMatrix basis = eig.eigenvectors.rightCols(static_cast<Eigen::Index>(rank));
  ComplexMatrix p = basis * basis.adjoint();
  return 0.5 * (p + p.adjoint());
}

ComplexMatrix kernel_projector(const ComplexMatrix& m, double rel_tol) {
  const ComplexMatrix p = range_projector(m, rel_tol);
  return ComplexMatrix::Identity(p.rows(), p.cols()) - p;
}

ComplexMatrix span_projector(const ComplexMatrix& basis) {
  const Eigen::Index n = basis.rows();
  if (basis.cols() == 0) return ComplexMatrix::Zero(n, n);
  Eigen::ColPivHouseholderQR<ComplexMatrix> qr(basis);
  if (qr.rank() != basis.cols()) {
    throw ContractViolation("span_projector: basis columns are linearly dependent");
  }
  const ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, basis.cols());
  ComplexMatrix p = q * q.adjoint();
  return 0.5 * (p + p.adjoint());
}

double residual_norm(const ComplexVector& v, const ComplexMatrix& projector) {
  const double norm = v.norm();
  if (!(norm > 0.0)) throw ContractViolation("residual_norm: zero vector");
  if (projector.rows() != v.size() || projector.cols() != v.size()) {
    throw ContractViolation("residual_norm: projector dimension does not match vector");
  }
  const double r = (v - projector * v).norm() / norm;
  return std::clamp(r, 0.0, 1.0);
}

std::pair<double, ComplexVector> min_eigenpair(const ComplexMatrix& m) {
  const HermitianEigen eig = hermitian_eig(0.5 * (m + m.adjoint()));
  return {eig.eigenvalues(0), eig.eigenvectors.col(0)};
}

}  // namespace pptedge
