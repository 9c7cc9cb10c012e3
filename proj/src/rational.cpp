#include "pptedge/rational.hpp"

#include <string>

#include "pptedge/errors.hpp"

namespace pptedge {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix RationalMatrix::from_integers(std::size_t rows, std::size_t cols,
                                             std::initializer_list<std::int64_t> entries) {
  return from_integers(rows, cols, std::vector<std::int64_t>(entries));
}

RationalMatrix RationalMatrix::from_integers(std::size_t rows, std::size_t cols,
                                             const std::vector<std::int64_t>& entries) {
  if (entries.size() != rows * cols) {
    throw ContractViolation("RationalMatrix: expected " + std::to_string(rows * cols) +
                            " entries, got " + std::to_string(entries.size()));
  }
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) m.entries_[i] = entries[i];
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::scaled(const Rational& factor) const {
  RationalMatrix s = *this;
  for (auto& e : s.entries_) e *= factor;
  return s;
}

Rational RationalMatrix::trace() const {
  if (rows_ != cols_) throw ContractViolation("RationalMatrix::trace: matrix is not square");
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool RationalMatrix::is_symmetric() const { return rows_ == cols_ && *this == transpose(); }

Eigen::MatrixXcd RationalMatrix::to_complex() const {
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows_), static_cast<Eigen::Index>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          (*this)(r, c).convert_to<double>();
  return m;
}

}  // namespace pptedge
