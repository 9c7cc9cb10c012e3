#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

namespace pptedge {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact rational matrix, row-major. Arithmetic never rounds.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  /// Row-major integer entries; throws ContractViolation on a size mismatch.
  static RationalMatrix from_integers(std::size_t rows, std::size_t cols,
                                      std::initializer_list<std::int64_t> entries);
  static RationalMatrix from_integers(std::size_t rows, std::size_t cols,
                                      const std::vector<std::int64_t>& entries);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  RationalMatrix transpose() const;
  RationalMatrix scaled(const Rational& factor) const;
  Rational trace() const;
  bool is_symmetric() const;

  /// Nearest double-precision complex matrix (imaginary parts zero).
  Eigen::MatrixXcd to_complex() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

}  // namespace pptedge
