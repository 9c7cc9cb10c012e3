#pragma once

// Multistart see-saw minimization of quadratic forms over product vectors
// and over vectors of Schmidt rank at most two.
//
// Each half-step fixes one factor and replaces the other with a minimal
// eigenvector of the effective Hermitian operator left after contracting
// the fixed factor, so the objective never increases within a restart.
// Restart r draws its initial factors from restart_stream(seed, r), so the
// result does not depend on the order in which restarts are run.

#include <cstdint>
#include <functional>
#include <variant>
#include <vector>

#include "pptedge/bipartite.hpp"

namespace pptedge {

struct SeeSawConfig {
  int restarts = 200;
  int max_iter = 500;       // full sweeps per restart
  double conv_tol = 1e-12;  // absolute objective decrease over one sweep
  std::uint64_t seed = 42;
  bool record_trace = false;  // keep every half-step value per restart

  /// Throws ContractViolation on restarts < 1, max_iter < 1, conv_tol <= 0.
  void validate() const;
};

/// Real quadratic form f(a, b) on unit vectors a in C^dA, b in C^dB that is
/// Hermitian in each factor separately:
///   f(a, b) = a^dagger over_a(b) a = b^dagger over_b(a) b.
struct ProductQuadraticForm {
  int dim_a = 0;
  int dim_b = 0;
  std::function<ComplexMatrix(const ComplexVector& b)> over_a;
  std::function<ComplexMatrix(const ComplexVector& a)> over_b;

  double operator()(const ComplexVector& a, const ComplexVector& b) const;
};

/// <a b| H |a b>.
ProductQuadraticForm expectation_form(const BipartiteOperator& h);

/// <a b*| H |a b*>, the expectation on the conjugate partner.
ProductQuadraticForm partner_expectation_form(const BipartiteOperator& h);

/// Pointwise sum. Dimensions must agree.
ProductQuadraticForm operator+(const ProductQuadraticForm& lhs, const ProductQuadraticForm& rhs);

/// psi = left * right as a dA x dB coefficient matrix, with `state` the
/// normalized vectorization psi(i*dB + k).
struct Schmidt2Factors {
  ComplexMatrix left;   // dA x 2
  ComplexMatrix right;  // 2 x dB
  ComplexVector state;
};

struct OptResult {
  double best_value = 0.0;
  std::size_t best_restart = 0;
  std::variant<std::monostate, ProductVector, Schmidt2Factors> argmin;
  std::vector<double> restart_values;
  std::vector<int> iterations_used;
  std::vector<bool> converged_flags;
  // Half-step objective values per restart; filled only with record_trace.
  std::vector<std::vector<double>> traces;

  const ProductVector& product_argmin() const { return std::get<ProductVector>(argmin); }
  const Schmidt2Factors& schmidt2_argmin() const { return std::get<Schmidt2Factors>(argmin); }
  std::size_t converged_count() const;
};

OptResult min_generic_quadratic(const ProductQuadraticForm& objective, const SeeSawConfig& cfg);

/// Minimizes <ab|H|ab>. Throws ContractViolation if H is not Hermitian.
OptResult min_product_expectation(const BipartiteOperator& h, const SeeSawConfig& cfg);

/// Minimizes <psi|H|psi>/<psi|psi> over psi of Schmidt rank <= 2.
/// Throws ContractViolation if H is not Hermitian or a party has dimension < 2.
OptResult min_schmidt2_expectation(const BipartiteOperator& h, const SeeSawConfig& cfg);

}  // namespace pptedge
