#include "pptedge/optimize.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "pptedge/errors.hpp"
#include "pptedge/random.hpp"

namespace pptedge {

namespace {

// a (x) I_dB as a (dA*dB) x dB matrix.
ComplexMatrix embed_first(const ComplexVector& a, int dim_b) {
  const Eigen::Index db = dim_b;
  ComplexMatrix e = ComplexMatrix::Zero(a.size() * db, db);
  for (Eigen::Index i = 0; i < a.size(); ++i)
    e.block(i * db, 0, db, db).diagonal().setConstant(a(i));
  return e;
}

// I_dA (x) b as a (dA*dB) x dA matrix.
ComplexMatrix embed_second(const ComplexVector& b, int dim_a) {
  const Eigen::Index db = b.size();
  ComplexMatrix e = ComplexMatrix::Zero(dim_a * db, dim_a);
  for (Eigen::Index i = 0; i < dim_a; ++i) e.block(i * db, i, db, 1) = b;
  return e;
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) { return 0.5 * (m + m.adjoint()); }

struct RestartOutcome {
  double value = std::numeric_limits<double>::infinity();
  int iterations = 0;
  bool converged = false;
  std::vector<double> trace;
};

// Minimum over restarts, lowest index on ties.
std::size_t best_index(const std::vector<double>& values) {
  std::size_t best = 0;
  for (std::size_t r = 1; r < values.size(); ++r)
    if (values[r] < values[best]) best = r;
  return best;
}

// Orthonormal basis of the row space of a 2 x d matrix, always 2 rows.
ComplexMatrix orthonormal_rows(const ComplexMatrix& y) {
  const ComplexMatrix yt = y.adjoint();
  Eigen::HouseholderQR<ComplexMatrix> qr(yt);
  const ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(yt.rows(), yt.cols());
  return q.adjoint();
}

// Orthonormal basis of the column space of a d x 2 matrix, always 2 columns.
ComplexMatrix orthonormal_cols(const ComplexMatrix& x) {
  Eigen::HouseholderQR<ComplexMatrix> qr(x);
  return qr.householderQ() * ComplexMatrix::Identity(x.rows(), x.cols());
}

ComplexVector vectorize(const ComplexMatrix& c) {
  ComplexVector v(c.size());
  for (Eigen::Index i = 0; i < c.rows(); ++i)
    for (Eigen::Index k = 0; k < c.cols(); ++k) v(i * c.cols() + k) = c(i, k);
  return v;
}

double rayleigh(const ComplexMatrix& h, const ComplexVector& psi) {
  return (psi.adjoint() * h * psi)(0, 0).real() / psi.squaredNorm();
}

}  // namespace

void SeeSawConfig::validate() const {
  if (restarts < 1) throw ContractViolation("SeeSawConfig: restarts must be >= 1");
  if (max_iter < 1) throw ContractViolation("SeeSawConfig: max_iter must be >= 1");
  if (!(conv_tol > 0.0)) throw ContractViolation("SeeSawConfig: conv_tol must be > 0");
}

double ProductQuadraticForm::operator()(const ComplexVector& a, const ComplexVector& b) const {
  return (a.adjoint() * over_a(b) * a)(0, 0).real();
}

ProductQuadraticForm expectation_form(const BipartiteOperator& h) {
  require_hermitian(h.matrix(), "expectation_form");
  const ComplexMatrix m = h.matrix();
  const int da = h.dim_a();
  const int db = h.dim_b();
  return {da, db,
          [m, da](const ComplexVector& b) {
            const ComplexMatrix e = embed_second(b, da);
            return hermitian_part(e.adjoint() * m * e);
          },
          [m, db](const ComplexVector& a) {
            const ComplexMatrix e = embed_first(a, db);
            return hermitian_part(e.adjoint() * m * e);
          }};
}

ProductQuadraticForm partner_expectation_form(const BipartiteOperator& h) {
  require_hermitian(h.matrix(), "partner_expectation_form");
  const ComplexMatrix m = h.matrix();
  const int da = h.dim_a();
  const int db = h.dim_b();
  return {da, db,
          [m, da](const ComplexVector& b) {
            const ComplexMatrix e = embed_second(b.conjugate(), da);
            return hermitian_part(e.adjoint() * m * e);
          },
          // b^T M b* = b^dagger conj(M) b for Hermitian M.
          [m, db](const ComplexVector& a) {
            const ComplexMatrix e = embed_first(a, db);
            return ComplexMatrix(hermitian_part(e.adjoint() * m * e).conjugate());
          }};
}

ProductQuadraticForm operator+(const ProductQuadraticForm& lhs, const ProductQuadraticForm& rhs) {
  if (lhs.dim_a != rhs.dim_a || lhs.dim_b != rhs.dim_b) {
    throw ContractViolation("ProductQuadraticForm: cannot add forms of different dimensions");
  }
  return {lhs.dim_a, lhs.dim_b,
          [l = lhs.over_a, r = rhs.over_a](const ComplexVector& b) -> ComplexMatrix {
            return l(b) + r(b);
          },
          [l = lhs.over_b, r = rhs.over_b](const ComplexVector& a) -> ComplexMatrix {
            return l(a) + r(a);
          }};
}

std::size_t OptResult::converged_count() const {
  return static_cast<std::size_t>(std::count(converged_flags.begin(), converged_flags.end(), true));
}

OptResult min_generic_quadratic(const ProductQuadraticForm& objective, const SeeSawConfig& cfg) {
  cfg.validate();
  if (objective.dim_a < 1 || objective.dim_b < 1 || !objective.over_a || !objective.over_b) {
    throw ContractViolation("min_generic_quadratic: incomplete objective");
  }
  const auto restarts = static_cast<std::size_t>(cfg.restarts);
  std::vector<RestartOutcome> outcomes(restarts);
  std::vector<ComplexVector> final_a(restarts);
  std::vector<ComplexVector> final_b(restarts);

  for (std::size_t r = 0; r < restarts; ++r) {
    Rng rng = restart_stream(cfg.seed, r);
    ComplexVector a = random_unit_vector(objective.dim_a, rng);
    ComplexVector b = random_unit_vector(objective.dim_b, rng);
    RestartOutcome& out = outcomes[r];

    double previous = objective(a, b);
    if (cfg.record_trace) out.trace.push_back(previous);
    for (int it = 1; it <= cfg.max_iter; ++it) {
      auto [value_b, new_b] = min_eigenpair(objective.over_b(a));
      b = std::move(new_b);
      auto [value_a, new_a] = min_eigenpair(objective.over_a(b));
      a = std::move(new_a);
      if (cfg.record_trace) {
        out.trace.push_back(value_b);
        out.trace.push_back(value_a);
      }
      out.iterations = it;
      if (previous - value_a < cfg.conv_tol) {
        out.converged = true;
        break;
      }
      previous = value_a;
    }
    out.value = objective(a, b);
    final_a[r] = std::move(a);
    final_b[r] = std::move(b);
  }

  OptResult result;
  for (auto& o : outcomes) {
    result.restart_values.push_back(o.value);
    result.iterations_used.push_back(o.iterations);
    result.converged_flags.push_back(o.converged);
    if (cfg.record_trace) result.traces.push_back(std::move(o.trace));
  }
  result.best_restart = best_index(result.restart_values);
  result.best_value = result.restart_values[result.best_restart];
  result.argmin = ProductVector(final_a[result.best_restart], final_b[result.best_restart]);
  return result;
}

OptResult min_product_expectation(const BipartiteOperator& h, const SeeSawConfig& cfg) {
  return min_generic_quadratic(expectation_form(h), cfg);
}

OptResult min_schmidt2_expectation(const BipartiteOperator& h, const SeeSawConfig& cfg) {
  require_hermitian(h.matrix(), "min_schmidt2_expectation");
  cfg.validate();
  const int da = h.dim_a();
  const int db = h.dim_b();
  if (da < 2 || db < 2) {
    throw ContractViolation("min_schmidt2_expectation: both parties need dimension >= 2");
  }
  const ComplexMatrix& m = h.matrix();
  const Eigen::Index n = h.dim();
  const auto restarts = static_cast<std::size_t>(cfg.restarts);

  std::vector<RestartOutcome> outcomes(restarts);
  std::vector<Schmidt2Factors> finals(restarts);

  for (std::size_t r = 0; r < restarts; ++r) {
    Rng rng = restart_stream(cfg.seed, r);
    ComplexMatrix left = complex_gaussian(da, 2, rng);
    ComplexMatrix right = complex_gaussian(2, db, rng);
    RestartOutcome& out = outcomes[r];

    double previous = rayleigh(m, vectorize(left * right));
    if (cfg.record_trace) out.trace.push_back(previous);
    for (int it = 1; it <= cfg.max_iter; ++it) {
      // Left step: psi(i,k) = sum_r X(i,r) Yo(r,k), unknown x(i*2 + r).
      const ComplexMatrix yo = orthonormal_rows(right);
      ComplexMatrix embed_y = ComplexMatrix::Zero(n, 2 * da);
      for (int i = 0; i < da; ++i)
        for (int k = 0; k < db; ++k)
          for (int q = 0; q < 2; ++q) embed_y(i * db + k, i * 2 + q) = yo(q, k);
      auto [value_left, x] = min_eigenpair(embed_y.adjoint() * m * embed_y);
      for (int i = 0; i < da; ++i)
        for (int q = 0; q < 2; ++q) left(i, q) = x(i * 2 + q);

      // Right step: psi(i,l) = sum_r Xo(i,r) Y(r,l), unknown y(r*dB + l).
      const ComplexMatrix xo = orthonormal_cols(left);
      ComplexMatrix embed_x = ComplexMatrix::Zero(n, 2 * db);
      for (int i = 0; i < da; ++i)
        for (int l = 0; l < db; ++l)
          for (int q = 0; q < 2; ++q) embed_x(i * db + l, q * db + l) = xo(i, q);
      auto [value_right, y] = min_eigenpair(embed_x.adjoint() * m * embed_x);
      left = xo;
      for (int q = 0; q < 2; ++q)
        for (int l = 0; l < db; ++l) right(q, l) = y(q * db + l);

      if (cfg.record_trace) {
        out.trace.push_back(value_left);
        out.trace.push_back(value_right);
      }
      out.iterations = it;
      if (previous - value_right < cfg.conv_tol) {
        out.converged = true;
        break;
      }
      previous = value_right;
    }
    ComplexVector psi = vectorize(left * right);
    psi /= psi.norm();
    out.value = rayleigh(m, psi);
    finals[r] = Schmidt2Factors{left, right, std::move(psi)};
  }

  OptResult result;
  for (auto& o : outcomes) {
    result.restart_values.push_back(o.value);
    result.iterations_used.push_back(o.iterations);
    result.converged_flags.push_back(o.converged);
    if (cfg.record_trace) result.traces.push_back(std::move(o.trace));
  }
  result.best_restart = best_index(result.restart_values);
  result.best_value = result.restart_values[result.best_restart];
  result.argmin = std::move(finals[result.best_restart]);
  return result;
}

}  // namespace pptedge
