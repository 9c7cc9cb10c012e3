#include "pptedge/witness.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "pptedge/errors.hpp"

namespace pptedge {

const char* to_string(WitnessMethod m) {
  switch (m) {
    case WitnessMethod::Kernel: return "kernel";
    case WitnessMethod::Realign: return "realign";
    case WitnessMethod::Shifted: return "shifted";
  }
  return "kernel";
}

WitnessMethod witness_method_from_string(const std::string& s) {
  if (s == "kernel") return WitnessMethod::Kernel;
  if (s == "realign") return WitnessMethod::Realign;
  if (s == "shifted") return WitnessMethod::Shifted;
  throw ParseError("unknown witness method '" + s + "'");
}

KernelOperator kernel_operator(const RangeProjectors& projectors, int dim_a, int dim_b) {
  const Eigen::Index n = static_cast<Eigen::Index>(dim_a) * dim_b;
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix p = id - projectors.range;
  const ComplexMatrix q = id - projectors.pt_range;
  const double trace_p = p.trace().real();
  const double trace_q = q.trace().real();
  if (trace_p < 0.5) throw InapplicableError("kernel witness: state has full rank, no kernel");
  if (trace_q < 0.5) {
    throw InapplicableError("kernel witness: partial transpose has full rank, no kernel");
  }
  // The partial transpose preserves the trace.
  const ComplexMatrix sum = p + partial_transpose(q, dim_a, dim_b);
  const double normalization = 1.0 / sum.trace().real();
  return {BipartiteOperator(dim_a, dim_b, normalization * sum), normalization};
}

namespace {

Witness finish_kernel_witness(const KernelOperator& k, const std::string& name,
                              const SeeSawConfig& cfg) {
  OptResult search = min_product_expectation(k.w_delta, cfg);
  const double eps = search.best_value;
  const Eigen::Index n = k.w_delta.dim();
  BipartiteOperator w1(k.w_delta.dim_a(), k.w_delta.dim_b(),
                       k.w_delta.matrix() - eps * ComplexMatrix::Identity(n, n));
  return Witness{std::move(w1), WitnessMethod::Kernel, eps, k.normalization, name,
                 std::nullopt, std::move(search)};
}

}  // namespace

Witness kernel_witness(const BipartiteOperator& delta, const std::string& name,
                       const SeeSawConfig& cfg, double rel_tol) {
  RangeProjectors projectors = [&] {
    try {
      return RangeProjectors::from_state(delta, rel_tol);
    } catch (const NotPsdError& e) {
      throw InapplicableError(std::string("kernel witness: state or partial transpose is not "
                                          "positive semidefinite: ") +
                              e.what());
    }
  }();
  return finish_kernel_witness(kernel_operator(projectors, delta.dim_a(), delta.dim_b()), name,
                               cfg);
}

Witness kernel_witness(const CatalogEntry& entry, const SeeSawConfig& cfg) {
  if (!entry.expected_ppt) {
    throw InapplicableError("kernel witness: state '" + entry.name + "' is not PPT");
  }
  const RangeProjectors projectors = RangeProjectors::from_entry(entry);
  return finish_kernel_witness(
      kernel_operator(projectors, entry.state.dim_a(), entry.state.dim_b()), entry.name, cfg);
}

BipartiteOperator realignment_witness_raw(const BipartiteOperator& rho, double margin) {
  const ComplexMatrix r = realign(rho);
  const SvdResult f = svd(r);
  const double norm = f.singular_values.sum();
  if (!(norm > 1.0 + margin)) {
    throw InapplicableError("realignment witness: trace norm of the realigned state is " +
                            std::to_string(norm) + ", not greater than 1");
  }
  const int d = rho.dim_a();
  const ComplexMatrix vu = f.v * f.u.adjoint();
  const BipartiteOperator rearranged = realign_adjoint(vu, d);
  const Eigen::Index n = rho.dim();
  return BipartiteOperator(d, d, ComplexMatrix::Identity(n, n) - rearranged.matrix());
}

Witness realignment_witness(const BipartiteOperator& rho, const std::string& name,
                            double margin) {
  const BipartiteOperator raw = realignment_witness_raw(rho, margin);
  const ComplexMatrix& m = raw.matrix();
  BipartiteOperator herm(raw.dim_a(), raw.dim_b(), 0.5 * (m + m.adjoint()));
  return Witness{std::move(herm), WitnessMethod::Realign, std::nullopt, std::nullopt,
                 name,           std::nullopt,           std::nullopt};
}

Witness shift_witness(const Witness& w, const BipartiteOperator& rho, double eps_shift) {
  if (!(eps_shift > 0.0)) throw ContractViolation("shift_witness: eps_shift must be > 0");
  const double value = evaluate(w, rho);
  const Eigen::Index n = w.op.dim();
  BipartiteOperator shifted(w.op.dim_a(), w.op.dim_b(),
                            w.op.matrix() - (value + eps_shift) * ComplexMatrix::Identity(n, n));
  const WitnessMethod base =
      w.method == WitnessMethod::Shifted && w.base_method ? *w.base_method : w.method;
  return Witness{std::move(shifted), WitnessMethod::Shifted, eps_shift, w.normalization,
                 w.source,           base,                   std::nullopt};
}

double evaluate(const BipartiteOperator& w, const BipartiteOperator& rho) {
  if (!w.same_shape(rho)) {
    throw ContractViolation("evaluate: witness and state dimensions differ");
  }
  const Complex value = hs_inner(w.matrix(), rho.matrix());
  if (is_hermitian(w.matrix()) && is_hermitian(rho.matrix()) &&
      std::abs(value.imag()) >= 1e-12) {
    throw NumericalError("evaluate: imaginary part " + std::to_string(value.imag()) +
                         " for Hermitian operands");
  }
  return value.real();
}

double evaluate(const Witness& w, const BipartiteOperator& rho) { return evaluate(w.op, rho); }

OptResult schmidt2_evidence(const Witness& w, const SeeSawConfig& cfg) {
  return min_schmidt2_expectation(w.op, cfg);
}

}  // namespace pptedge
