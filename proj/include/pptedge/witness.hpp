#pragma once

// Entanglement witnesses for PPT entangled states: the kernel construction
// N (P + Q^T_B) - eps I, the realignment construction built from the SVD
// of R(rho), and their shifted variants that detect a given state only by a
// chosen margin.

#include <optional>
#include <string>

#include "pptedge/catalog.hpp"
#include "pptedge/criteria.hpp"
#include "pptedge/optimize.hpp"

namespace pptedge {

enum class WitnessMethod { Kernel, Realign, Shifted };

const char* to_string(WitnessMethod m);
/// Inverse of to_string; throws ParseError.
WitnessMethod witness_method_from_string(const std::string& s);

struct Witness {
  BipartiteOperator op;
  WitnessMethod method = WitnessMethod::Kernel;
  // Kernel: product-state infimum of W_delta (heuristic). Shifted: the
  // shift margin. Absent for the realignment construction.
  std::optional<double> epsilon;
  // Kernel: 1 / Tr(P + Q^T_B).
  std::optional<double> normalization;
  std::string source;
  // Shifted witnesses remember what they were built from.
  std::optional<WitnessMethod> base_method;
  // Diagnostics of the epsilon search, kernel construction only.
  std::optional<OptResult> epsilon_search;
};

/// W_delta = N (P + Q^T_B) with P, Q the kernel projectors of delta and
/// delta^T_B, before the epsilon shift.
struct KernelOperator {
  BipartiteOperator w_delta;
  double normalization;
};

/// Throws InapplicableError when either kernel is trivial.
KernelOperator kernel_operator(const RangeProjectors& projectors, int dim_a, int dim_b);

/// W1 = W_delta - eps I with eps = min_product_expectation(W_delta).
/// The state overload uses numerical range projectors at rel_tol; the
/// catalog overload uses the stored exact bases.
Witness kernel_witness(const BipartiteOperator& delta, const std::string& name,
                       const SeeSawConfig& cfg, double rel_tol = kDefaultRankTol);
Witness kernel_witness(const CatalogEntry& entry, const SeeSawConfig& cfg);

/// I - R^*(V U^dagger) where R(rho) = U D V^dagger and R^* is the adjoint
/// rearrangement, so that Tr(raw rho) = 1 - ||R(rho)||_1.
/// Throws InapplicableError unless ||R(rho)||_1 > 1 + margin.
BipartiteOperator realignment_witness_raw(const BipartiteOperator& rho, double margin = 1e-9);

/// Hermitian part of realignment_witness_raw.
Witness realignment_witness(const BipartiteOperator& rho, const std::string& name,
                            double margin = 1e-9);

/// W - (Tr(W rho) + eps_shift) I, so that Tr(W~ rho) = -eps_shift.
/// Throws ContractViolation unless eps_shift > 0.
Witness shift_witness(const Witness& w, const BipartiteOperator& rho, double eps_shift);

/// Re Tr(W^dagger rho). When both operators are Hermitian the imaginary part
/// must be below 1e-12 (NumericalError otherwise). Dimension mismatch throws
/// ContractViolation.
double evaluate(const BipartiteOperator& w, const BipartiteOperator& rho);
double evaluate(const Witness& w, const BipartiteOperator& rho);

/// Schmidt-rank-2 minimum of the witness; negative values are evidence that
/// the witness detects some Schmidt-rank-2 state.
OptResult schmidt2_evidence(const Witness& w, const SeeSawConfig& cfg);

}  // namespace pptedge
