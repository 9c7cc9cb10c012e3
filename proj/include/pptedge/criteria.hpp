#pragma once

#include <map>
#include <string>

#include "pptedge/catalog.hpp"
#include "pptedge/optimize.hpp"

namespace pptedge {

enum class Verdict { Pass, Violated, Inconclusive };

const char* to_string(Verdict v);

struct CriterionReport {
  std::string criterion;
  Verdict verdict = Verdict::Inconclusive;
  double evidence = 0.0;
  std::map<std::string, double> tolerances;
};

/// Pass iff the smallest eigenvalue of rho^T_B is >= -tol; that eigenvalue
/// is the evidence.
CriterionReport is_ppt(const BipartiteOperator& rho, double tol = 1e-12);

/// Evidence is ||R(rho)||_1; Violated (entanglement detected) iff it
/// exceeds 1 + margin.
CriterionReport realignment_criterion(const BipartiteOperator& rho, double margin = 1e-9);

/// Projectors onto range(rho) and range(rho^T_B).
struct RangeProjectors {
  ComplexMatrix range;
  ComplexMatrix pt_range;

  static RangeProjectors from_state(const BipartiteOperator& rho,
                                    double rel_tol = kDefaultRankTol);
  /// Built from the stored exact bases when the entry has them.
  static RangeProjectors from_entry(const CatalogEntry& entry, double rel_tol = kDefaultRankTol);
};

/// ||(I - P_R) a(x)b||^2 + ||(I - P_R') a(x)b*||^2 for unit a, b. Zero iff
/// a(x)b lies in range(rho) and a(x)b* in range(rho^T_B).
double edge_objective(const RangeProjectors& projectors, const ComplexVector& a,
                      const ComplexVector& b);
double edge_objective(const BipartiteOperator& rho, const ComplexVector& a,
                      const ComplexVector& b, double rel_tol = kDefaultRankTol);

/// The edge objective as a see-saw form.
ProductQuadraticForm edge_form(const RangeProjectors& projectors, int dim_a, int dim_b);

enum class EdgeVerdict { EdgeHeuristic, NotEdge, Inconclusive };

const char* to_string(EdgeVerdict v);

inline constexpr double kEdgeThreshold = 1e-6;
inline constexpr double kNotEdgeThreshold = 1e-10;

struct EdgeCertificate {
  std::string state_name;
  double objective_min = 0.0;
  EdgeVerdict verdict = EdgeVerdict::Inconclusive;
  OptResult optimization;
  // Best product vector found and its two range residuals (norms, not
  // squares); objective_min == range_residual^2 + pt_range_residual^2.
  ProductVector witness_vector;
  double range_residual = 0.0;
  double pt_range_residual = 0.0;
};

/// Minimizes the edge objective with multistart see-saw. The verdict is
/// EdgeHeuristic when the minimum stays above 1e-6, NotEdge when some
/// restart reaches below 1e-10, Inconclusive in between.
/// Throws InapplicableError unless rho is PPT within ppt_tol.
EdgeCertificate certify_edge(const BipartiteOperator& rho, const std::string& name,
                             const RangeProjectors& projectors, const SeeSawConfig& cfg,
                             double ppt_tol = 1e-12);
EdgeCertificate certify_edge(const CatalogEntry& entry, const SeeSawConfig& cfg,
                             double ppt_tol = 1e-12);

/// residual_norm of v against the stored range of `entry` (or its
/// partial transpose).
double range_membership(const ComplexVector& v, const CatalogEntry& entry, RangeKind which);

}  // namespace pptedge
