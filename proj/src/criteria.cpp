#include "pptedge/criteria.hpp"

#include <cmath>
#include <string>

#include "pptedge/errors.hpp"

namespace pptedge {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Violated: return "violated";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

const char* to_string(EdgeVerdict v) {
  switch (v) {
    case EdgeVerdict::EdgeHeuristic: return "edge (heuristic)";
    case EdgeVerdict::NotEdge: return "not edge";
    case EdgeVerdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

CriterionReport is_ppt(const BipartiteOperator& rho, double tol) {
  const BipartiteOperator pt = partial_transpose(rho);
  const double smallest = hermitian_eig(pt.matrix()).eigenvalues(0);
  return {"ppt", smallest >= -tol ? Verdict::Pass : Verdict::Violated, smallest, {{"tol", tol}}};
}

CriterionReport realignment_criterion(const BipartiteOperator& rho, double margin) {
  const double norm = trace_norm(realign(rho));
  return {"realignment", norm > 1.0 + margin ? Verdict::Violated : Verdict::Pass, norm,
          {{"margin", margin}}};
}

RangeProjectors RangeProjectors::from_state(const BipartiteOperator& rho, double rel_tol) {
  return {range_projector(rho.matrix(), rel_tol),
          range_projector(partial_transpose(rho).matrix(), rel_tol)};
}

RangeProjectors RangeProjectors::from_entry(const CatalogEntry& entry, double rel_tol) {
  return {range_projector(entry, RangeKind::State, rel_tol),
          range_projector(entry, RangeKind::PartialTranspose, rel_tol)};
}

double edge_objective(const RangeProjectors& projectors, const ComplexVector& a,
                      const ComplexVector& b) {
  const ComplexVector v = tensor(a, b);
  const ComplexVector w = tensor(a, ComplexVector(b.conjugate()));
  const Eigen::Index n = v.size();
  if (projectors.range.rows() != n || projectors.pt_range.rows() != n) {
    throw ContractViolation("edge_objective: projector dimension does not match vectors");
  }
  const ComplexVector rv = v - projectors.range * v;
  const ComplexVector rw = w - projectors.pt_range * w;
  return rv.squaredNorm() + rw.squaredNorm();
}

double edge_objective(const BipartiteOperator& rho, const ComplexVector& a,
                      const ComplexVector& b, double rel_tol) {
  return edge_objective(RangeProjectors::from_state(rho, rel_tol), a, b);
}

ProductQuadraticForm edge_form(const RangeProjectors& projectors, int dim_a, int dim_b) {
  const Eigen::Index n = static_cast<Eigen::Index>(dim_a) * dim_b;
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  return expectation_form(BipartiteOperator(dim_a, dim_b, id - projectors.range)) +
         partner_expectation_form(BipartiteOperator(dim_a, dim_b, id - projectors.pt_range));
}

EdgeCertificate certify_edge(const BipartiteOperator& rho, const std::string& name,
                             const RangeProjectors& projectors, const SeeSawConfig& cfg,
                             double ppt_tol) {
  const CriterionReport ppt = is_ppt(rho, ppt_tol);
  if (ppt.verdict != Verdict::Pass) {
    throw InapplicableError("certify_edge: state '" + name +
                            "' is not PPT (min partial-transpose eigenvalue " +
                            std::to_string(ppt.evidence) + ")");
  }
  OptResult opt = min_generic_quadratic(edge_form(projectors, rho.dim_a(), rho.dim_b()), cfg);
  const ProductVector best = opt.product_argmin();
  const double range_res = (tensor(best) - projectors.range * tensor(best)).norm();
  const double pt_res =
      (conjugate_partner(best) - projectors.pt_range * conjugate_partner(best)).norm();

  EdgeVerdict verdict = EdgeVerdict::Inconclusive;
  if (opt.best_value > kEdgeThreshold) verdict = EdgeVerdict::EdgeHeuristic;
  if (opt.best_value < kNotEdgeThreshold) verdict = EdgeVerdict::NotEdge;

  return EdgeCertificate{
      .state_name = name,
      .objective_min = opt.best_value,
      .verdict = verdict,
      .optimization = std::move(opt),
      .witness_vector = best,
      .range_residual = range_res,
      .pt_range_residual = pt_res,
  };
}

EdgeCertificate certify_edge(const CatalogEntry& entry, const SeeSawConfig& cfg,
                             double ppt_tol) {
  return certify_edge(entry.state, entry.name, RangeProjectors::from_entry(entry), cfg, ppt_tol);
}

double range_membership(const ComplexVector& v, const CatalogEntry& entry, RangeKind which) {
  return residual_norm(v, range_projector(entry, which));
}

}  // namespace pptedge
