#include "pptedge/analysis.hpp"

#include <filesystem>
#include <optional>
#include <utility>
#include <vector>

#include "pptedge/errors.hpp"

namespace pptedge {

namespace {

Json skipped(std::string reason) { return Json{{"skipped", std::move(reason)}}; }

Json optional_number(const std::optional<double>& x) {
  return x && std::isfinite(*x) ? Json(*x) : Json(nullptr);
}

}  // namespace

CatalogEntry load_input(const std::string& name_or_path, double tol_pos) {
  for (const auto& name : catalog_names())
    if (name == name_or_path) return catalog_entry(name);

  const std::filesystem::path path(name_or_path);
  if (!std::filesystem::is_regular_file(path)) {
    throw ParseError("'" + name_or_path + "' is neither a catalog name nor a readable file");
  }
  const MatrixFile file = read_matrix_file(path);
  BipartiteOperator rho = file.as_operator();
  require_density_matrix(rho, tol_pos);

  std::string name = path.stem().string();
  if (file.metadata.contains("name") && file.metadata["name"].is_string())
    name = file.metadata["name"].get<std::string>();

  CatalogEntry entry{name, "loaded from " + path.string(), std::move(rho), std::nullopt, 1, 0, 0,
                     true, {}, {}};
  entry.expected_rank = numeric_rank(entry.state.matrix());
  entry.expected_ppt = is_ppt(entry.state, tol_pos).verdict == Verdict::Pass;
  entry.expected_pt_rank =
      entry.expected_ppt ? numeric_rank(partial_transpose(entry.state).matrix()) : 0;
  return entry;
}

Json witness_summary(const Witness& w, const BipartiteOperator& rho, const SeeSawConfig& cfg) {
  const OptResult product = min_product_expectation(w.op, cfg);
  const OptResult s2 = schmidt2_evidence(w, cfg);
  const auto& factors = s2.schmidt2_argmin();
  const RealVector coefficients =
      schmidt_coefficients(factors.state, w.op.dim_a(), w.op.dim_b());
  Json coeffs = Json::array();
  for (Eigen::Index i = 0; i < coefficients.size(); ++i) coeffs.push_back(coefficients(i));

  Json j;
  j["method"] = to_string(w.method);
  j["base_method"] = w.base_method ? Json(to_string(*w.base_method)) : Json(nullptr);
  j["epsilon"] = optional_number(w.epsilon);
  j["N"] = optional_number(w.normalization);
  j["trace_w_rho"] = evaluate(w, rho);
  j["product_min"] = product.best_value;
  j["schmidt2_best"] = s2.best_value;
  j["schmidt2_coefficients"] = std::move(coeffs);
  j["schmidt2_negative"] = s2.best_value < 0.0;
  return j;
}

Json analyze(const CatalogEntry& entry, const AnalysisOptions& opts) {
  opts.cfg.validate();
  const BipartiteOperator& rho = entry.state;

  Json report;
  report["tool"] = "pptedge";
  report["version"] = PPTEDGE_VERSION;
  report["state"] = entry.name;
  report["dims"] = Json::array({rho.dim_a(), rho.dim_b()});
  report["seed"] = opts.cfg.seed;
  report["optimizer"] = to_json(opts.cfg);
  report["tolerances"] = Json{{"tol_eig", opts.tol_eig}, {"tol_pos", opts.tol_pos},
                              {"shift", opts.shift}};

  const CriterionReport ppt = is_ppt(rho, opts.tol_pos);
  const bool is_ppt_state = ppt.verdict == Verdict::Pass;

  Json ranks;
  ranks["numeric"] = numeric_rank(rho.matrix(), opts.tol_eig);
  ranks["numeric_pt"] =
      is_ppt_state ? Json(numeric_rank(partial_transpose(rho).matrix(), opts.tol_eig))
                   : Json(nullptr);
  ranks["exact"] = entry.exact_numerator ? Json(exact_rank(*entry.exact_numerator)) : Json(nullptr);
  if (const auto pt = entry.exact_pt_numerator()) {
    ranks["exact_pt"] = exact_rank(*pt);
  } else {
    ranks["exact_pt"] = nullptr;
  }
  report["ranks"] = std::move(ranks);
  report["ppt"] = to_json(ppt);

  if (rho.dim_a() == rho.dim_b()) {
    report["realignment"] = to_json(realignment_criterion(rho));
  } else {
    report["realignment"] = skipped("realignment requires equal local dimensions");
  }

  if (is_ppt_state) {
    report["edge"] =
        to_json(certify_edge(rho, entry.name, RangeProjectors::from_entry(entry, opts.tol_eig),
                             opts.cfg, opts.tol_pos));
  } else {
    report["edge"] = skipped("state is not PPT");
  }

  Json witnesses = Json::array();
  Json skipped_witnesses = Json::array();
  if (!is_ppt_state) {
    skipped_witnesses.push_back(
        Json{{"method", "all"},
             {"reason", "state is not PPT; witness constructions target PPT entangled states"}});
  } else {
    std::vector<Witness> built;
    try {
      built.push_back(entry.range_basis.empty()
                          ? kernel_witness(rho, entry.name, opts.cfg, opts.tol_eig)
                          : kernel_witness(entry, opts.cfg));
    } catch (const InapplicableError& e) {
      skipped_witnesses.push_back(Json{{"method", "kernel"}, {"reason", e.what()}});
    }
    if (rho.dim_a() == rho.dim_b()) {
      try {
        built.push_back(realignment_witness(rho, entry.name));
      } catch (const InapplicableError& e) {
        skipped_witnesses.push_back(Json{{"method", "realign"}, {"reason", e.what()}});
      }
    } else {
      skipped_witnesses.push_back(
          Json{{"method", "realign"}, {"reason", "realignment requires equal local dimensions"}});
    }
    const std::size_t base_count = built.size();
    for (std::size_t i = 0; i < base_count; ++i)
      built.push_back(shift_witness(built[i], rho, opts.shift));
    for (const auto& w : built) witnesses.push_back(witness_summary(w, rho, opts.cfg));
  }
  report["witness_count"] = witnesses.size();
  report["witnesses"] = std::move(witnesses);
  report["witnesses_skipped"] = std::move(skipped_witnesses);
  return report;
}

}  // namespace pptedge
