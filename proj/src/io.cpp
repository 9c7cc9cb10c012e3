#include "pptedge/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "pptedge/errors.hpp"

namespace pptedge {

namespace {

Json complex_pair(Complex z) { return Json::array({z.real(), z.imag()}); }

// NaN and infinities have no JSON encoding; they become null.
Json number_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Complex parse_complex(const Json& j, Eigen::Index r, Eigen::Index c) {
  const auto where = " at (" + std::to_string(r) + "," + std::to_string(c) + ")";
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError("matrix entry must be [re, im]" + where);
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

}  // namespace

Json to_json(const MatrixFile& file) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < file.matrix.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < file.matrix.cols(); ++c) row.push_back(complex_pair(file.matrix(r, c)));
    rows.push_back(std::move(row));
  }
  Json j;
  j["dims"] = Json::array({file.dim_a, file.dim_b});
  j["matrix"] = std::move(rows);
  if (!file.metadata.empty()) j["metadata"] = file.metadata;
  return j;
}

MatrixFile matrix_file_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("matrix file must be a JSON object");
  if (!j.contains("dims") || !j["dims"].is_array() || j["dims"].size() != 2 ||
      !j["dims"][0].is_number_integer() || !j["dims"][1].is_number_integer()) {
    throw ParseError("matrix file needs \"dims\": [dimA, dimB]");
  }
  MatrixFile file;
  file.dim_a = j["dims"][0].get<int>();
  file.dim_b = j["dims"][1].get<int>();
  if (file.dim_a <= 0 || file.dim_b <= 0) throw ParseError("dims must be positive");
  const Eigen::Index n = static_cast<Eigen::Index>(file.dim_a) * file.dim_b;
  if (!j.contains("matrix") || !j["matrix"].is_array() ||
      j["matrix"].size() != static_cast<std::size_t>(n)) {
    throw ParseError("\"matrix\" must have " + std::to_string(n) + " rows");
  }
  file.matrix.resize(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const Json& row = j["matrix"][static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
      throw ParseError("matrix row " + std::to_string(r) + " must have " + std::to_string(n) +
                       " entries");
    }
    for (Eigen::Index c = 0; c < n; ++c)
      file.matrix(r, c) = parse_complex(row[static_cast<std::size_t>(c)], r, c);
  }
  if (j.contains("metadata")) {
    if (!j["metadata"].is_object()) throw ParseError("\"metadata\" must be an object");
    file.metadata = j["metadata"];
  }
  return file;
}

MatrixFile read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("'" + path.string() + "': " + e.what());
  }
  return matrix_file_from_json(j);
}

void write_matrix_file(const std::filesystem::path& path, const MatrixFile& file) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << to_json(file).dump(2) << '\n';
}

MatrixFile to_matrix_file(const BipartiteOperator& op, const std::string& name) {
  MatrixFile file{op.dim_a(), op.dim_b(), op.matrix(), Json::object()};
  if (!name.empty()) file.metadata["name"] = name;
  return file;
}

MatrixFile to_matrix_file(const Witness& w) {
  MatrixFile file = to_matrix_file(w.op, w.source);
  file.metadata["method"] = to_string(w.method);
  if (w.base_method) file.metadata["base_method"] = to_string(*w.base_method);
  file.metadata["epsilon"] = w.epsilon ? number_or_null(*w.epsilon) : Json(nullptr);
  file.metadata["N"] = w.normalization ? number_or_null(*w.normalization) : Json(nullptr);
  return file;
}

Json to_json(const ComplexVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_pair(v(i)));
  return out;
}

Json to_json(const CriterionReport& r) {
  Json tolerances = Json::object();
  for (const auto& [key, value] : r.tolerances) tolerances[key] = value;
  return Json{{"criterion", r.criterion},
              {"verdict", to_string(r.verdict)},
              {"evidence", number_or_null(r.evidence)},
              {"tolerances", std::move(tolerances)}};
}

Json to_json(const OptResult& r, bool with_restarts) {
  Json j;
  j["best_value"] = number_or_null(r.best_value);
  j["best_restart"] = r.best_restart;
  if (const auto* p = std::get_if<ProductVector>(&r.argmin)) {
    j["argmin"] = Json{{"kind", "product"}, {"a", to_json(p->a())}, {"b", to_json(p->b())}};
  } else if (const auto* s = std::get_if<Schmidt2Factors>(&r.argmin)) {
    const int da = static_cast<int>(s->left.rows());
    const int db = static_cast<int>(s->right.cols());
    const RealVector coefficients = schmidt_coefficients(s->state, da, db);
    Json coeffs = Json::array();
    for (Eigen::Index i = 0; i < coefficients.size(); ++i) coeffs.push_back(coefficients(i));
    j["argmin"] = Json{{"kind", "schmidt_rank_2"},
                       {"state", to_json(s->state)},
                       {"schmidt_coefficients", std::move(coeffs)}};
  }
  j["restarts"] = r.restart_values.size();
  j["converged_restarts"] = r.converged_count();
  if (with_restarts) {
    Json values = Json::array();
    for (double v : r.restart_values) values.push_back(number_or_null(v));
    j["restart_values"] = std::move(values);
    j["iterations_used"] = r.iterations_used;
    Json flags = Json::array();
    for (bool f : r.converged_flags) flags.push_back(f);
    j["converged_flags"] = std::move(flags);
  }
  return j;
}

Json to_json(const EdgeCertificate& c) {
  return Json{{"state", c.state_name},
              {"verdict", to_string(c.verdict)},
              {"objective_min", number_or_null(c.objective_min)},
              {"thresholds", Json{{"edge", kEdgeThreshold}, {"not_edge", kNotEdgeThreshold}}},
              {"witness_vector",
               Json{{"a", to_json(c.witness_vector.a())}, {"b", to_json(c.witness_vector.b())}}},
              {"range_residual", number_or_null(c.range_residual)},
              {"pt_range_residual", number_or_null(c.pt_range_residual)},
              {"optimization", to_json(c.optimization, false)}};
}

Json to_json(const SeeSawConfig& cfg) {
  return Json{{"restarts", cfg.restarts},
              {"max_iter", cfg.max_iter},
              {"conv_tol", cfg.conv_tol},
              {"seed", cfg.seed}};
}

}  // namespace pptedge
