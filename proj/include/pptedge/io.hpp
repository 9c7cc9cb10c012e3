#pragma once

// JSON encodings.
//
// Matrix file:
//   {"dims": [dA, dB],
//    "matrix": [[[re, im], ...], ...],      row-major, composite index
//    "metadata": {"name": ..., "method": ..., "epsilon": ..., "N": ...}}
//
// Doubles are written in shortest round-trip form, so write followed by read
// reproduces every entry bit for bit.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "pptedge/criteria.hpp"
#include "pptedge/witness.hpp"

namespace pptedge {

using Json = nlohmann::ordered_json;

struct MatrixFile {
  int dim_a = 0;
  int dim_b = 0;
  ComplexMatrix matrix;
  Json metadata = Json::object();

  BipartiteOperator as_operator() const { return BipartiteOperator(dim_a, dim_b, matrix); }
};

Json to_json(const MatrixFile& file);
/// Throws ParseError on any schema violation.
MatrixFile matrix_file_from_json(const Json& j);

MatrixFile read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const MatrixFile& file);

MatrixFile to_matrix_file(const BipartiteOperator& op, const std::string& name);
/// Metadata block carries name, method, epsilon, N (and base_method for
/// shifted witnesses).
MatrixFile to_matrix_file(const Witness& w);

Json to_json(const ComplexVector& v);
Json to_json(const CriterionReport& r);
/// Restart diagnostics are included when `with_restarts` is set.
Json to_json(const OptResult& r, bool with_restarts = true);
Json to_json(const EdgeCertificate& c);
Json to_json(const SeeSawConfig& cfg);

}  // namespace pptedge
