#pragma once

// End-to-end analysis of one state: ranks, PPT and realignment checks, edge
// certification, kernel and realignment witnesses with their shifted
// variants, and Schmidt-rank-2 evidence for every witness.

#include <string>

#include "pptedge/io.hpp"

namespace pptedge {

struct AnalysisOptions {
  SeeSawConfig cfg;
  double tol_eig = kDefaultRankTol;  // relative rank threshold
  double tol_pos = 1e-12;            // PSD / PPT slack
  double shift = 1e-6;               // margin of the shifted witnesses
};

/// Catalog name, or path to a matrix file holding a density matrix.
/// Throws ParseError when the name is unknown and no readable file exists,
/// InvalidStateError when the matrix is not a density matrix.
CatalogEntry load_input(const std::string& name_or_path, double tol_pos = 1e-12);

/// Full report. Stages that do not apply carry a "skipped" reason.
Json analyze(const CatalogEntry& entry, const AnalysisOptions& opts);

/// Summary of one witness against `rho`: method tags, epsilon, N, Tr(W rho),
/// product-state minimum, and the Schmidt-rank-2 minimum.
Json witness_summary(const Witness& w, const BipartiteOperator& rho, const SeeSawConfig& cfg);

}  // namespace pptedge
