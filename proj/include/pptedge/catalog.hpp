#pragma once

// Exact constructors for the two PPT entangled edge states on 3x3, their
// range bases, the product-vector families found in those ranges, and a
// small set of reference states used as sanity checks.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pptedge/bipartite.hpp"
#include "pptedge/rational.hpp"

namespace pptedge {

enum class RangeKind { State, PartialTranspose };

struct CatalogEntry {
  std::string name;
  std::string description;
  BipartiteOperator state;
  // state == exact_numerator / denominator entrywise. Absent for states
  // built from floating-point data.
  std::optional<RationalMatrix> exact_numerator;
  std::int64_t denominator = 1;
  std::size_t expected_rank = 0;
  std::size_t expected_pt_rank = 0;
  bool expected_ppt = true;
  // Spanning sets with integer entries; empty when the range is not stored
  // explicitly (then it is taken from the numerical spectrum).
  std::vector<ComplexVector> range_basis;
  std::vector<ComplexVector> pt_range_basis;

  const std::vector<ComplexVector>& basis(RangeKind which) const {
    return which == RangeKind::State ? range_basis : pt_range_basis;
  }
  /// Exact numerator of the partial transpose, when the state is exact.
  std::optional<RationalMatrix> exact_pt_numerator() const;
};

/// The (5,5) edge state. Range vectors take the form
/// (0, A, -E-F, C, 0, D, D, E, F); partial-transpose range vectors
/// (0, A, B, C, 0, D, E, A+2B, -A-2B+C+D+E).
CatalogEntry rho_5_5();

/// The (6,6) edge state. Range vectors (A, B, C, D, E, F, C+E, -F, B+2D-A);
/// partial-transpose range vectors (A, B, C, D, -A, E, E-C, D, F).
CatalogEntry rho_6_6();

CatalogEntry max_mixed();
CatalogEntry max_entangled();
/// Mixture of 20 random product states with a fixed seed.
CatalogEntry separable_sample();

std::vector<CatalogEntry> reference_states();

/// All names accepted by catalog_entry(), in listing order.
std::vector<std::string> catalog_names();

/// Throws LookupError on an unknown name.
CatalogEntry catalog_entry(const std::string& name);

/// Orthogonal projector onto range(state) or range(state^T_B). Uses the
/// stored basis when present, otherwise the numerical spectrum at rel_tol.
ComplexMatrix range_projector(const CatalogEntry& entry, RangeKind which,
                              double rel_tol = kDefaultRankTol);

/// A parametrized family of product vectors lying in a fixed range.
struct ProductFamily {
  std::string label;
  std::string source;     // catalog entry name
  RangeKind range;        // which range the family lies in
  std::size_t arity;      // number of complex parameters
  // Returns nullopt on degenerate parameters (zero factor or excluded set).
  std::function<std::optional<ProductVector>(std::span<const Complex>)> make;
};

/// Families for `rho_5_5`, `rho_5_5_pt`, `rho_6_6`, `rho_6_6_pt`. The last
/// two are empty: no product vector of those ranges has its partner in the
/// opposite range, and membership is tested through the linear constraints.
/// Throws LookupError on any other name.
std::vector<ProductFamily> range_families(const std::string& name);

/// `count` members of a family: parameters first walk a fixed grid of
/// small Gaussian integers, then continue with seeded complex Gaussians.
std::vector<ProductVector> sample_family(const ProductFamily& family, std::size_t count,
                                         std::uint64_t seed);

}  // namespace pptedge
