#include "pptedge/catalog.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "pptedge/errors.hpp"
#include "pptedge/random.hpp"

namespace pptedge {

namespace {

constexpr int kDim = 3;
constexpr std::size_t kSeparableSampleSize = 20;
constexpr std::uint64_t kSeparableSampleSeed = 20051206;

// Sparse integer vector on C^9, {index, coefficient} pairs.
ComplexVector basis_vector(std::initializer_list<std::pair<int, int>> terms) {
  ComplexVector v = ComplexVector::Zero(kDim * kDim);
  for (const auto& [index, coefficient] : terms) v(index) += static_cast<double>(coefficient);
  return v;
}

ComplexMatrix divide(const RationalMatrix& numerator, std::int64_t denominator) {
  ComplexMatrix m(static_cast<Eigen::Index>(numerator.rows()),
                  static_cast<Eigen::Index>(numerator.cols()));
  const auto den = static_cast<double>(denominator);
  for (std::size_t r = 0; r < numerator.rows(); ++r)
    for (std::size_t c = 0; c < numerator.cols(); ++c) {
      // Numerators are integers in every exact entry.
      const auto num = numerator(r, c).convert_to<double>();
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = Complex(num / den, 0.0);
    }
  return m;
}

CatalogEntry exact_entry(std::string name, std::string description, RationalMatrix numerator,
                         std::int64_t denominator, std::size_t rank, std::size_t pt_rank,
                         bool ppt) {
  BipartiteOperator state(kDim, kDim, divide(numerator, denominator));
  CatalogEntry e{std::move(name), std::move(description), std::move(state),
                 std::move(numerator), denominator, rank, pt_rank, ppt, {}, {}};
  return e;
}

ComplexVector vec3(Complex x, Complex y, Complex z) {
  ComplexVector v(3);
  v << x, y, z;
  return v;
}

std::optional<ProductVector> product_or_null(ComplexVector a, ComplexVector b) {
  if (a.norm() < 1e-12 || b.norm() < 1e-12) return std::nullopt;
  return ProductVector(std::move(a), std::move(b));
}

}  // namespace

std::optional<RationalMatrix> CatalogEntry::exact_pt_numerator() const {
  if (!exact_numerator) return std::nullopt;
  return partial_transpose(*exact_numerator, state.dim_a(), state.dim_b());
}

CatalogEntry rho_5_5() {
  auto numerator = RationalMatrix::from_integers(9, 9, {
      0, 0,  0,  0, 0,  0,  0,  0,  0,
      0, 2,  -1, 0, 0,  0,  0,  0,  1,
      0, -1, 1,  0, 0,  0,  0,  0,  -1,
      0, 0,  0,  3, 0,  -1, -1, 0,  0,
      0, 0,  0,  0, 0,  0,  0,  0,  0,
      0, 0,  0,  -1, 0, 1,  1,  0,  0,
      0, 0,  0,  -1, 0, 1,  1,  0,  0,
      0, 0,  0,  0, 0,  0,  0,  2,  -2,
      0, 1,  -1, 0, 0,  0,  0,  -2, 3,
  });
  CatalogEntry e = exact_entry("rho_5_5", "PPT entangled edge state of ranks (5,5)",
                               std::move(numerator), 13, 5, 5, true);
  // (0, A, -E-F, C, 0, D, D, E, F)
  e.range_basis = {
      basis_vector({{1, 1}}),
      basis_vector({{3, 1}}),
      basis_vector({{5, 1}, {6, 1}}),
      basis_vector({{2, -1}, {7, 1}}),
      basis_vector({{2, -1}, {8, 1}}),
  };
  // (0, A, B, C, 0, D, E, A+2B, -A-2B+C+D+E)
  e.pt_range_basis = {
      basis_vector({{1, 1}, {7, 1}, {8, -1}}),
      basis_vector({{2, 1}, {7, 2}, {8, -2}}),
      basis_vector({{3, 1}, {8, 1}}),
      basis_vector({{5, 1}, {8, 1}}),
      basis_vector({{6, 1}, {8, 1}}),
  };
  return e;
}

CatalogEntry rho_6_6() {
  auto numerator = RationalMatrix::from_integers(9, 9, {
      1,  0,  0, 0,  0, 0,  0, 0,  -1,
      0,  2,  0, -1, 0, 0,  0, 0,  0,
      0,  0,  1, 0,  0, 0,  1, 0,  0,
      0,  -1, 0, 1,  0, 0,  0, 0,  1,
      0,  0,  0, 0,  1, 0,  1, 0,  0,
      0,  0,  0, 0,  0, 1,  0, -1, 0,
      0,  0,  1, 0,  1, 0,  2, 0,  0,
      0,  0,  0, 0,  0, -1, 0, 1,  0,
      -1, 0,  0, 1,  0, 0,  0, 0,  3,
  });
  CatalogEntry e = exact_entry("rho_6_6", "PPT entangled edge state of ranks (6,6)",
                               std::move(numerator), 13, 6, 6, true);
  // (A, B, C, D, E, F, C+E, -F, B+2D-A)
  e.range_basis = {
      basis_vector({{0, 1}, {8, -1}}),
      basis_vector({{1, 1}, {8, 1}}),
      basis_vector({{2, 1}, {6, 1}}),
      basis_vector({{3, 1}, {8, 2}}),
      basis_vector({{4, 1}, {6, 1}}),
      basis_vector({{5, 1}, {7, -1}}),
  };
  // (A, B, C, D, -A, E, E-C, D, F)
  e.pt_range_basis = {
      basis_vector({{0, 1}, {4, -1}}),
      basis_vector({{1, 1}}),
      basis_vector({{2, 1}, {6, -1}}),
      basis_vector({{3, 1}, {7, 1}}),
      basis_vector({{5, 1}, {6, 1}}),
      basis_vector({{8, 1}}),
  };
  return e;
}

CatalogEntry max_mixed() {
  CatalogEntry e = exact_entry("max_mixed", "maximally mixed state I/9",
                               RationalMatrix::identity(9), 9, 9, 9, true);
  for (int i = 0; i < 9; ++i) {
    e.range_basis.push_back(basis_vector({{i, 1}}));
    e.pt_range_basis.push_back(basis_vector({{i, 1}}));
  }
  return e;
}

CatalogEntry max_entangled() {
  RationalMatrix numerator(9, 9);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) numerator(i * 4, j * 4) = 1;
  // Partial transpose is SWAP/3: full rank, eigenvalues +-1/3.
  CatalogEntry e = exact_entry("max_entangled", "maximally entangled projector |phi+><phi+|",
                               std::move(numerator), 3, 1, 9, false);
  e.range_basis = {basis_vector({{0, 1}, {4, 1}, {8, 1}})};
  for (int i = 0; i < 9; ++i) e.pt_range_basis.push_back(basis_vector({{i, 1}}));
  return e;
}

CatalogEntry separable_sample() {
  Rng rng(kSeparableSampleSeed);
  std::uniform_real_distribution<double> uniform(0.1, 1.0);
  ComplexMatrix rho = ComplexMatrix::Zero(9, 9);
  double total = 0.0;
  for (std::size_t n = 0; n < kSeparableSampleSize; ++n) {
    const ComplexVector a = random_unit_vector(kDim, rng);
    const ComplexVector b = random_unit_vector(kDim, rng);
    const double weight = uniform(rng);
    const ComplexVector ab = tensor(a, b);
    rho += weight * ab * ab.adjoint();
    total += weight;
  }
  rho /= total;
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return CatalogEntry{"separable_sample",
                      "seeded mixture of 20 random product states",
                      BipartiteOperator(kDim, kDim, std::move(rho)),
                      std::nullopt,
                      1,
                      9,
                      9,
                      true,
                      {},
                      {}};
}

std::vector<CatalogEntry> reference_states() {
  return {max_mixed(), max_entangled(), separable_sample()};
}

std::vector<std::string> catalog_names() {
  return {"rho_5_5", "rho_6_6", "max_mixed", "max_entangled", "separable_sample"};
}

CatalogEntry catalog_entry(const std::string& name) {
  if (name == "rho_5_5") return rho_5_5();
  if (name == "rho_6_6") return rho_6_6();
  if (name == "max_mixed") return max_mixed();
  if (name == "max_entangled") return max_entangled();
  if (name == "separable_sample") return separable_sample();
  throw LookupError("unknown catalog entry '" + name + "'");
}

ComplexMatrix range_projector(const CatalogEntry& entry, RangeKind which, double rel_tol) {
  const auto& basis = entry.basis(which);
  if (!basis.empty()) {
    ComplexMatrix columns(entry.state.dim(), static_cast<Eigen::Index>(basis.size()));
    for (std::size_t c = 0; c < basis.size(); ++c)
      columns.col(static_cast<Eigen::Index>(c)) = basis[c];
    return span_projector(columns);
  }
  if (which == RangeKind::State) return range_projector(entry.state.matrix(), rel_tol);
  return range_projector(partial_transpose(entry.state).matrix(), rel_tol);
}

std::vector<ProductFamily> range_families(const std::string& name) {
  using Params = std::span<const Complex>;
  if (name == "rho_5_5") {
    return {
        {"(1,0,-z/(y+z)) x (0,y,z), y != -z", "rho_5_5", RangeKind::State, 2,
         [](Params p) -> std::optional<ProductVector> {
           const Complex y = p[0], z = p[1];
           if (std::abs(y + z) < 1e-12) return std::nullopt;
           return product_or_null(vec3(1.0, 0.0, -z / (y + z)), vec3(0.0, y, z));
         }},
        {"(0,0,v) x (0,y,-y)", "rho_5_5", RangeKind::State, 2,
         [](Params p) {
           const Complex v = p[0], y = p[1];
           return product_or_null(vec3(0.0, 0.0, v), vec3(0.0, y, -y));
         }},
        {"(0,t,0) x (x,0,0)", "rho_5_5", RangeKind::State, 2,
         [](Params p) {
           const Complex t = p[0], x = p[1];
           return product_or_null(vec3(0.0, t, 0.0), vec3(x, 0.0, 0.0));
         }},
    };
  }
  if (name == "rho_5_5_pt") {
    return {
        {"(0,t,t) x (0,0,z)", "rho_5_5", RangeKind::PartialTranspose, 2,
         [](Params p) {
           const Complex t = p[0], z = p[1];
           return product_or_null(vec3(0.0, t, t), vec3(0.0, 0.0, z));
         }},
        {"(s,0,0) x (0,-2z,z)", "rho_5_5", RangeKind::PartialTranspose, 2,
         [](Params p) {
           const Complex s = p[0], z = p[1];
           return product_or_null(vec3(s, 0.0, 0.0), vec3(0.0, -2.0 * z, z));
         }},
        {"(-s,0,s) x (0,y,-y)", "rho_5_5", RangeKind::PartialTranspose, 2,
         [](Params p) {
           const Complex s = p[0], y = p[1];
           return product_or_null(vec3(-s, 0.0, s), vec3(0.0, y, -y));
         }},
        // Second factor entry of the first party is t, third is v.
        {"(0,t,v) x (x,0,z), (v-t)z = (v+t)x", "rho_5_5", RangeKind::PartialTranspose, 3,
         [](Params p) -> std::optional<ProductVector> {
           const Complex t = p[0], v = p[1], x = p[2];
           if (std::abs(v - t) < 1e-12) return std::nullopt;
           const Complex z = (v + t) / (v - t) * x;
           return product_or_null(vec3(0.0, t, v), vec3(x, 0.0, z));
         }},
    };
  }
  if (name == "rho_6_6" || name == "rho_6_6_pt") return {};
  throw LookupError("unknown family set '" + name + "'");
}

std::vector<ProductVector> sample_family(const ProductFamily& family, std::size_t count,
                                         std::uint64_t seed) {
  static const std::array<Complex, 6> grid = {Complex(1, 0), Complex(-1, 0), Complex(2, 0),
                                              Complex(0, 1), Complex(1, 1),  Complex(1, -2)};
  std::vector<ProductVector> out;
  out.reserve(count);
  std::vector<Complex> params(family.arity);

  // Grid tuples in odometer order, at most half of the requested count.
  const std::size_t grid_budget = count / 2;
  std::vector<std::size_t> digits(family.arity, 0);
  bool grid_done = family.arity == 0;
  while (!grid_done && out.size() < grid_budget) {
    for (std::size_t k = 0; k < family.arity; ++k) params[k] = grid[digits[k]];
    if (auto pv = family.make(params)) out.push_back(std::move(*pv));
    std::size_t k = 0;
    while (k < family.arity && ++digits[k] == grid.size()) digits[k++] = 0;
    grid_done = k == family.arity;
  }

  Rng rng = restart_stream(seed, 0);
  std::size_t attempts = 0;
  while (out.size() < count && attempts < 100 * count + 100) {
    ++attempts;
    const ComplexMatrix draw = complex_gaussian(static_cast<Eigen::Index>(family.arity), 1, rng);
    for (std::size_t k = 0; k < family.arity; ++k) params[k] = draw(static_cast<Eigen::Index>(k));
    if (auto pv = family.make(params)) out.push_back(std::move(*pv));
  }
  return out;
}

}  // namespace pptedge
