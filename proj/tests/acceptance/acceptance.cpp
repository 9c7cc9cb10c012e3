// Acceptance suite: one PASS/FAIL line per criterion, with the measured
// evidence and wall time. Exit status is the number of failed criteria.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pptedge/catalog.hpp"
#include "pptedge/criteria.hpp"
#include "pptedge/io.hpp"
#include "pptedge/random.hpp"
#include "pptedge/witness.hpp"

using namespace pptedge;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double time_limit_s,
               const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail << " [exception: " << e.what() << "]";
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (time_limit_s > 0 && seconds > time_limit_s) {
    out.pass = false;
    out.detail << " [runtime " << seconds << " s > " << time_limit_s << " s]";
  }
  if (!out.pass) ++failures;
  std::printf("%s  %2d  %-28s %7.2fs %s\n", out.pass ? "PASS" : "FAIL", id, title.c_str(), seconds,
              out.detail.str().c_str());
  std::fflush(stdout);
}

SeeSawConfig config(int restarts, std::uint64_t seed) {
  SeeSawConfig cfg;
  cfg.restarts = restarts;
  cfg.seed = seed;
  return cfg;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

ComplexMatrix constraint_projector(const std::vector<std::array<int, 9>>& rows) {
  ComplexMatrix c(static_cast<Eigen::Index>(rows.size()), 9);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t j = 0; j < 9; ++j)
      c(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j)) = rows[r][j];
  return ComplexMatrix::Identity(9, 9) - span_projector(c.adjoint());
}

double containment_gap(const ComplexMatrix& p, const ComplexMatrix& q) {
  return std::max((p * q - q).cwiseAbs().maxCoeff(), (q * p - p).cwiseAbs().maxCoeff());
}

}  // namespace

int main() {
  const CatalogEntry r55 = rho_5_5();
  const CatalogEntry r66 = rho_6_6();
  const std::array<const CatalogEntry*, 2> states{&r55, &r66};

  std::printf("pptedge acceptance suite\n");

  criterion(1, "exact ranks", 1.0, [&](Outcome& o) {
    const std::size_t a = exact_rank(*r55.exact_numerator);
    const std::size_t b = exact_rank(*r55.exact_pt_numerator());
    const std::size_t c = exact_rank(*r66.exact_numerator);
    const std::size_t d = exact_rank(*r66.exact_pt_numerator());
    o.detail << "rho55 (" << a << "," << b << ") rho66 (" << c << "," << d << ")";
    o.require(a == 5 && b == 5, "rho_5_5 ranks (5,5)");
    o.require(c == 6 && d == 6, "rho_6_6 ranks (6,6)");
  });

  criterion(2, "reference partial transposes", 1.0, [&](Outcome& o) {
    const bool ok55 =
        partial_transpose(*r55.exact_numerator, 3, 3) == fixtures::rho_5_5_pt_numerator();
    const bool ok66 =
        partial_transpose(*r66.exact_numerator, 3, 3) == fixtures::rho_6_6_pt_numerator();
    o.detail << "exact integer match: " << (ok55 ? "yes" : "no") << "/" << (ok66 ? "yes" : "no");
    o.require(ok55, "rho_5_5^T_B");
    o.require(ok66, "rho_6_6^T_B");
  });

  criterion(3, "PPT", 0, [&](Outcome& o) {
    double worst = 1.0;
    for (const auto* e : states) {
      worst = std::min(worst, hermitian_eig(e->state.matrix()).eigenvalues(0));
      worst = std::min(worst, hermitian_eig(partial_transpose(e->state).matrix()).eigenvalues(0));
    }
    o.detail << "min eigenvalue over states and PTs " << sci(worst);
    o.require(worst >= -1e-12, "min eigenvalue >= -1e-12");
  });

  criterion(4, "realignment violation", 1.0, [&](Outcome& o) {
    const std::array<double, 2> pinned{fixtures::kRealignNorm55, fixtures::kRealignNorm66};
    for (std::size_t i = 0; i < 2; ++i) {
      const double norm = realignment_criterion(states[i]->state).evidence;
      const double independent = oracle::trace_norm(realign(states[i]->state));
      o.detail << states[i]->name << " " << sci(norm) << " ";
      o.require(norm > 1.0 + 1e-6, states[i]->name + " norm > 1 + 1e-6");
      o.require(std::abs(norm - pinned[i]) < 1e-9, states[i]->name + " pinned value");
      o.require(std::abs(norm - independent) < 1e-9, states[i]->name + " oracle agreement");
    }
  });

  criterion(5, "range fixtures", 0, [&](Outcome& o) {
    double worst = 0.0;
    std::size_t checked = 0;
    for (const std::string set : {"rho_5_5", "rho_5_5_pt"}) {
      for (const auto& fam : range_families(set)) {
        const auto samples = sample_family(fam, 100, 5);
        o.require(samples.size() == 100, fam.label + " sample count");
        for (const auto& p : samples) {
          worst = std::max(worst, range_membership(tensor(p), r55, fam.range));
          ++checked;
        }
      }
    }
    const double gap_r =
        containment_gap(range_projector(r66.state.matrix()),
                        constraint_projector(fixtures::rho_6_6_range_constraints()));
    const double gap_pt =
        containment_gap(range_projector(partial_transpose(r66.state).matrix()),
                        constraint_projector(fixtures::rho_6_6_pt_range_constraints()));
    o.detail << checked << " family vectors, worst residual " << sci(worst)
             << "; subspace gaps " << sci(gap_r) << ", " << sci(gap_pt);
    o.require(worst < 1e-10, "family residual < 1e-10");
    o.require(gap_r < 1e-10 && gap_pt < 1e-10, "constraint subspaces");
  });

  criterion(6, "edge certification", 60.0, [&](Outcome& o) {
    for (const auto* e : states) {
      const auto start = std::chrono::steady_clock::now();
      std::vector<double> minima;
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const EdgeCertificate cert = certify_edge(*e, config(200, seed));
        minima.push_back(cert.objective_min);
        o.require(cert.verdict == EdgeVerdict::EdgeHeuristic, e->name + " verdict");
      }
      const double seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      const auto [lo, hi] = std::minmax_element(minima.begin(), minima.end());
      double mean = 0.0;
      for (double m : minima) mean += m;
      mean /= static_cast<double>(minima.size());
      o.detail << e->name << " min " << sci(*lo) << ".." << sci(*hi) << " (" << sci(seconds)
               << " s); ";
      o.require(*lo > 1e-6, e->name + " minimum > 1e-6");
      o.require(*lo >= 0.8 * mean && *hi <= 1.2 * mean, e->name + " +-20% across seeds");
      o.require(seconds < 30.0, e->name + " runtime < 30 s");
    }
    const EdgeCertificate sep = certify_edge(separable_sample(), config(200, 1));
    o.detail << "separable " << sci(sep.objective_min);
    o.require(sep.objective_min < 1e-10, "separable mixture reaches < 1e-10");
  });

  criterion(7, "kernel witness", 0, [&](Outcome& o) {
    const std::array<double, 2> expected_n{1.0 / 8.0, 1.0 / 6.0};
    for (std::size_t i = 0; i < 2; ++i) {
      const CatalogEntry& e = *states[i];
      const KernelOperator k = kernel_operator(RangeProjectors::from_entry(e), 3, 3);
      const Witness w = kernel_witness(e, config(200, 42));
      const double eps = *w.epsilon;
      const double on_delta = evaluate(k.w_delta, e.state);
      const double on_w1 = evaluate(w, e.state);
      const double product = min_product_expectation(w.op, config(200, 4242)).best_value;
      o.detail << e.name << " N " << sci(*w.normalization) << " eps " << sci(eps) << " prodmin "
               << sci(product) << "; ";
      o.require(std::abs(*w.normalization - expected_n[i]) < 1e-12, e.name + " N");
      o.require(std::abs(on_delta) < 1e-10, e.name + " Tr(W_delta delta) = 0");
      o.require(eps > 0.0, e.name + " eps > 0");
      o.require(std::abs(on_w1 + eps) < 1e-10, e.name + " Tr(W1 delta) = -eps");
      o.require(product >= -1e-7, e.name + " product minimum >= -1e-7");
    }
  });

  criterion(8, "realignment witness", 0, [&](Outcome& o) {
    for (const auto* e : states) {
      const Witness w = realignment_witness(e->state, e->name);
      const double value = evaluate(w, e->state);
      const double expected = 1.0 - oracle::trace_norm(realign(e->state));
      const double product = min_product_expectation(w.op, config(200, 42)).best_value;
      o.detail << e->name << " Tr(W2 rho) " << sci(value) << " prodmin " << sci(product) << "; ";
      o.require(std::abs(value - expected) < 1e-9, e->name + " Tr(W2 rho) = 1 - ||R||_1");
      o.require(product >= -1e-7, e->name + " product minimum >= -1e-7");
    }
  });

  criterion(9, "Schmidt-rank-2 evidence", 60.0, [&](Outcome& o) {
    std::vector<Witness> witnesses;
    for (const auto* e : states) {
      witnesses.push_back(kernel_witness(*e, config(200, 42)));
      witnesses.push_back(realignment_witness(e->state, e->name));
    }
    for (std::size_t i = 0; i < 4; ++i)
      witnesses.push_back(shift_witness(witnesses[i], states[i / 2]->state, 1e-6));
    double worst_best = -1e300;
    double worst_third = 0.0;
    for (const auto& w : witnesses) {
      const OptResult r = schmidt2_evidence(w, config(200, 42));
      const RealVector c = schmidt_coefficients(r.schmidt2_argmin().state, 3, 3);
      worst_best = std::max(worst_best, r.best_value);
      worst_third = std::max(worst_third, c(2) / c(0));
      o.require(r.best_value < 0.0,
                w.source + " " + to_string(w.method) + " schmidt2 best < 0");
    }
    o.detail << witnesses.size() << " witnesses, largest best value " << sci(worst_best)
             << ", largest third/first coefficient " << sci(worst_third);
    o.require(worst_third < 1e-8, "third Schmidt coefficient < 1e-8 relative");
  });

  criterion(10, "optimizer properties", 0, [&](Outcome& o) {
    Rng rng(31415);
    double worst_step = 0.0;
    SeeSawConfig traced = config(50, 7);
    traced.record_trace = true;
    for (int trial = 0; trial < 5; ++trial) {
      const ComplexMatrix g = complex_gaussian(9, 9, rng);
      const BipartiteOperator h(3, 3, 0.5 * (g + g.adjoint()));
      for (const OptResult& r :
           {min_product_expectation(h, traced), min_schmidt2_expectation(h, traced)})
        for (const auto& t : r.traces)
          for (std::size_t i = 1; i < t.size(); ++i) worst_step = std::max(worst_step, t[i] - t[i - 1]);
      const std::string a = to_json(min_product_expectation(h, traced)).dump();
      const std::string b = to_json(min_product_expectation(h, traced)).dump();
      o.require(a == b, "byte-identical OptResult");
    }
    double worst_gap = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
      const ComplexMatrix g = complex_gaussian(4, 4, rng);
      const BipartiteOperator h(2, 2, 0.5 * (g + g.adjoint()));
      const double see_saw = min_product_expectation(h, config(50, 11)).best_value;
      worst_gap = std::max(worst_gap, std::abs(see_saw - oracle::brute_force_product_min_2x2(h.matrix())));
    }
    o.detail << "largest half-step increase " << sci(worst_step) << ", 2x2 oracle gap "
             << sci(worst_gap);
    o.require(worst_step <= 1e-14, "monotone half-steps");
    o.require(worst_gap < 1e-4, "2x2 brute-force agreement");
  });

  std::printf("%s: %d of 10 criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures;
}
