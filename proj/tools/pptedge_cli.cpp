// pptedge: command-line front end.
//
// Exit codes: 0 success, 1 usage, 2 parse, 3 invalid state,
// 4 inapplicable method, 5 internal numerical failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pptedge/analysis.hpp"
#include "pptedge/errors.hpp"

namespace {

using namespace pptedge;

struct GlobalFlags {
  std::uint64_t seed = 42;
  int restarts = 200;
  int max_iter = 500;
  double conv_tol = 1e-12;
  double tol_eig = 1e-9;
  double tol_pos = 1e-12;
  double shift = 1e-6;
  std::string out;

  SeeSawConfig config() const {
    SeeSawConfig cfg;
    cfg.restarts = restarts;
    cfg.max_iter = max_iter;
    cfg.conv_tol = conv_tol;
    cfg.seed = seed;
    return cfg;
  }
};

void emit(const Json& j, const std::string& out) {
  const std::string text = j.dump(2);
  if (out.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream file(out);
  if (!file) throw ParseError("cannot write '" + out + "'");
  file << text << '\n';
}

int cmd_catalog() {
  for (const auto& name : catalog_names()) {
    const CatalogEntry e = catalog_entry(name);
    std::cout << name << "\t(" << e.expected_rank << "," << e.expected_pt_rank << ")\t"
              << e.description << '\n';
  }
  return 0;
}

int cmd_analyze(const std::string& input, const GlobalFlags& g) {
  const CatalogEntry entry = load_input(input, g.tol_pos);
  AnalysisOptions opts;
  opts.cfg = g.config();
  opts.tol_eig = g.tol_eig;
  opts.tol_pos = g.tol_pos;
  opts.shift = g.shift;
  emit(analyze(entry, opts), g.out);
  return 0;
}

int cmd_witness(const std::string& input, const std::string& method, bool shifted,
                const GlobalFlags& g) {
  const CatalogEntry entry = load_input(input, g.tol_pos);
  const SeeSawConfig cfg = g.config();
  Witness w = [&] {
    if (method == "kernel") {
      if (is_ppt(entry.state, g.tol_pos).verdict != Verdict::Pass) {
        throw InapplicableError("kernel witness: state '" + entry.name + "' is not PPT");
      }
      return entry.range_basis.empty() ? kernel_witness(entry.state, entry.name, cfg, g.tol_eig)
                                       : kernel_witness(entry, cfg);
    }
    return realignment_witness(entry.state, entry.name);
  }();
  if (shifted) w = shift_witness(w, entry.state, g.shift);

  const double value = evaluate(w, entry.state);
  const Json file = to_json(to_matrix_file(w));
  if (g.out.empty()) {
    std::cout << file.dump(2) << '\n';
    std::cerr << "Tr(W rho) = " << Json(value).dump() << '\n';
  } else {
    emit(file, g.out);
    Json summary{{"state", entry.name},
                 {"method", to_string(w.method)},
                 {"out", g.out},
                 {"metadata", file["metadata"]},
                 {"trace_w_rho", value}};
    std::cout << summary.dump(2) << '\n';
  }
  return 0;
}

int cmd_certify_edge(const std::string& input, const GlobalFlags& g) {
  const CatalogEntry entry = load_input(input, g.tol_pos);
  const EdgeCertificate cert =
      certify_edge(entry.state, entry.name, RangeProjectors::from_entry(entry, g.tol_eig),
                   g.config(), g.tol_pos);
  Json j = to_json(cert);
  j["seed"] = g.seed;
  j["optimizer"] = to_json(g.config());
  emit(j, g.out);
  return 0;
}

int cmd_schmidt2(const std::string& path, const GlobalFlags& g) {
  const MatrixFile file = read_matrix_file(path);
  if (!is_hermitian(file.matrix)) {
    throw ParseError("'" + path + "' does not hold a Hermitian operator");
  }
  const OptResult r = min_schmidt2_expectation(file.as_operator(), g.config());
  Json j = to_json(r, true);
  j["input"] = path;
  j["seed"] = g.seed;
  j["optimizer"] = to_json(g.config());
  emit(j, g.out);
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"Construct, certify and probe PPT entangled edge states and their witnesses"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", PPTEDGE_VERSION);

  GlobalFlags g;
  app.add_option("--seed", g.seed, "Optimizer seed")->capture_default_str();
  app.add_option("--restarts", g.restarts, "See-saw restarts")->capture_default_str();
  app.add_option("--max-iter", g.max_iter, "Sweeps per restart")->capture_default_str();
  app.add_option("--conv-tol", g.conv_tol, "Absolute decrease per sweep that stops a restart")
      ->capture_default_str();
  app.add_option("--tol-eig", g.tol_eig, "Relative eigenvalue threshold for ranks")
      ->capture_default_str();
  app.add_option("--tol-pos", g.tol_pos, "Slack for positivity checks")->capture_default_str();
  auto* shift_opt =
      app.add_option("--shift", g.shift, "Margin of shifted witnesses")->capture_default_str();
  app.add_option("--out", g.out, "Write output here instead of stdout");

  auto* catalog = app.add_subcommand("catalog", "List catalog states with (rank, PT rank)");

  std::string input;
  auto* analyze = app.add_subcommand("analyze", "Full analysis report of a state (JSON)");
  analyze->add_option("input", input, "Catalog name or matrix file")->required();

  std::string method;
  auto* witness = app.add_subcommand("witness", "Build a kernel or realignment witness");
  witness->add_option("input", input, "Catalog name or matrix file")->required();
  witness->add_option("--method", method, "kernel | realign")
      ->required()
      ->check(CLI::IsMember({"kernel", "realign"}));

  auto* certify = app.add_subcommand("certify-edge", "Heuristic edge certificate (JSON)");
  certify->add_option("input", input, "Catalog name or matrix file")->required();

  std::string witness_file;
  auto* schmidt2 =
      app.add_subcommand("schmidt2", "Minimize a witness over Schmidt-rank-2 states (JSON)");
  schmidt2->add_option("witness-file", witness_file, "Matrix file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ExitCode::Usage);
  }

  try {
    g.config().validate();
    if (!(g.shift > 0.0)) throw ContractViolation("--shift must be > 0");
  } catch (const ContractViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::Usage);
  }

  if (*catalog) return cmd_catalog();
  if (*analyze) return cmd_analyze(input, g);
  if (*witness) return cmd_witness(input, method, shift_opt->count() > 0, g);
  if (*certify) return cmd_certify_edge(input, g);
  if (*schmidt2) return cmd_schmidt2(witness_file, g);
  return static_cast<int>(ExitCode::Usage);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::Parse);
  } catch (const LookupError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::Parse);
  } catch (const InvalidStateError& e) {
    std::cerr << "invalid state: " << e.what() << '\n';
    return static_cast<int>(ExitCode::InvalidState);
  } catch (const NotPsdError& e) {
    std::cerr << "invalid state: " << e.what() << '\n';
    return static_cast<int>(ExitCode::InvalidState);
  } catch (const InapplicableError& e) {
    std::cerr << "inapplicable: " << e.what() << '\n';
    return static_cast<int>(ExitCode::Inapplicable);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::Numerical);
  }
}
