#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "chiralwalk/document.hpp"
#include "chiralwalk/gauge.hpp"
#include "chiralwalk/report.hpp"
#include "chiralwalk/time_symmetry.hpp"
#include "chiralwalk/version.hpp"

namespace {

using namespace chiralwalk;

struct CommonOptions {
  std::string format = "json";
  double tol_support = 1e-12;
  double tol_herm = 1e-9;
  double tol_real = 1e-8;
  std::string grid_spec;
  bool zero_diagonal = false;
  bool full = false;
  int source = -1;

  Tolerances tolerances() const {
    Tolerances tol;
    tol.support = tol_support;
    tol.hermiticity = tol_herm;
    tol.reality = tol_real;
    return tol;
  }
  DocumentFormat document_format() const {
    return format == "edgelist" ? DocumentFormat::EdgeList
                                : DocumentFormat::Json;
  }
  std::optional<int> source_opt() const {
    return source >= 0 ? std::optional<int>(source) : std::nullopt;
  }
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool grid = false,
                bool series = false) {
  cmd->add_option("--format", opt.format, "input format")
      ->check(CLI::IsMember({"json", "edgelist"}));
  cmd->add_option("--tol-support", opt.tol_support,
                  "support cutoff, relative to max |H|");
  cmd->add_option("--tol-herm", opt.tol_herm,
                  "hermiticity tolerance, relative to max |H|");
  cmd->add_option("--tol-real", opt.tol_real,
                  "reality tolerance for cycle weights");
  cmd->add_flag("--zero-diagonal", opt.zero_diagonal,
                "zero the diagonal before processing");
  if (grid)
    cmd->add_option("--grid", opt.grid_spec,
                    "time grid T_MAX:N_POINTS (literal times; default is "
                    "2001 points on (0, 10] scaled by 1/max|H|)");
  if (series) {
    cmd->add_flag("--full", opt.full,
                  "emit every ordered pair, diagonal included");
    cmd->add_option("--source", opt.source, "restrict rows to this source")
        ->check(CLI::NonNegativeNumber);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

HamiltonianDocument load_document(const std::string& path,
                                  const CommonOptions& opt) {
  return parse_document(read_file(path), opt.document_format());
}

HermitianMatrix load_hermitian(const std::string& path,
                               const CommonOptions& opt,
                               std::string* name = nullptr) {
  const HamiltonianDocument doc = load_document(path, opt);
  if (name) *name = doc.name;
  Eigen::MatrixXcd raw = document_matrix(doc);
  if (opt.zero_diagonal) raw.diagonal().setZero();
  return validate_hermitian(raw, opt.tol_herm);
}

std::optional<std::vector<double>> parse_grid_spec(const std::string& spec) {
  if (spec.empty()) return std::nullopt;
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw ParseError("--grid expects T_MAX:N_POINTS");
  double t_max = 0.0;
  long points = 0;
  try {
    size_t pos = 0;
    t_max = std::stod(spec.substr(0, colon), &pos);
    if (pos != colon) throw std::invalid_argument(spec);
    const std::string tail = spec.substr(colon + 1);
    points = std::stol(tail, &pos);
    if (pos != tail.size()) throw std::invalid_argument(spec);
  } catch (const std::exception&) {
    throw ParseError("--grid expects T_MAX:N_POINTS");
  }
  if (!(t_max > 0.0) || points < 1)
    throw ParseError("--grid needs T_MAX > 0 and N_POINTS >= 1");
  std::vector<double> grid(points);
  for (long i = 0; i < points; ++i)
    grid[i] = t_max * static_cast<double>(i + 1) / static_cast<double>(points);
  return grid;
}

std::vector<double> grid_for(const CommonOptions& opt,
                             const HermitianMatrix& h) {
  if (auto g = parse_grid_spec(opt.grid_spec)) return *g;
  return default_grid(h);
}

std::vector<double> grid_for_scale(const CommonOptions& opt, double max_abs) {
  if (auto g = parse_grid_spec(opt.grid_spec)) return *g;
  const double scale = max_abs > 0.0 ? max_abs : 1.0;
  std::vector<double> grid(2001);
  for (int i = 0; i < 2001; ++i) grid[i] = (10.0 * (i + 1) / 2001) / scale;
  return grid;
}

void check_source(const CommonOptions& opt, int dim) {
  if (opt.source >= dim)
    throw ValidationError("--source " + std::to_string(opt.source) +
                          " is out of range for dim " + std::to_string(dim));
}

int cmd_classify(const std::string& input, const CommonOptions& opt) {
  std::string name;
  const HermitianMatrix h = load_hermitian(input, opt, &name);
  ClassifyOptions copts;
  copts.tol = opt.tolerances();
  copts.grid = parse_grid_spec(opt.grid_spec);
  const Classification c = classify(h, copts);
  std::cout << classify_report(name, h, c, copts.tol).dump(2) << "\n";
  if (c.flagged()) return 4;
  return c.symmetric() ? 0 : 3;
}

int cmd_invariants(const std::string& input, const CommonOptions& opt) {
  std::string name;
  const HermitianMatrix h = load_hermitian(input, opt, &name);
  std::cout << invariants_report(name, h, opt.tolerances()).dump(2) << "\n";
  return 0;
}

int cmd_canon(const std::string& input, const CommonOptions& opt) {
  const HermitianMatrix h = load_hermitian(input, opt);
  std::cout << canon_report(canonical_form(h, opt.tolerances())).dump(2)
            << "\n";
  return 0;
}

int cmd_equiv(const std::string& input_a, const std::string& input_b,
              const CommonOptions& opt) {
  const HermitianMatrix a = load_hermitian(input_a, opt);
  const HermitianMatrix b = load_hermitian(input_b, opt);
  const auto gauge = gauge_equivalent(a, b, opt.tolerances());
  std::cout << equiv_report(gauge).dump(2) << "\n";
  return gauge ? 0 : 3;
}

int cmd_simulate(const std::string& input, const CommonOptions& opt) {
  const HermitianMatrix h = load_hermitian(input, opt);
  check_source(opt, h.dim());
  write_simulate_csv(std::cout, h, grid_for(opt, h), opt.source_opt(),
                     opt.full);
  return 0;
}

int cmd_currents(const std::string& input, const std::string& kind,
                 const CommonOptions& opt) {
  if (kind == "amplitude") {
    const HermitianMatrix h = load_hermitian(input, opt);
    check_source(opt, h.dim());
    write_amplitude_csv(std::cout, h, grid_for(opt, h), opt.source_opt(),
                        opt.full);
    return 0;
  }
  const HamiltonianDocument doc = load_document(input, opt);
  Eigen::MatrixXd raw = document_real_matrix(doc);
  if (opt.zero_diagonal) raw.diagonal().setZero();
  const StochasticGenerator gen =
      StochasticGenerator::validated(std::move(raw), opt.tol_herm);
  check_source(opt, gen.dim());
  const double max_abs =
      gen.entries.size() > 0 ? gen.entries.cwiseAbs().maxCoeff() : 0.0;
  write_stochastic_csv(std::cout, gen, grid_for_scale(opt, max_abs),
                       opt.source_opt(), opt.full);
  return 0;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const ConvergenceError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"time-reversal symmetry of continuous-time quantum walks"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  CommonOptions opt;
  std::string input, input_b, kind = "amplitude";

  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "classify a Hamiltonian and emit a JSON report");
  classify_cmd->add_option("input", input, "Hamiltonian document")->required();
  add_common(classify_cmd, opt, /*grid=*/true);

  CLI::App* invariants_cmd = app.add_subcommand(
      "invariants", "list gauge invariants: moduli, diagonal, cycle weights");
  invariants_cmd->add_option("input", input, "Hamiltonian document")
      ->required();
  add_common(invariants_cmd, opt);

  CLI::App* canon_cmd = app.add_subcommand(
      "canon", "canonical gauge-orbit representative and the gauge to it");
  canon_cmd->add_option("input", input, "Hamiltonian document")->required();
  add_common(canon_cmd, opt);

  CLI::App* equiv_cmd = app.add_subcommand(
      "equiv", "decide gauge equivalence of two Hamiltonians");
  equiv_cmd->add_option("input_a", input, "first document")->required();
  equiv_cmd->add_option("input_b", input_b, "second document")->required();
  add_common(equiv_cmd, opt);

  CLI::App* simulate_cmd = app.add_subcommand(
      "simulate", "transition probabilities and currents as CSV");
  simulate_cmd->add_option("input", input, "Hamiltonian document")->required();
  add_common(simulate_cmd, opt, /*grid=*/true, /*series=*/true);

  CLI::App* currents_cmd = app.add_subcommand(
      "currents", "stochastic or amplitude current time series as CSV");
  currents_cmd->add_option("input", input, "generator or Hamiltonian document")
      ->required();
  currents_cmd->add_option("--kind", kind, "current kind")
      ->check(CLI::IsMember({"amplitude", "stochastic"}));
  add_common(currents_cmd, opt, /*grid=*/true, /*series=*/true);

  CLI11_PARSE(app, argc, argv);

  if (classify_cmd->parsed())
    return guarded([&] { return cmd_classify(input, opt); });
  if (invariants_cmd->parsed())
    return guarded([&] { return cmd_invariants(input, opt); });
  if (canon_cmd->parsed())
    return guarded([&] { return cmd_canon(input, opt); });
  if (equiv_cmd->parsed())
    return guarded([&] { return cmd_equiv(input, input_b, opt); });
  if (simulate_cmd->parsed())
    return guarded([&] { return cmd_simulate(input, opt); });
  if (currents_cmd->parsed())
    return guarded([&] { return cmd_currents(input, kind, opt); });
  return 0;
}
