#include "chiralwalk/report.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "chiralwalk/version.hpp"

namespace chiralwalk {

namespace {

using nlohmann::ordered_json;

double clean(double x) { return x == 0.0 ? 0.0 : x; }

ordered_json json_phases(const DiagonalUnitary& gauge) {
  ordered_json arr = ordered_json::array();
  for (double p : gauge.phases()) arr.push_back(clean(p));
  return arr;
}

ordered_json json_complex(Complex z) {
  return {{"re", clean(z.real())}, {"im", clean(z.imag())}};
}

double principal_arg(Complex z) {
  const double a = std::arg(z);
  return a == -std::numbers::pi ? std::numbers::pi : a;
}

ordered_json tolerances_json(const Tolerances& tol) {
  return {{"hermiticity", tol.hermiticity},
          {"support", tol.support},
          {"reality", tol.reality},
          {"uniform_diagonal", tol.uniform_diagonal},
          {"equivalence", tol.equivalence},
          {"current_floor", tol.current_floor},
          {"witness_threshold", tol.witness_threshold}};
}

ordered_json fingerprint_json(const HermitianMatrix& h,
                              const Tolerances& tol) {
  const InvariantFingerprint fp = fingerprint(h, tol);
  ordered_json moduli = ordered_json::array();
  for (const auto& [edge, value] : fp.moduli)
    moduli.push_back({{"edge", {edge.u, edge.v}}, {"value", clean(value)}});

  ordered_json diagonal = ordered_json::array();
  for (int j = 0; j < fp.diagonal.size(); ++j)
    diagonal.push_back(clean(fp.diagonal(j)));

  ordered_json cycles = ordered_json::array();
  for (size_t i = 0; i < fp.cycles.size(); ++i) {
    const Complex w = fp.cycle_weights[i];
    cycles.push_back({{"vertices", fp.cycles[i].vertices},
                      {"weight", json_complex(w)},
                      {"ab_phase", clean(principal_arg(w))}});
  }
  return {{"moduli", std::move(moduli)},
          {"diagonal", std::move(diagonal)},
          {"cycles", std::move(cycles)}};
}

ordered_json scan_json(const ScanReport& scan, ScanAgreement agreement) {
  ordered_json argmax = {{"source", scan.argmax_source},
                         {"target", scan.argmax_target},
                         {"t", clean(scan.argmax_time)},
                         {"value", clean(scan.argmax_value)}};
  return {{"points", scan.grid.size()},
          {"t_min", clean(scan.grid.front())},
          {"t_max", clean(scan.grid.back())},
          {"max_current", clean(scan.max_current)},
          {"argmax", std::move(argmax)},
          {"agreement", scan_agreement_name(agreement)}};
}

}  // namespace

ordered_json classify_report(const std::string& name, const HermitianMatrix& h,
                             const Classification& c, const Tolerances& tol) {
  ordered_json j;
  j["version"] = kVersion;
  if (!name.empty()) j["name"] = name;
  j["dim"] = h.dim();
  j["tolerances"] = tolerances_json(tol);
  j["verdict"] = verdict_name(c.verdict);

  ordered_json witnesses;
  witnesses["real_gauge"] =
      c.real_gauge ? json_phases(*c.real_gauge) : ordered_json(nullptr);
  witnesses["sign_gauge"] =
      c.sign_gauge ? json_phases(*c.sign_gauge) : ordered_json(nullptr);
  witnesses["shift"] = c.shift ? ordered_json(clean(*c.shift))
                               : ordered_json(nullptr);
  witnesses["numeric"] =
      c.witness ? ordered_json{{"source", c.witness->source},
                               {"target", c.witness->target},
                               {"t", clean(c.witness->t)},
                               {"value", clean(c.witness->value)}}
                : ordered_json(nullptr);
  j["witnesses"] = std::move(witnesses);

  ordered_json components = ordered_json::array();
  for (const ComponentReport& comp : c.components) {
    ordered_json cj;
    cj["vertices"] = comp.vertices;
    cj["trivial_gauge"] = comp.trivial_route;
    cj["bipartite"] = comp.bipartite_route;
    cj["uniform_diagonal"] = comp.uniform_diagonal;
    cj["alpha"] =
        comp.alpha ? ordered_json(clean(*comp.alpha)) : ordered_json(nullptr);
    cj["odd_cycle"] = comp.odd_cycle ? ordered_json(comp.odd_cycle->vertices)
                                     : ordered_json(nullptr);
    components.push_back(std::move(cj));
  }
  j["components"] = std::move(components);
  j["fingerprint"] = fingerprint_json(h, tol);
  j["scan"] = c.scan ? scan_json(*c.scan, c.scan_agreement)
                     : ordered_json(nullptr);
  return j;
}

ordered_json invariants_report(const std::string& name,
                               const HermitianMatrix& h,
                               const Tolerances& tol) {
  ordered_json j;
  j["version"] = kVersion;
  if (!name.empty()) j["name"] = name;
  j["dim"] = h.dim();
  j["tolerances"] = tolerances_json(tol);
  j["fingerprint"] = fingerprint_json(h, tol);
  return j;
}

ordered_json canon_report(const CanonicalForm& canon) {
  const HamiltonianDocument doc = document_from_matrix(canon.matrix.entries());
  ordered_json matrix;
  matrix["dim"] = doc.dim;
  matrix["entries"] = ordered_json::array();
  for (const auto& e : doc.entries)
    matrix["entries"].push_back({e.row, e.col, e.re, e.im});

  ordered_json j;
  j["version"] = kVersion;
  j["gauge"] = json_phases(canon.gauge);
  j["matrix"] = std::move(matrix);
  return j;
}

ordered_json equiv_report(const std::optional<DiagonalUnitary>& gauge) {
  ordered_json j;
  j["version"] = kVersion;
  j["equivalent"] = gauge.has_value();
  j["gauge"] = gauge ? json_phases(*gauge) : ordered_json(nullptr);
  return j;
}

namespace {

void write_row(std::ostream& os, double t, int s, int f,
               std::initializer_list<double> values) {
  char buf[160];
  int len = std::snprintf(buf, sizeof buf, "%.12g,%d,%d", t, s, f);
  for (double v : values)
    len += std::snprintf(buf + len, sizeof buf - len, ",%.12g", clean(v));
  os << buf << '\n';
}

template <typename RowFn>
void walk_pairs(int n, std::optional<int> source, bool full, RowFn&& row) {
  for (int s = 0; s < n; ++s) {
    if (source && *source != s) continue;
    for (int f = full ? 0 : s + 1; f < n; ++f) {
      if (!full && f <= s) continue;
      row(s, f);
    }
  }
}

}  // namespace

void write_simulate_csv(std::ostream& os, const HermitianMatrix& h,
                        const std::vector<double>& grid,
                        std::optional<int> source, bool full) {
  const Propagator prop(h);
  const int n = h.dim();
  os << "t,s,f,P,J\n";
  for (double t : grid) {
    const Eigen::MatrixXd p = prop.probabilities(t);
    walk_pairs(n, source, full, [&](int s, int f) {
      write_row(os, t, s, f, {p(f, s), p(f, s) - p(s, f)});
    });
  }
}

void write_amplitude_csv(std::ostream& os, const HermitianMatrix& h,
                         const std::vector<double>& grid,
                         std::optional<int> source, bool full) {
  const Propagator prop(h);
  const int n = h.dim();
  os << "t,s,f,re,im\n";
  for (double t : grid) {
    const Eigen::MatrixXcd u = prop.at(t);
    walk_pairs(n, source, full, [&](int s, int f) {
      const Complex a = u(f, s) - u(s, f);
      write_row(os, t, s, f, {a.real(), a.imag()});
    });
  }
}

void write_stochastic_csv(std::ostream& os, const StochasticGenerator& gen,
                          const std::vector<double>& grid,
                          std::optional<int> source, bool full) {
  const int n = gen.dim();
  os << "t,s,f,current\n";
  for (double t : grid) {
    const Eigen::MatrixXd c = stochastic_current(gen, t);
    walk_pairs(n, source, full, [&](int s, int f) {
      write_row(os, t, s, f, {c(s, f)});
    });
  }
}

}  // namespace chiralwalk
