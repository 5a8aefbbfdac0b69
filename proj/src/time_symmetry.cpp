#include "chiralwalk/time_symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unsupported/Eigen/MatrixFunctions>

namespace chiralwalk {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::SymmetricTrivialGauge: return "symmetric-trivial-gauge";
    case Verdict::SymmetricBipartite: return "symmetric-bipartite";
    case Verdict::SymmetricBoth: return "symmetric-both";
    case Verdict::Asymmetric: return "asymmetric";
  }
  return "unknown";
}

const char* scan_agreement_name(ScanAgreement a) {
  switch (a) {
    case ScanAgreement::NotRun: return "not-run";
    case ScanAgreement::Agrees: return "agrees";
    case ScanAgreement::Inconclusive: return "inconclusive";
    case ScanAgreement::Disagrees: return "disagrees";
  }
  return "unknown";
}

std::optional<DiagonalUnitary> conjugate_to_negative(const HermitianMatrix& h,
                                                     const Tolerances& tol) {
  const int n = h.dim();
  const double diag_thr = tol.uniform_diagonal * std::max(1.0, h.max_abs());
  for (int j = 0; j < n; ++j)
    if (std::abs(h(j, j)) > diag_thr) throw NonzeroDiagonalError(j);

  const double cutoff = support_cutoff(h, tol.support);
  const SupportGraph g = support(h, cutoff);
  const BipartitenessResult bp = is_bipartite(g);
  if (!bp.is_bipartite()) return std::nullopt;

  // Roots sit on side A and keep phase 0; the opposite side is flipped.
  std::vector<double> phases(n, 0.0);
  for (int j = 0; j < n; ++j)
    if (bp.bipartition->side[j] == Side::B) phases[j] = std::numbers::pi;
  DiagonalUnitary lambda{std::move(phases)};

  const double err =
      (gauge_conjugate(lambda, h).entries() + h.entries()).cwiseAbs().maxCoeff();
  if (err > 2.0 * cutoff + 2.0 * diag_thr)
    throw VerificationError("sign gauge failed to negate the matrix: " +
                            std::to_string(err));
  return lambda;
}

std::vector<double> default_grid(const HermitianMatrix& h, double t_max,
                                 int points) {
  if (points < 1) throw Error("grid needs at least one point");
  if (!(t_max > 0.0)) throw Error("grid horizon must be positive");
  const double scale = h.max_abs() > 0.0 ? h.max_abs() : 1.0;
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i)
    grid[i] = (t_max * (i + 1) / points) / scale;
  return grid;
}

namespace {

struct ScanBest {
  double abs_value = -1.0;
  int index = -1;
  int source = 0;
  int target = 0;
  double value = 0.0;
};

// Strictly-greater wins; ties go to the earlier grid point, which makes the
// parallel merge reproduce the serial left-to-right result.
bool better(const ScanBest& a, const ScanBest& b) {
  return a.abs_value > b.abs_value ||
         (a.abs_value == b.abs_value && a.index < b.index);
}

ScanBest scan_point(const Propagator& prop, double t, int index) {
  const Eigen::MatrixXd p = prop.probabilities(t);
  const int n = static_cast<int>(p.rows());
  ScanBest best;
  for (int s = 0; s < n; ++s)
    for (int f = s + 1; f < n; ++f) {
      const double j = p(f, s) - p(s, f);
      const double a = std::abs(j);
      if (a > best.abs_value) best = {a, index, s, f, j};
    }
  return best;
}

ScanReport finish_report(const std::vector<double>& grid,
                         const ScanBest& best) {
  ScanReport rep;
  rep.grid = grid;
  if (best.index < 0) {  // no vertex pair to compare (n < 2)
    rep.max_current = 0.0;
    rep.argmax_time = grid.front();
    return rep;
  }
  rep.max_current = best.abs_value;
  rep.argmax_source = best.source;
  rep.argmax_target = best.target;
  rep.argmax_time = grid[best.index];
  rep.argmax_value = best.value;
  return rep;
}

}  // namespace

ScanReport scan_serial(const HermitianMatrix& h,
                       const std::vector<double>& grid) {
  if (grid.empty()) throw Error("scan grid is empty");
  const Propagator prop(h);
  ScanBest best;
  for (size_t i = 0; i < grid.size(); ++i) {
    const ScanBest candidate = scan_point(prop, grid[i], static_cast<int>(i));
    if (candidate.index >= 0 && better(candidate, best)) best = candidate;
  }
  return finish_report(grid, best);
}

ScanReport scan(const HermitianMatrix& h, const std::vector<double>& grid) {
  if (grid.empty()) throw Error("scan grid is empty");
  const Propagator prop(h);
  ScanBest best;
#pragma omp parallel
  {
    ScanBest local;
#pragma omp for nowait schedule(static)
    for (int i = 0; i < static_cast<int>(grid.size()); ++i) {
      const ScanBest candidate = scan_point(prop, grid[i], i);
      if (candidate.index >= 0 && better(candidate, local)) local = candidate;
    }
#pragma omp critical
    {
      if (local.index >= 0 && better(local, best)) best = local;
    }
  }
  return finish_report(grid, best);
}

bool phase_independent(const HermitianMatrix& h, const Tolerances& tol) {
  return is_tree(support(h, support_cutoff(h, tol.support)));
}

namespace {

bool real_within(Complex w, double rel_tol) {
  return std::abs(w.imag()) <= rel_tol * std::abs(w);
}

}  // namespace

Classification classify(const HermitianMatrix& h, const ClassifyOptions& opts) {
  const Tolerances& tol = opts.tol;
  const int n = h.dim();
  const double cutoff = support_cutoff(h, tol.support);
  const SupportGraph g = support(h, cutoff);
  const SpanningForest forest = spanning_forest(g);
  const std::vector<CycleWalk> cycles = fundamental_cycles(g, forest);
  const ComponentColoring coloring = color_components(g);
  const CanonicalForm canon = canonical_form(h, tol);
  const DiagonalSplit split = diagonal_split(h, tol.uniform_diagonal);
  const double diag_scale = std::max(1.0, h.max_abs());

  Classification out;
  const size_t n_comp = g.components.size();
  out.components.resize(n_comp);

  std::vector<bool> has_nonreal_cycle(n_comp, false);
  for (size_t i = 0; i < cycles.size(); ++i) {
    const size_t ci = g.component_of[cycles[i].vertices.front()];
    if (!real_within(cycle_weight(h, g, cycles[i]), tol.reality))
      has_nonreal_cycle[ci] = true;
  }

  bool all_symmetric = true, all_trivial = true, all_bipartite = true;
  for (size_t ci = 0; ci < n_comp; ++ci) {
    ComponentReport& comp = out.components[ci];
    comp.vertices = g.components[ci];
    comp.trivial_route = !has_nonreal_cycle[ci];
    comp.odd_cycle = coloring.odd_cycles[ci];

    double mean = 0.0;
    for (int v : comp.vertices) mean += split.diagonal(v);
    mean /= static_cast<double>(comp.vertices.size());
    double spread = 0.0;
    for (int v : comp.vertices)
      spread = std::max(spread, std::abs(split.diagonal(v) - mean));
    comp.uniform_diagonal = spread <= tol.uniform_diagonal * diag_scale;
    if (comp.uniform_diagonal) comp.alpha = mean;

    comp.bipartite_route = comp.uniform_diagonal && coloring.bipartite[ci];

    all_symmetric = all_symmetric && comp.symmetric();
    all_trivial = all_trivial && comp.trivial_route;
    all_bipartite = all_bipartite && comp.bipartite_route;
  }

  if (all_symmetric) {
    if (all_trivial) {
      out.real_gauge = canon.gauge;
      const double im = canon.matrix.entries().imag().cwiseAbs().maxCoeff();
      if (im > 4.0 * tol.reality * diag_scale)
        throw VerificationError("real gauge left imaginary residue " +
                                std::to_string(im));
    }
    if (all_bipartite) {
      std::vector<double> phases(n, 0.0);
      for (int j = 0; j < n; ++j)
        if (coloring.side[j] == Side::B) phases[j] = std::numbers::pi;
      DiagonalUnitary sign{std::move(phases)};
      const double err = (gauge_conjugate(sign, split.hopping).entries() +
                          split.hopping.entries())
                             .cwiseAbs()
                             .maxCoeff();
      if (err > 2.0 * cutoff)
        throw VerificationError("sign gauge failed to negate the hopping: " +
                                std::to_string(err));
      out.sign_gauge = std::move(sign);
      if (split.uniform) out.shift = split.shift;
    }
    const bool pure_bipartite = all_bipartite && split.uniform;
    if (all_trivial && pure_bipartite)
      out.verdict = Verdict::SymmetricBoth;
    else if (all_trivial)
      out.verdict = Verdict::SymmetricTrivialGauge;
    else if (pure_bipartite)
      out.verdict = Verdict::SymmetricBipartite;
    else
      out.verdict = Verdict::SymmetricBoth;  // mixed routes across components
  } else {
    out.verdict = Verdict::Asymmetric;
  }

  if (opts.run_scan) {
    const std::vector<double> grid =
        opts.grid ? *opts.grid : default_grid(h);
    out.scan = scan(h, grid);
    const double m = out.scan->max_current;
    if (out.verdict == Verdict::Asymmetric) {
      if (m > tol.witness_threshold) {
        out.witness = NumericWitness{out.scan->argmax_source,
                                     out.scan->argmax_target,
                                     out.scan->argmax_time,
                                     out.scan->argmax_value};
        out.scan_agreement = ScanAgreement::Agrees;
      } else if (m > tol.current_floor) {
        out.scan_agreement = ScanAgreement::Inconclusive;
      } else {
        out.scan_agreement = ScanAgreement::Disagrees;
      }
    } else {
      if (m <= tol.current_floor)
        out.scan_agreement = ScanAgreement::Agrees;
      else if (m <= tol.witness_threshold)
        out.scan_agreement = ScanAgreement::Inconclusive;
      else
        out.scan_agreement = ScanAgreement::Disagrees;
    }
  }
  return out;
}

StochasticGenerator StochasticGenerator::validated(Eigen::MatrixXd m,
                                                   double tol) {
  if (m.rows() != m.cols()) throw NonSquareError(m.rows(), m.cols());
  const int n = static_cast<int>(m.rows());
  const double scale =
      std::max(1.0, m.size() > 0 ? m.cwiseAbs().maxCoeff() : 0.0);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k)
      if (j != k && m(j, k) < -tol * scale)
        throw InvalidGeneratorError("negative off-diagonal rate at (" +
                                    std::to_string(j) + "," +
                                    std::to_string(k) + ")");
    const double row_sum = m.row(j).sum();
    if (std::abs(row_sum) > tol * scale * n)
      throw InvalidGeneratorError("row " + std::to_string(j) +
                                  " sums to " + std::to_string(row_sum));
  }
  return {std::move(m)};
}

Eigen::MatrixXd stochastic_current(const StochasticGenerator& s, double t) {
  if (!(t >= 0.0)) throw Error("stochastic evolution needs t >= 0");
  const Eigen::MatrixXd u = (t * s.entries).exp();
  return u.transpose() - u;
}

Eigen::MatrixXcd amplitude_current(const HermitianMatrix& h, double t) {
  const Eigen::MatrixXcd u = Propagator(h).at(t);
  return u.transpose() - u;
}

}  // namespace chiralwalk
