#include "chiralwalk/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace chiralwalk {

namespace {

// std::arg lands in [-pi, pi]; fold the -pi boundary onto +pi.
double arg_principal(Complex z) {
  const double a = std::arg(z);
  return a == -std::numbers::pi ? std::numbers::pi : a;
}

struct CanonicalUnits {
  SupportGraph graph;
  SpanningForest forest;
  std::vector<Complex> units;  // per-vertex gauge factors, |u| = 1
};

// Propagates gauge factors along the forest so every tree-edge entry of
// u_j conj(u_k) H_jk becomes its modulus. Roots carry the exact unit 1, and
// unit arithmetic stays in plain complex products so that regauging an input
// by exact lattice phases reproduces identical bytes downstream.
CanonicalUnits canonical_units(const HermitianMatrix& h,
                               const Tolerances& tol) {
  CanonicalUnits cu;
  cu.graph = support(h, support_cutoff(h, tol.support));
  cu.forest = spanning_forest(cu.graph);
  cu.units.assign(h.dim(), Complex(1.0, 0.0));
  for (int v : cu.forest.order) {
    const int p = cu.forest.parent[v];
    if (p < 0) continue;
    const Complex entry = h(p, v);
    cu.units[v] = std::conj(std::abs(entry) / (cu.units[p] * entry));
  }
  return cu;
}

Eigen::MatrixXcd apply_units(const std::vector<Complex>& units,
                             const HermitianMatrix& h) {
  const int n = h.dim();
  Eigen::MatrixXcd out(n, n);
  for (int j = 0; j < n; ++j) {
    out(j, j) = h(j, j);
    for (int k = j + 1; k < n; ++k) {
      const Complex z = units[j] * std::conj(units[k]) * h(j, k);
      out(j, k) = z;
      out(k, j) = std::conj(z);
    }
  }
  return out;
}

bool weight_is_real(Complex w, double rel_tol) {
  return std::abs(w.imag()) <= rel_tol * std::abs(w);
}

}  // namespace

GaugePotential gauge_potential(const HermitianMatrix& h,
                               const SupportGraph& g) {
  Eigen::MatrixXd theta = Eigen::MatrixXd::Zero(h.dim(), h.dim());
  for (const Edge& e : g.edges) {
    theta(e.u, e.v) = arg_principal(h(e.u, e.v));
    theta(e.v, e.u) = arg_principal(h(e.v, e.u));
  }
  return {std::move(theta)};
}

GaugePotential gauge_potential(const HermitianMatrix& h) {
  return gauge_potential(h, support(h));
}

Complex cycle_weight(const HermitianMatrix& h, const SupportGraph& g,
                     const CycleWalk& c) {
  const int k = c.length();
  Complex w(1.0, 0.0);
  for (int i = 0; i < k; ++i) {
    const int from = c.vertices[i];
    const int to = c.vertices[(i + 1) % k];
    const bool on_support =
        from == to ? g.has_loop(from) : g.has_edge(from, to);
    if (!on_support) throw StepOffSupportError(from, to);
    w *= h(from, to);
  }
  return w;
}

Complex cycle_weight(const HermitianMatrix& h, const CycleWalk& c) {
  return cycle_weight(h, support(h), c);
}

double ab_phase(const HermitianMatrix& h, const SupportGraph& g,
                const CycleWalk& c) {
  const Complex w = cycle_weight(h, g, c);
  if (std::abs(w) == 0.0) throw ZeroWeightError();
  return arg_principal(w);
}

double ab_phase(const HermitianMatrix& h, const CycleWalk& c) {
  return ab_phase(h, support(h), c);
}

CanonicalForm canonical_form(const HermitianMatrix& h, const Tolerances& tol) {
  const CanonicalUnits cu = canonical_units(h, tol);
  std::vector<double> phases(h.dim());
  for (int j = 0; j < h.dim(); ++j) phases[j] = arg_principal(cu.units[j]);
  return {HermitianMatrix::trusted(apply_units(cu.units, h)),
          DiagonalUnitary(std::move(phases))};
}

InvariantFingerprint fingerprint(const HermitianMatrix& h,
                                 const Tolerances& tol) {
  const SupportGraph g = support(h, support_cutoff(h, tol.support));
  const SpanningForest f = spanning_forest(g);

  InvariantFingerprint fp;
  fp.moduli.reserve(g.edges.size());
  for (const Edge& e : g.edges) fp.moduli.emplace_back(e, std::abs(h(e.u, e.v)));
  fp.diagonal = h.entries().diagonal().real();
  fp.cycles = fundamental_cycles(g, f);
  fp.cycle_weights.reserve(fp.cycles.size());
  for (const CycleWalk& c : fp.cycles)
    fp.cycle_weights.push_back(cycle_weight(h, g, c));
  return fp;
}

std::optional<DiagonalUnitary> gauge_equivalent(const HermitianMatrix& a,
                                                const HermitianMatrix& b,
                                                const Tolerances& tol) {
  if (a.dim() != b.dim()) throw DimensionMismatchError(a.dim(), b.dim());
  const int n = a.dim();
  const double scale = std::max({a.max_abs(), b.max_abs(), 1.0});
  const double abs_tol = tol.equivalence * scale;

  const SupportGraph ga = support(a, support_cutoff(a, tol.support));
  const SupportGraph gb = support(b, support_cutoff(b, tol.support));
  if (ga.edges != gb.edges || ga.loops != gb.loops) return std::nullopt;

  for (const Edge& e : ga.edges)
    if (std::abs(std::abs(a(e.u, e.v)) - std::abs(b(e.u, e.v))) > abs_tol)
      return std::nullopt;
  for (int j = 0; j < n; ++j)
    if (std::abs(a(j, j) - b(j, j)) > abs_tol) return std::nullopt;

  const InvariantFingerprint fa = fingerprint(a, tol);
  const InvariantFingerprint fb = fingerprint(b, tol);
  for (size_t i = 0; i < fa.cycle_weights.size(); ++i) {
    const Complex wa = fa.cycle_weights[i], wb = fb.cycle_weights[i];
    const double mag = std::max(std::abs(wa), std::abs(wb));
    if (std::abs(wa - wb) > tol.equivalence * mag) return std::nullopt;
  }

  const DiagonalUnitary lambda =
      canonical_form(b, tol).gauge.inverse().compose(
          canonical_form(a, tol).gauge);
  const double err =
      (gauge_conjugate(lambda, a).entries() - b.entries()).cwiseAbs().maxCoeff();
  if (err > 16.0 * std::max(n, 1) * abs_tol)
    throw VerificationError(
        "invariants agree but the reconstructed gauge misses by " +
        std::to_string(err) + "; tolerances are inconsistent");
  return lambda;
}

std::optional<DiagonalUnitary> trivial_gauge(const HermitianMatrix& h,
                                             const Tolerances& tol) {
  const InvariantFingerprint fp = fingerprint(h, tol);
  for (const Complex& w : fp.cycle_weights)
    if (!weight_is_real(w, tol.reality)) return std::nullopt;
  return canonical_form(h, tol).gauge;
}

std::optional<DiagonalUnitary> conjugate_to_conjugate(
    const HermitianMatrix& h, const Tolerances& tol) {
  const std::optional<DiagonalUnitary> real_gauge = trivial_gauge(h, tol);
  if (!real_gauge) return std::nullopt;
  const DiagonalUnitary lambda = real_gauge->compose(*real_gauge);
  const double err = (gauge_conjugate(lambda, h).entries() -
                      h.entries().conjugate())
                         .cwiseAbs()
                         .maxCoeff();
  if (err > 8.0 * tol.reality * std::max(1.0, h.max_abs()))
    throw VerificationError(
        "real invariants but conjugation witness misses by " +
        std::to_string(err));
  return lambda;
}

}  // namespace chiralwalk
