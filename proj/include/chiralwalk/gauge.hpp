#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "chiralwalk/hermitian.hpp"
#include "chiralwalk/support_graph.hpp"

namespace chiralwalk {

/// Entry phases arg(H_jk) on support edges, zero elsewhere. Skew-symmetric
/// modulo 2π (both halves live in the principal range, so an entry of π
/// mirrors to π rather than -π).
struct GaugePotential {
  Eigen::MatrixXd theta;
};

GaugePotential gauge_potential(const HermitianMatrix& h,
                               const SupportGraph& g);
GaugePotential gauge_potential(const HermitianMatrix& h);

/// Product of matrix entries along a closed walk; loops contribute the
/// diagonal entry. Throws StepOffSupportError when a step leaves the support.
Complex cycle_weight(const HermitianMatrix& h, const SupportGraph& g,
                     const CycleWalk& c);
Complex cycle_weight(const HermitianMatrix& h, const CycleWalk& c);

/// Principal argument of the cycle weight. Throws ZeroWeightError when the
/// weight vanishes.
double ab_phase(const HermitianMatrix& h, const SupportGraph& g,
                const CycleWalk& c);
double ab_phase(const HermitianMatrix& h, const CycleWalk& c);

/// Everything that separates gauge orbits: edge moduli, the (real) diagonal,
/// and the fundamental-cycle weights in canonical order.
struct InvariantFingerprint {
  std::vector<std::pair<Edge, double>> moduli;  // sorted by edge
  Eigen::VectorXd diagonal;
  std::vector<CycleWalk> cycles;
  std::vector<Complex> cycle_weights;
};

/// Orbit representative: spanning-tree entries rotated real nonnegative, all
/// phase data pushed onto the chords. `gauge` maps the input to `matrix`.
struct CanonicalForm {
  HermitianMatrix matrix;
  DiagonalUnitary gauge;
};

/// Root phase 0 per component, phases propagated along the deterministic
/// spanning forest. Idempotent: running it on its own output yields the
/// identity gauge.
CanonicalForm canonical_form(const HermitianMatrix& h,
                             const Tolerances& tol = {});

InvariantFingerprint fingerprint(const HermitianMatrix& h,
                                 const Tolerances& tol = {});

/// A verified gauge taking `a` to `b` when all invariants agree; absent
/// otherwise. Throws VerificationError if the fingerprints match but the
/// reconstruction misses the tolerance.
std::optional<DiagonalUnitary> gauge_equivalent(const HermitianMatrix& a,
                                                const HermitianMatrix& b,
                                                const Tolerances& tol = {});

/// A gauge taking H to a real matrix, present iff every fundamental-cycle
/// weight is real within the relative reality tolerance.
std::optional<DiagonalUnitary> trivial_gauge(const HermitianMatrix& h,
                                             const Tolerances& tol = {});

/// A gauge taking H to its entrywise conjugate; present exactly when a
/// trivial gauge is (the real-form gauge applied twice).
std::optional<DiagonalUnitary> conjugate_to_conjugate(
    const HermitianMatrix& h, const Tolerances& tol = {});

}  // namespace chiralwalk
