#pragma once

#include <optional>
#include <vector>

#include "chiralwalk/gauge.hpp"
#include "chiralwalk/hermitian.hpp"
#include "chiralwalk/support_graph.hpp"

namespace chiralwalk {

enum class Verdict {
  SymmetricTrivialGauge,  // every component conjugate to a real matrix
  SymmetricBipartite,     // every component bipartite with uniform diagonal
  SymmetricBoth,          // both routes hold, or symmetric via mixed routes
  Asymmetric,
};

const char* verdict_name(Verdict v);

/// Grid point where the probability current was observed nonzero.
struct NumericWitness {
  int source = 0;
  int target = 0;
  double t = 0.0;
  double value = 0.0;  // signed J(source, target) at t
};

struct ScanReport {
  std::vector<double> grid;
  double max_current = 0.0;    // |value| at the argmax
  int argmax_source = 0;
  int argmax_target = 0;
  double argmax_time = 0.0;
  double argmax_value = 0.0;   // signed
};

/// How the numeric scan relates to the algebraic verdict. The verdict never
/// moves because of the scan; a mismatch only raises a flag.
enum class ScanAgreement { NotRun, Agrees, Inconclusive, Disagrees };

const char* scan_agreement_name(ScanAgreement a);

struct ComponentReport {
  std::vector<int> vertices;
  bool trivial_route = false;     // all component cycle weights real
  bool bipartite_route = false;   // uniform diagonal and bipartite edges
  bool uniform_diagonal = false;
  std::optional<double> alpha;    // mean diagonal, when uniform
  std::optional<CycleWalk> odd_cycle;
  bool symmetric() const { return trivial_route || bipartite_route; }
};

struct Classification {
  Verdict verdict = Verdict::Asymmetric;
  std::optional<DiagonalUnitary> real_gauge;  // when all components route 1
  std::optional<DiagonalUnitary> sign_gauge;  // when all components route 2
  std::optional<double> shift;                // global uniform diagonal mean
  std::optional<NumericWitness> witness;
  std::vector<ComponentReport> components;
  std::optional<ScanReport> scan;
  ScanAgreement scan_agreement = ScanAgreement::NotRun;

  bool symmetric() const { return verdict != Verdict::Asymmetric; }
  bool flagged() const {
    return scan_agreement == ScanAgreement::Inconclusive ||
           scan_agreement == ScanAgreement::Disagrees;
  }
};

struct ClassifyOptions {
  Tolerances tol;
  bool run_scan = true;
  std::optional<std::vector<double>> grid;  // default: scaled (0, 10] x 2001
};

/// Sign gauge Λ with ΛHΛ† = -H, present iff the support is bipartite.
/// Requires a (tolerance-)zero diagonal; throws NonzeroDiagonalError.
std::optional<DiagonalUnitary> conjugate_to_negative(
    const HermitianMatrix& h, const Tolerances& tol = {});

/// The classifier. Per component: route 1 = conjugate to a real matrix,
/// route 2 = uniform diagonal with bipartite hopping. Symmetric iff every
/// component passes a route; otherwise Asymmetric with a scan witness.
Classification classify(const HermitianMatrix& h,
                        const ClassifyOptions& opts = {});

/// Uniform grid of `points` times on (0, t_max], scaled by 1/max|H| so the
/// window covers several dynamical periods regardless of units.
std::vector<double> default_grid(const HermitianMatrix& h,
                                 double t_max = 10.0, int points = 2001);

/// Max |J(t)| over the grid with its argmax; grid points are evaluated in
/// parallel and combined so the result matches the serial reference exactly.
ScanReport scan(const HermitianMatrix& h, const std::vector<double>& grid);

/// Single-threaded reference for the parallel scan.
ScanReport scan_serial(const HermitianMatrix& h,
                       const std::vector<double>& grid);

/// True iff transition probabilities cannot depend on the entry phases,
/// i.e. the loop-free support is a forest.
bool phase_independent(const HermitianMatrix& h, const Tolerances& tol = {});

/// Infinitesimal generator of a continuous-time Markov process:
/// nonnegative off-diagonal, rows summing to zero.
struct StochasticGenerator {
  Eigen::MatrixXd entries;
  int dim() const { return static_cast<int>(entries.rows()); }
  static StochasticGenerator validated(Eigen::MatrixXd m, double tol = 1e-9);
};

/// current(s, f) = (e^{tS})_{fs} - (e^{tS})_{sf}, t >= 0.
Eigen::MatrixXd stochastic_current(const StochasticGenerator& s, double t);

/// current(s, f) = U(t)_{fs} - U(t)_{sf}; vanishes iff H is symmetric.
Eigen::MatrixXcd amplitude_current(const HermitianMatrix& h, double t);

}  // namespace chiralwalk
