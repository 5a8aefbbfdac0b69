#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "chiralwalk/errors.hpp"

namespace chiralwalk {

using Complex = std::complex<double>;

/// Tolerance knobs shared across the library. Tolerances marked "relative"
/// are scaled by the max entry modulus of the matrix they are applied to.
struct Tolerances {
  double hermiticity = 1e-9;       // relative; accepted input asymmetry
  double unitarity = 1e-9;         // absolute; max deviation of U†U from I
  double support = 1e-12;          // relative; edge cutoff on |H_jk|
  double reality = 1e-8;           // relative; |Im w| vs |w| for invariants
  double uniform_diagonal = 1e-9;  // relative; spread allowed around the mean
  double equivalence = 1e-9;       // relative; fingerprint comparisons
  double current_floor = 1e-8;     // absolute; scan value compatible with zero
  double witness_threshold = 1e-6; // absolute; scan value counted as a witness
};

/// Wraps an angle into the principal range (-pi, pi].
double principal_angle(double a);

/// e^{i*phase}, exact for the lattice phases 0, ±pi/2 and pi.
Complex phase_unit(double phase);

/// Dense n x n complex matrix validated (and symmetrized) to be Hermitian.
class HermitianMatrix {
 public:
  int dim() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXcd& entries() const { return entries_; }
  Complex operator()(int j, int k) const { return entries_(j, k); }
  double max_abs() const { return max_abs_; }

  /// Construction bypassing validation; the caller guarantees hermiticity.
  static HermitianMatrix trusted(Eigen::MatrixXcd m);

 private:
  explicit HermitianMatrix(Eigen::MatrixXcd m);
  Eigen::MatrixXcd entries_;
  double max_abs_;
};

class UnitaryMatrix {
 public:
  int dim() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXcd& entries() const { return entries_; }
  Complex operator()(int j, int k) const { return entries_(j, k); }

  static UnitaryMatrix validated(Eigen::MatrixXcd m, double tol = 1e-9);
  static UnitaryMatrix trusted(Eigen::MatrixXcd m);

 private:
  explicit UnitaryMatrix(Eigen::MatrixXcd m) : entries_(std::move(m)) {}
  Eigen::MatrixXcd entries_;
};

/// Diagonal unitary gauge element, stored as phases in (-pi, pi].
class DiagonalUnitary {
 public:
  explicit DiagonalUnitary(std::vector<double> phases);
  static DiagonalUnitary identity(int n);

  int dim() const { return static_cast<int>(phases_.size()); }
  const std::vector<double>& phases() const { return phases_; }
  double phase(int j) const { return phases_[j]; }
  Complex unit(int j) const { return phase_unit(phases_[j]); }

  DiagonalUnitary inverse() const;
  /// Composition (this ∘ other): phases add entrywise.
  DiagonalUnitary compose(const DiagonalUnitary& other) const;

 private:
  std::vector<double> phases_;
};

struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;  // ascending
  UnitaryMatrix eigenvectors;   // columns
};

/// Validates a raw square complex array as Hermitian within `tol` (relative
/// to the max entry modulus) and returns the symmetrized (H + H†)/2.
/// Throws NonSquareError or HermiticityError (reporting the worst entry).
HermitianMatrix validate_hermitian(const Eigen::MatrixXcd& raw,
                                   double tol = 1e-9);

/// Eigendecomposition H = V diag(λ) V†, eigenvalues ascending.
SpectralDecomposition spectral(const HermitianMatrix& h);

/// Propagator U(t) = e^{-itH} evaluated from a cached eigendecomposition.
/// Evaluations at different times are independent and thread-safe.
class Propagator {
 public:
  explicit Propagator(const HermitianMatrix& h);
  int dim() const { return static_cast<int>(eigenvalues_.size()); }

  Eigen::MatrixXcd at(double t) const;
  /// Squared moduli |U(t)_{fs}|^2; entry (f, s) is the s -> f probability.
  Eigen::MatrixXd probabilities(double t) const;
  /// Probability current J(s, f) = P_{s->f} - P_{f->s}; antisymmetric.
  Eigen::MatrixXd current(double t) const;

 private:
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXcd vectors_;
};

/// U(t) = e^{-itH} via the spectral route; unitary by construction.
UnitaryMatrix evolve(const HermitianMatrix& h, double t);

/// P(f, s) = |U(f, s)|^2. Columns sum to one for unitary input.
Eigen::MatrixXd transition_probabilities(const UnitaryMatrix& u);

/// J(s, f) = |U(f, s)|^2 - |U(s, f)|^2, antisymmetric as computed.
Eigen::MatrixXd quantum_probability_current(const HermitianMatrix& h,
                                            double t);

/// The gauge action: result_{jk} = e^{i(φ_j - φ_k)} H_{jk}. The diagonal is
/// copied verbatim and conjugate pairs are built from a single factor, so
/// hermiticity and entry moduli survive exactly.
HermitianMatrix gauge_conjugate(const DiagonalUnitary& gauge,
                                const HermitianMatrix& h);

struct DiagonalSplit {
  HermitianMatrix hopping;   // H with the diagonal zeroed
  Eigen::VectorXd diagonal;  // real diagonal entries
  bool uniform;              // spread around the mean within tolerance
  double shift;              // the mean; meaningful when uniform
};

/// Splits H = H0 + diag(d); `uniform` holds iff max_j |d_j - mean| stays
/// within `tol` scaled by the matrix magnitude.
DiagonalSplit diagonal_split(const HermitianMatrix& h, double tol = 1e-9);

}  // namespace chiralwalk
