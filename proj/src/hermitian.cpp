#include "chiralwalk/hermitian.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <utility>

namespace chiralwalk {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2.0;
// Spectral reconstruction must satisfy |VΛV† - H|_max <= kSpectralTol·|H|_max·n.
constexpr double kSpectralTol = 1e-10;
}  // namespace

double principal_angle(double a) {
  double r = std::remainder(a, 2.0 * kPi);
  if (r <= -kPi) r = kPi;
  return r;
}

Complex phase_unit(double phase) {
  if (phase == 0.0) return {1.0, 0.0};
  if (phase == kPi) return {-1.0, 0.0};
  if (phase == kHalfPi) return {0.0, 1.0};
  if (phase == -kHalfPi) return {0.0, -1.0};
  return std::polar(1.0, phase);
}

HermitianMatrix::HermitianMatrix(Eigen::MatrixXcd m) : entries_(std::move(m)) {
  max_abs_ = entries_.size() > 0 ? entries_.cwiseAbs().maxCoeff() : 0.0;
}

HermitianMatrix HermitianMatrix::trusted(Eigen::MatrixXcd m) {
  return HermitianMatrix(std::move(m));
}

UnitaryMatrix UnitaryMatrix::validated(Eigen::MatrixXcd m, double tol) {
  const Eigen::MatrixXcd gram = m.adjoint() * m;
  const int n = static_cast<int>(m.rows());
  double dev = 0.0;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const Complex expected = j == k ? Complex(1, 0) : Complex(0, 0);
      dev = std::max(dev, std::abs(gram(j, k) - expected));
    }
  if (dev > tol) throw UnitarityError(dev);
  return UnitaryMatrix(std::move(m));
}

UnitaryMatrix UnitaryMatrix::trusted(Eigen::MatrixXcd m) {
  return UnitaryMatrix(std::move(m));
}

DiagonalUnitary::DiagonalUnitary(std::vector<double> phases)
    : phases_(std::move(phases)) {
  for (double& p : phases_) p = principal_angle(p);
}

DiagonalUnitary DiagonalUnitary::identity(int n) {
  return DiagonalUnitary(std::vector<double>(n, 0.0));
}

DiagonalUnitary DiagonalUnitary::inverse() const {
  std::vector<double> neg(phases_.size());
  for (size_t j = 0; j < phases_.size(); ++j) neg[j] = -phases_[j];
  return DiagonalUnitary(std::move(neg));
}

DiagonalUnitary DiagonalUnitary::compose(const DiagonalUnitary& other) const {
  if (dim() != other.dim())
    throw DimensionMismatchError(dim(), other.dim());
  std::vector<double> sum(phases_.size());
  for (size_t j = 0; j < phases_.size(); ++j)
    sum[j] = phases_[j] + other.phases_[j];
  return DiagonalUnitary(std::move(sum));
}

HermitianMatrix validate_hermitian(const Eigen::MatrixXcd& raw, double tol) {
  if (raw.rows() != raw.cols()) throw NonSquareError(raw.rows(), raw.cols());
  const int n = static_cast<int>(raw.rows());
  const double scale = raw.size() > 0 ? raw.cwiseAbs().maxCoeff() : 0.0;
  const double threshold = tol * scale;

  double worst = 0.0;
  int worst_j = 0, worst_k = 0;
  for (int j = 0; j < n; ++j)
    for (int k = j; k < n; ++k) {
      const double asym = std::abs(raw(j, k) - std::conj(raw(k, j)));
      if (asym > worst) {
        worst = asym;
        worst_j = j;
        worst_k = k;
      }
    }
  if (worst > threshold)
    throw HermiticityError(worst_j, worst_k, worst, threshold);

  // Midpoint of each conjugate pair; exactly Hermitian, real diagonal.
  Eigen::MatrixXcd sym = (raw + raw.adjoint()) / 2.0;
  return HermitianMatrix::trusted(std::move(sym));
}

SpectralDecomposition spectral(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.entries());
  if (solver.info() != Eigen::Success)
    throw ConvergenceError("eigensolver did not converge");

  const Eigen::MatrixXcd& v = solver.eigenvectors();
  const Eigen::VectorXd& lambda = solver.eigenvalues();
  const Eigen::MatrixXcd rebuilt =
      v * lambda.asDiagonal() * v.adjoint();
  const double err = (rebuilt - h.entries()).cwiseAbs().maxCoeff();
  const double bound = kSpectralTol * h.max_abs() * h.dim();
  if (err > bound && err > 0.0)
    throw ConvergenceError("spectral reconstruction error " +
                           std::to_string(err) + " exceeds bound " +
                           std::to_string(bound));
  return {lambda, UnitaryMatrix::validated(v)};
}

Propagator::Propagator(const HermitianMatrix& h) {
  SpectralDecomposition d = spectral(h);
  eigenvalues_ = std::move(d.eigenvalues);
  vectors_ = d.eigenvectors.entries();
}

Eigen::MatrixXcd Propagator::at(double t) const {
  const int n = dim();
  Eigen::VectorXcd phases(n);
  for (int k = 0; k < n; ++k) phases(k) = std::polar(1.0, -t * eigenvalues_(k));
  return vectors_ * phases.asDiagonal() * vectors_.adjoint();
}

Eigen::MatrixXd Propagator::probabilities(double t) const {
  return at(t).cwiseAbs2();
}

Eigen::MatrixXd Propagator::current(double t) const {
  const Eigen::MatrixXd p = probabilities(t);
  return p.transpose() - p;
}

UnitaryMatrix evolve(const HermitianMatrix& h, double t) {
  if (!std::isfinite(t)) throw Error("evolution time must be finite");
  return UnitaryMatrix::validated(Propagator(h).at(t));
}

Eigen::MatrixXd transition_probabilities(const UnitaryMatrix& u) {
  return u.entries().cwiseAbs2();
}

Eigen::MatrixXd quantum_probability_current(const HermitianMatrix& h,
                                            double t) {
  return Propagator(h).current(t);
}

HermitianMatrix gauge_conjugate(const DiagonalUnitary& gauge,
                                const HermitianMatrix& h) {
  if (gauge.dim() != h.dim())
    throw DimensionMismatchError(gauge.dim(), h.dim());
  const int n = h.dim();
  Eigen::MatrixXcd out(n, n);
  for (int j = 0; j < n; ++j) {
    out(j, j) = h(j, j);
    const Complex uj = gauge.unit(j);
    for (int k = j + 1; k < n; ++k) {
      const Complex w = uj * std::conj(gauge.unit(k));
      const Complex z = w * h(j, k);
      out(j, k) = z;
      out(k, j) = std::conj(z);
    }
  }
  return HermitianMatrix::trusted(std::move(out));
}

DiagonalSplit diagonal_split(const HermitianMatrix& h, double tol) {
  const int n = h.dim();
  Eigen::VectorXd d = h.entries().diagonal().real();
  Eigen::MatrixXcd hopping = h.entries();
  hopping.diagonal().setZero();

  const double mean = n > 0 ? d.mean() : 0.0;
  double spread = 0.0;
  for (int j = 0; j < n; ++j) spread = std::max(spread, std::abs(d(j) - mean));
  const bool uniform = spread <= tol * std::max(1.0, h.max_abs());
  return {HermitianMatrix::trusted(std::move(hopping)), std::move(d), uniform,
          mean};
}

}  // namespace chiralwalk
