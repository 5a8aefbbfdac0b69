// Compares the OpenMP scan against the serial reference on a random dense
// Hamiltonian: results must match exactly, timings are reported either way.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "chiralwalk/time_symmetry.hpp"

using namespace chiralwalk;

namespace {

HermitianMatrix random_hermitian(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::MatrixXcd m(n, n);
  for (int j = 0; j < n; ++j) {
    m(j, j) = Complex(u(rng), 0.0);
    for (int k = j + 1; k < n; ++k) {
      m(j, k) = Complex(u(rng), u(rng));
      m(k, j) = std::conj(m(j, k));
    }
  }
  return HermitianMatrix::trusted(std::move(m));
}

double seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch())
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 48;
  const int points = argc > 2 ? std::atoi(argv[2]) : 2001;
  const int reps = argc > 3 ? std::atoi(argv[3]) : 3;

  const HermitianMatrix h = random_hermitian(n, 20240901);
  const std::vector<double> grid = default_grid(h, 10.0, points);

#ifdef _OPENMP
  std::printf("n=%d points=%d reps=%d threads=%d\n", n, points, reps,
              omp_get_max_threads());
#else
  std::printf("n=%d points=%d reps=%d (no OpenMP)\n", n, points, reps);
#endif

  double t_serial = 1e300, t_parallel = 1e300;
  ScanReport serial, parallel;
  for (int r = 0; r < reps; ++r) {
    double t0 = seconds();
    serial = scan_serial(h, grid);
    t_serial = std::min(t_serial, seconds() - t0);

    t0 = seconds();
    parallel = scan(h, grid);
    t_parallel = std::min(t_parallel, seconds() - t0);
  }

  const bool match = serial.max_current == parallel.max_current &&
                     serial.argmax_source == parallel.argmax_source &&
                     serial.argmax_target == parallel.argmax_target &&
                     serial.argmax_time == parallel.argmax_time &&
                     serial.argmax_value == parallel.argmax_value;

  std::printf("max |J| = %.15g at (s=%d, f=%d, t=%.9g)\n", serial.max_current,
              serial.argmax_source, serial.argmax_target, serial.argmax_time);
  std::printf("serial   %.4f s\n", t_serial);
  std::printf("parallel %.4f s\n", t_parallel);
  std::printf("speedup  %.2fx\n", t_serial / t_parallel);
  std::printf("results %s\n", match ? "match" : "DIFFER");
  return match ? 0 : 1;
}
