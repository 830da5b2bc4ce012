#pragma once

// Wall-clock comparison of the per-k diagonalization sweep against the
// analytic branch evaluation on identical grids.

#include <cstddef>
#include <string>
#include <vector>

#include "ltiest/lattice.hpp"

namespace ltiest {

struct BenchConfig {
  LatticeParams params = LatticeParams::reference();
  std::vector<int> cell_sizes{4};
  std::vector<std::size_t> grid_sizes{256};
  double k_min = 0.0;
  double k_max = 3.14159265358979323846;
  int repetitions = 5;  // timed runs, after one untimed warm-up
  bool parallel = false;
};

struct BenchResult {
  int cell_size = 1;
  std::size_t grid_size = 0;
  double tb_seconds = 0.0;   // median over repetitions
  double lti_seconds = 0.0;  // median over repetitions
  std::vector<double> tb_samples;
  std::vector<double> lti_samples;
  bool parallel = false;
  std::vector<std::string> warnings;

  double speedup() const noexcept { return tb_seconds / lti_seconds; }
  double tb_per_k() const noexcept { return tb_seconds / static_cast<double>(grid_size); }
  double lti_per_k() const noexcept { return lti_seconds / static_cast<double>(grid_size); }
};

// One result per (cell size, grid size) pair, cell sizes outermost. Every
// timed run checks the two spectra agree to kDefaultTolerance and throws
// ConsistencyError otherwise. repetitions < 3 is InvalidArgument.
std::vector<BenchResult> run_bench(const BenchConfig& config);

// Least-squares slope of log(y) against log(x).
double fit_power_exponent(const std::vector<double>& x, const std::vector<double>& y);

struct ScalingFit {
  std::size_t grid_size = 0;
  double tb_exponent = 0.0;
  double lti_exponent = 0.0;
};

// Per-k cost exponents in M for each grid size present in results.
std::vector<ScalingFit> fit_scaling(const std::vector<BenchResult>& results);

}  // namespace ltiest
