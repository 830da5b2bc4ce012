#include "ltiest/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>

#include "ltiest/error.hpp"
#include "ltiest/lti.hpp"
#include "ltiest/tb.hpp"
#include "ltiest/verify.hpp"

namespace ltiest {

namespace {

using Clock = std::chrono::steady_clock;

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t mid = xs.size() / 2;
  return xs.size() % 2 ? xs[mid] : 0.5 * (xs[mid - 1] + xs[mid]);
}

double max_band_deviation(const BandStructure& lhs, const BandStructure& rhs) {
  double worst = 0.0;
  for (std::size_t n = 0; n < lhs.grid().count(); ++n)
    worst = std::max(worst, multiset_deviation(lhs.energies(n), rhs.energies(n)));
  return worst;
}

// One timed TB run and one timed LTI run; returns seconds.
std::pair<double, double> timed_pair(const BenchConfig& config, int cell_size,
                                     const KGrid& grid) {
  const SweepOptions options{config.parallel, 0};

  const auto t0 = Clock::now();
  const BandStructure tb = band_sweep(config.params, cell_size, grid, options);
  const auto t1 = Clock::now();
  const BandStructure lti = lti_band_sweep(config.params, cell_size, grid);
  const auto t2 = Clock::now();

  if (max_band_deviation(tb, lti) > kDefaultTolerance)
    throw ConsistencyError("benchmark paths disagree at M=" + std::to_string(cell_size));

  return {std::chrono::duration<double>(t1 - t0).count(),
          std::chrono::duration<double>(t2 - t1).count()};
}

}  // namespace

std::vector<BenchResult> run_bench(const BenchConfig& config) {
  if (config.repetitions < 3) throw InvalidArgument("benchmark needs at least 3 repetitions");
  if (config.cell_sizes.empty() || config.grid_sizes.empty())
    throw InvalidArgument("benchmark needs at least one cell size and grid size");

  const double tick = std::chrono::duration<double>(Clock::duration(1)).count();
  const double min_resolved = 100.0 * tick;

  std::vector<BenchResult> results;
  for (int m : config.cell_sizes) {
    for (std::size_t n : config.grid_sizes) {
      const KGrid grid(config.k_min, config.k_max, n);
      timed_pair(config, m, grid);  // warm-up

      BenchResult r;
      r.cell_size = m;
      r.grid_size = n;
      r.parallel = config.parallel;
      for (int rep = 0; rep < config.repetitions; ++rep) {
        const auto [tb, lti] = timed_pair(config, m, grid);
        r.tb_samples.push_back(tb);
        r.lti_samples.push_back(lti);
      }
      r.tb_seconds = median(r.tb_samples);
      r.lti_seconds = median(r.lti_samples);
      // Keep the speedup finite when a path runs below clock resolution.
      r.tb_seconds = std::max(r.tb_seconds, tick);
      r.lti_seconds = std::max(r.lti_seconds, tick);
      if (r.lti_seconds < min_resolved || r.tb_seconds < min_resolved)
        r.warnings.push_back("elapsed time below 100 clock ticks; widen N or repetitions");
      results.push_back(std::move(r));
    }
  }
  return results;
}

double fit_power_exponent(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw InvalidArgument("power fit needs at least two (x, y) pairs");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw InvalidArgument("power fit needs positive data");
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double n = static_cast<double>(x.size());
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw InvalidArgument("power fit needs at least two distinct x values");
  return (n * sxy - sx * sy) / denom;
}

std::vector<ScalingFit> fit_scaling(const std::vector<BenchResult>& results) {
  std::map<std::size_t, std::vector<const BenchResult*>> by_grid;
  for (const auto& r : results) by_grid[r.grid_size].push_back(&r);

  std::vector<ScalingFit> fits;
  for (const auto& [n, rows] : by_grid) {
    if (rows.size() < 2) continue;
    std::vector<double> m, tb, lti;
    for (const auto* r : rows) {
      m.push_back(r->cell_size);
      tb.push_back(r->tb_per_k());
      lti.push_back(r->lti_per_k());
    }
    fits.push_back({n, fit_power_exponent(m, tb), fit_power_exponent(m, lti)});
  }
  return fits;
}

}  // namespace ltiest
