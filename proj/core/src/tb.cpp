#include "ltiest/tb.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <thread>

#include "ltiest/error.hpp"
#include "ltiest/lti.hpp"
#include "ltiest/verify.hpp"

namespace ltiest {

HermitianMatrix::HermitianMatrix(std::size_t dimension)
    : dimension_(dimension), entries_(dimension * dimension) {
  if (dimension == 0) throw InvalidArgument("matrix dimension must be >= 1");
}

HermitianMatrix::HermitianMatrix(std::size_t dimension, std::vector<std::complex<double>> entries)
    : dimension_(dimension), entries_(std::move(entries)) {
  if (dimension == 0) throw InvalidArgument("matrix dimension must be >= 1");
  if (entries_.size() != dimension * dimension)
    throw InvalidArgument("entry count does not match dimension");
  for (std::size_t i = 0; i < dimension; ++i) {
    for (std::size_t j = i; j < dimension; ++j) {
      const auto hij = (*this)(i, j);
      const auto hji = (*this)(j, i);
      if (!std::isfinite(hij.real()) || !std::isfinite(hij.imag()) ||
          !std::isfinite(hji.real()) || !std::isfinite(hji.imag()))
        throw InvalidArgument("matrix entries must be finite");
      if (std::abs(hij - std::conj(hji)) > kTolerance)
        throw InvalidArgument("matrix is not Hermitian");
    }
  }
}

double HermitianMatrix::frobenius_norm() const noexcept {
  double sum = 0.0;
  for (const auto& z : entries_) sum += std::norm(z);
  return std::sqrt(sum);
}

HermitianMatrix build_hamiltonian(const LatticeParams& params, int cell_size, double k) {
  if (cell_size < 1) throw InvalidArgument("cell size must be >= 1");
  const double alpha = params.alpha();
  const double beta = params.beta();
  const auto forward = beta * std::polar(1.0, params.a() * k);
  const auto m = static_cast<std::size_t>(cell_size);
  std::vector<std::complex<double>> h(m * m);
  auto at = [&](std::size_t i, std::size_t j) -> std::complex<double>& { return h[i * m + j]; };

  if (m == 1) {
    at(0, 0) = alpha + 2.0 * beta * std::cos(params.a() * k);
    return HermitianMatrix(m, std::move(h));
  }
  for (std::size_t i = 0; i < m; ++i) at(i, i) = alpha;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    at(i, i + 1) = beta;
    at(i + 1, i) = beta;
  }
  // Wrapped bond to the neighbouring supercell.
  at(0, m - 1) += forward;
  at(m - 1, 0) += std::conj(forward);
  return HermitianMatrix(m, std::move(h));
}

TimedBands band_sweep_timed(const LatticeParams& params, int cell_size, const KGrid& grid,
                            SweepOptions options) {
  if (cell_size < 1) throw InvalidArgument("cell size must be >= 1");
  const auto start = std::chrono::steady_clock::now();

  std::vector<std::vector<BandLevel>> levels(grid.count());
  auto solve_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t n = begin; n < end; ++n) {
      const auto values = eigenvalues_hermitian(build_hamiltonian(params, cell_size, grid[n]));
      auto& at_k = levels[n];
      at_k.reserve(values.size());
      for (std::size_t r = 0; r < values.size(); ++r)
        at_k.push_back({values[r], BranchLabel::diagonal(static_cast<int>(r))});
    }
  };

  unsigned threads = 1;
  if (options.parallel) {
    threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
    threads = std::clamp<unsigned>(threads, 1u, static_cast<unsigned>(grid.count()));
  }

  if (threads == 1) {
    solve_range(0, grid.count());
  } else {
    std::vector<std::exception_ptr> errors(threads);
    {
      std::vector<std::jthread> workers;
      const std::size_t chunk = (grid.count() + threads - 1) / threads;
      for (unsigned t = 0; t < threads; ++t) {
        const std::size_t begin = std::min(grid.count(), t * chunk);
        const std::size_t end = std::min(grid.count(), begin + chunk);
        workers.emplace_back([&, t, begin, end] {
          try {
            solve_range(begin, end);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      }
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  BandStructure bands(grid, std::move(levels), Engine::kTb, params, cell_size);
  const auto elapsed = std::chrono::steady_clock::now() - start;
  return {std::move(bands), std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed)};
}

BandStructure band_sweep(const LatticeParams& params, int cell_size, const KGrid& grid,
                         SweepOptions options) {
  return band_sweep_timed(params, cell_size, grid, options).bands;
}

FDParams::FDParams(double t0, double potential) : t0_(t0), potential_(potential) {
  if (!std::isfinite(t0)) throw InvalidArgument("t0 must be finite");
  if (!std::isfinite(potential)) throw InvalidArgument("U must be finite");
}

ImpulseResponse fd_kernel(const FDParams& fd) {
  return ImpulseResponse({-fd.t0(), 2.0 * fd.t0() + fd.potential(), -fd.t0()});
}

double fd_dispersion(const FDParams& fd, double k, double a) {
  return (2.0 * fd.t0() + fd.potential()) - 2.0 * fd.t0() * std::cos(a * k);
}

HermitianMatrix circulant_matrix(const ImpulseResponse& kernel, std::size_t ring_size) {
  if (ring_size == 0) throw InvalidArgument("ring size must be >= 1");
  const auto n = static_cast<long>(ring_size);
  const int hw = kernel.half_width();
  std::vector<std::complex<double>> c(ring_size * ring_size);
  for (long row = 0; row < n; ++row) {
    for (int d = -hw; d <= hw; ++d) {
      const long col = ((row - d) % n + n) % n;
      c[static_cast<std::size_t>(row * n + col)] += kernel.at(d);
    }
  }
  return HermitianMatrix(ring_size, std::move(c));
}

std::vector<double> circulant_dft_eigenvalues(const ImpulseResponse& kernel,
                                              std::size_t ring_size) {
  if (ring_size == 0) throw InvalidArgument("ring size must be >= 1");
  std::vector<double> out;
  out.reserve(ring_size);
  const int hw = kernel.half_width();
  for (std::size_t p = 0; p < ring_size; ++p) {
    const double k = 2.0 * std::numbers::pi * static_cast<double>(p) /
                     static_cast<double>(ring_size);
    std::complex<double> lambda{};
    for (int d = -hw; d <= hw; ++d) lambda += kernel.at(d) * std::polar(1.0, -k * d);
    if (std::abs(lambda.imag()) > 1e-10)
      throw ConsistencyError("symmetric kernel produced a complex DFT eigenvalue");
    out.push_back(lambda.real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> fd_circulant_eigs(const FDParams& fd, std::size_t ring_size) {
  if (ring_size < 3) throw InvalidArgument("FD ring needs at least 3 sites");
  const ImpulseResponse kernel = fd_kernel(fd);
  const auto jacobi = eigenvalues_hermitian(circulant_matrix(kernel, ring_size));
  auto dft = circulant_dft_eigenvalues(kernel, ring_size);
  if (multiset_deviation(jacobi, dft) > 1e-10)
    throw ConsistencyError("circulant spectrum: Jacobi and DFT routes disagree");
  return dft;
}

FDParams fd_params_from_lattice(const LatticeParams& params) {
  const double t0 = -params.beta();
  return {t0, params.alpha() - 2.0 * t0};
}

BandStructure fd_band_sweep(const LatticeParams& params, int cell_size, const KGrid& grid) {
  const FDParams fd = fd_params_from_lattice(params);
  const auto branches = branch_indices(cell_size);
  std::vector<std::vector<BandLevel>> levels(grid.count());
  for (std::size_t n = 0; n < grid.count(); ++n) {
    for (int i : branches) {
      const double k_pc = fold_trace(params, cell_size, grid[n], i);
      levels[n].push_back({fd_dispersion(fd, k_pc, params.a()), BranchLabel::branch(i)});
    }
  }
  return {grid, std::move(levels), Engine::kFd, params, cell_size};
}

}  // namespace ltiest
