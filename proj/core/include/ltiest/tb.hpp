#pragma once

// Conventional route: Bloch supercell Hamiltonians diagonalized per k point,
// plus the finite-difference (circulant) form of the 1D Schroedinger equation.

#include <chrono>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "ltiest/lattice.hpp"

namespace ltiest {

// Dense row-major complex Hermitian matrix.
class HermitianMatrix {
 public:
  static constexpr double kTolerance = 1e-14;

  // Zero matrix.
  explicit HermitianMatrix(std::size_t dimension);
  // Throws InvalidArgument on size mismatch, a non-real diagonal, or
  // |H(i,j) - conj(H(j,i))| > kTolerance.
  HermitianMatrix(std::size_t dimension, std::vector<std::complex<double>> entries);

  std::size_t dimension() const noexcept { return dimension_; }
  const std::complex<double>& operator()(std::size_t row, std::size_t col) const noexcept {
    return entries_[row * dimension_ + col];
  }
  std::span<const std::complex<double>> entries() const noexcept { return entries_; }
  double frobenius_norm() const noexcept;

 private:
  std::size_t dimension_;
  std::vector<std::complex<double>> entries_;
};

// alpha on the diagonal, beta on the first off-diagonals, and the Bloch
// phases beta e^{+jak} at (0, M-1) and beta e^{-jak} at (M-1, 0). For M=2 the
// wrapped bond shares the off-diagonal entry with the internal bond; for M=1
// both neighbours land on the single entry alpha + 2 beta cos(ak).
HermitianMatrix build_hamiltonian(const LatticeParams& params, int cell_size, double k);

// Ascending real spectrum. Throws InvalidArgument for a matrix that is not
// Hermitian within HermitianMatrix::kTolerance and ConvergenceError if the
// Jacobi iteration does not converge.
std::vector<double> eigenvalues_hermitian(const HermitianMatrix& h);

struct SweepOptions {
  bool parallel = false;
  unsigned threads = 0;  // 0 picks hardware_concurrency
};

struct TimedBands {
  BandStructure bands;
  std::chrono::nanoseconds elapsed{};
};

// Diagonalizes build_hamiltonian at every grid point; labels are "diag#n".
TimedBands band_sweep_timed(const LatticeParams& params, int cell_size,
                            const KGrid& grid, SweepOptions options = {});
BandStructure band_sweep(const LatticeParams& params, int cell_size,
                         const KGrid& grid, SweepOptions options = {});

// Finite-difference chain: t0 = hbar^2 / (2 m* a^2), U uniform on-site.
class FDParams {
 public:
  FDParams(double t0, double potential);

  double t0() const noexcept { return t0_; }
  double potential() const noexcept { return potential_; }

 private:
  double t0_;
  double potential_;
};

// [-t0, 2 t0 + U, -t0]
ImpulseResponse fd_kernel(const FDParams& fd);

// (2 t0 + U) - 2 t0 cos(a k)
double fd_dispersion(const FDParams& fd, double k, double a = 1.0);

// Periodic N x N convolution operator: row n holds kernel tap d at column
// (n - d) mod N. Taps that wrap onto the same column accumulate.
HermitianMatrix circulant_matrix(const ImpulseResponse& kernel, std::size_t ring_size);

// Eigenvalues of circulant_matrix by DFT of its first row, ascending.
std::vector<double> circulant_dft_eigenvalues(const ImpulseResponse& kernel,
                                              std::size_t ring_size);

// Spectrum of the N-site FD ring. Computes it with the Jacobi solver and with
// the DFT of the first row and throws ConsistencyError if the two multisets
// differ by more than 1e-10; returns the DFT route. N < 3 is InvalidArgument.
std::vector<double> fd_circulant_eigs(const FDParams& fd, std::size_t ring_size);

// FD parameters reproducing the tight-binding kernel: 2 t0 + U = alpha,
// -t0 = beta.
FDParams fd_params_from_lattice(const LatticeParams& params);

// FD primitive band folded into the supercell zone: branch i = 2m evaluates
// fd_dispersion at k/M + i pi / (M a), using fd_params_from_lattice(params).
BandStructure fd_band_sweep(const LatticeParams& params, int cell_size,
                            const KGrid& grid);

namespace detail {

struct SymmetricEigensystem {
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // column j belongs to values[j]; row-major n x n
  int sweeps = 0;
};

// Cyclic Jacobi on a dense real-symmetric n x n matrix (row-major). Stops when
// the off-diagonal Frobenius norm drops below 1e-12 * ||A||_F; throws
// ConvergenceError after 100 sweeps.
SymmetricEigensystem jacobi_symmetric(std::vector<double> a, std::size_t n,
                                      bool want_vectors);

// Real embedding [[Re H, -Im H], [Im H, Re H]] of size 2M.
std::vector<double> real_embedding(const HermitianMatrix& h);

struct HermitianEigensystem {
  std::vector<double> values;                        // ascending, length M
  std::vector<std::vector<std::complex<double>>> vectors;  // one per value
};

HermitianEigensystem eigensystem_hermitian(const HermitianMatrix& h);

}  // namespace detail

}  // namespace ltiest
