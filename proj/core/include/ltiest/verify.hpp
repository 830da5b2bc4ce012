#pragma once

// Cross-checks between the analytic LTI bands, the tight-binding
// diagonalization and the finite-difference dispersion, plus per-branch
// traces of how each folded band maps back onto the primitive band.

#include <span>
#include <vector>

#include "ltiest/lattice.hpp"

namespace ltiest {

inline constexpr double kDefaultTolerance = 1e-9;      // eV
inline constexpr double kFoldTraceTolerance = 1e-12;   // eV

// Largest |a_i - b_i| after sorting both. Throws InvalidArgument on a size
// mismatch.
double multiset_deviation(std::vector<double> lhs, std::vector<double> rhs);

struct EquivalenceReport {
  int cell_size = 1;
  KGrid grid;
  double tolerance = kDefaultTolerance;
  std::vector<double> deviations;  // one per grid point
  double max_abs_deviation = 0.0;

  bool pass() const noexcept { return max_abs_deviation <= tolerance; }
};

// Sorted folded_bands vs sorted eigenvalues_hermitian(build_hamiltonian) at
// every k. Throws InvalidArgument for tol <= 0; engine failures are rethrown
// as ConsistencyError naming the offending k.
EquivalenceReport compare_engines(const LatticeParams& params, int cell_size,
                                  const KGrid& grid, double tol = kDefaultTolerance);

// fd_dispersion(fd_params_from_lattice(params), k) vs dispersion_pc(params, k).
EquivalenceReport verify_fd_mapping(const LatticeParams& params, const KGrid& grid,
                                    double tol = kFoldTraceTolerance);

struct BranchTrace {
  int branch = 0;
  std::vector<double> k;             // supercell momenta
  std::vector<double> k_primitive;   // fold_trace(k)
  double max_residual = 0.0;         // max |E_i(k) - E_pc(k_primitive)|
};

struct FoldTraceReport {
  int cell_size = 1;
  std::vector<BranchTrace> branches;
  double tolerance = kFoldTraceTolerance;

  double max_residual() const noexcept;
  bool pass() const noexcept { return max_residual() <= tolerance; }
};

FoldTraceReport trace_folding(const LatticeParams& params, int cell_size,
                              const KGrid& grid);

}  // namespace ltiest
