#include "ltiest/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>

#include "ltiest/error.hpp"
#include "ltiest/lti.hpp"
#include "ltiest/tb.hpp"

namespace ltiest {

double multiset_deviation(std::vector<double> lhs, std::vector<double> rhs) {
  if (lhs.size() != rhs.size()) throw InvalidArgument("multisets differ in size");
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  double worst = 0.0;
  for (std::size_t i = 0; i < lhs.size(); ++i) worst = std::max(worst, std::abs(lhs[i] - rhs[i]));
  return worst;
}

namespace {

void require_positive(double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("tolerance must be > 0");
}

EquivalenceReport finish(int cell_size, const KGrid& grid, double tol,
                         std::vector<double> deviations) {
  const double worst =
      deviations.empty() ? 0.0 : *std::max_element(deviations.begin(), deviations.end());
  return {cell_size, grid, tol, std::move(deviations), worst};
}

}  // namespace

EquivalenceReport compare_engines(const LatticeParams& params, int cell_size,
                                  const KGrid& grid, double tol) {
  require_positive(tol);
  std::vector<double> deviations;
  deviations.reserve(grid.count());
  for (double k : grid.points()) {
    try {
      std::vector<double> analytic;
      for (const auto& b : folded_bands(params, cell_size, k)) analytic.push_back(b.energy);
      const auto diag = eigenvalues_hermitian(build_hamiltonian(params, cell_size, k));
      deviations.push_back(multiset_deviation(std::move(analytic), diag));
    } catch (const InvalidArgument&) {
      throw;
    } catch (const std::exception& e) {
      throw ConsistencyError("engine failure at k=" + std::to_string(k) + ": " + e.what());
    }
  }
  return finish(cell_size, grid, tol, std::move(deviations));
}

EquivalenceReport verify_fd_mapping(const LatticeParams& params, const KGrid& grid, double tol) {
  require_positive(tol);
  const FDParams fd = fd_params_from_lattice(params);
  std::vector<double> deviations;
  deviations.reserve(grid.count());
  for (double k : grid.points())
    deviations.push_back(std::abs(fd_dispersion(fd, k, params.a()) - dispersion_pc(params, k)));
  return finish(1, grid, tol, std::move(deviations));
}

double FoldTraceReport::max_residual() const noexcept {
  double worst = 0.0;
  for (const auto& b : branches) worst = std::max(worst, b.max_residual);
  return worst;
}

FoldTraceReport trace_folding(const LatticeParams& params, int cell_size, const KGrid& grid) {
  FoldTraceReport report;
  report.cell_size = cell_size;
  for (int i : branch_indices(cell_size)) {
    const BranchFormula formula(i, cell_size, params);
    BranchTrace trace;
    trace.branch = i;
    trace.k.reserve(grid.count());
    trace.k_primitive.reserve(grid.count());
    for (double k : grid.points()) {
      const double k_pc = fold_trace(params, cell_size, k, i);
      trace.k.push_back(k);
      trace.k_primitive.push_back(k_pc);
      trace.max_residual =
          std::max(trace.max_residual, std::abs(formula.evaluate(k) - dispersion_pc(params, k_pc)));
    }
    report.branches.push_back(std::move(trace));
  }
  return report;
}

}  // namespace ltiest
