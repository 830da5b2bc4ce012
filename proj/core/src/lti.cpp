#include "ltiest/lti.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ltiest/error.hpp"

namespace ltiest {

namespace {

// flip = false: sum_m w_m h[x - m]; flip = true: sum_m w_m h[m - x].
ConvolutionOutput accumulate(const SpikeTrain& input, const ImpulseResponse& kernel,
                             bool flip) {
  const int hw = kernel.half_width();
  const int first = input.min_position() - hw;
  const int last = input.max_position() + hw;
  std::vector<Tap> taps;
  taps.reserve(static_cast<std::size_t>(last - first + 1));
  for (int x = first; x <= last; ++x) taps.push_back({x, 0.0});
  for (const Spike& s : input.spikes()) {
    for (int d = -hw; d <= hw; ++d) {
      const double h = kernel.at(flip ? -d : d);
      taps[static_cast<std::size_t>(s.position + d - first)].value += s.weight * h;
    }
  }
  return {std::move(taps), input, kernel};
}

double branch_energy(const LatticeParams& params, int cell_size, int branch, double k) {
  const double phase = branch * std::numbers::pi / cell_size;
  return params.alpha() + 2.0 * params.beta() * std::cos(phase + params.a() * k / cell_size);
}

}  // namespace

ConvolutionOutput convolve(const SpikeTrain& input, const ImpulseResponse& kernel) {
  return accumulate(input, kernel, false);
}

ConvolutionOutput correlate(const SpikeTrain& input, const ImpulseResponse& kernel) {
  return accumulate(input, kernel, true);
}

std::complex<double> dtft(std::span<const Tap> taps, double k, double a) {
  std::complex<double> sum{};
  for (const Tap& t : taps) sum += t.value * std::polar(1.0, -k * t.offset * a);
  return sum;
}

std::complex<double> dtft(const ImpulseResponse& kernel, double k, double a) {
  std::complex<double> sum{};
  const int hw = kernel.half_width();
  for (int d = -hw; d <= hw; ++d) sum += kernel.at(d) * std::polar(1.0, -k * d * a);
  return sum;
}

std::complex<double> dtft(const SpikeTrain& input, double k, double a) {
  std::complex<double> sum{};
  for (const Spike& s : input.spikes()) sum += s.weight * std::polar(1.0, -k * s.position * a);
  return sum;
}

double dispersion_pc(const LatticeParams& params, double k) {
  return params.alpha() + 2.0 * params.beta() * std::cos(params.a() * k);
}

std::vector<int> branch_indices(int cell_size) {
  const SpikeTrain cell = canonical_cell(cell_size);
  std::vector<int> out;
  out.reserve(cell.size());
  for (const Spike& s : cell.spikes()) out.push_back(2 * s.position);
  return out;
}

BranchFormula::BranchFormula(int branch, int cell_size, LatticeParams params)
    : branch_(branch), cell_size_(cell_size), params_(params) {
  const auto valid = branch_indices(cell_size);
  if (std::find(valid.begin(), valid.end(), branch) == valid.end())
    throw InvalidArgument("branch " + std::to_string(branch) + " is not valid for cell size " +
                          std::to_string(cell_size));
}

double BranchFormula::phase() const noexcept {
  return branch_ * std::numbers::pi / cell_size_;
}

double BranchFormula::evaluate(double k) const noexcept {
  return branch_energy(params_, cell_size_, branch_, k);
}

double BranchFormula::unfolded_k(double k) const noexcept {
  return k / cell_size_ + branch_ * std::numbers::pi / (cell_size_ * params_.a());
}

std::vector<BranchEnergy> folded_bands(const LatticeParams& params, int cell_size, double k) {
  std::vector<BranchEnergy> out;
  for (int i : branch_indices(cell_size))
    out.push_back({i, branch_energy(params, cell_size, i, k)});
  return out;
}

std::complex<double> fourier_of_output(const ConvolutionOutput& output, double k, double a) {
  return dtft(output.kernel, k, a) * dtft(output.source, k, a);
}

double fold_trace(const LatticeParams& params, int cell_size, double k, int branch) {
  return BranchFormula(branch, cell_size, params).unfolded_k(k);
}

BandStructure lti_band_sweep(const LatticeParams& params, int cell_size, const KGrid& grid) {
  std::vector<BranchFormula> formulas;
  for (int i : branch_indices(cell_size)) formulas.emplace_back(i, cell_size, params);
  std::vector<std::vector<BandLevel>> levels(grid.count());
  for (std::size_t n = 0; n < grid.count(); ++n) {
    auto& at_k = levels[n];
    at_k.reserve(formulas.size());
    for (const auto& f : formulas)
      at_k.push_back({f.evaluate(grid[n]), BranchLabel::branch(f.branch())});
  }
  return {grid, std::move(levels), Engine::kLti, params, cell_size};
}

}  // namespace ltiest
