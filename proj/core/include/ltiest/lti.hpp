#pragma once

// Band structures as the response of a linear translation-invariant system:
// a cell is a spike train, the crystal is characterised by its impulse
// response, and energies are read off the Fourier transform of the kernel.

#include <complex>
#include <span>
#include <vector>

#include "ltiest/lattice.hpp"

namespace ltiest {

struct Tap {
  int offset = 0;  // in units of a
  double value = 0.0;

  friend bool operator==(const Tap&, const Tap&) = default;
};

// Response of the chain to a spike-train input. Taps cover every offset
// from min_position - half_width to max_position + half_width, zeros kept.
struct ConvolutionOutput {
  std::vector<Tap> taps;
  SpikeTrain source;
  ImpulseResponse kernel;
};

// o[x] = sum_m w_m h[x - m]
ConvolutionOutput convolve(const SpikeTrain& input, const ImpulseResponse& kernel);

// o[x] = sum_m w_m h[m - x]. Equal to convolve() tap for tap whenever the
// kernel is symmetric, which ImpulseResponse guarantees.
ConvolutionOutput correlate(const SpikeTrain& input, const ImpulseResponse& kernel);

// Direct-summation DTFT: sum_n x[n] exp(-j k n a).
std::complex<double> dtft(std::span<const Tap> taps, double k, double a = 1.0);
std::complex<double> dtft(const ImpulseResponse& kernel, double k, double a = 1.0);
std::complex<double> dtft(const SpikeTrain& input, double k, double a = 1.0);

// alpha + 2 beta cos(a k)
double dispersion_pc(const LatticeParams& params, double k);

// Branch indices i = 2m over the positions m of canonical_cell(cell_size).
// {0} for M=1, {0,2} for M=2, {-2,0,2} for M=3, {-2,0,2,4} for M=4.
std::vector<int> branch_indices(int cell_size);

// One folded branch E_i(k) = alpha + 2 beta cos(i pi / M + a k / M).
class BranchFormula {
 public:
  // Throws InvalidArgument if cell_size < 1 or branch is not in
  // branch_indices(cell_size).
  BranchFormula(int branch, int cell_size, LatticeParams params);

  int branch() const noexcept { return branch_; }
  int cell_size() const noexcept { return cell_size_; }
  const LatticeParams& params() const noexcept { return params_; }

  double phase() const noexcept;
  double evaluate(double k) const noexcept;
  // Primitive-cell momentum this branch samples: k/M + i pi / (M a).
  double unfolded_k(double k) const noexcept;

 private:
  int branch_;
  int cell_size_;
  LatticeParams params_;
};

struct BranchEnergy {
  int branch = 0;
  double energy = 0.0;
};

// All M branch energies at supercell momentum k, in branch_indices order.
std::vector<BranchEnergy> folded_bands(const LatticeParams& params, int cell_size,
                                       double k);

// H[k] * sum_m w_m exp(-j k m a), the product form of the transformed
// response. By the convolution theorem this equals dtft(output.taps, k, a).
std::complex<double> fourier_of_output(const ConvolutionOutput& output, double k,
                                       double a = 1.0);

// k/M + i pi / (M a); dispersion_pc there equals branch i of folded_bands.
// Throws InvalidArgument for a branch index not valid for cell_size.
double fold_trace(const LatticeParams& params, int cell_size, double k, int branch);

// Evaluates folded_bands on every grid point.
BandStructure lti_band_sweep(const LatticeParams& params, int cell_size,
                             const KGrid& grid);

}  // namespace ltiest
