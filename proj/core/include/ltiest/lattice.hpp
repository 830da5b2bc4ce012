#pragma once

// Domain types shared by every band-structure engine: the tight-binding
// parameters of a 1D chain, spike-train cells, the nearest-neighbour
// impulse response, uniform k grids and the band-structure container.
//
// Units: energies are eV, k is radians per lattice unit, positions are
// integer multiples of the lattice constant a.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ltiest {

class LatticeParams {
 public:
  // Throws InvalidArgument unless alpha, beta are finite and a > 0.
  LatticeParams(double alpha, double beta, double a = 1.0);

  // alpha = -0.17 eV, beta = -0.24 eV, a = 1.
  static LatticeParams reference();

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double a() const noexcept { return a_; }

  // Closed interval every nearest-neighbour band lies in.
  double band_min() const noexcept;
  double band_max() const noexcept;

  friend bool operator==(const LatticeParams&, const LatticeParams&) = default;

 private:
  double alpha_;
  double beta_;
  double a_;
};

struct Spike {
  int position = 0;  // in units of a
  double weight = 1.0;

  friend bool operator==(const Spike&, const Spike&) = default;
};

// A unit or super cell written as a sum of weighted deltas.
class SpikeTrain {
 public:
  // Throws InvalidArgument if empty, positions not strictly increasing, or a
  // weight is not finite.
  explicit SpikeTrain(std::vector<Spike> spikes);

  std::span<const Spike> spikes() const noexcept { return spikes_; }
  std::size_t size() const noexcept { return spikes_.size(); }
  int min_position() const noexcept { return spikes_.front().position; }
  int max_position() const noexcept { return spikes_.back().position; }

  friend bool operator==(const SpikeTrain&, const SpikeTrain&) = default;

 private:
  std::vector<Spike> spikes_;
};

// Contiguous unit-weight cell of size M with the origin included and the
// positive side at least as long as the negative one:
// positions [-floor((M-1)/2), ceil((M-1)/2)].
SpikeTrain canonical_cell(int cell_size);

// Odd-length symmetric kernel centred at offset 0.
class ImpulseResponse {
 public:
  // Throws InvalidArgument unless taps has odd length, is finite, and is
  // exactly symmetric.
  explicit ImpulseResponse(std::vector<double> taps);

  std::span<const double> taps() const noexcept { return taps_; }
  int half_width() const noexcept { return static_cast<int>(taps_.size() / 2); }
  // Tap at integer offset d in [-half_width, half_width]; zero outside.
  double at(int offset) const noexcept;

  friend bool operator==(const ImpulseResponse&, const ImpulseResponse&) = default;

 private:
  std::vector<double> taps_;
};

// [beta, alpha, beta]
ImpulseResponse nn_kernel(const LatticeParams& params);

class KGrid {
 public:
  // Inclusive uniform grid. Throws InvalidArgument if count < 2,
  // k_min >= k_max, or either bound is not finite.
  KGrid(double k_min, double k_max, std::size_t count);

  // [0, pi] with 256 points.
  static KGrid reference();

  double k_min() const noexcept { return k_min_; }
  double k_max() const noexcept { return k_max_; }
  std::size_t count() const noexcept { return points_.size(); }
  std::span<const double> points() const noexcept { return points_; }
  double operator[](std::size_t i) const noexcept { return points_[i]; }

  friend bool operator==(const KGrid&, const KGrid&) = default;

 private:
  double k_min_;
  double k_max_;
  std::vector<double> points_;
};

KGrid make_kgrid(double k_min, double k_max, std::size_t count);

enum class Engine { kLti, kTb, kFd };

std::string_view to_string(Engine engine) noexcept;
// Accepts "lti", "tb", "fd"; throws InvalidArgument otherwise.
Engine parse_engine(std::string_view name);

// Provenance of one energy: an analytic branch index i, or the n-th sorted
// eigenvalue of a diagonalization ("diag#n").
class BranchLabel {
 public:
  static BranchLabel branch(int index) noexcept { return {Kind::kBranch, index}; }
  static BranchLabel diagonal(int rank) noexcept { return {Kind::kDiagonal, rank}; }
  // Inverse of str().
  static BranchLabel parse(std::string_view text);

  bool is_branch() const noexcept { return kind_ == Kind::kBranch; }
  int index() const noexcept { return index_; }
  std::string str() const;

  friend bool operator==(const BranchLabel&, const BranchLabel&) = default;

 private:
  enum class Kind { kBranch, kDiagonal };
  BranchLabel(Kind kind, int index) noexcept : kind_(kind), index_(index) {}

  Kind kind_;
  int index_;
};

struct BandLevel {
  double energy = 0.0;
  BranchLabel label = BranchLabel::branch(0);

  friend bool operator==(const BandLevel&, const BandLevel&) = default;
};

// Energies per k point, each list sorted ascending by energy.
class BandStructure {
 public:
  // Sorts each level list. Throws InvalidArgument if the number of k entries
  // differs from the grid, a k entry does not hold exactly cell_size levels,
  // or an energy leaves [band_min, band_max] by more than rounding.
  BandStructure(KGrid grid, std::vector<std::vector<BandLevel>> levels,
                Engine engine, LatticeParams params, int cell_size);

  const KGrid& grid() const noexcept { return grid_; }
  std::span<const BandLevel> at(std::size_t k_index) const noexcept {
    return levels_[k_index];
  }
  // Sorted energies at one k point.
  std::vector<double> energies(std::size_t k_index) const;
  Engine engine() const noexcept { return engine_; }
  const LatticeParams& params() const noexcept { return params_; }
  int cell_size() const noexcept { return cell_size_; }

  friend bool operator==(const BandStructure&, const BandStructure&) = default;

 private:
  KGrid grid_;
  std::vector<std::vector<BandLevel>> levels_;
  Engine engine_;
  LatticeParams params_;
  int cell_size_;
};

}  // namespace ltiest
