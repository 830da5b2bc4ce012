#include "ltiest/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "ltiest/error.hpp"

namespace ltiest {

LatticeParams::LatticeParams(double alpha, double beta, double a)
    : alpha_(alpha), beta_(beta), a_(a) {
  if (!std::isfinite(alpha)) throw InvalidArgument("alpha must be finite");
  if (!std::isfinite(beta)) throw InvalidArgument("beta must be finite");
  if (!std::isfinite(a) || !(a > 0.0)) throw InvalidArgument("a must be finite and > 0");
}

LatticeParams LatticeParams::reference() { return {-0.17, -0.24, 1.0}; }

double LatticeParams::band_min() const noexcept { return alpha_ - 2.0 * std::abs(beta_); }
double LatticeParams::band_max() const noexcept { return alpha_ + 2.0 * std::abs(beta_); }

SpikeTrain::SpikeTrain(std::vector<Spike> spikes) : spikes_(std::move(spikes)) {
  if (spikes_.empty()) throw InvalidArgument("spike train must not be empty");
  for (std::size_t i = 0; i < spikes_.size(); ++i) {
    if (!std::isfinite(spikes_[i].weight))
      throw InvalidArgument("spike weight must be finite");
    if (i > 0 && spikes_[i].position <= spikes_[i - 1].position)
      throw InvalidArgument("spike positions must be strictly increasing");
  }
}

SpikeTrain canonical_cell(int cell_size) {
  if (cell_size < 1) throw InvalidArgument("cell size must be >= 1");
  const int lo = -((cell_size - 1) / 2);
  std::vector<Spike> spikes;
  spikes.reserve(static_cast<std::size_t>(cell_size));
  for (int m = 0; m < cell_size; ++m) spikes.push_back({lo + m, 1.0});
  return SpikeTrain(std::move(spikes));
}

ImpulseResponse::ImpulseResponse(std::vector<double> taps) : taps_(std::move(taps)) {
  if (taps_.size() % 2 == 0) throw InvalidArgument("impulse response length must be odd");
  for (double t : taps_)
    if (!std::isfinite(t)) throw InvalidArgument("impulse response taps must be finite");
  for (std::size_t i = 0, j = taps_.size() - 1; i < j; ++i, --j)
    if (taps_[i] != taps_[j]) throw InvalidArgument("impulse response must be symmetric");
}

double ImpulseResponse::at(int offset) const noexcept {
  const int hw = half_width();
  if (offset < -hw || offset > hw) return 0.0;
  return taps_[static_cast<std::size_t>(offset + hw)];
}

ImpulseResponse nn_kernel(const LatticeParams& params) {
  return ImpulseResponse({params.beta(), params.alpha(), params.beta()});
}

KGrid::KGrid(double k_min, double k_max, std::size_t count) : k_min_(k_min), k_max_(k_max) {
  if (!std::isfinite(k_min) || !std::isfinite(k_max))
    throw InvalidArgument("k bounds must be finite");
  if (count < 2) throw InvalidArgument("k grid needs at least 2 points");
  if (!(k_min < k_max)) throw InvalidArgument("k_min must be < k_max");
  points_.resize(count);
  const double span = k_max - k_min;
  const double last = static_cast<double>(count - 1);
  for (std::size_t i = 0; i + 1 < count; ++i)
    points_[i] = k_min + span * (static_cast<double>(i) / last);
  points_.back() = k_max;
}

KGrid KGrid::reference() { return {0.0, std::numbers::pi, 256}; }

KGrid make_kgrid(double k_min, double k_max, std::size_t count) {
  return {k_min, k_max, count};
}

std::string_view to_string(Engine engine) noexcept {
  switch (engine) {
    case Engine::kLti: return "lti";
    case Engine::kTb: return "tb";
    case Engine::kFd: return "fd";
  }
  return "?";
}

Engine parse_engine(std::string_view name) {
  if (name == "lti") return Engine::kLti;
  if (name == "tb") return Engine::kTb;
  if (name == "fd") return Engine::kFd;
  throw InvalidArgument("unknown engine '" + std::string(name) + "'");
}

namespace {

constexpr std::string_view kDiagPrefix = "diag#";

int parse_int(std::string_view text) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end)
    throw InvalidArgument("bad branch label '" + std::string(text) + "'");
  return value;
}

}  // namespace

BranchLabel BranchLabel::parse(std::string_view text) {
  if (text.starts_with(kDiagPrefix)) return diagonal(parse_int(text.substr(kDiagPrefix.size())));
  return branch(parse_int(text));
}

std::string BranchLabel::str() const {
  if (is_branch()) return std::to_string(index_);
  return std::string(kDiagPrefix) + std::to_string(index_);
}

BandStructure::BandStructure(KGrid grid, std::vector<std::vector<BandLevel>> levels,
                             Engine engine, LatticeParams params, int cell_size)
    : grid_(std::move(grid)),
      levels_(std::move(levels)),
      engine_(engine),
      params_(params),
      cell_size_(cell_size) {
  if (cell_size_ < 1) throw InvalidArgument("cell size must be >= 1");
  if (levels_.size() != grid_.count())
    throw InvalidArgument("band structure needs one level list per k point");
  // Diagonalization adds rounding on the order of eps * ||H||.
  const double slack = 1e-9 * (std::abs(params_.alpha()) + 2.0 * std::abs(params_.beta())) + 1e-12;
  const double lo = params_.band_min() - slack;
  const double hi = params_.band_max() + slack;
  for (auto& at_k : levels_) {
    if (at_k.size() != static_cast<std::size_t>(cell_size_))
      throw InvalidArgument("every k point needs exactly cell_size energies");
    for (const auto& level : at_k)
      if (!(level.energy >= lo && level.energy <= hi))
        throw InvalidArgument("energy " + std::to_string(level.energy) +
                              " outside the nearest-neighbour bandwidth");
    std::stable_sort(at_k.begin(), at_k.end(),
                     [](const BandLevel& x, const BandLevel& y) { return x.energy < y.energy; });
  }
}

std::vector<double> BandStructure::energies(std::size_t k_index) const {
  std::vector<double> out;
  out.reserve(levels_[k_index].size());
  for (const auto& level : levels_[k_index]) out.push_back(level.energy);
  return out;
}

}  // namespace ltiest
