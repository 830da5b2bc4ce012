#pragma once

// CSV and JSON encodings of the core types, as written by the ltiest tool.

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "ltiest/bench.hpp"
#include "ltiest/lattice.hpp"
#include "ltiest/verify.hpp"

namespace ltiest::io {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kCsvHeader = "k,band_index,branch_label,energy_eV,engine";

// Shortest decimal string that parses back to the same double.
std::string format_double(double value);
// Throws InvalidArgument unless the whole of text is a number.
double parse_double(std::string_view text);

// Rows in k order, then ascending energy; one block per structure.
void write_band_csv(std::ostream& out, std::span<const BandStructure> bands);
// Inverse of write_band_csv. The k grid of each block is rebuilt from its
// first and last k and must reproduce every k bit for bit.
std::vector<BandStructure> read_band_csv(std::istream& in, const LatticeParams& params);

Json to_json(const LatticeParams& params);
Json to_json(const KGrid& grid);
Json to_json(const SpikeTrain& spikes);
Json to_json(const ImpulseResponse& kernel);
Json to_json(const BandStructure& bands);
Json to_json(const EquivalenceReport& report, bool with_deviations = true);
Json to_json(const FoldTraceReport& report);
Json to_json(const BenchResult& result);

LatticeParams params_from_json(const Json& j);
KGrid kgrid_from_json(const Json& j);
SpikeTrain spikes_from_json(const Json& j);
ImpulseResponse kernel_from_json(const Json& j);
BandStructure band_from_json(const Json& j);

// Median table; fitted exponents follow as '#'-prefixed lines.
void write_bench_csv(std::ostream& out, std::span<const BenchResult> results,
                     std::span<const ScalingFit> fits);
Json bench_to_json(std::span<const BenchResult> results, std::span<const ScalingFit> fits);

}  // namespace ltiest::io
