#include "serialize.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "ltiest/error.hpp"

namespace ltiest::io {

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) throw InvalidArgument("cannot format number");
  return std::string(buf, ptr);
}

double parse_double(std::string_view text) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end)
    throw InvalidArgument("not a number: '" + std::string(text) + "'");
  return value;
}

void write_band_csv(std::ostream& out, std::span<const BandStructure> bands) {
  out << kCsvHeader << '\n';
  for (const auto& bs : bands) {
    const auto engine = to_string(bs.engine());
    for (std::size_t n = 0; n < bs.grid().count(); ++n) {
      const std::string k = format_double(bs.grid()[n]);
      const auto levels = bs.at(n);
      for (std::size_t r = 0; r < levels.size(); ++r)
        out << k << ',' << r << ',' << levels[r].label.str() << ','
            << format_double(levels[r].energy) << ',' << engine << '\n';
    }
  }
}

namespace {

struct CsvRow {
  double k;
  std::size_t band_index;
  BranchLabel label;
  double energy;
  Engine engine;
};

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    parts.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

BandStructure assemble(const std::vector<CsvRow>& rows, const LatticeParams& params) {
  std::vector<double> ks;
  std::vector<std::vector<BandLevel>> levels;
  for (const auto& row : rows) {
    if (row.band_index == 0) {
      ks.push_back(row.k);
      levels.emplace_back();
    } else if (ks.empty() || ks.back() != row.k || levels.back().size() != row.band_index) {
      throw InvalidArgument("CSV rows out of order");
    }
    levels.back().push_back({row.energy, row.label});
  }
  if (ks.size() < 2) throw InvalidArgument("CSV block needs at least 2 k points");
  KGrid grid(ks.front(), ks.back(), ks.size());
  for (std::size_t n = 0; n < ks.size(); ++n)
    if (grid[n] != ks[n]) throw InvalidArgument("CSV k values are not a uniform grid");
  const int cell_size = static_cast<int>(levels.front().size());
  return {std::move(grid), std::move(levels), rows.front().engine, params, cell_size};
}

}  // namespace

std::vector<BandStructure> read_band_csv(std::istream& in, const LatticeParams& params) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader)
    throw InvalidArgument("missing CSV header");

  std::vector<BandStructure> out;
  std::vector<CsvRow> block;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 5) throw InvalidArgument("CSV row needs 5 fields: " + line);
    CsvRow row{parse_double(f[0]), 0, BranchLabel::parse(f[2]), parse_double(f[3]),
               parse_engine(f[4])};
    std::size_t idx = 0;
    auto [ptr, ec] = std::from_chars(f[1].data(), f[1].data() + f[1].size(), idx);
    if (ec != std::errc{} || ptr != f[1].data() + f[1].size())
      throw InvalidArgument("bad band_index in: " + line);
    row.band_index = idx;
    if (!block.empty() && block.front().engine != row.engine) {
      out.push_back(assemble(block, params));
      block.clear();
    }
    block.push_back(row);
  }
  if (!block.empty()) out.push_back(assemble(block, params));
  return out;
}

Json to_json(const LatticeParams& params) {
  return {{"alpha", params.alpha()}, {"beta", params.beta()}, {"a", params.a()}};
}

Json to_json(const KGrid& grid) {
  return {{"k_min", grid.k_min()}, {"k_max", grid.k_max()}, {"count", grid.count()}};
}

Json to_json(const SpikeTrain& spikes) {
  Json arr = Json::array();
  for (const auto& s : spikes.spikes()) arr.push_back({{"position", s.position}, {"weight", s.weight}});
  return arr;
}

Json to_json(const ImpulseResponse& kernel) {
  Json arr = Json::array();
  for (double t : kernel.taps()) arr.push_back(t);
  return arr;
}

namespace {

Json label_to_json(const BranchLabel& label) {
  if (label.is_branch()) return label.index();
  return label.str();
}

BranchLabel label_from_json(const Json& j) {
  if (j.is_number_integer()) return BranchLabel::branch(j.get<int>());
  if (j.is_string()) return BranchLabel::parse(j.get<std::string>());
  throw InvalidArgument("branch label must be an integer or a string");
}

}  // namespace

Json to_json(const BandStructure& bands) {
  Json rows = Json::array();
  for (std::size_t n = 0; n < bands.grid().count(); ++n) {
    Json energies = Json::array();
    for (const auto& level : bands.at(n))
      energies.push_back({{"branch", label_to_json(level.label)}, {"value", level.energy}});
    rows.push_back({{"k", bands.grid()[n]}, {"energies", std::move(energies)}});
  }
  return {{"params", to_json(bands.params())},
          {"cell_size", bands.cell_size()},
          {"engine", std::string(to_string(bands.engine()))},
          {"kgrid", to_json(bands.grid())},
          {"bands", std::move(rows)}};
}

Json to_json(const EquivalenceReport& report, bool with_deviations) {
  Json j = {{"cell_size", report.cell_size},
            {"kgrid", to_json(report.grid)},
            {"tolerance", report.tolerance},
            {"max_abs_deviation", report.max_abs_deviation},
            {"pass", report.pass()}};
  if (with_deviations) j["deviations"] = report.deviations;
  return j;
}

Json to_json(const FoldTraceReport& report) {
  Json branches = Json::array();
  for (const auto& b : report.branches) {
    Json mapping = Json::array();
    for (std::size_t n = 0; n < b.k.size(); ++n) mapping.push_back({b.k[n], b.k_primitive[n]});
    branches.push_back(
        {{"branch", b.branch}, {"max_residual", b.max_residual}, {"k_to_k_primitive", mapping}});
  }
  return {{"cell_size", report.cell_size},
          {"tolerance", report.tolerance},
          {"max_residual", report.max_residual()},
          {"pass", report.pass()},
          {"branches", std::move(branches)}};
}

Json to_json(const BenchResult& r) {
  return {{"cell_size", r.cell_size},
          {"grid_size", r.grid_size},
          {"parallel", r.parallel},
          {"tb_seconds", r.tb_seconds},
          {"lti_seconds", r.lti_seconds},
          {"speedup", r.speedup()},
          {"tb_per_k_seconds", r.tb_per_k()},
          {"lti_per_k_seconds", r.lti_per_k()},
          {"tb_samples", r.tb_samples},
          {"lti_samples", r.lti_samples},
          {"warnings", r.warnings}};
}

namespace {

double number(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number())
    throw InvalidArgument(std::string("missing numeric field '") + key + "'");
  return j.at(key).get<double>();
}

}  // namespace

LatticeParams params_from_json(const Json& j) {
  return {number(j, "alpha"), number(j, "beta"), j.contains("a") ? number(j, "a") : 1.0};
}

KGrid kgrid_from_json(const Json& j) {
  const double count = number(j, "count");
  if (count < 0) throw InvalidArgument("k grid count must be non-negative");
  return {number(j, "k_min"), number(j, "k_max"), static_cast<std::size_t>(count)};
}

SpikeTrain spikes_from_json(const Json& j) {
  std::vector<Spike> spikes;
  for (const auto& s : j) spikes.push_back({s.at("position").get<int>(), number(s, "weight")});
  return SpikeTrain(std::move(spikes));
}

ImpulseResponse kernel_from_json(const Json& j) {
  return ImpulseResponse(j.get<std::vector<double>>());
}

BandStructure band_from_json(const Json& j) {
  KGrid grid = kgrid_from_json(j.at("kgrid"));
  const auto& rows = j.at("bands");
  if (rows.size() != grid.count()) throw InvalidArgument("band entries do not match k grid");
  std::vector<std::vector<BandLevel>> levels;
  for (std::size_t n = 0; n < rows.size(); ++n) {
    if (number(rows[n], "k") != grid[n]) throw InvalidArgument("band k does not match k grid");
    auto& at_k = levels.emplace_back();
    for (const auto& e : rows[n].at("energies"))
      at_k.push_back({number(e, "value"), label_from_json(e.at("branch"))});
  }
  return {std::move(grid), std::move(levels), parse_engine(j.at("engine").get<std::string>()),
          params_from_json(j.at("params")), j.at("cell_size").get<int>()};
}

void write_bench_csv(std::ostream& out, std::span<const BenchResult> results,
                     std::span<const ScalingFit> fits) {
  out << "cell_size,grid_size,tb_seconds,lti_seconds,speedup,tb_per_k_seconds,lti_per_k_seconds\n";
  for (const auto& r : results)
    out << r.cell_size << ',' << r.grid_size << ',' << format_double(r.tb_seconds) << ','
        << format_double(r.lti_seconds) << ',' << format_double(r.speedup()) << ','
        << format_double(r.tb_per_k()) << ',' << format_double(r.lti_per_k()) << '\n';
  for (const auto& f : fits)
    out << "# fit grid_size=" << f.grid_size << " tb_exponent=" << format_double(f.tb_exponent)
        << " lti_exponent=" << format_double(f.lti_exponent) << '\n';
}

Json bench_to_json(std::span<const BenchResult> results, std::span<const ScalingFit> fits) {
  Json rows = Json::array();
  for (const auto& r : results) rows.push_back(to_json(r));
  Json fit_rows = Json::array();
  for (const auto& f : fits)
    fit_rows.push_back({{"grid_size", f.grid_size},
                        {"tb_exponent", f.tb_exponent},
                        {"lti_exponent", f.lti_exponent}});
  return {{"results", std::move(rows)}, {"fits", std::move(fit_rows)}};
}

}  // namespace ltiest::io
