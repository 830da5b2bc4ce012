#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>

#include "ltiest/bench.hpp"
#include "ltiest/error.hpp"
#include "ltiest/lti.hpp"
#include "ltiest/tb.hpp"
#include "ltiest/verify.hpp"
#include "serialize.hpp"
#include "svg.hpp"

namespace ltiest::cli {

namespace {

template <typename T>
void take(const nlohmann::json& j, const char* key, T& slot) {
  if (!j.contains(key)) return;
  try {
    slot = j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError(key, "wrong type in config file");
  }
}

void take_number(const nlohmann::json& j, const char* key, double& slot) {
  if (!j.contains(key)) return;
  if (!j.at(key).is_number()) throw ConfigError(key, "expected a number");
  slot = j.at(key).get<double>();
}

}  // namespace

void apply_json(RunConfig& config, const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config", "top level must be a JSON object");
  static const std::vector<std::string> known{"alpha", "beta", "a", "cell_size", "engine",
                                              "k_min", "k_max", "k_count", "format", "out",
                                              "parallel", "tol", "repetitions"};
  for (const auto& [key, _] : j.items())
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw ConfigError(key, "unknown config key");

  take_number(j, "alpha", config.alpha);
  take_number(j, "beta", config.beta);
  take_number(j, "a", config.a);
  take_number(j, "k_min", config.k_min);
  take_number(j, "k_max", config.k_max);
  take_number(j, "tol", config.tol);
  if (j.contains("cell_size")) {
    const auto& v = j.at("cell_size");
    if (v.is_number_integer()) {
      config.cell_sizes = {v.get<int>()};
    } else {
      take(j, "cell_size", config.cell_sizes);
    }
  }
  if (j.contains("k_count")) {
    const auto& v = j.at("k_count");
    if (!v.is_number_integer() || v.get<long long>() < 0)
      throw ConfigError("k_count", "expected a non-negative integer");
    config.k_count = v.get<std::size_t>();
  }
  take(j, "engine", config.engine);
  if (j.contains("format")) {
    std::string f;
    take(j, "format", f);
    config.format = f;
  }
  take(j, "out", config.out);
  take(j, "parallel", config.parallel);
  take(j, "repetitions", config.repetitions);
}

void validate(const RunConfig& c) {
  try {
    LatticeParams(c.alpha, c.beta, c.a);
  } catch (const InvalidArgument& e) {
    const std::string msg = e.what();
    throw ConfigError(msg.starts_with("alpha") ? "alpha" : msg.starts_with("beta") ? "beta" : "a",
                      msg);
  }
  for (int m : c.cell_sizes)
    if (m < 1) throw ConfigError("cell_size", "must be >= 1");
  if (c.engine != "lti" && c.engine != "tb" && c.engine != "fd" && c.engine != "all")
    throw ConfigError("engine", "must be one of lti, tb, fd, all");
  if (!std::isfinite(c.k_min)) throw ConfigError("k_min", "must be finite");
  if (!std::isfinite(c.k_max)) throw ConfigError("k_max", "must be finite");
  if (!(c.k_min < c.k_max)) throw ConfigError("k_max", "must be greater than k_min");
  if (c.k_count < 2) throw ConfigError("k_count", "must be >= 2");
  if (c.format && *c.format != "csv" && *c.format != "json" && *c.format != "svg")
    throw ConfigError("format", "must be one of csv, json, svg");
  if (!(c.tol > 0.0)) throw ConfigError("tol", "must be > 0");
  if (c.repetitions < 3) throw ConfigError("repetitions", "must be >= 3");
}

namespace {

// Writes to stdout or a file; a failed open or write maps to exit code 2.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& stdout_stream) {
    if (path.empty() || path == "-") {
      stream_ = &stdout_stream;
    } else {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
      stream_ = file_.get();
    }
  }
  bool ok() const { return stream_->good(); }
  std::ostream& stream() { return *stream_; }
  bool finish() {
    stream_->flush();
    return stream_->good();
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

int io_failure(std::ostream& err, const std::string& path) {
  err << "error: cannot write '" << path << "'\n";
  return kIoError;
}

LatticeParams params_of(const RunConfig& c) { return {c.alpha, c.beta, c.a}; }
KGrid grid_of(const RunConfig& c) { return {c.k_min, c.k_max, c.k_count}; }

}  // namespace

int cmd_band(const RunConfig& config, std::ostream& out, std::ostream& err) {
  validate(config);
  if (config.cell_sizes.size() > 1)
    throw ConfigError("cell_size", "band takes a single cell size");
  const int m = config.cell_sizes.empty() ? 1 : config.cell_sizes.front();
  const std::string format = config.format.value_or("csv");
  const LatticeParams params = params_of(config);
  const KGrid grid = grid_of(config);
  const SweepOptions options{config.parallel, 0};

  std::vector<BandStructure> bands;
  const bool all = config.engine == "all";
  if (all || config.engine == "lti") bands.push_back(lti_band_sweep(params, m, grid));
  if (all || config.engine == "tb") bands.push_back(band_sweep(params, m, grid, options));
  if (config.engine == "fd" || (all && format != "svg"))
    bands.push_back(fd_band_sweep(params, m, grid));

  Sink sink(config.out, out);
  if (!sink.ok()) return io_failure(err, config.out);
  if (format == "csv") {
    io::write_band_csv(sink.stream(), bands);
  } else if (format == "json") {
    io::Json doc;
    if (bands.size() == 1) {
      doc = io::to_json(bands.front());
    } else {
      doc = io::Json::object();
      doc["band_structures"] = io::Json::array();
      for (const auto& b : bands) doc["band_structures"].push_back(io::to_json(b));
    }
    sink.stream() << doc.dump(2) << '\n';
  } else {
    io::write_band_svg(sink.stream(), bands);
  }
  if (!sink.finish()) return io_failure(err, config.out);
  return kOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  validate(config);
  if (config.format && *config.format != "json")
    throw ConfigError("format", "verify writes JSON only");
  const std::vector<int> sizes =
      config.cell_sizes.empty() ? std::vector<int>{1, 2, 3, 4} : config.cell_sizes;
  const LatticeParams params = params_of(config);
  const KGrid grid = grid_of(config);
  const double closed_form_tol = std::min(config.tol, kFoldTraceTolerance);

  bool pass = true;
  io::Json engines = io::Json::array();
  io::Json traces = io::Json::array();
  for (int m : sizes) {
    const auto report = compare_engines(params, m, grid, config.tol);
    pass = pass && report.pass();
    engines.push_back(io::to_json(report));

    auto trace = trace_folding(params, m, grid);
    trace.tolerance = closed_form_tol;
    pass = pass && trace.pass();
    traces.push_back(io::to_json(trace));
  }
  const auto fd = verify_fd_mapping(params, grid, closed_form_tol);
  pass = pass && fd.pass();

  io::Json doc = {{"pass", pass},
                  {"tolerance", config.tol},
                  {"params", io::to_json(params)},
                  {"kgrid", io::to_json(grid)},
                  {"engines", std::move(engines)},
                  {"fd_mapping", io::to_json(fd)},
                  {"fold_traces", std::move(traces)}};

  Sink sink(config.out, out);
  if (!sink.ok()) return io_failure(err, config.out);
  sink.stream() << doc.dump(2) << '\n';
  if (!sink.finish()) return io_failure(err, config.out);
  if (!pass) {
    err << "verification failed\n";
    return kVerificationFailed;
  }
  return kOk;
}

int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err) {
  validate(config);
  const std::string format = config.format.value_or("json");
  if (format == "svg") throw ConfigError("format", "bench writes csv or json");

  BenchConfig bc;
  bc.params = params_of(config);
  bc.cell_sizes = config.cell_sizes.empty() ? std::vector<int>{4} : config.cell_sizes;
  bc.grid_sizes = {config.k_count};
  bc.k_min = config.k_min;
  bc.k_max = config.k_max;
  bc.repetitions = config.repetitions;
  bc.parallel = config.parallel;

  const auto results = run_bench(bc);
  const auto fits = fit_scaling(results);
  for (const auto& r : results)
    for (const auto& w : r.warnings) err << "warning: M=" << r.cell_size << " N=" << r.grid_size << ": " << w << '\n';

  Sink sink(config.out, out);
  if (!sink.ok()) return io_failure(err, config.out);
  if (format == "csv") {
    io::write_bench_csv(sink.stream(), results, fits);
  } else {
    sink.stream() << io::bench_to_json(results, fits).dump(2) << '\n';
  }
  if (!sink.finish()) return io_failure(err, config.out);
  return kOk;
}

namespace {

struct Flags {
  double alpha = 0, beta = 0, a = 0, k_min = 0, k_max = 0, tol = 0;
  std::vector<int> cell_sizes;
  std::string engine, format, out, config;
  std::size_t k_count = 0;
  int repetitions = 0;
  bool parallel = false;
};

struct Options {
  CLI::Option* alpha;
  CLI::Option* beta;
  CLI::Option* a;
  CLI::Option* cell_size;
  CLI::Option* engine;
  CLI::Option* k_min;
  CLI::Option* k_max;
  CLI::Option* k_count;
  CLI::Option* format;
  CLI::Option* out;
  CLI::Option* config;
  CLI::Option* parallel;
  CLI::Option* tol;
  CLI::Option* repetitions;
};

Options add_flags(CLI::App& app, Flags& f) {
  Options o{};
  o.alpha = app.add_option("--alpha", f.alpha, "On-site energy (eV)");
  o.beta = app.add_option("--beta", f.beta, "Nearest-neighbour hopping (eV)");
  o.a = app.add_option("--a", f.a, "Lattice constant");
  o.cell_size = app.add_option("--cell-size", f.cell_sizes, "Supercell size M (repeatable)");
  o.engine = app.add_option("--engine", f.engine, "lti | tb | fd | all");
  o.k_min = app.add_option("--k-min", f.k_min, "First k (1/a)");
  o.k_max = app.add_option("--k-max", f.k_max, "Last k (1/a)");
  o.k_count = app.add_option("--k-count", f.k_count, "Number of k points");
  o.format = app.add_option("--format", f.format, "csv | json | svg");
  o.out = app.add_option("--out", f.out, "Output file (default stdout)");
  o.config = app.add_option("--config", f.config, "JSON config file");
  o.parallel = app.add_flag("--parallel", f.parallel, "Diagonalize k points concurrently");
  o.tol = app.add_option("--tol", f.tol, "Verification tolerance (eV)");
  o.repetitions = app.add_option("--repetitions", f.repetitions, "Timed benchmark runs");
  return o;
}

RunConfig resolve(const Options& o, const Flags& f) {
  RunConfig c;
  if (o.config->count()) {
    std::ifstream in(f.config);
    if (!in) throw ConfigError("config", "cannot read '" + f.config + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("config", std::string("invalid JSON: ") + e.what());
    }
    apply_json(c, j);
  }
  if (o.alpha->count()) c.alpha = f.alpha;
  if (o.beta->count()) c.beta = f.beta;
  if (o.a->count()) c.a = f.a;
  if (o.cell_size->count()) c.cell_sizes = f.cell_sizes;
  if (o.engine->count()) c.engine = f.engine;
  if (o.k_min->count()) c.k_min = f.k_min;
  if (o.k_max->count()) c.k_max = f.k_max;
  if (o.k_count->count()) c.k_count = f.k_count;
  if (o.format->count()) c.format = f.format;
  if (o.out->count()) c.out = f.out;
  if (o.parallel->count()) c.parallel = f.parallel;
  if (o.tol->count()) c.tol = f.tol;
  if (o.repetitions->count()) c.repetitions = f.repetitions;
  return c;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Band structures of a 1D chain via LTI convolution and tight binding", "ltiest"};
  app.require_subcommand(0, 1);

  Flags root_flags, band_flags, verify_flags, bench_flags;
  const Options root = add_flags(app, root_flags);
  auto* band = app.add_subcommand("band", "Compute a band structure (CSV, JSON or SVG)");
  auto* verify = app.add_subcommand("verify", "Check LTI bands against the TB and FD routes");
  auto* bench = app.add_subcommand("bench", "Time the TB sweep against the LTI evaluation");
  const Options band_opts = add_flags(*band, band_flags);
  const Options verify_opts = add_flags(*verify, verify_flags);
  const Options bench_opts = add_flags(*bench, bench_flags);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    if (verify->parsed()) return cmd_verify(resolve(verify_opts, verify_flags), out, err);
    if (bench->parsed()) return cmd_bench(resolve(bench_opts, bench_flags), out, err);
    if (band->parsed()) return cmd_band(resolve(band_opts, band_flags), out, err);
    return cmd_band(resolve(root, root_flags), out, err);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const InvalidArgument& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  }
}

}  // namespace ltiest::cli
