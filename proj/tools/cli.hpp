#pragma once

#include <iosfwd>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace ltiest::cli {

enum ExitCode : int { kOk = 0, kConfigError = 1, kIoError = 2, kVerificationFailed = 3 };

// A bad configuration value, reported against the field that holds it.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Built-in defaults reproduce the published setup: alpha = -0.17 eV,
// beta = -0.24 eV, a = 1, k on [0, pi] with 256 points.
struct RunConfig {
  double alpha = -0.17;
  double beta = -0.24;
  double a = 1.0;
  std::vector<int> cell_sizes;        // empty: per-command default
  std::string engine = "lti";         // lti | tb | fd | all
  double k_min = 0.0;
  double k_max = std::numbers::pi;
  std::size_t k_count = 256;
  std::optional<std::string> format;  // csv | json | svg; per-command default
  std::string out;                    // empty or "-" writes to stdout
  bool parallel = false;
  double tol = 1e-9;
  int repetitions = 5;
};

// Overlays the keys present in a JSON object onto config. Unknown keys and
// wrongly typed values raise ConfigError.
void apply_json(RunConfig& config, const nlohmann::json& j);

// Range and enum checks shared by all commands.
void validate(const RunConfig& config);

int cmd_band(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err);

// Full command line: `ltiest [band|verify|bench] [flags]`. No subcommand
// means `band`. Flags override --config, which overrides the defaults.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ltiest::cli
