#include <gtest/gtest.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "serialize.hpp"

namespace ltiest::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ltiest_cli_" + std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  fs::path dir_;
};

TEST_F(CliTest, ZeroArgumentsUseReferenceSetup) {
  const auto r = invoke({});
  ASSERT_EQ(r.code, kOk) << r.err;
  std::istringstream in(r.out);
  const auto bands = io::read_band_csv(in, {-0.17, -0.24});
  ASSERT_EQ(bands.size(), 1u);
  const auto& bs = bands.front();
  EXPECT_EQ(bs.grid().count(), 256u);
  EXPECT_EQ(bs.grid().k_min(), 0.0);
  EXPECT_EQ(bs.grid().k_max(), std::numbers::pi);
  EXPECT_EQ(bs.cell_size(), 1);
  EXPECT_EQ(bs.engine(), Engine::kLti);
  for (std::size_t n = 0; n < 256; ++n) {
    EXPECT_GE(bs.at(n)[0].energy, -0.65 - 1e-12);
    EXPECT_LE(bs.at(n)[0].energy, 0.31 + 1e-12);
  }
  EXPECT_EQ(invoke({"band"}).out, r.out);
}

TEST_F(CliTest, BandJsonWithTwoPoints) {
  const auto r = invoke({"band", "--k-count", "2", "--format", "json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto doc = io::Json::parse(r.out);
  EXPECT_EQ(doc["bands"].size(), 2u);
  EXPECT_EQ(doc["params"]["alpha"], -0.17);
  EXPECT_EQ(doc["kgrid"]["count"], 2);
}

TEST_F(CliTest, BandAllEnginesJson) {
  const auto r = invoke({"band", "--engine", "all", "--cell-size", "3", "--k-count", "4",
                         "--format", "json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto doc = io::Json::parse(r.out);
  ASSERT_EQ(doc["band_structures"].size(), 3u);
  EXPECT_EQ(doc["band_structures"][1]["engine"], "tb");
}

TEST_F(CliTest, BandSvgToFile) {
  const auto out = path("fig.svg");
  const auto r = invoke({"band", "--engine", "all", "--cell-size", "2", "--format", "svg",
                         "--out", out});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto svg = slurp(out);
  std::size_t polylines = 0;
  for (auto pos = svg.find("<polyline"); pos != std::string::npos; pos = svg.find("<polyline", pos + 1))
    ++polylines;
  EXPECT_EQ(polylines, 2u);
  EXPECT_NE(svg.find("class=\"tb\""), std::string::npos);
}

TEST_F(CliTest, OutputIsDeterministic) {
  const auto a = path("a.csv"), b = path("b.csv");
  ASSERT_EQ(invoke({"band", "--engine", "all", "--cell-size", "4", "--out", a}).code, kOk);
  ASSERT_EQ(invoke({"band", "--engine", "all", "--cell-size", "4", "--out", b}).code, kOk);
  EXPECT_EQ(slurp(a), slurp(b));
  ASSERT_EQ(invoke({"band", "--format", "json", "--out", a}).code, kOk);
  ASSERT_EQ(invoke({"band", "--format", "json", "--out", b}).code, kOk);
  EXPECT_EQ(slurp(a), slurp(b));
}

TEST_F(CliTest, ConfigFilePrecedence) {
  const auto cfg = path("cfg.json");
  std::ofstream(cfg) << R"({"alpha": 0.5, "beta": -1.0, "k_count": 3, "format": "json"})";

  auto doc = io::Json::parse(invoke({"band", "--config", cfg}).out);
  EXPECT_EQ(doc["params"]["alpha"], 0.5);
  EXPECT_EQ(doc["params"]["beta"], -1.0);
  EXPECT_EQ(doc["bands"].size(), 3u);

  doc = io::Json::parse(invoke({"band", "--config", cfg, "--alpha", "2"}).out);
  EXPECT_EQ(doc["params"]["alpha"], 2.0);
  EXPECT_EQ(doc["params"]["beta"], -1.0);
}

TEST_F(CliTest, ConfigErrorsNameTheField) {
  auto r = invoke({"band", "--k-count", "1"});
  EXPECT_EQ(r.code, kConfigError);
  EXPECT_NE(r.err.find("k_count"), std::string::npos);

  r = invoke({"band", "--engine", "nope"});
  EXPECT_EQ(r.code, kConfigError);
  EXPECT_NE(r.err.find("engine"), std::string::npos);

  r = invoke({"band", "--a", "0"});
  EXPECT_EQ(r.code, kConfigError);
  EXPECT_NE(r.err.find("a:"), std::string::npos);

  r = invoke({"band", "--cell-size", "0"});
  EXPECT_EQ(r.code, kConfigError);
  EXPECT_NE(r.err.find("cell_size"), std::string::npos);

  r = invoke({"band", "--k-min", "2", "--k-max", "1"});
  EXPECT_EQ(r.code, kConfigError);
  EXPECT_NE(r.err.find("k_max"), std::string::npos);

  r = invoke({"band", "--no-such-flag"});
  EXPECT_EQ(r.code, kConfigError);

  const auto cfg = path("bad.json");
  std::ofstream(cfg) << R"({"alpha": "x"})";
  r = invoke({"band", "--config", cfg});
  EXPECT_EQ(r.code, kConfigError);
  EXPECT_NE(r.err.find("alpha"), std::string::npos);

  std::ofstream(cfg) << R"({"colour": 1})";
  r = invoke({"band", "--config", cfg});
  EXPECT_EQ(r.code, kConfigError);
  EXPECT_NE(r.err.find("colour"), std::string::npos);

  r = invoke({"band", "--config", path("missing.json")});
  EXPECT_EQ(r.code, kConfigError);
}

TEST_F(CliTest, UnwritablePathIsIoError) {
  const auto r = invoke({"band", "--out", path("no/such/dir/x.csv")});
  EXPECT_EQ(r.code, kIoError);
}

TEST_F(CliTest, VerifyDefaultsPass) {
  const auto out = path("verify.json");
  const auto r = invoke({"verify", "--out", out});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto doc = io::Json::parse(slurp(out));
  EXPECT_TRUE(doc["pass"].get<bool>());
  ASSERT_EQ(doc["engines"].size(), 4u);
  for (int m = 0; m < 4; ++m) EXPECT_EQ(doc["engines"][m]["cell_size"], m + 1);
  EXPECT_TRUE(doc["fd_mapping"]["pass"].get<bool>());
}

TEST_F(CliTest, VerifyFailsWithImpossibleTolerance) {
  const auto out = path("verify.json");
  const auto r = invoke({"verify", "--tol", "1e-30", "--out", out});
  EXPECT_EQ(r.code, kVerificationFailed);
  const auto doc = io::Json::parse(slurp(out));
  EXPECT_FALSE(doc["pass"].get<bool>());
  double worst = 0.0;
  for (const auto& e : doc["engines"]) worst = std::max(worst, e["max_abs_deviation"].get<double>());
  EXPECT_GT(worst, 1e-30);
  EXPECT_LT(worst, 1e-12);
}

TEST_F(CliTest, VerifyBeyondPublishedCells) {
  const auto r = invoke({"verify", "--cell-size", "8"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(invoke({"verify", "--format", "csv"}).code, kConfigError);
}

TEST_F(CliTest, BenchSmokeIsFast) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = invoke({"bench", "--cell-size", "1", "--k-count", "2", "--repetitions", "3"});
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), 1.0);
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto doc = io::Json::parse(r.out);
  EXPECT_EQ(doc["results"].size(), 1u);
}

TEST_F(CliTest, BenchScalingCsv) {
  const auto r = invoke({"bench", "--cell-size", "2", "--cell-size", "4", "--cell-size", "8",
                         "--cell-size", "16", "--k-count", "64", "--repetitions", "3",
                         "--format", "csv"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out.rfind("cell_size,grid_size,tb_seconds,lti_seconds", 0), 0u);
  EXPECT_NE(r.out.find("# fit grid_size=64 tb_exponent="), std::string::npos);
  EXPECT_EQ(invoke({"bench", "--format", "svg"}).code, kConfigError);
  EXPECT_EQ(invoke({"bench", "--repetitions", "2"}).code, kConfigError);
}

TEST(ApplyJson, CellSizeAcceptsScalarOrList) {
  RunConfig c;
  apply_json(c, nlohmann::json::parse(R"({"cell_size": 3})"));
  EXPECT_EQ(c.cell_sizes, (std::vector<int>{3}));
  apply_json(c, nlohmann::json::parse(R"({"cell_size": [2, 4]})"));
  EXPECT_EQ(c.cell_sizes, (std::vector<int>{2, 4}));
  EXPECT_THROW(apply_json(c, nlohmann::json::parse("[1]")), ConfigError);
  EXPECT_THROW(apply_json(c, nlohmann::json::parse(R"({"k_count": -1})")), ConfigError);
}

}  // namespace
}  // namespace ltiest::cli
