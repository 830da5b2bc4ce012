#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>

#include "ltiest/error.hpp"
#include "ltiest/lti.hpp"
#include "ltiest/tb.hpp"
#include "ltiest/verify.hpp"
#include "oracles.hpp"

namespace ltiest {
namespace {

constexpr double kPi = std::numbers::pi;
const LatticeParams kRef = LatticeParams::reference();

TEST(MultisetDeviation, SortsBeforeComparing) {
  EXPECT_EQ(multiset_deviation({3, 1, 2}, {1, 2, 3}), 0.0);
  EXPECT_DOUBLE_EQ(multiset_deviation({0, 1}, {1, 0.5}), 0.5);
  EXPECT_THROW(multiset_deviation({1}, {1, 2}), InvalidArgument);
}

TEST(CompareEngines, PrimitiveCellReferenceGrid) {
  const auto r = compare_engines(kRef, 1, KGrid(-4 * kPi, 4 * kPi, 256), 1e-9);
  EXPECT_TRUE(r.pass());
  EXPECT_LE(r.max_abs_deviation, 1e-9);
  EXPECT_EQ(r.deviations.size(), 256u);
}

TEST(CompareEngines, FourSiteHalfZone) {
  const auto r = compare_engines(kRef, 4, KGrid(0.0, kPi, 128));
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.cell_size, 4);
}

TEST(CompareEngines, ZeroHoppingIsExact) {
  for (int m = 1; m <= 6; ++m) {
    const auto r = compare_engines({-0.3, 0.0}, m, KGrid(0.0, kPi, 17));
    EXPECT_EQ(r.max_abs_deviation, 0.0);
  }
}

TEST(CompareEngines, PassFollowsTolerance) {
  const auto r = compare_engines(kRef, 3, KGrid(0.1, 2.0, 16), 1e-300);
  EXPECT_EQ(r.pass(), r.max_abs_deviation <= 1e-300);
  EXPECT_EQ(r.max_abs_deviation, *std::max_element(r.deviations.begin(), r.deviations.end()));
  EXPECT_THROW(compare_engines(kRef, 2, KGrid(0.0, 1.0, 4), 0.0), InvalidArgument);
  EXPECT_THROW(compare_engines(kRef, 2, KGrid(0.0, 1.0, 4), -1.0), InvalidArgument);
}

TEST(CompareEngines, OracleEquivalenceOnRandomParameters) {
  const KGrid grid(0.0, 2 * kPi, 64);
  for (int m = 1; m <= 8; ++m) {
    for (int trial = 0; trial < 10; ++trial) {
      const LatticeParams p(oracle::uniform(-1, 1), oracle::uniform(-1, 1));
      const auto r = compare_engines(p, m, grid);
      EXPECT_TRUE(r.pass()) << "M=" << m << " dev=" << r.max_abs_deviation;
    }
  }
}

TEST(VerifyFdMapping, ReferenceParameters) {
  const auto r = verify_fd_mapping(kRef, KGrid::reference());
  EXPECT_LE(r.max_abs_deviation, 1e-12);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.cell_size, 1);
}

TEST(VerifyFdMapping, ZeroHoppingIsFlat) {
  const LatticeParams flat(0.25, 0.0);
  const auto fd = fd_params_from_lattice(flat);
  EXPECT_EQ(fd.t0(), 0.0);
  EXPECT_EQ(fd.potential(), 0.25);
  EXPECT_EQ(verify_fd_mapping(flat, KGrid(0.0, kPi, 8)).max_abs_deviation, 0.0);
}

TEST(VerifyFdMapping, RandomParameters) {
  for (int trial = 0; trial < 50; ++trial) {
    const LatticeParams p(oracle::uniform(-1, 1), oracle::uniform(-1, 1));
    EXPECT_TRUE(verify_fd_mapping(p, KGrid(0.0, 2 * kPi, 64)).pass());
  }
  EXPECT_THROW(verify_fd_mapping(kRef, KGrid(0.0, 1.0, 4), 0.0), InvalidArgument);
}

TEST(TraceFolding, PrimitiveCellIsIdentity) {
  const KGrid grid(0.0, kPi, 32);
  const auto r = trace_folding(kRef, 1, grid);
  ASSERT_EQ(r.branches.size(), 1u);
  EXPECT_EQ(r.branches[0].branch, 0);
  EXPECT_EQ(r.branches[0].k_primitive, r.branches[0].k);
  EXPECT_EQ(r.max_residual(), 0.0);
}

TEST(TraceFolding, TwoSiteMapsToHalvedMomenta) {
  const KGrid grid(0.0, kPi, 32);
  const auto r = trace_folding(kRef, 2, grid);
  ASSERT_EQ(r.branches.size(), 2u);
  for (std::size_t n = 0; n < grid.count(); ++n) {
    EXPECT_NEAR(r.branches[0].k_primitive[n], grid[n] / 2, 1e-15);
    EXPECT_NEAR(r.branches[1].k_primitive[n], grid[n] / 2 + kPi, 1e-15);
  }
  EXPECT_TRUE(r.pass());
}

TEST(TraceFolding, ThreeSiteResiduals) {
  const auto r = trace_folding(kRef, 3, KGrid::reference());
  ASSERT_EQ(r.branches.size(), 3u);
  for (const auto& b : r.branches) EXPECT_LE(b.max_residual, 1e-12);
}

TEST(TraceFolding, FoldingLosesNoStates) {
  const KGrid grid(-kPi, 3 * kPi, 64);
  for (int m = 1; m <= 8; ++m) {
    const LatticeParams p(oracle::uniform(-1, 1), oracle::uniform(-1, 1), oracle::uniform(0.5, 2));
    for (double k : grid.points()) {
      std::vector<double> folded;
      for (const auto& b : folded_bands(p, m, k)) folded.push_back(b.energy);
      std::vector<double> primitive;
      const SpikeTrain cell = canonical_cell(m);
      for (const auto& s : cell.spikes())
        primitive.push_back(dispersion_pc(p, k / m + 2 * kPi * s.position / (m * p.a())));
      EXPECT_LE(multiset_deviation(folded, primitive), 1e-12);
    }
  }
}

}  // namespace
}  // namespace ltiest
