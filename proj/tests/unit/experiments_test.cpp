#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "lssa/errors.hpp"
#include "lssa/experiments.hpp"
#include "lssa/io.hpp"
#include "lssa/units.hpp"
#include "support/oracles.hpp"

namespace lssa {
namespace {

constexpr double kArea = 8.9420e-4;

LssaModel calibrated_model(double area = kArea) {
  return LssaModel::from_area_profile(AreaProfile::constant(area), reference_stiffness_polynomial());
}

const std::string kDataDir = std::string(LSSA_SOURCE_DIR) + "/data/reference/";

TEST(ReferenceData, EmbeddedValues) {
  const auto ext = reference_extension_125kpa();
  ASSERT_EQ(ext.points.size(), 5u);
  EXPECT_EQ(ext.swept, SweptVariable::Displacement);
  EXPECT_TRUE(ext.approximate);
  EXPECT_EQ(ext.points.front().force_n, 112.0);
  EXPECT_EQ(ext.points.back().displacement_mm, 40.0);
  for (const auto& p : ext.points) EXPECT_EQ(p.pressure_pa, 125e3);

  const auto sl = reference_static_load_200kpa();
  ASSERT_EQ(sl.points.size(), 3u);
  EXPECT_EQ(sl.swept, SweptVariable::Load);
  EXPECT_NEAR(sl.points[2].load_n, 34.335, 1e-12);
  EXPECT_EQ(sl.points[2].force_n, 130.0);
  EXPECT_NEAR(reference_static_load_200kpa(10.0).points[1].load_n, 10.0, 1e-12);
}

TEST(ReferenceData, ExtensionFileMatchesEmbedded) {
  const auto file = io::load_force_csv(kDataDir + "ref_extension_125kPa.csv");
  const auto ref = reference_extension_125kpa();
  ASSERT_EQ(file.size(), ref.points.size());
  for (std::size_t i = 0; i < file.size(); ++i) {
    EXPECT_EQ(file[i].displacement_mm, ref.points[i].displacement_mm);
    EXPECT_EQ(file[i].force_n, ref.points[i].force_n);
  }
}

TEST(ReferenceData, StaticLoadFileMatchesEmbedded) {
  std::ifstream in(kDataDir + "ref_staticload_200kPa.csv");
  ASSERT_TRUE(in);
  std::vector<std::pair<double, double>> rows;
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      EXPECT_EQ(line, "load_kg,force_n");
      header = true;
      continue;
    }
    const auto comma = line.find(',');
    rows.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
  }
  const auto ref = reference_static_load_200kpa();
  ASSERT_EQ(rows.size(), ref.points.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_NEAR(units::kg_to_newton(rows[i].first), ref.points[i].load_n, 1e-12);
    EXPECT_EQ(rows[i].second, ref.points[i].force_n);
  }
}

TEST(Abscissa, SelectsVariable) {
  const OperatingPoint p{1.0, 2.0, 3.0, 4.0};
  EXPECT_EQ(abscissa(p, SweptVariable::Pressure), 1.0);
  EXPECT_EQ(abscissa(p, SweptVariable::Displacement), 2.0);
  EXPECT_EQ(abscissa(p, SweptVariable::Load), 4.0);
}

TEST(PrescribedExtensionSweep, ConstantAreaPredictions) {
  const double grid[] = {0, 10, 20, 30, 40};
  const auto pts = prescribed_extension_sweep(calibrated_model(), 125e3, grid);
  const double expected[] = {111.9996, 89.50929, 61.95712, 26.85423, -18.28824};
  ASSERT_EQ(pts.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(pts[i].displacement_mm, grid[i]);
    EXPECT_EQ(pts[i].pressure_pa, 125e3);
    EXPECT_NEAR(pts[i].force_n, expected[i], 1e-4);
    EXPECT_NEAR(pts[i].force_n, 125e3 * kArea - oracle::stiffness_force(grid[i]), 1e-9);
  }
  EXPECT_TRUE(prescribed_extension_sweep(calibrated_model(), 125e3, std::span<const double>{}).empty());
}

TEST(PrescribedExtensionSweep, PropertyOrderedByPressure) {
  const auto grid = oracle::linspace(0.0, 40.0, 81);
  const auto low = prescribed_extension_sweep(calibrated_model(), 80e3, grid);
  const auto high = prescribed_extension_sweep(calibrated_model(), 125e3, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) EXPECT_GT(high[i].force_n, low[i].force_n);
}

TEST(StaticLoadSweep, NoLoadAt200kPa) {
  const double grid[] = {200e3};
  const auto pts = static_load_sweep(calibrated_model(), 0.0, grid, 0.0);
  EXPECT_NEAR(pts[0].force_n, 179.0646, 1e-4);
  EXPECT_NEAR(pts[0].force_n, 200e3 * kArea + 0.2246, 1e-9);
}

TEST(StaticLoadSweep, LoadedAt200kPa) {
  const double grid[] = {200e3};
  EXPECT_NEAR(static_load_sweep(calibrated_model(), 9.81, grid, 0.0)[0].force_n, 169.2546, 1e-4);
  EXPECT_NEAR(static_load_sweep(calibrated_model(), 34.335, grid, 0.0)[0].force_n, 144.7296, 1e-4);
}

TEST(StaticLoadSweep, ZeroBelowDeadBand) {
  const auto m = calibrated_model();
  const double load = 34.335;
  const double p_th = dead_band_pressure(m, load, 0.0);
  const auto grid = oracle::linspace(0.0, 200e3, 201);
  for (const auto& pt : static_load_sweep(m, load, grid, 0.0)) {
    EXPECT_EQ(pt.load_n, load);
    if (pt.pressure_pa <= p_th) {
      EXPECT_EQ(pt.force_n, 0.0);
    } else {
      EXPECT_GT(pt.force_n, 0.0);
    }
  }
}

TEST(StaticLoadSweep, HugeLoadGivesAllZero) {
  const auto grid = oracle::linspace(0.0, 200e3, 21);
  for (const auto& pt : static_load_sweep(calibrated_model(), 1e6, grid, 0.0)) EXPECT_EQ(pt.force_n, 0.0);
}

TEST(StaticLoadSweep, Errors) {
  const double unsorted[] = {100e3, 50e3};
  EXPECT_THROW(static_load_sweep(calibrated_model(), 0.0, unsorted, 0.0), UsageError);
  const double grid[] = {50e3};
  EXPECT_THROW(static_load_sweep(calibrated_model(), -1.0, grid, 0.0), DomainError);
  EXPECT_THROW(static_load_sweep(calibrated_model(), std::nan(""), grid, 0.0), DomainError);
}

TEST(StaticLoadSweep, PropertyPointwiseOrderedByLoad) {
  const auto m = calibrated_model();
  const auto grid = oracle::linspace(0.0, 200e3, 401);
  std::vector<std::vector<OperatingPoint>> curves;
  for (double kg : kStaticLoadMassesKg) curves.push_back(static_load_sweep(m, units::kg_to_newton(kg), grid, 0.0));
  for (std::size_t c = 1; c < curves.size(); ++c) {
    for (std::size_t i = 0; i < grid.size(); ++i) EXPECT_LE(curves[c][i].force_n, curves[c - 1][i].force_n);
  }
}

TEST(StaticLoadSweep, PropertyNonDecreasingInPressure) {
  const auto m = LssaModel::from_area_profile(AreaProfile({{0.0, 9e-4}, {40.0, 7e-4}}),
                                              reference_stiffness_polynomial());
  auto rng = oracle::make_rng(20);
  for (int trial = 0; trial < 20; ++trial) {
    const double load = oracle::uniform(rng, 0.0, 80.0);
    const double y = oracle::uniform(rng, 0.0, 40.0);
    const auto pts = static_load_sweep(m, load, oracle::linspace(0.0, 3e5, 301), y);
    for (std::size_t i = 1; i < pts.size(); ++i) EXPECT_GE(pts[i].force_n, pts[i - 1].force_n);
  }
}

TEST(StaticLoadSweep, PropertyDeadBandIncreasesAcrossLoads) {
  const auto m = calibrated_model();
  double prev = -1.0;
  for (double kg : kStaticLoadMassesKg) {
    const double p = dead_band_pressure(m, units::kg_to_newton(kg), 0.0);
    EXPECT_GT(p, prev);
    prev = p;
  }
  EXPECT_NEAR(dead_band_pressure(m, units::kg_to_newton(2.0), 0.0), 21690.226, 1e-3);
}

TEST(CompareToReference, IdentityIsZero) {
  const auto ref = reference_extension_125kpa();
  const auto m = compare_to_reference(ref.points, ref);
  EXPECT_EQ(m.n, 5u);
  EXPECT_EQ(m.rmse, 0.0);
  EXPECT_EQ(m.max_abs_error, 0.0);
  EXPECT_EQ(m.signed_bias, 0.0);
}

TEST(CompareToReference, ConstantOffset) {
  const auto ref = reference_extension_125kpa();
  auto shifted = ref.points;
  for (auto& p : shifted) p.force_n += 1.0;
  const auto m = compare_to_reference(shifted, ref);
  EXPECT_DOUBLE_EQ(m.rmse, 1.0);
  EXPECT_DOUBLE_EQ(m.max_abs_error, 1.0);
  EXPECT_DOUBLE_EQ(m.signed_bias, 1.0);
}

TEST(CompareToReference, ConstantAreaModelAgainstExtensionData) {
  const double grid[] = {0, 10, 20, 30, 40};
  const auto pred = prescribed_extension_sweep(calibrated_model(), 125e3, grid);
  const auto m = compare_to_reference(pred, reference_extension_125kpa());
  EXPECT_NEAR(m.rmse, 15.1124, 1e-4);
  EXPECT_NEAR(m.max_abs_error, 20.95712, 1e-4);
  EXPECT_NEAR(m.signed_bias, 5.6064, 1e-4);
}

TEST(CompareToReference, InterpolatesAndSkipsUncovered) {
  ReferenceDataset ref;
  ref.name = "synthetic";
  ref.swept = SweptVariable::Displacement;
  ref.points = {{0.0, 5.0, 10.0, 0.0}, {0.0, 50.0, 0.0, 0.0}};
  const std::vector<OperatingPoint> pred{{0.0, 0.0, 0.0, 0.0}, {0.0, 10.0, 20.0, 0.0}};
  const auto m = compare_to_reference(pred, ref);
  EXPECT_EQ(m.n, 1u);
  EXPECT_EQ(m.rmse, 0.0);
}

TEST(CompareToReference, StaticLoadBySweptLoad) {
  const auto ref = reference_static_load_200kpa();
  std::vector<OperatingPoint> pred;
  for (const auto& r : ref.points) pred.push_back({200e3, 0.0, r.force_n + 2.0, r.load_n});
  const auto m = compare_to_reference(pred, ref);
  EXPECT_EQ(m.n, 3u);
  EXPECT_NEAR(m.signed_bias, 2.0, 1e-12);
}

TEST(CompareToReference, EmptyIntersectionIsUsageError) {
  const std::vector<OperatingPoint> pred{{125e3, 50.0, 1.0, 0.0}, {125e3, 60.0, 1.0, 0.0}};
  EXPECT_THROW(compare_to_reference(pred, reference_extension_125kpa()), UsageError);
  EXPECT_THROW(compare_to_reference(std::vector<OperatingPoint>{}, reference_extension_125kpa()), UsageError);
}

} // namespace
} // namespace lssa
