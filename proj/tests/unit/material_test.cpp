#include <gtest/gtest.h>

#include <cmath>

#include "lssa/errors.hpp"
#include "lssa/material.hpp"
#include "support/oracles.hpp"

namespace lssa {
namespace {

TEST(StrainInvariants, UndeformedIsThreeThree) {
  const auto inv = strain_invariants(1.0);
  EXPECT_EQ(inv.i1, 3.0);
  EXPECT_EQ(inv.i2, 3.0);
}

TEST(StrainInvariants, StretchTwoAndHalf) {
  auto inv = strain_invariants(2.0);
  EXPECT_DOUBLE_EQ(inv.i1, 5.0);
  EXPECT_DOUBLE_EQ(inv.i2, 4.25);
  inv = strain_invariants(0.5);
  EXPECT_DOUBLE_EQ(inv.i1, 4.25);
  EXPECT_DOUBLE_EQ(inv.i2, 5.0);
}

TEST(StrainInvariants, RejectsNonPositiveAndNonFinite) {
  EXPECT_THROW(strain_invariants(0.0), DomainError);
  EXPECT_THROW(strain_invariants(-1.5), DomainError);
  EXPECT_THROW(strain_invariants(std::nan("")), DomainError);
  EXPECT_THROW(strain_invariants(INFINITY), DomainError);
}

TEST(StrainInvariants, PropertyI1OfStretchEqualsI2OfInverse) {
  auto rng = oracle::make_rng(1);
  for (int i = 0; i < 500; ++i) {
    const double l = std::exp(oracle::uniform(rng, -3.0, 3.0));
    const auto a = strain_invariants(l);
    const auto b = strain_invariants(1.0 / l);
    EXPECT_LE(oracle::relative_error(a.i1, b.i2), 1e-12) << "stretch " << l;
    EXPECT_GE(a.i1, 3.0);
    EXPECT_GE(a.i2, 3.0);
  }
}

TEST(HyperelasticParams, ValidatesArityFinitenessAndIncompressibility) {
  EXPECT_THROW(HyperelasticParams(Family::MooneyRivlin5, {1.0, 2.0}), DomainError);
  EXPECT_THROW(HyperelasticParams(Family::NeoHookean, {NAN}), DomainError);
  EXPECT_THROW(HyperelasticParams(Family::NeoHookean, {1.0}, 0.01), DomainError);
  EXPECT_NO_THROW(HyperelasticParams(Family::Yeoh3, {1.0, 0.0, 0.0}));
  EXPECT_EQ(arity(Family::NeoHookean), 1u);
  EXPECT_EQ(arity(Family::MooneyRivlin2), 2u);
  EXPECT_EQ(arity(Family::MooneyRivlin3), 3u);
  EXPECT_EQ(arity(Family::MooneyRivlin5), 5u);
  EXPECT_EQ(arity(Family::Yeoh3), 3u);
}

TEST(HyperelasticParams, FamilyNamesRoundTrip) {
  for (Family f : kAllFamilies) {
    EXPECT_EQ(parse_family(short_name(f)), f);
  }
  EXPECT_FALSE(parse_family("ogden").has_value());
}

TEST(HyperelasticParams, TpuConstants) {
  const auto p = tpu85_mooney_rivlin5();
  EXPECT_EQ(p.family(), Family::MooneyRivlin5);
  EXPECT_EQ(p.constants(), (std::vector<double>{-3.1992, 6.977, 0.0281, -0.074972, 0.92155}));
  EXPECT_EQ(p.d1(), 0.0);
}

TEST(StrainEnergy, ZeroAtReferenceForEveryFamily) {
  auto rng = oracle::make_rng(2);
  for (Family f : kAllFamilies) {
    std::vector<double> c(arity(f));
    for (auto& v : c) v = oracle::uniform(rng, -10.0, 10.0);
    EXPECT_EQ(strain_energy(HyperelasticParams(f, c), 1.0), 0.0);
  }
}

TEST(StrainEnergy, NeoHookeanAtStretchTwo) {
  EXPECT_DOUBLE_EQ(strain_energy(HyperelasticParams(Family::NeoHookean, {1.0}), 2.0), 2.0);
}

TEST(StrainEnergy, TpuMooneyRivlinTermByTerm) {
  const double expected = oracle::mr5_energy(-3.1992, 6.977, 0.0281, -0.074972, 0.92155, 2.0);
  EXPECT_NEAR(expected, 3.687741875, 1e-12);
  EXPECT_NEAR(strain_energy(tpu85_mooney_rivlin5(), 2.0), expected, 1e-12);
}

TEST(NominalStress, ZeroAtReferenceForEveryFamily) {
  for (Family f : kAllFamilies) {
    std::vector<double> c(arity(f), 1.5);
    EXPECT_EQ(uniaxial_nominal_stress(HyperelasticParams(f, c), 1.0), 0.0);
  }
}

TEST(NominalStress, NeoHookeanClosedForm) {
  EXPECT_DOUBLE_EQ(uniaxial_nominal_stress(HyperelasticParams(Family::NeoHookean, {1.0}), 2.0), 3.5);
  EXPECT_THROW(uniaxial_nominal_stress(HyperelasticParams(Family::NeoHookean, {1.0}), 0.0), DomainError);
}

TEST(NominalStress, MatchesEnergyFiniteDifferenceAtOnePointOne) {
  const auto p = tpu85_mooney_rivlin5();
  const double h = 1e-5;
  const double fd = (oracle::mr5_energy(-3.1992, 6.977, 0.0281, -0.074972, 0.92155, 1.1 + h) -
                     oracle::mr5_energy(-3.1992, 6.977, 0.0281, -0.074972, 0.92155, 1.1 - h)) /
                    (2 * h);
  EXPECT_LE(oracle::relative_error(uniaxial_nominal_stress(p, 1.1), fd), 1e-6);
}

TEST(NominalStress, PropertyEnergyDerivativeAcrossFamilies) {
  // Stable sets only: each family with constants that keep dsigma/dlambda > 0.
  const HyperelasticParams sets[] = {
      tpu85_mooney_rivlin5(),
      HyperelasticParams(Family::NeoHookean, {0.4}),
      HyperelasticParams(Family::MooneyRivlin2, {0.4, 0.1}),
      HyperelasticParams(Family::MooneyRivlin3, {0.4, 0.1, 0.02}),
      HyperelasticParams(Family::Yeoh3, {0.4, 0.01, 1e-4}),
  };
  for (const auto& p : sets) {
    ASSERT_TRUE(stability_scan(p, 1.0, 7.6, 200).stable);
    for (double l : oracle::linspace(1.01, 7.6, 120)) {
      const double h = 1e-5;
      const double fd = (strain_energy(p, l + h) - strain_energy(p, l - h)) / (2 * h);
      EXPECT_LE(oracle::relative_error(uniaxial_nominal_stress(p, l), fd), 1e-6)
          << short_name(p.family()) << " at " << l;
    }
  }
}

TEST(NominalStress, SignFollowsStretchForStableSet) {
  const auto p = tpu85_mooney_rivlin5();
  for (double l : {0.6, 0.9, 0.99}) EXPECT_LT(uniaxial_nominal_stress(p, l), 0.0);
  for (double l : {1.01, 2.0, 7.0}) EXPECT_GT(uniaxial_nominal_stress(p, l), 0.0);
}

TEST(NominalStress, ZeroPaddedMr5IsBitEqualToMr2) {
  const HyperelasticParams mr2(Family::MooneyRivlin2, {-3.1992, 6.977});
  const HyperelasticParams mr5(Family::MooneyRivlin5, {-3.1992, 6.977, 0.0, 0.0, 0.0});
  for (double l : oracle::linspace(0.3, 7.6, 97)) {
    EXPECT_EQ(uniaxial_nominal_stress(mr2, l), uniaxial_nominal_stress(mr5, l));
    EXPECT_EQ(strain_energy(mr2, l), strain_energy(mr5, l));
  }
}

TEST(StressBasis, DotWithConstantsGivesStress) {
  const auto p = tpu85_mooney_rivlin5();
  for (double l : {0.7, 1.3, 4.0}) {
    const auto row = stress_basis(p.family(), l);
    double s = 0.0;
    for (std::size_t k = 0; k < row.size(); ++k) s += row[k] * p.constants()[k];
    EXPECT_NEAR(s, uniaxial_nominal_stress(p, l), 1e-12 * std::max(1.0, std::abs(s)));
  }
}

TEST(StabilityScan, NeoHookeanIsStable) {
  const auto r = stability_scan(HyperelasticParams(Family::NeoHookean, {1.0}), 1.0, 7.6, 100);
  EXPECT_TRUE(r.stable);
  EXPECT_FALSE(r.first_violation.has_value());
  EXPECT_GT(r.min_slope, 0.0);
}

TEST(StabilityScan, SmallestGridChecksBothEndpoints) {
  const auto r = stability_scan(HyperelasticParams(Family::NeoHookean, {1.0}), 1.0, 2.0, 2);
  EXPECT_TRUE(r.stable);
  // d sigma / d lambda = 2 C10 (1 + 2 / lambda^3) is smallest at the upper end.
  EXPECT_DOUBLE_EQ(r.min_slope_stretch, 2.0);
  EXPECT_NEAR(r.min_slope, 2.0 * (1.0 + 2.0 / 8.0), 1e-6);
}

TEST(StabilityScan, TpuConstantsStableOverTestedRange) {
  // Dense finite-difference sweep done ahead of time: the smallest tangent is
  // about 0.8354 MPa near stretch 2.177, so no violation on [1, 7.6].
  const auto r = stability_scan(tpu85_mooney_rivlin5(), 1.0, 7.6, 500);
  EXPECT_TRUE(r.stable);
  EXPECT_NEAR(r.min_slope, 0.83542, 1e-4);
  EXPECT_NEAR(r.min_slope_stretch, 2.177, 0.02);
}

TEST(StabilityScan, DetectsNegativeShearModulus) {
  const auto r = stability_scan(HyperelasticParams(Family::NeoHookean, {-1.0}), 1.0, 3.0, 10);
  EXPECT_FALSE(r.stable);
  ASSERT_TRUE(r.first_violation.has_value());
  EXPECT_DOUBLE_EQ(*r.first_violation, 1.0);
}

TEST(StabilityScan, DetectsSofteningMooneyRivlin) {
  // C01 < 0 dominates at large stretch: tangent turns negative part-way up.
  const auto r = stability_scan(HyperelasticParams(Family::MooneyRivlin2, {0.1, -0.5}), 1.0, 7.6, 400);
  EXPECT_FALSE(r.stable);
}

TEST(StabilityScan, RejectsDegenerateGrids) {
  const HyperelasticParams p(Family::NeoHookean, {1.0});
  EXPECT_THROW(stability_scan(p, 2.0, 1.0, 10), UsageError);
  EXPECT_THROW(stability_scan(p, 0.0, 1.0, 10), UsageError);
  EXPECT_THROW(stability_scan(p, 1.0, 2.0, 1), UsageError);
}

TEST(SmallStrainModuli, Definitions) {
  auto m = small_strain_moduli(HyperelasticParams(Family::NeoHookean, {0.5}));
  EXPECT_DOUBLE_EQ(m.shear_mpa, 1.0);
  EXPECT_DOUBLE_EQ(m.youngs_mpa, 3.0);

  m = small_strain_moduli(tpu85_mooney_rivlin5());
  EXPECT_NEAR(m.shear_mpa, 7.5556, 1e-12);
  EXPECT_NEAR(m.youngs_mpa, 22.6668, 1e-12);
  EXPECT_EQ(m.youngs_mpa, 3.0 * m.shear_mpa);

  m = small_strain_moduli(HyperelasticParams(Family::MooneyRivlin3, {0.0, 0.0, 0.0}));
  EXPECT_EQ(m.shear_mpa, 0.0);
  EXPECT_EQ(m.youngs_mpa, 0.0);
}

TEST(SmallStrainModuli, MatchesInitialStressSlope) {
  // sigma ~ E0 (lambda - 1) near the reference state.
  for (Family f : kAllFamilies) {
    std::vector<double> c(arity(f), 0.3);
    const HyperelasticParams p(f, c);
    const double h = 1e-6;
    const double slope = uniaxial_nominal_stress(p, 1.0 + h) / h;
    EXPECT_NEAR(slope, small_strain_moduli(p).youngs_mpa, 1e-4) << short_name(f);
  }
}

} // namespace
} // namespace lssa
