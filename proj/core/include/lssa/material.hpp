#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace lssa {

/// Incompressible strain-energy families. All of them are polynomials in
/// (I1 - 3) and (I2 - 3), hence linear in their constants.
///
/// Constant ordering per family (all MPa):
///   NeoHookean     C10
///   MooneyRivlin2  C10 C01
///   MooneyRivlin3  C10 C01 C11
///   MooneyRivlin5  C10 C01 C20 C11 C02
///   Yeoh3          C10 C20 C30
enum class Family { NeoHookean, MooneyRivlin2, MooneyRivlin3, MooneyRivlin5, Yeoh3 };

inline constexpr Family kAllFamilies[] = {Family::NeoHookean, Family::MooneyRivlin2,
                                          Family::MooneyRivlin3, Family::MooneyRivlin5,
                                          Family::Yeoh3};

std::size_t arity(Family family);

/// Short name used on the command line: nh, mr2, mr3, mr5, yeoh3.
std::string_view short_name(Family family);
std::optional<Family> parse_family(std::string_view name);

/// Names of the constants of a family in storage order ("C10", "C01", ...).
std::vector<std::string_view> constant_names(Family family);

class HyperelasticParams {
public:
  /// Throws DomainError when the arity does not match, a constant is not
  /// finite, or d1 is non-zero (only incompressible models are supported).
  HyperelasticParams(Family family, std::vector<double> constants_mpa, double d1 = 0.0);

  Family family() const { return family_; }
  const std::vector<double>& constants() const { return constants_; }
  double d1() const { return d1_; }

private:
  Family family_;
  std::vector<double> constants_;
  double d1_;
};

/// Five-parameter Mooney-Rivlin constants identified for printed TPU 85A.
HyperelasticParams tpu85_mooney_rivlin5();

struct UniaxialSample {
  double stretch;             // lambda = 1 + engineering strain
  double nominal_stress_mpa;
};

struct StrainInvariants {
  double i1;
  double i2;
};

/// Incompressible uniaxial invariants: I1 = l^2 + 2/l, I2 = 2l + 1/l^2.
StrainInvariants strain_invariants(double stretch);

double strain_energy(const HyperelasticParams& params, double stretch);

/// Nominal (engineering) stress 2(l - l^-2)(dW/dI1 + l^-1 dW/dI2), MPa.
double uniaxial_nominal_stress(const HyperelasticParams& params, double stretch);

/// Per-constant contributions to the nominal stress at `stretch`, in the
/// family's storage order. The stress is the dot product of this vector
/// with the constants; the fitter uses it as a design-matrix row.
std::vector<double> stress_basis(Family family, double stretch);

struct StabilityReport {
  bool stable = true;
  std::optional<double> first_violation;  // stretch of the first grid point with dsigma/dlambda <= 0
  double min_slope = 0.0;                 // smallest dsigma/dlambda seen, MPa
  double min_slope_stretch = 0.0;
};

inline constexpr double kStabilityStep = 1e-5;

/// Drucker-type check on a uniform grid of `points` stretches in
/// [stretch_min, stretch_max]: the tangent of the nominal stress (central
/// difference, step 1e-5) must be positive everywhere.
StabilityReport stability_scan(const HyperelasticParams& params, double stretch_min,
                               double stretch_max, std::size_t points);

struct SmallStrainModuli {
  double shear_mpa;
  double youngs_mpa;
};

SmallStrainModuli small_strain_moduli(const HyperelasticParams& params);

} // namespace lssa
