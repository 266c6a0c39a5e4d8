#include "lssa/validation.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "lssa/experiments.hpp"
#include "lssa/fitting.hpp"
#include "lssa/force_model.hpp"
#include "lssa/geometry.hpp"
#include "lssa/material.hpp"
#include "lssa/polynomial.hpp"
#include "lssa/units.hpp"

namespace lssa {
namespace {

ValidationCheck near(std::string label, double expected, double computed, double tol,
                     std::string note = {}) {
  return {std::move(label), CheckKind::Near, expected, computed, tol,
          std::abs(computed - expected) <= tol, std::move(note)};
}

ValidationCheck at_most(std::string label, double computed, double bound, std::string note = {}) {
  return {std::move(label), CheckKind::AtMost, 0.0, computed, bound, computed <= bound,
          std::move(note)};
}

ValidationCheck flag(std::string label, bool condition, std::string note = {}) {
  return {std::move(label), CheckKind::Flag, 1.0, condition ? 1.0 : 0.0, 0.0, condition,
          std::move(note)};
}

ValidationCheck report(std::string label, double expected, double computed, std::string note) {
  return {std::move(label), CheckKind::Report, expected, computed, 0.0, true, std::move(note)};
}

double relative_error(double computed, double expected) {
  return std::abs(computed - expected) / std::max(std::abs(expected), 1e-300);
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return v;
}

constexpr double kAnchorForceN = 112.0;

LssaModel anchored_constant_area_model() {
  const Polynomial fk = reference_stiffness_polynomial();
  const double area = calibrate_effective_area(kExtensionTestPressurePa, 0.0, kAnchorForceN, fk);
  return LssaModel::from_area_profile(AreaProfile::constant(area), fk);
}

CriterionResult derivative_consistency() {
  CriterionResult c{1, "stiffness derivative matches the published axial stiffness", {}};
  const Polynomial k = differentiate(reference_stiffness_polynomial());
  const double published[] = {1.24443e-3, 2.5730e-2, 2.0789};  // y^2, y, 1
  const char* names[] = {"y^2 coefficient", "y^1 coefficient", "y^0 coefficient"};
  for (int i = 0; i < 3; ++i) {
    c.checks.push_back(near(names[i], published[i], k.coefficient(2 - i), 1e-7));
  }
  return c;
}

CriterionResult anchor_point() {
  CriterionResult c{2, "125 kPa zero-extension anchor", {}};
  const Polynomial fk = reference_stiffness_polynomial();
  const double area = calibrate_effective_area(kExtensionTestPressurePa, 0.0, kAnchorForceN, fk);
  const auto model = LssaModel::from_area_profile(AreaProfile::constant(area), fk);
  c.checks.push_back(near("net force at 125 kPa, y = 0 [N]", kAnchorForceN,
                          net_force(model, kExtensionTestPressurePa, 0.0), 1e-9));
  // (112 + 0.2246) / 125000, written out as plain arithmetic.
  const double oracle = 111.7754 / 125000.0;
  c.checks.push_back(near("calibrated effective area [m^2]", oracle, area, 1e-7));
  c.checks.push_back(near("calibrated effective area vs 8.9420e-4 [m^2]", 8.9420e-4, area, 1e-7));
  return c;
}

CriterionResult zero_force_extension() {
  CriterionResult c{3, "free extension of the constant-area model at 125 kPa", {}};
  const auto model = anchored_constant_area_model();
  const auto ext = free_extension(model, kExtensionTestPressurePa, 0.0);
  c.checks.push_back(flag("bisection reached equilibrium", ext.status == ExtensionStatus::Equilibrium));
  c.checks.push_back(near("free extension [mm]", 36.26, ext.displacement_mm, 0.05));
  const double gap = (40.0 - ext.displacement_mm) / 40.0;
  c.checks.push_back(at_most("shortfall vs ~40 mm measured extension [fraction]", gap, 0.10,
                             "MODEL GAP: constant-area model stops short of the measured stroke"));
  return c;
}

CriterionResult area_profile_round_trip() {
  CriterionResult c{4, "area profile calibrated from the 125 kPa extension curve", {}};
  const auto reference = reference_extension_125kpa();
  const Polynomial fk = reference_stiffness_polynomial();
  const auto calibration = calibrate_area_profile(reference.points, fk);
  const auto model = LssaModel::from_area_profile(calibration.profile, fk);
  std::vector<double> grid;
  for (const auto& p : reference.points) grid.push_back(p.displacement_mm);
  const auto sweep = prescribed_extension_sweep(model, kExtensionTestPressurePa, grid);
  const auto metrics = compare_to_reference(sweep, reference);
  c.checks.push_back(at_most("forward sweep rmse vs reference [N]", metrics.rmse, 1e-6));
  const double oracle[] = {8.9420e-4, 7.5413e-4, 7.2654e-4, 8.3137e-4, 1.0405e-3};
  for (std::size_t i = 0; i < 5; ++i) {
    const auto& p = calibration.profile.points()[i];
    std::ostringstream label;
    label << "area at y = " << p.displacement_mm << " mm [m^2]";
    c.checks.push_back(near(label.str(), oracle[i], p.area_m2, 1e-7));
  }
  c.checks.push_back(flag("non-monotone profile flagged", calibration.non_monotone,
                          "calibrated area dips at 20 mm and rises past 30 mm"));
  return c;
}

CriterionResult hyperelastic_round_trip() {
  CriterionResult c{5, "five-parameter Mooney-Rivlin fit round trip", {}};
  const auto truth = tpu85_mooney_rivlin5();
  std::vector<UniaxialSample> samples;
  for (double l : linspace(1.05, 7.6, 50)) {
    samples.push_back({l, uniaxial_nominal_stress(truth, l)});
  }
  const auto fit = fit_hyperelastic(samples, Family::MooneyRivlin5);
  const auto names = constant_names(Family::MooneyRivlin5);
  for (std::size_t i = 0; i < names.size(); ++i) {
    c.checks.push_back(at_most(std::string(names[i]) + " relative error",
                               relative_error(fit.params.constants()[i], truth.constants()[i]), 1e-8));
  }
  const Family candidates[] = {Family::NeoHookean, Family::MooneyRivlin2, Family::MooneyRivlin5};
  const auto ranked = rank_models(samples, candidates);
  c.checks.push_back(flag("mr5 ranked first among {nh, mr2, mr5}",
                          ranked.front().family == Family::MooneyRivlin5));
  return c;
}

CriterionResult stiffness_round_trip() {
  CriterionResult c{6, "stiffness polynomial fit round trip", {}};
  const Polynomial truth = reference_stiffness_polynomial();
  std::vector<ForceSample> samples;
  for (int y = 0; y <= 40; ++y) samples.push_back({double(y), evaluate(truth, y)});
  const auto fit = fit_polynomial(samples, 3);
  const char* names[] = {"d", "c", "b", "a"};
  for (int i = 0; i <= 3; ++i) {
    c.checks.push_back(near(std::string("coefficient ") + names[i], truth.coefficient(i),
                            fit.polynomial.coefficient(i), 1e-9));
  }
  return c;
}

CriterionResult static_load_properties() {
  CriterionResult c{7, "static-load response", {}};
  const auto model = anchored_constant_area_model();
  const double g = units::kStandardGravity;

  std::vector<double> dead_bands;
  for (double kg : kStaticLoadMassesKg) {
    dead_bands.push_back(dead_band_pressure(model, units::kg_to_newton(kg, g), 0.0));
  }
  c.checks.push_back(flag("dead-band pressure strictly increases over 0, 1, 2, 3.5 kg",
                          std::adjacent_find(dead_bands.begin(), dead_bands.end(),
                                             std::greater_equal<>()) == dead_bands.end()));

  const auto pressures = linspace(0.0, kStaticLoadMaxPressurePa, 41);
  std::vector<std::vector<OperatingPoint>> curves;
  for (double kg : kStaticLoadMassesKg) {
    curves.push_back(static_load_sweep(model, units::kg_to_newton(kg, g), pressures, 0.0));
  }
  bool ordered = true;
  for (std::size_t k = 1; k < curves.size(); ++k) {
    for (std::size_t i = 0; i < pressures.size(); ++i) {
      ordered = ordered && curves[k][i].force_n <= curves[k - 1][i].force_n;
    }
  }
  c.checks.push_back(flag("force-pressure curves ordered by load", ordered));

  const auto reference = reference_static_load_200kpa(g);
  std::vector<OperatingPoint> at_max;
  for (const auto& ref : reference.points) {
    const double p[] = {kStaticLoadMaxPressurePa};
    at_max.push_back(static_load_sweep(model, ref.load_n, p, 0.0).front());
  }
  const double no_load = at_max.front().force_n;
  const double deviation = std::abs(no_load - 160.0) / 160.0;
  c.checks.push_back(report("no-load force at 200 kPa [N]", 160.0, no_load,
                            "MODEL GAP: constant area over-predicts the measured ~160 N"));
  c.checks.push_back(at_most("no-load deviation at 200 kPa [fraction]", deviation, 0.15));
  c.checks.push_back(report("1 kg force at 200 kPa [N]", 155.0, at_max[1].force_n,
                            "MODEL GAP: load subtracted in full at every pressure"));
  c.checks.push_back(report("3.5 kg force at 200 kPa [N]", 130.0, at_max[2].force_n,
                            "MODEL GAP: load subtracted in full at every pressure"));
  const auto metrics = compare_to_reference(at_max, reference);
  c.checks.push_back(report("rmse vs 200 kPa static-load reference [N]",
                            std::numeric_limits<double>::quiet_NaN(), metrics.rmse,
                            "no published counterpart"));
  const double onset_mid = 0.5 * (kStaticLoadOnset.onset_low_pa + kStaticLoadOnset.onset_high_pa);
  c.checks.push_back(report("3.5 kg dead-band pressure [kPa], measured onset 60-70, midpoint shown",
                            units::pa_to_kpa(onset_mid), units::pa_to_kpa(dead_bands.back()),
                            "MODEL GAP: predicted onset is earlier than measured"));
  return c;
}

CriterionResult numerical_invariants() {
  CriterionResult c{8, "numerical invariants", {}};

  const auto mr5 = tpu85_mooney_rivlin5();
  double worst = 0.0;
  for (double l : linspace(1.01, 7.6, 200)) {
    const double h = 1e-5;
    const double fd = (strain_energy(mr5, l + h) - strain_energy(mr5, l - h)) / (2.0 * h);
    worst = std::max(worst, relative_error(uniaxial_nominal_stress(mr5, l), fd));
  }
  c.checks.push_back(at_most("stress vs dW/dlambda finite difference, max relative error", worst, 1e-6));

  double w1 = 0.0;
  double s1 = 0.0;
  const HyperelasticParams samples[] = {
      mr5,
      HyperelasticParams(Family::NeoHookean, {0.7}),
      HyperelasticParams(Family::MooneyRivlin2, {0.3, -0.1}),
      HyperelasticParams(Family::MooneyRivlin3, {0.3, 0.2, 0.05}),
      HyperelasticParams(Family::Yeoh3, {0.5, -0.01, 1e-4}),
  };
  for (const auto& p : samples) {
    w1 = std::max(w1, std::abs(strain_energy(p, 1.0)));
    s1 = std::max(s1, std::abs(uniaxial_nominal_stress(p, 1.0)));
  }
  c.checks.push_back(near("max |W(1)| over families", 0.0, w1, 0.0));
  c.checks.push_back(near("max |sigma(1)| over families", 0.0, s1, 0.0));

  ActuatorGeometry g;
  g.r1o_m = 0.020;
  g.r1i_m = 0.010;
  g.r2i_m = 0.015;
  g.r3i_m = 0.010;
  g.s_m = 0.005;
  worst = 0.0;
  for (double theta : linspace(0.0, 0.999 * units::kHalfPi, 50)) {
    const double lhs = external_wall_area(g, theta) - internal_wall_area(g, theta);
    const double rhs = 2.0 * units::kPi * g.s_m * std::cos(theta) * (g.r2i_m - g.r3i_m);
    worst = std::max(worst, relative_error(lhs, rhs));
  }
  c.checks.push_back(at_most("A2 - A3 = 2 pi S cos(theta) (R2i - R3i), max relative error", worst, 1e-12));

  const auto model = anchored_constant_area_model();
  const auto geometric = LssaModel::from_geometry(g, LinearUnfold{}, reference_stiffness_polynomial());
  worst = 0.0;
  for (const LssaModel* m : {&model, &geometric}) {
    for (double y : linspace(0.0, 40.0, 9)) {
      const double p1 = 50e3;
      const double p2 = 175e3;
      const double slope = (net_force(*m, p2, y) - net_force(*m, p1, y)) / (p2 - p1);
      worst = std::max(worst, relative_error(slope, m->effective_area(y)));
    }
  }
  c.checks.push_back(at_most("net force secant slope in P vs A_eff, max relative error", worst, 1e-12));

  worst = 0.0;
  for (double p_kpa : {50.0, 80.0, 125.0, 150.0}) {
    for (double load : {0.0, 10.0, 40.0}) {
      const double p = units::kpa_to_pa(p_kpa);
      const auto ext = free_extension(model, p, load);
      if (ext.status != ExtensionStatus::Equilibrium) continue;
      worst = std::max(worst, std::abs(net_force(model, p, ext.displacement_mm) - load));
    }
  }
  c.checks.push_back(at_most("|net_force(P, free_extension(P, L)) - L| [N]", worst, 1e-6));
  return c;
}

std::string format_number(double v) {
  std::ostringstream s;
  s << std::setprecision(8) << v;
  return s.str();
}

} // namespace

bool CriterionResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.passed; });
}

std::vector<CriterionResult> run_validation() {
  return {derivative_consistency(), anchor_point(),       zero_force_extension(),
          area_profile_round_trip(), hyperelastic_round_trip(), stiffness_round_trip(),
          static_load_properties(),  numerical_invariants()};
}

bool all_passed(std::span<const CriterionResult> results) {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
}

void write_validation_report(std::ostream& out, std::span<const CriterionResult> results) {
  for (const auto& r : results) {
    out << "[" << r.id << "] " << r.title << '\n';
    for (const auto& c : r.checks) {
      out << "    " << c.label << ": ";
      switch (c.kind) {
        case CheckKind::Near:
          out << "expected " << format_number(c.expected) << ", computed " << format_number(c.computed)
              << ", tol " << format_number(c.tolerance);
          break;
        case CheckKind::AtMost:
          out << "computed " << format_number(c.computed) << " <= " << format_number(c.tolerance);
          break;
        case CheckKind::Flag:
          out << (c.computed != 0.0 ? "true" : "false");
          break;
        case CheckKind::Report:
          if (!std::isnan(c.expected)) out << "published " << format_number(c.expected) << ", ";
          out << "computed " << format_number(c.computed);
          break;
      }
      out << (c.kind == CheckKind::Report ? "  [reported]" : (c.passed ? "  [ok]" : "  [FAILED]"));
      if (!c.note.empty()) out << "  (" << c.note << ")";
      out << '\n';
    }
    out << (r.passed() ? "PASS" : "FAIL") << " criterion " << r.id << '\n';
  }
  const auto passed = std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
  out << passed << "/" << results.size() << " criteria passed\n";
}

} // namespace lssa
