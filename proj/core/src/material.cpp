#include "lssa/material.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "lssa/errors.hpp"

namespace lssa {
namespace {

// Monomials in x = I1 - 3 and y = I2 - 3.
enum class Term { X, Y, XX, XY, YY, XXX };

struct TermValue {
  double value;
  double d_i1;
  double d_i2;
};

TermValue evaluate_term(Term term, double x, double y) {
  switch (term) {
    case Term::X: return {x, 1.0, 0.0};
    case Term::Y: return {y, 0.0, 1.0};
    case Term::XX: return {x * x, 2.0 * x, 0.0};
    case Term::XY: return {x * y, y, x};
    case Term::YY: return {y * y, 0.0, 2.0 * y};
    case Term::XXX: return {x * x * x, 3.0 * x * x, 0.0};
  }
  return {0.0, 0.0, 0.0};
}

std::span<const Term> terms_of(Family family) {
  static constexpr std::array<Term, 1> nh{Term::X};
  static constexpr std::array<Term, 2> mr2{Term::X, Term::Y};
  static constexpr std::array<Term, 3> mr3{Term::X, Term::Y, Term::XY};
  static constexpr std::array<Term, 5> mr5{Term::X, Term::Y, Term::XX, Term::XY, Term::YY};
  static constexpr std::array<Term, 3> yeoh{Term::X, Term::XX, Term::XXX};
  switch (family) {
    case Family::NeoHookean: return nh;
    case Family::MooneyRivlin2: return mr2;
    case Family::MooneyRivlin3: return mr3;
    case Family::MooneyRivlin5: return mr5;
    case Family::Yeoh3: return yeoh;
  }
  return {};
}

std::string_view term_name(Term term) {
  switch (term) {
    case Term::X: return "C10";
    case Term::Y: return "C01";
    case Term::XX: return "C20";
    case Term::XY: return "C11";
    case Term::YY: return "C02";
    case Term::XXX: return "C30";
  }
  return "";
}

void check_stretch(double stretch) {
  if (!std::isfinite(stretch) || stretch <= 0.0) {
    throw DomainError("stretch must be finite and positive, got " + std::to_string(stretch));
  }
}

} // namespace

std::size_t arity(Family family) { return terms_of(family).size(); }

std::string_view short_name(Family family) {
  switch (family) {
    case Family::NeoHookean: return "nh";
    case Family::MooneyRivlin2: return "mr2";
    case Family::MooneyRivlin3: return "mr3";
    case Family::MooneyRivlin5: return "mr5";
    case Family::Yeoh3: return "yeoh3";
  }
  return "";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : kAllFamilies) {
    if (short_name(f) == name) return f;
  }
  return std::nullopt;
}

std::vector<std::string_view> constant_names(Family family) {
  std::vector<std::string_view> names;
  for (Term t : terms_of(family)) names.push_back(term_name(t));
  return names;
}

HyperelasticParams::HyperelasticParams(Family family, std::vector<double> constants_mpa, double d1)
    : family_(family), constants_(std::move(constants_mpa)), d1_(d1) {
  if (constants_.size() != arity(family_)) {
    throw DomainError(std::string(short_name(family_)) + " expects " +
                      std::to_string(arity(family_)) + " constants, got " +
                      std::to_string(constants_.size()));
  }
  if (!std::all_of(constants_.begin(), constants_.end(), [](double c) { return std::isfinite(c); })) {
    throw DomainError("hyperelastic constants must be finite");
  }
  if (d1_ != 0.0) {
    throw DomainError("only incompressible models are supported (D1 must be 0)");
  }
}

HyperelasticParams tpu85_mooney_rivlin5() {
  return HyperelasticParams(Family::MooneyRivlin5, {-3.1992, 6.977, 0.0281, -0.074972, 0.92155});
}

StrainInvariants strain_invariants(double stretch) {
  check_stretch(stretch);
  const double l = stretch;
  return {l * l + 2.0 / l, 2.0 * l + 1.0 / (l * l)};
}

double strain_energy(const HyperelasticParams& params, double stretch) {
  const auto [i1, i2] = strain_invariants(stretch);
  const double x = i1 - 3.0;
  const double y = i2 - 3.0;
  const auto terms = terms_of(params.family());
  double w = 0.0;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    w += params.constants()[k] * evaluate_term(terms[k], x, y).value;
  }
  return w;
}

double uniaxial_nominal_stress(const HyperelasticParams& params, double stretch) {
  const auto [i1, i2] = strain_invariants(stretch);
  const double x = i1 - 3.0;
  const double y = i2 - 3.0;
  const auto terms = terms_of(params.family());
  double w1 = 0.0;
  double w2 = 0.0;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const TermValue t = evaluate_term(terms[k], x, y);
    w1 += params.constants()[k] * t.d_i1;
    w2 += params.constants()[k] * t.d_i2;
  }
  const double l = stretch;
  return 2.0 * (l - 1.0 / (l * l)) * (w1 + w2 / l);
}

std::vector<double> stress_basis(Family family, double stretch) {
  const auto [i1, i2] = strain_invariants(stretch);
  const double x = i1 - 3.0;
  const double y = i2 - 3.0;
  const double l = stretch;
  const double prefactor = 2.0 * (l - 1.0 / (l * l));
  std::vector<double> row;
  for (Term term : terms_of(family)) {
    const TermValue t = evaluate_term(term, x, y);
    row.push_back(prefactor * (t.d_i1 + t.d_i2 / l));
  }
  return row;
}

StabilityReport stability_scan(const HyperelasticParams& params, double stretch_min,
                               double stretch_max, std::size_t points) {
  if (!(stretch_min > 0.0) || !(stretch_max > stretch_min) || !std::isfinite(stretch_max)) {
    throw UsageError("stability scan needs 0 < stretch_min < stretch_max");
  }
  if (points < 2) {
    throw UsageError("stability scan needs at least 2 grid points");
  }
  // Keep the lower difference point inside the domain for tiny stretch_min.
  const double h = std::min(kStabilityStep, 0.5 * stretch_min);
  StabilityReport report;
  report.min_slope = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(points - 1);
    const double l = i + 1 == points ? stretch_max : stretch_min + t * (stretch_max - stretch_min);
    const double slope =
        (uniaxial_nominal_stress(params, l + h) - uniaxial_nominal_stress(params, l - h)) / (2.0 * h);
    if (slope < report.min_slope) {
      report.min_slope = slope;
      report.min_slope_stretch = l;
    }
    if (!(slope > 0.0) && report.stable) {
      report.stable = false;
      report.first_violation = l;
    }
  }
  return report;
}

SmallStrainModuli small_strain_moduli(const HyperelasticParams& params) {
  const auto& c = params.constants();
  double shear = 0.0;
  switch (params.family()) {
    case Family::NeoHookean:
    case Family::Yeoh3:
      shear = 2.0 * c[0];
      break;
    case Family::MooneyRivlin2:
    case Family::MooneyRivlin3:
    case Family::MooneyRivlin5:
      shear = 2.0 * (c[0] + c[1]);
      break;
  }
  return {shear, 3.0 * shear};
}

} // namespace lssa
