#include "lssa/force_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lssa/errors.hpp"
#include "lssa/root_finding.hpp"

namespace lssa {
namespace {

void check_pressure(double pressure_pa) {
  if (!(pressure_pa >= 0.0) || !std::isfinite(pressure_pa)) {
    throw DomainError("pressure must be finite and non-negative");
  }
}

void check_displacement(const LssaModel& m, double y_mm) {
  if (!(y_mm >= 0.0 && y_mm <= m.y_max_mm())) {
    throw DomainError("displacement " + std::to_string(y_mm) + " mm outside [0, " +
                      std::to_string(m.y_max_mm()) + "]");
  }
}

} // namespace

AreaProfile::AreaProfile(std::vector<AreaPoint> points) : points_(std::move(points)) {
  if (points_.empty()) throw DomainError("area profile needs at least one point");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& p = points_[i];
    if (!std::isfinite(p.displacement_mm) || !std::isfinite(p.area_m2) || !(p.area_m2 > 0.0)) {
      throw DomainError("area profile values must be finite with positive area");
    }
    if (i > 0 && !(p.displacement_mm > points_[i - 1].displacement_mm)) {
      throw DomainError("area profile displacements must be strictly increasing");
    }
  }
}

AreaProfile AreaProfile::constant(double area_m2) { return AreaProfile({{0.0, area_m2}}); }

double AreaProfile::at(double y) const {
  if (is_constant()) return points_.front().area_m2;
  if (y < points_.front().displacement_mm || y > points_.back().displacement_mm) {
    throw ExtrapolationError("displacement " + std::to_string(y) +
                             " mm outside calibrated area range");
  }
  auto hi = std::lower_bound(points_.begin(), points_.end(), y,
                             [](const AreaPoint& p, double v) { return p.displacement_mm < v; });
  if (hi->displacement_mm == y) return hi->area_m2;
  auto lo = std::prev(hi);
  const double t = (y - lo->displacement_mm) / (hi->displacement_mm - lo->displacement_mm);
  return lo->area_m2 + t * (hi->area_m2 - lo->area_m2);
}

bool AreaProfile::is_non_increasing() const {
  return std::is_sorted(points_.begin(), points_.end(),
                        [](const AreaPoint& a, const AreaPoint& b) { return a.area_m2 > b.area_m2; });
}

bool AreaProfile::is_non_decreasing() const {
  return std::is_sorted(points_.begin(), points_.end(),
                        [](const AreaPoint& a, const AreaPoint& b) { return a.area_m2 < b.area_m2; });
}

LssaModel::LssaModel(std::optional<ActuatorGeometry> geometry, FoldKinematics kinematics,
                     Polynomial stiffness, std::optional<AreaProfile> area_override,
                     double y_max_mm)
    : geometry_(std::move(geometry)),
      kinematics_(std::move(kinematics)),
      stiffness_(std::move(stiffness)),
      area_override_(std::move(area_override)),
      y_max_mm_(y_max_mm) {
  if (geometry_) geometry_->validate();
  if (!geometry_ && !area_override_) {
    throw UsageError("model needs either a geometry or an area profile");
  }
  if (stiffness_.degree() > 3) {
    throw DomainError("stiffness polynomial degree must not exceed 3");
  }
  if (!(y_max_mm_ > 0.0) || !std::isfinite(y_max_mm_)) {
    throw DomainError("y_max must be positive");
  }
}

LssaModel LssaModel::from_geometry(ActuatorGeometry geometry, FoldKinematics kinematics,
                                   Polynomial stiffness, double y_max_mm) {
  return LssaModel(std::move(geometry), std::move(kinematics), std::move(stiffness), std::nullopt,
                   y_max_mm);
}

LssaModel LssaModel::from_area_profile(AreaProfile profile, Polynomial stiffness,
                                       double y_max_mm) {
  return LssaModel(std::nullopt, ConstantAngle{}, std::move(stiffness), std::move(profile),
                   y_max_mm);
}

LssaModel LssaModel::with_area_override(AreaProfile profile) const {
  return LssaModel(geometry_, kinematics_, stiffness_, std::move(profile), y_max_mm_);
}

double LssaModel::effective_area(double y_mm) const {
  if (area_override_) return area_override_->at(y_mm);
  return lssa::effective_area(*geometry_, kinematics_, y_mm);
}

PressureForces pressure_components(const LssaModel& m, double pressure_pa, double y_mm) {
  check_pressure(pressure_pa);
  check_displacement(m, y_mm);
  if (!m.geometry()) {
    throw UsageError("pressure components need an actuator geometry");
  }
  const ActuatorGeometry& g = *m.geometry();
  const double theta = theta_of_y(m.kinematics(), g, y_mm);
  return {pressure_pa * cap_area(g), g.n_folds * pressure_pa * external_wall_area(g, theta),
          g.n_folds * pressure_pa * internal_wall_area(g, theta)};
}

double net_force(const LssaModel& m, double pressure_pa, double y_mm) {
  check_pressure(pressure_pa);
  check_displacement(m, y_mm);
  return pressure_pa * m.effective_area(y_mm) - evaluate(m.stiffness(), y_mm);
}

double axial_stiffness(const LssaModel& m, double y_mm) {
  check_displacement(m, y_mm);
  return evaluate(differentiate(m.stiffness()), y_mm);
}

const char* to_string(ExtensionStatus status) {
  switch (status) {
    case ExtensionStatus::Equilibrium: return "equilibrium";
    case ExtensionStatus::Blocked: return "blocked";
    case ExtensionStatus::Saturated: return "saturated";
  }
  return "unknown";
}

ExtensionResult free_extension(const LssaModel& m, double pressure_pa, double load_n) {
  check_pressure(pressure_pa);
  if (!(load_n >= 0.0) || !std::isfinite(load_n)) {
    throw DomainError("load must be finite and non-negative");
  }
  const auto excess = [&](double y) { return net_force(m, pressure_pa, y) - load_n; };
  if (excess(0.0) < 0.0) return {0.0, ExtensionStatus::Blocked, 0};
  if (excess(m.y_max_mm()) > 0.0) return {m.y_max_mm(), ExtensionStatus::Saturated, 0};
  const auto r = bisect(excess, 0.0, m.y_max_mm(), kExtensionTolMm, kExtensionTolN,
                        kExtensionMaxIterations);
  return {r.root, ExtensionStatus::Equilibrium, r.iterations};
}

double dead_band_pressure(const LssaModel& m, double load_n, double y0_mm) {
  check_displacement(m, y0_mm);
  if (!std::isfinite(load_n)) throw DomainError("load must be finite");
  const double area = m.effective_area(y0_mm);
  if (!(area > 0.0)) {
    throw DomainError("effective area must be positive for a dead-band pressure");
  }
  return std::max(0.0, (load_n + evaluate(m.stiffness(), y0_mm)) / area);
}

double calibrate_effective_area(double pressure_pa, double y0_mm, double measured_force_n,
                                const Polynomial& stiffness) {
  if (!(pressure_pa > 0.0) || !std::isfinite(pressure_pa)) {
    throw UsageError("calibration pressure must be positive");
  }
  const double area = (measured_force_n + evaluate(stiffness, y0_mm)) / pressure_pa;
  if (!(area > 0.0) || !std::isfinite(area)) {
    throw CalibrationError("calibrated effective area at y = " + std::to_string(y0_mm) +
                           " mm is not positive");
  }
  return area;
}

AreaCalibration calibrate_area_profile(std::span<const OperatingPoint> points,
                                       const Polynomial& stiffness) {
  if (points.size() < 2) {
    throw UsageError("area profile calibration needs at least two points");
  }
  std::vector<OperatingPoint> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end(), [](const OperatingPoint& a, const OperatingPoint& b) {
    return a.displacement_mm < b.displacement_mm;
  });
  std::vector<AreaPoint> profile;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto& p = sorted[i];
    if (i > 0 && p.displacement_mm == sorted[i - 1].displacement_mm) {
      throw UsageError("duplicate displacement " + std::to_string(p.displacement_mm) +
                       " mm in calibration points");
    }
    profile.push_back({p.displacement_mm, calibrate_effective_area(p.pressure_pa, p.displacement_mm,
                                                                   p.force_n, stiffness)});
  }
  AreaCalibration out{AreaProfile(std::move(profile)), false};
  out.non_monotone = !out.profile.is_non_increasing() && !out.profile.is_non_decreasing();
  return out;
}

} // namespace lssa
