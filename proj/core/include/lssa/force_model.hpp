#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lssa/geometry.hpp"
#include "lssa/polynomial.hpp"

namespace lssa {

struct AreaPoint {
  double displacement_mm;
  double area_m2;
};

/// Effective pressure area as a function of displacement, piecewise linear
/// between calibration points. A single point means a constant area.
class AreaProfile {
public:
  /// Throws DomainError unless abscissae are strictly increasing and every
  /// area is positive and finite.
  explicit AreaProfile(std::vector<AreaPoint> points);

  static AreaProfile constant(double area_m2);

  const std::vector<AreaPoint>& points() const { return points_; }
  bool is_constant() const { return points_.size() == 1; }

  /// Throws ExtrapolationError outside the calibrated range (multi-point
  /// profiles only).
  double at(double displacement_mm) const;

  bool is_non_increasing() const;
  bool is_non_decreasing() const;

private:
  std::vector<AreaPoint> points_;
};

/// Quasi-static actuator model: pressure acting on the projected areas
/// minus the structural stiffness force. Displacements in mm, pressure in
/// Pa, forces in N. Immutable once built.
class LssaModel {
public:
  static constexpr double kDefaultMaxDisplacementMm = 40.0;

  /// Areas follow from the geometry and fold kinematics.
  static LssaModel from_geometry(ActuatorGeometry geometry, FoldKinematics kinematics,
                                 Polynomial stiffness,
                                 double y_max_mm = kDefaultMaxDisplacementMm);

  /// Areas come from a calibrated profile; no geometry is known.
  static LssaModel from_area_profile(AreaProfile profile, Polynomial stiffness,
                                     double y_max_mm = kDefaultMaxDisplacementMm);

  /// Same model with the effective area replaced by `profile`.
  LssaModel with_area_override(AreaProfile profile) const;

  const std::optional<ActuatorGeometry>& geometry() const { return geometry_; }
  const FoldKinematics& kinematics() const { return kinematics_; }
  const Polynomial& stiffness() const { return stiffness_; }
  const std::optional<AreaProfile>& area_override() const { return area_override_; }
  double y_max_mm() const { return y_max_mm_; }

  /// A_eff(y): the override when present, otherwise A1 + n (A2 - A3).
  double effective_area(double y_mm) const;

private:
  LssaModel(std::optional<ActuatorGeometry> geometry, FoldKinematics kinematics,
            Polynomial stiffness, std::optional<AreaProfile> area_override, double y_max_mm);

  std::optional<ActuatorGeometry> geometry_;
  FoldKinematics kinematics_;
  Polynomial stiffness_;
  std::optional<AreaProfile> area_override_;
  double y_max_mm_;
};

struct PressureForces {
  double cap_n;            // P A1
  double external_wall_n;  // n P A2
  double internal_wall_n;  // n P A3, opposes extension
};

/// Needs a model built from geometry; throws UsageError otherwise.
PressureForces pressure_components(const LssaModel& m, double pressure_pa, double y_mm);

/// F_y = P A_eff(y) - F_K(y). Negative when the pressure cannot hold y.
double net_force(const LssaModel& m, double pressure_pa, double y_mm);

/// dF_K/dy in N/mm, from the derivative of the stored polynomial.
double axial_stiffness(const LssaModel& m, double y_mm);

enum class ExtensionStatus { Equilibrium, Blocked, Saturated };

const char* to_string(ExtensionStatus status);

struct ExtensionResult {
  double displacement_mm = 0.0;
  ExtensionStatus status = ExtensionStatus::Equilibrium;
  std::size_t iterations = 0;
};

inline constexpr double kExtensionTolMm = 1e-6;
inline constexpr double kExtensionTolN = 1e-6;
inline constexpr std::size_t kExtensionMaxIterations = 200;

/// Displacement where net_force(P, y) equals `load_n`, by bisection on
/// [0, y_max]. Blocked (y = 0) when the pressure cannot lift the load at
/// all, Saturated (y = y_max) when the actuator still pushes at y_max.
ExtensionResult free_extension(const LssaModel& m, double pressure_pa, double load_n);

/// Smallest pressure producing net output against `load_n` at y0:
/// max(0, (load + F_K(y0)) / A_eff(y0)).
double dead_band_pressure(const LssaModel& m, double load_n, double y0_mm);

/// Constant effective area reproducing one measurement:
/// (f_meas + F_K(y0)) / P.
double calibrate_effective_area(double pressure_pa, double y0_mm, double measured_force_n,
                                const Polynomial& stiffness);

struct OperatingPoint {
  double pressure_pa = 0.0;
  double displacement_mm = 0.0;
  double force_n = 0.0;
  double load_n = 0.0;  // external static load, static-load rig only
};

struct AreaCalibration {
  AreaProfile profile;
  bool non_monotone = false;  // area neither non-increasing nor non-decreasing in y
};

/// Per-point inversion of the force balance across a measured curve. The
/// points are sorted by displacement.
AreaCalibration calibrate_area_profile(std::span<const OperatingPoint> points,
                                       const Polynomial& stiffness);

} // namespace lssa
