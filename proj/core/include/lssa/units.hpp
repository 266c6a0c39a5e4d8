#pragma once

// Unit conventions used across the library:
//   lengths inside geometry          m
//   actuator displacement y          mm  (the stiffness polynomial is fitted in mm/N)
//   pressure                         Pa
//   area                             m^2
//   force                            N
//   hyperelastic constants, stress   MPa
// Conversions happen only through the helpers below.

namespace lssa::units {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kHalfPi = kPi / 2.0;

inline constexpr double kStandardGravity = 9.81;  // m/s^2

constexpr double mm_to_m(double mm) { return mm * 1e-3; }
constexpr double m_to_mm(double m) { return m * 1e3; }
constexpr double kpa_to_pa(double kpa) { return kpa * 1e3; }
constexpr double pa_to_kpa(double pa) { return pa * 1e-3; }
constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

constexpr double kg_to_newton(double kg, double g = kStandardGravity) { return kg * g; }

} // namespace lssa::units
