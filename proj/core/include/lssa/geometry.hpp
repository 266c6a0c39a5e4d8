#pragma once

#include <variant>
#include <vector>

namespace lssa {

/// Cross-section of the folded sleeve. Lengths in m, angle in rad measured
/// from the horizontal.
struct ActuatorGeometry {
  double r1o_m = 0.0;  // cap outer radius
  double r1i_m = 0.0;  // cap inner radius
  double r2i_m = 0.0;  // external wall inner radius
  double r3i_m = 0.0;  // internal wall radius
  double s_m = 0.0;    // fold length
  double theta0_rad = 0.0;
  int n_folds = 1;

  /// Throws DomainError unless r1o > r1i >= 0, r2i >= r3i >= 0, s >= 0,
  /// theta0 in [0, pi/2] and n_folds >= 1.
  void validate() const;

  /// Same geometry with every length multiplied by k.
  ActuatorGeometry scaled(double k) const;
};

/// Fold angle stays at theta0 for every displacement.
struct ConstantAngle {};

/// Folds open linearly with extension:
/// sin(theta(y)) = min(1, sin(theta0) + y / (2 n_folds s)).
struct LinearUnfold {};

struct AnglePoint {
  double displacement_mm;
  double theta_rad;
};

/// Piecewise-linear theta(y) from measured or simulated pairs.
class TabulatedAngle {
public:
  /// Throws DomainError unless there are at least two points, abscissae are
  /// strictly increasing and every angle lies in [0, pi/2].
  explicit TabulatedAngle(std::vector<AnglePoint> points);

  const std::vector<AnglePoint>& points() const { return points_; }

  /// Throws ExtrapolationError outside the tabulated range.
  double at(double displacement_mm) const;

private:
  std::vector<AnglePoint> points_;
};

using FoldKinematics = std::variant<ConstantAngle, LinearUnfold, TabulatedAngle>;

/// A1 = pi (r1o^2 - r1i^2)
double cap_area(const ActuatorGeometry& g);

/// A2 = pi (r2i + s cos(theta))^2 - pi r2i^2. Throws DomainError for theta
/// outside [0, pi/2].
double external_wall_area(const ActuatorGeometry& g, double theta_rad);

/// A3 = pi (r3i + s cos(theta))^2 - pi r3i^2.
double internal_wall_area(const ActuatorGeometry& g, double theta_rad);

/// Fold angle at displacement y (mm). Throws DomainError for y < 0.
double theta_of_y(const FoldKinematics& kinematics, const ActuatorGeometry& g, double y_mm);

/// A1 + n_folds (A2 - A3) at the fold angle reached at displacement y.
double effective_area(const ActuatorGeometry& g, const FoldKinematics& kinematics, double y_mm);

} // namespace lssa
