#include "lssa/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lssa/errors.hpp"
#include "lssa/units.hpp"

namespace lssa {
namespace {

using units::kHalfPi;
using units::kPi;

bool angle_in_range(double theta) { return theta >= 0.0 && theta <= kHalfPi; }

// cos() of pi/2 is 6e-17 in double; a fully opened fold projects nothing.
double fold_projection(double s, double theta) {
  return theta == kHalfPi ? 0.0 : s * std::cos(theta);
}

// pi ((r + p)^2 - r^2) written without the cancellation.
double wall_ring_area(double r, double s, double theta) {
  if (!angle_in_range(theta)) {
    throw DomainError("fold angle must lie in [0, pi/2], got " + std::to_string(theta));
  }
  const double p = fold_projection(s, theta);
  return kPi * p * (2.0 * r + p);
}

} // namespace

void ActuatorGeometry::validate() const {
  const double all[] = {r1o_m, r1i_m, r2i_m, r3i_m, s_m, theta0_rad};
  if (!std::all_of(std::begin(all), std::end(all), [](double v) { return std::isfinite(v); })) {
    throw DomainError("geometry values must be finite");
  }
  if (!(r1o_m > r1i_m) || r1i_m < 0.0) throw DomainError("geometry requires r1o > r1i >= 0");
  if (r2i_m < r3i_m || r3i_m < 0.0) throw DomainError("geometry requires r2i >= r3i >= 0");
  if (s_m < 0.0) throw DomainError("fold length must be non-negative");
  if (!angle_in_range(theta0_rad)) throw DomainError("initial fold angle must lie in [0, pi/2]");
  if (n_folds < 1) throw DomainError("n_folds must be at least 1");
}

ActuatorGeometry ActuatorGeometry::scaled(double k) const {
  ActuatorGeometry g = *this;
  g.r1o_m *= k;
  g.r1i_m *= k;
  g.r2i_m *= k;
  g.r3i_m *= k;
  g.s_m *= k;
  return g;
}

TabulatedAngle::TabulatedAngle(std::vector<AnglePoint> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw DomainError("tabulated fold angle needs at least two points");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i].displacement_mm) || !angle_in_range(points_[i].theta_rad)) {
      throw DomainError("tabulated fold angles must lie in [0, pi/2]");
    }
    if (i > 0 && !(points_[i].displacement_mm > points_[i - 1].displacement_mm)) {
      throw DomainError("tabulated displacements must be strictly increasing");
    }
  }
}

double TabulatedAngle::at(double y) const {
  if (y < points_.front().displacement_mm || y > points_.back().displacement_mm) {
    throw ExtrapolationError("displacement " + std::to_string(y) + " mm outside tabulated range [" +
                             std::to_string(points_.front().displacement_mm) + ", " +
                             std::to_string(points_.back().displacement_mm) + "]");
  }
  auto hi = std::lower_bound(points_.begin(), points_.end(), y,
                             [](const AnglePoint& p, double v) { return p.displacement_mm < v; });
  if (hi->displacement_mm == y) return hi->theta_rad;
  auto lo = std::prev(hi);
  const double t = (y - lo->displacement_mm) / (hi->displacement_mm - lo->displacement_mm);
  return lo->theta_rad + t * (hi->theta_rad - lo->theta_rad);
}

double cap_area(const ActuatorGeometry& g) {
  g.validate();
  return kPi * (g.r1o_m - g.r1i_m) * (g.r1o_m + g.r1i_m);
}

double external_wall_area(const ActuatorGeometry& g, double theta_rad) {
  g.validate();
  return wall_ring_area(g.r2i_m, g.s_m, theta_rad);
}

double internal_wall_area(const ActuatorGeometry& g, double theta_rad) {
  g.validate();
  return wall_ring_area(g.r3i_m, g.s_m, theta_rad);
}

double theta_of_y(const FoldKinematics& kinematics, const ActuatorGeometry& g, double y_mm) {
  if (!(y_mm >= 0.0) || !std::isfinite(y_mm)) {
    throw DomainError("displacement must be finite and non-negative");
  }
  g.validate();
  struct Visitor {
    const ActuatorGeometry& g;
    double y_mm;
    double operator()(const ConstantAngle&) const { return g.theta0_rad; }
    double operator()(const LinearUnfold&) const {
      if (y_mm == 0.0 || g.s_m == 0.0) return g.theta0_rad;  // no fold to open
      const double sine = std::sin(g.theta0_rad) + units::mm_to_m(y_mm) / (2.0 * g.n_folds * g.s_m);
      return sine >= 1.0 ? kHalfPi : std::max(g.theta0_rad, std::asin(sine));
    }
    double operator()(const TabulatedAngle& table) const { return table.at(y_mm); }
  };
  return std::visit(Visitor{g, y_mm}, kinematics);
}

double effective_area(const ActuatorGeometry& g, const FoldKinematics& kinematics, double y_mm) {
  const double theta = theta_of_y(kinematics, g, y_mm);
  return cap_area(g) + g.n_folds * (external_wall_area(g, theta) - internal_wall_area(g, theta));
}

} // namespace lssa
