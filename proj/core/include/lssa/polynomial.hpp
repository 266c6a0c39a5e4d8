#pragma once

#include <vector>

namespace lssa {

/// Real polynomial in one variable.
///
/// Coefficients are stored lowest power first: coefficients()[i] multiplies
/// y^i. This order is used everywhere in the library. For the actuator
/// stiffness force the abscissa is in mm and the value in N.
class Polynomial {
public:
  /// The zero polynomial.
  Polynomial();

  /// Throws DomainError on an empty list or a non-finite coefficient.
  explicit Polynomial(std::vector<double> ascending);

  /// Builds from highest-power-first coefficients, e.g. {a, b, c, d} for
  /// a y^3 + b y^2 + c y + d.
  static Polynomial from_descending(std::vector<double> descending);

  const std::vector<double>& coefficients() const { return coefficients_; }
  std::vector<double> descending() const;
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }

  double coefficient(int power) const;

  double operator()(double y) const;

private:
  std::vector<double> coefficients_;
};

/// Horner evaluation.
double evaluate(const Polynomial& p, double y);

/// Power-rule derivative. The derivative of a constant is the zero
/// polynomial of degree 0.
Polynomial differentiate(const Polynomial& p);

/// Cubic axial stiffness force of the printed actuator,
/// F_K(y) = 4.1481e-4 y^3 + 1.2865e-2 y^2 + 2.0789 y - 0.2246  (y in mm, N).
Polynomial reference_stiffness_polynomial();

} // namespace lssa
