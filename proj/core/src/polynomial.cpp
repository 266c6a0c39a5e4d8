#include "lssa/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "lssa/errors.hpp"

namespace lssa {

Polynomial::Polynomial() : coefficients_{0.0} {}

Polynomial::Polynomial(std::vector<double> ascending) : coefficients_(std::move(ascending)) {
  if (coefficients_.empty()) {
    throw DomainError("polynomial needs at least one coefficient");
  }
  if (!std::all_of(coefficients_.begin(), coefficients_.end(),
                   [](double c) { return std::isfinite(c); })) {
    throw DomainError("polynomial coefficients must be finite");
  }
}

Polynomial Polynomial::from_descending(std::vector<double> descending) {
  std::reverse(descending.begin(), descending.end());
  return Polynomial(std::move(descending));
}

std::vector<double> Polynomial::descending() const {
  return {coefficients_.rbegin(), coefficients_.rend()};
}

double Polynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return 0.0;
  return coefficients_[static_cast<std::size_t>(power)];
}

double Polynomial::operator()(double y) const { return evaluate(*this, y); }

double evaluate(const Polynomial& p, double y) {
  const auto& c = p.coefficients();
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * y + *it;
  }
  return acc;
}

Polynomial differentiate(const Polynomial& p) {
  const auto& c = p.coefficients();
  if (c.size() == 1) return Polynomial();
  std::vector<double> d(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) {
    d[i - 1] = static_cast<double>(i) * c[i];
  }
  return Polynomial(std::move(d));
}

Polynomial reference_stiffness_polynomial() {
  return Polynomial::from_descending({4.1481e-4, 1.2865e-2, 2.0789, -0.2246});
}

} // namespace lssa
