#include <gtest/gtest.h>

#include "lssa/errors.hpp"
#include "lssa/polynomial.hpp"
#include "support/oracles.hpp"

namespace lssa {
namespace {

TEST(Polynomial, StorageIsLowestPowerFirst) {
  const auto p = Polynomial::from_descending({1.0, 2.0, 3.0});
  EXPECT_EQ(p.coefficients(), (std::vector<double>{3.0, 2.0, 1.0}));
  EXPECT_EQ(p.descending(), (std::vector<double>{1.0, 2.0, 3.0}));
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.coefficient(2), 1.0);
  EXPECT_EQ(p.coefficient(7), 0.0);
}

TEST(Polynomial, RejectsEmptyAndNonFinite) {
  EXPECT_THROW(Polynomial(std::vector<double>{}), DomainError);
  EXPECT_THROW(Polynomial({1.0, NAN}), DomainError);
}

TEST(Evaluate, ReferenceStiffnessAtPublishedPoints) {
  const auto fk = reference_stiffness_polynomial();
  EXPECT_DOUBLE_EQ(evaluate(fk, 0.0), -0.2246);
  // 0.41481 + 1.2865 + 20.789 - 0.2246
  EXPECT_NEAR(evaluate(fk, 10.0), 22.26571, 1e-10);
  // 26.54784 + 20.584 + 83.156 - 0.2246
  EXPECT_NEAR(evaluate(fk, 40.0), 130.06324, 1e-10);
  EXPECT_NEAR(fk(40.0), oracle::stiffness_force(40.0), 1e-12);
}

TEST(Differentiate, ReferenceStiffnessGivesPublishedAxialStiffness) {
  const auto k = differentiate(reference_stiffness_polynomial());
  ASSERT_EQ(k.degree(), 2);
  EXPECT_NEAR(k.coefficient(2), 1.24443e-3, 1e-7);
  EXPECT_NEAR(k.coefficient(1), 2.5730e-2, 1e-7);
  EXPECT_NEAR(k.coefficient(0), 2.0789, 1e-7);
}

TEST(Differentiate, ConstantAndLinear) {
  const auto zero = differentiate(Polynomial({5.0}));
  EXPECT_EQ(zero.degree(), 0);
  EXPECT_EQ(zero.coefficient(0), 0.0);
  const auto c = differentiate(Polynomial({-0.5, 3.25}));
  EXPECT_EQ(c.coefficients(), std::vector<double>{3.25});
}

TEST(Differentiate, PropertyMatchesCentralDifference) {
  const auto fk = reference_stiffness_polynomial();
  const auto k = differentiate(fk);
  for (double y : oracle::linspace(0.0, 40.0, 81)) {
    const double h = 1e-4;
    const double fd = (evaluate(fk, y + h) - evaluate(fk, y - h)) / (2 * h);
    EXPECT_LE(oracle::relative_error(evaluate(k, y), fd), 1e-6) << "y = " << y;
  }
}

TEST(Differentiate, PropertyRandomPolynomials) {
  auto rng = oracle::make_rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> c(1 + trial % 6);
    for (auto& v : c) v = oracle::uniform(rng, -3.0, 3.0);
    const Polynomial p(c);
    const auto d = differentiate(p);
    const double y = oracle::uniform(rng, -2.0, 2.0);
    double expected = 0.0;
    for (std::size_t i = 1; i < c.size(); ++i) expected += i * c[i] * std::pow(y, i - 1);
    EXPECT_NEAR(evaluate(d, y), expected, 1e-10);
  }
}

} // namespace
} // namespace lssa
