#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lssa/material.hpp"
#include "lssa/polynomial.hpp"

namespace lssa {

struct FitReport {
  double residual_norm = 0.0;       // Euclidean norm of target - prediction, target units
  double r_squared = 1.0;           // 1 - SS_res / SS_tot; 1 when the target is constant
  double condition_estimate = 1.0;  // |R_11| / |R_kk| of the column-equilibrated pivoted QR
  std::size_t n_samples = 0;
};

/// Dense least-squares problem stored row-major: `design` has
/// rows x cols entries.
struct LinearSystem {
  std::vector<double> design;
  std::vector<double> target;
  std::size_t rows = 0;
  std::size_t cols = 0;
};

struct LeastSquaresSolution {
  std::vector<double> coefficients;
  FitReport report;
};

/// Minimizes |A x - b| with a column-pivoting Householder QR on the
/// column-equilibrated design. Throws SingularFitError when the design is
/// numerically rank deficient.
LeastSquaresSolution solve_least_squares(const LinearSystem& system);

struct HyperelasticFit {
  HyperelasticParams params;
  FitReport report;
};

/// Ordinary least squares on nominal-stress residuals. Needs at least
/// arity(family) + 1 samples.
HyperelasticFit fit_hyperelastic(std::span<const UniaxialSample> samples, Family family);

struct RankedModel {
  Family family;
  HyperelasticParams params;
  FitReport report;
};

/// Two fits whose r_squared differ by no more than this are ranked as a
/// tie, and the family with fewer constants wins.
inline constexpr double kRankTieTolerance = 1e-3;

/// Fits every family and orders them by descending r_squared. Families
/// within `tie_tolerance` of the best remaining fit are grouped and
/// ordered by ascending arity.
std::vector<RankedModel> rank_models(std::span<const UniaxialSample> samples,
                                     std::span<const Family> families,
                                     double tie_tolerance = kRankTieTolerance);

struct ForceSample {
  double displacement_mm;
  double force_n;
};

struct PolynomialFit {
  Polynomial polynomial;
  FitReport report;
};

/// Least-squares polynomial of the given degree (default cubic).
PolynomialFit fit_polynomial(std::span<const ForceSample> samples, int degree = 3);

} // namespace lssa
