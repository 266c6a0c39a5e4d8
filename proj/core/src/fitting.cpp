#include "lssa/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "lssa/errors.hpp"

namespace lssa {
namespace {

// Relative pivot threshold below which a column is treated as dependent.
constexpr double kRankThreshold = 1e-10;

double r_squared(const Eigen::VectorXd& target, const Eigen::VectorXd& residual) {
  const double ss_res = residual.squaredNorm();
  const double ss_tot = (target.array() - target.mean()).matrix().squaredNorm();
  if (ss_tot == 0.0) {
    return ss_res <= 1e-24 * std::max(1.0, target.squaredNorm()) ? 1.0 : 0.0;
  }
  return std::min(1.0, 1.0 - ss_res / ss_tot);
}

} // namespace

LeastSquaresSolution solve_least_squares(const LinearSystem& system) {
  if (system.rows == 0 || system.cols == 0 || system.design.size() != system.rows * system.cols ||
      system.target.size() != system.rows) {
    throw UsageError("least-squares system has inconsistent dimensions");
  }
  if (system.rows < system.cols) {
    throw UsageError("least-squares system is underdetermined");
  }

  using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const Eigen::Map<const RowMajor> design(system.design.data(),
                                          static_cast<Eigen::Index>(system.rows),
                                          static_cast<Eigen::Index>(system.cols));
  const Eigen::Map<const Eigen::VectorXd> target(system.target.data(),
                                                 static_cast<Eigen::Index>(system.rows));

  // Equilibrate columns so the pivot threshold is scale free.
  Eigen::VectorXd scale = design.colwise().norm().transpose();
  for (Eigen::Index j = 0; j < scale.size(); ++j) {
    if (scale(j) == 0.0) scale(j) = 1.0;
  }
  const Eigen::MatrixXd scaled = design * scale.cwiseInverse().asDiagonal();

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(scaled);
  qr.setThreshold(kRankThreshold);
  if (qr.rank() < scaled.cols()) {
    throw SingularFitError("design matrix is rank deficient (rank " + std::to_string(qr.rank()) +
                           " of " + std::to_string(scaled.cols()) + ")");
  }

  const Eigen::VectorXd x = qr.solve(target).cwiseQuotient(scale);
  const Eigen::VectorXd residual = target - design * x;

  const auto diag = qr.matrixR().diagonal().cwiseAbs();
  LeastSquaresSolution out;
  out.coefficients.assign(x.data(), x.data() + x.size());
  out.report.residual_norm = residual.norm();
  out.report.r_squared = r_squared(target, residual);
  out.report.condition_estimate = diag(0) / diag(diag.size() - 1);
  out.report.n_samples = system.rows;
  return out;
}

HyperelasticFit fit_hyperelastic(std::span<const UniaxialSample> samples, Family family) {
  const std::size_t k = arity(family);
  if (samples.size() < k + 1) {
    throw UsageError(std::string(short_name(family)) + " fit needs at least " +
                     std::to_string(k + 1) + " samples, got " + std::to_string(samples.size()));
  }
  LinearSystem system;
  system.rows = samples.size();
  system.cols = k;
  system.design.reserve(system.rows * k);
  system.target.reserve(system.rows);
  for (const auto& s : samples) {
    const auto row = stress_basis(family, s.stretch);
    system.design.insert(system.design.end(), row.begin(), row.end());
    system.target.push_back(s.nominal_stress_mpa);
  }
  auto solution = solve_least_squares(system);
  return {HyperelasticParams(family, std::move(solution.coefficients)), solution.report};
}

std::vector<RankedModel> rank_models(std::span<const UniaxialSample> samples,
                                     std::span<const Family> families, double tie_tolerance) {
  if (families.empty()) {
    throw UsageError("rank_models needs at least one family");
  }
  std::vector<RankedModel> fits;
  for (Family f : families) {
    auto fit = fit_hyperelastic(samples, f);
    fits.push_back({f, std::move(fit.params), fit.report});
  }
  std::stable_sort(fits.begin(), fits.end(), [](const RankedModel& a, const RankedModel& b) {
    return a.report.r_squared > b.report.r_squared;
  });
  // Group runs within tie_tolerance of their leader and order each by arity.
  for (auto head = fits.begin(); head != fits.end();) {
    const double leader = head->report.r_squared;
    auto end = std::find_if(head, fits.end(), [&](const RankedModel& m) {
      return leader - m.report.r_squared > tie_tolerance;
    });
    std::stable_sort(head, end, [](const RankedModel& a, const RankedModel& b) {
      return arity(a.family) < arity(b.family);
    });
    head = end;
  }
  return fits;
}

PolynomialFit fit_polynomial(std::span<const ForceSample> samples, int degree) {
  if (degree < 0) {
    throw UsageError("polynomial degree must be non-negative");
  }
  const auto cols = static_cast<std::size_t>(degree) + 1;
  if (samples.size() < cols) {
    throw UsageError("degree-" + std::to_string(degree) + " fit needs at least " +
                     std::to_string(cols) + " samples, got " + std::to_string(samples.size()));
  }
  LinearSystem system;
  system.rows = samples.size();
  system.cols = cols;
  system.design.reserve(system.rows * cols);
  for (const auto& s : samples) {
    double power = 1.0;
    for (std::size_t j = 0; j < cols; ++j) {
      system.design.push_back(power);
      power *= s.displacement_mm;
    }
    system.target.push_back(s.force_n);
  }
  auto solution = solve_least_squares(system);
  return {Polynomial(std::move(solution.coefficients)), solution.report};
}

} // namespace lssa
