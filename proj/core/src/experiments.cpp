#include "lssa/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "lssa/errors.hpp"

namespace lssa {

ReferenceDataset reference_extension_125kpa() {
  ReferenceDataset d;
  d.name = "ref_extension_125kPa";
  d.version = "1";
  d.source = "prescribed-extension test at 125 kPa, force values read from the reported results";
  d.swept = SweptVariable::Displacement;
  for (auto [y, f] : {std::pair{0.0, 112.0}, {10.0, 72.0}, {20.0, 41.0}, {30.0, 19.0}, {40.0, 0.0}}) {
    d.points.push_back({kExtensionTestPressurePa, y, f, 0.0});
  }
  return d;
}

ReferenceDataset reference_static_load_200kpa(double g) {
  ReferenceDataset d;
  d.name = "ref_staticload_200kPa";
  d.version = "1";
  d.source = "static-load test, terminal force at 200 kPa per load mass";
  d.swept = SweptVariable::Load;
  for (auto [kg, f] : {std::pair{0.0, 160.0}, {1.0, 155.0}, {3.5, 130.0}}) {
    d.points.push_back({kStaticLoadMaxPressurePa, 0.0, f, units::kg_to_newton(kg, g)});
  }
  return d;
}

double abscissa(const OperatingPoint& p, SweptVariable v) {
  switch (v) {
    case SweptVariable::Displacement: return p.displacement_mm;
    case SweptVariable::Pressure: return p.pressure_pa;
    case SweptVariable::Load: return p.load_n;
  }
  return 0.0;
}

std::vector<OperatingPoint> prescribed_extension_sweep(const LssaModel& m, double pressure_pa,
                                                       std::span<const double> y_grid_mm) {
  std::vector<OperatingPoint> out;
  out.reserve(y_grid_mm.size());
  for (double y : y_grid_mm) {
    out.push_back({pressure_pa, y, net_force(m, pressure_pa, y), 0.0});
  }
  return out;
}

std::vector<OperatingPoint> static_load_sweep(const LssaModel& m, double load_n,
                                              std::span<const double> pressure_grid_pa,
                                              double y_op_mm) {
  if (!(load_n >= 0.0) || !std::isfinite(load_n)) {
    throw DomainError("static load must be finite and non-negative");
  }
  if (!std::is_sorted(pressure_grid_pa.begin(), pressure_grid_pa.end())) {
    throw UsageError("pressure grid must be non-decreasing");
  }
  std::vector<OperatingPoint> out;
  out.reserve(pressure_grid_pa.size());
  for (double p : pressure_grid_pa) {
    out.push_back({p, y_op_mm, std::max(0.0, net_force(m, p, y_op_mm) - load_n), load_n});
  }
  return out;
}

ComparisonMetrics compare_to_reference(std::span<const OperatingPoint> predicted,
                                       const ReferenceDataset& reference) {
  const SweptVariable v = reference.swept;
  std::vector<OperatingPoint> curve(predicted.begin(), predicted.end());
  std::stable_sort(curve.begin(), curve.end(), [v](const OperatingPoint& a, const OperatingPoint& b) {
    return abscissa(a, v) < abscissa(b, v);
  });

  const auto predict_at = [&](double x) -> std::optional<double> {
    if (curve.empty() || x < abscissa(curve.front(), v) || x > abscissa(curve.back(), v)) {
      return std::nullopt;
    }
    auto hi = std::lower_bound(curve.begin(), curve.end(), x, [v](const OperatingPoint& p, double t) {
      return abscissa(p, v) < t;
    });
    if (abscissa(*hi, v) == x) return hi->force_n;
    auto lo = std::prev(hi);
    const double t = (x - abscissa(*lo, v)) / (abscissa(*hi, v) - abscissa(*lo, v));
    return lo->force_n + t * (hi->force_n - lo->force_n);
  };

  ComparisonMetrics metrics;
  double sum_sq = 0.0;
  double sum = 0.0;
  for (const auto& ref : reference.points) {
    const auto pred = predict_at(abscissa(ref, v));
    if (!pred) continue;
    const double e = *pred - ref.force_n;
    sum += e;
    sum_sq += e * e;
    metrics.max_abs_error = std::max(metrics.max_abs_error, std::abs(e));
    ++metrics.n;
  }
  if (metrics.n == 0) {
    throw UsageError("predicted curve does not cover any point of " + reference.name);
  }
  metrics.rmse = std::sqrt(sum_sq / static_cast<double>(metrics.n));
  metrics.signed_bias = sum / static_cast<double>(metrics.n);
  return metrics;
}

} // namespace lssa
