#pragma once

#include <span>
#include <string>
#include <vector>

#include "lssa/force_model.hpp"
#include "lssa/units.hpp"

namespace lssa {

enum class SweptVariable { Displacement, Pressure, Load };

struct ReferenceDataset {
  std::string name;
  std::string version;
  std::string source;
  SweptVariable swept = SweptVariable::Displacement;
  std::vector<OperatingPoint> points;
  bool approximate = true;            // read from prose, not raw data
  double reading_tolerance_n = 2.0;
};

/// Force at 125 kPa against prescribed extension:
/// (0, 112) (10, 72) (20, 41) (30, 19) (40, 0) mm/N.
ReferenceDataset reference_extension_125kpa();

/// Force at 200 kPa against static load, loads in kg converted with `g`:
/// (0 kg, 160) (1 kg, 155) (3.5 kg, 130) N.
ReferenceDataset reference_static_load_200kpa(double g = units::kStandardGravity);

/// Measured onset of output force under the 3.5 kg load.
struct DeadBandObservation {
  double load_kg = 3.5;
  double onset_low_pa = 60e3;
  double onset_high_pa = 70e3;
};

inline constexpr DeadBandObservation kStaticLoadOnset{};

/// Load masses of the static-load experiment, kg.
inline constexpr double kStaticLoadMassesKg[] = {0.0, 1.0, 2.0, 3.5};

/// Reference pressures of the two rigs, Pa.
inline constexpr double kExtensionTestPressurePa = 125e3;
inline constexpr double kStaticLoadMaxPressurePa = 200e3;

/// Value of the swept variable of `p` selected by `v`.
double abscissa(const OperatingPoint& p, SweptVariable v);

struct ComparisonMetrics {
  double rmse = 0.0;
  double max_abs_error = 0.0;
  double signed_bias = 0.0;  // mean of predicted - reference
  std::size_t n = 0;
};

/// One point per grid entry with force = net_force(P, y).
std::vector<OperatingPoint> prescribed_extension_sweep(const LssaModel& m, double pressure_pa,
                                                       std::span<const double> y_grid_mm);

/// Load-cell force of the static-load rig while pressure ramps:
/// max(0, P A_eff(y_op) - F_K(y_op) - load). The grid must be
/// non-decreasing.
std::vector<OperatingPoint> static_load_sweep(const LssaModel& m, double load_n,
                                              std::span<const double> pressure_grid_pa,
                                              double y_op_mm);

/// Errors are predicted - reference at each reference abscissa covered by
/// the predicted curve; predicted values are linearly interpolated when
/// abscissae differ. Throws UsageError when no reference point is covered.
ComparisonMetrics compare_to_reference(std::span<const OperatingPoint> predicted,
                                       const ReferenceDataset& reference);

} // namespace lssa
