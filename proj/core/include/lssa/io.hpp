#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lssa/experiments.hpp"
#include "lssa/fitting.hpp"
#include "lssa/force_model.hpp"
#include "lssa/geometry.hpp"
#include "lssa/material.hpp"

namespace lssa::io {

// CSV conventions: the first non-blank line that does not start with '#' is
// the header; '#' lines and blank lines are skipped anywhere; columns are
// located by name so extra columns are ignored. Every error reports the
// 1-based line number of the offending line.

/// Header `strain,stress_mpa`; stretch = 1 + strain. Sorted by stretch.
std::vector<UniaxialSample> parse_tensile_csv(std::istream& in);
std::vector<UniaxialSample> load_tensile_csv(const std::filesystem::path& path);

/// Header `displacement_mm,force_n`. Sorted by displacement.
std::vector<ForceSample> parse_force_csv(std::istream& in);
std::vector<ForceSample> load_force_csv(const std::filesystem::path& path);

/// Header `displacement_mm,area_m2`.
AreaProfile parse_area_profile_csv(std::istream& in);
AreaProfile load_area_profile_csv(const std::filesystem::path& path);

/// Everything needed to build an LssaModel from a config file.
struct RunConfig {
  std::optional<ActuatorGeometry> geometry;  // SI after conversion
  FoldKinematics kinematics = LinearUnfold{};
  Polynomial stiffness;
  std::optional<std::filesystem::path> stiffness_csv;  // set when the stiffness was fitted from a file
  std::optional<AreaProfile> area_profile;
  std::optional<std::filesystem::path> area_profile_csv;
  double y_max_mm = LssaModel::kDefaultMaxDisplacementMm;
  double y_op_mm = 0.0;
  double g = units::kStandardGravity;
};

/// Parses a JSON config (comments allowed). Relative file paths inside it
/// resolve against `base_dir`. Throws DataError on unknown keys, missing
/// keys or invalid values.
RunConfig parse_config(std::string_view text, const std::filesystem::path& base_dir = {});
RunConfig load_config(const std::filesystem::path& path);

/// Throws DataError when the config has neither geometry nor an area.
LssaModel build_model(const RunConfig& config);

/// Significant digits used for every number written to CSV.
inline constexpr int kCsvPrecision = 12;

/// `displacement_mm,pressure_kpa,force_n`
void write_extension_csv(std::ostream& out, std::span<const OperatingPoint> points);

/// `pressure_kpa,load_n,displacement_mm,force_n`
void write_pressure_csv(std::ostream& out, std::span<const OperatingPoint> points);

/// `displacement_mm,area_m2`
void write_area_profile_csv(std::ostream& out, const AreaProfile& profile);

} // namespace lssa::io
