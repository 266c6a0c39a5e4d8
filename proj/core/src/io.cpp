#include "lssa/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "lssa/errors.hpp"
#include "lssa/units.hpp"

namespace lssa::io {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

double parse_number(std::string_view field, std::size_t line, std::string_view column) {
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || !std::isfinite(value)) {
    throw DataError("column '" + std::string(column) + "': '" + std::string(field) +
                    "' is not a finite number",
                    line);
  }
  return value;
}

struct NumericRow {
  std::size_t line;
  std::vector<double> values;
};

// Reads the named columns of every data row.
std::vector<NumericRow> read_numeric_csv(std::istream& in,
                                         std::initializer_list<std::string_view> columns) {
  std::string text;
  std::size_t line_no = 0;
  std::vector<std::size_t> index;
  std::size_t header_width = 0;
  std::vector<NumericRow> rows;
  while (std::getline(in, text)) {
    ++line_no;
    const std::string_view line = trim(text);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split(line);
    if (index.empty()) {
      header_width = fields.size();
      for (std::string_view name : columns) {
        const auto it = std::find(fields.begin(), fields.end(), name);
        if (it == fields.end()) {
          throw DataError("missing column '" + std::string(name) + "'", line_no);
        }
        index.push_back(static_cast<std::size_t>(it - fields.begin()));
      }
      continue;
    }
    if (fields.size() != header_width) {
      throw DataError("expected " + std::to_string(header_width) + " fields, got " +
                          std::to_string(fields.size()),
                      line_no);
    }
    NumericRow row{line_no, {}};
    auto name = columns.begin();
    for (std::size_t i : index) {
      row.values.push_back(parse_number(fields[i], line_no, *name++));
    }
    rows.push_back(std::move(row));
  }
  if (index.empty()) throw DataError("file is empty (no header)");
  if (rows.empty()) throw DataError("file has a header but no data rows");
  return rows;
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  return in;
}

template <typename Parse>
auto load_with_context(const std::filesystem::path& path, Parse parse) {
  auto in = open(path);
  try {
    return parse(in);
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

} // namespace

std::vector<UniaxialSample> parse_tensile_csv(std::istream& in) {
  std::vector<UniaxialSample> samples;
  for (const auto& row : read_numeric_csv(in, {"strain", "stress_mpa"})) {
    const double stretch = 1.0 + row.values[0];
    if (!(stretch > 0.0)) {
      throw DataError("strain " + std::to_string(row.values[0]) + " gives non-positive stretch",
                      row.line);
    }
    samples.push_back({stretch, row.values[1]});
  }
  std::stable_sort(samples.begin(), samples.end(),
                   [](const auto& a, const auto& b) { return a.stretch < b.stretch; });
  return samples;
}

std::vector<UniaxialSample> load_tensile_csv(const std::filesystem::path& path) {
  return load_with_context(path, [](std::istream& in) { return parse_tensile_csv(in); });
}

std::vector<ForceSample> parse_force_csv(std::istream& in) {
  std::vector<ForceSample> samples;
  for (const auto& row : read_numeric_csv(in, {"displacement_mm", "force_n"})) {
    samples.push_back({row.values[0], row.values[1]});
  }
  std::stable_sort(samples.begin(), samples.end(), [](const auto& a, const auto& b) {
    return a.displacement_mm < b.displacement_mm;
  });
  return samples;
}

std::vector<ForceSample> load_force_csv(const std::filesystem::path& path) {
  return load_with_context(path, [](std::istream& in) { return parse_force_csv(in); });
}

AreaProfile parse_area_profile_csv(std::istream& in) {
  std::vector<AreaPoint> points;
  for (const auto& row : read_numeric_csv(in, {"displacement_mm", "area_m2"})) {
    points.push_back({row.values[0], row.values[1]});
  }
  try {
    return AreaProfile(std::move(points));
  } catch (const DomainError& e) {
    throw DataError(e.what());
  }
}

AreaProfile load_area_profile_csv(const std::filesystem::path& path) {
  return load_with_context(path, [](std::istream& in) { return parse_area_profile_csv(in); });
}

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& object, std::initializer_list<std::string_view> allowed,
                         std::string_view where) {
  for (const auto& [key, value] : object.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw DataError("unknown key '" + key + "' in " + std::string(where));
    }
  }
}

double number_at(const json& object, const char* key, std::string_view where) {
  if (!object.contains(key)) {
    throw DataError("missing key '" + std::string(key) + "' in " + std::string(where));
  }
  const json& v = object.at(key);
  if (!v.is_number() || !std::isfinite(v.get<double>())) {
    throw DataError("'" + std::string(key) + "' in " + std::string(where) + " must be a number");
  }
  return v.get<double>();
}

std::filesystem::path resolve(const json& v, const std::filesystem::path& base, const char* key) {
  if (!v.is_string()) throw DataError("'" + std::string(key) + "' must be a path string");
  std::filesystem::path p(v.get<std::string>());
  return p.is_relative() ? base / p : p;
}

ActuatorGeometry parse_geometry(const json& g) {
  if (!g.is_object()) throw DataError("'geometry' must be an object");
  reject_unknown_keys(g, {"r1o_mm", "r1i_mm", "r2i_mm", "r3i_mm", "s_mm", "theta0_deg", "n_folds"},
                      "geometry");
  ActuatorGeometry out;
  out.r1o_m = units::mm_to_m(number_at(g, "r1o_mm", "geometry"));
  out.r1i_m = units::mm_to_m(number_at(g, "r1i_mm", "geometry"));
  out.r2i_m = units::mm_to_m(number_at(g, "r2i_mm", "geometry"));
  out.r3i_m = units::mm_to_m(number_at(g, "r3i_mm", "geometry"));
  out.s_m = units::mm_to_m(number_at(g, "s_mm", "geometry"));
  out.theta0_rad = units::deg_to_rad(number_at(g, "theta0_deg", "geometry"));
  if (g.contains("n_folds")) {
    if (!g.at("n_folds").is_number_integer()) throw DataError("'n_folds' must be an integer");
    out.n_folds = g.at("n_folds").get<int>();
  }
  try {
    out.validate();
  } catch (const DomainError& e) {
    throw DataError(std::string("geometry: ") + e.what());
  }
  return out;
}

FoldKinematics parse_kinematics(const json& k) {
  if (k.is_string()) {
    const auto name = k.get<std::string>();
    if (name == "constant_angle") return ConstantAngle{};
    if (name == "linear_unfold") return LinearUnfold{};
    throw DataError("unknown kinematics '" + name + "'");
  }
  if (k.is_object() && k.size() == 1 && k.contains("tabulated") && k.at("tabulated").is_array()) {
    std::vector<AnglePoint> points;
    for (const auto& pair : k.at("tabulated")) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
        throw DataError("tabulated kinematics entries must be [y_mm, theta_deg] pairs");
      }
      points.push_back({pair[0].get<double>(), units::deg_to_rad(pair[1].get<double>())});
    }
    try {
      return TabulatedAngle(std::move(points));
    } catch (const DomainError& e) {
      throw DataError(std::string("kinematics: ") + e.what());
    }
  }
  throw DataError(
      "'kinematics' must be \"constant_angle\", \"linear_unfold\" or {\"tabulated\": [...]}");
}

} // namespace

RunConfig parse_config(std::string_view text, const std::filesystem::path& base_dir) {
  json root;
  try {
    root = json::parse(text.begin(), text.end(), nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw DataError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw DataError("config must be a JSON object");
  reject_unknown_keys(root,
                      {"geometry", "kinematics", "stiffness", "stiffness_csv", "area_profile",
                       "effective_area_m2", "y_max_mm", "y_op_mm", "g"},
                      "config");

  RunConfig cfg;
  if (root.contains("geometry")) cfg.geometry = parse_geometry(root.at("geometry"));
  if (root.contains("kinematics")) cfg.kinematics = parse_kinematics(root.at("kinematics"));

  const bool inline_stiffness = root.contains("stiffness");
  if (inline_stiffness == root.contains("stiffness_csv")) {
    throw DataError("config needs exactly one of 'stiffness' and 'stiffness_csv'");
  }
  if (inline_stiffness) {
    const json& s = root.at("stiffness");
    if (!s.is_object()) throw DataError("'stiffness' must be an object with keys a, b, c, d");
    reject_unknown_keys(s, {"a", "b", "c", "d"}, "stiffness");
    cfg.stiffness = Polynomial::from_descending({number_at(s, "a", "stiffness"),
                                                 number_at(s, "b", "stiffness"),
                                                 number_at(s, "c", "stiffness"),
                                                 number_at(s, "d", "stiffness")});
  } else {
    cfg.stiffness_csv = resolve(root.at("stiffness_csv"), base_dir, "stiffness_csv");
    const auto samples = load_force_csv(*cfg.stiffness_csv);
    cfg.stiffness = fit_polynomial(samples, 3).polynomial;
  }

  if (root.contains("area_profile") && root.contains("effective_area_m2")) {
    throw DataError("'area_profile' and 'effective_area_m2' are mutually exclusive");
  }
  if (root.contains("area_profile")) {
    cfg.area_profile_csv = resolve(root.at("area_profile"), base_dir, "area_profile");
    cfg.area_profile = load_area_profile_csv(*cfg.area_profile_csv);
  }
  if (root.contains("effective_area_m2")) {
    const double area = number_at(root, "effective_area_m2", "config");
    if (!(area > 0.0)) throw DataError("'effective_area_m2' must be positive");
    cfg.area_profile = AreaProfile::constant(area);
  }

  if (root.contains("y_max_mm")) cfg.y_max_mm = number_at(root, "y_max_mm", "config");
  if (root.contains("y_op_mm")) cfg.y_op_mm = number_at(root, "y_op_mm", "config");
  if (root.contains("g")) cfg.g = number_at(root, "g", "config");
  if (!(cfg.y_max_mm > 0.0)) throw DataError("'y_max_mm' must be positive");
  if (!(cfg.y_op_mm >= 0.0 && cfg.y_op_mm <= cfg.y_max_mm)) {
    throw DataError("'y_op_mm' must lie in [0, y_max_mm]");
  }
  if (!(cfg.g > 0.0)) throw DataError("'g' must be positive");
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  auto in = open(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_config(buffer.str(), path.parent_path());
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

LssaModel build_model(const RunConfig& config) {
  if (!config.geometry && !config.area_profile) {
    throw DataError("config needs 'geometry' or an effective area ('area_profile', 'effective_area_m2')");
  }
  if (config.geometry) {
    auto model = LssaModel::from_geometry(*config.geometry, config.kinematics, config.stiffness,
                                          config.y_max_mm);
    return config.area_profile ? model.with_area_override(*config.area_profile) : model;
  }
  return LssaModel::from_area_profile(*config.area_profile, config.stiffness, config.y_max_mm);
}

void write_extension_csv(std::ostream& out, std::span<const OperatingPoint> points) {
  const auto flags = out.flags();
  const auto precision = out.precision(kCsvPrecision);
  out << "displacement_mm,pressure_kpa,force_n\n";
  for (const auto& p : points) {
    out << p.displacement_mm << ',' << units::pa_to_kpa(p.pressure_pa) << ',' << p.force_n << '\n';
  }
  out.precision(precision);
  out.flags(flags);
}

void write_pressure_csv(std::ostream& out, std::span<const OperatingPoint> points) {
  const auto flags = out.flags();
  const auto precision = out.precision(kCsvPrecision);
  out << "pressure_kpa,load_n,displacement_mm,force_n\n";
  for (const auto& p : points) {
    out << units::pa_to_kpa(p.pressure_pa) << ',' << p.load_n << ',' << p.displacement_mm << ','
        << p.force_n << '\n';
  }
  out.precision(precision);
  out.flags(flags);
}

void write_area_profile_csv(std::ostream& out, const AreaProfile& profile) {
  const auto flags = out.flags();
  const auto precision = out.precision(kCsvPrecision);
  out << "displacement_mm,area_m2\n";
  for (const auto& p : profile.points()) {
    out << p.displacement_mm << ',' << p.area_m2 << '\n';
  }
  out.precision(precision);
  out.flags(flags);
}

} // namespace lssa::io
