#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "lssa/errors.hpp"
#include "lssa/experiments.hpp"
#include "lssa/fitting.hpp"
#include "lssa/force_model.hpp"
#include "lssa/io.hpp"
#include "lssa/material.hpp"
#include "lssa/units.hpp"
#include "lssa/validation.hpp"

namespace lssa::cli {
namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Usage:
    case ErrorKind::Domain:
    case ErrorKind::Extrapolation:
      return kUsage;
    case ErrorKind::Data:
      return kDataError;
    case ErrorKind::SingularFit:
    case ErrorKind::Calibration:
    case ErrorKind::Convergence:
      return kFailure;
  }
  return kFailure;
}

/// Inclusive grid from "start:stop:step".
std::vector<double> parse_range(const std::string& spec) {
  std::vector<double> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("range '" + spec + "' must be start:stop:step");
    }
  }
  if (parts.size() != 3) throw UsageError("range '" + spec + "' must be start:stop:step");
  const double start = parts[0], stop = parts[1], step = parts[2];
  if (!(step > 0.0) || !(stop >= start) || !std::isfinite(stop)) {
    throw UsageError("range needs step > 0 and stop >= start");
  }
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  if (count > 1'000'000) throw UsageError("range has too many points");
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) grid[i] = start + step * static_cast<double>(i);
  return grid;
}

void require_non_negative(double value, const char* what) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw UsageError(std::string(what) + " must be a non-negative number");
  }
}

/// CSV goes to --output when given, otherwise after the summary on stdout.
class CsvSink {
public:
  CsvSink(const std::string& path, std::ostream& out) : out_(&out) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw DataError("cannot write '" + path + "'");
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

private:
  std::ofstream file_;
  std::ostream* out_;
};

std::ostream& summary(std::ostream& out) { return out << "# "; }

void print_fit_report(std::ostream& out, const FitReport& r) {
  summary(out) << "samples: " << r.n_samples << '\n';
  summary(out) << "r_squared: " << std::setprecision(10) << r.r_squared << '\n';
  summary(out) << "residual_norm: " << std::setprecision(6) << r.residual_norm << '\n';
  summary(out) << "condition_estimate: " << std::setprecision(6) << r.condition_estimate << '\n';
}

struct FitMaterialArgs {
  std::string input;
  std::string model = "mr5";
  std::string output;
};

int fit_material(const FitMaterialArgs& a, std::ostream& out) {
  const auto samples = io::load_tensile_csv(a.input);
  std::optional<HyperelasticFit> best;
  if (a.model == "auto") {
    const auto ranked = rank_models(samples, kAllFamilies);
    summary(out) << "model ranking (r_squared, ties within " << kRankTieTolerance
                 << " go to fewer constants):\n";
    for (std::size_t i = 0; i < ranked.size(); ++i) {
      summary(out) << "  " << i + 1 << ". " << short_name(ranked[i].family) << "  "
                   << std::setprecision(10) << ranked[i].report.r_squared << '\n';
    }
    best = HyperelasticFit{ranked.front().params, ranked.front().report};
  } else {
    const auto family = parse_family(a.model);
    if (!family) throw UsageError("unknown model '" + a.model + "' (nh, mr2, mr3, mr5, yeoh3, auto)");
    best = fit_hyperelastic(samples, *family);
  }
  const auto& params = best->params;
  summary(out) << "model: " << short_name(params.family()) << '\n';
  print_fit_report(out, best->report);
  const auto moduli = small_strain_moduli(params);
  summary(out) << "initial shear modulus [MPa]: " << std::setprecision(8) << moduli.shear_mpa << '\n';
  summary(out) << "initial Young's modulus [MPa]: " << moduli.youngs_mpa << '\n';
  const double lo = std::min(1.0, samples.front().stretch);
  const double hi = std::max(samples.back().stretch, lo + 1e-3);
  const auto stability = stability_scan(params, lo, hi, 500);
  summary(out) << "stable on stretch [" << lo << ", " << hi << "]: " << (stability.stable ? "yes" : "no");
  if (stability.first_violation) out << " (first violation at stretch " << *stability.first_violation << ")";
  out << '\n';

  CsvSink sink(a.output, out);
  auto& csv = sink.stream();
  csv << std::setprecision(io::kCsvPrecision) << "parameter,value_mpa\n";
  const auto names = constant_names(params.family());
  for (std::size_t i = 0; i < names.size(); ++i) csv << names[i] << ',' << params.constants()[i] << '\n';
  csv << "D1," << params.d1() << '\n';
  return kSuccess;
}

struct FitStiffnessArgs {
  std::string input;
  int degree = 3;
  std::string output;
};

int fit_stiffness(const FitStiffnessArgs& a, std::ostream& out) {
  const auto samples = io::load_force_csv(a.input);
  const auto fit = fit_polynomial(samples, a.degree);
  const auto derivative = differentiate(fit.polynomial);
  summary(out) << "stiffness force F_K(y), y in mm, F in N, degree " << fit.polynomial.degree() << '\n';
  print_fit_report(out, fit.report);
  summary(out) << "axial stiffness at y = 0 [N/mm]: " << std::setprecision(8) << evaluate(derivative, 0.0)
               << '\n';

  CsvSink sink(a.output, out);
  auto& csv = sink.stream();
  csv << std::setprecision(io::kCsvPrecision) << "polynomial,power,coefficient\n";
  for (int i = fit.polynomial.degree(); i >= 0; --i) {
    csv << "force_n," << i << ',' << fit.polynomial.coefficient(i) << '\n';
  }
  for (int i = derivative.degree(); i >= 0; --i) {
    csv << "axial_stiffness_n_per_mm," << i << ',' << derivative.coefficient(i) << '\n';
  }
  return kSuccess;
}

struct PredictArgs {
  std::string config;
  double pressure_kpa = 0.0;
  double displacement_mm = 0.0;
  double load_kg = 0.0;
};

int predict(const PredictArgs& a, std::ostream& out) {
  require_non_negative(a.pressure_kpa, "--pressure");
  require_non_negative(a.displacement_mm, "--displacement");
  require_non_negative(a.load_kg, "--load");
  const auto cfg = io::load_config(a.config);
  const auto model = io::build_model(cfg);
  const double p = units::kpa_to_pa(a.pressure_kpa);
  const double y = a.displacement_mm;
  const double load = units::kg_to_newton(a.load_kg, cfg.g);

  const double area = model.effective_area(y);
  const double fk = evaluate(model.stiffness(), y);
  const double net = net_force(model, p, y);
  const double k = axial_stiffness(model, y);
  const double p_th = dead_band_pressure(model, load, y);
  const auto ext = free_extension(model, p, load);

  out << std::setprecision(8);
  summary(out) << "pressure " << a.pressure_kpa << " kPa, displacement " << y << " mm, load " << load
               << " N\n";
  if (model.geometry()) {
    const auto f = pressure_components(model, p, y);
    summary(out) << "cap force [N]: " << f.cap_n << '\n';
    summary(out) << "external wall force [N]: " << f.external_wall_n << '\n';
    summary(out) << "internal wall force [N]: " << f.internal_wall_n << '\n';
  }
  summary(out) << "effective area [m^2]: " << area << (model.area_override() ? " (calibrated)" : "") << '\n';
  summary(out) << "stiffness force [N]: " << fk << '\n';
  summary(out) << "axial stiffness [N/mm]: " << k << '\n';
  summary(out) << "net force [N]: " << net << '\n';
  summary(out) << "dead-band pressure [kPa]: " << units::pa_to_kpa(p_th) << '\n';
  summary(out) << "free extension [mm]: " << ext.displacement_mm << " (" << to_string(ext.status) << ")\n";

  out << std::setprecision(io::kCsvPrecision);
  out << "pressure_kpa,displacement_mm,load_n,effective_area_m2,stiffness_force_n,"
         "axial_stiffness_n_per_mm,net_force_n,output_force_n,dead_band_pressure_kpa,"
         "free_extension_mm,extension_status\n";
  out << a.pressure_kpa << ',' << y << ',' << load << ',' << area << ',' << fk << ',' << k << ','
      << net << ',' << net - load << ',' << units::pa_to_kpa(p_th) << ',' << ext.displacement_mm
      << ',' << to_string(ext.status) << '\n';
  return kSuccess;
}

struct SweepExtensionArgs {
  std::string config;
  double pressure_kpa = 0.0;
  std::string range;
  std::string output;
};

int sweep_extension(const SweepExtensionArgs& a, std::ostream& out) {
  require_non_negative(a.pressure_kpa, "--pressure");
  const auto grid = parse_range(a.range);
  const auto model = io::build_model(io::load_config(a.config));
  const double p = units::kpa_to_pa(a.pressure_kpa);
  const auto points = prescribed_extension_sweep(model, p, grid);
  const auto ext = free_extension(model, p, 0.0);
  summary(out) << "prescribed extension at " << a.pressure_kpa << " kPa, " << points.size() << " points\n";
  summary(out) << "zero-force extension [mm]: " << std::setprecision(8) << ext.displacement_mm << " ("
               << to_string(ext.status) << ")\n";
  CsvSink sink(a.output, out);
  io::write_extension_csv(sink.stream(), points);
  return kSuccess;
}

struct SweepPressureArgs {
  std::string config;
  double load_kg = 0.0;
  std::string range;
  std::optional<double> displacement_mm;
  std::string output;
};

int sweep_pressure(const SweepPressureArgs& a, std::ostream& out) {
  require_non_negative(a.load_kg, "--load");
  const auto grid_kpa = parse_range(a.range);
  if (grid_kpa.front() < 0.0) throw UsageError("pressure range must be non-negative");
  const auto cfg = io::load_config(a.config);
  const auto model = io::build_model(cfg);
  const double y_op = a.displacement_mm.value_or(cfg.y_op_mm);
  const double load = units::kg_to_newton(a.load_kg, cfg.g);
  std::vector<double> grid;
  for (double kpa : grid_kpa) grid.push_back(units::kpa_to_pa(kpa));
  const auto points = static_load_sweep(model, load, grid, y_op);
  summary(out) << "static load " << std::setprecision(8) << load << " N at y = " << y_op << " mm\n";
  summary(out) << "dead-band pressure [kPa]: " << units::pa_to_kpa(dead_band_pressure(model, load, y_op))
               << '\n';
  CsvSink sink(a.output, out);
  io::write_pressure_csv(sink.stream(), points);
  return kSuccess;
}

struct CalibrateArgs {
  std::string config;
  std::string measured;
  double pressure_kpa = 0.0;
  std::string output;
};

int calibrate(const CalibrateArgs& a, std::ostream& out) {
  const auto cfg = io::load_config(a.config);
  const auto samples = io::load_force_csv(a.measured);
  const double p = units::kpa_to_pa(a.pressure_kpa);
  std::optional<AreaProfile> profile;
  if (samples.size() == 1) {
    const auto& s = samples.front();
    profile = AreaProfile::constant(calibrate_effective_area(p, s.displacement_mm, s.force_n, cfg.stiffness));
    summary(out) << "constant effective area from one point at y = " << s.displacement_mm << " mm\n";
  } else {
    std::vector<OperatingPoint> points;
    for (const auto& s : samples) points.push_back({p, s.displacement_mm, s.force_n, 0.0});
    auto calibration = calibrate_area_profile(points, cfg.stiffness);
    summary(out) << "effective area profile from " << points.size() << " points at " << a.pressure_kpa
                 << " kPa\n";
    summary(out) << "monotone: "
                 << (calibration.non_monotone ? "no (area both falls and rises with extension)" : "yes")
                 << '\n';
    profile = std::move(calibration.profile);
  }
  CsvSink sink(a.output, out);
  io::write_area_profile_csv(sink.stream(), *profile);
  return kSuccess;
}

int validate(std::ostream& out) {
  const auto results = run_validation();
  write_validation_report(out, results);
  return all_passed(results) ? kSuccess : kFailure;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasi-static force modeling for linear soft sleeve actuators", "lssa"};
  app.require_subcommand(1);

  FitMaterialArgs fm;
  auto* fit_material_cmd = app.add_subcommand("fit-material", "Fit hyperelastic constants to tensile data");
  fit_material_cmd->add_option("--input", fm.input, "CSV with columns strain,stress_mpa")->required();
  fit_material_cmd->add_option("--model", fm.model, "nh, mr2, mr3, mr5, yeoh3 or auto")->capture_default_str();
  fit_material_cmd->add_option("--output", fm.output, "Write the constants CSV here");

  FitStiffnessArgs fs;
  auto* fit_stiffness_cmd = app.add_subcommand("fit-stiffness", "Fit the axial stiffness force polynomial");
  fit_stiffness_cmd->add_option("--input", fs.input, "CSV with columns displacement_mm,force_n")->required();
  fit_stiffness_cmd->add_option("--degree", fs.degree, "Polynomial degree")->capture_default_str();
  fit_stiffness_cmd->add_option("--output", fs.output, "Write the coefficient CSV here");

  PredictArgs pr;
  auto* predict_cmd = app.add_subcommand("predict", "Evaluate the force balance at one operating point");
  predict_cmd->add_option("--config", pr.config, "Model config file")->required();
  predict_cmd->add_option("--pressure", pr.pressure_kpa, "Pressure [kPa]")->required();
  predict_cmd->add_option("--displacement", pr.displacement_mm, "Displacement [mm]")->required();
  predict_cmd->add_option("--load", pr.load_kg, "Static load [kg]")->capture_default_str();

  SweepExtensionArgs se;
  auto* sweep_ext_cmd = app.add_subcommand("sweep-extension", "Force against prescribed extension");
  sweep_ext_cmd->add_option("--config", se.config, "Model config file")->required();
  sweep_ext_cmd->add_option("--pressure", se.pressure_kpa, "Pressure [kPa]")->required();
  sweep_ext_cmd->add_option("--range", se.range, "start:stop:step [mm]")->required();
  sweep_ext_cmd->add_option("--output", se.output, "Write the sweep CSV here");

  SweepPressureArgs sp;
  auto* sweep_p_cmd = app.add_subcommand("sweep-pressure", "Load-cell force against pressure under a static load");
  sweep_p_cmd->add_option("--config", sp.config, "Model config file")->required();
  sweep_p_cmd->add_option("--load", sp.load_kg, "Static load [kg]")->required();
  sweep_p_cmd->add_option("--range", sp.range, "start:stop:step [kPa]")->required();
  sweep_p_cmd->add_option("--displacement", sp.displacement_mm, "Operating displacement [mm], default y_op_mm");
  sweep_p_cmd->add_option("--output", sp.output, "Write the sweep CSV here");

  CalibrateArgs ca;
  auto* calibrate_cmd = app.add_subcommand("calibrate", "Back-compute effective pressure areas from measurements");
  calibrate_cmd->add_option("--config", ca.config, "Config providing the stiffness polynomial")->required();
  calibrate_cmd->add_option("--measured", ca.measured, "CSV with columns displacement_mm,force_n")->required();
  calibrate_cmd->add_option("--pressure", ca.pressure_kpa, "Test pressure [kPa]")->required();
  calibrate_cmd->add_option("--output", ca.output, "Write the area profile CSV here");

  auto* validate_cmd = app.add_subcommand("validate", "Check the model against the embedded reference data");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (fit_material_cmd->parsed()) return fit_material(fm, out);
    if (fit_stiffness_cmd->parsed()) return fit_stiffness(fs, out);
    if (predict_cmd->parsed()) return predict(pr, out);
    if (sweep_ext_cmd->parsed()) return sweep_extension(se, out);
    if (sweep_p_cmd->parsed()) return sweep_pressure(sp, out);
    if (calibrate_cmd->parsed()) return calibrate(ca, out);
    if (validate_cmd->parsed()) return validate(out);
  } catch (const Error& e) {
    err << "lssa: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "lssa: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

} // namespace lssa::cli
