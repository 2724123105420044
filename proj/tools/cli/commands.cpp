// Copyright 2026 The sqstat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "sqstat/spectral.hpp"

namespace sqstat::cli {

namespace {

constexpr StateOrdering kOrderings[] = {
    StateOrdering::kPhotonsInSqueezedThermal,
    StateOrdering::kSqueezedInPhotonThermal,
};

int digits_for(OutputFormat fmt) {
  return fmt == OutputFormat::kTable ? kTableDigits : kMachineDigits;
}

double relative_error(double candidate, double reference) {
  const double diff = std::abs(candidate - reference);
  return reference == 0.0 ? diff : diff / std::abs(reference);
}

void emit_warnings(const NumberStatistics& stats, std::ostream& err) {
  for (const std::string& w : stats.warnings) err << "warning: " << w << '\n';
}

void emit_rows(OutputFormat fmt, const CsvRow& header,
               const std::vector<CsvRow>& rows, std::ostream& out) {
  out << (fmt == OutputFormat::kCsv ? render_csv(header, rows)
                                    : render_table(header, rows));
}

struct VerifyRow {
  VerifyRow(ModeParameters p, StateOrdering w, NumberStatistics c)
      : point(p), which(w), closed(std::move(c)) {}

  ModeParameters point;
  StateOrdering which;
  NumberStatistics closed;
  std::optional<NumberStatistics> oracle;
  TruncationReport report;
  double rel_err_mean = NAN;
  double rel_err_var = NAN;
  bool pass = false;
  std::string failure;
};

}  // namespace

std::vector<ModeParameters> verification_grid() {
  std::vector<ModeParameters> grid;
  for (double r : {0.0, 0.3, 0.8}) {
    for (double phi : {0.0, std::numbers::pi / 2}) {
      for (double mag : {0.0, 0.5, 1.5}) {
        for (double theta : {0.0, 1.0}) {
          for (double x : {0.5, 1.0, 3.0}) {
            grid.push_back({SqueezeParameter(r, phi),
                            CoherentAmplitude(mag, theta),
                            DimensionlessTemperature(x)});
          }
        }
      }
    }
  }
  return grid;
}

int cmd_stats(const ModeParameters& p, StateOrdering which, OutputFormat fmt,
              std::ostream& out, std::ostream& err) {
  const NumberStatistics stats = closed_form_statistics(p, which);
  emit_warnings(stats, err);
  if (fmt == OutputFormat::kJson) {
    nlohmann::json inputs = to_json(p);
    inputs["state"] = to_string(which);
    nlohmann::json doc = {
        {"inputs", inputs},
        {"results", nlohmann::json::array({{
                        {"state", to_string(which)},
                        {"mean", json_number(stats.mean)},
                        {"variance", json_number(stats.variance)},
                    }})},
    };
    out << dump_json(doc);
    return exit_code::kOk;
  }
  const int d = digits_for(fmt);
  emit_rows(fmt, {"state", "mean", "variance"},
            {{to_string(which), format_number(stats.mean, d),
              format_number(stats.variance, d)}},
            out);
  return exit_code::kOk;
}

int cmd_verify(const std::vector<ModeParameters>& points, double rel_tol,
               const OracleConfig& oracle, OutputFormat fmt, std::ostream& out,
               std::ostream& err) {
  if (!(rel_tol > 0.0) || !std::isfinite(rel_tol)) {
    throw DomainError("--rel-tol must be finite and > 0");
  }
  // Refuse out-of-range requests before printing anything.
  for (const ModeParameters& p : points) {
    if (p.squeeze.r() > oracle.r_max) {
      std::ostringstream msg;
      msg << "oracle refuses r = " << p.squeeze.r() << " > r_max = "
          << oracle.r_max;
      throw OracleRangeError(msg.str());
    }
  }

  std::vector<VerifyRow> rows;
  for (const ModeParameters& p : points) {
    for (StateOrdering which : kOrderings) {
      VerifyRow row{p, which, closed_form_statistics(p, which)};
      emit_warnings(row.closed, err);
      try {
        ConvergedStatistics c = converge_statistics(p, which, rel_tol, oracle);
        row.oracle = c.statistics;
        row.report = std::move(c.report);
      } catch (const ConvergenceError& e) {
        row.report = e.report();
        row.failure = e.what();
        if (!row.report.values.empty()) {
          row.oracle = NumberStatistics{row.report.values.back(),
                                        row.report.variances.back(),
                                        {}};
        }
      }
      if (row.oracle) {
        row.rel_err_mean = relative_error(row.oracle->mean, row.closed.mean);
        row.rel_err_var =
            relative_error(row.oracle->variance, row.closed.variance);
      }
      row.pass = row.report.converged && row.rel_err_mean < rel_tol &&
                 row.rel_err_var < rel_tol;
      rows.push_back(std::move(row));
    }
  }
  const auto failures = static_cast<std::size_t>(std::count_if(
      rows.begin(), rows.end(), [](const VerifyRow& r) { return !r.pass; }));

  if (fmt == OutputFormat::kJson) {
    nlohmann::json results = nlohmann::json::array();
    for (const VerifyRow& row : rows) {
      nlohmann::json oracle_json = nullptr;
      if (row.oracle) {
        oracle_json = {{"mean", json_number(row.oracle->mean)},
                       {"variance", json_number(row.oracle->variance)}};
      }
      nlohmann::json item = {
          {"state", to_string(row.which)},
          {"point", to_json(row.point)},
          {"closed_form",
           {{"mean", json_number(row.closed.mean)},
            {"variance", json_number(row.closed.variance)}}},
          {"oracle", oracle_json},
          {"rel_err_mean", json_number(row.rel_err_mean)},
          {"rel_err_var", json_number(row.rel_err_var)},
          {"pass", row.pass},
          {"truncation", to_json(row.report)},
      };
      if (!row.failure.empty()) item["error"] = row.failure;
      results.push_back(std::move(item));
    }
    nlohmann::json doc = {
        {"inputs",
         {{"points", points.size()},
          {"rel_tol", json_number(rel_tol)},
          {"fock_dim_max", oracle.dim_max},
          {"r_max", json_number(oracle.r_max)}}},
        {"results", results},
    };
    out << dump_json(doc);
  } else {
    const int d = digits_for(fmt);
    const CsvRow header = {"state",       "r",           "phi",
                           "alpha_mag",   "alpha_phase", "x",
                           "closed_mean", "oracle_mean", "rel_err_mean",
                           "closed_var",  "oracle_var",  "rel_err_var",
                           "final_dim",   "converged",   "pass"};
    std::vector<CsvRow> body;
    for (const VerifyRow& row : rows) {
      const double oracle_mean = row.oracle ? row.oracle->mean : NAN;
      const double oracle_var = row.oracle ? row.oracle->variance : NAN;
      const std::size_t final_dim =
          row.report.dims_tried.empty() ? 0 : row.report.dims_tried.back();
      body.push_back({to_string(row.which),
                      format_number(row.point.squeeze.r(), d),
                      format_number(row.point.squeeze.phi(), d),
                      format_number(row.point.coherent.magnitude(), d),
                      format_number(row.point.coherent.theta(), d),
                      format_number(row.point.x.value(), d),
                      format_number(row.closed.mean, d),
                      format_number(oracle_mean, d),
                      format_number(row.rel_err_mean, d),
                      format_number(row.closed.variance, d),
                      format_number(oracle_var, d),
                      format_number(row.rel_err_var, d),
                      std::to_string(final_dim),
                      row.report.converged ? "true" : "false",
                      row.pass ? "true" : "false"});
    }
    emit_rows(fmt, header, body, out);
    if (fmt == OutputFormat::kTable) {
      out << "\n" << rows.size() - failures << "/" << rows.size()
          << " comparisons within rel_tol " << format_number(rel_tol, d)
          << '\n';
    }
  }
  for (const VerifyRow& row : rows) {
    if (!row.failure.empty()) err << "error: " << row.failure << '\n';
  }
  return failures == 0 ? exit_code::kOk : exit_code::kVerificationFailed;
}

int cmd_spectral(const ModeParameters& p,
                 std::optional<double> bath_temperature_kelvin,
                 OutputFormat fmt, std::ostream& out, std::ostream&) {
  struct Entry {
    StateOrdering which;
    SpectralFunction sf;
    std::optional<double> mu;
    double closed_mean;
    double representation;
    std::optional<double> t_eq;
  };
  std::vector<Entry> entries;
  for (StateOrdering which : kOrderings) {
    SpectralFunction sf = spectral_for(p, which);
    const bool photons = which == StateOrdering::kPhotonsInSqueezedThermal;
    const double closed = photons ? mean_photons_in_squeezed_thermal(p)
                                  : mean_squeezed_in_photon_thermal(p);
    const std::optional<double> mu =
        photons ? chemical_potential_photons_in_squeezed_thermal(p)
                : chemical_potential_squeezed_in_photon_thermal(p);
    std::optional<double> t_eq;
    if (bath_temperature_kelvin) {
      t_eq = equilibrium_temperature(sf, *bath_temperature_kelvin);
    }
    const double representation = evaluate_representation(sf, p.x);
    entries.push_back({which, std::move(sf), mu, closed, representation, t_eq});
  }

  if (fmt == OutputFormat::kJson) {
    nlohmann::json inputs = to_json(p);
    inputs["temp_kelvin"] = bath_temperature_kelvin
                                ? json_number(*bath_temperature_kelvin)
                                : nlohmann::json(nullptr);
    nlohmann::json results = nlohmann::json::array();
    for (const Entry& e : entries) {
      results.push_back({
          {"state", to_string(e.which)},
          {"atoms", to_json(e.sf)},
          {"chemical_potential",
           e.mu ? json_number(*e.mu) : nlohmann::json(nullptr)},
          {"normalization", json_number(normalization_integral(e.sf))},
          {"closed_form_mean", json_number(e.closed_mean)},
          {"representation_mean", json_number(e.representation)},
          {"reconstruction_residual",
           json_number(std::abs(e.representation - e.closed_mean))},
          {"equilibrium_temperature_kelvin",
           e.t_eq ? json_number(*e.t_eq) : nlohmann::json(nullptr)},
      });
    }
    out << dump_json({{"inputs", inputs}, {"results", results}});
    return exit_code::kOk;
  }

  const int d = digits_for(fmt);
  const CsvRow header = {"state",         "atom",     "weight", "temp",
                         "mu",            "normalization",
                         "residual",      "t_eq_kelvin"};
  std::vector<CsvRow> body;
  for (const Entry& e : entries) {
    const std::string norm = format_number(normalization_integral(e.sf), d);
    const std::string residual =
        format_number(std::abs(e.representation - e.closed_mean), d);
    const std::string t_eq = e.t_eq ? format_number(*e.t_eq, d) : "";
    std::size_t index = 0;
    for (const SpectralAtom& atom : e.sf.atoms()) {
      const auto* finite = std::get_if<FiniteTemperature>(&atom.temperature);
      body.push_back({to_string(e.which), std::to_string(index++),
                      format_number(atom.weight, d),
                      finite ? format_number(finite->ratio, d) : "infinite",
                      format_number(atom.mu, d), norm, residual, t_eq});
    }
  }
  emit_rows(fmt, header, body, out);
  return exit_code::kOk;
}

int cmd_sweep(const SweepSpec& spec, StateOrdering which, OutputFormat fmt,
              bool with_oracle, double rel_tol, const OracleConfig& oracle,
              std::ostream& out, std::ostream& err) {
  const std::vector<double> values = swept_values(spec);
  if (with_oracle && (!(rel_tol > 0.0) || !std::isfinite(rel_tol))) {
    throw DomainError("--rel-tol must be finite and > 0");
  }
  struct Point {
    double value;
    NumberStatistics closed;
    std::optional<NumberStatistics> oracle;
  };
  // Validate every point before evaluating any of them.
  std::vector<ModeParameters> params;
  for (double v : values) {
    params.push_back(with_parameter(spec.fixed, spec.parameter, v));
  }

  std::vector<Point> points;
  bool oracle_failed = false;
  for (std::size_t i = 0; i < values.size(); ++i) {
    Point pt{values[i], closed_form_statistics(params[i], which), {}};
    emit_warnings(pt.closed, err);
    if (with_oracle) {
      try {
        pt.oracle =
            converge_statistics(params[i], which, rel_tol, oracle).statistics;
      } catch (const ConvergenceError& e) {
        err << "error: " << to_string(spec.parameter) << " = "
            << format_number(values[i], kMachineDigits) << ": " << e.what()
            << '\n';
        oracle_failed = true;
      }
    }
    points.push_back(std::move(pt));
  }

  const char* name = to_string(spec.parameter);
  if (fmt == OutputFormat::kJson) {
    nlohmann::json fixed = to_json(spec.fixed);
    fixed.erase(name);
    nlohmann::json inputs = {
        {"sweep",
         {{"param", name},
          {"start", json_number(spec.start)},
          {"stop", json_number(spec.stop)},
          {"steps", spec.steps}}},
        {"fixed", fixed},
        {"state", to_string(which)},
        {"oracle", with_oracle},
    };
    if (with_oracle) inputs["rel_tol"] = json_number(rel_tol);
    nlohmann::json results = nlohmann::json::array();
    for (const Point& pt : points) {
      nlohmann::json item = {{"value", json_number(pt.value)},
                             {"mean", json_number(pt.closed.mean)},
                             {"variance", json_number(pt.closed.variance)}};
      if (with_oracle) {
        const double om = pt.oracle ? pt.oracle->mean : NAN;
        const double ov = pt.oracle ? pt.oracle->variance : NAN;
        item["oracle_mean"] = json_number(om);
        item["oracle_variance"] = json_number(ov);
        item["rel_err_mean"] = json_number(relative_error(om, pt.closed.mean));
        item["rel_err_var"] =
            json_number(relative_error(ov, pt.closed.variance));
      }
      results.push_back(std::move(item));
    }
    out << dump_json({{"inputs", inputs}, {"results", results}});
  } else {
    const int d = digits_for(fmt);
    CsvRow header = {"param", "value", "mean", "variance"};
    if (with_oracle) {
      header.insert(header.end(), {"oracle_mean", "oracle_variance",
                                   "rel_err_mean", "rel_err_var"});
    }
    std::vector<CsvRow> body;
    for (const Point& pt : points) {
      CsvRow row = {name, format_number(pt.value, d),
                    format_number(pt.closed.mean, d),
                    format_number(pt.closed.variance, d)};
      if (with_oracle) {
        const double om = pt.oracle ? pt.oracle->mean : NAN;
        const double ov = pt.oracle ? pt.oracle->variance : NAN;
        row.insert(row.end(),
                   {format_number(om, d), format_number(ov, d),
                    format_number(relative_error(om, pt.closed.mean), d),
                    format_number(relative_error(ov, pt.closed.variance), d)});
      }
      body.push_back(std::move(row));
    }
    emit_rows(fmt, header, body, out);
  }
  return oracle_failed ? exit_code::kVerificationFailed : exit_code::kOk;
}

namespace {

struct PointFlags {
  double r = 0.0;
  double phi = 0.0;
  double alpha_mag = 0.0;
  double alpha_phase = 0.0;
  std::optional<double> x;
  std::optional<double> temp_kelvin;
  std::optional<double> omega;
};

void add_point_flags(CLI::App& cmd, PointFlags& f) {
  cmd.add_option("--r", f.r, "squeeze magnitude r >= 0");
  cmd.add_option("--phi", f.phi, "squeeze phase phi [rad]");
  cmd.add_option("--alpha-mag", f.alpha_mag, "coherent amplitude |alpha|");
  cmd.add_option("--alpha-phase", f.alpha_phase,
                 "coherent phase theta [rad]");
  auto* x = cmd.add_option("--x", f.x, "dimensionless hbar*omega/(k_B*T)");
  auto* t = cmd.add_option("--temp-kelvin", f.temp_kelvin,
                           "bath temperature T [K]");
  auto* w = cmd.add_option("--omega-rad-s", f.omega,
                           "mode angular frequency [rad/s]");
  x->excludes(t);
  x->excludes(w);
  t->needs(w);
  w->needs(t);
}

std::optional<DimensionlessTemperature> resolve_x(const PointFlags& f) {
  if (f.x) return DimensionlessTemperature(*f.x);
  if (f.temp_kelvin && f.omega) {
    return DimensionlessTemperature::from_physical(*f.temp_kelvin, *f.omega);
  }
  return std::nullopt;
}

ModeParameters resolve_point(const PointFlags& f,
                             std::optional<DimensionlessTemperature> x) {
  if (!x) {
    throw DomainError("one of --x or --temp-kelvin with --omega-rad-s is "
                      "required");
  }
  return {SqueezeParameter(f.r, f.phi),
          CoherentAmplitude(f.alpha_mag, f.alpha_phase), *x};
}

const std::map<std::string, StateOrdering> kStateNames = {
    {"photons-in-squeezed-thermal", StateOrdering::kPhotonsInSqueezedThermal},
    {"squeezed-in-thermal", StateOrdering::kSqueezedInPhotonThermal},
};

const std::map<std::string, OutputFormat> kFormatNames = {
    {"table", OutputFormat::kTable},
    {"csv", OutputFormat::kCsv},
    {"json", OutputFormat::kJson},
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Photon-number statistics of squeezed coherent thermal states",
               "sqstat"};
  app.require_subcommand(1);

  PointFlags point;
  std::string state = "squeezed-in-thermal";
  std::string format = "table";
  double rel_tol = 1e-6;
  std::size_t dim_max = OracleConfig{}.dim_max;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "table | csv | json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
  };
  auto add_state = [&](CLI::App* cmd) {
    cmd->add_option("--state", state,
                    "photons-in-squeezed-thermal | squeezed-in-thermal")
        ->check(CLI::IsMember(
            {"photons-in-squeezed-thermal", "squeezed-in-thermal"}));
  };
  auto add_oracle = [&](CLI::App* cmd) {
    cmd->add_option("--rel-tol", rel_tol,
                    "oracle convergence and comparison tolerance");
    cmd->add_option("--fock-dim-max", dim_max,
                    "largest truncation dimension for the oracle");
  };

  CLI::App* stats = app.add_subcommand("stats", "closed-form mean and variance");
  add_point_flags(*stats, point);
  add_state(stats);
  add_format(stats);

  bool grid = false;
  CLI::App* verify =
      app.add_subcommand("verify", "closed forms vs truncated Fock-space oracle");
  add_point_flags(*verify, point);
  verify->add_flag("--grid", grid, "use the 108-point verification grid");
  add_oracle(verify);
  add_format(verify);

  CLI::App* spectral =
      app.add_subcommand("spectral", "spectral-function decomposition");
  add_point_flags(*spectral, point);
  add_format(spectral);

  std::string param = "r";
  double start = 0.0;
  double stop = 1.0;
  std::size_t steps = 11;
  bool with_oracle = false;
  CLI::App* sweep = app.add_subcommand("sweep", "parameter sweep");
  add_point_flags(*sweep, point);
  sweep->add_option("--param", param, "r | phi | alpha_mag | alpha_phase | x")
      ->check(CLI::IsMember({"r", "phi", "alpha_mag", "alpha_phase", "x"}));
  sweep->add_option("--start", start, "first swept value");
  sweep->add_option("--stop", stop, "last swept value");
  sweep->add_option("--steps", steps, "number of values (>= 2)");
  sweep->add_flag("--oracle", with_oracle, "also run the Fock-space oracle");
  add_state(sweep);
  add_format(sweep);
  add_oracle(sweep);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::kOk : exit_code::kUsage;
  }

  const OutputFormat fmt = kFormatNames.at(format);
  const StateOrdering which = kStateNames.at(state);
  OracleConfig oracle;
  oracle.dim_max = dim_max;

  try {
    if (stats->parsed()) {
      return cmd_stats(resolve_point(point, resolve_x(point)), which, fmt, out,
                       err);
    }
    if (verify->parsed()) {
      const std::vector<ModeParameters> points =
          grid ? verification_grid()
               : std::vector<ModeParameters>{
                     resolve_point(point, resolve_x(point))};
      return cmd_verify(points, rel_tol, oracle, fmt, out, err);
    }
    if (spectral->parsed()) {
      return cmd_spectral(resolve_point(point, resolve_x(point)),
                          point.temp_kelvin, fmt, out, err);
    }
    if (sweep->parsed()) {
      const SweepParameter swept = *parse_sweep_parameter(param);
      std::optional<DimensionlessTemperature> x = resolve_x(point);
      if (swept == SweepParameter::kX && !x) {
        // Placeholder; every point overrides it.
        x = DimensionlessTemperature(1.0);
      }
      const SweepSpec spec{swept, start, stop, steps, resolve_point(point, x)};
      validate(spec);
      return cmd_sweep(spec, which, fmt, with_oracle, rel_tol, oracle, out,
                       err);
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const OracleRangeError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kUsage;
  }
  return exit_code::kUsage;
}

}  // namespace sqstat::cli
