#include "thz/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <variant>

#include <json.hpp>

#include "thz/errors.hpp"
#include "thz/link.hpp"
#include "thz/medium.hpp"
#include "thz/scintillation.hpp"
#include "thz/turbulence.hpp"

namespace thz {
namespace cli {

using nlohmann::json;

Scenario scenario_from_string(const std::string& name) {
  static const std::map<std::string, Scenario> table = {
      {"risc-profile", Scenario::risc_profile}, {"rytov", Scenario::rytov},
      {"scint-pdf", Scenario::scint_pdf},       {"scint-sample", Scenario::scint_sample},
      {"atten", Scenario::atten},               {"budget", Scenario::budget},
      {"fading", Scenario::fading},
  };
  const auto it = table.find(name);
  if (it == table.end()) {
    throw config_error("unknown scenario '" + name +
                       "' (expected risc-profile|rytov|scint-pdf|scint-sample|atten|budget|"
                       "fading)");
  }
  return it->second;
}

std::string to_string(Scenario scenario) {
  switch (scenario) {
    case Scenario::risc_profile: return "risc-profile";
    case Scenario::rytov: return "rytov";
    case Scenario::scint_pdf: return "scint-pdf";
    case Scenario::scint_sample: return "scint-sample";
    case Scenario::atten: return "atten";
    case Scenario::budget: return "budget";
    case Scenario::fading: return "fading";
  }
  return "unknown";
}

SweepSpec SweepSpec::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream stream(text);
  std::string part;
  while (std::getline(stream, part, ':')) parts.push_back(part);
  if (parts.size() < 3 || parts.size() > 4) {
    throw config_error("range '" + text + "' must be start:stop:points[:log|lin]");
  }
  SweepSpec spec;
  try {
    spec.start = std::stod(parts[0]);
    spec.stop = std::stod(parts[1]);
    spec.points = std::stoi(parts[2]);
  } catch (const std::logic_error&) {
    throw config_error("range '" + text + "' has non-numeric fields");
  }
  if (parts.size() == 4) {
    if (parts[3] == "log") {
      spec.log_spacing = true;
    } else if (parts[3] == "lin") {
      spec.log_spacing = false;
    } else {
      throw config_error("range '" + text + "': spacing must be 'log' or 'lin'");
    }
  }
  if (spec.points < 2) throw config_error("range '" + text + "' needs at least 2 points");
  if (!(spec.stop > spec.start)) throw config_error("range '" + text + "' must increase");
  if (spec.log_spacing && !(spec.start > 0.0)) {
    throw config_error("range '" + text + "': log spacing requires a positive start");
  }
  return spec;
}

std::string SweepSpec::to_text() const {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g:%.17g:%d:%s", start, stop, points,
                log_spacing ? "log" : "lin");
  return buf;
}

std::vector<double> SweepSpec::grid() const {
  std::vector<double> values(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / (points - 1);
    values[i] = log_spacing ? start * std::pow(stop / start, t) : start + (stop - start) * t;
  }
  return values;
}

void apply_preset(RunConfig& config, const std::string& name) {
  config.preset = name;
  if (name == "fig2") {
    config.scenario = Scenario::risc_profile;
    config.alt_range = {0.0, 10000.0, 201, false};
    config.ground_cn2 = 1.7e-14;
    config.wind = 21.0;
    config.grid_note = "altitude 0..10 km, 201 linear points, A=1.7e-14, v=21 m/s "
                       "(profile figure; grid reconstructed, not published)";
  } else if (name == "fig3a") {
    config.scenario = Scenario::rytov;
    config.freq_range_ghz = {100.0, 1000.0, 91, false};
    config.cn2 = 1.0e-11;
    config.dist_list_m = {1.0e3, 1.0e4, 1.0e5};
    config.grid_note = "Rytov variance vs frequency 0.1..1 THz at C_n^2=1e-11, "
                       "L in {1, 10, 100} km (grid reconstructed, not published)";
  } else if (name == "fig3b") {
    config.scenario = Scenario::rytov;
    config.freq_range_ghz = {100.0, 1000.0, 91, false};
    config.dist_m = 1.0e4;
    config.cn2_list = {1.0e-11, 1.0e-13, 1.0e-15};
    config.grid_note = "Rytov variance vs frequency 0.1..1 THz at L=10 km, "
                       "C_n^2 in {1e-11, 1e-13, 1e-15} (grid reconstructed, not published)";
  } else if (name == "fig4") {
    config.scenario = Scenario::scint_pdf;
    config.rytov_list = {0.1, 1.0, 10.0};
    config.aperture_d = 0.0;
    config.intensity_range = {0.001, 12.001, 6001, false};
    config.grid_note = "Gamma-Gamma pdf vs intensity ratio for sigma_R^2 in {0.1, 1, 10}, "
                       "point receiver D=0 (plot aperture unstated; grid reconstructed)";
  } else if (name == "fig5a") {
    config.scenario = Scenario::atten;
    config.freq_range_ghz = {100.0, 10000.0, 201, true};
    config.cn2 = 1.0e-13;
    config.dist_list_m = {1.0e3, 5.0e3, 1.0e4};
    config.grid_note = "turbulence attenuation vs frequency 0.1..10 THz (log grid) at "
                       "C_n^2=1e-13, L in {1, 5, 10} km (grid reconstructed, not published)";
  } else if (name == "fig5b") {
    config.scenario = Scenario::atten;
    config.freq_range_ghz = {100.0, 10000.0, 201, true};
    config.dist_m = 1.0e3;
    config.cn2_list = {1.0e-14, 1.0e-13, 1.0e-12};
    config.grid_note = "turbulence attenuation vs frequency 0.1..10 THz (log grid) at "
                       "L=1 km, C_n^2 in {1e-14, 1e-13, 1e-12} (grid reconstructed)";
  } else {
    throw config_error("unknown preset '" + name +
                       "' (expected fig2|fig3a|fig3b|fig4|fig5a|fig5b)");
  }
}

namespace {

std::vector<double> number_list(const json& value, const std::string& key) {
  std::vector<double> list;
  if (value.is_array()) {
    for (const auto& item : value) {
      if (!item.is_number()) throw config_error("config key '" + key + "': non-numeric entry");
      list.push_back(item.get<double>());
    }
    return list;
  }
  if (value.is_string()) {
    std::stringstream stream(value.get<std::string>());
    std::string part;
    while (std::getline(stream, part, ',')) {
      try {
        list.push_back(std::stod(part));
      } catch (const std::logic_error&) {
        throw config_error("config key '" + key + "': unparsable number '" + part + "'");
      }
    }
    return list;
  }
  throw config_error("config key '" + key + "' must be an array or comma-separated string");
}

double number(const json& value, const std::string& key) {
  if (!value.is_number()) throw config_error("config key '" + key + "' must be a number");
  return value.get<double>();
}

}  // namespace

void merge_config_file(RunConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open config file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& err) {
    throw config_error("config file '" + path + "': " + err.what());
  }
  if (!doc.is_object()) throw config_error("config file '" + path + "' must hold an object");

  if (doc.contains("preset")) {
    apply_preset(config, doc["preset"].get<std::string>());
  }
  for (const auto& [key, value] : doc.items()) {
    if (key == "preset") continue;
    if (key == "scenario") config.scenario = scenario_from_string(value.get<std::string>());
    else if (key == "alt_range") config.alt_range = SweepSpec::parse(value.get<std::string>());
    else if (key == "freq_range_ghz") config.freq_range_ghz = SweepSpec::parse(value.get<std::string>());
    else if (key == "intensity_range") config.intensity_range = SweepSpec::parse(value.get<std::string>());
    else if (key == "freq_ghz") config.freq_ghz = number(value, key);
    else if (key == "dist_m") config.dist_m = number(value, key);
    else if (key == "dist_list_m") config.dist_list_m = number_list(value, key);
    else if (key == "cn2") config.cn2 = number(value, key);
    else if (key == "cn2_list") config.cn2_list = number_list(value, key);
    else if (key == "ground_cn2") config.ground_cn2 = number(value, key);
    else if (key == "wind") config.wind = number(value, key);
    else if (key == "rytov_list") config.rytov_list = number_list(value, key);
    else if (key == "aperture_d") config.aperture_d = number(value, key);
    else if (key == "alpha") config.alpha = number(value, key);
    else if (key == "beta") config.beta = number(value, key);
    else if (key == "n") config.n = static_cast<std::uint64_t>(number(value, key));
    else if (key == "seed") config.seed = static_cast<std::uint64_t>(number(value, key));
    else if (key == "absorption_table") config.absorption_table = value.get<std::string>();
    else if (key == "scale_height_m") config.scale_height_m = number(value, key);
    else if (key == "temperature_k") config.temperature_k = number(value, key);
    else if (key == "pressure_pa") config.pressure_pa = number(value, key);
    else if (key == "vapor_pa") config.vapor_pa = number(value, key);
    else if (key == "h_tx") config.h_tx = number(value, key);
    else if (key == "h_rx") config.h_rx = number(value, key);
    else if (key == "segments") config.segments = static_cast<int>(number(value, key));
    else if (key == "dsd_n0") config.dsd_n0 = number(value, key);
    else if (key == "dsd_rho0") config.dsd_rho0 = number(value, key);
    else if (key == "dsd_m_re") config.dsd_m_re = number(value, key);
    else if (key == "dsd_m_im") config.dsd_m_im = number(value, key);
    else if (key == "dsd_rmax") config.dsd_rmax = number(value, key);
    else if (key == "out") config.out = value.get<std::string>();
    else if (key == "format") {
      const std::string fmt = value.get<std::string>();
      if (fmt == "csv") config.format = OutputFormat::csv;
      else if (fmt == "json") config.format = OutputFormat::json;
      else throw config_error("config key 'format' must be csv or json, got '" + fmt + "'");
    }
    else throw config_error("config file '" + path + "': unknown key '" + key + "'");
  }
}

namespace {

using Cell = std::variant<std::monostate, double, std::string>;

struct OutputTable {
  std::vector<std::string> headers;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::size_t, std::string>> skipped;  // (row, column)
};

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

// short tag for curve-family column names, e.g. "L1000m" or "cn2_1e-13"
std::string curve_tag(double dist_m, double cn2, bool multi_dist, bool multi_cn2) {
  char buf[64];
  std::string tag;
  if (multi_dist) {
    std::snprintf(buf, sizeof buf, "_L%gm", dist_m);
    tag += buf;
  }
  if (multi_cn2) {
    std::snprintf(buf, sizeof buf, "_cn2_%g", cn2);
    tag += buf;
  }
  return tag;
}

void require(bool condition, const std::string& message) {
  if (!condition) throw config_error(message);
}

turb::EnvironmentState environment_from(const RunConfig& config) {
  turb::EnvironmentState env;
  env.temperature_k = config.temperature_k;
  env.pressure_pa = config.pressure_pa;
  env.vapor_pressure_pa = config.vapor_pa;
  env.validate();
  return env;
}

OutputTable run_risc_profile(const RunConfig& config) {
  const turb::RiscParams params{config.ground_cn2, config.wind};
  const turb::EnvironmentState env = environment_from(config);
  const auto model = turb::RefractivityModel::standard();
  OutputTable table;
  table.headers = {"altitude_m", "cn2_vis_m_minus_2_3", "cn2_thz_m_minus_2_3"};
  for (double altitude : config.alt_range.grid()) {
    const double vis = turb::risc_visible(altitude, params);
    const double thz = turb::risc_thz(altitude, params, env, model);
    table.rows.push_back({altitude, vis, thz});
  }
  return table;
}

OutputTable run_rytov(const RunConfig& config) {
  const std::vector<double> dists =
      config.dist_list_m.empty() ? std::vector<double>{config.dist_m} : config.dist_list_m;
  const std::vector<double> cn2s =
      config.cn2_list.empty() ? std::vector<double>{config.cn2} : config.cn2_list;
  const bool single_curve = dists.size() == 1 && cn2s.size() == 1;

  OutputTable table;
  table.headers = {"freq_hz"};
  for (double cn2 : cn2s) {
    for (double dist : dists) {
      table.headers.push_back("sigma_r2" +
                              curve_tag(dist, cn2, dists.size() > 1, cn2s.size() > 1));
    }
  }
  if (single_curve) table.headers.push_back("regime");

  for (double f_ghz : config.freq_range_ghz.grid()) {
    const double f_hz = f_ghz * 1.0e9;
    std::vector<Cell> row{f_hz};
    double last_sigma = 0.0;
    for (double cn2 : cn2s) {
      for (double dist : dists) {
        last_sigma = turb::rytov_variance(cn2, f_hz, dist);
        row.push_back(last_sigma);
      }
    }
    if (single_curve) row.push_back(turb::to_string(turb::turbulence_regime(last_sigma)));
    table.rows.push_back(std::move(row));
  }
  return table;
}

OutputTable run_scint_pdf(const RunConfig& config) {
  require(!config.rytov_list.empty(), "scint-pdf: rytov_list must not be empty");
  struct Curve {
    double sigma_r2;
    scint::ScintillationParams params;
  };
  std::vector<Curve> curves;
  for (double sigma_r2 : config.rytov_list) {
    require(sigma_r2 > 0.0, "scint-pdf: rytov_list entries must be positive");
    curves.push_back({sigma_r2, scint::large_small_scale_params(sigma_r2, config.aperture_d)});
  }

  OutputTable table;
  table.headers = {"intensity_ratio"};
  for (const Curve& curve : curves) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "pdf_sigma_r2_%g", curve.sigma_r2);
    table.headers.push_back(buf);
  }
  for (double intensity : config.intensity_range.grid()) {
    std::vector<Cell> row{intensity};
    for (const Curve& curve : curves) {
      row.push_back(scint::gamma_gamma_pdf(intensity, curve.params.alpha, curve.params.beta));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

OutputTable run_scint_sample(const RunConfig& config) {
  const double alpha = config.alpha.value_or(2.95);
  const double beta = config.beta.value_or(2.97);
  require(config.n >= 1, "scint-sample: n must be >= 1");
  const auto set =
      scint::sample_scintillation(alpha, beta, static_cast<std::size_t>(config.n), config.seed);
  OutputTable table;
  table.headers = {"sample_index", "intensity_ratio"};
  for (std::size_t i = 0; i < set.samples.size(); ++i) {
    table.rows.push_back({static_cast<double>(i), set.samples[i]});
  }
  return table;
}

OutputTable run_atten(const RunConfig& config) {
  const std::vector<double> dists =
      config.dist_list_m.empty() ? std::vector<double>{config.dist_m} : config.dist_list_m;
  const std::vector<double> cn2s =
      config.cn2_list.empty() ? std::vector<double>{config.cn2} : config.cn2_list;
  const bool single_curve = dists.size() == 1 && cn2s.size() == 1;

  OutputTable table;
  table.headers = {"freq_hz"};
  if (single_curve) table.headers.push_back("sigma_r2");
  for (double cn2 : cn2s) {
    for (double dist : dists) {
      table.headers.push_back("turbulence_attenuation_db" +
                              curve_tag(dist, cn2, dists.size() > 1, cn2s.size() > 1));
    }
  }

  const auto grid = config.freq_range_ghz.grid();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double f_hz = grid[i] * 1.0e9;
    std::vector<Cell> row{f_hz};
    std::size_t column = 1;
    if (single_curve) {
      row.push_back(turb::rytov_variance(cn2s[0], f_hz, dists[0]));
      ++column;
    }
    for (double cn2 : cn2s) {
      for (double dist : dists) {
        const double sigma_r2 = turb::rytov_variance(cn2, f_hz, dist);
        const double aperture = scint::aperture_parameter(f_hz, dist);
        try {
          row.push_back(scint::turbulence_attenuation_db(sigma_r2, aperture));
        } catch (const singularity_error&) {
          row.push_back(std::monostate{});
          table.skipped.emplace_back(i, table.headers[column]);
        }
        ++column;
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

link::LinkBudget budget_from(const RunConfig& config) {
  require(!config.absorption_table.empty(),
          "budget/fading: absorption_table is required (CSV path)");
  const auto table =
      medium::AbsorptionTable::from_csv(config.absorption_table, config.scale_height_m);
  link::LinkGeometry geometry;
  geometry.tx_altitude_m = config.h_tx;
  geometry.rx_altitude_m = config.h_rx;
  geometry.path_m = config.dist_m;
  geometry.freq_hz = config.freq_ghz * 1.0e9;
  const turb::RiscParams risc{config.ground_cn2, config.wind};
  const turb::EnvironmentState env = environment_from(config);
  medium::DropSizeDistribution dsd = medium::DropSizeDistribution::make(
      config.dsd_n0, config.dsd_rho0, {config.dsd_m_re, config.dsd_m_im},
      config.dsd_rmax > 0.0 ? config.dsd_rmax : 0.0);
  return link::slant_path_budget(geometry, risc, env, turb::RefractivityModel::standard(),
                                 table, dsd, config.segments);
}

void append_budget_columns(OutputTable& table, std::vector<Cell>& row, const RunConfig& config,
                           const link::LinkBudget& budget) {
  const auto add = [&](const std::string& header, Cell cell) {
    table.headers.push_back(header);
    row.push_back(std::move(cell));
  };
  add("freq_hz", config.freq_ghz * 1.0e9);
  add("path_m", config.dist_m);
  add("tx_altitude_m", config.h_tx);
  add("rx_altitude_m", config.h_rx);
  add("segments", static_cast<double>(config.segments));
  add("fspl_db", budget.medium_loss.fspl_db);
  add("absorption_db", budget.medium_loss.absorption_db);
  add("scattering_db", budget.medium_loss.scattering_db);
  add("medium_total_db", budget.medium_loss.total_db);
  add("path_cn2_m_minus_2_3", budget.path_cn2);
  add("sigma_r2", budget.sigma_r2);
  add("aperture_d", budget.aperture_d);
  add("regime", turb::to_string(budget.regime));
  add("turbulence_db", budget.turbulence_db);
  add("total_db", budget.total_db);
}

OutputTable run_budget(const RunConfig& config) {
  const link::LinkBudget budget = budget_from(config);
  OutputTable table;
  std::vector<Cell> row;
  append_budget_columns(table, row, config, budget);
  table.rows.push_back(std::move(row));
  return table;
}

OutputTable run_fading(const RunConfig& config) {
  const link::LinkBudget budget = budget_from(config);
  double alpha, beta;
  if (config.alpha && config.beta) {
    alpha = *config.alpha;
    beta = *config.beta;
  } else {
    const auto params = scint::large_small_scale_params(budget.sigma_r2, budget.aperture_d);
    require(!params.no_turbulence(),
            "fading: path has zero turbulence; pass alpha/beta explicitly");
    alpha = config.alpha.value_or(params.alpha);
    beta = config.beta.value_or(params.beta);
  }
  const auto report = link::monte_carlo_fading(budget, alpha, beta,
                                               static_cast<std::size_t>(config.n), config.seed);

  OutputTable table;
  std::vector<Cell> row;
  append_budget_columns(table, row, config, budget);
  const auto add = [&](const std::string& header, double value) {
    table.headers.push_back(header);
    row.push_back(value);
  };
  add("alpha", alpha);
  add("beta", beta);
  add("n_samples", static_cast<double>(report.count));
  add("seed", static_cast<double>(report.seed));
  add("mean_intensity", report.mean_intensity);
  add("sigma_i2_empirical", report.intensity_variance);
  static const char* quantile_names[5] = {"q01", "q05", "q50", "q95", "q99"};
  for (int i = 0; i < 5; ++i) {
    add(std::string("intensity_") + quantile_names[i], report.intensity_quantiles[i]);
  }
  for (int i = 0; i < 5; ++i) {
    add(std::string("loss_db_") + quantile_names[i], report.loss_db_quantiles[i]);
  }
  table.rows.push_back(std::move(row));
  return table;
}

json resolved_config_json(const RunConfig& config) {
  json doc;
  doc["scenario"] = to_string(config.scenario);
  doc["alt_range"] = config.alt_range.to_text();
  doc["freq_range_ghz"] = config.freq_range_ghz.to_text();
  doc["intensity_range"] = config.intensity_range.to_text();
  doc["freq_ghz"] = config.freq_ghz;
  doc["dist_m"] = config.dist_m;
  doc["dist_list_m"] = config.dist_list_m;
  doc["cn2"] = config.cn2;
  doc["cn2_list"] = config.cn2_list;
  doc["ground_cn2"] = config.ground_cn2;
  doc["wind"] = config.wind;
  doc["rytov_list"] = config.rytov_list;
  doc["aperture_d"] = config.aperture_d;
  if (config.alpha) doc["alpha"] = *config.alpha;
  if (config.beta) doc["beta"] = *config.beta;
  doc["n"] = config.n;
  doc["seed"] = config.seed;
  doc["absorption_table"] = config.absorption_table;
  doc["scale_height_m"] = config.scale_height_m;
  doc["temperature_k"] = config.temperature_k;
  doc["pressure_pa"] = config.pressure_pa;
  doc["vapor_pa"] = config.vapor_pa;
  doc["h_tx"] = config.h_tx;
  doc["h_rx"] = config.h_rx;
  doc["segments"] = config.segments;
  doc["dsd_n0"] = config.dsd_n0;
  doc["dsd_rho0"] = config.dsd_rho0;
  doc["dsd_m_re"] = config.dsd_m_re;
  doc["dsd_m_im"] = config.dsd_m_im;
  doc["dsd_rmax"] = config.dsd_rmax;
  doc["out"] = config.out;
  doc["format"] = config.format == OutputFormat::csv ? "csv" : "json";
  return doc;
}

void write_csv(const OutputTable& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.headers.size(); ++i) {
    out << (i ? "," : "") << table.headers[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      if (std::holds_alternative<double>(row[i])) {
        out << format_double(std::get<double>(row[i]));
      } else if (std::holds_alternative<std::string>(row[i])) {
        out << std::get<std::string>(row[i]);
      }
      // monostate: singular point, left empty
    }
    out << '\n';
  }
}

void write_json(const OutputTable& table, const RunConfig& config, std::ostream& out) {
  json doc;
  json metadata;
  metadata["tool"] = kToolName;
  metadata["version"] = kToolVersion;
  metadata["scenario"] = to_string(config.scenario);
  metadata["preset"] = config.preset.empty() ? json() : json(config.preset);
  metadata["grid_note"] = config.grid_note.empty() ? json() : json(config.grid_note);
  metadata["config"] = resolved_config_json(config);
  json skipped = json::array();
  for (const auto& [row, column] : table.skipped) {
    skipped.push_back({{"row", row}, {"column", column}});
  }
  metadata["skipped_singular"] = skipped;
  doc["metadata"] = metadata;
  doc["columns"] = table.headers;
  json rows = json::array();
  for (const auto& row : table.rows) {
    json out_row = json::array();
    for (const auto& cell : row) {
      if (std::holds_alternative<double>(cell)) {
        out_row.push_back(std::get<double>(cell));
      } else if (std::holds_alternative<std::string>(cell)) {
        out_row.push_back(std::get<std::string>(cell));
      } else {
        out_row.push_back(nullptr);
      }
    }
    rows.push_back(std::move(out_row));
  }
  doc["rows"] = rows;
  out << doc.dump(2) << '\n';
}

}  // namespace

int run(const RunConfig& config) {
  require(!config.out.empty(), "output path is required (--out)");

  OutputTable table;
  switch (config.scenario) {
    case Scenario::risc_profile: table = run_risc_profile(config); break;
    case Scenario::rytov: table = run_rytov(config); break;
    case Scenario::scint_pdf: table = run_scint_pdf(config); break;
    case Scenario::scint_sample: table = run_scint_sample(config); break;
    case Scenario::atten: table = run_atten(config); break;
    case Scenario::budget: table = run_budget(config); break;
    case Scenario::fading: table = run_fading(config); break;
  }

  std::ofstream out(config.out, std::ios::binary);
  if (!out) throw config_error("cannot open output path '" + config.out + "'");
  if (config.format == OutputFormat::csv) {
    write_csv(table, out);
  } else {
    write_json(table, config, out);
  }
  out.flush();
  if (!out) throw config_error("failed writing output '" + config.out + "'");
  return 0;
}

}  // namespace cli
}  // namespace thz
