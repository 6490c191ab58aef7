// Command-line front end: sweeps and link-budget runs emitted as CSV/JSON.

#include <cstdio>
#include <exception>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "thz/cli.hpp"
#include "thz/errors.hpp"

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitIngestError = 3;
constexpr int kExitNumericError = 4;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"THz UAV turbulence channel toolkit"};
  app.set_version_flag("--version", std::string(thz::cli::kToolVersion));

  std::string scenario_arg, config_path, preset, alt_range, freq_range, intensity_range;
  std::string rytov_list, dist_list, cn2_list, absorption_table, out_path, format;
  std::optional<double> freq_ghz, dist_m, cn2, ground_cn2, wind, aperture_d, alpha, beta;
  std::optional<double> scale_height, temperature_k, pressure_pa, vapor_pa, h_tx, h_rx;
  std::optional<double> dsd_n0, dsd_rho0, dsd_m_re, dsd_m_im, dsd_rmax;
  std::optional<std::uint64_t> n, seed;
  std::optional<int> segments;

  app.add_option("scenario", scenario_arg,
                 "risc-profile|rytov|scint-pdf|scint-sample|atten|budget|fading");
  app.add_option("--config", config_path, "JSON config file (keys mirror flag names)");
  app.add_option("--preset", preset, "figure preset: fig2|fig3a|fig3b|fig4|fig5a|fig5b");
  app.add_option("--freq-ghz", freq_ghz, "carrier frequency in GHz");
  app.add_option("--dist-m", dist_m, "path length in m");
  app.add_option("--dist-list-m", dist_list, "comma-separated path lengths in m");
  app.add_option("--cn2", cn2, "C_n^2 in m^(-2/3)");
  app.add_option("--cn2-list", cn2_list, "comma-separated C_n^2 values");
  app.add_option("--ground-cn2", ground_cn2, "terrestrial C_n^2 'A' in m^(-2/3)");
  app.add_option("--wind", wind, "average wind speed in m/s");
  app.add_option("--alt-range", alt_range, "altitude sweep start:stop:points[:log|lin]");
  app.add_option("--freq-range-ghz", freq_range, "frequency sweep start:stop:points[:log|lin]");
  app.add_option("--intensity-range", intensity_range,
                 "intensity-ratio grid start:stop:points[:log|lin]");
  app.add_option("--rytov-list", rytov_list, "comma-separated sigma_R^2 values (scint-pdf)");
  app.add_option("--aperture-d", aperture_d, "aperture parameter D (scint-pdf)");
  app.add_option("--alpha", alpha, "Gamma-Gamma large-scale shape");
  app.add_option("--beta", beta, "Gamma-Gamma small-scale shape");
  app.add_option("--n", n, "sample count");
  app.add_option("--seed", seed, "RNG seed");
  app.add_option("--absorption-table", absorption_table, "absorption CSV (freq_hz,k_np_per_m)");
  app.add_option("--scale-height-m", scale_height, "water-vapor scale height H_w in m");
  app.add_option("--temperature-k", temperature_k, "temperature in K");
  app.add_option("--pressure-pa", pressure_pa, "total pressure in Pa");
  app.add_option("--vapor-pa", vapor_pa, "water-vapor partial pressure in Pa");
  app.add_option("--h-tx", h_tx, "transmitter altitude in m");
  app.add_option("--h-rx", h_rx, "receiver altitude in m");
  app.add_option("--segments", segments, "slant-path segment count");
  app.add_option("--dsd-n0", dsd_n0, "drop-size intercept N0 in m^-4");
  app.add_option("--dsd-rho0", dsd_rho0, "drop-size slope rho0 in m^-1");
  app.add_option("--dsd-m-re", dsd_m_re, "particle refractive index, real part");
  app.add_option("--dsd-m-im", dsd_m_im, "particle refractive index, imaginary part");
  app.add_option("--dsd-rmax", dsd_rmax, "drop radius integration cutoff in m");
  app.add_option("--out", out_path, "output file path");
  app.add_option("--format", format, "csv|json");

  CLI11_PARSE(app, argc, argv);

  try {
    thz::cli::RunConfig config;
    // precedence: defaults < config file (its preset first) < --preset < flags
    if (!config_path.empty()) thz::cli::merge_config_file(config, config_path);
    if (!preset.empty()) thz::cli::apply_preset(config, preset);

    if (!scenario_arg.empty()) config.scenario = thz::cli::scenario_from_string(scenario_arg);
    if (!alt_range.empty()) config.alt_range = thz::cli::SweepSpec::parse(alt_range);
    if (!freq_range.empty()) config.freq_range_ghz = thz::cli::SweepSpec::parse(freq_range);
    if (!intensity_range.empty()) {
      config.intensity_range = thz::cli::SweepSpec::parse(intensity_range);
    }
    if (freq_ghz) config.freq_ghz = *freq_ghz;
    if (dist_m) config.dist_m = *dist_m;
    if (cn2) config.cn2 = *cn2;
    if (ground_cn2) config.ground_cn2 = *ground_cn2;
    if (wind) config.wind = *wind;
    if (aperture_d) config.aperture_d = *aperture_d;
    if (alpha) config.alpha = *alpha;
    if (beta) config.beta = *beta;
    if (n) config.n = *n;
    if (seed) config.seed = *seed;
    if (!absorption_table.empty()) config.absorption_table = absorption_table;
    if (scale_height) config.scale_height_m = *scale_height;
    if (temperature_k) config.temperature_k = *temperature_k;
    if (pressure_pa) config.pressure_pa = *pressure_pa;
    if (vapor_pa) config.vapor_pa = *vapor_pa;
    if (h_tx) config.h_tx = *h_tx;
    if (h_rx) config.h_rx = *h_rx;
    if (segments) config.segments = *segments;
    if (dsd_n0) config.dsd_n0 = *dsd_n0;
    if (dsd_rho0) config.dsd_rho0 = *dsd_rho0;
    if (dsd_m_re) config.dsd_m_re = *dsd_m_re;
    if (dsd_m_im) config.dsd_m_im = *dsd_m_im;
    if (dsd_rmax) config.dsd_rmax = *dsd_rmax;
    if (!out_path.empty()) config.out = out_path;
    if (!format.empty()) {
      if (format == "csv") config.format = thz::cli::OutputFormat::csv;
      else if (format == "json") config.format = thz::cli::OutputFormat::json;
      else throw thz::config_error("--format must be csv or json, got '" + format + "'");
    }

    // comma lists need SweepSpec-free parsing here so flags can override presets
    auto parse_list = [](const std::string& text, const char* flag) {
      std::vector<double> values;
      std::size_t begin = 0;
      while (begin <= text.size()) {
        const std::size_t end = text.find(',', begin);
        const std::string piece =
            text.substr(begin, end == std::string::npos ? std::string::npos : end - begin);
        try {
          values.push_back(std::stod(piece));
        } catch (const std::logic_error&) {
          throw thz::config_error(std::string(flag) + ": unparsable number '" + piece + "'");
        }
        if (end == std::string::npos) break;
        begin = end + 1;
      }
      return values;
    };
    if (!rytov_list.empty()) config.rytov_list = parse_list(rytov_list, "--rytov-list");
    if (!dist_list.empty()) config.dist_list_m = parse_list(dist_list, "--dist-list-m");
    if (!cn2_list.empty()) config.cn2_list = parse_list(cn2_list, "--cn2-list");

    return thz::cli::run(config);
  } catch (const thz::config_error& err) {
    std::fprintf(stderr, "config error: %s\n", err.what());
    return kExitConfigError;
  } catch (const thz::ingest_error& err) {
    std::fprintf(stderr, "data ingestion error: %s\n", err.what());
    return kExitIngestError;
  } catch (const thz::singularity_error& err) {
    std::fprintf(stderr, "singularity: %s\n", err.what());
    return kExitNumericError;
  } catch (const thz::numeric_error& err) {
    std::fprintf(stderr, "numeric error: %s\n", err.what());
    return kExitNumericError;
  } catch (const thz::table_range_error& err) {
    std::fprintf(stderr, "numeric error: %s\n", err.what());
    return kExitNumericError;
  } catch (const thz::domain_error& err) {
    std::fprintf(stderr, "numeric error: %s\n", err.what());
    return kExitNumericError;
  } catch (const std::exception& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return 1;
  }
}
