#ifndef THZ_CLI_HPP
#define THZ_CLI_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace thz {
namespace cli {

inline constexpr const char* kToolName = "thzturb";
inline constexpr const char* kToolVersion = "0.1.0";

enum class Scenario {
  risc_profile,
  rytov,
  scint_pdf,
  scint_sample,
  atten,
  budget,
  fading,
};

Scenario scenario_from_string(const std::string& name);
std::string to_string(Scenario scenario);

enum class OutputFormat { csv, json };

// "start:stop:points[:log|lin]"
struct SweepSpec {
  double start = 0.0;
  double stop = 0.0;
  int points = 2;
  bool log_spacing = false;

  static SweepSpec parse(const std::string& text);
  std::string to_text() const;
  std::vector<double> grid() const;
};

struct RunConfig {
  Scenario scenario = Scenario::risc_profile;

  SweepSpec alt_range{0.0, 10000.0, 201, false};
  SweepSpec freq_range_ghz{100.0, 1000.0, 91, false};
  SweepSpec intensity_range{0.001, 12.001, 6001, false};

  double freq_ghz = 300.0;
  double dist_m = 1000.0;
  std::vector<double> dist_list_m;  // multi-curve override of dist_m
  double cn2 = 1.0e-13;
  std::vector<double> cn2_list;     // multi-curve override of cn2
  double ground_cn2 = 1.7e-14;
  double wind = 21.0;
  std::vector<double> rytov_list{0.1, 1.0, 10.0};
  double aperture_d = 0.0;          // scint-pdf only; other scenarios derive D

  std::optional<double> alpha;
  std::optional<double> beta;
  std::uint64_t n = 100000;
  std::uint64_t seed = 1;

  std::string absorption_table;     // CSV path (budget/fading)
  double scale_height_m = 2000.0;
  double temperature_k = 288.15;
  double pressure_pa = 101325.0;
  double vapor_pa = 1170.0;
  double h_tx = 0.0;
  double h_rx = 0.0;
  int segments = 64;

  double dsd_n0 = 0.0;              // zero disables scattering
  double dsd_rho0 = 4100.0;
  double dsd_m_re = 2.33;
  double dsd_m_im = 1.17;
  double dsd_rmax = 0.0;            // 0 = default 10/rho0

  std::string out;
  OutputFormat format = OutputFormat::csv;
  std::string preset;
  std::string grid_note;
};

// Figure-reproduction presets: fig2, fig3a, fig3b, fig4, fig5a, fig5b.
void apply_preset(RunConfig& config, const std::string& name);

// Merges a JSON config file (keys mirror the flag names in snake case) onto
// the current values. "preset" inside the file is applied first.
void merge_config_file(RunConfig& config, const std::string& path);

// Executes the run and writes the output artifact. Throws config_error,
// ingest_error, numeric/singularity errors; returns 0 on success.
int run(const RunConfig& config);

}  // namespace cli
}  // namespace thz

#endif  // THZ_CLI_HPP
