#include "thz/link.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "thz/errors.hpp"
#include "thz/scintillation.hpp"

namespace thz {
namespace link {

void LinkGeometry::validate() const {
  if (!(tx_altitude_m >= 0.0) || !(rx_altitude_m >= 0.0)) {
    throw domain_error("LinkGeometry: altitudes must be non-negative");
  }
  if (!(path_m > 0.0) || !std::isfinite(path_m)) {
    throw domain_error("LinkGeometry: path length must be positive");
  }
  if (path_m < std::abs(tx_altitude_m - rx_altitude_m)) {
    throw domain_error("LinkGeometry: path length shorter than the altitude difference");
  }
  if (!(freq_hz > 0.0) || !std::isfinite(freq_hz)) {
    throw domain_error("LinkGeometry: carrier frequency must be positive");
  }
}

LinkBudget slant_path_budget(const LinkGeometry& geometry, const turb::RiscParams& risc,
                             const turb::EnvironmentState& env,
                             const turb::RefractivityModel& model,
                             const medium::AbsorptionTable& table,
                             const medium::DropSizeDistribution& dsd, int segments) {
  geometry.validate();
  if (segments < 1) {
    throw domain_error("slant_path_budget: segment count must be >= 1");
  }

  const double segment_len = geometry.path_m / segments;
  const double climb = geometry.rx_altitude_m - geometry.tx_altitude_m;
  double absorption_np = 0.0;
  double cn2_sum = 0.0;
  for (int i = 0; i < segments; ++i) {
    const double midpoint_alt =
        geometry.tx_altitude_m + climb * ((i + 0.5) / static_cast<double>(segments));
    absorption_np +=
        medium::absorption_coefficient(geometry.freq_hz, midpoint_alt, table) * segment_len;
    cn2_sum += turb::risc_thz(midpoint_alt, risc, env, model);
  }

  LinkBudget budget;
  budget.path_cn2 = cn2_sum / segments;
  budget.sigma_r2 = turb::rytov_variance(budget.path_cn2, geometry.freq_hz, geometry.path_m);
  budget.aperture_d = scint::aperture_parameter(geometry.freq_hz, geometry.path_m);
  budget.regime = turb::turbulence_regime(budget.sigma_r2);

  const double k_sca = medium::scattering_coefficient(dsd, geometry.freq_hz);
  // free-space and scattering parts from the homogeneous formula, absorption
  // replaced by the per-segment sum
  medium::LossBreakdown loss =
      medium::total_loss_homogeneous(geometry.freq_hz, geometry.path_m, 0.0, k_sca);
  loss.absorption_db = 4.343 * absorption_np;
  loss.total_db = loss.fspl_db + loss.absorption_db + loss.scattering_db;
  budget.medium_loss = loss;

  try {
    budget.turbulence_db = scint::turbulence_attenuation_db(budget.sigma_r2, budget.aperture_d);
  } catch (const singularity_error& err) {
    throw singularity_error(std::string(err.what()) + " [slant path: mean C_n^2 = " +
                                std::to_string(budget.path_cn2) + " m^(-2/3) over " +
                                std::to_string(segments) + " segments]",
                            err.offending_input());
  }
  budget.total_db = budget.medium_loss.total_db + budget.turbulence_db;
  return budget;
}

namespace {

double quantile_sorted(const std::vector<double>& sorted, double p) {
  const double pos = p * (sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  if (lo + 1 >= sorted.size()) return sorted.back();
  const double frac = pos - lo;
  return sorted[lo] * (1.0 - frac) + sorted[lo + 1] * frac;
}

}  // namespace

FadingReport monte_carlo_fading(const LinkBudget& budget, double alpha, double beta,
                                std::size_t count, std::uint64_t seed) {
  if (count < 100) {
    throw domain_error("monte_carlo_fading: need at least 100 samples");
  }
  const scint::ScintillationSampleSet set =
      scint::sample_scintillation(alpha, beta, count, seed);

  double sum = 0.0;
  for (double sample : set.samples) sum += sample;
  const double mean = sum / count;
  double sq_sum = 0.0;
  for (double sample : set.samples) {
    const double delta = sample - mean;
    sq_sum += delta * delta;
  }

  FadingReport report;
  report.count = count;
  report.seed = seed;
  report.mean_intensity = mean;
  report.intensity_variance = sq_sum / (count - 1);

  std::vector<double> sorted = set.samples;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < kReportQuantiles.size(); ++i) {
    report.intensity_quantiles[i] = quantile_sorted(sorted, kReportQuantiles[i]);
    // loss decreases in I, so its p-quantile maps to the (1-p) intensity quantile
    report.loss_db_quantiles[i] =
        budget.total_db - 10.0 * std::log10(quantile_sorted(sorted, 1.0 - kReportQuantiles[i]));
  }
  return report;
}

}  // namespace link
}  // namespace thz
