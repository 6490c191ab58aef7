#ifndef THZ_LINK_HPP
#define THZ_LINK_HPP

#include <array>
#include <cstdint>

#include "thz/medium.hpp"
#include "thz/turbulence.hpp"

namespace thz {
namespace link {

struct LinkGeometry {
  double tx_altitude_m = 0.0;
  double rx_altitude_m = 0.0;
  double path_m = 0.0;
  double freq_hz = 0.0;

  void validate() const;
};

struct LinkBudget {
  medium::LossBreakdown medium_loss;
  double turbulence_db = 0.0;
  double path_cn2 = 0.0;       // segment-mean C_n^2, m^(-2/3)
  double sigma_r2 = 0.0;
  double aperture_d = 0.0;
  turb::Regime regime = turb::Regime::weak;
  double total_db = 0.0;       // medium total + turbulence
};

// End-to-end budget over a slant path. The path is split into `segments`
// equal sub-paths; absorption uses each segment's midpoint altitude and the
// path C_n^2 is the arithmetic mean of risc_thz over the midpoints.
LinkBudget slant_path_budget(const LinkGeometry& geometry, const turb::RiscParams& risc,
                             const turb::EnvironmentState& env,
                             const turb::RefractivityModel& model,
                             const medium::AbsorptionTable& table,
                             const medium::DropSizeDistribution& dsd, int segments = 64);

inline constexpr std::array<double, 5> kReportQuantiles = {0.01, 0.05, 0.50, 0.95, 0.99};

struct FadingReport {
  std::size_t count = 0;
  std::uint64_t seed = 0;
  double mean_intensity = 0.0;
  double intensity_variance = 0.0;  // empirical sigma_I^2
  std::array<double, 5> intensity_quantiles{};
  std::array<double, 5> loss_db_quantiles{};  // instantaneous total loss
};

// Draws `count` scintillation samples on top of the budget's mean loss and
// summarizes the fading statistics; deterministic for a fixed seed.
FadingReport monte_carlo_fading(const LinkBudget& budget, double alpha, double beta,
                                std::size_t count, std::uint64_t seed);

}  // namespace link
}  // namespace thz

#endif  // THZ_LINK_HPP
