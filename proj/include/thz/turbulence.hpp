#ifndef THZ_TURBULENCE_HPP
#define THZ_TURBULENCE_HPP

#include <functional>
#include <string>

namespace thz {
namespace turb {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

// Thermodynamic state at a point along the path.
struct EnvironmentState {
  double temperature_k = 288.15;     // T, (150, 350) K
  double pressure_pa = 101325.0;     // total pressure, > 0
  double vapor_pressure_pa = 1170.0; // water vapor partial pressure, [0, P)

  void validate() const;
};

// Hufnagel-Valley profile parameters.
struct RiscParams {
  double ground_cn2 = 1.7e-14;  // terrestrial C_n^2 "A", m^(-2/3)
  double wind_mps = 21.0;       // average wind speed v, m/s

  void validate() const;
};

// Kolmogorov scales and structure constants.
// Conventional units: C_T^2 in K^2 m^(-2/3), C_n^2 in m^(-2/3).
struct TurbulenceScales {
  double inner_scale_m = 0.005;
  double outer_scale_m = 20.0;
  double ct2 = 0.0;
  double cn2 = 0.0;

  void validate() const;
};

// Refractive-index/temperature sensitivity per band, injected so callers can
// substitute measured n(T) relations. The defaults are an Edlen-type dry term
// for the visible band and Smith-Weintraub radio refractivity for THz.
struct RefractivityModel {
  std::function<double(const EnvironmentState&)> dn_dt_visible;
  std::function<double(const EnvironmentState&)> dn_dt_thz;

  static RefractivityModel standard();
};

// Two-thirds-law structure function of temperature differences.
// Quadratic inner-scale branch below l0; power-law branch on (l0, L0).
double structure_fn_temperature(double separation_m, const TurbulenceScales& scales);

// Same shape for refractive-index differences, with C_n^2 as coefficient.
double structure_fn_refractive(double separation_m, const TurbulenceScales& scales);

// Hufnagel-Valley C_n^2 profile for the visible band, altitude in meters.
double risc_visible(double altitude_m, const RiscParams& params);

// (dn_thz/dT)^2 / (dn_vis/dT)^2 at the given environment.
double dn_dt_ratio(const EnvironmentState& env, const RefractivityModel& model);

// Visible-band profile transformed to the THz band via the sensitivity ratio.
double risc_thz(double altitude_m, const RiscParams& params, const EnvironmentState& env,
                const RefractivityModel& model);

// sigma_R^2 = 0.5 C_n^2 k^(7/6) L^(11/6), k = 2 pi f / c. Zero C_n^2 yields 0.
double rytov_variance(double cn2, double freq_hz, double path_m);

enum class Regime { weak, strong, saturated };

// weak: sigma_R^2 < 0.1; strong: 0.1 <= sigma_R^2 <= 10; saturated: > 10.
Regime turbulence_regime(double sigma_r2);

std::string to_string(Regime regime);

}  // namespace turb
}  // namespace thz

#endif  // THZ_TURBULENCE_HPP
