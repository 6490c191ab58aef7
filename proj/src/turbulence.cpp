#include "thz/turbulence.hpp"

#include <cmath>
#include <string>

#include "thz/errors.hpp"

namespace thz {
namespace turb {

void EnvironmentState::validate() const {
  if (!(temperature_k > 150.0 && temperature_k < 350.0)) {
    throw domain_error("EnvironmentState: temperature must lie in (150, 350) K, got " +
                       std::to_string(temperature_k));
  }
  if (!(pressure_pa > 0.0) || !std::isfinite(pressure_pa)) {
    throw domain_error("EnvironmentState: pressure must be positive");
  }
  if (!(vapor_pressure_pa >= 0.0 && vapor_pressure_pa < pressure_pa)) {
    throw domain_error("EnvironmentState: vapor pressure must lie in [0, P)");
  }
}

void RiscParams::validate() const {
  if (!(ground_cn2 > 0.0) || !std::isfinite(ground_cn2)) {
    throw domain_error("RiscParams: terrestrial C_n^2 must be positive");
  }
  if (!(wind_mps >= 0.0) || !std::isfinite(wind_mps)) {
    throw domain_error("RiscParams: wind speed must be non-negative");
  }
}

void TurbulenceScales::validate() const {
  if (!(inner_scale_m > 0.0 && inner_scale_m < outer_scale_m)) {
    throw domain_error("TurbulenceScales: require 0 < l0 < L0");
  }
  if (!(ct2 >= 0.0) || !(cn2 >= 0.0)) {
    throw domain_error("TurbulenceScales: structure constants must be non-negative");
  }
}

RefractivityModel RefractivityModel::standard() {
  RefractivityModel model;
  // n - 1 = 77.6e-6 P_hPa / T
  model.dn_dt_visible = [](const EnvironmentState& env) {
    const double p_hpa = env.pressure_pa / 100.0;
    return -77.6e-6 * p_hpa / (env.temperature_k * env.temperature_k);
  };
  // n - 1 = 77.6e-6 / T (P_hPa + 4810 e_hPa / T)
  model.dn_dt_thz = [](const EnvironmentState& env) {
    const double t = env.temperature_k;
    const double p_hpa = env.pressure_pa / 100.0;
    const double e_hpa = env.vapor_pressure_pa / 100.0;
    return -77.6e-6 * (p_hpa / (t * t) + 2.0 * 4810.0 * e_hpa / (t * t * t));
  };
  return model;
}

namespace {

double structure_fn(double separation_m, double coefficient, const TurbulenceScales& scales,
                    const char* name) {
  scales.validate();
  if (!(separation_m > 0.0) || !std::isfinite(separation_m)) {
    throw domain_error(std::string(name) + ": separation must be positive");
  }
  if (separation_m >= scales.outer_scale_m) {
    throw validity_error(std::string(name) + ": separation " + std::to_string(separation_m) +
                         " m is not below the outer scale L0 = " +
                         std::to_string(scales.outer_scale_m) + " m");
  }
  if (separation_m <= scales.inner_scale_m) {
    return coefficient * std::pow(scales.inner_scale_m, -4.0 / 3.0) * separation_m *
           separation_m;
  }
  return coefficient * std::pow(separation_m, 2.0 / 3.0);
}

}  // namespace

double structure_fn_temperature(double separation_m, const TurbulenceScales& scales) {
  return structure_fn(separation_m, scales.ct2, scales, "structure_fn_temperature");
}

double structure_fn_refractive(double separation_m, const TurbulenceScales& scales) {
  return structure_fn(separation_m, scales.cn2, scales, "structure_fn_refractive");
}

double risc_visible(double altitude_m, const RiscParams& params) {
  params.validate();
  if (!(altitude_m >= 0.0) || !std::isfinite(altitude_m)) {
    throw domain_error("risc_visible: altitude must be non-negative");
  }
  const double wind_term = 0.00594 * std::pow(params.wind_mps / 27.0, 2.0) *
                           std::pow(1.0e-5 * altitude_m, 10.0) * std::exp(-altitude_m / 1000.0);
  const double mid_term = 2.7e-16 * std::exp(-altitude_m / 1500.0);
  const double ground_term = params.ground_cn2 * std::exp(-altitude_m / 100.0);
  return wind_term + mid_term + ground_term;
}

double dn_dt_ratio(const EnvironmentState& env, const RefractivityModel& model) {
  env.validate();
  const double vis = model.dn_dt_visible(env);
  const double thz = model.dn_dt_thz(env);
  if (vis == 0.0 || !std::isfinite(vis)) {
    throw singularity_error("dn_dt_ratio: visible-band dn/dT vanishes at this environment",
                            vis);
  }
  const double ratio = (thz / vis) * (thz / vis);
  return ratio;
}

double risc_thz(double altitude_m, const RiscParams& params, const EnvironmentState& env,
                const RefractivityModel& model) {
  return risc_visible(altitude_m, params) * dn_dt_ratio(env, model);
}

double rytov_variance(double cn2, double freq_hz, double path_m) {
  if (!(cn2 >= 0.0) || !std::isfinite(cn2)) {
    throw domain_error("rytov_variance: C_n^2 must be non-negative");
  }
  if (!(freq_hz > 0.0) || !(path_m > 0.0)) {
    throw domain_error("rytov_variance: frequency and path length must be positive");
  }
  if (cn2 == 0.0) return 0.0;
  const double wave_number = 2.0 * M_PI * freq_hz / kSpeedOfLight;
  return 0.5 * cn2 * std::pow(wave_number, 7.0 / 6.0) * std::pow(path_m, 11.0 / 6.0);
}

Regime turbulence_regime(double sigma_r2) {
  if (!(sigma_r2 >= 0.0)) {
    throw domain_error("turbulence_regime: sigma_R^2 must be non-negative");
  }
  if (sigma_r2 < 0.1) return Regime::weak;
  if (sigma_r2 <= 10.0) return Regime::strong;
  return Regime::saturated;
}

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::weak: return "weak";
    case Regime::strong: return "strong";
    case Regime::saturated: return "saturated";
  }
  return "unknown";
}

}  // namespace turb
}  // namespace thz
