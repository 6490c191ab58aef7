#include "thz/scintillation.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "thz/errors.hpp"
#include "thz/specfun.hpp"
#include "thz/turbulence.hpp"

namespace thz {
namespace scint {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate_sigma_d(double sigma_r2, double aperture_d, const char* name) {
  if (!(sigma_r2 >= 0.0) || !std::isfinite(sigma_r2)) {
    throw domain_error(std::string(name) + ": sigma_R^2 must be non-negative");
  }
  if (!(aperture_d >= 0.0) || !std::isfinite(aperture_d)) {
    throw domain_error(std::string(name) + ": aperture parameter must be non-negative");
  }
}

// Exponents of Andrews' formulas; sigma_R^{12/5} evaluated as (sigma_R^2)^{6/5}.
void andrews_exponents(double sigma_r2, double aperture_d, double& exp_alpha,
                       double& exp_beta) {
  const double d2 = aperture_d * aperture_d;
  const double s125 = std::pow(sigma_r2, 6.0 / 5.0);
  exp_alpha = 0.49 * sigma_r2 / std::pow(1.0 + 0.18 * d2 + 0.56 * s125, 7.0 / 6.0);
  exp_beta = 0.51 * sigma_r2 * std::pow(1.0 + 0.69 * d2 * s125, -5.0 / 6.0) /
             std::pow(1.0 + 0.9 * d2 + 0.62 * s125, 7.0 / 6.0);
}

void validate_shapes(double alpha, double beta, const char* name) {
  if (!(alpha > 0.0) || std::isnan(alpha) || !(beta > 0.0) || std::isnan(beta)) {
    throw domain_error(std::string(name) + ": shape parameters must be positive");
  }
}

double attenuation_from_index(double sigma_i2, double sigma_r2) {
  const double gap = std::abs(1.0 - std::sqrt(sigma_i2));
  if (gap < 1.0e-12) {
    throw singularity_error(
        "turbulence attenuation pole: sigma_I^2 = 1 at sigma_R^2 = " + std::to_string(sigma_r2),
        sigma_r2);
  }
  return -10.0 * std::log10(gap);
}

}  // namespace

bool ScintillationParams::no_turbulence() const { return std::isinf(alpha); }

double aperture_parameter(double freq_hz, double path_m) {
  if (!(freq_hz > 0.0) || !(path_m > 0.0)) {
    throw domain_error("aperture_parameter: frequency and path length must be positive");
  }
  const double wavelength = turb::kSpeedOfLight / freq_hz;
  const double wave_number = 2.0 * M_PI / wavelength;
  const double aperture_diameter = wavelength / M_PI;  // from A_eff = lambda^2 / 4 pi
  return std::sqrt(wave_number * aperture_diameter * aperture_diameter / (4.0 * path_m));
}

ScintillationParams large_small_scale_params(double sigma_r2, double aperture_d) {
  validate_sigma_d(sigma_r2, aperture_d, "large_small_scale_params");
  ScintillationParams params;
  params.sigma_r2 = sigma_r2;
  params.aperture_d = aperture_d;
  if (sigma_r2 == 0.0) {
    params.alpha = kInf;
    params.beta = kInf;
    return params;
  }
  double exp_alpha, exp_beta;
  andrews_exponents(sigma_r2, aperture_d, exp_alpha, exp_beta);
  params.alpha = 1.0 / std::expm1(exp_alpha);
  params.beta = 1.0 / std::expm1(exp_beta);
  return params;
}

double gamma_gamma_pdf(double intensity, double alpha, double beta) {
  validate_shapes(alpha, beta, "gamma_gamma_pdf");
  if (!(intensity > 0.0) || !std::isfinite(intensity)) {
    throw domain_error("gamma_gamma_pdf: intensity must be positive, got " +
                       std::to_string(intensity));
  }
  // Worked in log space: the normalization constant overflows double for
  // large shape parameters long before the density itself does.
  const double half_sum = 0.5 * (alpha + beta);
  const double log_density = M_LN2 + half_sum * std::log(alpha * beta) - std::lgamma(alpha) -
                             std::lgamma(beta) + (half_sum - 1.0) * std::log(intensity) +
                             specfun::bessel_k_log(alpha - beta,
                                                   2.0 * std::sqrt(alpha * beta * intensity));
  return std::exp(log_density);
}

double limiting_pdf(const LimitingDistribution& dist, double intensity) {
  if (!(intensity > 0.0) || !std::isfinite(intensity)) {
    throw domain_error("limiting_pdf: intensity must be positive");
  }
  if (const auto* log_normal = std::get_if<LogNormal>(&dist)) {
    const double s2 = log_normal->sigma_i2;
    if (!(s2 > 0.0)) throw domain_error("limiting_pdf: log-normal sigma_I^2 must be positive");
    const double log_i = std::log(intensity);
    return std::exp(-log_i * log_i / (2.0 * s2)) / (std::sqrt(2.0 * M_PI * s2) * intensity);
  }
  if (const auto* k_dist = std::get_if<KDistribution>(&dist)) {
    const double alpha = k_dist->alpha;
    if (!(alpha > 0.0)) throw domain_error("limiting_pdf: K-distribution alpha must be positive");
    const double log_density =
        M_LN2 + std::log(alpha) - std::lgamma(alpha) +
        0.5 * (alpha - 1.0) * std::log(alpha * intensity) +
        specfun::bessel_k_log(alpha - 1.0, 2.0 * std::sqrt(alpha * intensity));
    return std::exp(log_density);
  }
  const auto& exponential = std::get<Exponential>(dist);
  if (!(exponential.mean > 0.0)) {
    throw domain_error("limiting_pdf: exponential mean must be positive");
  }
  return std::exp(-intensity / exponential.mean) / exponential.mean;
}

double scintillation_index(double alpha, double beta) {
  validate_shapes(alpha, beta, "scintillation_index");
  return 1.0 / alpha + 1.0 / beta + 1.0 / (alpha * beta);
}

double turbulence_attenuation_db(double sigma_r2, double aperture_d) {
  const ScintillationParams params = large_small_scale_params(sigma_r2, aperture_d);
  if (params.no_turbulence()) return 0.0;
  return attenuation_from_index(scintillation_index(params.alpha, params.beta), sigma_r2);
}

double turbulence_attenuation_db_expanded(double sigma_r2, double aperture_d) {
  validate_sigma_d(sigma_r2, aperture_d, "turbulence_attenuation_db_expanded");
  if (sigma_r2 == 0.0) return 0.0;
  double exp_alpha, exp_beta;
  andrews_exponents(sigma_r2, aperture_d, exp_alpha, exp_beta);
  const double ea = std::expm1(exp_alpha);
  const double eb = std::expm1(exp_beta);
  const double sigma_i2 = ea + eb + ea * eb;
  return attenuation_from_index(sigma_i2, sigma_r2);
}

namespace {

std::uint64_t splitmix64(std::uint64_t state) {
  std::uint64_t z = state + 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

ScintillationSampler::ScintillationSampler(double alpha, double beta, std::uint64_t seed,
                                           std::uint64_t stream_index)
    : engine_(splitmix64(seed + 0x9E3779B97F4A7C15ULL * stream_index)),
      alpha_(alpha),
      beta_(beta) {
  validate_shapes(alpha, beta, "ScintillationSampler");
  if (!std::isfinite(alpha) || !std::isfinite(beta)) {
    throw domain_error("ScintillationSampler: shape parameters must be finite");
  }
}

double ScintillationSampler::next_uniform() {
  // 53-bit mantissa, offset half a step: strictly inside (0, 1).
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double ScintillationSampler::next_normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  const double u1 = next_uniform();
  const double u2 = next_uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * M_PI * u2;
  cached_normal_ = radius * std::sin(angle);
  has_cached_normal_ = true;
  return radius * std::cos(angle);
}

// Marsaglia-Tsang rejection sampler; exact for all shapes. Shapes below one
// use the boost Gamma(a) = Gamma(a+1) U^{1/a}.
double ScintillationSampler::next_gamma(double shape) {
  if (shape < 1.0) {
    const double boost = std::pow(next_uniform(), 1.0 / shape);
    return next_gamma(shape + 1.0) * boost;
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = next_normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = next_uniform();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double ScintillationSampler::next() {
  const double large_scale = next_gamma(alpha_) / alpha_;
  const double small_scale = next_gamma(beta_) / beta_;
  return large_scale * small_scale;
}

ScintillationSampleSet sample_scintillation(double alpha, double beta, std::size_t count,
                                            std::uint64_t seed) {
  if (count < 1) {
    throw domain_error("sample_scintillation: sample count must be >= 1");
  }
  ScintillationSampler sampler(alpha, beta, seed);
  ScintillationSampleSet set;
  set.seed = seed;
  set.alpha = alpha;
  set.beta = beta;
  set.samples.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    set.samples[i] = sampler.next();
  }
  return set;
}

}  // namespace scint
}  // namespace thz
