#ifndef THZ_SCINTILLATION_HPP
#define THZ_SCINTILLATION_HPP

#include <cstdint>
#include <random>
#include <variant>
#include <vector>

namespace thz {
namespace scint {

// Rytov variance, receiver-aperture parameter and the Gamma-Gamma shape pair
// derived from them. alpha/beta are +inf when sigma_r2 == 0 (no turbulence).
struct ScintillationParams {
  double sigma_r2 = 0.0;
  double aperture_d = 0.0;
  double alpha = 0.0;  // effective number of large-scale cells
  double beta = 0.0;   // effective number of small-scale cells

  bool no_turbulence() const;
};

// D = sqrt(k l_ra^2 / (4 L)) with l_ra = lambda / pi, i.e. sqrt(lambda / (2 pi L)).
double aperture_parameter(double freq_hz, double path_m);

// Andrews' large/small-scale cell counts from (sigma_R^2, D).
ScintillationParams large_small_scale_params(double sigma_r2, double aperture_d);

// Gamma-Gamma density of the unit-mean intensity ratio I.
double gamma_gamma_pdf(double intensity, double alpha, double beta);

struct LogNormal {
  double sigma_i2 = 0.0;  // log-intensity variance parameter
};
struct KDistribution {
  double alpha = 0.0;
};
struct Exponential {
  double mean = 0.0;
};
using LimitingDistribution = std::variant<LogNormal, KDistribution, Exponential>;

// Density of one of the limiting laws (weak / strong / saturated).
double limiting_pdf(const LimitingDistribution& dist, double intensity);

// sigma_I^2 = 1/alpha + 1/beta + 1/(alpha beta).
double scintillation_index(double alpha, double beta);

// Attenuation magnitude -10 log10 |1 - sqrt(sigma_I^2)| in dB, with
// (alpha, beta) from large_small_scale_params. Throws singularity_error at
// the sigma_I^2 = 1 pole. sigma_r2 == 0 gives 0 dB.
double turbulence_attenuation_db(double sigma_r2, double aperture_d);

// Same quantity from the single expanded closed form (no intermediate
// alpha/beta); kept as an algebraic cross-check of the composed path.
double turbulence_attenuation_db_expanded(double sigma_r2, double aperture_d);

// Draws I = Ia * Ib with unit-mean Gamma factors of shapes alpha and beta.
// Exact rejection sampling; the stream is a pure function of
// (seed, stream_index). One owner per instance; use distinct stream indices
// for parallel substreams.
class ScintillationSampler {
 public:
  ScintillationSampler(double alpha, double beta, std::uint64_t seed,
                       std::uint64_t stream_index = 0);

  double next();

 private:
  double next_uniform();
  double next_normal();
  double next_gamma(double shape);

  std::mt19937_64 engine_;
  double alpha_;
  double beta_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

struct ScintillationSampleSet {
  std::vector<double> samples;
  std::uint64_t seed = 0;
  double alpha = 0.0;
  double beta = 0.0;
};

ScintillationSampleSet sample_scintillation(double alpha, double beta, std::size_t count,
                                            std::uint64_t seed);

}  // namespace scint
}  // namespace thz

#endif  // THZ_SCINTILLATION_HPP
