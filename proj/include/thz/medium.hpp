#ifndef THZ_MEDIUM_HPP
#define THZ_MEDIUM_HPP

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

namespace thz {
namespace medium {

// Ground-level water-vapor absorption spectrum plus an exponential altitude
// scaling with scale height H_w. Grid frequencies strictly increase;
// coefficients are log-linearly interpolated in frequency.
class AbsorptionTable {
 public:
  AbsorptionTable(std::vector<double> freq_hz, std::vector<double> k_np_per_m,
                  double scale_height_m = 2000.0);

  // CSV schema: header `freq_hz,k_np_per_m`, one pair per row.
  static AbsorptionTable from_csv(const std::string& path, double scale_height_m = 2000.0);
  static AbsorptionTable from_csv(std::istream& in, const std::string& origin,
                                  double scale_height_m = 2000.0);

  double ground_coefficient(double freq_hz) const;  // Np/m at sea level
  double scale_height_m() const { return scale_height_m_; }
  double min_freq_hz() const { return freq_hz_.front(); }
  double max_freq_hz() const { return freq_hz_.back(); }
  std::size_t size() const { return freq_hz_.size(); }

 private:
  std::vector<double> freq_hz_;
  std::vector<double> k_np_per_m_;
  double scale_height_m_;
};

// k_abs(f, h) = k_grd(f) * exp(-h / H_w), in Np/m.
double absorption_coefficient(double freq_hz, double altitude_m, const AbsorptionTable& table);

// Exponential drop-size law N(r) = N0 exp(-rho0 r) with the particle
// refractive index and the radius cutoff for the scattering integral.
struct DropSizeDistribution {
  double intercept_m4 = 0.0;                 // N0, m^-4
  double slope_per_m = 0.0;                  // rho0, m^-1
  std::complex<double> refractive_index{1.0, 0.0};
  double max_radius_m = 0.0;                 // integration cutoff

  // max_radius defaults to 10/rho0 (exponential tail mass < 5e-5).
  static DropSizeDistribution make(double intercept_m4, double slope_per_m,
                                   std::complex<double> refractive_index,
                                   double max_radius_m = 0.0);
  void validate() const;
};

// Mie extinction cross-section in m^2; series truncated at
// ceil(x + 4 x^(1/3) + 2) terms.
double mie_extinction_cross_section(double radius_m, double freq_hz,
                                    std::complex<double> refractive_index);

// Scattering coefficient in dB/km: 4.343 * integral of sigma_ext(r) N(r) dr
// per kilometer of path, adaptive quadrature at 1e-6 relative tolerance.
double scattering_coefficient(const DropSizeDistribution& dsd, double freq_hz);

struct LossBreakdown {
  double fspl_db = 0.0;
  double absorption_db = 0.0;
  double scattering_db = 0.0;
  double total_db = 0.0;
};

// Free-space + absorption + scattering over a homogeneous path.
// k_abs in Np/m, k_sca in dB/km.
LossBreakdown total_loss_homogeneous(double freq_hz, double path_m, double k_abs_np_per_m,
                                     double k_sca_db_per_km);

}  // namespace medium
}  // namespace thz

#endif  // THZ_MEDIUM_HPP
