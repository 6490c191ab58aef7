#include "thz/medium.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "thz/errors.hpp"
#include "thz/quadrature.hpp"
#include "thz/specfun.hpp"
#include "thz/turbulence.hpp"

namespace thz {
namespace medium {

namespace {

// Power Np <-> dB conversion constant as used throughout the loss formulas.
constexpr double kNpToDb = 4.343;

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

AbsorptionTable::AbsorptionTable(std::vector<double> freq_hz, std::vector<double> k_np_per_m,
                                 double scale_height_m)
    : freq_hz_(std::move(freq_hz)),
      k_np_per_m_(std::move(k_np_per_m)),
      scale_height_m_(scale_height_m) {
  if (freq_hz_.size() != k_np_per_m_.size()) {
    throw domain_error("AbsorptionTable: frequency and coefficient arrays differ in length");
  }
  if (freq_hz_.size() < 2) {
    throw domain_error("AbsorptionTable: need at least two grid points");
  }
  if (!(scale_height_m_ > 0.0) || !std::isfinite(scale_height_m_)) {
    throw domain_error("AbsorptionTable: scale height must be positive");
  }
  for (std::size_t i = 0; i < freq_hz_.size(); ++i) {
    if (!std::isfinite(freq_hz_[i]) || freq_hz_[i] <= 0.0) {
      throw domain_error("AbsorptionTable: grid frequencies must be positive");
    }
    if (!std::isfinite(k_np_per_m_[i]) || k_np_per_m_[i] < 0.0) {
      throw domain_error("AbsorptionTable: coefficients must be non-negative");
    }
    if (i > 0 && freq_hz_[i] <= freq_hz_[i - 1]) {
      throw domain_error("AbsorptionTable: grid frequencies must strictly increase");
    }
  }
}

AbsorptionTable AbsorptionTable::from_csv(const std::string& path, double scale_height_m) {
  std::ifstream in(path);
  if (!in) {
    throw ingest_error("absorption table: cannot open '" + path + "'", 0);
  }
  return from_csv(in, path, scale_height_m);
}

AbsorptionTable AbsorptionTable::from_csv(std::istream& in, const std::string& origin,
                                          double scale_height_m) {
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) {
    throw ingest_error("absorption table '" + origin + "': empty file", 1);
  }
  ++line_no;
  if (trim(line) != "freq_hz,k_np_per_m") {
    throw ingest_error("absorption table '" + origin +
                           "': expected header 'freq_hz,k_np_per_m', got '" + trim(line) + "'",
                       line_no);
  }

  std::vector<double> freq, coeff;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string row = trim(line);
    if (row.empty()) continue;
    const auto comma = row.find(',');
    if (comma == std::string::npos) {
      throw ingest_error("absorption table '" + origin + "': missing comma", line_no);
    }
    try {
      std::size_t used = 0;
      const std::string f_str = trim(row.substr(0, comma));
      const std::string k_str = trim(row.substr(comma + 1));
      const double f = std::stod(f_str, &used);
      if (used != f_str.size()) throw std::invalid_argument(f_str);
      const double k = std::stod(k_str, &used);
      if (used != k_str.size()) throw std::invalid_argument(k_str);
      freq.push_back(f);
      coeff.push_back(k);
    } catch (const std::logic_error&) {
      throw ingest_error("absorption table '" + origin + "': unparsable row '" + row + "'",
                         line_no);
    }
    if (freq.size() > 1 && freq.back() <= freq[freq.size() - 2]) {
      throw ingest_error("absorption table '" + origin +
                             "': frequency grid must strictly increase",
                         line_no);
    }
    if (coeff.back() < 0.0 || !std::isfinite(coeff.back()) || !std::isfinite(freq.back()) ||
        freq.back() <= 0.0) {
      throw ingest_error("absorption table '" + origin + "': values out of range", line_no);
    }
  }
  if (freq.size() < 2) {
    throw ingest_error("absorption table '" + origin + "': need at least two data rows",
                       line_no);
  }
  return AbsorptionTable(std::move(freq), std::move(coeff), scale_height_m);
}

double AbsorptionTable::ground_coefficient(double freq_hz) const {
  if (!std::isfinite(freq_hz) || freq_hz < freq_hz_.front() || freq_hz > freq_hz_.back()) {
    throw table_range_error("absorption table: frequency " + std::to_string(freq_hz) +
                            " Hz outside grid [" + std::to_string(freq_hz_.front()) + ", " +
                            std::to_string(freq_hz_.back()) + "] Hz");
  }
  const auto upper = std::lower_bound(freq_hz_.begin(), freq_hz_.end(), freq_hz);
  const std::size_t hi = static_cast<std::size_t>(upper - freq_hz_.begin());
  if (hi < freq_hz_.size() && freq_hz_[hi] == freq_hz) return k_np_per_m_[hi];
  const std::size_t lo = hi - 1;

  const double t = (std::log(freq_hz) - std::log(freq_hz_[lo])) /
                   (std::log(freq_hz_[hi]) - std::log(freq_hz_[lo]));
  const double k0 = k_np_per_m_[lo];
  const double k1 = k_np_per_m_[hi];
  if (k0 > 0.0 && k1 > 0.0) {
    return std::exp((1.0 - t) * std::log(k0) + t * std::log(k1));
  }
  // a zero endpoint has no logarithm; interpolate the values directly
  return (1.0 - t) * k0 + t * k1;
}

double absorption_coefficient(double freq_hz, double altitude_m, const AbsorptionTable& table) {
  if (!(altitude_m >= 0.0) || !std::isfinite(altitude_m)) {
    throw domain_error("absorption_coefficient: altitude must be non-negative");
  }
  return table.ground_coefficient(freq_hz) * std::exp(-altitude_m / table.scale_height_m());
}

DropSizeDistribution DropSizeDistribution::make(double intercept_m4, double slope_per_m,
                                                std::complex<double> refractive_index,
                                                double max_radius_m) {
  DropSizeDistribution dsd;
  dsd.intercept_m4 = intercept_m4;
  dsd.slope_per_m = slope_per_m;
  dsd.refractive_index = refractive_index;
  dsd.max_radius_m = max_radius_m > 0.0 ? max_radius_m : 10.0 / slope_per_m;
  dsd.validate();
  return dsd;
}

void DropSizeDistribution::validate() const {
  if (!(intercept_m4 >= 0.0) || !std::isfinite(intercept_m4)) {
    throw domain_error("DropSizeDistribution: N0 must be non-negative");
  }
  if (!(slope_per_m > 0.0) || !std::isfinite(slope_per_m)) {
    throw domain_error("DropSizeDistribution: rho0 must be positive");
  }
  if (!std::isfinite(refractive_index.real()) || !std::isfinite(refractive_index.imag()) ||
      refractive_index.imag() < 0.0) {
    throw domain_error("DropSizeDistribution: refractive index must be finite with Im >= 0");
  }
  if (!(max_radius_m > 0.0) || !std::isfinite(max_radius_m)) {
    throw domain_error("DropSizeDistribution: integration cutoff must be positive");
  }
}

double mie_extinction_cross_section(double radius_m, double freq_hz,
                                    std::complex<double> refractive_index) {
  if (!(radius_m > 0.0) || !std::isfinite(radius_m) || !(freq_hz > 0.0) ||
      !std::isfinite(freq_hz)) {
    throw domain_error("mie_extinction_cross_section: radius and frequency must be positive");
  }
  const double wavelength = turb::kSpeedOfLight / freq_hz;
  const double wave_number = 2.0 * M_PI / wavelength;
  const double size_parameter = 2.0 * M_PI * radius_m / wavelength;
  const int term_count =
      static_cast<int>(std::ceil(size_parameter + 4.0 * std::cbrt(size_parameter) + 2.0));

  const auto terms = specfun::riccati_bessel(size_parameter, refractive_index, term_count);
  double sum = 0.0;
  for (const auto& term : terms) {
    sum += (2.0 * term.index + 1.0) * (term.a.real() + term.b.real());
  }
  return 2.0 * M_PI / (wave_number * wave_number) * sum;
}

double scattering_coefficient(const DropSizeDistribution& dsd, double freq_hz) {
  dsd.validate();
  if (!(freq_hz > 0.0) || !std::isfinite(freq_hz)) {
    throw domain_error("scattering_coefficient: frequency must be positive");
  }
  if (dsd.intercept_m4 == 0.0) return 0.0;

  const auto integrand = [&](double radius_m) {
    return mie_extinction_cross_section(radius_m, freq_hz, dsd.refractive_index) *
           dsd.intercept_m4 * std::exp(-dsd.slope_per_m * radius_m);
  };
  // integrand -> 0 as r -> 0 (sigma_ext ~ r^2); skip r = 0 itself
  const double lo = dsd.max_radius_m * 1.0e-9;
  const auto quad = detail::integrate_adaptive(integrand, lo, dsd.max_radius_m, 1.0e-6);
  return kNpToDb * 1000.0 * quad.value;  // Np/m integral reported per km
}

LossBreakdown total_loss_homogeneous(double freq_hz, double path_m, double k_abs_np_per_m,
                                     double k_sca_db_per_km) {
  if (!(freq_hz > 0.0) || !(path_m > 0.0)) {
    throw domain_error("total_loss_homogeneous: frequency and path length must be positive");
  }
  if (!(k_abs_np_per_m >= 0.0) || !(k_sca_db_per_km >= 0.0)) {
    throw domain_error("total_loss_homogeneous: loss coefficients must be non-negative");
  }
  const double spreading = 4.0 * M_PI * freq_hz * path_m / turb::kSpeedOfLight;
  if (spreading < 1.0) {
    throw domain_error("total_loss_homogeneous: path shorter than lambda/(4 pi) is outside "
                       "the far-field model");
  }
  LossBreakdown loss;
  loss.fspl_db = 20.0 * std::log10(spreading);
  loss.absorption_db = kNpToDb * k_abs_np_per_m * path_m;
  loss.scattering_db = k_sca_db_per_km * (path_m / 1000.0);
  loss.total_db = loss.fspl_db + loss.absorption_db + loss.scattering_db;
  return loss;
}

}  // namespace medium
}  // namespace thz
