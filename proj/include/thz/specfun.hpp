#ifndef THZ_SPECFUN_HPP
#define THZ_SPECFUN_HPP

#include <complex>
#include <cstdint>
#include <vector>

namespace thz {
namespace specfun {

// Guard on the Bessel order; forward recurrence past this overflows double
// range for any argument of interest.
inline constexpr double kMaxBesselOrder = 1.0e4;

// Gamma function for x > 0.
double gamma_fn(double x);

struct BesselKResult {
  double value = 0.0;
  bool underflow = false;  // true when e^-x drove the result to zero
};

// Modified Bessel function of the second kind, real order.
// Temme's series for x <= 2, Steed's continued fraction for x > 2, forward
// recurrence in the order. K_{-nu} = K_{nu}. Overflow saturates to +inf.
BesselKResult bessel_k_checked(double nu, double x);

// Convenience overload: returns 0 on underflow.
double bessel_k(double nu, double x);

// log(K_nu(x)), finite even where the value itself over- or underflows.
double bessel_k_log(double nu, double x);

struct MieTerm {
  int index = 0;             // series index m >= 1
  std::complex<double> a;    // electric coefficient a_m
  std::complex<double> b;    // magnetic coefficient b_m
};

// Mie series coefficients a_m, b_m for m = 1..term_count, size parameter x,
// relative refractive index m_rel (Im >= 0). The logarithmic derivative is
// run downward from index term_count + 15 + ceil(x) seeded with zero; the
// Riccati-Bessel functions of the real argument run upward.
std::vector<MieTerm> riccati_bessel(double x, std::complex<double> m_rel, int term_count);

}  // namespace specfun
}  // namespace thz

#endif  // THZ_SPECFUN_HPP
