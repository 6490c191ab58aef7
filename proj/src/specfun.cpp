#include "thz/specfun.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "thz/errors.hpp"

namespace thz {
namespace specfun {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209;
constexpr int kMaxIterations = 30000;

// Coefficients of Temme's K series for |mu| <= 1/2:
//   g1 = (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu)
//   g2 = (1/Gamma(1-mu) + 1/Gamma(1+mu)) / 2
// The direct difference quotient cancels near mu = 0, where the Taylor form
// of 1/Gamma(1+mu) takes over.
void temme_gamma_terms(double mu, double& g1, double& g2, double& inv_gamma_plus,
                       double& inv_gamma_minus) {
  inv_gamma_plus = 1.0 / std::tgamma(1.0 + mu);
  inv_gamma_minus = 1.0 / std::tgamma(1.0 - mu);
  g2 = 0.5 * (inv_gamma_minus + inv_gamma_plus);
  if (std::abs(mu) < 1.0e-4) {
    // cubic coefficient of 1/Gamma(1+x)
    constexpr double a3 = -0.04200263503409523553;
    g1 = -kEulerGamma - a3 * mu * mu;
  } else {
    g1 = (inv_gamma_minus - inv_gamma_plus) / (2.0 * mu);
  }
}

// K_mu(x) and K_{mu+1}(x) for 0 < x <= 2, |mu| <= 1/2 (Temme's series).
void bessel_k_temme(double mu, double x, double& k_mu, double& k_mu1) {
  const double eps = std::numeric_limits<double>::epsilon();
  const double mu2 = mu * mu;
  const double d = -std::log(0.5 * x);  // log(2/x)
  const double sigma = mu * d;
  const double pi_mu = M_PI * mu;
  const double fact = std::abs(pi_mu) < 1.0e-15 ? 1.0 : pi_mu / std::sin(pi_mu);
  const double sinh_ratio = std::abs(sigma) < 1.0e-15 ? 1.0 : std::sinh(sigma) / sigma;

  double g1, g2, inv_gamma_plus, inv_gamma_minus;
  temme_gamma_terms(mu, g1, g2, inv_gamma_plus, inv_gamma_minus);

  double f = fact * (g1 * std::cosh(sigma) + g2 * sinh_ratio * d);
  const double e_sigma = std::exp(sigma);        // (2/x)^mu
  double p = 0.5 * e_sigma / inv_gamma_plus;     // (1/2)(2/x)^mu Gamma(1+mu)
  double q = 0.5 / (e_sigma * inv_gamma_minus);  // (1/2)(x/2)^mu Gamma(1-mu)

  const double x2_quarter = 0.25 * x * x;
  double c = 1.0;
  double sum = f;
  double sum1 = p;
  int i = 1;
  for (; i <= kMaxIterations; ++i) {
    f = (i * f + p + q) / (i * i - mu2);
    c *= x2_quarter / i;
    p /= (i - mu);
    q /= (i + mu);
    const double del = c * f;
    sum += del;
    sum1 += c * (p - i * f);
    if (std::abs(del) < std::abs(sum) * eps) break;
  }
  k_mu = sum;
  k_mu1 = sum1 * (2.0 / x);
}

// Scaled e^x K_mu(x) and e^x K_{mu+1}(x) for x > 2, |mu| <= 1/2
// (Steed's continued fraction CF2).
void bessel_k_steed_scaled(double mu, double x, double& k_mu, double& k_mu1) {
  const double eps = std::numeric_limits<double>::epsilon();
  const double mu2 = mu * mu;
  double b = 2.0 * (1.0 + x);
  double den = 1.0 / b;
  double h = den;
  double delh = den;
  double q1 = 0.0;
  double q2 = 1.0;
  const double a1 = 0.25 - mu2;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 2; i <= kMaxIterations; ++i) {
    a -= 2 * (i - 1);
    c = -a * c / i;
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    den = 1.0 / (b + a * den);
    delh = (b * den - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < eps) break;
  }
  h = a1 * h;
  k_mu = std::sqrt(M_PI / (2.0 * x)) / s;
  k_mu1 = k_mu * (mu + x + 0.5 - h) / x;
}

struct KCore {
  double mantissa = 0.0;  // K * 2^-exp2 * e^{+x (if exp_scaled)}
  long exp2 = 0;
  bool exp_scaled = false;  // mantissa carries an e^x factor
};

KCore bessel_k_core(double nu, double x) {
  nu = std::abs(nu);  // K_{-nu} = K_{nu}
  const int n = static_cast<int>(nu + 0.5);
  const double mu = nu - n;  // |mu| <= 1/2

  KCore core;
  double k_lo, k_hi;
  if (x <= 2.0) {
    bessel_k_temme(mu, x, k_lo, k_hi);
  } else {
    bessel_k_steed_scaled(mu, x, k_lo, k_hi);
    core.exp_scaled = true;
  }

  // Forward recurrence K_{j+1} = K_{j-1} + (2 j / x) K_j, renormalized in
  // powers of two so large orders cannot overflow mid-loop.
  for (int j = 1; j < n; ++j) {
    const double k_next = k_lo + (2.0 * (mu + j) / x) * k_hi;
    k_lo = k_hi;
    k_hi = k_next;
    if (k_hi > 0x1p+900) {
      k_lo = std::ldexp(k_lo, -900);
      k_hi = std::ldexp(k_hi, -900);
      core.exp2 += 900;
    }
  }
  core.mantissa = (n == 0) ? k_lo : k_hi;
  return core;
}

void validate_bessel_args(double nu, double x) {
  if (!std::isfinite(nu) || std::abs(nu) > kMaxBesselOrder) {
    throw domain_error("bessel_k: order must be finite with |nu| <= " +
                       std::to_string(kMaxBesselOrder) + ", got " + std::to_string(nu));
  }
  if (!std::isfinite(x) || x <= 0.0) {
    throw domain_error("bessel_k: argument must be positive and finite, got " +
                       std::to_string(x));
  }
}

}  // namespace

double gamma_fn(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw domain_error("gamma_fn: argument must be positive and finite, got " +
                       std::to_string(x));
  }
  return std::tgamma(x);
}

BesselKResult bessel_k_checked(double nu, double x) {
  validate_bessel_args(nu, x);
  const KCore core = bessel_k_core(nu, x);

  BesselKResult result;
  if (!core.exp_scaled) {
    // x <= 2: K >= K_0(2) > 0.1, only overflow is possible.
    result.value = core.exp2 == 0 ? core.mantissa
                                  : std::ldexp(core.mantissa, static_cast<int>(
                                                  std::min(core.exp2, 4000L)));
    return result;
  }
  if (core.exp2 == 0) {
    result.value = core.mantissa * std::exp(-x);
  } else {
    const double log_value = std::log(core.mantissa) + core.exp2 * M_LN2 - x;
    result.value = std::exp(log_value);
  }
  if (result.value == 0.0) {
    result.underflow = true;
  }
  return result;
}

double bessel_k(double nu, double x) { return bessel_k_checked(nu, x).value; }

double bessel_k_log(double nu, double x) {
  validate_bessel_args(nu, x);
  const KCore core = bessel_k_core(nu, x);
  double log_value = std::log(core.mantissa) + core.exp2 * M_LN2;
  if (core.exp_scaled) log_value -= x;
  return log_value;
}

std::vector<MieTerm> riccati_bessel(double x, std::complex<double> m_rel, int term_count) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw domain_error("riccati_bessel: size parameter must be positive and finite");
  }
  if (!std::isfinite(m_rel.real()) || !std::isfinite(m_rel.imag()) || m_rel.imag() < 0.0) {
    throw domain_error("riccati_bessel: refractive index must be finite with Im(m) >= 0");
  }
  if (term_count < 1) {
    throw domain_error("riccati_bessel: term count must be >= 1");
  }

  const std::complex<double> mx = m_rel * x;
  const int start = term_count + 15 + static_cast<int>(std::ceil(x));

  // Logarithmic derivative D_n(mx) by downward recurrence, seeded with zero.
  std::vector<std::complex<double>> log_deriv(static_cast<std::size_t>(start) + 1);
  log_deriv[start] = {0.0, 0.0};
  for (int n = start; n >= 1; --n) {
    const std::complex<double> n_over_mx = static_cast<double>(n) / mx;
    log_deriv[n - 1] = n_over_mx - 1.0 / (log_deriv[n] + n_over_mx);
  }

  // Riccati-Bessel psi_n, chi_n of the real argument by upward recurrence.
  double psi_prev = std::cos(x);  // psi_{-1}
  double psi = std::sin(x);       // psi_0
  double chi_prev = -std::sin(x);
  double chi = std::cos(x);

  std::vector<MieTerm> terms;
  terms.reserve(static_cast<std::size_t>(term_count));
  for (int n = 1; n <= term_count; ++n) {
    const double psi_n = (2.0 * n - 1.0) / x * psi - psi_prev;
    const double chi_n = (2.0 * n - 1.0) / x * chi - chi_prev;
    const std::complex<double> xi_n(psi_n, -chi_n);
    const std::complex<double> xi_nm1(psi, -chi);

    const std::complex<double> da = log_deriv[n] / m_rel + static_cast<double>(n) / x;
    const std::complex<double> db = log_deriv[n] * m_rel + static_cast<double>(n) / x;

    MieTerm term;
    term.index = n;
    term.a = (da * psi_n - psi) / (da * xi_n - xi_nm1);
    term.b = (db * psi_n - psi) / (db * xi_n - xi_nm1);
    terms.push_back(term);

    psi_prev = psi;
    psi = psi_n;
    chi_prev = chi;
    chi = chi_n;
  }
  return terms;
}

}  // namespace specfun
}  // namespace thz
