#ifndef THZ_QUADRATURE_HPP
#define THZ_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "thz/errors.hpp"

namespace thz {
namespace detail {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

// Adaptive Gauss-Kronrod 7/15 on [a, b]. Throws numeric_error with the
// achieved tolerance when the interval budget runs out first.
template <typename F>
QuadratureResult integrate_adaptive(F&& f, double a, double b, double rel_tol = 1.0e-6,
                                    double abs_tol = 0.0, std::size_t max_intervals = 2000) {
  // 15-point Kronrod nodes on [0, 1] side (symmetric) with the embedded
  // 7-point Gauss rule on the odd-index nodes.
  static constexpr double xgk[8] = {
      0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
      0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
      0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
      0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
  static constexpr double wgk[8] = {
      0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
      0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
      0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
      0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
  static constexpr double wg[4] = {
      0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
      0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

  struct Interval {
    double a, b, value, error;
  };

  auto kronrod = [&](double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double f_center = f(center);
    double result_gauss = wg[3] * f_center;
    double result_kronrod = wgk[7] * f_center;
    for (int j = 0; j < 7; ++j) {
      const double dx = half * xgk[j];
      const double f_sum = f(center - dx) + f(center + dx);
      result_kronrod += wgk[j] * f_sum;
      if (j % 2 == 1) result_gauss += wg[j / 2] * f_sum;
    }
    Interval out;
    out.a = lo;
    out.b = hi;
    out.value = result_kronrod * half;
    out.error = std::abs((result_kronrod - result_gauss) * half);
    return out;
  };

  QuadratureResult total;
  std::vector<Interval> heap;
  heap.push_back(kronrod(a, b));
  total.evaluations = 15;

  auto tolerance = [&](double value) {
    return std::max(abs_tol, rel_tol * std::abs(value));
  };

  while (true) {
    double sum = 0.0, err = 0.0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < heap.size(); ++i) {
      sum += heap[i].value;
      err += heap[i].error;
      if (heap[i].error > heap[worst].error) worst = i;
    }
    total.value = sum;
    total.error_estimate = err;
    if (err <= tolerance(sum)) return total;
    if (heap.size() >= max_intervals) {
      throw numeric_error("adaptive quadrature did not converge; achieved relative tolerance " +
                              std::to_string(sum != 0.0 ? err / std::abs(sum) : err),
                          sum != 0.0 ? err / std::abs(sum) : err);
    }
    const Interval bad = heap[worst];
    const double mid = 0.5 * (bad.a + bad.b);
    heap[worst] = kronrod(bad.a, mid);
    heap.push_back(kronrod(mid, bad.b));
    total.evaluations += 30;
  }
}

}  // namespace detail
}  // namespace thz

#endif  // THZ_QUADRATURE_HPP
