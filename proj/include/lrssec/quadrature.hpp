#pragma once

// Adaptive Gauss-Kronrod (G7,K15) quadrature with interval bisection.
// Error per interval is estimated from |K15 - G7|; intervals are split until
// the local estimate meets the locally-apportioned tolerance or the depth cap
// trips, in which case a numerical_error is thrown.

#include <cmath>
#include <utility>

#include "lrssec/common.hpp"

namespace lrssec {

struct QuadratureOptions {
  double abs_tol = 1e-11;
  double rel_tol = 1e-10;
  int max_depth = 50;
};

namespace detail {

// 15-point Kronrod abscissae/weights on [-1,1] and the embedded 7-point
// Gauss weights (QUADPACK dqk15 constants).
inline constexpr double kronrod_x[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kronrod_w[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double gauss_w[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
std::pair<double, double> gauss_kronrod_15(F&& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kronrod_x[i]);
    fv[14 - i] = f(c + h * kronrod_x[i]);
  }
  fv[7] = f(c);
  double kres = kronrod_w[7] * fv[7];
  for (int i = 0; i < 7; ++i) kres += kronrod_w[i] * (fv[i] + fv[14 - i]);
  // Gauss nodes sit at the odd Kronrod indices.
  double gres = gauss_w[3] * fv[7];
  for (int i = 0; i < 3; ++i) gres += gauss_w[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
  return {kres * h, std::fabs(kres - gres) * h};
}

template <class F>
double integrate_recursive(F&& f, double a, double b, double tol, int depth,
                           const QuadratureOptions& opt) {
  auto [value, err] = gauss_kronrod_15(f, a, b);
  if (err <= tol || err <= std::fabs(value) * opt.rel_tol) return value;
  if (depth >= opt.max_depth)
    throw numerical_error("integrate: subdivision limit reached", value, err);
  const double mid = 0.5 * (a + b);
  return integrate_recursive(f, a, mid, 0.5 * tol, depth + 1, opt) +
         integrate_recursive(f, mid, b, 0.5 * tol, depth + 1, opt);
}

}  // namespace detail

template <class F>
double integrate(F&& f, double a, double b, const QuadratureOptions& opt = {}) {
  if (!(std::isfinite(a) && std::isfinite(b)))
    throw std::domain_error("integrate: bounds must be finite");
  if (a == b) return 0.0;
  return detail::integrate_recursive(f, a, b, opt.abs_tol, 0, opt);
}

}  // namespace lrssec
