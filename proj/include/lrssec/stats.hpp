#pragma once

// Small statistics utilities used by the Monte Carlo tests and validation
// gates: Pearson correlation, one-sample Kolmogorov-Smirnov distance against
// a supplied CDF, and least-squares line fitting for log-log slope checks.

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "lrssec/common.hpp"

namespace lrssec {

inline double pearson_correlation(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("pearson_correlation: need two equal-length samples");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  return sxy / std::sqrt(sxx * syy);
}

// sup_x |ECDF(x) - F(x)| computed on the sorted sample.
template <class Cdf>
double ks_statistic(std::vector<double> samples, Cdf&& cdf) {
  if (samples.empty()) throw std::invalid_argument("ks_statistic: empty sample");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max(d, std::max((static_cast<double>(i) + 1.0) / n - f,
                             f - static_cast<double>(i) / n));
  }
  return d;
}

// Asymptotic one-sample KS critical value sqrt(-ln(alpha/2)/2)/sqrt(n).
inline double ks_critical_value(std::size_t n, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("ks_critical_value: bad alpha");
  return std::sqrt(-0.5 * std::log(alpha / 2.0)) / std::sqrt(static_cast<double>(n));
}

struct LineFit {
  double slope;
  double intercept;
};

inline LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("fit_line: need two equal-length samples");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  const double slope = sxy / sxx;
  return {slope, my - slope * mx};
}

struct MeanWithError {
  double value;
  double std_error;
};

inline MeanWithError sample_mean(std::span<const double> x) {
  if (x.size() < 2) throw std::invalid_argument("sample_mean: need at least two samples");
  double m = 0.0;
  for (double v : x) m += v;
  m /= static_cast<double>(x.size());
  double s2 = 0.0;
  for (double v : x) s2 += (v - m) * (v - m);
  s2 /= static_cast<double>(x.size() - 1);
  return {m, std::sqrt(s2 / static_cast<double>(x.size()))};
}

}  // namespace lrssec
