#pragma once

#include <cstddef>
#include <vector>

namespace jtv::stats {

/// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
double gamma_p(double a, double x);

/// Gamma(shape, scale) CDF.
double gamma_cdf(double x, double shape, double scale);

/// Regularized incomplete beta I_x(a, b).
double beta_inc(double a, double b, double x);

/// Two-sided Student-t CDF with nu degrees of freedom.
double student_t_cdf(double t, double nu);

/// Upper quantile: smallest q with P(|T_nu| <= q) >= p.
double student_t_two_sided_quantile(double p, double nu);

/// One-sample Kolmogorov-Smirnov test of `samples` against a CDF given as a
/// callable; returns {statistic, asymptotic p-value}. Sorts a copy.
struct KsResult {
  double statistic;
  double p_value;
};
KsResult ks_test(std::vector<double> samples, double (*cdf)(double, double, double),
                 double param1, double param2);

/// Least-squares slope of log(y) against log(x).
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Median (sorts a copy).
double median(std::vector<double> values);

}  // namespace jtv::stats
