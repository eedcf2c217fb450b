#ifndef MIXT_TRANSFORM_HPP
#define MIXT_TRANSFORM_HPP

#include <span>

namespace mixt::transform {

struct SampleConfig {
  int n;         // sample size, >= 2
  double alpha;  // one-sided significance level, in (0, 0.5)
};

// Threshold reparametrization: a^2 = n x^2 / (x^2 + n - 1).
// a ranges over [0, sqrt(n)) as x ranges over [0, inf).
double a_from_x(double x, int n);
double x_from_a(double a, int n);

/// One-sample t statistic sqrt(n)(mean - mu)/S.
/// Throws std::invalid_argument on constant samples (S == 0).
double t_statistic(std::span<const double> sample, double mu);

/// Self-normalized ratio (sum xi)^2 / sum xi^2, in [0, n].
/// Throws std::invalid_argument on the all-zero vector.
double ratio_statistic(std::span<const double> errors);

}  // namespace mixt::transform

#endif
