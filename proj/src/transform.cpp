#include "mixt/transform.hpp"

#include <cmath>
#include <stdexcept>

namespace mixt::transform {

double a_from_x(double x, int n) {
  if (n < 2) throw std::domain_error("a_from_x: n must be >= 2");
  if (x < 0.0) throw std::domain_error("a_from_x: x must be nonnegative");
  return std::sqrt(n * x * x / (x * x + n - 1));
}

double x_from_a(double a, int n) {
  if (n < 2) throw std::domain_error("x_from_a: n must be >= 2");
  const double a2 = a * a;
  if (a < 0.0 || a2 >= static_cast<double>(n)) {
    throw std::domain_error("x_from_a: a must lie in [0, sqrt(n))");
  }
  return std::sqrt(a2 * (n - 1) / (n - a2));
}

double t_statistic(std::span<const double> sample, double mu) {
  const std::size_t n = sample.size();
  if (n < 2) throw std::invalid_argument("t_statistic: need at least 2 observations");
  double mean = 0.0;
  for (double v : sample) mean += v;
  mean /= static_cast<double>(n);
  // Second pass for the variance; near-constant samples cancel badly otherwise.
  double ss = 0.0;
  for (double v : sample) {
    const double d = v - mean;
    ss += d * d;
  }
  if (ss == 0.0) {
    throw std::invalid_argument("t_statistic: degenerate (constant) sample, S = 0");
  }
  const double s = std::sqrt(ss / static_cast<double>(n - 1));
  return std::sqrt(static_cast<double>(n)) * (mean - mu) / s;
}

double ratio_statistic(std::span<const double> errors) {
  if (errors.empty()) throw std::invalid_argument("ratio_statistic: empty vector");
  double sum = 0.0;
  double sumsq = 0.0;
  for (double v : errors) {
    sum += v;
    sumsq += v * v;
  }
  if (sumsq == 0.0) {
    throw std::invalid_argument("ratio_statistic: all-zero vector");
  }
  return sum * sum / sumsq;
}

}  // namespace mixt::transform
