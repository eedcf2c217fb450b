#include "mixt/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mixt::specfun {

double log_gamma(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("log_gamma: x must be positive, got " +
                            std::to_string(x));
  }
  return std::lgamma(x);
}

namespace {

// Lentz continued fraction for the incomplete beta, valid for
// x < (a+1)/(a+b+2).
double beta_cont_frac(double a, double b, double x) {
  constexpr double kFpMin = 1e-300;
  constexpr double kEps = 1e-16;
  constexpr int kMaxIter = 2000;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kFpMin) d = kFpMin;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) return h;
  }
  throw std::runtime_error("reg_inc_beta: continued fraction did not converge");
}

}  // namespace

double reg_inc_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::domain_error("reg_inc_beta: a and b must be positive");
  }
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("reg_inc_beta: x must lie in [0,1], got " +
                            std::to_string(x));
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;

  const double ln_front = log_gamma(a + b) - log_gamma(a) - log_gamma(b) +
                          a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_cont_frac(a, b, x) / a;
  }
  return 1.0 - front * beta_cont_frac(b, a, 1.0 - x) / b;
}

double student_t_cdf(double t, int dof) {
  if (dof < 1) {
    throw std::domain_error("student_t_cdf: dof must be >= 1");
  }
  if (t == 0.0) return 0.5;
  const double nu = static_cast<double>(dof);
  const double at = std::fabs(t);
  // One-sided tail via I_x(nu/2, 1/2) at x = nu/(nu + t^2); reflecting
  // |t| keeps cdf(t) + cdf(-t) == 1 exact.
  const double xx = nu / (nu + at * at);
  const double tail = 0.5 * reg_inc_beta(0.5 * nu, 0.5, xx);
  return t > 0.0 ? 1.0 - tail : tail;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double cauchy_cdf(double x) {
  return 0.5 + std::atan(x) / M_PI;
}

double invert_monotone(const std::function<double(double)>& f, double target,
                       double lo, double hi, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("invert_monotone: tol <= 0");
  if (!(lo < hi)) throw std::invalid_argument("invert_monotone: lo >= hi");
  double flo = f(lo);
  double fhi = f(hi);
  const bool increasing = fhi >= flo;
  const double fmin = increasing ? flo : fhi;
  const double fmax = increasing ? fhi : flo;
  const double slack = 1e-12 * (1.0 + std::fabs(fmax) + std::fabs(fmin));
  if (target < fmin - slack || target > fmax + slack) {
    throw std::invalid_argument("invert_monotone: target outside bracket");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket at floating resolution
    const double fm = f(mid);
    const bool go_right = increasing ? (fm < target) : (fm > target);
    if (go_right) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace mixt::specfun
