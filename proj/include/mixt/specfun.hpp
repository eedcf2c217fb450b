#ifndef MIXT_SPECFUN_HPP
#define MIXT_SPECFUN_HPP

#include <functional>

namespace mixt::specfun {

// Fixed library-wide tolerances. Not user tunable.
inline constexpr double kFunctionTol = 1e-12;
inline constexpr double kDefaultRootTol = 1e-9;

/// ln Gamma(x) for x > 0. Throws std::domain_error for x <= 0.
double log_gamma(double x);

/// Regularized incomplete beta I_x(a, b), a,b > 0, x in [0,1].
/// Continued fraction with the symmetry switch at x = (a+1)/(a+b+2).
double reg_inc_beta(double a, double b, double x);

/// CDF of Student's t with dof degrees of freedom (dof >= 1).
/// Routed through reg_inc_beta for all dof; exactly symmetric,
/// cdf(t) + cdf(-t) == 1.
double student_t_cdf(double t, int dof);

/// Standard normal CDF.
double normal_cdf(double x);

/// Standard Cauchy CDF, 1/2 + atan(x)/pi.
double cauchy_cdf(double x);

/// Bisection solve of f(x) = target for f monotone (either direction)
/// on [lo, hi]. Contracts the bracket to width <= tol and returns the
/// midpoint. Throws std::invalid_argument if target is outside
/// [f(lo), f(hi)] (up to a small slack).
double invert_monotone(const std::function<double(double)>& f, double target,
                       double lo, double hi, double tol = kDefaultRootTol);

}  // namespace mixt::specfun

#endif
