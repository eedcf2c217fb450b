#ifndef MIXT_GMIX_HPP
#define MIXT_GMIX_HPP

#include <span>
#include <vector>

namespace mixt::gmix {

// Location where the one-sided tail curves for k and k+1 equal-scale
// components intersect, in the ratio-threshold variable a.
struct CrossingPoint {
  int k;
  double a_star;
  double a_star_squared;
};

struct CriticalTable {
  struct Row {
    int dof;                     // degrees of freedom (sample size - 1)
    std::vector<double> values;  // one critical x per alpha
  };
  std::vector<double> alphas;
  std::vector<Row> rows;
};

/// Worst-case one-sided tail over Gaussian scale mixtures at ratio
/// threshold a for sample size n: 1/2 on [0,1), 1/4 at a == 1, 0 for
/// a >= sqrt(n), else the max over integers k with a^2 < k <= n of
/// P(t_{k-1} > sqrt(a^2 (k-1)/(k - a^2))).
double g_tail(double a, int n);

/// The k attaining the max in g_tail (smallest on ties). Requires
/// 1 < a < sqrt(n).
int g_argmax_k(double a, int n);

/// Solves for the intersection of the k and k+1 tail curves in
/// a in (1, sqrt(3)), bracketed bisection to 1e-10.
CrossingPoint crossing_point(int k);

/// Limit CDF for Gaussian scale mixture errors: 0.5 on [0,1), 0.75 at
/// x == 1, the max-over-k tail complement on (1, sqrt(3)) with the
/// normal tail as the large-k floor, and the standard normal CDF for
/// x >= sqrt(3). Negative x by symmetry.
double phi_g(double x);

/// Left-continuous inverse of phi_g for p in (0.5, 1); the jump at
/// x == 1 maps all p in (0.5, 0.75] to 1.
double phi_g_quantile(double p);

/// Smallest t-statistic threshold x with g_tail(a(x), n) <= alpha.
/// Requires 0 < alpha < 0.25 (the tail never exceeds 1/4 past a = 1).
double g_critical_value(int n, double alpha);

/// Grid of g_critical_value(dof + 1, alpha); rows labeled by degrees of
/// freedom to match the usual table layout.
CriticalTable generate_table(std::span<const int> dof_list,
                             std::span<const double> alphas);

}  // namespace mixt::gmix

#endif
