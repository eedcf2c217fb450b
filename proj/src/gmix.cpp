#include "mixt/gmix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "mixt/specfun.hpp"
#include "mixt/transform.hpp"

namespace mixt::gmix {

namespace {

const double kSqrt3 = std::sqrt(3.0);

// One-sided Student tail P(t_dof > x), x >= 0, evaluated through the
// incomplete beta directly so small tails keep full precision.
double student_tail(double x, int dof) {
  const double nu = static_cast<double>(dof);
  return 0.5 * specfun::reg_inc_beta(0.5 * nu, 0.5, nu / (nu + x * x));
}

// Tail curve for k equal nonzero scales: P(t_{k-1} > sqrt(a^2(k-1)/(k-a^2))).
// Requires a^2 < k.
double term_tail(int k, double a) {
  const double a2 = a * a;
  const double x = std::sqrt(a2 * (k - 1) / (k - a2));
  return student_tail(x, k - 1);
}

// Smallest admissible k for a given a (strict a^2 < k).
int k_min_for(double a) {
  const double a2 = a * a;
  int k = static_cast<int>(std::floor(a2)) + 1;
  return k < 2 ? 2 : k;
}

// Max of term_tail over k in [kmin, kmax]; the curve is unimodal in k
// (consecutive curves cross exactly once), so the scan stops after a
// long run of non-improvements. Returns {best value, argmax k}.
struct KScan {
  double value;
  int k;
};

KScan scan_max(double a, int kmin, int kmax) {
  constexpr int kPatience = 64;
  KScan best{-1.0, kmin};
  int since_improved = 0;
  for (int k = kmin; k <= kmax; ++k) {
    const double v = term_tail(k, a);
    if (v > best.value) {
      best = {v, k};
      since_improved = 0;
    } else if (++since_improved >= kPatience) {
      break;
    }
  }
  return best;
}

}  // namespace

double g_tail(double a, int n) {
  if (n < 2) throw std::domain_error("g_tail: n must be >= 2");
  if (a < 0.0) throw std::domain_error("g_tail: a must be nonnegative");
  if (a < 1.0) return 0.5;
  if (a == 1.0) return 0.25;
  if (a * a >= static_cast<double>(n)) return 0.0;
  return scan_max(a, k_min_for(a), n).value;
}

int g_argmax_k(double a, int n) {
  if (n < 2) throw std::domain_error("g_argmax_k: n must be >= 2");
  if (!(a > 1.0) || !(a * a < static_cast<double>(n))) {
    throw std::domain_error("g_argmax_k: a must lie in (1, sqrt(n))");
  }
  return scan_max(a, k_min_for(a), n).k;
}

CrossingPoint crossing_point(int k) {
  if (k < 2) throw std::domain_error("crossing_point: k must be >= 2");
  auto diff = [k](double a) { return term_tail(k, a) - term_tail(k + 1, a); };
  double lo = 1.0 + 1e-9;
  double hi = std::min(kSqrt3, std::sqrt(static_cast<double>(k))) - 1e-9;
  if (!(diff(lo) > 0.0) || !(diff(hi) < 0.0)) {
    throw std::runtime_error("crossing_point: no sign change in bracket for k=" +
                             std::to_string(k));
  }
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (diff(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double a_star = 0.5 * (lo + hi);
  return {k, a_star, a_star * a_star};
}

double phi_g(double x) {
  if (x < 0.0) return 1.0 - phi_g(-x);
  if (x < 1.0) return 0.5;
  if (x == 1.0) return 0.75;
  if (x >= kSqrt3) return specfun::normal_cdf(x);
  // On (1, sqrt(3)) the maximizing k grows without bound as x -> sqrt(3);
  // cap the scan adaptively and floor by the k -> infinity envelope.
  const double gap = kSqrt3 - x;
  const int kmax =
      std::max(64, static_cast<int>(std::ceil(20.0 / (gap * gap))));
  double tail = scan_max(x, k_min_for(x), kmax).value;
  tail = std::max(tail, 1.0 - specfun::normal_cdf(x));
  return 1.0 - tail;
}

double phi_g_quantile(double p) {
  if (!(p > 0.5) || !(p < 1.0)) {
    throw std::domain_error("phi_g_quantile: p must lie in (0.5, 1)");
  }
  if (p <= 0.75) return 1.0;  // the jump at x == 1 covers (0.5, 0.75]
  const double p_sqrt3 = specfun::normal_cdf(kSqrt3);
  if (p >= p_sqrt3) {
    return specfun::invert_monotone(
        [](double x) { return specfun::normal_cdf(x); }, p, kSqrt3 - 1e-9,
        40.0, 1e-10);
  }
  double lo = 1.0;
  double hi = kSqrt3;
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (phi_g(mid) >= p) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double g_critical_value(int n, double alpha) {
  if (n < 2) throw std::domain_error("g_critical_value: n must be >= 2");
  if (!(alpha > 0.0) || !(alpha < 0.25)) {
    throw std::domain_error(
        "g_critical_value: alpha must lie in (0, 0.25); the CDF jump at a = 1 "
        "makes larger levels vacuous");
  }
  auto tail_at = [n](double x) {
    return g_tail(transform::a_from_x(x, n), n);
  };
  double lo = transform::x_from_a(1.0, n);  // tail here is 1/4 > alpha
  double hi = lo + 1.0;
  while (tail_at(hi) > alpha) {
    hi *= 2.0;
    if (hi > 1e9) {
      throw std::runtime_error("g_critical_value: failed to bracket");
    }
  }
  while (hi - lo > 1e-8) {
    const double mid = 0.5 * (lo + hi);
    if (tail_at(mid) <= alpha) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

CriticalTable generate_table(std::span<const int> dof_list,
                             std::span<const double> alphas) {
  CriticalTable table;
  table.alphas.assign(alphas.begin(), alphas.end());
  table.rows.reserve(dof_list.size());
  for (int dof : dof_list) {
    if (dof < 1) throw std::domain_error("generate_table: dof must be >= 1");
    CriticalTable::Row row;
    row.dof = dof;
    row.values.reserve(alphas.size());
    for (double alpha : alphas) {
      row.values.push_back(g_critical_value(dof + 1, alpha));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace mixt::gmix
