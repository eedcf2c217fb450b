#ifndef MIXT_SYMT_HPP
#define MIXT_SYMT_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace mixt::symt {

// Largest dimension for which the exhaustive vertex-cover search runs.
inline constexpr int kMaxExactDimension = 5;

// Conjectured quantiles of the symmetric-error limit CDF. These are
// consistency targets, not established values.
inline constexpr double kConjecturedQuantile90 = 1.7320508075688772;   // sqrt(3)
inline constexpr double kConjecturedQuantile95 = 2.0;
inline constexpr double kConjecturedQuantile975 = 2.2360679774997896;  // sqrt(5)

struct VertexCoverResult {
  int n;
  double a;
  int m;                        // max vertices of {+-1}^n in a halfspace at distance a
  std::vector<double> witness;  // unit direction attaining m
  bool exact;                   // true when from exhaustive search
};

struct SCriticalValue {
  double x;
  bool exact;  // false when derived from the 2^{-ceil(a^2)} bound only
};

/// Requested level below the smallest achievable positive tail.
class InfeasibleLevelError : public std::runtime_error {
 public:
  InfeasibleLevelError(double min_level, const std::string& what)
      : std::runtime_error(what), min_level_(min_level) {}
  double min_level() const { return min_level_; }

 private:
  double min_level_;
};

/// Point of minimal Euclidean norm in the convex hull of the given
/// points. Exhaustive active-set enumeration for small inputs, Wolfe's
/// algorithm otherwise; deterministic with lexicographic tie-breaking.
std::vector<double> min_norm_point(const std::vector<std::vector<double>>& points);

/// Exact maximal halfspace vertex count for 1 <= n <= kMaxExactDimension:
/// m = max over unit u of #{v in {+-1}^n : <v,u> >= a}, with a witness
/// direction. For a > sqrt(n) the count is 0.
VertexCoverResult s_tail_exact(int n, double a);

/// The exact worst-case tail m / 2^n as a plain number.
double s_tail(int n, double a);

/// Universal lower bound 2^{-ceil(a^2)} on the worst-case symmetric tail,
/// valid for 0 < a <= sqrt(n).
double s_tail_lower_bound(double a);

/// 1 - 2^{-ceil(a^2)}: a lower bound on the limit CDF and a conjectural
/// approximation of it.
double phi_s_approx(double a);

/// Smallest x whose worst-case symmetric tail is <= alpha. Exact for
/// n <= kMaxExactDimension (step-boundary of the exhaustive tail);
/// bound-based and flagged inexact beyond. Throws InfeasibleLevelError
/// when alpha < 2^{-n}.
SCriticalValue s_critical_value(int n, double alpha);

}  // namespace mixt::symt

#endif
