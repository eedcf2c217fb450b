#include "mixt/symt.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "mixt/transform.hpp"

namespace mixt::symt {

namespace {

constexpr double kCoverSlack = 1e-9;   // halfspace membership slack
constexpr double kNormTol = 1e-10;

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

// Solves the (r+1)x(r+1) KKT system for the min-norm point of the affine
// hull of the rows of P: minimize |sum l_i p_i|^2 subject to sum l_i = 1.
// Returns false when the system is numerically singular.
bool affine_min_norm(const std::vector<const std::vector<double>*>& pts,
                     std::vector<double>& lambda) {
  const int r = static_cast<int>(pts.size());
  const int m = r + 1;
  std::vector<double> A(m * m, 0.0);
  std::vector<double> b(m, 0.0);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) A[i * m + j] = 2.0 * dot(*pts[i], *pts[j]);
    A[i * m + r] = 1.0;
    A[r * m + i] = 1.0;
  }
  b[r] = 1.0;
  // Gaussian elimination with partial pivoting.
  std::vector<int> perm(m);
  for (int i = 0; i < m; ++i) perm[i] = i;
  for (int col = 0; col < m; ++col) {
    int piv = col;
    for (int row = col + 1; row < m; ++row) {
      if (std::fabs(A[row * m + col]) > std::fabs(A[piv * m + col])) piv = row;
    }
    if (std::fabs(A[piv * m + col]) < 1e-12) return false;
    if (piv != col) {
      for (int j = 0; j < m; ++j) std::swap(A[col * m + j], A[piv * m + j]);
      std::swap(b[col], b[piv]);
    }
    for (int row = col + 1; row < m; ++row) {
      const double f = A[row * m + col] / A[col * m + col];
      if (f == 0.0) continue;
      for (int j = col; j < m; ++j) A[row * m + j] -= f * A[col * m + j];
      b[row] -= f * b[col];
    }
  }
  std::vector<double> sol(m);
  for (int row = m - 1; row >= 0; --row) {
    double s = b[row];
    for (int j = row + 1; j < m; ++j) s -= A[row * m + j] * sol[j];
    sol[row] = s / A[row * m + row];
  }
  lambda.assign(sol.begin(), sol.begin() + r);
  return true;
}

std::vector<double> combine(const std::vector<const std::vector<double>*>& pts,
                            const std::vector<double>& lambda) {
  std::vector<double> x(pts[0]->size(), 0.0);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) x[j] += lambda[i] * (*pts[i])[j];
  }
  return x;
}

// Exhaustive active-set search: every nonempty subset is a candidate
// support; a candidate is accepted when its weights are nonnegative and
// no point improves the objective. Subset masks ascend, so ties resolve
// lexicographically.
std::vector<double> min_norm_point_exhaustive(
    const std::vector<std::vector<double>>& points) {
  const int np = static_cast<int>(points.size());
  double scale = 0.0;
  for (const auto& p : points) scale = std::max(scale, dot(p, p));
  const double opt_tol = 1e-9 * (1.0 + scale);

  std::vector<double> best;
  double best_sq = 0.0;
  for (unsigned mask = 1; mask < (1u << np); ++mask) {
    std::vector<const std::vector<double>*> pts;
    for (int i = 0; i < np; ++i) {
      if (mask >> i & 1u) pts.push_back(&points[i]);
    }
    std::vector<double> lambda;
    if (pts.size() == 1) {
      lambda = {1.0};
    } else if (!affine_min_norm(pts, lambda)) {
      continue;
    }
    if (std::any_of(lambda.begin(), lambda.end(),
                    [](double l) { return l < -1e-10; })) {
      continue;
    }
    std::vector<double> x = combine(pts, lambda);
    const double xsq = dot(x, x);
    bool optimal = true;
    for (const auto& p : points) {
      if (dot(p, x) < xsq - opt_tol) {
        optimal = false;
        break;
      }
    }
    if (!optimal) continue;
    if (best.empty() || xsq < best_sq - 1e-12) {
      best = std::move(x);
      best_sq = xsq;
    }
  }
  if (best.empty()) {
    // Conditioning pathologies only; fall back to the shortest input point.
    std::size_t j = 0;
    for (std::size_t i = 1; i < points.size(); ++i) {
      if (dot(points[i], points[i]) < dot(points[j], points[j])) j = i;
    }
    best = points[j];
  }
  return best;
}

// Wolfe's min-norm-point algorithm for larger point sets. Entering
// points chosen by smallest index on ties.
std::vector<double> min_norm_point_wolfe(
    const std::vector<std::vector<double>>& points) {
  const int np = static_cast<int>(points.size());
  double scale = 0.0;
  for (const auto& p : points) scale = std::max(scale, dot(p, p));
  const double tol = 1e-11 * (1.0 + scale);

  int start = 0;
  for (int i = 1; i < np; ++i) {
    if (dot(points[i], points[i]) < dot(points[start], points[start])) start = i;
  }
  std::vector<int> corral{start};
  std::vector<double> weights{1.0};
  std::vector<double> x = points[start];

  for (int major = 0; major < 16 * np + 64; ++major) {
    int enter = 0;
    double best_ip = dot(points[0], x);
    for (int i = 1; i < np; ++i) {
      const double ip = dot(points[i], x);
      if (ip < best_ip) {
        best_ip = ip;
        enter = i;
      }
    }
    if (best_ip >= dot(x, x) - tol) break;  // optimal
    if (std::find(corral.begin(), corral.end(), enter) != corral.end()) break;
    corral.push_back(enter);
    weights.push_back(0.0);

    for (int minor = 0; minor < 4 * np + 16; ++minor) {
      std::vector<const std::vector<double>*> pts;
      pts.reserve(corral.size());
      for (int idx : corral) pts.push_back(&points[idx]);
      std::vector<double> lam;
      if (corral.size() == 1) {
        lam = {1.0};
      } else if (!affine_min_norm(pts, lam)) {
        break;
      }
      if (std::all_of(lam.begin(), lam.end(),
                      [](double l) { return l > -1e-12; })) {
        weights = lam;
        x = combine(pts, lam);
        break;
      }
      // Step toward the affine solution until a weight hits zero.
      double theta = 1.0;
      for (std::size_t i = 0; i < lam.size(); ++i) {
        if (lam[i] < 1e-12 && weights[i] > lam[i]) {
          theta = std::min(theta, weights[i] / (weights[i] - lam[i]));
        }
      }
      for (std::size_t i = 0; i < lam.size(); ++i) {
        weights[i] = (1.0 - theta) * weights[i] + theta * lam[i];
      }
      // Drop the first vanished weight.
      for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] <= 1e-12) {
          corral.erase(corral.begin() + static_cast<long>(i));
          weights.erase(weights.begin() + static_cast<long>(i));
          break;
        }
      }
      pts.clear();
      for (int idx : corral) pts.push_back(&points[idx]);
      x = combine(pts, weights);
    }
  }
  return x;
}

// ---- exhaustive vertex-cover machinery -------------------------------

// All vertices of {+-1}^n; bit j of the index set selects +1.
std::vector<std::vector<double>> cube_vertices(int n) {
  std::vector<std::vector<double>> v;
  v.reserve(1u << n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<double> p(n);
    for (int j = 0; j < n; ++j) p[j] = (mask >> j & 1u) ? 1.0 : -1.0;
    v.push_back(std::move(p));
  }
  return v;
}

struct CoverProfile {
  int n = 0;
  std::vector<std::vector<double>> vertices;
  std::vector<std::vector<double>> directions;   // unit candidates
  std::vector<std::vector<double>> sorted_dots;  // per direction, descending
};

// Candidate optimal directions: the optimal halfspace normal is the
// normalized min-norm point of the convex hull of the covered set, and
// that point is supported on at most n vertices. Enumerating supports of
// size <= n therefore captures the exact optimum.
CoverProfile build_profile(int n) {
  CoverProfile prof;
  prof.n = n;
  prof.vertices = cube_vertices(n);
  const int nv = static_cast<int>(prof.vertices.size());

  std::map<std::vector<long long>, std::vector<double>> unique;
  std::vector<int> comb;
  for (int r = 1; r <= n; ++r) {
    comb.resize(r);
    for (int i = 0; i < r; ++i) comb[i] = i;
    while (true) {
      std::vector<std::vector<double>> pts;
      pts.reserve(r);
      for (int i : comb) pts.push_back(prof.vertices[i]);
      std::vector<double> x = min_norm_point_exhaustive(pts);
      const double nx = norm(x);
      if (nx > kNormTol) {
        std::vector<long long> key(n);
        std::vector<double> u(n);
        for (int j = 0; j < n; ++j) {
          u[j] = x[j] / nx;
          key[j] = std::llround(u[j] * 1e10);
        }
        unique.emplace(std::move(key), std::move(u));
      }
      // next combination
      int i = r - 1;
      while (i >= 0 && comb[i] == nv - r + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  prof.directions.reserve(unique.size());
  prof.sorted_dots.reserve(unique.size());
  for (auto& [key, u] : unique) {
    std::vector<double> dots;
    dots.reserve(nv);
    for (const auto& v : prof.vertices) dots.push_back(dot(v, u));
    std::sort(dots.begin(), dots.end(), std::greater<double>());
    prof.directions.push_back(std::move(u));
    prof.sorted_dots.push_back(std::move(dots));
  }
  return prof;
}

const CoverProfile& get_profile(int n) {
  static std::mutex mu;
  static std::array<std::unique_ptr<CoverProfile>, kMaxExactDimension + 1> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (!cache[n]) cache[n] = std::make_unique<CoverProfile>(build_profile(n));
  return *cache[n];
}

// ceil(a^2) with snapping so that e.g. a = sqrt(3) lands on 3 exactly.
int ceil_a_squared(double a) {
  const double s = a * a;
  const double r = std::round(s);
  if (std::fabs(s - r) < 1e-9) return static_cast<int>(r);
  return static_cast<int>(std::ceil(s));
}

}  // namespace

std::vector<double> min_norm_point(
    const std::vector<std::vector<double>>& points) {
  if (points.empty()) {
    throw std::invalid_argument("min_norm_point: empty point list");
  }
  const std::size_t dim = points.front().size();
  for (const auto& p : points) {
    if (p.size() != dim) {
      throw std::invalid_argument("min_norm_point: inconsistent dimensions");
    }
  }
  if (points.size() <= 12) return min_norm_point_exhaustive(points);
  return min_norm_point_wolfe(points);
}

VertexCoverResult s_tail_exact(int n, double a) {
  if (n < 1 || n > kMaxExactDimension) {
    throw std::invalid_argument(
        "s_tail_exact: n must lie in [1, " +
        std::to_string(kMaxExactDimension) +
        "]; use s_tail_lower_bound for larger n");
  }
  if (a < 0.0) throw std::domain_error("s_tail_exact: a must be nonnegative");

  VertexCoverResult res;
  res.n = n;
  res.a = a;
  res.exact = true;
  res.witness.assign(n, 0.0);
  res.witness[0] = 1.0;
  res.m = 0;
  if (a > std::sqrt(static_cast<double>(n)) + kCoverSlack) return res;

  const CoverProfile& prof = get_profile(n);
  int best = 0;
  int best_dir = -1;
  for (std::size_t i = 0; i < prof.directions.size(); ++i) {
    const auto& dots = prof.sorted_dots[i];
    int cnt = 0;
    while (cnt < static_cast<int>(dots.size()) && dots[cnt] >= a - kCoverSlack) {
      ++cnt;
    }
    if (cnt > best) {
      best = cnt;
      best_dir = static_cast<int>(i);
    }
  }
  res.m = best;
  if (best_dir >= 0) res.witness = prof.directions[best_dir];
  return res;
}

double s_tail(int n, double a) {
  return static_cast<double>(s_tail_exact(n, a).m) /
         static_cast<double>(1u << n);
}

double s_tail_lower_bound(double a) {
  if (!(a > 0.0)) {
    throw std::domain_error("s_tail_lower_bound: a must be positive");
  }
  return std::ldexp(1.0, -ceil_a_squared(a));
}

double phi_s_approx(double a) { return 1.0 - s_tail_lower_bound(a); }

SCriticalValue s_critical_value(int n, double alpha) {
  if (n < 2) throw std::domain_error("s_critical_value: n must be >= 2");
  if (!(alpha > 0.0) || !(alpha < 0.5)) {
    throw std::domain_error("s_critical_value: alpha must lie in (0, 0.5)");
  }
  const double min_level = std::ldexp(1.0, -n);
  if (alpha < min_level - 1e-15) {
    throw InfeasibleLevelError(
        min_level,
        "s_critical_value: alpha below the minimum achievable level 2^-" +
            std::to_string(n) + " = " + std::to_string(min_level));
  }

  if (n <= kMaxExactDimension) {
    // The exact tail is a right-continuous step function of a; the tail
    // first drops to <= alpha just past the largest a at which some
    // direction still covers c_allowed + 1 vertices.
    const int two_n = 1 << n;
    const int c_allowed =
        static_cast<int>(std::floor(alpha * two_n + 1e-12));
    const CoverProfile& prof = get_profile(n);
    const int c = c_allowed + 1;  // first disallowed count; c <= 2^{n-1} < 2^n
    double a_star = 0.0;
    for (const auto& dots : prof.sorted_dots) {
      a_star = std::max(a_star, dots[c - 1]);
    }
    return {transform::x_from_a(a_star, n), true};
  }

  // Bound-based: 2^{-ceil(a^2)} <= alpha first holds past a = sqrt(L-1)
  // where L = ceil(log2(1/alpha)).
  const double l_real = std::log2(1.0 / alpha);
  int level = static_cast<int>(std::ceil(l_real - 1e-12));
  if (level < 1) level = 1;
  if (level - 1 >= n) {
    throw InfeasibleLevelError(
        min_level,
        "s_critical_value: bound-based threshold exceeds sqrt(n)");
  }
  const double a_star = std::sqrt(static_cast<double>(level - 1));
  return {transform::x_from_a(a_star, n), false};
}

}  // namespace mixt::symt
