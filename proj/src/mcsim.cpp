#include "mixt/mcsim.hpp"

#include <cmath>
#include <stdexcept>

#include "mixt/gmix.hpp"
#include "mixt/specfun.hpp"
#include "mixt/symt.hpp"
#include "mixt/transform.hpp"

namespace mixt::mcsim {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::string model_name(Model m) {
  switch (m) {
    case Model::classic: return "classic";
    case Model::gaussian_mixture: return "G";
    case Model::symmetric: return "S";
  }
  return "?";
}

MixtureSpec MixtureSpec::two_point(double sigma_small, double sigma_large,
                                   double weight) {
  if (sigma_small < 0.0 || sigma_large < 0.0) {
    throw std::invalid_argument("two_point_scale: scales must be nonnegative");
  }
  if (!(weight >= 0.0 && weight <= 1.0)) {
    throw std::invalid_argument("two_point_scale: weight must lie in [0,1]");
  }
  MixtureSpec s;
  s.kind = Kind::two_point_scale;
  s.sigma_small = sigma_small;
  s.sigma_large = sigma_large;
  s.weight = weight;
  return s;
}

MixtureSpec MixtureSpec::exponential() {
  MixtureSpec s;
  s.kind = Kind::exponential_scale;
  return s;
}

MixtureSpec MixtureSpec::inverse_sqrt_gamma(double nu) {
  if (!(nu > 0.0)) {
    throw std::invalid_argument("inverse_sqrt_gamma_scale: nu must be positive");
  }
  MixtureSpec s;
  s.kind = Kind::inverse_sqrt_gamma_scale;
  s.nu = nu;
  return s;
}

MixtureSpec MixtureSpec::constant(double sigma) {
  if (!(sigma >= 0.0)) {
    throw std::invalid_argument("constant_scale: sigma must be nonnegative");
  }
  MixtureSpec s;
  s.kind = Kind::constant_scale;
  s.sigma = sigma;
  return s;
}

MixtureSpec MixtureSpec::rademacher() {
  MixtureSpec s;
  s.kind = Kind::rademacher;
  return s;
}

std::string MixtureSpec::name() const {
  switch (kind) {
    case Kind::two_point_scale:
      return "two_point(" + std::to_string(sigma_small) + "," +
             std::to_string(sigma_large) + "," + std::to_string(weight) + ")";
    case Kind::exponential_scale: return "exponential";
    case Kind::inverse_sqrt_gamma_scale:
      return "tstudent(" + std::to_string(nu) + ")";
    case Kind::constant_scale: return "constant(" + std::to_string(sigma) + ")";
    case Kind::rademacher: return "rademacher";
  }
  return "?";
}

RepStream::RepStream(std::uint64_t root_seed, std::uint64_t rep_index) {
  // Counter construction: fold the replication index into the root seed
  // through two mixing rounds so neighboring indices decorrelate.
  std::uint64_t s = root_seed ^ 0x5851f42d4c957f2dULL;
  splitmix64(s);
  s ^= rep_index * 0xd6e8feb86659fd93ULL;
  splitmix64(s);
  state_ = s;
}

std::uint64_t RepStream::next_u64() { return splitmix64(state_); }

double RepStream::uniform() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RepStream::normal() {
  if (have_cached_) {
    have_cached_ = false;
    return cached_normal_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  cached_normal_ = r * std::sin(theta);
  have_cached_ = true;
  return r * std::cos(theta);
}

double RepStream::exponential() { return -std::log(uniform()); }

double RepStream::gamma(double shape) {
  if (!(shape > 0.0)) throw std::invalid_argument("gamma: shape must be positive");
  if (shape < 1.0) {
    const double u = uniform();
    return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

std::vector<double> sample_errors(const MixtureSpec& spec, int n,
                                  RepStream& stream) {
  if (n < 1) throw std::invalid_argument("sample_errors: n must be >= 1");
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) {
    switch (spec.kind) {
      case MixtureSpec::Kind::two_point_scale: {
        const double s =
            stream.uniform() < spec.weight ? spec.sigma_large : spec.sigma_small;
        out[i] = s * stream.normal();
        break;
      }
      case MixtureSpec::Kind::exponential_scale:
        out[i] = stream.exponential() * stream.normal();
        break;
      case MixtureSpec::Kind::inverse_sqrt_gamma_scale: {
        // s^2 = nu / chi^2_nu, so s * Z is Student t with nu dof.
        const double chi2 = 2.0 * stream.gamma(0.5 * spec.nu);
        out[i] = std::sqrt(spec.nu / chi2) * stream.normal();
        break;
      }
      case MixtureSpec::Kind::constant_scale:
        out[i] = spec.sigma * stream.normal();
        break;
      case MixtureSpec::Kind::rademacher:
        out[i] = stream.uniform() < 0.5 ? -1.0 : 1.0;
        break;
    }
  }
  return out;
}

double critical_value_for(Model model, int n, double alpha) {
  switch (model) {
    case Model::classic: {
      double hi = 2.0;
      while (specfun::student_t_cdf(hi, n - 1) < 1.0 - alpha) hi *= 2.0;
      return specfun::invert_monotone(
          [n](double x) { return specfun::student_t_cdf(x, n - 1); },
          1.0 - alpha, 0.0, hi, 1e-10);
    }
    case Model::gaussian_mixture:
      return gmix::g_critical_value(n, alpha);
    case Model::symmetric:
      return symt::s_critical_value(n, alpha).x;
  }
  throw std::logic_error("critical_value_for: unknown model");
}

SimulationReport type_one_error(const MixtureSpec& spec, int n, double alpha,
                                Model model, long reps, std::uint64_t seed) {
  if (reps < 10000) {
    throw std::invalid_argument("type_one_error: reps must be >= 10^4");
  }
  const double crit = critical_value_for(model, n, alpha);
  long rejections = 0;
  for (long rep = 0; rep < reps; ++rep) {
    RepStream stream(seed, static_cast<std::uint64_t>(rep));
    const std::vector<double> xi = sample_errors(spec, n, stream);
    // H0 sample with mu = 0. Constant samples have S = 0: |T| is infinite
    // unless the mean also hits mu exactly.
    double mean = 0.0;
    for (double v : xi) mean += v;
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (double v : xi) {
      const double d = v - mean;
      ss += d * d;
    }
    bool reject;
    if (ss == 0.0) {
      reject = mean != 0.0;
    } else {
      const double t = std::sqrt(static_cast<double>(n)) * mean /
                       std::sqrt(ss / static_cast<double>(n - 1));
      reject = std::fabs(t) > crit;
    }
    if (reject) ++rejections;
  }
  SimulationReport report;
  report.spec = spec;
  report.n = n;
  report.alpha = alpha;
  report.model = model;
  report.reps = reps;
  report.rejections = rejections;
  report.estimate = static_cast<double>(rejections) / static_cast<double>(reps);
  report.std_error =
      std::sqrt(report.estimate * (1.0 - report.estimate) / static_cast<double>(reps));
  report.critical_value = crit;
  report.seed = seed;
  return report;
}

AttainmentResult adversarial_attainment(int n, double a, long reps,
                                        std::uint64_t seed) {
  if (!(a > 1.0) || !(a * a < static_cast<double>(n))) {
    throw std::domain_error("adversarial_attainment: a must lie in (1, sqrt(n))");
  }
  const int k = gmix::g_argmax_k(a, n);
  const double theoretical = gmix::g_tail(a, n);
  // Zero scales would degenerate the statistic; a negligible positive
  // scale perturbs the tail by far less than the Monte Carlo error.
  constexpr double kTinyScale = 1e-9;
  const double a2 = a * a;
  long hits = 0;
  for (long rep = 0; rep < reps; ++rep) {
    RepStream stream(seed, static_cast<std::uint64_t>(rep));
    double sum = 0.0;
    double sumsq = 0.0;
    for (int i = 0; i < n; ++i) {
      const double scale = i < k ? 1.0 : kTinyScale;
      const double v = scale * stream.normal();
      sum += v;
      sumsq += v * v;
    }
    if (sum * sum / sumsq > a2) ++hits;
  }
  AttainmentResult res;
  res.n = n;
  res.a = a;
  res.k = k;
  res.reps = reps;
  res.empirical = static_cast<double>(hits) / static_cast<double>(reps);
  res.theoretical = theoretical;
  res.std_error =
      std::sqrt(res.empirical * (1.0 - res.empirical) / static_cast<double>(reps));
  res.seed = seed;
  return res;
}

}  // namespace mixt::mcsim
