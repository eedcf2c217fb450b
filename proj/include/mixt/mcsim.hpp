#ifndef MIXT_MCSIM_HPP
#define MIXT_MCSIM_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace mixt::mcsim {

enum class Model { classic, gaussian_mixture, symmetric };

std::string model_name(Model m);

// Error-law description: xi = s * eta with s >= 0 an independent random
// scale. The Gaussian kinds mix a standard normal; rademacher is the
// symmetric two-point law itself.
struct MixtureSpec {
  enum class Kind {
    two_point_scale,          // s in {sigma_small, sigma_large}
    exponential_scale,        // s ~ Exp(1), heavy-tailed Laplace-type errors
    inverse_sqrt_gamma_scale, // s = sqrt(nu / chi^2_nu), Student-t errors
    constant_scale,           // s = sigma, pure Gaussian
    rademacher                // xi = +-1 with probability 1/2
  };

  Kind kind;
  double sigma_small = 0.0;
  double sigma_large = 0.0;
  double weight = 0.0;  // P(s = sigma_large)
  double nu = 0.0;
  double sigma = 0.0;

  static MixtureSpec two_point(double sigma_small, double sigma_large, double weight);
  static MixtureSpec exponential();
  static MixtureSpec inverse_sqrt_gamma(double nu);
  static MixtureSpec constant(double sigma);
  static MixtureSpec rademacher();

  bool is_gaussian_mixture() const { return kind != Kind::rademacher; }
  std::string name() const;
};

struct SimulationReport {
  MixtureSpec spec;
  int n = 0;
  double alpha = 0.0;
  Model model = Model::classic;
  long reps = 0;
  long rejections = 0;
  double estimate = 0.0;
  double std_error = 0.0;
  double critical_value = 0.0;
  std::uint64_t seed = 0;
};

struct AttainmentResult {
  int n = 0;
  double a = 0.0;
  int k = 0;            // adversarial number of unit scales
  long reps = 0;
  double empirical = 0.0;
  double theoretical = 0.0;  // g_tail(a, n); empirical targets 2x this
  double std_error = 0.0;
  std::uint64_t seed = 0;
};

/// Deterministic per-replication random stream: one root seed, each
/// replication index derives an independent substream by counter mixing,
/// so results do not depend on evaluation order.
class RepStream {
 public:
  RepStream(std::uint64_t root_seed, std::uint64_t rep_index);
  std::uint64_t next_u64();
  double uniform();      // (0, 1)
  double normal();       // standard normal, Box-Muller pair cache
  double exponential();  // rate 1
  double gamma(double shape);  // scale 1, Marsaglia-Tsang

 private:
  std::uint64_t state_;
  double cached_normal_ = 0.0;
  bool have_cached_ = false;
};

/// n independent error draws from the given law.
std::vector<double> sample_errors(const MixtureSpec& spec, int n, RepStream& stream);

/// Critical value used by type_one_error for the given model at
/// one-sided level alpha.
double critical_value_for(Model model, int n, double alpha);

/// Simulates the two-sided test at one-sided level alpha under H0 and
/// reports the rejection rate.
SimulationReport type_one_error(const MixtureSpec& spec, int n, double alpha,
                                Model model, long reps, std::uint64_t seed);

/// Simulates the equal-scales-on-k adversarial configuration at ratio
/// threshold a (1 < a < sqrt(n)) and compares the empirical exceedance
/// rate of the ratio statistic with 2 * g_tail(a, n).
AttainmentResult adversarial_attainment(int n, double a, long reps,
                                        std::uint64_t seed);

}  // namespace mixt::mcsim

#endif
