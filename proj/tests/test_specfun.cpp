#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "mixt/specfun.hpp"

using namespace mixt::specfun;

TEST_CASE("log_gamma known values") {
  CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(M_PI)).epsilon(1e-13));
  CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-13));
  // high-precision references across [0.5, 1e6]
  const struct {
    double x;
    double ref;
  } refs[] = {
      {0.5, 0.57236494292470008707},   {1.3, -0.10817480950786047846},
      {7.0, 6.5792512120101009951},    {123.4, 469.33609744219058579},
      {5678.0, 43401.240701714117363}, {1e5, 1051287.7089736568949},
      {9.9e5, 12677399.636098171261},  {1e6, 12815504.56914761166},
  };
  for (const auto& r : refs) {
    CHECK(log_gamma(r.x) == doctest::Approx(r.ref).epsilon(1e-13));
  }
  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(log_gamma(-2.0), std::domain_error);
}

TEST_CASE("reg_inc_beta endpoints and symmetry point") {
  CHECK(reg_inc_beta(2.0, 3.0, 0.0) == 0.0);
  CHECK(reg_inc_beta(2.0, 3.0, 1.0) == 1.0);
  CHECK(reg_inc_beta(0.5, 0.5, 0.5) == doctest::Approx(0.5).epsilon(1e-12));
  // arcsine law closed form: I_x(1/2,1/2) = (2/pi) asin(sqrt(x))
  for (double x : {0.1, 0.3, 0.7, 0.95}) {
    CHECK(reg_inc_beta(0.5, 0.5, x) ==
          doctest::Approx(2.0 / M_PI * std::asin(std::sqrt(x))).epsilon(1e-12));
  }
  CHECK_THROWS_AS(reg_inc_beta(1.0, 1.0, -0.1), std::domain_error);
  CHECK_THROWS_AS(reg_inc_beta(1.0, 1.0, 1.1), std::domain_error);
  CHECK_THROWS_AS(reg_inc_beta(0.0, 1.0, 0.5), std::domain_error);
}

TEST_CASE("reg_inc_beta monotone in x") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> ab(0.2, 8.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double a = ab(rng);
    const double b = ab(rng);
    double prev = -1.0;
    for (int i = 0; i <= 200; ++i) {
      const double v = reg_inc_beta(a, b, i / 200.0);
      CHECK(v >= prev - 1e-14);
      prev = v;
    }
  }
}

TEST_CASE("student t closed forms") {
  // nu = 1: Cauchy
  CHECK(student_t_cdf(1.0, 1) == doctest::Approx(0.75).epsilon(1e-12));
  for (double t : {-3.0, -0.4, 0.2, 2.5}) {
    CHECK(student_t_cdf(t, 1) == doctest::Approx(cauchy_cdf(t)).epsilon(1e-12));
  }
  // nu = 2: F(t) = 1/2 + t / (2 sqrt(2 + t^2))
  for (double t : {-2.0, 0.0, std::sqrt(2.0), 4.0}) {
    CHECK(student_t_cdf(t, 2) ==
          doctest::Approx(0.5 + t / (2.0 * std::sqrt(2.0 + t * t))).epsilon(1e-12));
  }
  CHECK(student_t_cdf(std::sqrt(2.0), 2) == doctest::Approx(0.853553).epsilon(1e-6));
  CHECK(student_t_cdf(1.962, 1000) == doctest::Approx(0.975).epsilon(2e-4));
  CHECK_THROWS_AS(student_t_cdf(1.0, 0), std::domain_error);
}

TEST_CASE("student t symmetry and normal limit") {
  for (int nu : {1, 2, 3, 7, 30, 500}) {
    for (double t : {0.1, 0.9, 2.3, 5.5}) {
      CHECK(student_t_cdf(t, nu) + student_t_cdf(-t, nu) ==
            doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  for (double t = -5.0; t <= 5.0; t += 0.5) {
    CHECK(std::fabs(student_t_cdf(t, 100000) - normal_cdf(t)) < 1e-3);
  }
}

TEST_CASE("normal and cauchy cdf") {
  CHECK(normal_cdf(0.0) == 0.5);
  CHECK(normal_cdf(1.645) == doctest::Approx(0.95).epsilon(1e-3));
  CHECK(normal_cdf(std::sqrt(3.0)) == doctest::Approx(0.958).epsilon(1e-3));
  CHECK(normal_cdf(3.0) + normal_cdf(-3.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(cauchy_cdf(0.0) == 0.5);
  CHECK(cauchy_cdf(1.0) == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(cauchy_cdf(2.4195) == doctest::Approx(0.5 + std::atan(2.4195) / M_PI).epsilon(1e-14));
  CHECK(cauchy_cdf(2.4195) == doctest::Approx(0.8752).epsilon(1e-4));
}

TEST_CASE("invert_monotone basics") {
  auto id = [](double x) { return x; };
  CHECK(invert_monotone(id, 0.3, 0.0, 1.0, 1e-10) == doctest::Approx(0.3).epsilon(1e-9));
  CHECK(invert_monotone([](double x) { return normal_cdf(x); }, 0.95, 0.0, 10.0, 1e-8) ==
        doctest::Approx(1.6449).epsilon(1e-4));
  CHECK(invert_monotone([](double x) { return student_t_cdf(x, 2); }, 0.975, 0.0, 20.0,
                        1e-8) == doctest::Approx(4.303).epsilon(1e-3));
  // decreasing function
  CHECK(invert_monotone([](double x) { return -x; }, -0.6, 0.0, 1.0, 1e-10) ==
        doctest::Approx(0.6).epsilon(1e-9));
  CHECK_THROWS_AS(invert_monotone(id, 2.0, 0.0, 1.0, 1e-10), std::invalid_argument);
}

TEST_CASE("quantile round-trip property") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> pd(0.01, 0.99);
  for (int nu : {1, 3, 12}) {
    for (int trial = 0; trial < 25; ++trial) {
      const double p = pd(rng);
      const double q = invert_monotone(
          [nu](double x) { return student_t_cdf(x, nu); }, p, -200.0, 200.0, 1e-10);
      CHECK(student_t_cdf(q, nu) == doctest::Approx(p).epsilon(1e-8));
    }
  }
}
