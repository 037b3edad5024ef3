#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "doctest.h"
#include "xxz/kernel.hpp"
#include "xxz/model.hpp"
#include "xxz/quadrature.hpp"

using namespace xxz;

namespace {

const double kPi = M_PI;

// Independent representation: both phase kernels are principal arguments of
// sinh(lambda + i t), up to the constant 1/2.
double arg_form(double lambda, double t) {
  const std::complex<double> z = std::sinh(std::complex<double>(lambda, t));
  return 0.5 - std::arg(z) / kPi;
}

double central_diff(double (*f)(double, double), double lambda, double gamma) {
  const double h = 1e-6;
  return (f(lambda + h, gamma) - f(lambda - h, gamma)) / (2.0 * h);
}

}  // namespace

TEST_CASE("phase kernels match frozen values") {
  CHECK(s_fn(1.0, kPi / 2) == doctest::Approx(0.20718159220269010).epsilon(1e-14));
  CHECK(r_fn(0.7, 0.3 * kPi) == doctest::Approx(0.13170124847099993).epsilon(1e-14));
  CHECK(z_inf(0.9, 0.55 * kPi) == doctest::Approx(0.18879491526764147).epsilon(1e-14));
}

TEST_CASE("phase kernels equal the complex-argument form") {
  const std::vector<double> gammas = {0.1, 0.3 * kPi, kPi / 2, 0.55 * kPi, 0.9 * kPi};
  const std::vector<double> lambdas = {-8.0, -1.3, -0.2, 0.0, 0.4, 2.5, 11.0};
  for (double g : gammas) {
    for (double l : lambdas) {
      CHECK(s_fn(l, g) == doctest::Approx(arg_form(l, g / 2)).epsilon(1e-14));
      CHECK(r_fn(l, g) == doctest::Approx(arg_form(l, g)).epsilon(1e-14));
    }
  }
}

TEST_CASE("r vanishes at the free-fermion point") {
  // Identically zero in exact arithmetic; the double pi/2 leaves the
  // cos(pi/2) ~ 6e-17 rounding residue.
  for (double l : {-3.0, -0.5, 0.0, 0.7, 9.0}) {
    CHECK(std::abs(r_fn(l, kPi / 2)) < 1e-16);
    CHECK(std::abs(r_prime(l, kPi / 2)) < 1e-16);
  }
}

TEST_CASE("kernel asymptotics") {
  const double gamma = 0.55 * kPi;
  CHECK(s_fn(40.0, gamma) == doctest::Approx(0.5 - gamma / (2 * kPi)).epsilon(1e-12));
  CHECK(s_fn(-40.0, gamma) == doctest::Approx(-(0.5 - gamma / (2 * kPi))).epsilon(1e-12));
  CHECK(r_fn(40.0, gamma) == doctest::Approx(0.5 - gamma / kPi).epsilon(1e-12));
  CHECK(s_fn(0.0, gamma) == 0.0);
  CHECK(s_prime(0.0, kPi / 2) == doctest::Approx(1.0 / kPi).epsilon(1e-15));
}

TEST_CASE("derivatives agree with central differences") {
  for (double g : {0.2, 0.3 * kPi, 0.55 * kPi, 2.8}) {
    for (double l : {-2.0, -0.3, 0.0, 0.9, 4.0}) {
      CHECK(s_prime(l, g) == doctest::Approx(central_diff(&s_fn, l, g)).epsilon(1e-8));
      CHECK(r_prime(l, g) == doctest::Approx(central_diff(&r_fn, l, g)).epsilon(1e-8));
    }
  }
}

TEST_CASE("infinite-size counting function inverts") {
  const double gamma = 0.55 * kPi;
  for (double x : {-0.2499, -0.1, 0.0, 0.07, 0.24}) {
    CHECK(z_inf(z_inf_inverse(x, gamma), gamma) == doctest::Approx(x).epsilon(1e-13));
  }
  CHECK_THROWS_AS((void)z_inf_inverse(0.25, gamma), std::domain_error);
  CHECK_THROWS_AS((void)z_inf_inverse(-0.3, gamma), std::domain_error);
}

TEST_CASE("root density integrates to one half") {
  for (double g : {0.3 * kPi, kPi / 2, 0.55 * kPi, 0.9 * kPi}) {
    const double total = integrate_line([g](double x) { return sigma_inf(x, g); });
    CHECK(total == doctest::Approx(0.5).epsilon(1e-10));
  }
}

TEST_CASE("density is the derivative of the counting function") {
  const double gamma = 0.3 * kPi;
  const double h = 1e-6;
  for (double l : {-1.0, 0.0, 0.8, 2.0}) {
    const double fd = (z_inf(l + h, gamma) - z_inf(l - h, gamma)) / (2.0 * h);
    CHECK(sigma_inf(l, gamma) == doctest::Approx(fd).epsilon(1e-8));
  }
}

TEST_CASE("fourier transforms match direct quadrature on the real axis") {
  const double gamma = 0.55 * kPi;
  for (double w : {0.0, 0.5, 1.7, 3.0}) {
    const double shat = integrate_line(
        [gamma, w](double x) { return s_prime(x, gamma) * std::cos(w * x); });
    const double rhat = integrate_line(
        [gamma, w](double x) { return r_prime(x, gamma) * std::cos(w * x); });
    const double sghat = integrate_line(
        [gamma, w](double x) { return sigma_inf(x, gamma) * std::cos(w * x); });
    CHECK(kernel_fourier_s(std::complex<double>(w, 0.0), gamma).real() ==
          doctest::Approx(shat).epsilon(1e-10));
    CHECK(kernel_fourier_r(std::complex<double>(w, 0.0), gamma).real() ==
          doctest::Approx(rhat).epsilon(1e-10));
    CHECK(sigma_inf_fourier(std::complex<double>(w, 0.0), gamma).real() ==
          doctest::Approx(sghat).epsilon(1e-10));
  }
}

TEST_CASE("fourier values at removable and special points") {
  const double gamma = 0.3 * kPi;
  CHECK(kernel_fourier_s(std::complex<double>(0.0, 0.0), gamma).real() ==
        doctest::Approx(1.0 - gamma / kPi).epsilon(1e-14));
  const double v_f = kPi / gamma;
  CHECK(kernel_fourier_s(std::complex<double>(0.0, v_f), gamma).real() ==
        doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-13));
}

TEST_CASE("density transform ties the two kernels together") {
  for (double g : {0.3 * kPi, 0.55 * kPi, 0.8 * kPi}) {
    for (double w : {0.3, 1.1, 2.6}) {
      const std::complex<double> om(w, 0.2);
      const auto lhs = sigma_inf_fourier(om, g) * (1.0 + kernel_fourier_r(om, g));
      const auto rhs = kernel_fourier_s(om, g);
      CHECK(std::abs(lhs - rhs) < 1e-12);
    }
  }
}

TEST_CASE("the density pole cancels the kernel resolvent") {
  // 1 + r'^ vanishes exactly where the density transform has its poles.
  std::mt19937 rng(20240817u);
  std::uniform_real_distribution<double> dist(0.05, 0.95);
  for (int k = 0; k < 20; ++k) {
    const double gamma = dist(rng) * kPi;
    const std::complex<double> pole(0.0, kPi / gamma);
    CHECK(std::abs(1.0 + kernel_fourier_r(pole, gamma)) < 1e-10);
  }
}

TEST_CASE("peak lattice is sorted, deduplicated, and on the zero set") {
  const double gamma = 0.55 * kPi;
  const auto peaks = omega_set(gamma, 12.0);
  REQUIRE(peaks.size() >= 5);
  CHECK(peaks[0] == std::complex<double>(0.0, 0.0));
  CHECK(peaks[1].imag() == doctest::Approx(-kPi / gamma).epsilon(1e-14));
  CHECK(peaks[2].imag() == doctest::Approx(kPi / gamma).epsilon(1e-14));
  CHECK(peaks[4].imag() == doctest::Approx(2.0 / (1.0 - gamma / kPi)).epsilon(1e-14));
  for (std::size_t k = 1; k < peaks.size(); ++k) {
    CHECK(std::abs(peaks[k].imag()) >= std::abs(peaks[k - 1].imag()));
    // Each nonzero member annihilates s'^ or the density denominator.
    const double a = std::abs(kernel_fourier_s(peaks[k], gamma));
    const double b = std::abs(1.0 + kernel_fourier_r(peaks[k], gamma));
    CHECK(std::min(a, b) < 1e-10);
  }
}

TEST_CASE("coinciding peak families are merged") {
  // gamma = pi/3: the odd multiples of i v_F all lie on the first family.
  const auto peaks = omega_set(kPi / 3.0, 12.5);
  for (std::size_t i = 1; i < peaks.size(); ++i) {
    CHECK(std::abs(peaks[i].imag() - peaks[i - 1].imag()) > 1e-9);
  }
  // 0 and +-{3, 6, 9, 12}, nothing else.
  CHECK(peaks.size() == 9);
}

TEST_CASE("gamma outside the critical window is rejected") {
  CHECK_THROWS_AS((void)s_fn(0.1, 0.0), std::domain_error);
  CHECK_THROWS_AS((void)s_fn(0.1, kPi), std::domain_error);
  CHECK_THROWS_AS((void)sigma_inf(0.1, -1.0), std::domain_error);
  CHECK_THROWS_AS((void)omega_set(3.2, 5.0), std::domain_error);
}

TEST_CASE("model parameter validation") {
  ModelParams ok{0.55 * kPi, 0.0, 8, 4};
  CHECK_NOTHROW(ok.validate());
  ModelParams odd = ok;
  odd.L = 7;
  CHECK_THROWS_WITH_AS(odd.validate(), "L must be positive and even", std::invalid_argument);
  ModelParams overfull = ok;
  overfull.M = 5;
  CHECK_THROWS_AS(overfull.validate(), std::invalid_argument);
  ModelParams bad_gamma = ok;
  bad_gamma.gamma = kPi;
  CHECK_THROWS_AS(bad_gamma.validate(), std::domain_error);
}

TEST_CASE("kernel constants") {
  const auto kc = KernelConstants::for_gamma(0.55 * kPi);
  CHECK(kc.r_inf == doctest::Approx(-0.05).epsilon(1e-14));
  CHECK(kc.g == doctest::Approx(0.9).epsilon(1e-14));
  CHECK(kc.v_f == doctest::Approx(kPi / (0.55 * kPi)).epsilon(1e-14));
  CHECK(kc.alpha == 0.25);
  CHECK(effective_twist(0.1, 4) == 0.1);
  CHECK(effective_twist(0.1, 5) == 0.6);
}
