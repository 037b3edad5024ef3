#include "xxz/kernel.hpp"

#include <algorithm>
#include <cmath>

namespace xxz {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_gamma(double gamma) {
  if (!(gamma > 0.0) || !(gamma < kPi)) throw std::domain_error("gamma must lie in (0, pi)");
}

// arctan(tanh(lambda) / tan(t)) for t in (0, pi), written so the t = pi/2
// singularity of tan cancels: sin(t) > 0 keeps atan2 on the principal sheet.
double phase(double lambda, double t) {
  return std::atan2(std::tanh(lambda) * std::cos(t), std::sin(t)) / kPi;
}

// sin(2t) / (2*pi*(sin(t)^2 + sinh(lambda)^2)), the derivative of phase().
double phase_prime(double lambda, double t) {
  const double sh = std::sinh(lambda);
  return std::sin(2.0 * t) / (2.0 * kPi * (std::sin(t) * std::sin(t) + sh * sh));
}

// sinh(a*w) / sinh(b*w) with the w -> 0 limit a/b taken by series.
std::complex<double> sinh_ratio(double a, double b, std::complex<double> w) {
  if (std::abs(w) < 1e-7) {
    // sinh(aw)/sinh(bw) = (a/b)(1 + (a^2-b^2) w^2/6 + O(w^4))
    return (a / b) * (1.0 + (a * a - b * b) * w * w / 6.0);
  }
  const std::complex<double> den = std::sinh(b * w);
  if (std::abs(den) < 1e-300) throw std::domain_error("kernel Fourier transform evaluated at a pole");
  return std::sinh(a * w) / den;
}

}  // namespace

KernelConstants KernelConstants::for_gamma(double gamma) {
  check_gamma(gamma);
  KernelConstants k;
  k.r_inf = 0.5 - gamma / kPi;
  k.alpha = 0.25;
  k.v_f = kPi / gamma;
  k.g = 1.0 + 2.0 * k.r_inf;
  return k;
}

double s_fn(double lambda, double gamma) {
  check_gamma(gamma);
  return phase(lambda, 0.5 * gamma);
}

double r_fn(double lambda, double gamma) {
  check_gamma(gamma);
  return phase(lambda, gamma);
}

double s_prime(double lambda, double gamma) {
  check_gamma(gamma);
  return phase_prime(lambda, 0.5 * gamma);
}

double r_prime(double lambda, double gamma) {
  check_gamma(gamma);
  return phase_prime(lambda, gamma);
}

double sigma_inf(double lambda, double gamma) {
  check_gamma(gamma);
  return 1.0 / (2.0 * gamma * std::cosh(kPi * lambda / gamma));
}

double z_inf(double lambda, double gamma) {
  check_gamma(gamma);
  return std::atan(std::tanh(kPi * lambda / (2.0 * gamma))) / kPi;
}

double z_inf_inverse(double x, double gamma) {
  check_gamma(gamma);
  if (!(std::abs(x) < 0.25)) throw std::domain_error("z_inf_inverse requires |x| < 1/4");
  return (2.0 * gamma / kPi) * std::atanh(std::tan(kPi * x));
}

std::complex<double> kernel_fourier_s(std::complex<double> omega, double gamma) {
  check_gamma(gamma);
  return sinh_ratio(0.5 * (kPi - gamma), 0.5 * kPi, omega);
}

std::complex<double> kernel_fourier_r(std::complex<double> omega, double gamma) {
  check_gamma(gamma);
  return sinh_ratio(0.5 * (kPi - 2.0 * gamma), 0.5 * kPi, omega);
}

std::complex<double> sigma_inf_fourier(std::complex<double> omega, double gamma) {
  check_gamma(gamma);
  const std::complex<double> den = std::cosh(0.5 * gamma * omega);
  if (std::abs(den) < 1e-300) throw std::domain_error("sigma_inf_fourier evaluated at a pole");
  return 0.5 / den;
}

std::vector<std::complex<double>> omega_set(double gamma, double cutoff) {
  check_gamma(gamma);
  if (!(cutoff >= 0.0)) throw std::invalid_argument("cutoff must be nonnegative");
  // Collect magnitudes first: the two families can coincide (gamma = pi/n),
  // and merging must happen before the +- pairs are laid out.
  std::vector<double> ys;
  const double step1 = 2.0 / (1.0 - gamma / kPi);
  for (double y = 0.0; y <= cutoff; y += step1) ys.push_back(y);
  const double vf = kPi / gamma;
  for (double y = vf; y <= cutoff; y += 2.0 * vf) ys.push_back(y);
  std::sort(ys.begin(), ys.end());
  std::vector<std::complex<double>> out;
  double last = -1.0;
  for (double y : ys) {
    if (!out.empty() && y - last < 1e-9 * std::max(1.0, y)) continue;
    if (y == 0.0) {
      out.emplace_back(0.0, 0.0);
    } else {
      out.emplace_back(0.0, -y);
      out.emplace_back(0.0, y);
    }
    last = y;
  }
  return out;
}

}  // namespace xxz
