#pragma once

#include <complex>
#include <vector>

#include "xxz/model.hpp"

namespace xxz {

// Bare one-body phase s and two-body phase r of the logarithmic Bethe
// equations, with derivatives, thermodynamic root density and counting
// function, and the Fourier-space data controlling finite-size corrections.
//
// s(lambda) = (1/pi) * arctan(tanh lambda / tan(gamma/2))
// r(lambda) = (1/pi) * arctan(tanh lambda / tan(gamma))
//
// Both are implemented through atan2, which keeps them odd, increasing in
// the s case, continuous on all of R for every gamma in (0, pi), and well
// defined at gamma = pi/2 where tan(gamma) blows up (r vanishes there).
// These coincide with the principal-branch log forms; see the kernel tests.

double s_fn(double lambda, double gamma);
double r_fn(double lambda, double gamma);

// Analytic derivatives; even, decaying like exp(-2|lambda|).
double s_prime(double lambda, double gamma);
double r_prime(double lambda, double gamma);

// Thermodynamic root density sigma_inf = 1 / (2*gamma*cosh(pi*lambda/gamma))
// and its primitive z_inf with z_inf(+-inf) = +-1/4.
double sigma_inf(double lambda, double gamma);
double z_inf(double lambda, double gamma);

// Exact inverse of z_inf on (-1/4, 1/4). Throws std::domain_error outside.
double z_inf_inverse(double x, double gamma);

// Fourier transforms (convention: f_hat(w) = integral f(x) e^{i w x} dx) of
// s' and r'. Entire-function ratios of sinh except for poles on the
// imaginary axis; the removable point w = 0 is handled by its limit.
// Throws std::domain_error at a pole.
std::complex<double> kernel_fourier_s(std::complex<double> omega, double gamma);
std::complex<double> kernel_fourier_r(std::complex<double> omega, double gamma);

// Closed form of the Fourier transform of sigma_inf: 1/(2 cosh(gamma w /2)).
// Satisfies sigma_hat = s_hat / (1 + r_hat) away from poles.
std::complex<double> sigma_inf_fourier(std::complex<double> omega, double gamma);

// Zeros of 1 + kernel_fourier_r on the imaginary axis with |omega| <= cutoff:
// the two families 2ni/(1 - gamma/pi) and (pi/gamma)(2m+1)i, merged, deduped
// and sorted by modulus. The point 0 is listed with the first family even
// though 1 + r_hat(0) = g != 0 there.
std::vector<std::complex<double>> omega_set(double gamma, double cutoff);

}  // namespace xxz
