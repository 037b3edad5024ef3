#include "xxz/observables.hpp"

#include <cmath>
#include <stdexcept>

#include "xxz/kernel.hpp"
#include "xxz/quadrature.hpp"

namespace xxz {

double functional_sum(const BetheState& state, const std::function<double(double)>& f) {
  double acc = 0.0;
  for (double root : state.roots) acc += f(root);
  return acc / state.params.L;
}

double functional_limit(const std::function<double(double)>& f, double gamma) {
  return integrate_line([&](double x) { return f(x) * sigma_inf(x, gamma); });
}

double functional_deviation(const BetheState& state, const std::function<double(double)>& f) {
  return functional_sum(state, f) - functional_limit(f, state.params.gamma);
}

double energy(const BetheState& state) {
  const double gamma = state.params.gamma;
  return -2.0 * M_PI * functional_sum(state, [gamma](double x) { return s_prime(x, gamma); });
}

double momentum(const BetheState& state) {
  const double gamma = state.params.gamma;
  return 2.0 * M_PI * functional_sum(state, [gamma](double x) { return s_fn(x, gamma); });
}

double transfer_kernel(double mu, double lambda, double gamma) {
  const double sm = std::sin(lambda - 0.5 * gamma);
  const double sp = std::sin(lambda + 0.5 * gamma);
  const double sh2 = std::sinh(mu) * std::sinh(mu);
  // The line integral probes |mu| far past sinh overflow; switch to the
  // tail-safe form once sh2 dominates (log1p(x/inf) = 0, no nan).
  if (sh2 > 1.0) {
    return 0.5 * (std::log1p(sm * sm / sh2) - std::log1p(sp * sp / sh2));
  }
  return 0.5 * std::log((sh2 + sm * sm) / (sh2 + sp * sp));
}

namespace {

void check_strip(double lambda, double gamma) {
  if (!(lambda > -0.5 * gamma && lambda < 0.0)) {
    throw std::domain_error("transfer eigenvalue: need -gamma/2 < lambda < 0");
  }
}

}  // namespace

double transfer_log_eigenvalue(const BetheState& state, double lambda) {
  const double gamma = state.params.gamma;
  check_strip(lambda, gamma);
  const double sum = functional_sum(
      state, [lambda, gamma](double mu) { return transfer_kernel(mu, lambda, gamma); });
  return std::log(std::sin(lambda + gamma)) + sum;
}

double transfer_log_limit(double lambda, double gamma) {
  check_strip(lambda, gamma);
  const double integral = functional_limit(
      [lambda, gamma](double mu) { return transfer_kernel(mu, lambda, gamma); }, gamma);
  return std::log(std::sin(lambda + gamma)) + integral;
}

}  // namespace xxz
