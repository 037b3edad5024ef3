#include "xxz/assembly.hpp"

#include <cstddef>

#include "xxz/kernel.hpp"

namespace xxz {

namespace {

double residual_row(const std::vector<double>& lambda, double gamma, int L, double phi_eff,
                    double x_i, std::size_t i) {
  const std::size_t m = lambda.size();
  double acc = 0.0;
  for (std::size_t j = 0; j < m; ++j) acc += r_fn(lambda[i] - lambda[j], gamma);
  return s_fn(lambda[i], gamma) - acc / L + phi_eff / L - x_i;
}

void jacobian_row(const std::vector<double>& lambda, double gamma, int L, std::size_t i,
                  Eigen::MatrixXd& out) {
  const std::size_t m = lambda.size();
  double diag = s_prime(lambda[i], gamma);
  for (std::size_t k = 0; k < m; ++k) {
    if (k == i) continue;
    const double rp = r_prime(lambda[i] - lambda[k], gamma);
    diag -= rp / L;
    out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = rp / L;
  }
  out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = diag;
}

}  // namespace

void residual_serial(const std::vector<double>& lambda, const std::vector<double>& x,
                     double gamma, int L, double phi_eff, std::vector<double>& out) {
  const std::size_t m = lambda.size();
  out.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    out[i] = residual_row(lambda, gamma, L, phi_eff, x[i], i);
  }
}

void residual_parallel(const std::vector<double>& lambda, const std::vector<double>& x,
                       double gamma, int L, double phi_eff, std::vector<double>& out) {
  const std::size_t m = lambda.size();
  out.resize(m);
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < m; ++i) {
    out[i] = residual_row(lambda, gamma, L, phi_eff, x[i], i);
  }
}

void jacobian_serial(const std::vector<double>& lambda, double gamma, int L,
                     Eigen::MatrixXd& out) {
  const auto m = static_cast<Eigen::Index>(lambda.size());
  out.resize(m, m);
  for (std::size_t i = 0; i < lambda.size(); ++i) jacobian_row(lambda, gamma, L, i, out);
}

void jacobian_parallel(const std::vector<double>& lambda, double gamma, int L,
                       Eigen::MatrixXd& out) {
  const auto m = static_cast<Eigen::Index>(lambda.size());
  out.resize(m, m);
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < lambda.size(); ++i) jacobian_row(lambda, gamma, L, i, out);
}

}  // namespace xxz
