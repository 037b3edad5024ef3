#pragma once

#include <Eigen/Dense>
#include <vector>

namespace xxz {

// Dense assembly of the logarithmic Bethe system and its Jacobian.
//
//   F_i = s(l_i) - (1/L) sum_j r(l_i - l_j) + phi_eff/L - x_i
//   J_ii = s'(l_i) - (1/L) sum_{j != i} r'(l_i - l_j)
//   J_ik = (1/L) r'(l_i - l_k)                       (k != i)
//
// The parallel builds split by row; each row accumulates its j sum in the
// same fixed order as the serial build, so results are bitwise identical.

void residual_serial(const std::vector<double>& lambda, const std::vector<double>& x,
                     double gamma, int L, double phi_eff, std::vector<double>& out);
void residual_parallel(const std::vector<double>& lambda, const std::vector<double>& x,
                       double gamma, int L, double phi_eff, std::vector<double>& out);

void jacobian_serial(const std::vector<double>& lambda, double gamma, int L,
                     Eigen::MatrixXd& out);
void jacobian_parallel(const std::vector<double>& lambda, double gamma, int L,
                       Eigen::MatrixXd& out);

}  // namespace xxz
