#pragma once

#include <functional>

#include "xxz/solver.hpp"

namespace xxz {

// Root-averaged functional S_L(f) = (1/L) sum_i f(l_i).
double functional_sum(const BetheState& state, const std::function<double(double)>& f);

// Thermodynamic value of the same functional, integral against the
// infinite-size root density. f must decay at least exponentially.
double functional_limit(const std::function<double(double)>& f, double gamma);

// Finite-size deviation w_L(f) = S_L(f) - integral of f against the
// infinite-size density.
double functional_deviation(const BetheState& state, const std::function<double(double)>& f);

// Energy per site, e_L = -2 pi S_L(s').
double energy(const BetheState& state);

// Momentum observable 2 pi S_L(s); vanishes on parity-symmetric states and
// carries the O(1/L) winding plus the O(1/L^2) conformal spin otherwise.
double momentum(const BetheState& state);

// Summand of the transfer-matrix eigenvalue: the per-root contribution at
// spectral parameter l in the strip -gamma/2 < l < 0.
double transfer_kernel(double mu, double lambda, double gamma);

// Log of the transfer-matrix eigenvalue per site, f_L(l) = log sin(l + gamma)
// + S_L(F_l), and its thermodynamic limit.
double transfer_log_eigenvalue(const BetheState& state, double lambda);
double transfer_log_limit(double lambda, double gamma);

}  // namespace xxz
