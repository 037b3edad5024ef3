#pragma once

#include <stdexcept>
#include <vector>

#include "xxz/model.hpp"
#include "xxz/states.hpp"

namespace xxz {

struct SolverOptions {
  int max_iterations = 60;
  double tolerance = 1e-13;  // max-norm of the residual
  double max_step = 1.0;     // max-norm cap on the Newton update
  int max_backtracks = 30;
  bool parallel = true;  // row-parallel assembly; bitwise equal to serial
};

struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Newton ran out of iterations or backtracking could not restore descent.
struct NonConvergence : SolverError {
  using SolverError::SolverError;
};
// No damping factor kept the roots strictly ordered.
struct OrderViolation : SolverError {
  using SolverError::SolverError;
};

// A solved real-root configuration.
struct BetheState {
  ModelParams params;
  BetheNumberSet numbers;
  std::vector<double> roots;  // strictly increasing
  double phi_eff = 0.0;
  double residual_norm = 0.0;  // max-norm at exit
  int iterations = 0;
};

// Free-fermion-density starting point: root k at the exact infinite-size
// preimage of I_k/L, clamped inside the open image interval (-1/4, 1/4).
std::vector<double> initial_guess(const ModelParams& params, const BetheNumberSet& numbers);

// Damped Newton iteration on the logarithmic Bethe system with an analytic
// Jacobian. Step halving insists on strict root ordering and a decrease of
// the residual 2-norm. Throws NonConvergence or OrderViolation on failure.
BetheState solve(const ModelParams& params, const BetheNumberSet& numbers,
                 const SolverOptions& options = {});

// Same iteration from a caller-supplied starting point (warm starts).
BetheState solve(const ModelParams& params, const BetheNumberSet& numbers,
                 std::vector<double> start, const SolverOptions& options = {});

// Counting function of a solved state at an arbitrary point:
// z_L(l) = s(l) - (1/L) sum_j r(l - l_j) + phi_eff/L.
double counting_function(const BetheState& state, double lambda);

}  // namespace xxz
