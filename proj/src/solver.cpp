#include "xxz/solver.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "xxz/assembly.hpp"
#include "xxz/kernel.hpp"

namespace xxz {

namespace {

bool strictly_increasing(const std::vector<double>& v) {
  for (std::size_t k = 1; k < v.size(); ++k) {
    if (!(v[k] > v[k - 1])) return false;
  }
  return true;
}

double max_norm(const std::vector<double>& v) {
  double out = 0.0;
  for (double x : v) out = std::max(out, std::abs(x));
  return out;
}

double two_norm(const std::vector<double>& v) {
  double out = 0.0;
  for (double x : v) out += x * x;
  return std::sqrt(out);
}

}  // namespace

std::vector<double> initial_guess(const ModelParams& params, const BetheNumberSet& numbers) {
  const double edge = 0.25 - 0.5 / params.L;
  std::vector<double> out(numbers.size());
  for (int k = 0; k < numbers.size(); ++k) {
    const double x = std::clamp(numbers.value(k) / params.L, -edge, edge);
    out[k] = z_inf_inverse(x, params.gamma);
  }
  return out;
}

BetheState solve(const ModelParams& params, const BetheNumberSet& numbers,
                 const SolverOptions& options) {
  return solve(params, numbers, initial_guess(params, numbers), options);
}

BetheState solve(const ModelParams& params, const BetheNumberSet& numbers,
                 std::vector<double> start, const SolverOptions& options) {
  params.validate();
  if (numbers.size() != params.M) {
    throw std::invalid_argument("solve: numbers.size() != M");
  }
  if (static_cast<int>(start.size()) != params.M) {
    throw std::invalid_argument("solve: start.size() != M");
  }

  const double phi_eff = effective_twist(params.phi, params.M);
  std::vector<double> x(numbers.size());
  for (int k = 0; k < numbers.size(); ++k) x[k] = numbers.value(k) / params.L;

  auto residual = [&](const std::vector<double>& lambda, std::vector<double>& out) {
    if (options.parallel) {
      residual_parallel(lambda, x, params.gamma, params.L, phi_eff, out);
    } else {
      residual_serial(lambda, x, params.gamma, params.L, phi_eff, out);
    }
  };

  std::vector<double> lambda = std::move(start);
  std::vector<double> f, f_trial, trial;
  Eigen::MatrixXd jac;
  residual(lambda, f);

  BetheState state;
  state.params = params;
  state.numbers = numbers;
  state.phi_eff = phi_eff;

  for (int iter = 0; iter < options.max_iterations; ++iter) {
    state.residual_norm = max_norm(f);
    if (state.residual_norm < options.tolerance) {
      // Ordering is a post-check: transient crossings during the iteration
      // are harmless, but a crossed fixed point means the configuration has
      // no real-root solution of this form.
      if (!strictly_increasing(lambda)) {
        throw OrderViolation("solve: converged roots are not strictly ordered");
      }
      state.roots = std::move(lambda);
      state.iterations = iter;
      return state;
    }

    if (options.parallel) {
      jacobian_parallel(lambda, params.gamma, params.L, jac);
    } else {
      jacobian_serial(lambda, params.gamma, params.L, jac);
    }
    Eigen::Map<const Eigen::VectorXd> f_vec(f.data(), static_cast<Eigen::Index>(f.size()));
    Eigen::VectorXd step = jac.partialPivLu().solve(-f_vec);

    const double step_norm = step.lpNorm<Eigen::Infinity>();
    if (step_norm > options.max_step) step *= options.max_step / step_norm;

    const double f_norm = two_norm(f);
    double damping = 1.0;
    bool accepted = false;
    trial.resize(lambda.size());
    for (int bt = 0; bt <= options.max_backtracks; ++bt) {
      for (std::size_t k = 0; k < lambda.size(); ++k) {
        trial[k] = lambda[k] + damping * step[static_cast<Eigen::Index>(k)];
      }
      residual(trial, f_trial);
      if (two_norm(f_trial) < f_norm) {
        lambda.swap(trial);
        f.swap(f_trial);
        accepted = true;
        break;
      }
      damping *= 0.5;
    }
    if (!accepted) {
      throw NonConvergence("solve: backtracking stalled at iteration " + std::to_string(iter) +
                           ", residual " + std::to_string(f_norm));
    }
  }
  throw NonConvergence("solve: no convergence after " + std::to_string(options.max_iterations) +
                       " iterations, residual " + std::to_string(max_norm(f)));
}

double counting_function(const BetheState& state, double lambda) {
  double acc = 0.0;
  for (double root : state.roots) acc += r_fn(lambda - root, state.params.gamma);
  return s_fn(lambda, state.params.gamma) + (state.phi_eff - acc) / state.params.L;
}

}  // namespace xxz
