#include "xxz/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "xxz/kernel.hpp"
#include "xxz/observables.hpp"

namespace xxz {

namespace {

bool strictly_increasing(const std::vector<double>& v) {
  for (std::size_t k = 1; k < v.size(); ++k) {
    if (!(v[k] > v[k - 1])) return false;
  }
  return true;
}

// Piecewise-linear interpolation with flat extension outside the grid.
double interp(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
  if (x <= xs.front()) return ys.front();
  if (x >= xs.back()) return ys.back();
  const auto it = std::upper_bound(xs.begin(), xs.end(), x);
  const std::size_t hi = static_cast<std::size_t>(it - xs.begin());
  const double t = (x - xs[hi - 1]) / (xs[hi] - xs[hi - 1]);
  return ys[hi - 1] + t * (ys[hi] - ys[hi - 1]);
}

}  // namespace

std::vector<double> warm_start(const BetheState& previous, const ModelParams& params,
                               const BetheNumberSet& numbers) {
  const double gamma = params.gamma;
  const int L_prev = previous.params.L;
  const double edge_prev = 0.25 - 0.5 / L_prev;
  std::vector<double> xs(previous.roots.size()), dev(previous.roots.size());
  for (std::size_t k = 0; k < previous.roots.size(); ++k) {
    const double x =
        std::clamp(previous.numbers.value(static_cast<int>(k)) / L_prev, -edge_prev, edge_prev);
    xs[k] = x;
    dev[k] = previous.roots[k] - z_inf_inverse(x, gamma);
  }

  const double edge = 0.25 - 0.5 / params.L;
  std::vector<double> out(numbers.doubled.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    const double x = std::clamp(numbers.value(static_cast<int>(k)) / params.L, -edge, edge);
    out[k] = z_inf_inverse(x, gamma) + interp(xs, dev, x);
  }
  if (!strictly_increasing(out)) {
    return initial_guess(params, numbers);
  }
  return out;
}

ScanResult scan(double gamma, double phi, const std::vector<int>& sizes,
                const std::function<BetheNumberSet(int)>& numbers_for,
                const SolverOptions& options) {
  ScanResult result;
  result.gamma = gamma;
  result.phi = phi;
  result.e_inf = e_infinity(gamma);
  const double v_f = KernelConstants::for_gamma(gamma).v_f;

  bool have_prev = false;
  BetheState prev;
  for (int L : sizes) {
    const BetheNumberSet numbers = numbers_for(L);
    ModelParams params{gamma, phi, L, numbers.size()};
    BetheState state = have_prev ? solve(params, numbers, warm_start(prev, params, numbers), options)
                                 : solve(params, numbers, options);
    const Prediction pred = predict(params, numbers);

    ScanRow row;
    row.L = L;
    row.e_L = energy(state);
    row.e_pred = pred.energy;
    row.a_L = -6.0 * L * L * (row.e_L - result.e_inf) / (M_PI * v_f);
    row.P_L = momentum(state);
    row.P_pred = pred.momentum;
    row.residual = state.residual_norm;
    row.iterations = state.iterations;
    result.rows.push_back(row);

    prev = std::move(state);
    have_prev = true;
  }
  return result;
}

Extrapolation richardson(double a1, double a2, double a3) {
  const double d1 = a1 - a2;
  const double d2 = a2 - a3;
  Extrapolation out;
  out.rate = 2.0;
  if (d2 != 0.0) {
    const double ratio = d1 / d2;
    if (ratio > 1.0 && std::isfinite(ratio)) out.rate = std::log2(ratio);
  }
  const double factor = std::exp2(out.rate) - 1.0;
  out.value = a3 + (a3 - a2) / factor;
  return out;
}

Extrapolation extract_amplitude(const ScanResult& result) {
  const auto& rows = result.rows;
  if (rows.size() < 3) throw std::invalid_argument("extract_amplitude: need at least 3 rows");
  Extrapolation out;
  bool have_prev = false;
  double prev = 0.0;
  for (std::size_t k = 2; k < rows.size(); ++k) {
    if (have_prev) prev = out.value;
    out = richardson(rows[k - 2].a_L, rows[k - 1].a_L, rows[k].a_L);
    if (have_prev) out.error = std::abs(out.value - prev);
    have_prev = true;
  }
  return out;
}

}  // namespace xxz
