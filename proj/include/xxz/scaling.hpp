#pragma once

#include <functional>
#include <vector>

#include "xxz/cft.hpp"
#include "xxz/solver.hpp"

namespace xxz {

// One system size of a finite-size scan.
struct ScanRow {
  int L = 0;
  double e_L = 0.0;     // measured energy per site
  double e_pred = 0.0;  // predicted energy per site
  double a_L = 0.0;     // -6 L^2 (e_L - e_inf) / (pi v_F)
  double P_L = 0.0;     // measured momentum
  double P_pred = 0.0;  // predicted momentum
  double residual = 0.0;
  int iterations = 0;
};

struct ScanResult {
  double gamma = 0.0;
  double phi = 0.0;
  double e_inf = 0.0;
  std::vector<ScanRow> rows;
};

// Solves the configuration produced by numbers_for(L) at each size and
// tabulates measured against predicted observables. Sizes are visited in
// the given order; each solve is warm-started from the previous one by
// carrying over the deviation of the roots from their infinite-size
// positions, interpolated in the scaled Bethe numbers.
ScanResult scan(double gamma, double phi, const std::vector<int>& sizes,
                const std::function<BetheNumberSet(int)>& numbers_for,
                const SolverOptions& options = {});

// Warm start: the solved roots of `previous` transplanted onto the target
// numbers. Falls back to the cold guess if the transplant loses ordering.
std::vector<double> warm_start(const BetheState& previous, const ModelParams& params,
                               const BetheNumberSet& numbers);

// Richardson step for a sequence a(L), a(2L), a(4L) approaching a limit with
// a single power-law correction. Estimates the rate from consecutive
// differences; falls back to rate 2 when the differences do not contract.
struct Extrapolation {
  double value = 0.0;
  double rate = 0.0;
  double error = 0.0;  // spread of the last two extrapolants; 0 for one triple
};

Extrapolation richardson(double a1, double a2, double a3);

// Extrapolated Casimir amplitude: Richardson over every consecutive triple
// of rows, reporting the last extrapolant and the spread to the previous one.
Extrapolation extract_amplitude(const ScanResult& result);

}  // namespace xxz
