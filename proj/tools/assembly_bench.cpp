// Timing harness for the parallel assembly paths against their serial
// reference implementations. Also asserts bitwise agreement, since the
// parallel builds keep every row sum in serial order.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "xxz/assembly.hpp"
#include "xxz/ed.hpp"
#include "xxz/kernel.hpp"
#include "xxz/model.hpp"
#include "xxz/solver.hpp"
#include "xxz/states.hpp"

namespace {

template <typename F>
double time_ms(int reps, F&& body) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs parallel assembly timings"};
  int roots = 512;
  int reps = 5;
  int ed_L = 12;
  double gamma = 0.55 * 3.14159265358979323846;
  app.add_option("--roots", roots, "number of Bethe roots for the dense system");
  app.add_option("--reps", reps, "repetitions, best time wins");
  app.add_option("--ed-L", ed_L, "chain length for the sector Hamiltonian build");
  app.add_option("--gamma", gamma, "anisotropy in radians");
  CLI11_PARSE(app, argc, argv);

  const int L = 4 * roots;
  xxz::ModelParams params{gamma, 0.0, L, roots};
  const xxz::BetheNumberSet numbers = xxz::ground_state_numbers(L, roots);
  const std::vector<double> lambda = xxz::initial_guess(params, numbers);
  std::vector<double> x(numbers.doubled.size());
  for (int k = 0; k < numbers.size(); ++k) x[k] = numbers.value(k) / L;

  std::vector<double> f_serial, f_parallel;
  const double t_res_s = time_ms(
      reps, [&] { xxz::residual_serial(lambda, x, gamma, L, 0.0, f_serial); });
  const double t_res_p = time_ms(
      reps, [&] { xxz::residual_parallel(lambda, x, gamma, L, 0.0, f_parallel); });
  const bool res_equal = f_serial == f_parallel;

  Eigen::MatrixXd j_serial, j_parallel;
  const double t_jac_s =
      time_ms(reps, [&] { xxz::jacobian_serial(lambda, gamma, L, j_serial); });
  const double t_jac_p =
      time_ms(reps, [&] { xxz::jacobian_parallel(lambda, gamma, L, j_parallel); });
  const bool jac_equal = (j_serial.array() == j_parallel.array()).all();

  xxz::ModelParams ed_params{gamma, 0.1, ed_L, ed_L / 2};
  Eigen::MatrixXcd h_serial, h_parallel;
  const double t_ed_s =
      time_ms(reps, [&] { h_serial = xxz::sector_hamiltonian(ed_params, false); });
  const double t_ed_p =
      time_ms(reps, [&] { h_parallel = xxz::sector_hamiltonian(ed_params, true); });
  const bool ed_equal = (h_serial.array() == h_parallel.array()).all();

  std::printf("%-22s %10s %10s %8s %s\n", "kernel", "serial/ms", "parallel/ms", "speedup",
              "bitwise");
  std::printf("%-22s %10.3f %10.3f %8.2f %s\n", "residual", t_res_s, t_res_p,
              t_res_s / t_res_p, res_equal ? "equal" : "DIFFER");
  std::printf("%-22s %10.3f %10.3f %8.2f %s\n", "jacobian", t_jac_s, t_jac_p,
              t_jac_s / t_jac_p, jac_equal ? "equal" : "DIFFER");
  std::printf("%-22s %10.3f %10.3f %8.2f %s\n", "sector hamiltonian", t_ed_s, t_ed_p,
              t_ed_s / t_ed_p, ed_equal ? "equal" : "DIFFER");
  return (res_equal && jac_equal && ed_equal) ? 0 : 1;
}
