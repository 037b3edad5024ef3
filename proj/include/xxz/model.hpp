#pragma once

#include <stdexcept>

namespace xxz {

// Chain parameters. gamma parametrizes the anisotropy Delta = -cos(gamma),
// restricted to the critical window 0 < gamma < pi. phi is the boundary
// twist in units of 2*pi (one flux quantum is phi = 1).
struct ModelParams {
  double gamma = 0.0;
  double phi = 0.0;
  int L = 0;  // sites, even
  int M = 0;  // down spins / Bethe roots, 1 <= M <= L/2

  void validate() const {
    if (!(gamma > 0.0) || !(gamma < 3.14159265358979323846))
      throw std::domain_error("gamma must lie in (0, pi)");
    if (L <= 0 || L % 2 != 0) throw std::invalid_argument("L must be positive and even");
    if (M < 1 || M > L / 2) throw std::invalid_argument("M must satisfy 1 <= M <= L/2");
  }
};

// Constants fixed by gamma alone.
struct KernelConstants {
  double r_inf;   // asymptotic value of the two-body phase: 1/2 - gamma/pi
  double alpha;   // asymptotic root density integral: 1/4
  double v_f;     // Fermi velocity pi/gamma; decay rate of sigma_inf
  double g;       // coupling constant 1 + 2*r_inf = 2(1 - gamma/pi)

  static KernelConstants for_gamma(double gamma);
};

// Bethe numbers are half-odd integers once the parity of M is absorbed
// into the twist: phi_eff = phi + 1/2 for odd M.
inline double effective_twist(double phi, int M) {
  return (M % 2 != 0) ? phi + 0.5 : phi;
}

}  // namespace xxz
