#pragma once

#include <Eigen/Dense>
#include <vector>

#include "xxz/model.hpp"

namespace xxz {

// Dense Hamiltonian of the twisted chain restricted to the M-down-spin
// sector. Bit k of a basis index is the spin on site k (1 = down). The bond
// crossing the seam carries the twist phase; a down spin hopping from site
// L-1 to site 0 picks up exp(-2 i pi phi) and the reverse hop its conjugate,
// so the matrix is Hermitian by construction. The parallel build fills
// columns independently and is bitwise identical to the serial one.
Eigen::MatrixXcd sector_hamiltonian(const ModelParams& params, bool parallel = true);

// Ascending eigenvalues of the sector Hamiltonian.
std::vector<double> sector_spectrum(const ModelParams& params, bool parallel = true);

// Distance from `value` to the nearest entry of a sorted spectrum.
double nearest_gap(const std::vector<double>& spectrum, double value);

}  // namespace xxz
