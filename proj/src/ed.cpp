#include "xxz/ed.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace xxz {

namespace {

struct SectorBasis {
  std::vector<std::uint32_t> states;
  std::vector<std::int32_t> index;  // -1 for configurations outside the sector
};

SectorBasis build_basis(int L, int M) {
  SectorBasis basis;
  basis.index.assign(std::size_t{1} << L, -1);
  for (std::uint32_t st = 0; st < (std::uint32_t{1} << L); ++st) {
    if (__builtin_popcount(st) == M) {
      basis.index[st] = static_cast<std::int32_t>(basis.states.size());
      basis.states.push_back(st);
    }
  }
  return basis;
}

void fill_column(const SectorBasis& basis, int L, double diag_bond, double hop,
                 std::complex<double> seam, Eigen::MatrixXcd& h, std::int32_t c) {
  const std::uint32_t st = basis.states[c];
  for (int k = 0; k < L; ++k) {
    const int k2 = (k + 1) % L;
    const unsigned b1 = (st >> k) & 1u;
    const unsigned b2 = (st >> k2) & 1u;
    if (b1 == b2) continue;
    h(c, c) += diag_bond;
    const std::uint32_t st2 = st ^ (1u << k) ^ (1u << k2);
    std::complex<double> amp(hop, 0.0);
    if (k2 == 0) amp *= (b1 == 1u) ? seam : std::conj(seam);
    h(basis.index[st2], c) += amp;
  }
}

}  // namespace

Eigen::MatrixXcd sector_hamiltonian(const ModelParams& params, bool parallel) {
  params.validate();
  if (params.L > 20) {
    throw std::invalid_argument("sector_hamiltonian: L > 20 is too large for dense storage");
  }
  const SectorBasis basis = build_basis(params.L, params.M);
  const auto dim = static_cast<Eigen::Index>(basis.states.size());

  const double sg = std::sin(params.gamma);
  const double diag_bond = -std::cos(params.gamma) / sg;
  const double hop = -1.0 / sg;
  const std::complex<double> seam = std::exp(std::complex<double>(0.0, -2.0 * M_PI * params.phi));

  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (std::int32_t c = 0; c < static_cast<std::int32_t>(dim); ++c) {
      fill_column(basis, params.L, diag_bond, hop, seam, h, c);
    }
  } else {
    for (std::int32_t c = 0; c < static_cast<std::int32_t>(dim); ++c) {
      fill_column(basis, params.L, diag_bond, hop, seam, h, c);
    }
  }
  return h;
}

std::vector<double> sector_spectrum(const ModelParams& params, bool parallel) {
  const Eigen::MatrixXcd h = sector_hamiltonian(params, parallel);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("sector_spectrum: eigensolver failed");
  }
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

double nearest_gap(const std::vector<double>& spectrum, double value) {
  if (spectrum.empty()) throw std::invalid_argument("nearest_gap: empty spectrum");
  const auto it = std::lower_bound(spectrum.begin(), spectrum.end(), value);
  double best = std::numeric_limits<double>::infinity();
  if (it != spectrum.end()) best = std::min(best, std::abs(*it - value));
  if (it != spectrum.begin()) best = std::min(best, std::abs(*(it - 1) - value));
  return best;
}

}  // namespace xxz
