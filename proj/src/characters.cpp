#include "xxz/characters.hpp"

#include <cmath>
#include <stdexcept>

#include "xxz/states.hpp"

namespace xxz {

std::vector<unsigned long long> partition_counts(int max_part, int max_level) {
  if (max_part < 0 || max_level < 0) {
    throw std::invalid_argument("partition_counts: negative argument");
  }
  std::vector<unsigned long long> p(max_level + 1, 0ull);
  p[0] = 1ull;
  for (int part = 1; part <= max_part; ++part) {
    for (int k = part; k <= max_level; ++k) p[k] += p[k - part];
  }
  return p;
}

int movable_count(int n_plus, int n_minus, double gamma) {
  const double slack = (n_plus + n_minus) * (0.5 - gamma / M_PI) + n_plus + 0.5;
  return static_cast<int>(std::floor(slack + 1e-9));
}

int verify_degeneracy(int L, int n_plus, int n_minus, double gamma, int max_level) {
  if (L % 4 != 0) throw std::invalid_argument("verify_degeneracy: L must be divisible by 4");
  const int m_plus = L / 4 - n_plus;
  const int m_minus = L / 4 - n_minus;
  if (m_plus < 0 || m_minus < 0) {
    throw std::invalid_argument("verify_degeneracy: vacancy count exceeds L/4");
  }
  const auto predicted = partition_counts(movable_count(n_plus, n_minus, gamma), max_level);
  for (int level = 0; level <= max_level; ++level) {
    const auto states = enumerate_excitations_split(L, m_plus, m_minus, level, gamma);
    if (states.size() != predicted[level]) return level;
  }
  return -1;
}

}  // namespace xxz
