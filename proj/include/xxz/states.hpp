#pragma once

#include <cstdint>
#include <vector>

namespace xxz {

// A set of Bethe numbers, stored doubled so the half-odd integers are exact:
// doubled[k] = 2*I_k, strictly increasing odd integers.
struct BetheNumberSet {
  std::vector<std::int64_t> doubled;

  int size() const { return static_cast<int>(doubled.size()); }
  double value(int k) const { return 0.5 * static_cast<double>(doubled[k]); }

  // Validates oddness and strict ordering; throws std::invalid_argument.
  static BetheNumberSet from_doubled(std::vector<std::int64_t> d);
};

// Packed Fermi-sea numbers. Even M: 2I_k = 2k - M - 1; odd M: 2I_k = 2k - M
// (the extra number sits on the positive side, matching the half-odd
// convention where odd M shifts the twist by +1/2).
BetheNumberSet ground_state_numbers(int L, int M);

// Lowest configuration of the (n_plus, n_minus) vacancy sector, with the
// outermost number on each side pushed out by the given number of steps.
// Needs L divisible by 4 so the vacancy counts are integral.
BetheNumberSet template_numbers(int L, int n_plus, int n_minus, int level_plus = 0,
                                int level_minus = 0);

// Vacancy counts and packedness defects of a configuration.
//   n_plus  = L/4 - card{I > 0},  n_minus = L/4 - card{I < 0}
//   delta_plus_I  = sum of positive I minus the packed minimum m_+^2/2
//   delta_minus_I = mirrored on the negative side
// n_pm are stored as rationals in doubled units when L % 4 != 0.
struct StateClassification {
  double n_plus = 0.0;
  double n_minus = 0.0;
  std::int64_t delta_plus_I = 0;
  std::int64_t delta_minus_I = 0;
};

StateClassification classify(const BetheNumberSet& numbers, int L);

// Bethe-number bound for real-root configurations (zero-twist form):
// |I_k| <= L/4 + (n_+ + n_-)(1/2 - gamma/pi).
bool admissible(const BetheNumberSet& numbers, int L, double gamma);

// All configurations with m_plus positive and m_minus negative numbers whose
// positive-side displacement sum is `level` (negative side packed), filtered
// by the admissibility bound. Ordered lexicographically by doubled numbers.
std::vector<BetheNumberSet> enumerate_excitations_split(int L, int m_plus, int m_minus,
                                                        int level, double gamma);

// Convenience wrapper: M roots split as evenly as possible (extra root on
// the positive side), displacements applied to the positive side.
std::vector<BetheNumberSet> enumerate_excitations(int L, int M, int level, double gamma);

}  // namespace xxz
