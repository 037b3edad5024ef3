#pragma once

#include <vector>

namespace xxz {

// Coefficients of prod_{j=1}^{max_part} 1/(1 - q^j) through q^max_level:
// out[k] = number of partitions of k into parts of size at most max_part.
std::vector<unsigned long long> partition_counts(int max_part, int max_level);

// Largest admissible outward displacement of the outermost positive Bethe
// number in an (n_plus, n_minus) vacancy configuration:
// floor((n_+ + n_-)(1/2 - gamma/pi) + n_+ + 1/2), nudged so exact-integer
// boundary cases land on the inclusive side.
int movable_count(int n_plus, int n_minus, double gamma);

// Compares brute-force excitation counts against the partition prediction
// for levels 0..max_level; returns the first failing level, or -1 if all
// levels agree.
int verify_degeneracy(int L, int n_plus, int n_minus, double gamma, int max_level);

}  // namespace xxz
