#pragma once

#include <functional>

namespace xxz {

// Integral of f over the whole real line for integrands with exponential
// tail decay. Splits at 0 and maps each half line through an exp-sinh rule,
// which is the right tool for the e^{-v|lambda|} tails appearing here.
// Throws std::runtime_error if the requested tolerance is not reached.
double integrate_line(const std::function<double(double)>& f, double rel_tol = 1e-12);

}  // namespace xxz
