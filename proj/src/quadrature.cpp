#include "xxz/quadrature.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>

#include <cmath>
#include <stdexcept>

namespace xxz {

double integrate_line(const std::function<double(double)>& f, double rel_tol) {
  boost::math::quadrature::exp_sinh<double> rule;
  double err_pos = 0.0, err_neg = 0.0, l1 = 0.0;
  const double pos = rule.integrate(f, rel_tol, &err_pos, &l1);
  const double neg = rule.integrate([&f](double x) { return f(-x); }, rel_tol, &err_neg, &l1);
  const double total = pos + neg;
  const double scale = std::max({std::abs(total), std::abs(pos), std::abs(neg), 1e-300});
  if ((err_pos + err_neg) / scale > 1e3 * rel_tol)
    throw std::runtime_error("quadrature failed to reach tolerance");
  return total;
}

}  // namespace xxz
