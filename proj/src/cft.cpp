#include "xxz/cft.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "xxz/kernel.hpp"
#include "xxz/quadrature.hpp"

namespace xxz {

double e_infinity(double gamma) {
  return -2.0 * M_PI * integrate_line([gamma](double x) {
    return s_prime(x, gamma) * sigma_inf(x, gamma);
  });
}

double counting_shift_prediction(int L, double phi_eff, const StateClassification& cls,
                                 const KernelConstants& kc) {
  const double d = cls.n_plus - cls.n_minus;
  return (phi_eff - kc.r_inf * d) / (kc.g * L);
}

ConformalWeights conformal_weights(double phi_eff, const StateClassification& cls,
                                   const KernelConstants& kc) {
  const double n = cls.n_plus + cls.n_minus;
  const double d = cls.n_plus - cls.n_minus;
  const double sq = std::sqrt(kc.g);
  const double winding = (d + 2.0 * phi_eff) / sq;
  ConformalWeights w;
  w.h = 0.125 * (n * sq + winding) * (n * sq + winding) + cls.delta_plus_I;
  w.h_bar = 0.125 * (n * sq - winding) * (n * sq - winding) + cls.delta_minus_I;
  return w;
}

double energy_weight_sum(double phi_eff, const StateClassification& cls,
                         const KernelConstants& kc) {
  const double n = cls.n_plus + cls.n_minus;
  const double d = cls.n_plus - cls.n_minus;
  return 0.25 * (n * n * kc.g + (d + 4.0 * phi_eff) * d / kc.g) +
         cls.delta_plus_I + cls.delta_minus_I;
}

PeakAmplitudes peak_amplitudes(int L, double phi_eff, const StateClassification& cls,
                               double gamma) {
  const auto kc = KernelConstants::for_gamma(gamma);
  const double n = cls.n_plus + cls.n_minus;
  const double winding = cls.n_plus - cls.n_minus + 2.0 * phi_eff;
  const double delta_sum = static_cast<double>(cls.delta_plus_I + cls.delta_minus_I);
  const double delta_diff = static_cast<double>(cls.delta_minus_I - cls.delta_plus_I);

  PeakAmplitudes out;
  double slope;
  const double ratio = M_PI / gamma;
  const auto nearest = static_cast<long>(std::lround(ratio));
  if (nearest >= 2 && std::abs(ratio - nearest) < 1e-9) {
    if (nearest % 2 == 0) {
      throw std::domain_error(
          "peak_amplitudes: s kernel pole at i v_F (gamma = pi / even integer)");
    }
    // Double zero at i v_F: the peak carries a derivative term and the
    // dividing slope becomes the derivative of the s kernel transform.
    const std::complex<double> w(0.0, kc.v_f);
    const double a = 0.5 * (M_PI - gamma);
    slope = std::abs(a * std::cosh(a * w) / std::sinh(0.5 * M_PI * w));
    out.double_zero = true;
  } else {
    slope = kernel_fourier_s(std::complex<double>(0.0, kc.v_f), gamma).real();
  }

  const double pref = -kc.v_f / (static_cast<double>(L) * L * slope);
  const double sum =
      (pref / 12.0) *
      (-1.0 + 3.0 * n * n * kc.g + 3.0 * winding * winding / kc.g + 12.0 * delta_sum);
  const double diff = pref * (-0.5 * n * winding + delta_diff);
  out.a_plus = 0.5 * (sum + diff);
  out.a_minus = 0.5 * (sum - diff);
  out.defined = true;
  return out;
}

Prediction predict(const ModelParams& params, const BetheNumberSet& numbers) {
  params.validate();
  if (numbers.size() != params.M) throw std::invalid_argument("predict: numbers.size() != M");

  const auto kc = KernelConstants::for_gamma(params.gamma);
  const double pe = effective_twist(params.phi, params.M);
  const auto cls = classify(numbers, params.L);
  const double L = params.L;

  Prediction p;
  p.e_inf = e_infinity(params.gamma);
  p.z0 = counting_shift_prediction(params.L, pe, cls, kc);
  p.weights = conformal_weights(pe, cls, kc);
  p.central_charge = 1.0 - 12.0 * pe * pe / kc.g;
  p.energy_coefficient = p.central_charge - 12.0 * energy_weight_sum(pe, cls, kc);
  p.energy = p.e_inf - M_PI * kc.v_f / (6.0 * L * L) * p.energy_coefficient;

  const double n = cls.n_plus + cls.n_minus;
  const double winding = cls.n_plus - cls.n_minus + 2.0 * pe;
  const double spin =
      0.5 * n * winding + static_cast<double>(cls.delta_plus_I - cls.delta_minus_I);
  p.momentum = -2.0 * M_PI * kc.alpha * winding / L + 2.0 * M_PI * spin / (L * L);

  try {
    p.amplitudes = peak_amplitudes(params.L, pe, cls, params.gamma);
  } catch (const std::domain_error&) {
    p.amplitudes = PeakAmplitudes{};  // undefined at gamma = pi / even integer
  }
  return p;
}

}  // namespace xxz
