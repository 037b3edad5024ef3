#pragma once

#include "xxz/model.hpp"
#include "xxz/states.hpp"

namespace xxz {

// Ground-state energy per site in the thermodynamic limit,
// e_inf = -2 pi integral of s' against the infinite-size root density.
double e_infinity(double gamma);

// Leading-order prediction for the counting function at the origin:
// z_L(0) = (phi_eff - r_inf (n_+ - n_-)) / (g L).
double counting_shift_prediction(int L, double phi_eff, const StateClassification& cls,
                                 const KernelConstants& kc);

struct ConformalWeights {
  double h = 0.0;
  double h_bar = 0.0;

  double sum() const { return h + h_bar; }
  double spin() const { return h - h_bar; }
};

// Vertex-operator weights plus the integer descendant offsets:
// h, hbar = (1/8) (n sqrt(g) +- (d + 2 phi_eff)/sqrt(g))^2 + Delta_{+-} I.
ConformalWeights conformal_weights(double phi_eff, const StateClassification& cls,
                                   const KernelConstants& kc);

// Scaled amplitudes of the two leading Dirac peaks of the deviation measure.
// For gamma = pi/n the peak at i v_F degenerates: odd n promotes it to a
// derivative peak (coefficients returned with the substituted slope and
// double_zero set); even n puts a pole of the s kernel there and the
// amplitudes are not defined.
struct PeakAmplitudes {
  double a_plus = 0.0;   // coefficient at +i v_F
  double a_minus = 0.0;  // coefficient at -i v_F
  bool double_zero = false;
  bool defined = false;  // false when predict() hit the even-integer pole
};

PeakAmplitudes peak_amplitudes(int L, double phi_eff, const StateClassification& cls,
                               double gamma);

// Finite-size observable predictions for a root configuration.
struct Prediction {
  double e_inf = 0.0;
  double z0 = 0.0;                 // counting function at the origin
  ConformalWeights weights;        // with the twist folded in
  double central_charge = 0.0;     // 1 - 12 phi_eff^2 / g
  double energy_coefficient = 0.0; // e_L = e_inf - pi v_F/(6 L^2) * this
  double energy = 0.0;             // e_L to order L^-2
  double momentum = 0.0;           // P_L to order L^-2
  PeakAmplitudes amplitudes;
};

// The energy coefficient pairs the twisted central charge with weights taken
// at zero twist winding; the combination equals 1 - 12 (h + hbar) with the
// twisted weights. Both forms are exposed to keep that identity testable.
double energy_weight_sum(double phi_eff, const StateClassification& cls,
                         const KernelConstants& kc);

Prediction predict(const ModelParams& params, const BetheNumberSet& numbers);

}  // namespace xxz
