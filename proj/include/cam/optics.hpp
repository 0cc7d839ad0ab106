// optics.hpp — closed-form interface physics: transmitted-mode matching,
// refraction angle, reflection/transmission coefficients, lens transmission
// resonance and resolution estimators.

#pragma once

#include <complex>
#include <vector>

#include "cam/bloch.hpp"

namespace cam {

enum class EvanescentType { none, zone_center, zone_edge };

// Transmitted x-momentum at an interface. Either a propagating real k2x
// (group velocity pointing into the second region) or an evanescent decay
// rate kappa_ev; zone-edge evanescence corresponds to k2x = pi/d + i k_ev.
struct TransmittedMode {
  bool propagating = false;
  double k2x = 0.0;       // real part (0 or pi/d when evanescent)
  double kappa_ev = 0.0;  // imaginary part when evanescent
  EvanescentType type = EvanescentType::none;

  std::complex<double> complex_k2x() const { return {k2x, kappa_ev}; }
};

// Solve the energy-conservation + phase-matching condition
//   K(k2x, ky) = omega2 - E1 + beta2^2 / (E1 - eps2)
// for the transmitted mode in region 2.
TransmittedMode solve_k2x(double e1, double ky, const RegionParams& region2,
                          Orientation o, double d = 1.0);

// Refraction angle theta_R = arctan(tan(k1y d) cot(k2x d)); equals the
// group-velocity direction of the transmitted mode when k2x is the
// forward-propagating root. Throws for evanescent modes.
double refraction_angle(double k1y, const TransmittedMode& mode,
                        double d = 1.0);

// Reflection coefficient of the discrete scattering problem; evanescent
// transmitted modes reflect fully. Marginal floating-point excursions
// outside [0,1] are clamped; `clamped`, when given, reports that.
double reflection(double k1x, const TransmittedMode& mode, double kappa1,
                  double kappa2, bool* clamped = nullptr);

// Interface amplitudes r, t (t = 1 + r) of the same scattering problem.
struct InterfaceAmplitudes {
  std::complex<double> r, t;
};
InterfaceAmplitudes interface_amplitudes(double k1x, double k2x, double kappa1,
                                         double kappa2);

// Normalized weighted sample set over the Brillouin zone.
struct MomentumDistribution {
  struct Sample {
    double kx = 0.0, ky = 0.0;
    double weight = 0.0;
  };
  std::vector<Sample> samples;

  void normalize();
  double total_weight() const;
};

// R_eff = sum_k G(k) R(k) with per-sample transmitted-mode matching;
// evanescent samples contribute R = 1.
double effective_reflection(const MomentumDistribution& g,
                            const RegionParams& region1,
                            const RegionParams& region2, Orientation o,
                            Branch branch, double d = 1.0);

// Total lens transmission from summed multiple scattering,
//   T = T12 T23 R23 / (exp(-2 i k2x W) - R23^2).
// `divergent` flags |denominator| < 1e-9 (the bound-mode resonance).
// `t_type_numerator` drops the R23 numerator factor (alternative reading
// of the multiple-scattering sum).
struct LensTransmission {
  std::complex<double> value;
  bool divergent = false;
};
LensTransmission lens_transmission(std::complex<double> t12,
                                   std::complex<double> t23,
                                   std::complex<double> r23,
                                   std::complex<double> k2x, double width,
                                   bool t_type_numerator = false);

// Maximum lens resolution delta = d / (1 - d/Lambda0); subwavelength when
// d < Lambda0/2.
struct Resolution {
  double delta = 0.0;
  bool subwavelength = false;
};
Resolution resolution(double d, double lambda0);

// Relative resolution delta0/delta^{+-} ~= (omega -+ beta) / (omega +- beta).
double relative_resolution(double omega, double beta, Branch branch);

}  // namespace cam
