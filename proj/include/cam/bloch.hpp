// bloch.hpp — analytic band layer: hopping kernels, dispersion surfaces,
// group velocities, isoenergy contours and the surface-mode bands.
//
// Brillouin zone convention: k in (-pi/d, pi/d]^2 for both orientations
// (the kernel is 2pi/d-periodic in each component).

#pragma once

#include <array>
#include <vector>

#include "cam/jch.hpp"
#include "cam/lattice.hpp"

namespace cam {

using Vec2 = std::array<double, 2>;

// Hopping kernel K(k).
//   rotated:   4 kappa cos(kx d) cos(ky d)
//   unrotated: 2 kappa [cos(kx d) + cos(ky d)]
double hopping_kernel(double kx, double ky, Orientation o, double kappa,
                      double d = 1.0);
Vec2 kernel_gradient(double kx, double ky, Orientation o, double kappa,
                     double d = 1.0);

// One-excitation band energy E^{+-}(k).
double bloch_energy(double kx, double ky, const RegionParams& p, Orientation o,
                    Branch branch, double d = 1.0);

// Band energy as a function of the kernel value alone. Strictly decreasing
// in K for either branch.
double energy_from_kernel(double kernel, const RegionParams& p, Branch branch);

// Analytic group velocity, grad_k E^{+-}.
Vec2 group_velocity(double kx, double ky, const RegionParams& p, Orientation o,
                    Branch branch, double d = 1.0);

struct BlochSample {
  Vec2 k{};
  double kernel = 0.0;
  double e_minus = 0.0, e_plus = 0.0;
  Vec2 vg_minus{}, vg_plus{};
};

BlochSample bloch_sample(double kx, double ky, const RegionParams& p,
                         Orientation o, double d = 1.0);

// Full-zone band range [min, max] for one branch.
std::array<double, 2> band_range(const RegionParams& p, Orientation o,
                                 Branch branch);

struct IsoContour {
  double energy = 0.0;
  std::vector<Vec2> points;  // ordered polyline
  bool closed = false;
  bool convex = false;
};

// Marching-squares extraction over a BZ grid with per-vertex bisection
// refinement; empty result when E0 lies outside the band.
std::vector<IsoContour> isoenergy_contour(double e0, const RegionParams& p,
                                          Orientation o, Branch branch,
                                          int grid = 512, double tol = 1e-8,
                                          double d = 1.0);

struct BandExtremum {
  Vec2 k{};
  double energy = 0.0;
  bool is_minimum = false;
};

// Band extrema via Newton refinement of grad K = 0 from coarse-grid seeds.
std::vector<BandExtremum> band_extrema(const RegionParams& p, Orientation o,
                                       Branch branch);

// Surface-mode bands: eigenvalues (ascending) of the 4x4 two-site-cell
// Bloch Hamiltonian with surface/bulk atomic energies eps_s, eps_b and
// photonic coupling -kappa [1 + exp(i ky sqrt(2) d)].
std::array<double, 4> surface_band(double ky, double kappa, double omega,
                                   double beta, double eps_s, double eps_b,
                                   double d = 1.0);

// Same bands plus per-band mean weights on the surface-atom component,
// used to classify which band is surface-dominated.
struct SurfaceBandPoint {
  std::array<double, 4> energies{};
  std::array<double, 4> surface_atom_weight{};
  std::array<double, 4> photon_weight{};
};
SurfaceBandPoint surface_band_states(double ky, double kappa, double omega,
                                     double beta, double eps_s, double eps_b,
                                     double d = 1.0);

// Multiset (sorted ascending) of closed-form band energies over the allowed
// k-points of an N x N periodic lattice, both branches; the analytic
// counterpart of dense_spectrum on a torus.
std::vector<double> torus_bloch_spectrum(int n, const RegionParams& p,
                                         Orientation o, double d = 1.0);

}  // namespace cam
