// propagate.hpp — time-domain engine: wave packets, well eigenstates,
// error-controlled evolution under the sparse JCH operator, and
// population/trajectory measurements.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <vector>

#include "cam/jch.hpp"
#include "cam/optics.hpp"

namespace cam {

// Complex amplitudes over the one-excitation basis; layout matches
// SparseHamiltonian (photonic block first, then atomic).
struct StateVector {
  Eigen::VectorXcd amp;
  int n_sites = 0;

  double norm() const { return amp.norm(); }
  void normalize() { amp /= amp.norm(); }
  std::complex<double> photonic(int site) const { return amp[site]; }
  std::complex<double> atomic(int site) const { return amp[n_sites + site]; }
};

struct PacketComponent {
  double kx = 0.0, ky = 0.0;
  std::complex<double> weight{1.0, 0.0};
};

struct WavePacketSpec {
  std::vector<PacketComponent> components;
  double sigma_k = 0.157;  // momentum-space width (pi/20)
  double x0 = 0.0, y0 = 0.0;
  // Internal photon/atom mixing pair, normalized on construction.
  std::complex<double> mix_photon{1.0, 0.0};
  std::complex<double> mix_atom{1.0, 0.0};
};

struct PacketResult {
  StateVector state;
  bool truncated = false;      // envelope tail above 1e-6 at an open edge
  double edge_amplitude = 0.0; // largest relative envelope value at the edge
};

// Gaussian wave packet: c_r ~ sum_j w_j exp(i k_j . r) exp(-|r-r0|^2 s^2/2),
// atomic amplitudes scaled by the internal mixing pair; normalized.
PacketResult gaussian_packet(const WavePacketSpec& spec, const SiteTable& table);

// Momentum distribution |c~(k)|^2 of the photonic amplitudes on the
// discrete reciprocal grid, normalized; weights below `cutoff` (relative
// to the peak) are dropped.
MomentumDistribution momentum_distribution(const StateVector& psi,
                                           const SiteTable& table,
                                           double cutoff = 1e-8);

struct WellEigenstate {
  StateVector state;
  double energy = 0.0;  // of the masked subproblem, shift included
};

// Eigenstate of the Hamiltonian restricted to `mask` (site indices),
// nearest to e_target, embedded into the full lattice with zeros outside.
WellEigenstate well_eigenstate(const SparseHamiltonian& h,
                               const std::vector<int>& mask, double e_target,
                               double window = 1e30, int dense_cap = 4096);

enum class EvolveMethod { chebyshev, lanczos };

struct EvolveOptions {
  double sign = -1.0;  // exp(sign * i H t); default Schroedinger exp(-iHt)
  EvolveMethod method = EvolveMethod::chebyshev;
  double max_chunk_phase = 4000.0;  // spectral half-width times chunk dt
  int lanczos_dim = 40;
  // Called at each requested snapshot time (ascending, within [0, t]).
  std::vector<double> snapshot_times;
  std::function<void(double, const StateVector&)> on_snapshot;
};

struct EvolutionResult {
  StateVector state;
  double norm_drift = 0.0;   // | ||psi|| - 1 |
  double error_bound = 0.0;  // accumulated certified 2-norm error
};

// Apply exp(sign i H t) with certified truncation error <= tol.
EvolutionResult evolve(const SparseHamiltonian& h, const StateVector& psi0,
                       double t, double tol, EvolveOptions opts = {});

// Population helpers: |c_r|^2 + |d_r|^2 summed over the given sites.
double population(const StateVector& psi, const std::vector<int>& sites);
double region_population(const StateVector& psi, const SiteTable& table,
                         int region_id);
// Total population within `margin` sites of an open boundary.
double boundary_population(const StateVector& psi, const SiteTable& table,
                           int margin = 2);

std::vector<double> site_populations(const StateVector& psi);

struct RabiFit {
  double omega = 0.0;  // mutual coupling
  double eta = 0.0;    // source/lens eigenenergy difference
  double residual = 0.0;  // RMS misfit
};

// Least-squares fit of P(t) = 2 Omega^2/(eta^2+4 Omega^2)
//                              [1 - cos(sqrt(eta^2+4 Omega^2) t)].
RabiFit fit_rabi(const std::vector<double>& times,
                 const std::vector<double>& populations);

struct Snapshot {
  double time = 0.0;
  std::vector<double> photonic;  // per-site |c_r|^2
  std::vector<double> atomic;    // per-site |d_r|^2
};

Snapshot make_snapshot(double time, const StateVector& psi);

struct Trajectory {
  std::vector<double> times;
  std::vector<Vec2> centroids;
  double angle = 0.0;        // least-squares direction, radians
  double angle_sigma = 0.0;  // from fit residuals
  Vec2 velocity{};
};

// Population-weighted centroid per snapshot restricted to `mask`
// (snapshots with mask population below `threshold` are skipped), plus a
// least-squares straight-line direction. `core_fraction` drops sites below
// that fraction of the frame's peak so the fit follows the beam core.
Trajectory centroid_track(const std::vector<Snapshot>& snapshots,
                          const SiteTable& table, const std::vector<int>& mask,
                          double threshold = 1e-3, double core_fraction = 0.0);

}  // namespace cam
