// jch.hpp — one-excitation Jaynes-Cummings-Hubbard Hamiltonian.
//
// Basis ordering: rows 0..N-1 hold the photonic amplitudes c_r (|g,1>_r),
// rows N..2N-1 the atomic amplitudes d_r (|e,0>_r). The operator is real
// symmetric; off-diagonal entries are stored once per unordered pair.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "cam/lattice.hpp"

namespace cam {

enum class Branch { minus, plus };

// Dressed-state (polariton) energy E_n^{+-} of a single cavity.
double dressed_energy(int n, double omega, double epsilon, double beta,
                      Branch branch);

// Mixing angle Theta_n = 1/2 arctan(-2 sqrt(n) beta / delta), with the
// continuity convention Theta_n(delta = 0) = pi/4 for beta > 0.
double mixing_angle(int n, double beta, double delta);

struct SparseEntry {
  int i = 0, j = 0;  // i < j
  double value = 0.0;
};

class SparseHamiltonian {
 public:
  SparseHamiltonian() = default;
  SparseHamiltonian(int n_sites, std::vector<double> diagonal,
                    std::vector<SparseEntry> offdiag, double shift);

  int n_sites() const { return n_sites_; }
  int dim() const { return 2 * n_sites_; }
  // Stored entries: diagonal + one per unordered off-diagonal pair.
  std::size_t nnz() const { return diag_.size() + offdiag_.size(); }
  double shift() const { return shift_; }

  const std::vector<double>& diagonal() const { return diag_; }
  const std::vector<SparseEntry>& offdiagonal() const { return offdiag_; }

  // y = H x. Row-parallelizable CSR application; no aliasing allowed.
  void apply(const Eigen::VectorXcd& x, Eigen::VectorXcd& y) const;
  Eigen::VectorXcd apply(const Eigen::VectorXcd& x) const;

  double expectation(const Eigen::VectorXcd& psi) const;

  Eigen::MatrixXd dense() const;

  // Gershgorin enclosure of the spectrum.
  void spectral_bounds(double& lo, double& hi) const;

  // Coordinate-format binary dump (header: dim, nnz, shift; then triples).
  void dump(const std::string& path) const;

 private:
  void build_csr();

  int n_sites_ = 0;
  double shift_ = 0.0;
  std::vector<double> diag_;
  std::vector<SparseEntry> offdiag_;
  // Full (both directions) CSR of the off-diagonal part, for apply().
  std::vector<int> row_ptr_, col_;
  std::vector<double> val_;
};

// Assemble the one-excitation JCH operator for a resolved lattice.
// With `rotating_frame` true, `frame_omega` times the identity is
// subtracted from the one-excitation block and recorded as the shift;
// level differences are unaffected and the propagator's spectral radius
// drops accordingly.
SparseHamiltonian assemble(const SiteTable& sites, bool rotating_frame = false,
                           double frame_omega = 0.0);

struct Spectrum {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // columns
};

// Dense symmetric eigensolve; throws if dim exceeds the cap.
Spectrum dense_spectrum(const SparseHamiltonian& h, int dense_cap = 4096);

}  // namespace cam
