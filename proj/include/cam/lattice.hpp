// lattice.hpp — cavity-array geometry, region partition and per-site parameters.
//
// Natural units throughout the library: kappa = 1 sets the energy scale,
// d = 1 the length scale, hbar = 1. All region energies are given in units
// of the bulk hopping frequency.

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cam {

enum class Orientation { rotated, unrotated };
enum class Boundary { open, periodic };

// How the hopping strength of an edge that crosses a region boundary is
// formed from the two regions' kappas. All rules degenerate to kappa when
// both sides are uniform. `incident_side` takes the lower-x region's kappa,
// matching the discrete scattering equation whose interface site keeps its
// backward bonds at kappa_1.
enum class InterfaceBond {
  geometric_mean,
  arithmetic_mean,
  minimum,
  incident_side
};

// Graded-detuning (GRIN) ramp along the propagation axis of a lens region.
//
//   delta(x') = (delta2-delta1) sin^2(pi x' / 2w) + delta1      0 < x' <= w
//   delta(x') = delta2                                          w < x' <= W-w
//   exit ramp: mirror image of the entry ramp                   W-w < x' <= W
//
// `literal_exit_branch` switches the exit segment to the published
// cos^2(pi (x'+W-w)/2w) form, which is discontinuous at x' = W for general
// (w, W); it exists for comparison only.
struct GrinProfile {
  double delta1 = 0.0;
  double delta2 = 0.0;
  int w = 0;  // ramp width in sites, 0 < w <= W/2 (w = 0 means no ramp)
  int W = 0;  // total lens width in sites
  bool literal_exit_branch = false;
};

// Detuning at site index x' (1-based from the lens entry face).
double grin_detuning(int x_prime, const GrinProfile& g);

// Per-region physical parameters. delta == omega - epsilon (paper sign).
struct RegionParams {
  double omega = 0.0;   // cavity resonance frequency
  double delta = 0.0;   // detuning omega - epsilon
  double beta = 100.0;  // single-photon Rabi frequency
  double kappa = 1.0;   // hopping frequency, > 0

  double epsilon() const { return omega - delta; }
};

struct Region {
  int id = 0;
  int x_lo = 0;  // inclusive site-column range along x
  int x_hi = 0;
  RegionParams params;
  std::optional<GrinProfile> grin;
};

struct LatticeSpec {
  int nx = 2;
  int ny = 2;
  Orientation orientation = Orientation::rotated;
  Boundary boundary = Boundary::open;
  // Per-axis overrides; strips with distinct regions along x are typically
  // open in x and periodic in y.
  std::optional<Boundary> boundary_x;
  std::optional<Boundary> boundary_y;
  double d = 1.0;

  Boundary bx() const { return boundary_x.value_or(boundary); }
  Boundary by() const { return boundary_y.value_or(boundary); }
};

// Region partition along x. Every column must be covered by exactly one
// region.
struct RegionMap {
  std::vector<Region> regions;
  InterfaceBond interface_bond = InterfaceBond::geometric_mean;

  const Region& region_for_column(int ix) const;
};

struct Site {
  int ix = 0, iy = 0;
  double x = 0.0, y = 0.0;  // position in units of d
  int region = 0;
  double omega = 0.0, epsilon = 0.0, beta = 0.0;
};

// Undirected edge. a == b encodes a self-wrap (periodic boundary on a
// 1-wide axis); kappa accumulates multiplicity when several neighbor
// offsets wrap onto the same pair.
struct Edge {
  int a = 0, b = 0;
  double kappa = 0.0;
};

struct Neighbor {
  int site = 0;
  double kappa = 0.0;
};

// Immutable resolved lattice: sites, per-site parameters and weighted
// adjacency. Safe for concurrent read.
class SiteTable {
 public:
  LatticeSpec spec;
  std::vector<Site> sites;
  std::vector<Edge> edges;                         // canonical a <= b list
  std::vector<std::vector<Neighbor>> adjacency;    // symmetric

  int n_sites() const { return static_cast<int>(sites.size()); }
  int index(int ix, int iy) const { return iy * spec.nx + ix; }
  const Site& at(int ix, int iy) const { return sites[index(ix, iy)]; }

  // Site indices whose region id matches.
  std::vector<int> region_mask(int region_id) const;
  // Sites within `margin` of an open boundary.
  std::vector<int> boundary_mask(int margin) const;
};

SiteTable build_lattice(const LatticeSpec& spec, const RegionMap& regions);

std::string to_string(Orientation o);
std::string to_string(Boundary b);
Orientation orientation_from_string(const std::string& s);
Boundary boundary_from_string(const std::string& s);

}  // namespace cam
