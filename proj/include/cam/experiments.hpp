// experiments.hpp — config-driven experiment runs: each experiment builds a
// lattice, propagates or sweeps, writes plot-ready datasets plus a manifest,
// and returns every derived quantity as a predicted/measured pair.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cam/io.hpp"
#include "cam/propagate.hpp"

namespace cam {

struct ExperimentConfig {
  std::string id;  // band_report, negative_refraction, focal_retune,
                   // point_source_imaging, grin_scan, reflection_tradeoff,
                   // ewe_scan, ewe_timeseries, surface_band_report
  json params;     // full config document (lattice, regions, experiment keys)
  std::filesystem::path out_dir = "out";
  double tol = 1e-8;
  unsigned seed = 1;
  bool paper_scale = false;
};

ExperimentConfig load_experiment_config(const std::filesystem::path& path);

struct DerivedQuantity {
  std::string name;
  double predicted = 0.0;
  double measured = 0.0;
  double discrepancy = 0.0;  // measured - predicted
};

struct ExperimentResult {
  std::string id;
  std::vector<DerivedQuantity> derived;
  json data;  // experiment-specific numbers for programmatic use
};

// Runs one experiment; writes datasets + manifest into config.out_dir and
// returns the derived quantities. Throws on invalid config or when the
// boundary guard trips (population near an open edge above threshold).
ExperimentResult run_experiment(const ExperimentConfig& config);

// Geometric ray through an axis-aligned region stack: straight segments in
// the direction of the analytic group velocity per region, refracted at
// each column interface (transverse momentum conserved). `image` is the
// last crossing of the source's y-level after the ray leaves the source
// region (for a slab lens: the external image plane, past the internal
// focus inside the slab).
struct RayTrace {
  std::vector<Vec2> vertices;
  std::optional<Vec2> image;
};
RayTrace ray_trace(Vec2 source, const LatticeSpec& spec, const RegionMap& map,
                   Branch branch, double k1x, double k1y);

struct ResonancePeak {
  double delta4 = 0.0;     // refined peak location
  double peak_p4 = 0.0;    // peak of max_t P4(t)
  double width = 0.0;      // half-height width estimate on the grid
  double gap_min_delta4 = 0.0;  // nearest spectral-gap minimum
};

// Diagonal operating momentum k = (c, c) on the given branch whose
// refraction angle into region 2 equals theta_target (radians); solved by
// bisection over c in (0, pi/2d).
double diagonal_incidence_for_angle(const RegionParams& region1,
                                    const RegionParams& region2, Branch branch,
                                    double theta_target, double d = 1.0);

// Quasi-1D strip scattering measurement: propagates a single-k packet
// against one interface and returns {measured reflected population,
// closed-form R} for cross-validation.
struct StripReflection {
  double measured = 0.0;
  double closed_form = 0.0;
};
StripReflection strip_reflection(const RegionParams& region1,
                                 const RegionParams& region2, double k1x,
                                 Branch branch, int nx = 800, double tol = 1e-8);

}  // namespace cam
