// io.hpp — structured-config parsing and the on-disk artifact formats:
// columnar text datasets, binary snapshot dumps with a text index, and
// run manifests.

#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cam/lattice.hpp"
#include "cam/propagate.hpp"

namespace cam {

using json = nlohmann::json;

// Lattice + region-partition config. Keys: nx, ny, orientation, boundary
// (plus optional boundary_x / boundary_y), d, regions[] with
// {id, x_lo, x_hi, omega, delta, beta, kappa, grin{delta1, delta2, w, W}},
// interface_bond.
LatticeSpec lattice_from_json(const json& j);
RegionMap regions_from_json(const json& j);
json lattice_to_json(const LatticeSpec& spec);
json regions_to_json(const RegionMap& map);

json load_json(const std::filesystem::path& path);

// Columnar text dataset: '#'-prefixed header line, then one row per line,
// values printed with %.17g so reruns are byte-identical.
void write_columns(const std::filesystem::path& path,
                   const std::vector<std::string>& header,
                   const std::vector<std::vector<double>>& rows);

// Binary snapshot: header (time, nx, ny, layout tag), payload per-site
// photonic then atomic population as 8-byte floats, row-major over (ix, iy).
void write_snapshot(const std::filesystem::path& path, const Snapshot& snap,
                    int nx, int ny);
Snapshot read_snapshot(const std::filesystem::path& path, int& nx, int& ny);

// Text index listing snapshot times and file names, one per line.
void write_snapshot_index(
    const std::filesystem::path& path,
    const std::vector<std::pair<double, std::string>>& entries);

// Ordered key/value manifest (structured text).
void write_manifest(const std::filesystem::path& path,
                    const std::vector<std::pair<std::string, std::string>>& kv);

std::string format_double(double v);  // %.17g

}  // namespace cam
