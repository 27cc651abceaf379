// SPDX-License-Identifier: Apache-2.0
// Internal interfaces shared by the S^1 and S^2 region engines.
#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "cleave/region.hpp"

namespace cleave::detail {

// Constraint with the required sign folded into a multiplier, and
// trivially-true constraints already removed.
struct PreparedConstraint {
  Vec normal;
  double offset = 0.0;
  double mult = 1.0;  // +1 for required Pos, -1 for required Neg
  bool closed = false;

  double slack(const Vec& x) const { return mult * (dot(normal, x) - offset); }
};

struct PreparedRegion {
  int n = 2;
  std::vector<PreparedConstraint> cons;
  bool provably_empty = false;  // some constraint excludes the whole sphere
};

PreparedRegion prepare(const SphereRegion& r, const EngineConfig& cfg);

// ---- exact S^1 arc engine ----

// Interval set on [0, 2*pi), sorted and disjoint; arcs crossing zero are
// split and re-merged logically at the wrap point.
struct ArcSet {
  std::vector<std::pair<double, double>> iv;  // [lo, hi) pieces in [0, 2pi]
  double total() const;
  bool is_full(double tol) const;
};

ArcSet arcs_of_region(const PreparedRegion& r, const EngineConfig& cfg);
ArcSet arcset_intersect(const ArcSet& a, const ArcSet& b, double tol);
ArcSet arcset_complement(const ArcSet& a, double tol);
// Arcs as components after merging across the wrap point.
std::vector<std::pair<double, double>> arc_components(const ArcSet& a, double tol);

std::unique_ptr<RegionDecomposition> decompose_s1(const SphereRegion& r, bool complement,
                                                  const EngineConfig& cfg);
bool s1_regions_equal(const SphereRegion& a, const SphereRegion& b, const EngineConfig& cfg);
bool s1_region_is_empty(const SphereRegion& r, const EngineConfig& cfg);

// ---- S^2 icosphere mesh engine ----

struct IcosphereMesh {
  int level = 0;
  std::vector<Vec> verts;
  std::vector<std::array<int, 3>> tris;  // CCW seen from outside
  std::vector<std::array<int, 3>> nbrs;  // neighbour across edge (v[e], v[e+1])
  static const IcosphereMesh& get(int level);
};

std::unique_ptr<RegionDecomposition> decompose_s2(const SphereRegion& r, bool complement,
                                                  const EngineConfig& cfg);
bool s2_regions_equal(const SphereRegion& a, const SphereRegion& b, const EngineConfig& cfg);
bool s2_region_is_empty(const SphereRegion& r, const EngineConfig& cfg);

// ---- S^1 segment-mesh engine (oracle counterpart of the exact engine) ----

bool s1mesh_region_is_empty(const SphereRegion& r, const EngineConfig& cfg);
int s1mesh_region_components(const SphereRegion& r, const EngineConfig& cfg);
bool s1mesh_regions_equal(const SphereRegion& a, const SphereRegion& b, const EngineConfig& cfg);

}  // namespace cleave::detail
