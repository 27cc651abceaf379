// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <vector>

#include "cleave/geometry.hpp"

namespace cleave {

/// One sign constraint on a sphere point: side_of(plane, x) must equal
/// `required`; with `closed` set, sign 0 is also admitted.
struct RegionConstraint {
  OrientedHyperplane plane;
  Sign required = Sign::Pos;
  bool closed = false;
};

/// A sign-constrained subset of S^n (n = 1 or 2): the intersection of
/// half-spaces with the unit sphere.  The constraint list order is
/// irrelevant to the point set.
struct SphereRegion {
  int n = 2;
  std::vector<RegionConstraint> constraints;

  static SphereRegion full(int n) { return SphereRegion{n, {}}; }

  SphereRegion with(const OrientedHyperplane& p, Sign s, bool closed = false) const {
    SphereRegion r = *this;
    r.constraints.push_back({p, s, closed});
    return r;
  }

  /// Same point-set closure: every constraint made closed.
  SphereRegion closure() const {
    SphereRegion r = *this;
    for (auto& c : r.constraints) c.closed = true;
    return r;
  }

  SphereRegion rotated(const Rotation& rho) const {
    SphereRegion r = *this;
    for (auto& c : r.constraints) c.plane = rotate(rho, c.plane);
    return r;
  }

  int ambient_dim() const { return n + 1; }
};

/// A constrained piece of a hyperplane inside the closed unit ball:
/// carrier as an equality, closure constraints, and |x| <= 1 implicit.
struct BallFace {
  OrientedHyperplane carrier;
  std::vector<RegionConstraint> constraints;
};

/// Region-engine configuration.  mesh_level L gives 20*4^L base triangles
/// on S^2; cells straddling a constraint refine up to extra_depth levels.
struct EngineConfig {
  int mesh_level = 6;
  int extra_depth = 3;
  int circle_segments = 2048;  // base segment count for the S^1 mesh engine
  Tolerances tol;
};

/// Mutable library-wide default, consulted when no config is passed.
EngineConfig& engine_config();

struct ComponentInfo {
  Vec witness;            // interior point of the component
  double margin = 0.0;    // min constraint slack at the witness
  int euler = 0;          // Euler characteristic at engine resolution
  std::size_t cells = 0;  // engine cells (arcs / triangles) in the component
};

/// Connected-component decomposition of a region or of its closed
/// complement, at engine resolution.  Exact arcs for n=1, mesh for n=2.
class RegionDecomposition {
 public:
  virtual ~RegionDecomposition() = default;
  virtual int count() const = 0;
  virtual const ComponentInfo& component(int idx) const = 0;
  /// Index of the component containing x, or -1.
  virtual int component_containing(const Vec& x) const = 0;
};

/// Minimum margin of the genericity guard over a set of cutting planes of
/// S^n: distance of each plane from tangency, of each pairwise cut-circle
/// intersection from tangency, and of each such intersection point from
/// any third plane.  Planes missing the sphere entirely are skipped.
double genericity_margin(const std::vector<OrientedHyperplane>& planes, int n);

/// Throws NonGenericError if the margin is below cfg.tol.tangent.
void require_generic(const std::vector<OrientedHyperplane>& planes, int n,
                     const EngineConfig& cfg = engine_config());
void require_generic(const SphereRegion& r, const EngineConfig& cfg = engine_config());

bool region_is_empty(const SphereRegion& r, const EngineConfig& cfg = engine_config());

std::unique_ptr<RegionDecomposition> decompose_region(
    const SphereRegion& r, const EngineConfig& cfg = engine_config());

/// Decomposition of the closed complement S^n \ r.
std::unique_ptr<RegionDecomposition> decompose_complement(
    const SphereRegion& r, const EngineConfig& cfg = engine_config());

/// Component count plus one interior witness per component.
std::vector<ComponentInfo> region_components(const SphereRegion& r,
                                             const EngineConfig& cfg = engine_config());

bool regions_equal(const SphereRegion& a, const SphereRegion& b,
                   const EngineConfig& cfg = engine_config());

int region_euler(const SphereRegion& r, const EngineConfig& cfg = engine_config());

bool faces_adjacent(const BallFace& f, const BallFace& g,
                    const EngineConfig& cfg = engine_config());

/// Independent segment-mesh engine on the circle, the cross-check for the
/// exact S^1 engine.  Any disagreement with the exact engine is a bug.
bool oracle_s1_mesh_is_empty(const SphereRegion& r,
                             const EngineConfig& cfg = engine_config());
int oracle_s1_mesh_components(const SphereRegion& r,
                              const EngineConfig& cfg = engine_config());
bool oracle_s1_mesh_equal(const SphereRegion& a, const SphereRegion& b,
                          const EngineConfig& cfg = engine_config());

}  // namespace cleave
