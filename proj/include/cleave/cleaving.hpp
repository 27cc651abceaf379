// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "cleave/region.hpp"
#include "cleave/trees.hpp"

namespace cleave {

/// A tree with one hyperplane per internal vertex (canonical order) over
/// an incoming colour.  The recursive bisection it encodes: the left
/// child of a vertex receives the negative side of its decoration, the
/// right child the positive side.
struct DecoratedTree {
  BinaryTree tree;
  std::vector<OrientedHyperplane> decorations;
  SphereRegion input;

  int arity() const { return tree.arity(); }
};

struct TimberAssignment {
  /// Region entering internal vertex i, canonical order; entry 0 is the
  /// root-adjacent vertex and equals the input colour.
  std::vector<SphereRegion> vertex_region;
  /// leaf_region[j-1] is the timber of the leaf labelled j.
  std::vector<SphereRegion> leaf_region;
};

/// Pure constraint bookkeeping; no engine queries.
TimberAssignment assign_timber(const DecoratedTree& d);

/// Decoration planes plus the input colour's constraint planes, the set
/// the genericity guard inspects.
std::vector<OrientedHyperplane> involved_planes(const DecoratedTree& d);

/// True iff every vertex's cut is generic and produces two nonempty
/// children at engine resolution.
bool is_cleaving(const DecoratedTree& d, const EngineConfig& cfg = engine_config());

/// Timber in leaf-label order; throws NotCleavingError when !is_cleaving.
std::vector<SphereRegion> leaf_timber(const DecoratedTree& d,
                                      const EngineConfig& cfg = engine_config());

/// Membership in Ob: every component of the closed complement is a disk
/// (Euler characteristic 1) at engine resolution.
bool in_ob_cleave(const SphereRegion& u, const EngineConfig& cfg = engine_config());

/// Translates every defining plane away from the region, each at the
/// speed that reaches tangency at t = 1; planes that no longer meet the
/// sphere drop out of the constraint list.  expand_homotopy(u, 1) is the
/// full sphere.
SphereRegion expand_homotopy(const SphereRegion& u, double t);

/// Maximal translation interval ]j-, j+[ of decoration idx along its own
/// normal keeping the whole tree cleaving; found by bisection (1e-6).
std::pair<double, double> translation_interval(const DecoratedTree& d, int idx,
                                               const EngineConfig& cfg = engine_config());

struct GammaResult {
  DecoratedTree tree;
  bool cleaving;  // the transform need not preserve the cleaving property
};

/// Recentering transform: every decoration with translation margin below
/// eps moves toward the centre of its interval, by at most the distance
/// to the centre.  All translations are computed from the input and
/// applied simultaneously.
GammaResult gamma_epsilon(const DecoratedTree& d, double eps,
                          const EngineConfig& cfg = engine_config());

}  // namespace cleave
