// SPDX-License-Identifier: Apache-2.0
#include "cleave/cleaving.hpp"

#include <cmath>
#include <functional>

namespace cleave {

namespace {

using NodePtr = BinaryTree::NodePtr;

// Walks internal vertices in canonical order, handing each its entering
// region; returns false to stop early.
bool walk_regions(const DecoratedTree& d,
                  const std::function<bool(int, const SphereRegion&, const NodePtr&)>& visit,
                  const std::function<void(int, const SphereRegion&)>& at_leaf) {
  int counter = 0;
  std::function<bool(const NodePtr&, const SphereRegion&)> rec =
      [&](const NodePtr& node, const SphereRegion& region) -> bool {
    if (node->is_leaf()) {
      if (at_leaf) at_leaf(node->label, region);
      return true;
    }
    int idx = counter++;
    if (!visit(idx, region, node)) return false;
    const auto& p = d.decorations[static_cast<size_t>(idx)];
    if (!rec(node->left, region.with(p, Sign::Neg))) return false;
    return rec(node->right, region.with(p, Sign::Pos));
  };
  return rec(d.tree.root(), d.input);
}

}  // namespace

TimberAssignment assign_timber(const DecoratedTree& d) {
  if (static_cast<int>(d.decorations.size()) != d.arity() - 1)
    throw BadLabelsError("decoration count must be arity - 1");
  TimberAssignment out;
  out.vertex_region.resize(d.decorations.size(), SphereRegion::full(d.input.n));
  out.leaf_region.resize(static_cast<size_t>(d.arity()), SphereRegion::full(d.input.n));
  walk_regions(
      d,
      [&](int idx, const SphereRegion& region, const NodePtr&) {
        out.vertex_region[static_cast<size_t>(idx)] = region;
        return true;
      },
      [&](int label, const SphereRegion& region) {
        out.leaf_region[static_cast<size_t>(label - 1)] = region;
      });
  return out;
}

std::vector<OrientedHyperplane> involved_planes(const DecoratedTree& d) {
  std::vector<OrientedHyperplane> planes = d.decorations;
  for (const auto& c : d.input.constraints) planes.push_back(c.plane);
  return planes;
}

bool is_cleaving(const DecoratedTree& d, const EngineConfig& cfg) {
  if (static_cast<int>(d.decorations.size()) != d.arity() - 1)
    throw BadLabelsError("decoration count must be arity - 1");
  require_generic(involved_planes(d), d.input.n, cfg);
  return walk_regions(
      d,
      [&](int idx, const SphereRegion& region, const NodePtr&) {
        const auto& p = d.decorations[static_cast<size_t>(idx)];
        return !region_is_empty(region.with(p, Sign::Neg), cfg) &&
               !region_is_empty(region.with(p, Sign::Pos), cfg);
      },
      nullptr);
}

std::vector<SphereRegion> leaf_timber(const DecoratedTree& d, const EngineConfig& cfg) {
  if (!is_cleaving(d, cfg)) throw NotCleavingError("tree does not cleave its colour");
  return assign_timber(d).leaf_region;
}

bool in_ob_cleave(const SphereRegion& u, const EngineConfig& cfg) {
  auto dec = decompose_complement(u, cfg);
  for (int i = 0; i < dec->count(); ++i)
    if (dec->component(i).euler != 1) return false;
  return true;
}

SphereRegion expand_homotopy(const SphereRegion& u, double t) {
  // Per-plane speed chosen so every plane reaches tangency just before
  // t = 1 and drops out of the list when it no longer meets the sphere.
  constexpr double kOvershoot = 1e-3;
  SphereRegion out;
  out.n = u.n;
  for (const auto& c : u.constraints) {
    double sigma = c.required == Sign::Pos ? 1.0 : -1.0;
    double speed = (1.0 + sigma * c.plane.offset) / (1.0 - kOvershoot);
    double moved = c.plane.offset - sigma * t * speed;
    if (sigma > 0 ? moved <= -1.0 : moved >= 1.0) continue;  // past the sphere
    RegionConstraint nc = c;
    nc.plane.offset = moved;
    out.constraints.push_back(nc);
  }
  return out;
}

std::pair<double, double> translation_interval(const DecoratedTree& d, int idx,
                                               const EngineConfig& cfg) {
  if (idx < 0 || idx >= static_cast<int>(d.decorations.size()))
    throw BadIndexError("translation_interval: decoration index out of range");
  auto cleaves_at = [&](double r) {
    DecoratedTree probe = d;
    probe.decorations[static_cast<size_t>(idx)].offset += r;
    try {
      return is_cleaving(probe, cfg);
    } catch (const NonGenericError&) {
      return false;
    }
  };
  if (!cleaves_at(0.0))
    throw NotCleavingError("translation_interval requires a cleaving tree");

  constexpr double kTol = 1e-6;
  auto boundary = [&](double dir) {
    double good = 0.0, step = 1e-3;
    while (step < 4.0 && cleaves_at(dir * (good + step))) {
      good += step;
      step *= 2;
    }
    double bad = good + step;
    while (bad - good > kTol) {
      double mid = 0.5 * (good + bad);
      (cleaves_at(dir * mid) ? good : bad) = mid;
    }
    return dir * 0.5 * (good + bad);
  };
  return {boundary(-1.0), boundary(+1.0)};
}

GammaResult gamma_epsilon(const DecoratedTree& d, double eps, const EngineConfig& cfg) {
  std::vector<double> shift(d.decorations.size(), 0.0);
  for (size_t i = 0; i < d.decorations.size(); ++i) {
    auto [j_minus, j_plus] = translation_interval(d, static_cast<int>(i), cfg);
    double j_min = std::min(-j_minus, j_plus);
    if (j_min >= eps) continue;
    double centre = 0.5 * (j_minus + j_plus);
    double sgn = centre > 0 ? 1.0 : (centre < 0 ? -1.0 : 0.0);
    shift[i] = sgn * std::min(eps - j_min, std::abs(centre));
  }
  GammaResult out{d, false};
  for (size_t i = 0; i < shift.size(); ++i) out.tree.decorations[i].offset += shift[i];
  try {
    out.cleaving = is_cleaving(out.tree, cfg);
  } catch (const NonGenericError&) {
    out.cleaving = false;
  }
  return out;
}

}  // namespace cleave
