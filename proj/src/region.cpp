// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>

#include "region_engine.hpp"

namespace cleave {

using detail::PreparedRegion;

EngineConfig& engine_config() {
  static EngineConfig cfg;
  return cfg;
}

namespace {

Vec cross3(const Vec& a, const Vec& b) {
  return Vec(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
             a[0] * b[1] - a[1] * b[0]);
}

void check_region_dim(const SphereRegion& r) {
  if (r.n != 1 && r.n != 2)
    throw DimMismatchError("region engine supports n = 1 and n = 2 only");
  for (const auto& c : r.constraints)
    if (c.plane.ambient_dim != r.n + 1)
      throw DimMismatchError("constraint ambient dimension does not match region");
}

// Minimum-norm point of the intersection line/point of two hyperplanes.
// Valid when the planes are not parallel.
Vec pair_foot(const OrientedHyperplane& p, const OrientedHyperplane& q) {
  double d = dot(p.normal, q.normal);
  double den = 1.0 - d * d;
  double a = (p.offset - d * q.offset) / den;
  double b = (q.offset - d * p.offset) / den;
  return a * p.normal + b * q.normal;
}

}  // namespace

double genericity_margin(const std::vector<OrientedHyperplane>& planes, int n) {
  double margin = 1e300;
  std::vector<char> cuts(planes.size());
  for (size_t i = 0; i < planes.size(); ++i) {
    margin = std::min(margin, std::abs(1.0 - std::abs(planes[i].offset)));
    cuts[i] = std::abs(planes[i].offset) < 1.0;
  }
  for (size_t i = 0; i < planes.size(); ++i) {
    for (size_t j = i + 1; j < planes.size(); ++j) {
      const auto &P = planes[i], &Q = planes[j];
      double d = dot(P.normal, Q.normal);
      if (std::abs(d) > 1.0 - 1e-12) {
        // parallel: degenerate only when the two point sets coincide
        double gap = d > 0 ? std::abs(P.offset - Q.offset) : std::abs(P.offset + Q.offset);
        margin = std::min(margin, gap);
        continue;
      }
      if (!cuts[i] || !cuts[j]) continue;  // one circle missing: no interaction on S^n
      Vec foot = pair_foot(P, Q);
      double dist = norm(foot);
      margin = std::min(margin, std::abs(dist - 1.0));
      if (n == 2 && dist < 1.0) {
        // the two cut circles meet in two points; check them against thirds
        Vec dir = normalized(cross3(P.normal, Q.normal));
        double t = std::sqrt(1.0 - dist * dist);
        for (double s : {t, -t}) {
          Vec x = foot + s * dir;
          for (size_t l = 0; l < planes.size(); ++l) {
            if (l == i || l == j || !cuts[l]) continue;
            margin = std::min(margin, std::abs(dot(planes[l].normal, x) - planes[l].offset));
          }
        }
      }
    }
  }
  return margin;
}

void require_generic(const std::vector<OrientedHyperplane>& planes, int n,
                     const EngineConfig& cfg) {
  if (genericity_margin(planes, n) < cfg.tol.tangent)
    throw NonGenericError("configuration within tangency tolerance of degeneracy");
}

void require_generic(const SphereRegion& r, const EngineConfig& cfg) {
  check_region_dim(r);
  std::vector<OrientedHyperplane> planes;
  planes.reserve(r.constraints.size());
  for (const auto& c : r.constraints) planes.push_back(c.plane);
  require_generic(planes, r.n, cfg);
}

bool region_is_empty(const SphereRegion& r, const EngineConfig& cfg) {
  check_region_dim(r);
  require_generic(r, cfg);
  return r.n == 1 ? detail::s1_region_is_empty(r, cfg) : detail::s2_region_is_empty(r, cfg);
}

std::unique_ptr<RegionDecomposition> decompose_region(const SphereRegion& r,
                                                      const EngineConfig& cfg) {
  check_region_dim(r);
  require_generic(r, cfg);
  return r.n == 1 ? detail::decompose_s1(r, false, cfg) : detail::decompose_s2(r, false, cfg);
}

std::unique_ptr<RegionDecomposition> decompose_complement(const SphereRegion& r,
                                                          const EngineConfig& cfg) {
  check_region_dim(r);
  require_generic(r, cfg);
  return r.n == 1 ? detail::decompose_s1(r, true, cfg) : detail::decompose_s2(r, true, cfg);
}

std::vector<ComponentInfo> region_components(const SphereRegion& r, const EngineConfig& cfg) {
  auto dec = decompose_region(r, cfg);
  std::vector<ComponentInfo> out;
  out.reserve(static_cast<size_t>(dec->count()));
  for (int i = 0; i < dec->count(); ++i) out.push_back(dec->component(i));
  return out;
}

bool regions_equal(const SphereRegion& a, const SphereRegion& b, const EngineConfig& cfg) {
  check_region_dim(a);
  check_region_dim(b);
  if (a.n != b.n) throw DimMismatchError("regions_equal: sphere dimensions differ");
  require_generic(a, cfg);
  require_generic(b, cfg);
  return a.n == 1 ? detail::s1_regions_equal(a, b, cfg) : detail::s2_regions_equal(a, b, cfg);
}

int region_euler(const SphereRegion& r, const EngineConfig& cfg) {
  auto dec = decompose_region(r, cfg);
  int chi = 0;
  for (int i = 0; i < dec->count(); ++i) chi += dec->component(i).euler;
  return chi;
}

namespace {

// Feasibility of a 1-D slice: carrier line q0 + t*dir inside the closed
// unit ball, against the closed constraints of both faces.
bool interval_feasible(const Vec& q0, const Vec& dir,
                       const std::vector<RegionConstraint>& cons, double tol) {
  double q = dot(q0, q0);
  if (q > 1.0 + tol) return false;
  double T = std::sqrt(std::max(0.0, 1.0 - q));
  double lo = -T, hi = T;
  for (const auto& c : cons) {
    double mult = c.required == Sign::Pos ? 1.0 : -1.0;
    double a = mult * dot(c.plane.normal, dir);
    double b = mult * (dot(c.plane.normal, q0) - c.plane.offset);
    // need a*t + b >= -tol
    if (std::abs(a) < 1e-14) {
      if (b < -tol) return false;
    } else if (a > 0) {
      lo = std::max(lo, (-tol - b) / a);
    } else {
      hi = std::min(hi, (-tol - b) / a);
    }
  }
  return hi - lo >= -tol;
}

bool point_feasible(const Vec& x, const std::vector<RegionConstraint>& cons, double tol) {
  if (dot(x, x) > 1.0 + tol) return false;
  for (const auto& c : cons) {
    double mult = c.required == Sign::Pos ? 1.0 : -1.0;
    if (mult * (dot(c.plane.normal, x) - c.plane.offset) < -tol) return false;
  }
  return true;
}

// 2-D convex feasibility of the disk section of a carrier plane in the
// ball against closed half-plane constraints, by candidate enumeration.
bool disk_section_feasible(const OrientedHyperplane& carrier,
                           const std::vector<RegionConstraint>& cons, double tol) {
  int dim = carrier.ambient_dim;
  if (std::abs(carrier.offset) > 1.0 + tol) return false;
  double R = std::sqrt(std::max(0.0, 1.0 - carrier.offset * carrier.offset));
  Vec c0 = carrier.offset * carrier.normal;
  // orthonormal basis of the carrier
  Vec u, w;
  if (dim == 2) {
    u = Vec(-carrier.normal[1], carrier.normal[0]);
    w = Vec::zero(2);
  } else {
    Vec seed = std::abs(carrier.normal[0]) < 0.9 ? Vec(1, 0, 0) : Vec(0, 1, 0);
    u = normalized(cross3(carrier.normal, seed));
    w = cross3(carrier.normal, u);
  }
  struct Line {
    double a, b, c;  // a*alpha + b*beta + c >= -tol
  };
  std::vector<Line> lines;
  for (const auto& cc : cons) {
    double mult = cc.required == Sign::Pos ? 1.0 : -1.0;
    lines.push_back({mult * dot(cc.plane.normal, u),
                     dim == 3 ? mult * dot(cc.plane.normal, w) : 0.0,
                     mult * (dot(cc.plane.normal, c0) - cc.plane.offset)});
  }
  if (dim == 2) {
    // the section is a segment: 1-D clipping along u
    double lo = -R, hi = R;
    for (auto& l : lines) {
      if (std::abs(l.a) < 1e-14) {
        if (l.c < -tol) return false;
      } else if (l.a > 0) {
        lo = std::max(lo, (-tol - l.c) / l.a);
      } else {
        hi = std::min(hi, (-tol - l.c) / l.a);
      }
    }
    return hi - lo >= -tol;
  }
  auto feasible2 = [&](double al, double be) {
    if (al * al + be * be > R * R + tol) return false;
    for (auto& l : lines)
      if (l.a * al + l.b * be + l.c < -tol) return false;
    return true;
  };
  if (feasible2(0, 0)) return true;
  for (size_t i = 0; i < lines.size(); ++i) {
    const auto& li = lines[i];
    double n2 = li.a * li.a + li.b * li.b;
    if (n2 < 1e-20) continue;
    // foot of the origin on the boundary line
    double t = -li.c / n2;
    if (feasible2(li.a * t, li.b * t)) return true;
    // boundary line against the disk circle
    double d2 = li.c * li.c / n2;
    if (d2 <= R * R) {
      double h = std::sqrt(R * R - d2);
      double nx = li.a / std::sqrt(n2), ny = li.b / std::sqrt(n2);
      double fx = -nx * li.c / std::sqrt(n2), fy = -ny * li.c / std::sqrt(n2);
      if (feasible2(fx - ny * h, fy + nx * h)) return true;
      if (feasible2(fx + ny * h, fy - nx * h)) return true;
    }
    for (size_t j = i + 1; j < lines.size(); ++j) {
      const auto& lj = lines[j];
      double den = li.a * lj.b - li.b * lj.a;
      if (std::abs(den) < 1e-14) continue;
      double al = (-li.c * lj.b + lj.c * li.b) / den;
      double be = (-li.a * lj.c + lj.a * li.c) / den;
      if (feasible2(al, be)) return true;
    }
  }
  return false;
}

}  // namespace

bool oracle_s1_mesh_is_empty(const SphereRegion& r, const EngineConfig& cfg) {
  check_region_dim(r);
  return detail::s1mesh_region_is_empty(r, cfg);
}

int oracle_s1_mesh_components(const SphereRegion& r, const EngineConfig& cfg) {
  check_region_dim(r);
  return detail::s1mesh_region_components(r, cfg);
}

bool oracle_s1_mesh_equal(const SphereRegion& a, const SphereRegion& b,
                          const EngineConfig& cfg) {
  check_region_dim(a);
  check_region_dim(b);
  return detail::s1mesh_regions_equal(a, b, cfg);
}

bool faces_adjacent(const BallFace& f, const BallFace& g, const EngineConfig& cfg) {
  if (f.carrier.ambient_dim != g.carrier.ambient_dim)
    throw DimMismatchError("faces_adjacent: ambient dimensions differ");
  int dim = f.carrier.ambient_dim;
  double tol = cfg.tol.side * 16;
  double d = dot(f.carrier.normal, g.carrier.normal);

  std::vector<RegionConstraint> combined = f.constraints;
  combined.insert(combined.end(), g.constraints.begin(), g.constraints.end());

  if (std::abs(d) > 1.0 - 1e-10) {
    bool same_set = d > 0 ? std::abs(f.carrier.offset - g.carrier.offset) < tol
                          : std::abs(f.carrier.offset + g.carrier.offset) < tol;
    if (!same_set) return false;  // parallel distinct carriers
    return disk_section_feasible(f.carrier, combined, tol);
  }
  Vec q0 = pair_foot(f.carrier, g.carrier);
  if (dim == 2) return point_feasible(q0, combined, tol);
  Vec dir = normalized(cross3(f.carrier.normal, g.carrier.normal));
  return interval_feasible(q0, dir, combined, tol);
}

}  // namespace cleave
