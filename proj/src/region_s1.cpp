// SPDX-License-Identifier: Apache-2.0
// Exact arc arithmetic on S^1.  Every constraint line meets the circle in
// at most two points, so a region is a finite union of arcs computed in
// angle coordinates and compared with tolerance.
#include <algorithm>
#include <cmath>

#include "region_engine.hpp"

namespace cleave::detail {

namespace {
constexpr double kTau = 6.283185307179586476925286766559;

double wrap(double a) {
  a = std::fmod(a, kTau);
  if (a < 0) a += kTau;
  return a;
}

// Splits a possibly wrapping arc [lo, lo+len] into [0, 2pi) pieces.
void push_arc(std::vector<std::pair<double, double>>& out, double lo, double len) {
  if (len <= 0) return;
  if (len >= kTau) {
    out.emplace_back(0.0, kTau);
    return;
  }
  lo = wrap(lo);
  double hi = lo + len;
  if (hi <= kTau) {
    out.emplace_back(lo, hi);
  } else {
    out.emplace_back(lo, kTau);
    out.emplace_back(0.0, hi - kTau);
  }
}

void normalize(std::vector<std::pair<double, double>>& iv, double tol) {
  std::sort(iv.begin(), iv.end());
  std::vector<std::pair<double, double>> merged;
  for (auto& p : iv) {
    if (p.second - p.first <= tol) continue;
    if (!merged.empty() && p.first <= merged.back().second + tol)
      merged.back().second = std::max(merged.back().second, p.second);
    else
      merged.push_back(p);
  }
  iv = std::move(merged);
}
}  // namespace

double ArcSet::total() const {
  double s = 0;
  for (auto& p : iv) s += p.second - p.first;
  return s;
}

bool ArcSet::is_full(double tol) const { return total() >= kTau - tol; }

ArcSet arcset_intersect(const ArcSet& a, const ArcSet& b, double tol) {
  ArcSet out;
  size_t i = 0, j = 0;
  while (i < a.iv.size() && j < b.iv.size()) {
    double lo = std::max(a.iv[i].first, b.iv[j].first);
    double hi = std::min(a.iv[i].second, b.iv[j].second);
    if (hi - lo > tol) out.iv.emplace_back(lo, hi);
    if (a.iv[i].second < b.iv[j].second)
      ++i;
    else
      ++j;
  }
  return out;
}

ArcSet arcset_complement(const ArcSet& a, double tol) {
  ArcSet out;
  double cur = 0.0;
  for (auto& p : a.iv) {
    if (p.first - cur > tol) out.iv.emplace_back(cur, p.first);
    cur = std::max(cur, p.second);
  }
  if (kTau - cur > tol) out.iv.emplace_back(cur, kTau);
  return out;
}

std::vector<std::pair<double, double>> arc_components(const ArcSet& a, double tol) {
  std::vector<std::pair<double, double>> comps = a.iv;
  // merge across the wrap point
  if (comps.size() >= 2 && comps.front().first <= tol &&
      comps.back().second >= kTau - tol) {
    comps.front().first = comps.back().first - kTau;
    comps.pop_back();
  }
  return comps;
}

PreparedRegion prepare(const SphereRegion& r, const EngineConfig& cfg) {
  PreparedRegion out;
  out.n = r.n;
  double eps = cfg.tol.side;
  for (const auto& c : r.constraints) {
    PreparedConstraint pc;
    pc.normal = c.plane.normal;
    pc.offset = c.plane.offset;
    pc.mult = (c.required == Sign::Pos) ? 1.0 : -1.0;
    pc.closed = c.closed;
    // <n,x> over the sphere ranges over [-1,1]; constraints that hold
    // everywhere are dropped, constraints that hold nowhere empty the region.
    double best = pc.mult > 0 ? 1.0 - pc.offset : pc.offset + 1.0;
    double worst = pc.mult > 0 ? -1.0 - pc.offset : pc.offset - 1.0;
    if (best <= eps) {
      out.provably_empty = true;
      out.cons.clear();
      return out;
    }
    if (worst >= -eps) continue;  // redundant beyond the sphere
    out.cons.push_back(pc);
  }
  return out;
}

ArcSet arcs_of_region(const PreparedRegion& r, const EngineConfig& cfg) {
  double tol = cfg.tol.angle;
  ArcSet acc;
  acc.iv.emplace_back(0.0, kTau);
  if (r.provably_empty) {
    acc.iv.clear();
    return acc;
  }
  for (const auto& c : r.cons) {
    // slack(theta) = mult*(cos(theta - phi) - p) with phi the normal angle
    double phi = std::atan2(c.normal[1], c.normal[0]);
    double p = c.offset;
    double alpha = std::acos(std::clamp(p, -1.0, 1.0));
    ArcSet one;
    if (c.mult > 0)
      push_arc(one.iv, phi - alpha, 2 * alpha);
    else
      push_arc(one.iv, phi + alpha, kTau - 2 * alpha);
    normalize(one.iv, tol);
    acc = arcset_intersect(acc, one, tol);
    if (acc.iv.empty()) break;
  }
  normalize(acc.iv, tol);
  return acc;
}

namespace {

class ArcDecomposition final : public RegionDecomposition {
 public:
  ArcDecomposition(const SphereRegion& r, bool complement, const EngineConfig& cfg)
      : cfg_(cfg) {
    PreparedRegion pr = prepare(r, cfg);
    ArcSet arcs = arcs_of_region(pr, cfg);
    if (complement) arcs = arcset_complement(arcs, cfg.tol.angle);
    arcs_ = arc_components(arcs, cfg.tol.angle);
    bool full = arcs_.size() == 1 && arcs_[0].second - arcs_[0].first >= kTau - cfg.tol.angle;
    for (auto& a : arcs_) {
      ComponentInfo ci;
      double mid = 0.5 * (a.first + a.second);
      ci.witness = Vec(std::cos(mid), std::sin(mid));
      ci.margin = margin_at(ci.witness, pr, complement);
      ci.euler = full ? 0 : 1;
      ci.cells = 1;
      infos_.push_back(ci);
    }
  }

  int count() const override { return static_cast<int>(arcs_.size()); }
  const ComponentInfo& component(int idx) const override {
    return infos_[static_cast<size_t>(idx)];
  }
  int component_containing(const Vec& x) const override {
    double th = std::atan2(x[1], x[0]);
    for (size_t i = 0; i < arcs_.size(); ++i) {
      double lo = arcs_[i].first, hi = arcs_[i].second;
      for (double shift : {0.0, kTau, -kTau})
        if (th + shift >= lo - cfg_.tol.angle && th + shift <= hi + cfg_.tol.angle)
          return static_cast<int>(i);
    }
    return -1;
  }

 private:
  static double margin_at(const Vec& x, const PreparedRegion& pr, bool complement) {
    if (pr.cons.empty()) return 1.0;
    double m = 1e300;
    if (!complement) {
      for (auto& c : pr.cons) m = std::min(m, c.slack(x));
    } else {
      // distance into the complement: most violated constraint
      m = -1e300;
      for (auto& c : pr.cons) m = std::max(m, -c.slack(x));
    }
    return m;
  }

  EngineConfig cfg_;
  std::vector<std::pair<double, double>> arcs_;
  std::vector<ComponentInfo> infos_;
};

}  // namespace

std::unique_ptr<RegionDecomposition> decompose_s1(const SphereRegion& r, bool complement,
                                                  const EngineConfig& cfg) {
  return std::make_unique<ArcDecomposition>(r, complement, cfg);
}

bool s1_region_is_empty(const SphereRegion& r, const EngineConfig& cfg) {
  PreparedRegion pr = prepare(r, cfg);
  if (pr.provably_empty) return true;
  return arcs_of_region(pr, cfg).iv.empty();
}

bool s1_regions_equal(const SphereRegion& a, const SphereRegion& b, const EngineConfig& cfg) {
  ArcSet sa = arcs_of_region(prepare(a, cfg), cfg);
  ArcSet sb = arcs_of_region(prepare(b, cfg), cfg);
  double inter = arcset_intersect(sa, sb, cfg.tol.angle).total();
  double sym = sa.total() + sb.total() - 2 * inter;
  return sym <= 1e-7;
}

// ---- segment-mesh engine on the circle ----
//
// Counterpart of the icosphere engine one dimension down, kept around so
// the exact engine has an independent cross-check.

namespace {

struct Seg {
  double lo, hi;
  int depth;
};

// Certified classification of one segment; returns +1 in, -1 out, 0 ambiguous.
int classify_seg(double lo, double hi, const PreparedRegion& pr) {
  double mid = 0.5 * (lo + hi);
  Vec c(std::cos(mid), std::sin(mid));
  Vec a(std::cos(lo), std::sin(lo));
  double r = distance(c, a);  // chord radius bound, slack is 1-Lipschitz
  double minslack = 1e300;
  for (auto& pc : pr.cons) {
    double sl = pc.slack(c);
    if (sl < -r) return -1;
    minslack = std::min(minslack, sl);
  }
  if (minslack > r) return +1;
  return 0;
}

// Leaves in angular order with in/out state.
std::vector<std::pair<Seg, bool>> s1mesh_leaves(const PreparedRegion& pr,
                                                const EngineConfig& cfg) {
  std::vector<std::pair<Seg, bool>> leaves;
  if (pr.provably_empty) return leaves;
  int base = cfg.circle_segments;
  double step = kTau / base;
  double eps = cfg.tol.side;
  struct Rec {
    const PreparedRegion& pr;
    const EngineConfig& cfg;
    double eps;
    std::vector<std::pair<Seg, bool>>& out;
    void operator()(double lo, double hi, int depth) {
      int cls = classify_seg(lo, hi, pr);
      if (cls == 0 && depth < cfg.extra_depth) {
        double mid = 0.5 * (lo + hi);
        (*this)(lo, mid, depth + 1);
        (*this)(mid, hi, depth + 1);
        return;
      }
      bool in;
      if (cls != 0) {
        in = cls > 0;
      } else {
        double m = 0.5 * (lo + hi);
        Vec c(std::cos(m), std::sin(m));
        double ms = 1e300;
        for (auto& pc : pr.cons) ms = std::min(ms, pc.slack(c));
        in = ms > eps;
      }
      out.push_back({Seg{lo, hi, depth}, in});
    }
  } rec{pr, cfg, eps, leaves};
  for (int i = 0; i < base; ++i) rec(i * step, (i + 1) * step, 0);
  return leaves;
}

}  // namespace

bool s1mesh_region_is_empty(const SphereRegion& r, const EngineConfig& cfg) {
  auto leaves = s1mesh_leaves(prepare(r, cfg), cfg);
  for (auto& l : leaves)
    if (l.second) return false;
  return true;
}

int s1mesh_region_components(const SphereRegion& r, const EngineConfig& cfg) {
  auto leaves = s1mesh_leaves(prepare(r, cfg), cfg);
  if (leaves.empty()) return 0;
  int runs = 0;
  for (size_t i = 0; i < leaves.size(); ++i) {
    bool prev = leaves[(i + leaves.size() - 1) % leaves.size()].second;
    if (leaves[i].second && !prev) ++runs;
  }
  if (runs == 0 && leaves[0].second) return 1;  // full circle
  return runs;
}

bool s1mesh_regions_equal(const SphereRegion& a, const SphereRegion& b,
                          const EngineConfig& cfg) {
  // one refinement driven by both constraint sets, certified states compared
  PreparedRegion pa = prepare(a, cfg), pb = prepare(b, cfg);
  double eps = cfg.tol.side;
  bool mismatch = false;
  struct Rec {
    const PreparedRegion &pa, &pb;
    const EngineConfig& cfg;
    double eps;
    bool& mismatch;
    void operator()(double lo, double hi, int depth) {
      if (mismatch) return;
      int ca = pa.provably_empty ? -1 : classify_seg(lo, hi, pa);
      int cb = pb.provably_empty ? -1 : classify_seg(lo, hi, pb);
      if (ca != 0 && cb != 0) {
        if (ca != cb) mismatch = true;
        return;
      }
      if (depth < cfg.extra_depth) {
        double mid = 0.5 * (lo + hi);
        (*this)(lo, mid, depth + 1);
        (*this)(mid, hi, depth + 1);
      }
      // ambiguous at max depth: below resolution, ignored
    }
  } rec{pa, pb, cfg, eps, mismatch};
  int base = cfg.circle_segments;
  double step = kTau / base;
  for (int i = 0; i < base && !mismatch; ++i) rec(i * step, (i + 1) * step, 0);
  return !mismatch;
}

}  // namespace cleave::detail
