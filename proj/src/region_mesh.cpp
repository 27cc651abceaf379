// SPDX-License-Identifier: Apache-2.0
// Geodesic icosphere engine for S^2.  A query classifies every base
// triangle against the constraint slacks with a chordal Lipschitz bound;
// ambiguous cells refine locally.  Connectivity comes from the base
// neighbour table away from constraint boundaries and from minimal
// sub-edge keys where refinement introduced T-junctions.
#include <array>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "region_engine.hpp"

namespace cleave::detail {

namespace {

inline uint64_t edge_key(int a, int b) {
  if (a > b) std::swap(a, b);
  return (static_cast<uint64_t>(a) << 32) | static_cast<uint32_t>(b);
}

Vec cross(const Vec& a, const Vec& b) {
  return Vec(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
             a[0] * b[1] - a[1] * b[0]);
}

double det3(const Vec& a, const Vec& b, const Vec& c) { return dot(cross(a, b), c); }

IcosphereMesh build_icosphere(int level) {
  IcosphereMesh m;
  m.level = level;
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec> v = {
      {-1, phi, 0}, {1, phi, 0},   {-1, -phi, 0}, {1, -phi, 0},
      {0, -1, phi}, {0, 1, phi},   {0, -1, -phi}, {0, 1, -phi},
      {phi, 0, -1}, {phi, 0, 1},   {-phi, 0, -1}, {-phi, 0, 1}};
  for (auto& p : v) m.verts.push_back(normalized(p));
  std::vector<std::array<int, 3>> faces = {
      {0, 11, 5},  {0, 5, 1},   {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
      {1, 5, 9},   {5, 11, 4},  {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
      {3, 9, 4},   {3, 4, 2},   {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
      {4, 9, 5},   {2, 4, 11},  {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  // outward orientation
  for (auto& f : faces)
    if (det3(m.verts[static_cast<size_t>(f[0])], m.verts[static_cast<size_t>(f[1])],
             m.verts[static_cast<size_t>(f[2])]) < 0)
      std::swap(f[1], f[2]);
  m.tris = faces;

  for (int l = 0; l < level; ++l) {
    std::unordered_map<uint64_t, int> mid;
    auto midpoint = [&](int a, int b) {
      uint64_t k = edge_key(a, b);
      auto it = mid.find(k);
      if (it != mid.end()) return it->second;
      Vec p = normalized(m.verts[static_cast<size_t>(a)] + m.verts[static_cast<size_t>(b)]);
      int idx = static_cast<int>(m.verts.size());
      m.verts.push_back(p);
      mid.emplace(k, idx);
      return idx;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(m.tris.size() * 4);
    for (auto& t : m.tris) {
      int a = t[0], b = t[1], c = t[2];
      int ab = midpoint(a, b), bc = midpoint(b, c), ca = midpoint(c, a);
      next.push_back({a, ab, ca});
      next.push_back({b, bc, ab});
      next.push_back({c, ca, bc});
      next.push_back({ab, bc, ca});
    }
    m.tris = std::move(next);
  }

  // neighbour across each edge (tri[i], tri[i+1])
  m.nbrs.assign(m.tris.size(), {-1, -1, -1});
  std::unordered_map<uint64_t, std::pair<int, int>> half;  // key -> (tri, edge)
  half.reserve(m.tris.size() * 2);
  for (int t = 0; t < static_cast<int>(m.tris.size()); ++t) {
    for (int e = 0; e < 3; ++e) {
      uint64_t k = edge_key(m.tris[static_cast<size_t>(t)][static_cast<size_t>(e)],
                            m.tris[static_cast<size_t>(t)][static_cast<size_t>((e + 1) % 3)]);
      auto it = half.find(k);
      if (it == half.end()) {
        half.emplace(k, std::make_pair(t, e));
      } else {
        m.nbrs[static_cast<size_t>(t)][static_cast<size_t>(e)] = it->second.first;
        m.nbrs[static_cast<size_t>(it->second.first)][static_cast<size_t>(it->second.second)] = t;
      }
    }
  }
  return m;
}

}  // namespace

const IcosphereMesh& IcosphereMesh::get(int level) {
  static std::mutex mu;
  static std::unordered_map<int, std::unique_ptr<IcosphereMesh>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(level);
  if (it == cache.end())
    it = cache.emplace(level, std::make_unique<IcosphereMesh>(build_icosphere(level))).first;
  return *it->second;
}

namespace {

enum LeafState : int8_t { kOutCert = 0, kOutCentroid = 1, kInCentroid = 2, kInCert = 3 };

inline bool state_in(int8_t s) { return s >= kInCentroid; }

struct Leaf {
  int v0, v1, v2;
  int base_tri;
  int8_t depth;
  int8_t state;
  float margin;  // min slack at centroid (signed into the region)
  Vec centroid;
};

// Classified refinement of the whole sphere against one prepared region.
struct Classified {
  const IcosphereMesh* mesh = nullptr;
  std::vector<Vec> verts;
  std::unordered_map<uint64_t, int> midcache;
  std::vector<Leaf> leaves;
  std::vector<std::pair<int, int>> base_leaf_range;  // [begin,end) into leaves
  std::vector<char> base_refined;
  bool any_refined = false;

  int midpoint(int a, int b) {
    uint64_t k = edge_key(a, b);
    auto it = midcache.find(k);
    if (it != midcache.end()) return it->second;
    Vec p = normalized(verts[static_cast<size_t>(a)] + verts[static_cast<size_t>(b)]);
    int idx = static_cast<int>(verts.size());
    verts.push_back(p);
    midcache.emplace(k, idx);
    return idx;
  }

  void minimal_subedges(int a, int b, std::vector<uint64_t>& out) const {
    auto it = midcache.find(edge_key(a, b));
    if (it == midcache.end()) {
      out.push_back(edge_key(a, b));
    } else {
      minimal_subedges(a, it->second, out);
      minimal_subedges(it->second, b, out);
    }
  }
};

void classify_recursive(Classified& cl, const PreparedRegion& pr, const EngineConfig& cfg,
                        int v0, int v1, int v2, int base_tri, int depth) {
  const Vec &a = cl.verts[static_cast<size_t>(v0)], &b = cl.verts[static_cast<size_t>(v1)],
            &c = cl.verts[static_cast<size_t>(v2)];
  Vec cen = normalized(a + b + c);
  double rad = std::sqrt(std::max({dot(cen - a, cen - a), dot(cen - b, cen - b),
                                   dot(cen - c, cen - c)}));
  double minslack = 1e300;
  bool out_cert = false;
  for (const auto& pc : pr.cons) {
    double sl = pc.slack(cen);
    minslack = std::min(minslack, sl);
    if (sl < -rad) {
      out_cert = true;
      break;
    }
  }
  int8_t state;
  if (out_cert) {
    state = kOutCert;
  } else if (minslack > rad) {
    state = kInCert;
  } else if (depth < cfg.extra_depth) {
    cl.base_refined[static_cast<size_t>(base_tri)] = 1;
    cl.any_refined = true;
    int ab = cl.midpoint(v0, v1), bc = cl.midpoint(v1, v2), ca = cl.midpoint(v2, v0);
    classify_recursive(cl, pr, cfg, v0, ab, ca, base_tri, depth + 1);
    classify_recursive(cl, pr, cfg, v1, bc, ab, base_tri, depth + 1);
    classify_recursive(cl, pr, cfg, v2, ca, bc, base_tri, depth + 1);
    classify_recursive(cl, pr, cfg, ab, bc, ca, base_tri, depth + 1);
    return;
  } else {
    state = minslack > cfg.tol.side ? kInCentroid : kOutCentroid;
  }
  Leaf lf;
  lf.v0 = v0;
  lf.v1 = v1;
  lf.v2 = v2;
  lf.base_tri = base_tri;
  lf.depth = static_cast<int8_t>(depth);
  lf.state = state;
  lf.margin = static_cast<float>(minslack);
  lf.centroid = cen;
  cl.leaves.push_back(lf);
}

Classified classify_sphere(const PreparedRegion& pr, const EngineConfig& cfg) {
  Classified cl;
  cl.mesh = &IcosphereMesh::get(cfg.mesh_level);
  cl.verts = cl.mesh->verts;
  cl.base_refined.assign(cl.mesh->tris.size(), 0);
  cl.leaves.reserve(cl.mesh->tris.size() + 1024);
  cl.base_leaf_range.resize(cl.mesh->tris.size());
  for (int t = 0; t < static_cast<int>(cl.mesh->tris.size()); ++t) {
    int begin = static_cast<int>(cl.leaves.size());
    auto& tri = cl.mesh->tris[static_cast<size_t>(t)];
    if (pr.provably_empty) {
      Leaf lf;
      lf.v0 = tri[0];
      lf.v1 = tri[1];
      lf.v2 = tri[2];
      lf.base_tri = t;
      lf.depth = 0;
      lf.state = kOutCert;
      lf.margin = -1.0f;
      lf.centroid = normalized(cl.verts[static_cast<size_t>(tri[0])] +
                               cl.verts[static_cast<size_t>(tri[1])] +
                               cl.verts[static_cast<size_t>(tri[2])]);
      cl.leaves.push_back(lf);
    } else {
      classify_recursive(cl, pr, cfg, tri[0], tri[1], tri[2], t, 0);
    }
    cl.base_leaf_range[static_cast<size_t>(t)] = {begin, static_cast<int>(cl.leaves.size())};
  }
  return cl;
}

// union-find
struct DSU {
  std::vector<int> parent;
  explicit DSU(size_t n) : parent(n) {
    for (size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }
  int find(int a) {
    while (parent[static_cast<size_t>(a)] != a) {
      parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
      a = parent[static_cast<size_t>(a)];
    }
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<size_t>(b)] = a;
  }
};

class MeshDecomposition final : public RegionDecomposition {
 public:
  MeshDecomposition(const SphereRegion& r, bool complement, const EngineConfig& cfg)
      : cfg_(cfg), cl_(classify_sphere(prepare(r, cfg), cfg)), want_in_(!complement) {
    build_components();
  }

  int count() const override { return static_cast<int>(infos_.size()); }
  const ComponentInfo& component(int idx) const override {
    auto& ci = infos_[static_cast<size_t>(idx)];
    if (ci.euler == kEulerUnset) ci.euler = compute_euler(idx);
    return ci;
  }
  int component_containing(const Vec& x) const override {
    int base = locate_base_tri(x);
    if (base < 0) return -1;
    auto [b, e] = cl_.base_leaf_range[static_cast<size_t>(base)];
    int best = -1;
    int best_depth = -1;
    for (int i = b; i < e; ++i) {
      const Leaf& lf = cl_.leaves[static_cast<size_t>(i)];
      if (lf.depth > best_depth && point_in(lf, x)) {
        best = i;
        best_depth = lf.depth;
      }
    }
    if (best < 0) return -1;
    int lbl = labels_[static_cast<size_t>(best)];
    return lbl;
  }

 private:
  static constexpr int kEulerUnset = -1000000;

  bool selected(const Leaf& lf) const { return state_in(lf.state) == want_in_; }

  bool point_in(const Leaf& lf, const Vec& x) const {
    const Vec &a = cl_.verts[static_cast<size_t>(lf.v0)], &b = cl_.verts[static_cast<size_t>(lf.v1)],
              &c = cl_.verts[static_cast<size_t>(lf.v2)];
    double t = 1e-12;
    return det3(a, b, x) >= -t && det3(b, c, x) >= -t && det3(c, a, x) >= -t;
  }

  int locate_base_tri(const Vec& x) const {
    const auto& mesh = *cl_.mesh;
    for (int t = 0; t < static_cast<int>(mesh.tris.size()); ++t) {
      auto& tri = mesh.tris[static_cast<size_t>(t)];
      const Vec &a = mesh.verts[static_cast<size_t>(tri[0])],
                &b = mesh.verts[static_cast<size_t>(tri[1])],
                &c = mesh.verts[static_cast<size_t>(tri[2])];
      double tol = 1e-12;
      if (det3(a, b, x) >= -tol && det3(b, c, x) >= -tol && det3(c, a, x) >= -tol) return t;
    }
    return -1;
  }

  void build_components() {
    const auto& mesh = *cl_.mesh;
    size_t n = cl_.leaves.size();
    DSU dsu(n);

    // fast path: unrefined base cells via the neighbour table
    for (int t = 0; t < static_cast<int>(mesh.tris.size()); ++t) {
      auto [b, e] = cl_.base_leaf_range[static_cast<size_t>(t)];
      if (e - b != 1) continue;
      if (!selected(cl_.leaves[static_cast<size_t>(b)])) continue;
      for (int ed = 0; ed < 3; ++ed) {
        int nb = mesh.nbrs[static_cast<size_t>(t)][static_cast<size_t>(ed)];
        if (nb <= t) continue;  // each pair once
        auto [nb_b, nb_e] = cl_.base_leaf_range[static_cast<size_t>(nb)];
        if (nb_e - nb_b != 1) continue;  // refined neighbour handled by edge keys
        if (selected(cl_.leaves[static_cast<size_t>(nb_b)])) dsu.unite(b, nb_b);
      }
    }

    // edge-key path wherever refinement happened
    if (cl_.any_refined) {
      std::unordered_map<uint64_t, int> first_on_edge;
      std::vector<uint64_t> keys;
      for (size_t i = 0; i < n; ++i) {
        const Leaf& lf = cl_.leaves[i];
        if (!selected(lf)) continue;
        bool near_refined = cl_.base_refined[static_cast<size_t>(lf.base_tri)];
        if (!near_refined)
          for (int ed = 0; ed < 3 && !near_refined; ++ed) {
            int nb = mesh.nbrs[static_cast<size_t>(lf.base_tri)][static_cast<size_t>(ed)];
            if (nb >= 0 && cl_.base_refined[static_cast<size_t>(nb)]) near_refined = true;
          }
        if (!near_refined) continue;
        keys.clear();
        cl_.minimal_subedges(lf.v0, lf.v1, keys);
        cl_.minimal_subedges(lf.v1, lf.v2, keys);
        cl_.minimal_subedges(lf.v2, lf.v0, keys);
        for (uint64_t k : keys) {
          auto it = first_on_edge.find(k);
          if (it == first_on_edge.end())
            first_on_edge.emplace(k, static_cast<int>(i));
          else
            dsu.unite(it->second, static_cast<int>(i));
        }
      }
    }

    labels_.assign(n, -1);
    std::unordered_map<int, int> root_to_label;
    for (size_t i = 0; i < n; ++i) {
      if (!selected(cl_.leaves[i])) continue;
      int root = dsu.find(static_cast<int>(i));
      auto it = root_to_label.find(root);
      int lbl;
      if (it == root_to_label.end()) {
        lbl = static_cast<int>(infos_.size());
        root_to_label.emplace(root, lbl);
        ComponentInfo ci;
        ci.euler = kEulerUnset;
        ci.margin = -1e300;
        infos_.push_back(ci);
        comp_cells_.push_back({});
      } else {
        lbl = it->second;
      }
      labels_[i] = lbl;
      auto& ci = infos_[static_cast<size_t>(lbl)];
      ci.cells += 1;
      const Leaf& lf = cl_.leaves[i];
      double m = want_in_ ? lf.margin : -lf.margin;
      if (m > ci.margin) {
        ci.margin = m;
        ci.witness = lf.centroid;
      }
      comp_cells_[static_cast<size_t>(lbl)].push_back(static_cast<int>(i));
    }
  }

  int compute_euler(int idx) const {
    std::unordered_set<uint64_t> edges;
    std::unordered_set<int> vertices;
    std::vector<uint64_t> keys;
    size_t faces = 0;
    for (int li : comp_cells_[static_cast<size_t>(idx)]) {
      const Leaf& lf = cl_.leaves[static_cast<size_t>(li)];
      ++faces;
      keys.clear();
      cl_.minimal_subedges(lf.v0, lf.v1, keys);
      cl_.minimal_subedges(lf.v1, lf.v2, keys);
      cl_.minimal_subedges(lf.v2, lf.v0, keys);
      for (uint64_t k : keys) {
        edges.insert(k);
        vertices.insert(static_cast<int>(k >> 32));
        vertices.insert(static_cast<int>(k & 0xffffffffu));
      }
    }
    return static_cast<int>(vertices.size()) - static_cast<int>(edges.size()) +
           static_cast<int>(faces);
  }

  EngineConfig cfg_;
  Classified cl_;
  bool want_in_;
  std::vector<int> labels_;
  mutable std::vector<ComponentInfo> infos_;
  std::vector<std::vector<int>> comp_cells_;
};

}  // namespace

std::unique_ptr<RegionDecomposition> decompose_s2(const SphereRegion& r, bool complement,
                                                  const EngineConfig& cfg) {
  return std::make_unique<MeshDecomposition>(r, complement, cfg);
}

bool s2_region_is_empty(const SphereRegion& r, const EngineConfig& cfg) {
  PreparedRegion pr = prepare(r, cfg);
  if (pr.provably_empty) return true;
  if (pr.cons.empty()) return false;
  const IcosphereMesh& mesh = IcosphereMesh::get(cfg.mesh_level);

  // depth-first with early exit at the first in-region cell
  struct Rec {
    const PreparedRegion& pr;
    const EngineConfig& cfg;
    const std::vector<Vec>& verts;
    bool found = false;
    void visit(const Vec& a, const Vec& b, const Vec& c, int depth) {
      if (found) return;
      Vec cen = normalized(a + b + c);
      double rad = std::sqrt(std::max({dot(cen - a, cen - a), dot(cen - b, cen - b),
                                       dot(cen - c, cen - c)}));
      double minslack = 1e300;
      for (const auto& pc : pr.cons) {
        double sl = pc.slack(cen);
        if (sl < -rad) return;  // certified out
        minslack = std::min(minslack, sl);
      }
      if (minslack > rad || (depth >= cfg.extra_depth && minslack > cfg.tol.side)) {
        found = true;
        return;
      }
      if (depth >= cfg.extra_depth) return;
      Vec ab = normalized(a + b), bc = normalized(b + c), ca = normalized(c + a);
      visit(a, ab, ca, depth + 1);
      visit(b, bc, ab, depth + 1);
      visit(c, ca, bc, depth + 1);
      visit(ab, bc, ca, depth + 1);
    }
  } rec{pr, cfg, mesh.verts};
  for (auto& tri : mesh.tris) {
    rec.visit(mesh.verts[static_cast<size_t>(tri[0])], mesh.verts[static_cast<size_t>(tri[1])],
              mesh.verts[static_cast<size_t>(tri[2])], 0);
    if (rec.found) return false;
  }
  return true;
}

bool s2_regions_equal(const SphereRegion& a, const SphereRegion& b, const EngineConfig& cfg) {
  PreparedRegion pa = prepare(a, cfg), pb = prepare(b, cfg);
  const IcosphereMesh& mesh = IcosphereMesh::get(cfg.mesh_level);

  struct Rec {
    const PreparedRegion &pa, &pb;
    const EngineConfig& cfg;
    bool mismatch = false;

    // +1 certified in, -1 certified out, 0 ambiguous
    static int cls(const PreparedRegion& pr, const Vec& cen, double rad) {
      if (pr.provably_empty) return -1;
      double minslack = 1e300;
      for (const auto& pc : pr.cons) {
        double sl = pc.slack(cen);
        if (sl < -rad) return -1;
        minslack = std::min(minslack, sl);
      }
      return minslack > rad ? +1 : 0;
    }

    void visit(const Vec& a, const Vec& b, const Vec& c, int depth) {
      if (mismatch) return;
      Vec cen = normalized(a + b + c);
      double rad = std::sqrt(std::max({dot(cen - a, cen - a), dot(cen - b, cen - b),
                                       dot(cen - c, cen - c)}));
      int ca = cls(pa, cen, rad), cb = cls(pb, cen, rad);
      if (ca != 0 && cb != 0) {
        if (ca != cb) mismatch = true;
        return;
      }
      if (depth >= cfg.extra_depth) return;  // below resolution
      Vec ab = normalized(a + b), bc = normalized(b + c), cca = normalized(c + a);
      visit(a, ab, cca, depth + 1);
      visit(b, bc, ab, depth + 1);
      visit(c, cca, bc, depth + 1);
      visit(ab, bc, cca, depth + 1);
    }
  } rec{pa, pb, cfg};
  for (auto& tri : mesh.tris) {
    rec.visit(mesh.verts[static_cast<size_t>(tri[0])], mesh.verts[static_cast<size_t>(tri[1])],
              mesh.verts[static_cast<size_t>(tri[2])], 0);
    if (rec.mismatch) return false;
  }
  return true;
}

}  // namespace cleave::detail
