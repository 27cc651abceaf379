// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "cleave/region.hpp"

using namespace cleave;

namespace {

std::mt19937_64 rng(7);

Vec random_unit(int dim) {
  std::normal_distribution<double> g;
  Vec v = Vec::zero(dim);
  double n = 0;
  while (n < 1e-6) {
    for (int i = 0; i < dim; ++i) v[i] = g(rng);
    n = norm(v);
  }
  return (1.0 / n) * v;
}

// Independent oracle: dense sampling of the sphere.  Returns true when no
// sample satisfies all constraints.
bool empty_by_sampling(const SphereRegion& r, int samples) {
  std::mt19937_64 local(12345);
  std::normal_distribution<double> g;
  for (int t = 0; t < samples; ++t) {
    Vec x = Vec::zero(r.n + 1);
    double n = 0;
    while (n < 1e-6) {
      for (int i = 0; i <= r.n; ++i) x[i] = g(local);
      n = norm(x);
    }
    x = (1.0 / n) * x;
    bool ok = true;
    for (auto& c : r.constraints) {
      double mult = c.required == Sign::Pos ? 1.0 : -1.0;
      if (mult * (dot(c.plane.normal, x) - c.plane.offset) <= 0) {
        ok = false;
        break;
      }
    }
    if (ok) return false;
  }
  return true;
}

SphereRegion s1_halfplane(double nx, double ny, double off, Sign s = Sign::Pos) {
  return SphereRegion::full(1).with(make_hyperplane(Vec(nx, ny), off), s);
}

}  // namespace

TEST_CASE("emptiness on the circle") {
  CHECK_FALSE(region_is_empty(s1_halfplane(1, 0, 0)));
  // x > 0 and x < -0.5 (as the positive side of a reversed plane)
  auto contradictory =
      s1_halfplane(1, 0, 0).with(make_hyperplane(Vec(-1, 0), 0.5), Sign::Pos);
  CHECK(region_is_empty(contradictory));
}

TEST_CASE("emptiness on the sphere, dense-sample oracle") {
  auto r = SphereRegion::full(2)
               .with(make_hyperplane(Vec(1, 0, 0), 0.9), Sign::Pos)
               .with(make_hyperplane(Vec(0, 1, 0), 0.9), Sign::Pos);
  CHECK(empty_by_sampling(r, 1000000));
  CHECK(region_is_empty(r));

  auto r2 = SphereRegion::full(2)
                .with(make_hyperplane(Vec(1, 0, 0), 0.6), Sign::Pos)
                .with(make_hyperplane(Vec(0, 1, 0), 0.6), Sign::Pos);
  CHECK_FALSE(empty_by_sampling(r2, 1000000));
  CHECK_FALSE(region_is_empty(r2));
}

TEST_CASE("component counts") {
  CHECK(region_components(s1_halfplane(1, 0, 0)).size() == 1);
  auto band1 = SphereRegion::full(1)
                   .with(make_hyperplane(Vec(1, 0), -0.3), Sign::Pos)
                   .with(make_hyperplane(Vec(1, 0), 0.3), Sign::Neg);
  CHECK(region_components(band1).size() == 2);
  auto band2 = SphereRegion::full(2)
                   .with(make_hyperplane(Vec(1, 0, 0), -0.3), Sign::Pos)
                   .with(make_hyperplane(Vec(1, 0, 0), 0.3), Sign::Neg);
  CHECK(region_components(band2).size() == 1);
  // witnesses satisfy all constraints strictly
  for (auto& ci : region_components(band1)) {
    CHECK(ci.margin > 0);
    CHECK(std::abs(ci.witness[0]) < 0.3);
  }
}

TEST_CASE("region equality") {
  auto a = s1_halfplane(1, 0, 0);
  SphereRegion perm = a;
  perm.constraints.push_back({make_hyperplane(Vec(0, 1), -3.0), Sign::Pos, false});
  std::swap(perm.constraints[0], perm.constraints[1]);
  CHECK(regions_equal(a, perm));  // permuted list + redundant constraint
  CHECK_FALSE(regions_equal(a, s1_halfplane(1, 0, 0.1)));

  auto a2 = SphereRegion::full(2).with(make_hyperplane(Vec(1, 0, 0), 0.0), Sign::Pos);
  auto b2 = a2.with(make_hyperplane(Vec(0, 1, 0), -2.5), Sign::Pos);
  CHECK(regions_equal(a2, b2));
  CHECK_FALSE(regions_equal(
      a2, SphereRegion::full(2).with(make_hyperplane(Vec(1, 0, 0), 0.1), Sign::Pos)));
}

TEST_CASE("euler characteristic") {
  CHECK(region_euler(SphereRegion::full(2)) == 2);
  CHECK(region_euler(SphereRegion::full(1)) == 0);
  auto hemi = SphereRegion::full(2).with(make_hyperplane(Vec(0, 0, 1), 0.0), Sign::Pos, true);
  CHECK(region_euler(hemi) == 1);
  // two disjoint closed caps: chi = 2, one per component
  auto band = SphereRegion::full(2)
                  .with(make_hyperplane(Vec(1, 0, 0), -0.55), Sign::Pos)
                  .with(make_hyperplane(Vec(1, 0, 0), 0.55), Sign::Neg);
  auto dec = decompose_complement(band);
  REQUIRE(dec->count() == 2);
  int chi = 0;
  for (int i = 0; i < dec->count(); ++i) chi += dec->component(i).euler;
  CHECK(chi == 2);
  // the band itself is an annulus
  auto bdec = decompose_region(band);
  REQUIRE(bdec->count() == 1);
  CHECK(bdec->component(0).euler == 0);
}

TEST_CASE("complement decomposition and point location") {
  auto cap = SphereRegion::full(2).with(make_hyperplane(Vec(0, 0, 1), 0.2), Sign::Pos);
  auto dec = decompose_complement(cap);
  REQUIRE(dec->count() == 1);
  CHECK(dec->component(0).euler == 1);
  CHECK(dot(dec->component(0).witness, Vec(0, 0, 1)) < 0.2);
  CHECK(dec->component_containing(Vec(0, 0, 1)) == -1);
  CHECK(dec->component_containing(Vec(0, 0, -1)) == 0);
}

TEST_CASE("faces adjacent") {
  // two chords of the disk crossing at an interior point (2x2 solve: the
  // lines x=0 and y=0 meet at the origin, norm 0 < 1)
  BallFace f{make_hyperplane(Vec(1, 0), 0.0), {}};
  BallFace g{make_hyperplane(Vec(0, 1), 0.0), {}};
  CHECK(faces_adjacent(f, g));
  CHECK(faces_adjacent(f, f));
  BallFace par{make_hyperplane(Vec(1, 0), 0.4), {}};
  CHECK_FALSE(faces_adjacent(f, par));

  // 3d: faces whose carriers cross, with closure constraints that meet
  // exactly at z = 0.5
  BallFace a{make_hyperplane(Vec(1, 0, 0), 0.0),
             {{make_hyperplane(Vec(0, 0, 1), 0.5), Sign::Pos, true}}};
  BallFace b{make_hyperplane(Vec(0, 1, 0), 0.0),
             {{make_hyperplane(Vec(0, 0, 1), 0.5), Sign::Neg, true}}};
  CHECK(faces_adjacent(a, b));
  // c lives below z = 0.4, a2 above z = 0.5: the carriers cross but the
  // constrained faces stay apart
  BallFace c{make_hyperplane(Vec(0, 1, 0), 0.0),
             {{make_hyperplane(Vec(0, 0, 1), 0.4), Sign::Neg, true}}};
  BallFace a2{make_hyperplane(Vec(1, 0, 0), 0.0),
              {{make_hyperplane(Vec(0, 0, 1), 0.5), Sign::Pos, true}}};
  CHECK_FALSE(faces_adjacent(a2, c));
}

TEST_CASE("genericity guard") {
  auto tangent =
      SphereRegion::full(2).with(make_hyperplane(Vec(0, 0, 1), 1.0 - 1e-8), Sign::Pos);
  CHECK_THROWS_AS(region_is_empty(tangent), NonGenericError);
  // identical cut circles written with opposite orientations
  auto dup = SphereRegion::full(2)
                 .with(make_hyperplane(Vec(0, 0, 1), 0.3), Sign::Pos)
                 .with(make_hyperplane(Vec(0, 0, -1), -0.3), Sign::Neg);
  CHECK_THROWS_AS(region_is_empty(dup), NonGenericError);
  // two circles meeting tangentially on the sphere have small margin
  std::vector<OrientedHyperplane> planes = {make_hyperplane(Vec(0, 0, 1), 0.5),
                                            make_hyperplane(Vec(1, 0, 0), 0.866025403784)};
  CHECK(genericity_margin(planes, 2) < 1e-5);
}

TEST_CASE("oracle equivalence of the exact and mesh engines on the circle") {
  // the acceptance suite runs the full 1000 systems; a fast slice here
  std::uniform_real_distribution<double> uoff(-0.95, 0.95);
  std::uniform_int_distribution<int> nc(1, 4);
  std::uniform_int_distribution<int> coin(0, 1);
  int done = 0;
  while (done < 150) {
    SphereRegion r = SphereRegion::full(1);
    int m = nc(rng);
    for (int i = 0; i < m; ++i)
      r = r.with(kappa(random_unit(2), uoff(rng)), coin(rng) ? Sign::Pos : Sign::Neg);
    std::vector<OrientedHyperplane> planes;
    for (auto& c : r.constraints) planes.push_back(c.plane);
    if (genericity_margin(planes, 1) < 1e-2) continue;  // keep both engines in-contract
    ++done;
    bool exact_empty = region_is_empty(r);
    CHECK(exact_empty == oracle_s1_mesh_is_empty(r));
    if (!exact_empty)
      CHECK(static_cast<int>(region_components(r).size()) == oracle_s1_mesh_components(r));
    CHECK(oracle_s1_mesh_equal(r, r));
  }
}

TEST_CASE("component count invariant under permutation and redundancy") {
  for (int trial = 0; trial < 30; ++trial) {
    SphereRegion r = SphereRegion::full(2);
    std::uniform_real_distribution<double> uoff(-0.6, 0.6);
    for (int i = 0; i < 3; ++i) r = r.with(kappa(random_unit(3), uoff(rng)), Sign::Pos);
    std::vector<OrientedHyperplane> planes;
    for (auto& c : r.constraints) planes.push_back(c.plane);
    if (genericity_margin(planes, 2) < 2e-2) continue;
    if (region_is_empty(r)) continue;
    auto base = region_components(r).size();
    SphereRegion shuffled = r;
    std::swap(shuffled.constraints[0], shuffled.constraints[2]);
    CHECK(region_components(shuffled).size() == base);
    auto redundant = r.with(make_hyperplane(Vec(0, 0, 1), -4.0), Sign::Pos);
    CHECK(region_components(redundant).size() == base);
  }
}
