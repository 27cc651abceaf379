// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "cleave/geometry.hpp"

using namespace cleave;

namespace {

std::mt19937_64 rng(42);

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

Rotation rot2(double th) {
  Rotation r;
  r.dim = 2;
  r.at(0, 0) = std::cos(th);
  r.at(0, 1) = -std::sin(th);
  r.at(1, 0) = std::sin(th);
  r.at(1, 1) = std::cos(th);
  return r;
}

}  // namespace

TEST_CASE("make_hyperplane normalizes and preserves the oriented point set") {
  auto p = make_hyperplane(Vec(1, 0), 0.0);
  CHECK(p.normal == Vec(1, 0));
  CHECK(p.offset == 0.0);
  CHECK(side_of(p, Vec(0.5, 0)) == Sign::Pos);

  auto q = make_hyperplane(Vec(2, 0, 0), 1.0);
  CHECK(q.normal[0] == doctest::Approx(1.0));
  CHECK(q.offset == doctest::Approx(0.5));
  // sampled points agree between the raw pair and the normalized plane
  for (int t = 0; t < 50; ++t) {
    Vec x = random_unit(3);
    double raw = 2.0 * x[0] - 1.0;
    Sign s = side_of(q, x);
    if (std::abs(raw) > 1e-9) CHECK(sign_value(s) == (raw > 0 ? 1 : -1));
  }

  auto tangent_out = make_hyperplane(Vec(0, 1), 1.5);
  CHECK(std::abs(tangent_out.offset) > 1.0);  // misses the unit circle

  CHECK_THROWS_AS(make_hyperplane(Vec(0, 0), 1.0), ZeroNormalError);
}

TEST_CASE("side_of basic cases") {
  auto p = make_hyperplane(Vec(1, 0), 0.0);
  CHECK(side_of(p, Vec(0.5, 0)) == Sign::Pos);
  CHECK(side_of(p, Vec(0, 1)) == Sign::Zero);
  auto q = make_hyperplane(Vec(0, 1, 0), 0.25);
  CHECK(side_of(q, Vec(0, 1, 0)) == Sign::Pos);
}

TEST_CASE("reverse is an involution and flips sides") {
  auto p = make_hyperplane(Vec(1, 0), 0.3);
  auto r = reverse(p);
  CHECK(r.normal == Vec(-1, 0));
  CHECK(r.offset == doctest::Approx(-0.3));
  for (int t = 0; t < 100; ++t) {
    Vec nrm = random_unit(3);
    auto h = kappa(nrm, 0.4);
    auto hr = reverse(reverse(h));
    CHECK(distance(hr.normal, h.normal) < 1e-15);
    CHECK(hr.offset == doctest::Approx(h.offset));
    Vec x = random_unit(3);
    if (side_of(h, x) != Sign::Zero)
      CHECK(sign_value(side_of(reverse(h), x)) == -sign_value(side_of(h, x)));
  }
}

TEST_CASE("antipodally parallel") {
  auto a = make_hyperplane(Vec(1, 0), 0.2);
  auto b = make_hyperplane(Vec(-1, 0), 0.7);
  auto c = make_hyperplane(Vec(1, 0), 0.7);
  auto d = make_hyperplane(Vec(0, 1), 0.0);
  CHECK(antipodally_parallel(a, b));
  CHECK(antipodally_parallel(b, a));
  CHECK_FALSE(antipodally_parallel(a, c));
  CHECK_FALSE(antipodally_parallel(a, d));
  CHECK(parallel(a, c));
}

TEST_CASE("kappa") {
  auto p = kappa(Vec(1, 0, 0), 0.0);
  CHECK(p.normal == Vec(1, 0, 0));
  CHECK(p.offset == 0.0);
  auto q = kappa(Vec(0, 1), 0.5);
  CHECK(q.offset == doctest::Approx(0.5));
  CHECK(side_of(q, Vec(0, 1)) == Sign::Pos);
  // kappa(s,t) and kappa(-s,-t) share the point set with reversed sides
  for (int t = 0; t < 50; ++t) {
    Vec s = random_unit(2);
    auto h1 = kappa(s, 0.3);
    auto h2 = kappa(-1.0 * s, -0.3);
    Vec x = random_unit(2);
    if (side_of(h1, x) != Sign::Zero)
      CHECK(sign_value(side_of(h2, x)) == -sign_value(side_of(h1, x)));
  }
  CHECK_THROWS_AS(kappa(Vec(2, 0), 0.1), NotUnitError);
}

TEST_CASE("rotate acts on hyperplanes") {
  auto p = make_hyperplane(Vec(1, 0), 0.3);
  auto r90 = rot2(M_PI / 2);
  auto q = rotate(r90, p);
  CHECK(q.normal[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(q.normal[1] == doctest::Approx(1.0));
  CHECK(q.offset == doctest::Approx(0.3));

  CHECK(is_rotation(r90));
  auto id = Rotation::identity(2);
  auto pi = rotate(id, p);
  CHECK(distance(pi.normal, p.normal) < 1e-15);

  // action laws and side compatibility
  for (int t = 0; t < 50; ++t) {
    std::uniform_real_distribution<double> u(0, 2 * M_PI);
    auto r1 = rot2(u(rng)), r2 = rot2(u(rng));
    auto lhs = rotate(r1.compose(r2), p);
    auto rhs = rotate(r1, rotate(r2, p));
    CHECK(distance(lhs.normal, rhs.normal) < 1e-12);
    Vec x = random_unit(2);
    CHECK(side_of(rotate(r1, p), r1.apply(x)) == side_of(p, x));
  }
}

TEST_CASE("hemisphere membership") {
  CHECK(hemisphere_member(Vec(1, 0, 0), 0, Sign::Pos));
  CHECK(hemisphere_member(Vec(0, 0, 1), 2, Sign::Pos));
  CHECK_FALSE(hemisphere_member(Vec(0, 0, 1), 1, Sign::Pos));  // later coordinate nonzero
  CHECK_FALSE(hemisphere_member(Vec(-1, 0, 0), 0, Sign::Pos));
  CHECK(hemisphere_member(Vec(-1, 0, 0), 0, Sign::Neg));
  // S^i_+ inclusion chain on random samples
  for (int t = 0; t < 200; ++t) {
    Vec s = random_unit(3);
    for (int i = 0; i < 2; ++i)
      if (hemisphere_member(s, i, Sign::Pos)) {
        // then s lies in the sub-sphere S^i, so also in every later hemisphere's carrier
        for (int j = i + 1; j <= 2; ++j)
          CHECK((hemisphere_member(s, j, Sign::Pos) || hemisphere_member(s, j, Sign::Neg)));
      }
  }
}
