// SPDX-License-Identifier: Apache-2.0
#include "cleave/geometry.hpp"

namespace cleave {

bool is_rotation(const Rotation& r, double eps) {
  // orthogonality
  for (int i = 0; i < r.dim; ++i)
    for (int j = 0; j < r.dim; ++j) {
      double s = 0.0;
      for (int k = 0; k < r.dim; ++k) s += r.at(k, i) * r.at(k, j);
      double expect = (i == j) ? 1.0 : 0.0;
      if (std::abs(s - expect) > eps) return false;
    }
  double det;
  if (r.dim == 2) {
    det = r.at(0, 0) * r.at(1, 1) - r.at(0, 1) * r.at(1, 0);
  } else {
    det = r.at(0, 0) * (r.at(1, 1) * r.at(2, 2) - r.at(1, 2) * r.at(2, 1)) -
          r.at(0, 1) * (r.at(1, 0) * r.at(2, 2) - r.at(1, 2) * r.at(2, 0)) +
          r.at(0, 2) * (r.at(1, 0) * r.at(2, 1) - r.at(1, 1) * r.at(2, 0));
  }
  return std::abs(det - 1.0) <= eps;
}

OrientedHyperplane make_hyperplane(const Vec& normal, double offset, double eps_unit) {
  double n = norm(normal);
  if (n < eps_unit) throw ZeroNormalError();
  OrientedHyperplane p;
  p.ambient_dim = normal.dim;
  p.normal = (1.0 / n) * normal;
  p.offset = offset / n;
  return p;
}

Sign side_of(const OrientedHyperplane& p, const Vec& x, double eps_side) {
  if (x.dim != p.ambient_dim)
    throw DimMismatchError("side_of: point dimension does not match hyperplane");
  double d = dot(p.normal, x) - p.offset;
  if (d > eps_side) return Sign::Pos;
  if (d < -eps_side) return Sign::Neg;
  return Sign::Zero;
}

OrientedHyperplane reverse(const OrientedHyperplane& p) {
  OrientedHyperplane q = p;
  q.normal = -1.0 * p.normal;
  q.offset = -p.offset;
  return q;
}

bool antipodally_parallel(const OrientedHyperplane& p, const OrientedHyperplane& q,
                          double eps_unit) {
  if (p.ambient_dim != q.ambient_dim)
    throw DimMismatchError("antipodally_parallel: ambient dimensions differ");
  return distance(p.normal, -1.0 * q.normal) <= eps_unit;
}

bool parallel(const OrientedHyperplane& p, const OrientedHyperplane& q,
              double eps_unit) {
  if (p.ambient_dim != q.ambient_dim)
    throw DimMismatchError("parallel: ambient dimensions differ");
  return distance(p.normal, q.normal) <= eps_unit ||
         distance(p.normal, -1.0 * q.normal) <= eps_unit;
}

OrientedHyperplane kappa(const Vec& s, double t, double eps_unit) {
  double n = norm(s);
  if (std::abs(n - 1.0) > eps_unit) throw NotUnitError(n);
  OrientedHyperplane p;
  p.ambient_dim = s.dim;
  p.normal = s;
  p.offset = t;
  return p;
}

OrientedHyperplane rotate(const Rotation& rho, const OrientedHyperplane& p) {
  if (rho.dim != p.ambient_dim)
    throw DimMismatchError("rotate: rotation dimension does not match hyperplane");
  OrientedHyperplane q = p;
  q.normal = rho.apply(p.normal);
  return q;
}

bool hemisphere_member(const Vec& s, int i, Sign sign, double eps_side) {
  int n = s.dim - 1;  // sphere dimension
  if (i < 0 || i > n) throw BadIndexError("hemisphere_member: bad coordinate index");
  if (sign == Sign::Pos) {
    if (s[i] < -eps_side) return false;
  } else if (sign == Sign::Neg) {
    if (s[i] > eps_side) return false;
  } else {
    throw BadIndexError("hemisphere_member: sign must be + or -");
  }
  for (int j = i + 1; j <= n; ++j)
    if (std::abs(s[j]) > eps_side) return false;
  return true;
}

}  // namespace cleave
