// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <initializer_list>
#include <vector>

#include "cleave/errors.hpp"

namespace cleave {

/// Tolerances used by geometric predicates.  All configurable; the
/// defaults are shared by the whole library through EngineConfig.
struct Tolerances {
  double unit = 1e-9;     // unit-norm / orthogonality checks
  double side = 1e-9;     // sidedness: |<v,x> - p| <= side counts as "on"
  double tangent = 1e-6;  // genericity guard: tangency / concurrence margin
  double angle = 1e-9;    // angular comparisons in the exact S^1 engine
};

enum class Sign : int { Neg = -1, Zero = 0, Pos = +1 };

inline Sign opposite(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }
inline int sign_value(Sign s) { return static_cast<int>(s); }

/// Small fixed-capacity vector for points of R^2 / R^3.
struct Vec {
  int dim = 0;
  std::array<double, 3> c{0.0, 0.0, 0.0};

  Vec() = default;
  Vec(double x, double y) : dim(2), c{x, y, 0.0} {}
  Vec(double x, double y, double z) : dim(3), c{x, y, z} {}

  static Vec zero(int dim) {
    Vec v;
    v.dim = dim;
    return v;
  }
  static Vec axis(int dim, int i, double value = 1.0) {
    Vec v = zero(dim);
    v.c[static_cast<size_t>(i)] = value;
    return v;
  }

  double operator[](int i) const { return c[static_cast<size_t>(i)]; }
  double& operator[](int i) { return c[static_cast<size_t>(i)]; }

  friend Vec operator+(const Vec& a, const Vec& b) {
    Vec r = a;
    for (int i = 0; i < a.dim; ++i) r[i] += b[i];
    return r;
  }
  friend Vec operator-(const Vec& a, const Vec& b) {
    Vec r = a;
    for (int i = 0; i < a.dim; ++i) r[i] -= b[i];
    return r;
  }
  friend Vec operator*(double s, const Vec& a) {
    Vec r = a;
    for (int i = 0; i < a.dim; ++i) r[i] *= s;
    return r;
  }
  friend bool operator==(const Vec& a, const Vec& b) {
    return a.dim == b.dim && a.c == b.c;
  }
};

inline double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (int i = 0; i < a.dim; ++i) s += a[i] * b[i];
  return s;
}

inline double norm(const Vec& v) { return std::sqrt(dot(v, v)); }

inline double distance(const Vec& a, const Vec& b) { return norm(a - b); }

inline Vec normalized(const Vec& v, double eps = 1e-12) {
  double n = norm(v);
  if (n < eps) throw ZeroNormalError();
  return (1.0 / n) * v;
}

/// Oriented affine hyperplane {x : <normal,x> = offset} in R^{ambient_dim};
/// the positive side is {x : <normal,x> > offset}.  normal is kept unit.
struct OrientedHyperplane {
  int ambient_dim = 0;
  Vec normal;
  double offset = 0.0;

  friend bool operator==(const OrientedHyperplane& a, const OrientedHyperplane& b) {
    return a.ambient_dim == b.ambient_dim && a.normal == b.normal &&
           a.offset == b.offset;
  }
};

/// Rotation of R^{dim}, stored as an explicit row-major matrix so that
/// the two ambient dimensions share one code path.
struct Rotation {
  int dim = 0;
  std::array<double, 9> m{};  // row-major dim x dim

  double at(int r, int c) const { return m[static_cast<size_t>(r * dim + c)]; }
  double& at(int r, int c) { return m[static_cast<size_t>(r * dim + c)]; }

  static Rotation identity(int dim) {
    Rotation r;
    r.dim = dim;
    for (int i = 0; i < dim; ++i) r.at(i, i) = 1.0;
    return r;
  }

  Vec apply(const Vec& v) const {
    Vec out = Vec::zero(dim);
    for (int r = 0; r < dim; ++r) {
      double s = 0.0;
      for (int c = 0; c < dim; ++c) s += at(r, c) * v[c];
      out[r] = s;
    }
    return out;
  }

  /// this * other (apply other first).
  Rotation compose(const Rotation& other) const {
    Rotation out;
    out.dim = dim;
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) {
        double s = 0.0;
        for (int k = 0; k < dim; ++k) s += at(r, k) * other.at(k, c);
        out.at(r, c) = s;
      }
    return out;
  }

  Rotation transposed() const {
    Rotation out;
    out.dim = dim;
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) out.at(r, c) = at(c, r);
    return out;
  }
};

/// Checks R^T R = I and det R = +1 within eps.
bool is_rotation(const Rotation& r, double eps = 1e-9);

/// Builds a hyperplane from an unnormalized (normal, offset) pair; the
/// oriented point set {<normal,x> = offset} is preserved under rescaling.
OrientedHyperplane make_hyperplane(const Vec& normal, double offset,
                                   double eps_unit = 1e-9);

Sign side_of(const OrientedHyperplane& p, const Vec& x, double eps_side = 1e-9);

/// Same point set, opposite orientation.
OrientedHyperplane reverse(const OrientedHyperplane& p);

/// True iff the normals are opposite (offsets unconstrained).
bool antipodally_parallel(const OrientedHyperplane& p, const OrientedHyperplane& q,
                          double eps_unit = 1e-9);

/// True iff the normals are equal or opposite.
bool parallel(const OrientedHyperplane& p, const OrientedHyperplane& q,
              double eps_unit = 1e-9);

/// The hyperplane with unit normal s through the point s*t.
OrientedHyperplane kappa(const Vec& s, double t, double eps_unit = 1e-9);

OrientedHyperplane rotate(const Rotation& rho, const OrientedHyperplane& p);

/// Membership in the hemisphere S^i_sign of S^n: coordinate i carries the
/// sign (within eps) and all later coordinates vanish (within eps).
bool hemisphere_member(const Vec& s, int i, Sign sign, double eps_side = 1e-9);

}  // namespace cleave
