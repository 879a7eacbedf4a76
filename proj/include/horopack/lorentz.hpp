#pragma once

// Lorentzian linear algebra for the projective (Cayley-Klein) model of
// hyperbolic 3-space H^3.  Points and hyperplane support forms are both
// 4-vectors over the quadratic form of signature (-,+,+,+); a point x with
// <x,x> < 0 is proper, <x,x> = 0 ideal (on the absolute), <x,x> > 0 outer.
// Planes are given by spacelike forms b acting on points by the ordinary
// pairing b(x); pole/polar duality exchanges the two pictures.

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace horopack {

using Vec4 = std::array<double, 4>;
using Mat4 = std::array<Vec4, 4>;  // row-major

// Raised by low-level numerics when a computation cannot produce a
// meaningful result (degenerate input, lost precision, budget exhausted).
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when loaded or constructed geometric data violates a structural
// invariant (bad incidence, wrong point class, non-Lorentz matrix, ...).
struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a horoball configuration breaks a packing constraint
// (overlapping balls, ball through its opposite face, bad vertex index).
struct invalid_configuration : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace tol {
inline constexpr double point_class = 1e-10;  // proper/ideal/outer split
inline constexpr double form_norm = 1e-10;    // unit-norm check for forms
inline constexpr double isometry = 1e-10;     // M^T J M = J defect
inline constexpr double residual = 1e-9;      // generic equation residuals
inline constexpr double dominant = 1e-12;     // "first nonzero" cutoff
}  // namespace tol

// <x,y> with respect to diag(-1,1,1,1).  The same expression serves as the
// inner product of two support forms (the inverse form has identical
// components for this metric).
inline double minkowski(const Vec4& x, const Vec4& y) {
  return -x[0] * y[0] + x[1] * y[1] + x[2] * y[2] + x[3] * y[3];
}

// Evaluation b(x) of a form on a point: the plain Euclidean pairing.
inline double apply_form(const Vec4& b, const Vec4& x) {
  return b[0] * x[0] + b[1] * x[1] + b[2] * x[2] + b[3] * x[3];
}

inline double euclidean_norm2(const Vec4& x) {
  return x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
}

inline Vec4 add(const Vec4& x, const Vec4& y) {
  return {x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]};
}

inline Vec4 sub(const Vec4& x, const Vec4& y) {
  return {x[0] - y[0], x[1] - y[1], x[2] - y[2], x[3] - y[3]};
}

inline Vec4 scale(const Vec4& x, double c) {
  return {c * x[0], c * x[1], c * x[2], c * x[3]};
}

enum class PointClass { Proper, Ideal, Outer };

inline const char* to_string(PointClass c) {
  switch (c) {
    case PointClass::Proper: return "proper";
    case PointClass::Ideal: return "ideal";
    default: return "outer";
  }
}

// Projective classification: the sign of <x,x> scaled by the Euclidean
// norm so the verdict does not depend on the representative.
inline PointClass classify_point(const Vec4& x, double eps = tol::point_class) {
  double n2 = euclidean_norm2(x);
  if (n2 == 0.0) throw numeric_error("classify_point: zero vector");
  double q = minkowski(x, x) / n2;
  if (q < -eps) return PointClass::Proper;
  if (q > eps) return PointClass::Outer;
  return PointClass::Ideal;
}

// Scale a point representative into the affine chart x^0 = 1.
inline Vec4 normalize_point(const Vec4& x) {
  if (std::abs(x[0]) < 1e-300)
    throw numeric_error("normalize_point: representative has x^0 = 0");
  return scale(x, 1.0 / x[0]);
}

// Scale a form to unit Lorentz norm <b,b> = 1.  Fails for timelike or
// null forms, which do not support hyperbolic planes.
inline Vec4 normalize_form(const Vec4& b) {
  double n2 = minkowski(b, b);
  if (n2 <= tol::form_norm)
    throw numeric_error("normalize_form: form is not spacelike");
  return scale(b, 1.0 / std::sqrt(n2));
}

// Pole of a plane form / polar form of a point: flip the time component.
inline Vec4 pole(const Vec4& b) { return {-b[0], b[1], b[2], b[3]}; }
inline Vec4 polar(const Vec4& a) { return {-a[0], a[1], a[2], a[3]}; }

// Orthogonal projection of x onto the plane of b, returned in the
// x^0 = 1 chart.  The projected point satisfies b(y) = 0 exactly in
// exact arithmetic: y = x - (b(x)/<b,b>) pole(b).
inline Vec4 project_to_plane(const Vec4& x, const Vec4& b) {
  double n2 = minkowski(b, b);
  if (n2 <= tol::form_norm)
    throw numeric_error("project_to_plane: form is not spacelike");
  Vec4 y = sub(x, scale(pole(b), apply_form(b, x) / n2));
  return normalize_point(y);
}

// Hyperbolic distance between two proper points,
// cosh d = -<x,y> / sqrt(<x,x><y,y>).
inline double distance(const Vec4& x, const Vec4& y) {
  double qx = minkowski(x, x), qy = minkowski(y, y);
  if (qx >= 0.0 || qy >= 0.0)
    throw numeric_error("distance: both points must be proper");
  double c = -minkowski(x, y) / std::sqrt(qx * qy);
  if (c < 1.0) {
    if (c < 1.0 - 1e-9) throw numeric_error("distance: cosh < 1");
    c = 1.0;
  }
  return std::acosh(c);
}

// Projective equality: both representatives scaled to unit Euclidean norm
// with the first significant coordinate positive, then compared.
inline bool projective_equal(const Vec4& x, const Vec4& y, double eps) {
  auto canon = [](const Vec4& v) {
    double n = std::sqrt(euclidean_norm2(v));
    if (n == 0.0) throw numeric_error("projective_equal: zero vector");
    Vec4 u = scale(v, 1.0 / n);
    for (double c : u) {
      if (std::abs(c) > tol::dominant) {
        if (c < 0.0) u = scale(u, -1.0);
        break;
      }
    }
    return u;
  };
  Vec4 a = canon(x), b = canon(y);
  for (int i = 0; i < 4; ++i)
    if (std::abs(a[i] - b[i]) > eps) return false;
  return true;
}

inline Mat4 identity_matrix() {
  Mat4 m{};
  for (int i = 0; i < 4; ++i) m[i][i] = 1.0;
  return m;
}

inline Vec4 transform_point(const Mat4& m, const Vec4& x) {
  Vec4 y{};
  for (int i = 0; i < 4; ++i) y[i] = apply_form(m[i], x);
  return y;
}

inline Mat4 matmul(const Mat4& a, const Mat4& b) {
  Mat4 c{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += a[i][k] * b[k][j];
      c[i][j] = s;
    }
  return c;
}

// Largest entry of M^T J M - J; zero iff M preserves the form.
inline double lorentz_defect(const Mat4& m) {
  static const double J[4] = {-1.0, 1.0, 1.0, 1.0};
  double worst = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += m[k][i] * J[k] * m[k][j];
      double target = (i == j) ? J[i] : 0.0;
      worst = std::max(worst, std::abs(s - target));
    }
  return worst;
}

inline bool is_isometry(const Mat4& m, double eps = tol::isometry) {
  return lorentz_defect(m) <= eps;
}

// For a Lorentz matrix the inverse is J M^T J.
inline Mat4 inverse_isometry(const Mat4& m) {
  static const double J[4] = {-1.0, 1.0, 1.0, 1.0};
  Mat4 inv{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) inv[i][j] = J[i] * m[j][i] * J[j];
  return inv;
}

// Reflection in the plane of a spacelike form b:
// x -> x - 2 (b(x)/<b,b>) pole(b).
inline Mat4 reflection(const Vec4& b) {
  double n2 = minkowski(b, b);
  if (n2 <= tol::form_norm)
    throw numeric_error("reflection: form is not spacelike");
  Vec4 p = pole(b);
  Mat4 m = identity_matrix();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] -= 2.0 * p[i] * b[j] / n2;
  return m;
}

// Eigenvalues of a symmetric 4x4 matrix by cyclic Jacobi rotations,
// returned in ascending order.  Used for signature checks of Gram matrices.
inline std::array<double, 4> symmetric_eigenvalues(const Mat4& m0) {
  Mat4 a = m0;
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-28) break;
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (int k = 0; k < 4; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < 4; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::array<double, 4> ev{a[0][0], a[1][1], a[2][2], a[3][3]};
  std::sort(ev.begin(), ev.end());
  return ev;
}

// Rotation about the model centre (1,0,0,0) taking the ideal point xi to
// (1,0,0,1).  Built from the Rodrigues formula on the spatial part; the
// result is a Lorentz isometry with first row and column (1,0,0,0).
inline Mat4 canonical_cusp_frame(const Vec4& xi) {
  if (classify_point(xi) != PointClass::Ideal)
    throw validation_error("canonical_cusp_frame: point is not ideal");
  Vec4 p = normalize_point(xi);
  double n = std::sqrt(p[1] * p[1] + p[2] * p[2] + p[3] * p[3]);
  if (n == 0.0) throw numeric_error("canonical_cusp_frame: degenerate point");
  double d[3] = {p[1] / n, p[2] / n, p[3] / n};

  Mat4 m = identity_matrix();
  if (d[2] > 1.0 - 1e-14) return m;  // already at the north pole
  if (d[2] < -1.0 + 1e-14) {        // south pole: half turn about x
    m[2][2] = -1.0;
    m[3][3] = -1.0;
    return m;
  }
  // axis = d x e_z, angle = acos(d_z)
  double ax = d[1], ay = -d[0], az = 0.0;
  double an = std::sqrt(ax * ax + ay * ay);
  ax /= an;
  ay /= an;
  double c = d[2], s = std::sqrt(1.0 - c * c);
  double k[3] = {ax, ay, az};
  double r[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double kk = k[i] * k[j] * (1.0 - c);
      double cross = 0.0;
      // [k]_x components: cross(i,j) = -eps_ijl k_l
      if (i != j) {
        int l = 3 - i - j;
        double sign = ((j - i + 3) % 3 == 1) ? -1.0 : 1.0;
        cross = sign * k[l];
      }
      r[i][j] = (i == j ? c : 0.0) + s * cross + kk;
    }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i + 1][j + 1] = r[i][j];
  return m;
}

}  // namespace horopack
