#pragma once

#include <cmath>

#include <horopack/lorentz.hpp>

namespace horopack {

// A horoball centered at an ideal point.  The size parameter s ∈ (−1, 1)
// fixes the bounding horosphere: after an isometry taking the center to
// (1,0,0,1), the horosphere is { x : (s−1)⟨x,x⟩ − (1+s)(x⁰−x³)² = 0 } and
// (1,0,0,s) is its lowest point.  Smaller s means a larger ball.
struct Horoball {
  Vec4 cusp;
  double s;
};

// Size parameter of the horosphere through x centered at the given cusp.
// Scale-invariant in x; the cusp is reduced to the x⁰ = 1 chart internally.
inline double s_of_point(const Vec4& cusp, const Vec4& x) {
  if (classify_point(x) != PointClass::Proper)
    throw numeric_error("s_of_point: point is not inside the space");
  Vec4 xi = normalize_point(cusp);
  double c = minkowski(x, xi);
  double p = c * c;
  double q = minkowski(x, x);
  return (q + p) / (q - p);
}

// Busemann cocycle β(x, y, ξ): the signed distance between the horospheres
// through x and through y centered at the ideal point ξ, positive when x is
// farther from the cusp.  Equals lim_{p→ξ} d(x,p) − d(y,p); invariant under
// rescaling of any argument.
inline double busemann(const Vec4& x, const Vec4& y, const Vec4& xi) {
  double qx = minkowski(x, x);
  double qy = minkowski(y, y);
  if (!(qx < 0.0) || !(qy < 0.0))
    throw numeric_error("busemann: both base points must be proper");
  double cx = minkowski(x, xi);
  double cy = minkowski(y, xi);
  return std::log((cx / cy) * std::sqrt(qy / qx));
}

// Size parameter of the largest horoball centered at the cusp that stays on
// the inner side of the given plane: the ball tangent to the plane at the
// foot of the perpendicular dropped from the cusp.
inline double maximal_parameter(const Vec4& cusp, const Vec4& plane) {
  return s_of_point(cusp, project_to_plane(cusp, plane));
}

// Point where the horosphere of parameter s centered at `cusp` crosses the
// segment from `cusp` to `other`.  Writing h = λξ + a with ξ the normalized
// cusp and a the normalized far endpoint, the size condition is linear in λ
// because ⟨h, ξ⟩ does not depend on λ.  The far endpoint may be ideal.
inline Vec4 edge_intersection(const Vec4& cusp, const Vec4& other, double s) {
  if (!(s > -1.0 && s < 1.0))
    throw numeric_error("edge_intersection: size parameter out of range");
  Vec4 xi = normalize_point(cusp);
  Vec4 a = normalize_point(other);
  double c = minkowski(a, xi);
  if (std::abs(c) < tol::dominant)
    throw numeric_error("edge_intersection: endpoints coincide");
  double qa = minkowski(a, a);
  double lambda = (c * c * (1.0 + s) / (s - 1.0) - qa) / (2.0 * c);
  return normalize_point(add(scale(xi, lambda), a));
}

// Size parameter at cusp_j of the horoball tangent to the horoball of
// parameter s_i at cusp_i, with tangency on the segment joining the cusps.
inline double tangent_parameter(const Vec4& cusp_i, const Vec4& cusp_j,
                                double s_i) {
  return s_of_point(cusp_j, edge_intersection(cusp_i, cusp_j, s_i));
}

// Tangency threshold of a cusp pair: horoballs of parameters s_i, s_j at the
// two cusps are disjoint exactly when artanh s_i + artanh s_j reaches this
// value.  The sum is independent of how the tangent pair is split.
inline double tangency_sum(const Vec4& cusp_i, const Vec4& cusp_j) {
  return std::atanh(tangent_parameter(cusp_i, cusp_j, 0.0));
}

inline bool disjoint(const Horoball& a, const Horoball& b, double eps) {
  return std::atanh(a.s) + std::atanh(b.s) >=
         tangency_sum(a.cusp, b.cusp) - eps;
}

// Area of a flat triangle with side lengths l1, l2, l3 via the squared-length
// expansion of the Cayley–Menger determinant.
inline double triangle_area(double l1, double l2, double l3) {
  double a = l1 * l1, b = l2 * l2, c = l3 * l3;
  double s16 = 2.0 * (a * b + b * c + c * a) - a * a - b * b - c * c;
  if (s16 < 0.0) {
    if (s16 < -tol::residual)
      throw numeric_error("triangle_area: side lengths violate the triangle "
                          "inequality");
    s16 = 0.0;
  }
  return 0.25 * std::sqrt(s16);
}

// Volume of the piece the simplex with one vertex at `cusp` cuts out of the
// horoball of parameter s centered there.  The bounding horosphere carries a
// flat metric in which the three walls through the cusp cut a straight-sided
// triangle with corners on the edges toward v1, v2, v3; a chord of hyperbolic
// length l has horospherical length 2 sinh(l/2), and the piece volume is half
// the triangle area.
inline double piece_volume(const Vec4& cusp, const Vec4& v1, const Vec4& v2,
                           const Vec4& v3, double s) {
  Vec4 h1 = edge_intersection(cusp, v1, s);
  Vec4 h2 = edge_intersection(cusp, v2, s);
  Vec4 h3 = edge_intersection(cusp, v3, s);
  auto side = [](const Vec4& p, const Vec4& q) {
    return 2.0 * std::sinh(0.5 * distance(p, q));
  };
  return 0.5 * triangle_area(side(h1, h2), side(h1, h3), side(h2, h3));
}

// Upper half-space coordinates: the Cayley transform of the x⁰ = 1 chart
// sending (1,0,0,1) to the point at infinity.  Horospheres centered there
// become horizontal planes; the one of parameter s has height
// t = √((1+s)/(1−s)).
struct UhsPoint {
  double x;
  double y;
  double t;
};

inline UhsPoint to_uhs(const Vec4& p) {
  Vec4 q = normalize_point(p);
  double denom = 1.0 - q[3];
  if (std::abs(denom) < tol::dominant)
    throw numeric_error("to_uhs: point at the cusp of the chart");
  double r2 = 1.0 - q[1] * q[1] - q[2] * q[2] - q[3] * q[3];
  if (r2 < 0.0) r2 = 0.0;
  return {q[1] / denom, q[2] / denom, std::sqrt(r2) / denom};
}

}  // namespace horopack
