#pragma once

// Independent numeric volume oracle.  A simplex with at least one ideal
// vertex is viewed in the half-space coordinates of its first cusp, where
// it is the column region between a hemisphere and a horizontal plane over
// a straight-sided shadow triangle; the part above the plane is an exact
// cusp piece and the rest is a 2D integral with elementary fibers.  Shadow
// corners are integrated in local polar coordinates: the area element
// cancels the growth of the integrand at corners that touch the boundary
// circle, so every patch has a smooth bounded integrand for the adaptive
// triangle rule.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include <horopack/catalog.hpp>
#include <horopack/horoball.hpp>
#include <horopack/lorentz.hpp>

namespace horopack {

// Raised when the adaptive scheme exhausts its subdivision budget before
// meeting the requested tolerance.
struct no_convergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised by decomposition_check for an entry with no recorded dissection.
struct unknown_decomposition : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bare geometric simplex: chart vertices and their ideal flags.  Face
// planes are recovered from the vertices when needed.
struct Cell {
  std::array<Vec4, 4> vertices{};
  std::array<bool, 4> ideal{};

  std::vector<int> ideal_indices() const {
    std::vector<int> out;
    for (int i = 0; i < 4; ++i)
      if (ideal[i]) out.push_back(i);
    return out;
  }
};

struct QuadratureOptions {
  double tolerance = 1e-9;  // absolute target for the shadow integral
  double shrink = std::numbers::ln2;  // extra depth below each face cap
  int max_depth = 30;
  std::int64_t max_evaluations = 40'000'000;
};

// Support form of the plane through three chart points, via the 4x4
// cofactor expansion; pairs with points through the plain dot product.
inline Vec4 plane_through(const Vec4& a, const Vec4& b, const Vec4& c) {
  auto det3 = [](double m00, double m01, double m02, double m10, double m11,
                 double m12, double m20, double m21, double m22) {
    return m00 * (m11 * m22 - m12 * m21) - m01 * (m10 * m22 - m12 * m20) +
           m02 * (m10 * m21 - m11 * m20);
  };
  Vec4 u{};
  u[0] = det3(a[1], a[2], a[3], b[1], b[2], b[3], c[1], c[2], c[3]);
  u[1] = -det3(a[0], a[2], a[3], b[0], b[2], b[3], c[0], c[2], c[3]);
  u[2] = det3(a[0], a[1], a[3], b[0], b[1], b[3], c[0], c[1], c[3]);
  u[3] = -det3(a[0], a[1], a[2], b[0], b[1], b[2], c[0], c[1], c[2]);
  return normalize_form(u);
}

inline Cell cell_from(const CoxeterSimplex& sx) {
  return Cell{sx.vertices, sx.ideal};
}

namespace detail {

// Cyclic Jacobi with accumulated rotations; returns eigenvalues ascending
// and the matching unit eigenvectors as columns of `vectors`.
inline void eigen4(const Mat4& m0, std::array<double, 4>& values,
                   Mat4& vectors) {
  Mat4 a = m0;
  Mat4 v = identity_matrix();
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-28) break;
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) /
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
        for (int k = 0; k < 4; ++k) {
          double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
  }
  std::array<int, 4> order{0, 1, 2, 3};
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return a[x][x] < a[y][y]; });
  for (int k = 0; k < 4; ++k) {
    values[k] = a[order[k]][order[k]];
    for (int r = 0; r < 4; ++r) vectors[r][k] = v[r][order[k]];
  }
}

inline Mat4 invert4(const Mat4& m0) {
  Mat4 a = m0;
  Mat4 inv = identity_matrix();
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    if (std::abs(a[pivot][col]) < 1e-300)
      throw numeric_error("invert4: singular matrix");
    std::swap(a[col], a[pivot]);
    std::swap(inv[col], inv[pivot]);
    double d = a[col][col];
    for (int c = 0; c < 4; ++c) {
      a[col][c] /= d;
      inv[col][c] /= d;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      double f = a[r][col];
      if (f == 0.0) continue;
      for (int c = 0; c < 4; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

struct Tri {
  double ax, ay, bx, by, cx, cy;
  double area() const {
    return 0.5 * std::abs((bx - ax) * (cy - ay) - (cx - ax) * (by - ay));
  }
};

// Seven-point degree-5 rule on a triangle.
template <typename F>
double rule7(const Tri& t, const F& f) {
  static const double sq15 = std::sqrt(15.0);
  static const double b1 = (6.0 + sq15) / 21.0, w1 = (155.0 + sq15) / 1200.0;
  static const double b2 = (6.0 - sq15) / 21.0, w2 = (155.0 - sq15) / 1200.0;
  auto at = [&](double u, double v) {  // barycentric (u, v, 1-u-v)
    double w = 1.0 - u - v;
    return f(u * t.ax + v * t.bx + w * t.cx, u * t.ay + v * t.by + w * t.cy);
  };
  double s = 0.225 * at(1.0 / 3, 1.0 / 3);
  s += w1 * (at(1.0 - 2.0 * b1, b1) + at(b1, 1.0 - 2.0 * b1) + at(b1, b1));
  s += w2 * (at(1.0 - 2.0 * b2, b2) + at(b2, 1.0 - 2.0 * b2) + at(b2, b2));
  return s * t.area();
}

template <typename F>
class AdaptiveTriangle {
 public:
  AdaptiveTriangle(const F& f, const QuadratureOptions& opt, double tolerance,
                   std::int64_t& used)
      : f_(f), opt_(opt), tolerance_(tolerance), used_(used) {}

  double integrate(const Tri& t) {
    total_area_ = t.area();
    return refine(t, eval(t), 0);
  }

 private:
  double eval(const Tri& t) {
    used_ += 7;
    if (used_ > opt_.max_evaluations)
      throw no_convergence("quadrature: evaluation budget exhausted");
    return rule7(t, f_);
  }

  double refine(const Tri& t, double coarse, int depth) {
    double mabx = 0.5 * (t.ax + t.bx), maby = 0.5 * (t.ay + t.by);
    double mbcx = 0.5 * (t.bx + t.cx), mbcy = 0.5 * (t.by + t.cy);
    double mcax = 0.5 * (t.cx + t.ax), mcay = 0.5 * (t.cy + t.ay);
    std::array<Tri, 4> kids{
        Tri{t.ax, t.ay, mabx, maby, mcax, mcay},
        Tri{mabx, maby, t.bx, t.by, mbcx, mbcy},
        Tri{mcax, mcay, mbcx, mbcy, t.cx, t.cy},
        Tri{mabx, maby, mbcx, mbcy, mcax, mcay},
    };
    std::array<double, 4> fine{};
    double sum = 0.0;
    for (int k = 0; k < 4; ++k) {
      fine[k] = eval(kids[k]);
      sum += fine[k];
    }
    double allowance =
        std::max(tolerance_ * (t.area() / total_area_),
                 1e-15 * (std::abs(sum) + std::abs(coarse)) + 1e-300);
    if (depth >= 2 && std::abs(sum - coarse) <= allowance)
      return sum + (sum - coarse) / 63.0;  // Richardson tail of the h^6 rule
    if (depth >= opt_.max_depth)
      throw no_convergence("quadrature: depth limit reached");
    double out = 0.0;
    for (int k = 0; k < 4; ++k) out += refine(kids[k], fine[k], depth + 1);
    return out;
  }

  const F& f_;
  const QuadratureOptions& opt_;
  double tolerance_;
  std::int64_t& used_;
  double total_area_ = 1.0;
};

}  // namespace detail

// Volume of the cell with every cusp truncated at the given depths
// (one artanh-scale value per ideal vertex, in ideal_indices() order).
// The truncation horoballs must stay inside the cell and avoid one
// another; the reported value is the full cell volume, so it does not
// depend on the admissible truncation chosen.
inline double quadrature_volume(const Cell& cell,
                                const std::vector<double>& cusp_depths,
                                const QuadratureOptions& opt = {}) {
  std::vector<int> cusps = cell.ideal_indices();
  int n = static_cast<int>(cusps.size());
  if (n == 0)
    throw invalid_configuration("quadrature_volume: cell has no ideal vertex");
  if (static_cast<int>(cusp_depths.size()) != n)
    throw invalid_configuration(
        "quadrature_volume: need one truncation depth per cusp");

  for (int k = 0; k < n; ++k) {
    std::array<Vec4, 3> o;
    for (int v = 0, w = 0; v < 4; ++v)
      if (v != cusps[k]) o[w++] = cell.vertices[v];
    Vec4 wall = plane_through(o[0], o[1], o[2]);
    double cap = std::atanh(maximal_parameter(cell.vertices[cusps[k]], wall));
    if (!(cusp_depths[k] >= cap - 1e-9))
      throw invalid_configuration(
          "quadrature_volume: truncation horoball leaves the cell");
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      double need =
          tangency_sum(cell.vertices[cusps[a]], cell.vertices[cusps[b]]);
      if (!(cusp_depths[a] + cusp_depths[b] >= need - 1e-9))
        throw invalid_configuration(
            "quadrature_volume: truncation horoballs overlap");
    }

  // Exact piece above the first cusp's truncation plane; everything below
  // it (the other cusps' horoball parts included) is integrated.
  int v0 = cusps[0];
  std::array<Vec4, 3> far{};
  std::array<bool, 3> far_ideal{};
  for (int v = 0, w = 0; v < 4; ++v) {
    if (v == v0) continue;
    far[w] = cell.vertices[v];
    far_ideal[w] = cell.ideal[v];
    ++w;
  }
  double total = piece_volume(cell.vertices[v0], far[0], far[1], far[2],
                              std::tanh(cusp_depths[0]));

  Mat4 frame = canonical_cusp_frame(cell.vertices[v0]);
  double t0 = std::exp(cusp_depths[0]);

  std::array<double, 3> px{}, py{}, pt{};
  for (int w = 0; w < 3; ++w) {
    UhsPoint u = to_uhs(transform_point(frame, far[w]));
    px[w] = u.x;
    py[w] = u.y;
    pt[w] = far_ideal[w] ? 0.0 : u.t;
  }

  // Hemisphere |p - c|^2 + t^2 = R^2 through the three far vertices.
  double a11 = 2.0 * (px[1] - px[0]), a12 = 2.0 * (py[1] - py[0]);
  double a21 = 2.0 * (px[2] - px[0]), a22 = 2.0 * (py[2] - py[0]);
  auto power = [&](int j) {
    return px[j] * px[j] + py[j] * py[j] + pt[j] * pt[j];
  };
  double r1 = power(1) - power(0), r2 = power(2) - power(0);
  double det = a11 * a22 - a12 * a21;
  if (std::abs(det) < 1e-14)
    throw numeric_error("quadrature_volume: degenerate opposite face");
  double cx = (r1 * a22 - r2 * a12) / det;
  double cy = (a11 * r2 - a21 * r1) / det;
  double R2 = (px[0] - cx) * (px[0] - cx) + (py[0] - cy) * (py[0] - cy) +
              pt[0] * pt[0];

  double inv_top = 0.5 / (t0 * t0);

  detail::Tri shadow{px[0], py[0], px[1], py[1], px[2], py[2]};
  if (shadow.area() < 1e-18)
    throw numeric_error("quadrature_volume: degenerate shadow triangle");

  std::int64_t used = 0;
  const double wedge_fraction = 0.3;  // corner patches span 30% of each edge
  const int top_count = 12;           // 3 corner squares + 6 central fans
  double patch_tol = opt.tolerance / top_count;
  double integral = 0.0;

  // Corner patches in local polar coordinates (d, theta) around each
  // shadow corner, mapped onto the unit square by d = v * D(theta).  The
  // area element contributes the factor d that keeps the integrand bounded
  // when the corner touches the boundary circle (ideal far vertex), and
  // the height is expanded as h^2 = tau + 2 d beta(theta) - d^2 to avoid
  // cancellation near such corners.
  std::array<double, 3> lam{};
  for (int j = 0; j < 3; ++j) {
    int k = (j + 1) % 3, l = (j + 2) % 3;
    double ek = std::hypot(px[k] - px[j], py[k] - py[j]);
    double el = std::hypot(px[l] - px[j], py[l] - py[j]);
    lam[j] = wedge_fraction * std::min(ek, el);
  }
  for (int j = 0; j < 3; ++j) {
    int k = (j + 1) % 3, l = (j + 2) % 3;
    double phik = std::atan2(py[k] - py[j], px[k] - px[j]);
    double phil = std::atan2(py[l] - py[j], px[l] - px[j]);
    double dphi = std::remainder(phil - phik, 2.0 * std::numbers::pi);
    double mkx = px[j] + lam[j] * std::cos(phik);
    double mky = py[j] + lam[j] * std::sin(phik);
    double mlx = px[j] + lam[j] * std::cos(phik + dphi);
    double mly = py[j] + lam[j] * std::sin(phik + dphi);
    // Chord m_k -- m_l bounds the patch; D(theta) = offset / (n . e(theta)).
    double nx = -(mly - mky), ny = mlx - mkx;
    double nn = std::hypot(nx, ny);
    nx /= nn;
    ny /= nn;
    double offset = nx * (mkx - px[j]) + ny * (mky - py[j]);
    if (offset < 0.0) {
      nx = -nx;
      ny = -ny;
      offset = -offset;
    }
    double tau = R2 - (px[j] - cx) * (px[j] - cx) - (py[j] - cy) * (py[j] - cy);
    if (tau < 0.0) tau = 0.0;  // ideal corner: exact height there is zero
    double bx = cx - px[j], by = cy - py[j];
    double adphi = std::abs(dphi);
    auto corner = [=](double u, double v) {
      double th = phik + u * dphi;
      double ex = std::cos(th), ey = std::sin(th);
      double D = offset / (nx * ex + ny * ey);
      double d = v * D;
      double h2 = tau + d * (2.0 * (bx * ex + by * ey) - d);
      return (0.5 * d / h2 - d * inv_top) * D * adphi;
    };
    detail::Tri lower{0, 0, 1, 0, 1, 1}, upper{0, 0, 1, 1, 0, 1};
    detail::AdaptiveTriangle<decltype(corner)> integ(corner, opt, patch_tol,
                                                     used);
    integral += integ.integrate(lower);
    integral += integ.integrate(upper);
  }

  // Central region: the shadow triangle with the three corner patches cut
  // off along their chords, fanned from its midpoint.
  std::array<std::array<double, 2>, 6> ring{};
  for (int j = 0; j < 3; ++j) {
    int k = (j + 1) % 3;
    double dx = px[k] - px[j], dy = py[k] - py[j];
    double len = std::hypot(dx, dy);
    ring[2 * j] = {px[j] + lam[j] * dx / len, py[j] + lam[j] * dy / len};
    ring[2 * j + 1] = {px[k] - lam[k] * dx / len, py[k] - lam[k] * dy / len};
  }
  double gx = 0.0, gy = 0.0;
  for (const auto& p : ring) {
    gx += p[0] / 6.0;
    gy += p[1] / 6.0;
  }
  auto central = [&](double x, double y) {
    double h2 = R2 - (x - cx) * (x - cx) - (y - cy) * (y - cy);
    return 0.5 / h2 - inv_top;
  };
  for (int e = 0; e < 6; ++e) {
    const auto& a = ring[e];
    const auto& b = ring[(e + 1) % 6];
    detail::Tri t{gx, gy, a[0], a[1], b[0], b[1]};
    detail::AdaptiveTriangle<decltype(central)> integ(central, opt, patch_tol,
                                                      used);
    integral += integ.integrate(t);
  }

  return total + integral;
}

// Default truncation: every cusp's maximal ball shrunk by the option's
// margin (a factor of two in horospherical scale by default).
inline double quadrature_volume(const Cell& cell,
                                const QuadratureOptions& opt = {}) {
  std::vector<double> depths;
  for (int v : cell.ideal_indices()) {
    std::array<Vec4, 3> o;
    for (int u = 0, w = 0; u < 4; ++u)
      if (u != v) o[w++] = cell.vertices[u];
    Vec4 wall = plane_through(o[0], o[1], o[2]);
    depths.push_back(std::atanh(maximal_parameter(cell.vertices[v], wall)) +
                     opt.shrink);
  }
  return quadrature_volume(cell, depths, opt);
}

inline double quadrature_volume(const CoxeterSimplex& sx,
                                const QuadratureOptions& opt = {}) {
  return quadrature_volume(cell_from(sx), opt);
}

// Truncation given as explicit horoballs, one per ideal vertex in
// ideal_indices() order; each ball must be centered at its cusp.
inline double quadrature_volume(const CoxeterSimplex& sx,
                                const std::vector<Horoball>& truncation,
                                const QuadratureOptions& opt = {}) {
  std::vector<int> cusps = sx.ideal_indices();
  if (truncation.size() != cusps.size())
    throw invalid_configuration(
        "quadrature_volume: need one truncation horoball per cusp");
  std::vector<double> depths;
  for (size_t k = 0; k < cusps.size(); ++k) {
    if (!projective_equal(truncation[k].cusp, sx.vertices[cusps[k]], 1e-9))
      throw invalid_configuration(
          "quadrature_volume: horoball is not centered at its cusp");
    depths.push_back(std::atanh(truncation[k].s));
  }
  return quadrature_volume(cell_from(sx), depths, opt);
}

// Simplex rebuilt from a form Gram matrix (unit diagonal, hyperbolic
// signature): forms from the eigensystem, vertices from the inverse form
// matrix.  Every vertex must land inside or on the boundary of the space.
inline Cell cell_from_gram(const Mat4& gram) {
  std::array<double, 4> lam{};
  Mat4 vecs{};
  detail::eigen4(gram, lam, vecs);
  if (!(lam[0] < -1e-12 && lam[1] > 1e-12))
    throw validation_error("cell_from_gram: matrix is not hyperbolic");
  Mat4 forms{};  // row i = form u_i
  for (int i = 0; i < 4; ++i) {
    forms[i][0] = std::sqrt(-lam[0]) * vecs[i][0];
    for (int k = 1; k < 4; ++k) forms[i][k] = std::sqrt(lam[k]) * vecs[i][k];
  }
  Mat4 inv = detail::invert4(forms);
  Cell cell;
  for (int j = 0; j < 4; ++j) {
    Vec4 a{inv[0][j], inv[1][j], inv[2][j], inv[3][j]};
    double q = minkowski(a, a) / euclidean_norm2(a);
    if (q > tol::point_class)
      throw validation_error("cell_from_gram: vertex outside the space");
    cell.ideal[j] = std::abs(q) <= tol::point_class;
    cell.vertices[j] = normalize_point(a);
  }
  return cell;
}

// Chain cell with right angles everywhere except the three consecutive
// dihedral angles along the path of faces.
inline Cell orthoscheme_cell(double a01, double a12, double a23) {
  Mat4 g = identity_matrix();
  g[0][1] = g[1][0] = -std::cos(a01);
  g[1][2] = g[2][1] = -std::cos(a12);
  g[2][3] = g[3][2] = -std::cos(a23);
  return cell_from_gram(g);
}

struct DecompositionTerm {
  std::string label;
  std::string method;  // "closed" or "quadrature"
  double value = 0.0;
};

struct DecompositionReport {
  std::string id;
  std::vector<DecompositionTerm> terms;
  double sum = 0.0;
  double printed = 0.0;     // tabulated cell volume
  double quadrature = 0.0;  // numeric volume of the cell itself
  double residual_printed = 0.0;
  double residual_quadrature = 0.0;
  bool pass = false;
};

// Dissections of the four cyclic-diagram cells into catalog cells and
// chain cells: closed forms for catalog summands, numeric integration for
// the rest, compared against both the tabulated volume and the numeric
// volume of the whole cell.
inline DecompositionReport decomposition_check(
    const std::vector<CoxeterSimplex>& cat, const std::string& key,
    const QuadratureOptions& opt = {}) {
  const CoxeterSimplex* sx = find_simplex(cat, key);
  if (sx == nullptr) throw unknown_decomposition("no entry named '" + key + "'");

  auto closed = [&](const char* id) {
    const CoxeterSimplex* t = find_simplex(cat, id);
    if (t == nullptr)
      throw unknown_decomposition(std::string("missing catalog term ") + id);
    return DecompositionTerm{"[" + std::string(id) + "]", "closed",
                             t->volume_value()};
  };
  auto chain = [&](const std::string& label, double x, double y, double z) {
    return DecompositionTerm{label, "quadrature",
                             quadrature_volume(orthoscheme_cell(x, y, z), opt)};
  };

  const double pi = std::numbers::pi;
  const double at_s2 = std::atan(std::sqrt(2.0));    // arctan sqrt2
  const double act_s2 = pi / 2.0 - at_s2;            // arccot sqrt2
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const double at_phi = std::atan(phi);
  const double act_phi = pi / 2.0 - at_phi;

  DecompositionReport rep;
  rep.id = sx->id;
  if (sx->id == "AV3") {
    rep.terms = {closed("V3"), closed("R3"), closed("R3"), closed("Y3")};
  } else if (sx->id == "BV3c") {
    rep.terms = {closed("BV3"),
                 chain("chain(pi/4, arctan sqrt2, arccot sqrt2)", pi / 4, at_s2,
                       act_s2),
                 chain("chain(arctan sqrt2, arccot sqrt2, pi/3)", at_s2, act_s2,
                       pi / 3),
                 closed("Y3")};
  } else if (sx->id == "HV3c") {
    rep.terms = {closed("HV3"),
                 chain("chain(pi/5, arctan phi, arccot phi)", pi / 5, at_phi,
                       act_phi),
                 chain("chain(arctan phi, arccot phi, pi/3)", at_phi, act_phi,
                       pi / 3),
                 closed("Y3")};
  } else if (sx->id == "CR3") {
    rep.terms = {closed("R3"), closed("N3"),
                 chain("chain(pi/3, arccot sqrt2, arctan sqrt2)", pi / 3,
                       act_s2, at_s2),
                 chain("chain(arccot sqrt2, arctan sqrt2, pi/4)", act_s2, at_s2,
                       pi / 4)};
  } else {
    throw unknown_decomposition("no recorded dissection for '" + sx->id + "'");
  }

  for (const auto& t : rep.terms) rep.sum += t.value;
  rep.printed = sx->volume.closed_value();
  rep.quadrature = quadrature_volume(*sx, opt);
  rep.residual_printed = std::abs(rep.sum - rep.printed);
  rep.residual_quadrature = std::abs(rep.sum - rep.quadrature);
  rep.pass = rep.residual_printed <= 1e-5 && rep.residual_quadrature <= 1e-5;
  return rep;
}

}  // namespace horopack
