#include <catch2/catch_amalgamated.hpp>
#include <horopack/volume.hpp>

#include <cmath>
#include <random>
#include <vector>

using namespace horopack;
using Catch::Matchers::WithinAbs;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Gauss-Legendre nodes and weights on [-1, 1], computed by Newton iteration
// on the Legendre recurrence.  Used only as an integration oracle here.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
}

// Direct evaluation of -∫₀^θ ln(2 sin t) dt for 0 < θ ≤ π/2.  The endpoint
// singularity is split off analytically: the remaining integrand ln(sin t / t)
// is smooth, so fixed-order Gauss quadrature converges to machine precision.
double lobachevsky_by_quadrature(double theta) {
  static std::vector<double> x, w;
  if (x.empty()) gauss_legendre(64, x, w);
  double smooth = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    double t = 0.5 * theta * (x[i] + 1.0);
    double f = (t < 1e-8) ? -t * t / 6.0 : std::log(std::sin(t) / t);
    smooth += w[i] * f;
  }
  smooth *= 0.5 * theta;
  return theta - theta * std::log(2.0 * theta) - smooth;
}

}  // namespace

TEST_CASE("lobachevsky agrees with direct integration on the principal range") {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> u(1e-6, kPi / 2);
  for (int i = 0; i < 400; ++i) {
    double theta = u(rng);
    REQUIRE_THAT(lobachevsky(theta) - lobachevsky_by_quadrature(theta),
                 WithinAbs(0.0, 1e-13));
  }
}

TEST_CASE("lobachevsky reference values") {
  REQUIRE(lobachevsky(0.0) == 0.0);
  REQUIRE_THAT(lobachevsky(kPi / 2), WithinAbs(0.0, 1e-15));
  REQUIRE_THAT(lobachevsky(kPi / 3), WithinAbs(0.3383138688032178750, 1e-15));
  REQUIRE_THAT(lobachevsky(kPi / 4), WithinAbs(0.4579827970886095077, 1e-15));
  REQUIRE_THAT(lobachevsky(kPi / 6), WithinAbs(1.5 * 0.3383138688032178750, 1e-15));
}

TEST_CASE("lobachevsky is odd and pi-periodic") {
  std::mt19937_64 rng(102);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 500; ++i) {
    double theta = u(rng);
    REQUIRE_THAT(lobachevsky(-theta) + lobachevsky(theta), WithinAbs(0.0, 1e-15));
    REQUIRE_THAT(lobachevsky(theta + kPi) - lobachevsky(theta),
                 WithinAbs(0.0, 1e-14));
  }
}

TEST_CASE("lobachevsky satisfies the duplication identity") {
  // Λ(2θ)/2 = Λ(θ) − Λ(π/2 − θ)
  std::mt19937_64 rng(103);
  std::uniform_real_distribution<double> u(0.0, kPi / 2);
  for (int i = 0; i < 500; ++i) {
    double theta = u(rng);
    double lhs = 0.5 * lobachevsky(2.0 * theta);
    double rhs = lobachevsky(theta) - lobachevsky(kPi / 2 - theta);
    REQUIRE_THAT(lhs - rhs, WithinAbs(0.0, 1e-14));
  }
}

TEST_CASE("catalan constant") {
  // The alternating series Σ (−1)ⁿ/(2n+1)² brackets the limit between
  // consecutive partial sums; the accepted value must fall inside.
  double lo = 0.0, hi = 0.0, s = 0.0;
  for (int n = 0; n < 20001; ++n) {
    double term = 1.0 / ((2.0 * n + 1) * (2.0 * n + 1));
    s += (n % 2 == 0) ? term : -term;
    if (n == 19999) lo = s;
    if (n == 20000) hi = s;
  }
  double g = catalan();
  REQUIRE(g > lo);
  REQUIRE(g < hi);
  REQUIRE_THAT(g, WithinAbs(0.9159655941772190151, 1e-15));
  // Λ(π/4) = G/2 links the two special functions.
  REQUIRE_THAT(lobachevsky(kPi / 4) - g / 2, WithinAbs(0.0, 1e-15));
}
