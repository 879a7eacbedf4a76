#pragma once

#include <array>
#include <cmath>
#include <numbers>

#include <horopack/lorentz.hpp>

namespace horopack {

// Λ(θ) = -∫₀^θ ln|2 sin t| dt, the volume kernel for hyperbolic simplices.
// The argument is first reduced to [0, π/2] using oddness and π-periodicity,
// then the series θ − θ ln 2θ + Σ_{n≥1} ζ(2n) θ^{2n+1} / (n(2n+1) π^{2n})
// is summed; its terms decay geometrically by at least (θ/π)² ≤ 1/4, so the
// truncation error at the break threshold is below one ulp of the result.
inline double lobachevsky(double theta) {
  constexpr double pi = std::numbers::pi;
  double r = theta - pi * std::round(theta / pi);
  double a = std::abs(r);
  if (a == 0.0) return 0.0;
  static const std::array<double, 40> zeta_even = [] {
    std::array<double, 40> z{};
    for (std::size_t n = 1; n < z.size(); ++n)
      z[n] = std::riemann_zeta(2.0 * static_cast<double>(n));
    return z;
  }();
  double sum = a - a * std::log(2.0 * a);
  const double q = (a / pi) * (a / pi);
  double p = a;
  for (std::size_t n = 1; n < zeta_even.size(); ++n) {
    p *= q;
    double term = zeta_even[n] * p / (static_cast<double>(n) * (2.0 * n + 1.0));
    sum += term;
    if (term < 1e-18) break;
  }
  return r < 0 ? -sum : sum;
}

// Catalan constant G = Σ (−1)ⁿ/(2n+1)², evaluated through the accelerated
// form G = (π/8) ln(2+√3) + (3/8) Σ n!² / ((2n)! (2n+1)²) whose terms decay
// by a factor of about four per step.
inline double catalan() {
  static const double g = [] {
    double sum = 0.0;
    double c = 1.0;  // n!² / (2n)!
    for (int n = 0; n < 64; ++n) {
      double term = c / ((2.0 * n + 1.0) * (2.0 * n + 1.0));
      sum += term;
      if (term < 1e-18) break;
      c *= (n + 1.0) / (2.0 * (2.0 * n + 1.0));
    }
    return 0.375 * sum +
           std::numbers::pi / 8.0 * std::log(2.0 + std::sqrt(3.0));
  }();
  return g;
}

}  // namespace horopack
