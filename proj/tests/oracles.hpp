#pragma once

// Test-only reference computations. None of these call into the code paths
// they are used to check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

namespace ltiest::oracle {

using cplx = std::complex<double>;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240917);
  return gen;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline int uniform_int(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng());
}

// Symmetric taps of the given half width, values in [-1, 1].
inline std::vector<double> random_symmetric_taps(int half_width) {
  std::vector<double> taps(static_cast<std::size_t>(2 * half_width + 1));
  for (int d = 0; d <= half_width; ++d) {
    const double v = uniform(-1.0, 1.0);
    taps[static_cast<std::size_t>(half_width + d)] = v;
    taps[static_cast<std::size_t>(half_width - d)] = v;
  }
  return taps;
}

// sum_n x[n] exp(-j k n) for x given on offsets first, first+1, ...
inline cplx brute_dtft(const std::vector<double>& x, int first, double k) {
  cplx sum{};
  for (std::size_t n = 0; n < x.size(); ++n) {
    const double arg = -k * (first + static_cast<double>(n));
    sum += x[n] * cplx(std::cos(arg), std::sin(arg));
  }
  return sum;
}

// Dense y = A x.
inline std::vector<cplx> matvec(const std::vector<cplx>& a, const std::vector<cplx>& x) {
  const std::size_t n = x.size();
  std::vector<cplx> y(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) y[i] += a[i * n + j] * x[j];
  return y;
}

// Roots of a real symmetric 3x3 matrix's characteristic polynomial,
// ascending, by the trigonometric (Viete) solution of the cubic.
inline std::vector<double> symmetric3_roots(const double m[3][3]) {
  const double tr = m[0][0] + m[1][1] + m[2][2];
  const double minors = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] -
                        m[0][2] * m[2][0] + m[1][1] * m[2][2] - m[1][2] * m[2][1];
  const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                     m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                     m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  // lambda^3 - tr lambda^2 + minors lambda - det = 0; lambda = t + tr/3.
  const double shift = tr / 3.0;
  const double p = minors - tr * tr / 3.0;
  const double q = -2.0 * tr * tr * tr / 27.0 + tr * minors / 3.0 - det;
  std::vector<double> roots;
  if (std::abs(p) < 1e-300) {
    roots.assign(3, shift + std::cbrt(-q));
  } else {
    const double r = 2.0 * std::sqrt(-p / 3.0);
    const double arg = std::clamp(3.0 * q / (p * r), -1.0, 1.0);
    const double phi = std::acos(arg) / 3.0;
    for (int j = 0; j < 3; ++j)
      roots.push_back(shift + r * std::cos(phi - 2.0 * std::numbers::pi * j / 3.0));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace ltiest::oracle
