#include <algorithm>
#include <cmath>
#include <numeric>

#include "ltiest/error.hpp"
#include "ltiest/tb.hpp"

namespace ltiest::detail {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kRelativeStop = 1e-12;

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) sum += a[i * n + j] * a[i * n + j];
  return std::sqrt(sum);
}

}  // namespace

SymmetricEigensystem jacobi_symmetric(std::vector<double> a, std::size_t n, bool want_vectors) {
  if (a.size() != n * n) throw InvalidArgument("matrix storage does not match dimension");

  std::vector<double> v;
  if (want_vectors) {
    v.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  }

  double norm = 0.0;
  for (double x : a) norm += x * x;
  norm = std::sqrt(norm);
  const double stop = kRelativeStop * norm;

  int sweep = 0;
  for (; off_diagonal_norm(a, n) > stop; ++sweep) {
    if (sweep == kMaxSweeps)
      throw ConvergenceError("Jacobi did not converge in " + std::to_string(kMaxSweeps) +
                             " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;

        if (want_vectors) {
          for (std::size_t k = 0; k < n; ++k) {
            const double vkp = v[k * n + p];
            const double vkq = v[k * n + q];
            v[k * n + p] = c * vkp - s * vkq;
            v[k * n + q] = s * vkp + c * vkq;
          }
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a[i * n + i] < a[j * n + j]; });

  SymmetricEigensystem out;
  out.sweeps = sweep;
  out.values.reserve(n);
  for (std::size_t i : order) out.values.push_back(a[i * n + i]);
  if (want_vectors) {
    out.vectors.resize(n * n);
    for (std::size_t col = 0; col < n; ++col)
      for (std::size_t row = 0; row < n; ++row)
        out.vectors[row * n + col] = v[row * n + order[col]];
  }
  return out;
}

std::vector<double> real_embedding(const HermitianMatrix& h) {
  const std::size_t m = h.dimension();
  const std::size_t n = 2 * m;
  std::vector<double> e(n * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const auto z = h(i, j);
      e[i * n + j] = z.real();
      e[i * n + (j + m)] = -z.imag();
      e[(i + m) * n + j] = z.imag();
      e[(i + m) * n + (j + m)] = z.real();
    }
  }
  return e;
}

namespace {

// The embedding's spectrum is each eigenvalue of H twice; after sorting,
// entries 2r and 2r+1 belong together.
void check_pairs(const std::vector<double>& doubled, double scale) {
  const double tol = 1e-9 * std::max(1.0, scale);
  for (std::size_t r = 0; r + 1 < doubled.size(); r += 2)
    if (std::abs(doubled[r] - doubled[r + 1]) > tol)
      throw ConsistencyError("real embedding spectrum is not pairwise degenerate");
}

}  // namespace

HermitianEigensystem eigensystem_hermitian(const HermitianMatrix& h) {
  const std::size_t m = h.dimension();
  auto sys = jacobi_symmetric(real_embedding(h), 2 * m, true);
  check_pairs(sys.values, h.frobenius_norm());

  HermitianEigensystem out;
  const std::size_t n = 2 * m;
  for (std::size_t r = 0; r < m; ++r) {
    const std::size_t col = 2 * r;
    out.values.push_back(0.5 * (sys.values[col] + sys.values[col + 1]));
    // Column (x, y) of the embedding maps to x + j y.
    std::vector<std::complex<double>> vec(m);
    double norm = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      vec[i] = {sys.vectors[i * n + col], sys.vectors[(i + m) * n + col]};
      norm += std::norm(vec[i]);
    }
    norm = std::sqrt(norm);
    for (auto& z : vec) z /= norm;
    out.vectors.push_back(std::move(vec));
  }
  return out;
}

}  // namespace ltiest::detail

namespace ltiest {

std::vector<double> eigenvalues_hermitian(const HermitianMatrix& h) {
  const std::size_t m = h.dimension();
  auto sys = detail::jacobi_symmetric(detail::real_embedding(h), 2 * m, false);
  detail::check_pairs(sys.values, h.frobenius_norm());
  std::vector<double> out(m);
  for (std::size_t r = 0; r < m; ++r) out[r] = 0.5 * (sys.values[2 * r] + sys.values[2 * r + 1]);
  return out;
}

}  // namespace ltiest
