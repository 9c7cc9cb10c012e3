#pragma once

// Test-only oracles. None of these call into the library's eigen/SVD or
// optimizer code paths; they exist to check those paths independently.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Core>

namespace oracle {

using Complex = std::complex<double>;
using Real2D = std::vector<std::vector<double>>;

// Cyclic Jacobi rotations on a real symmetric matrix. Returns eigenvalues
// ascending.
inline std::vector<double> jacobi_eigenvalues(Real2D a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-40) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a[i][i];
  std::sort(eig.begin(), eig.end());
  return eig;
}

// Real symmetric embedding [[Re, -Im], [Im, Re]] of a Hermitian matrix;
// every eigenvalue of the input appears twice.
inline Real2D real_embedding(const Eigen::MatrixXcd& h) {
  const auto n = static_cast<std::size_t>(h.rows());
  Real2D a(2 * n, std::vector<double>(2 * n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Complex z = h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      a[i][j] = z.real();
      a[i][j + n] = -z.imag();
      a[i + n][j] = z.imag();
      a[i + n][j + n] = z.real();
    }
  return a;
}

inline std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& h) {
  const std::vector<double> doubled = jacobi_eigenvalues(real_embedding(h));
  std::vector<double> out;
  for (std::size_t i = 0; i < doubled.size(); i += 2) out.push_back(doubled[i]);
  return out;
}

// Sum of singular values via the Hermitian dilation [[0, M], [M^dagger, 0]],
// whose eigenvalues are +-sigma_i (plus zeros).
inline double trace_norm(const Eigen::MatrixXcd& m) {
  const Eigen::Index r = m.rows();
  const Eigen::Index c = m.cols();
  Eigen::MatrixXcd dilation = Eigen::MatrixXcd::Zero(r + c, r + c);
  dilation.topRightCorner(r, c) = m;
  dilation.bottomLeftCorner(c, r) = m.adjoint();
  double sum = 0.0;
  for (double x : hermitian_eigenvalues(dilation)) sum += std::abs(x);
  return 0.5 * sum;
}

// <ab|H|ab> for a = (cos t1, e^{i p1} sin t1), b = (cos t2, e^{i p2} sin t2)
// on 2 (x) 2. Every unit product vector is of this form up to global phase.
inline double product_value_2x2(const Eigen::MatrixXcd& h, double t1, double p1, double t2,
                                double p2) {
  const Complex a[2] = {std::cos(t1), std::polar(std::sin(t1), p1)};
  const Complex b[2] = {std::cos(t2), std::polar(std::sin(t2), p2)};
  Complex v[4];
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) v[i * 2 + k] = a[i] * b[k];
  Complex acc = 0.0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) acc += std::conj(v[r]) * h(r, c) * v[c];
  return acc.real();
}

// Dense 4-d grid followed by shrinking local grids around the best few
// coarse points.
inline double brute_force_product_min_2x2(const Eigen::MatrixXcd& h) {
  constexpr double pi = std::numbers::pi;
  constexpr int coarse = 24;
  struct Point {
    double value, t1, p1, t2, p2;
  };
  std::vector<Point> points;
  for (int i = 0; i <= coarse; ++i)
    for (int j = 0; j < coarse; ++j)
      for (int k = 0; k <= coarse; ++k)
        for (int l = 0; l < coarse; ++l) {
          const double t1 = 0.5 * pi * i / coarse, p1 = 2 * pi * j / coarse;
          const double t2 = 0.5 * pi * k / coarse, p2 = 2 * pi * l / coarse;
          points.push_back({product_value_2x2(h, t1, p1, t2, p2), t1, p1, t2, p2});
        }
  std::partial_sort(points.begin(), points.begin() + 8, points.end(),
                    [](const Point& x, const Point& y) { return x.value < y.value; });

  double best = points.front().value;
  for (int s = 0; s < 8; ++s) {
    Point c = points[static_cast<std::size_t>(s)];
    double step = 2 * pi / coarse;
    for (int level = 0; level < 40; ++level) {
      Point local = c;
      for (int i = -3; i <= 3; ++i)
        for (int j = -3; j <= 3; ++j)
          for (int k = -3; k <= 3; ++k)
            for (int l = -3; l <= 3; ++l) {
              const double t1 = c.t1 + i * step / 3, p1 = c.p1 + j * step / 3;
              const double t2 = c.t2 + k * step / 3, p2 = c.p2 + l * step / 3;
              const double v = product_value_2x2(h, t1, p1, t2, p2);
              if (v < local.value) local = {v, t1, p1, t2, p2};
            }
      c = local;
      step *= 0.6;
    }
    best = std::min(best, c.value);
  }
  return best;
}

}  // namespace oracle
