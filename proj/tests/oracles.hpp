#pragma once

// Reference computations written independently of the library code paths
// they check. Dense eigenproblems go through Eigen here; the library uses its
// own Jacobi and power iterations.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using std::numbers::pi;

// (I + alpha u u^T)^-1 b with u = (1, ..., 1).
inline std::vector<double> sherman_morrison_ones(double alpha, const std::vector<double>& b) {
  double sum = 0.0;
  for (double v : b) sum += v;
  const double n = static_cast<double>(b.size());
  const double s = alpha * sum / (1.0 + alpha * n);
  std::vector<double> x(b);
  for (double& v : x) v -= s;
  return x;
}

// Givens rotation acting on coordinates (i, j), with a complex phase.
inline Eigen::MatrixXcd givens(int n, int i, int j, double theta, double phase) {
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Identity(n, n);
  const double c = std::cos(theta), s = std::sin(theta);
  const C e = std::polar(1.0, phase);
  g(i, i) = c;
  g(i, j) = -s * std::conj(e);
  g(j, i) = s * e;
  g(j, j) = c;
  return g;
}

inline double largest_singular_value(const Eigen::MatrixXcd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()(0);
}

// lambda_max of (e^{-i w} A + e^{i w} A^*) / 2
inline double support(const Eigen::MatrixXcd& a, double w) {
  const Eigen::MatrixXcd b = std::polar(1.0, -w) * a;
  const Eigen::MatrixXcd h = 0.5 * (b + b.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

inline Eigen::MatrixXcd kms(int n) {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) a(i, j) = 1.0;
  return a;
}

// max_w (Re(e^{-iw} z) - support(a, w)): grid search, then golden-section
// refinement around the best grid angle. <= 0 iff z is in W(a); close to 0
// iff z is on the boundary.
inline double support_excess(const Eigen::MatrixXcd& a, C z, int grid = 720) {
  auto f = [&](double w) { return (std::polar(1.0, -w) * z).real() - support(a, w); };
  int best = 0;
  double best_value = -1e300;
  for (int j = 0; j < grid; ++j) {
    const double v = f(2.0 * pi * j / grid);
    if (v > best_value) {
      best_value = v;
      best = j;
    }
  }
  const double step = 2.0 * pi / grid;
  double lo = step * (best - 1), hi = step * (best + 1);
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - r * (hi - lo), x2 = lo + r * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 80; ++it) {
    if (f1 > f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - r * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + r * (hi - lo);
      f2 = f(x2);
    }
  }
  return std::max(best_value, std::max(f1, f2));
}

// ((-1)^(k+1) / sin phi) Im(e^{-i phi} (e^{i phi}/2 - w)^k). With (-1)^k in
// front the k = 1 case would give -w instead of T_1 = w.
inline double tangential_closed(int k, double phi, double w) {
  const C t = std::pow(0.5 * std::polar(1.0, phi) - w, k);
  const double sign = (k % 2 == 0) ? -1.0 : 1.0;
  return sign / std::sin(phi) * (std::polar(1.0, -phi) * t).imag();
}

// Inverse of the rational map by Newton's method, then central differences
// at 0 with one Richardson step. Returns (g'(0), g''(0)).
struct InverseEstimate {
  double first;
  double second;
};

inline InverseEstimate newton_inverse(const std::vector<double>& num, const std::vector<double>& den) {
  auto poly = [](const std::vector<double>& c, C z, bool with_one) {
    C s = with_one ? 1.0 : 0.0;
    C p = z;
    for (double v : c) {
      s += v * p;
      p *= z;
    }
    return s;
  };
  auto dpoly = [](const std::vector<double>& c, C z) {
    C s = 0.0;
    C p = 1.0;
    for (std::size_t j = 0; j < c.size(); ++j) {
      s += static_cast<double>(j + 1) * c[j] * p;
      p *= z;
    }
    return s;
  };
  auto invert = [&](double eps) {
    C w = eps / num[0];
    for (int it = 0; it < 60; ++it) {
      const C n = poly(num, w, false), d = poly(den, w, true);
      const C f = n / d - eps;
      const C fp = (dpoly(num, w) * d - n * dpoly(den, w)) / (d * d);
      const C step = f / fp;
      w -= step;
      if (std::abs(step) < 1e-22) break;
    }
    return w.real();
  };
  auto first = [&](double h) { return (invert(h) - invert(-h)) / (2.0 * h); };
  auto second = [&](double h) { return (invert(h) + invert(-h)) / (h * h); };
  const double h = 1e-4;
  return {(4.0 * first(h) - first(2 * h)) / 3.0, (4.0 * second(h) - second(2 * h)) / 3.0};
}

}  // namespace oracle
