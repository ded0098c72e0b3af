#pragma once

// Riemann map g from W(A_k) onto the unit disk, g(0) = 0, g'(0) > 0, written
// g(z) = z exp(u + iv). The harmonic part u is a single-layer logarithmic
// potential of a density q on the boundary; q solves a first-kind integral
// equation discretized by trapezoidal collocation on an odd number of nodes.
// The log kernel is split into a smooth part and log|e^{it} - e^{is}|, whose
// trigonometric-polynomial quadrature is exact.

#include <array>
#include <span>
#include <vector>

#include "crouzeix/kms.hpp"
#include "crouzeix/matrix_core.hpp"

namespace crouzeix::conformal {

// Condition estimate above which the system is replaced by (M - E) q = -log|sigma|,
// i.e. the kernel scale moves from 1 to e.
inline constexpr double kTranslateThreshold = 1e4;
inline constexpr double kCoincidentNodes = 1e-15;
inline constexpr double kWindingTolerance = 1e-6;  // on 2 pi

// c(m) = sum_{j=1}^{n} cos(j 2 pi m / nn) / j for m = 0..nn-1, nn = 2n+1.
std::vector<double> log_kernel_coefficients(std::size_t nn);

// d(m) = (2 / nn) sum_{j=1}^{n} j sin(2 pi m j / nn), m = 0..nn-1 (d(0) = 0).
std::vector<double> derivative_coefficients(std::size_t nn);

// Trigonometric derivative of the node sequence with respect to the uniform
// parameter tau_j = 2 pi j / nn.
std::vector<Complex> spectral_derivative(std::span<const Complex> nodes);

struct CollocationSystem {
  RSystem system;                       // rhs = -log|sigma_j|
  std::vector<double> sigma_prime_abs;  // |sigma'(tau_j)|
};

// Throws CoincidentNodes, or BadDimension if the node count is even or < 3.
CollocationSystem assemble_system(std::span<const Complex> nodes);

struct DensitySolution {
  std::vector<Complex> nodes;
  std::vector<double> q;                // quadrature weight 2 pi / nn absorbed
  std::vector<double> sigma_prime_abs;
  bool translated = false;
  double cond_estimate = 1.0;
  double residual = 0.0;                // max_i |(M q + log|sigma|)_i| of the system solved
};

DensitySolution solve_density(const CollocationSystem& collocation, std::span<const Complex> nodes);

struct UDerivatives {
  std::array<double, 5> values{};   // u(0), u'(0), u''(0), u'''(0), u''''(0)
  double max_discarded_imag = 0.0;  // largest imaginary part dropped by the Re projection
};

// Throws OriginOutside unless the boundary winds once around 0.
UDerivatives u_derivs_at_zero(const DensitySolution& sol);

// g'(0) ... g^(5)(0) from u(0) ... u''''(0).
std::array<double, 5> g_derivs(std::span<const double, 5> u);

// sum_{m=1}^{min(5, n-1)} g^(m)(0)/m! A^m; exact because A^n = 0.
// Throws BadDimension for n > 6.
CMatrix g_of_A(const kms::KmsMatrix& a, std::span<const double, 5> g);

struct ConformalData {
  int k = 0;
  int n_algebraic = 0;
  std::size_t node_count = 0;
  bool translated = false;
  double cond_estimate = 1.0;
  double residual = 0.0;
  double max_discarded_imag = 0.0;
  double u0 = 0.0;
  std::array<double, 4> u_derivs{};
  std::array<double, 5> g_derivs{};
  CMatrix M;

  // First row of the Toeplitz matrix M: a = M(0,1), b = M(0,2), ...
  std::vector<double> toeplitz() const;
};

// Full pipeline on an arbitrary closed boundary (counterclockwise, odd count).
// M is g(A_k) when k >= 2, otherwise left empty.
ConformalData solve_boundary(std::span<const Complex> nodes, int k);

// Full pipeline for A_k with n algebraic nodes.
ConformalData map_kms(int k, int n_algebraic);
ConformalData map_kms(const kms::BoundaryDiscretization& boundary);

struct ConvergenceRow {
  int node_count = 0;
  int n_algebraic = 0;
  double a = 0.0;         // g'(0)
  double b = 0.0;         // g'(0) + g''(0)/2
  double g2 = 0.0;        // g''(0)
  double a_ratio = 0.0;   // (a(ref) - a(n)) n^4
  double b_ratio = 0.0;   // (b(n) - b(ref)) n^4
  double g2_ratio = 0.0;  // (g''(n) - g''(ref)) n^4
};

struct ConvergenceTable {
  int k = 0;
  int reference_count = 0;
  double a_reference = 0.0;
  double b_reference = 0.0;
  double g2_reference = 0.0;
  std::vector<ConvergenceRow> rows;  // reference excluded
  double slope_a = 0.0;              // least-squares slope of log|a(ref) - a(n)| vs log n
  double slope_b = 0.0;
};

// `node_counts` are total boundary node counts (odd); the largest one is the
// reference. Each count must be reachable by discretize_boundary_with_count.
ConvergenceTable convergence_study(int k, std::vector<int> node_counts);

}  // namespace crouzeix::conformal
