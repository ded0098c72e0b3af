#include "crouzeix/conformal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "crouzeix/errors.hpp"
#include "crouzeix/parallel.hpp"

namespace crouzeix::conformal {

using std::numbers::pi;

std::vector<double> log_kernel_coefficients(std::size_t nn) {
  const std::size_t n = (nn - 1) / 2;
  std::vector<double> ee(n + 1);
  for (std::size_t j = 1; j <= n; ++j) ee[j] = 2.0 * pi / static_cast<double>(nn) * static_cast<double>(j);
  std::vector<double> c(nn, 0.0);
  for (std::size_t j = 1; j <= n; ++j) c[0] += 1.0 / static_cast<double>(j);
  parallel_for(nn - 1, [&](std::size_t i) {
    const double m = static_cast<double>(i + 1);
    double s = 0.0;
    for (std::size_t j = 1; j <= n; ++j) s += std::cos(m * ee[j]) / static_cast<double>(j);
    c[i + 1] = s;
  });
  return c;
}

std::vector<double> derivative_coefficients(std::size_t nn) {
  const std::size_t n = (nn - 1) / 2;
  const double nnd = static_cast<double>(nn);
  std::vector<double> ee(n + 1);
  for (std::size_t j = 1; j <= n; ++j) ee[j] = 2.0 * pi / nnd * static_cast<double>(j);
  std::vector<double> d(nn, 0.0);
  parallel_for(nn - 1, [&](std::size_t i) {
    const double m = static_cast<double>(i + 1);
    double s = 0.0;
    for (std::size_t j = 1; j <= n; ++j) s += 2.0 * std::sin(m * ee[j]) * static_cast<double>(j);
    d[i + 1] = s / nnd;
  });
  return d;
}

std::vector<Complex> spectral_derivative(std::span<const Complex> nodes) {
  const std::size_t nn = nodes.size();
  const std::vector<double> d = derivative_coefficients(nn);
  std::vector<Complex> out(nn);
  parallel_for(nn, [&](std::size_t j) {
    Complex s{0.0, 0.0};
    for (std::size_t i = 0; i < nn; ++i) s += nodes[i] * d[(i + nn - j) % nn];
    out[j] = s;
  });
  return out;
}

namespace {

void check_node_count(std::size_t nn) {
  if (nn < 3 || nn % 2 == 0) {
    throw BadDimension("collocation needs an odd number (>= 3) of nodes, got " + std::to_string(nn));
  }
}

}  // namespace

CollocationSystem assemble_system(std::span<const Complex> nodes) {
  const std::size_t nn = nodes.size();
  check_node_count(nn);

  const std::vector<double> c = log_kernel_coefficients(nn);
  const std::vector<Complex> dsigma = spectral_derivative(nodes);

  CollocationSystem out{RSystem(nn), std::vector<double>(nn)};
  for (std::size_t j = 0; j < nn; ++j) out.sigma_prime_abs[j] = std::abs(dsigma[j]);

  std::vector<Complex> circle(nn);
  for (std::size_t j = 0; j < nn; ++j) {
    circle[j] = std::exp(Complex{0.0, 2.0 * pi / static_cast<double>(nn) * static_cast<double>(j + 1)});
  }

  RSystem& sys = out.system;
  std::span<double> m = sys.matrix();
  parallel_for(nn, [&](std::size_t i) {
    m[i * nn + i] = std::log(out.sigma_prime_abs[i]) - c[0];
    for (std::size_t j = i + 1; j < nn; ++j) {
      const Complex gap = nodes[j] - nodes[i];
      if (std::abs(gap) < kCoincidentNodes) {
        throw CoincidentNodes("assemble_system: nodes " + std::to_string(i) + " and " +
                              std::to_string(j) + " coincide");
      }
      const double value = std::log(std::abs(gap / (circle[j] - circle[i]))) - c[j - i];
      m[j * nn + i] = value;
      m[i * nn + j] = value;
    }
  });
  for (std::size_t j = 0; j < nn; ++j) sys.rhs()[j] = -std::log(std::abs(nodes[j]));
  return out;
}

namespace {

double max_residual(const RSystem& sys, std::span<const double> q) {
  const std::size_t n = sys.dim();
  std::vector<double> res(n);
  parallel_for(n, [&](std::size_t i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += sys(i, j) * q[j];
    res[i] = std::abs(s - sys.rhs()[i]);
  });
  return *std::max_element(res.begin(), res.end());
}

}  // namespace

DensitySolution solve_density(const CollocationSystem& collocation, std::span<const Complex> nodes) {
  const RSystem& original = collocation.system;
  if (nodes.size() != original.dim()) throw DimensionMismatch("solve_density: node count differs");

  DensitySolution sol;
  sol.nodes.assign(nodes.begin(), nodes.end());
  sol.sigma_prime_abs = collocation.sigma_prime_abs;

  SymFactorization factor(original);
  sol.cond_estimate = factor.cond_estimate();
  sol.translated = sol.cond_estimate > kTranslateThreshold;

  if (!sol.translated) {
    sol.q = factor.solve(original.rhs());
    sol.residual = max_residual(original, sol.q);
    return sol;
  }

  RSystem shifted = original;
  for (double& v : shifted.matrix()) v -= 1.0;
  SymFactorization shifted_factor(shifted);
  sol.q = shifted_factor.solve(shifted.rhs());
  sol.residual = max_residual(shifted, sol.q);
  return sol;
}

UDerivatives u_derivs_at_zero(const DensitySolution& sol) {
  const double turns = kms::winding_number(sol.nodes);
  if (std::abs(2.0 * pi * (turns - 1.0)) > kWindingTolerance) {
    throw OriginOutside("u_derivs_at_zero: boundary does not wind once around 0");
  }
  const double shift = sol.translated ? 1.0 : 0.0;

  UDerivatives out;
  double u0 = 0.0;
  std::array<Complex, 4> sums{};
  for (std::size_t j = 0; j < sol.nodes.size(); ++j) {
    u0 += sol.q[j] * (std::log(std::abs(sol.nodes[j])) - shift);
    const Complex inv = 1.0 / sol.nodes[j];
    Complex p = inv;
    for (std::size_t k = 0; k < 4; ++k) {
      sums[k] += sol.q[j] * p;
      p *= inv;
    }
  }
  out.values[0] = u0;
  double factorial = 1.0;  // (k-1)!
  for (std::size_t k = 1; k <= 4; ++k) {
    if (k > 1) factorial *= static_cast<double>(k - 1);
    out.values[k] = -factorial * sums[k - 1].real();
    out.max_discarded_imag = std::max(out.max_discarded_imag, factorial * std::abs(sums[k - 1].imag()));
  }
  return out;
}

std::array<double, 5> g_derivs(std::span<const double, 5> u) {
  const double gp = std::exp(u[0]);
  const double b = u[1], c = u[2], d = u[3], e = u[4];
  return {
      gp,
      2.0 * gp * b,
      3.0 * gp * (b * b + c),
      4.0 * gp * (3.0 * b * c + b * b * b + d),
      5.0 * gp * (b * b * b * b + 6.0 * b * b * c + 4.0 * b * d + 3.0 * c * c + e),
  };
}

CMatrix g_of_A(const kms::KmsMatrix& a, std::span<const double, 5> g) {
  if (a.n > 6) throw BadDimension("g_of_A: the Taylor data only covers n <= 6");
  const std::size_t n = static_cast<std::size_t>(a.n);
  CMatrix result(n, n);
  CMatrix power = a.matrix;
  double factorial = 1.0;
  for (int m = 1; m <= std::min(5, a.n - 1); ++m) {
    factorial *= m;
    result += power * Complex{g[m - 1] / factorial, 0.0};
    power = power * a.matrix;
  }
  return result;
}

std::vector<double> ConformalData::toeplitz() const {
  std::vector<double> out;
  for (std::size_t j = 1; j < M.cols(); ++j) out.push_back(M(0, j).real());
  return out;
}

ConformalData solve_boundary(std::span<const Complex> nodes, int k) {
  const CollocationSystem collocation = assemble_system(nodes);
  const DensitySolution sol = solve_density(collocation, nodes);
  const UDerivatives u = u_derivs_at_zero(sol);

  ConformalData data;
  data.k = k;
  data.node_count = nodes.size();
  data.translated = sol.translated;
  data.cond_estimate = sol.cond_estimate;
  data.residual = sol.residual;
  data.max_discarded_imag = u.max_discarded_imag;
  data.u0 = u.values[0];
  std::copy(u.values.begin() + 1, u.values.end(), data.u_derivs.begin());
  data.g_derivs = g_derivs(u.values);
  if (k >= 2) data.M = g_of_A(kms::build_kms(k), data.g_derivs);
  return data;
}

ConformalData map_kms(const kms::BoundaryDiscretization& boundary) {
  ConformalData data = solve_boundary(boundary.nodes, boundary.k);
  data.n_algebraic = boundary.n_algebraic;
  return data;
}

ConformalData map_kms(int k, int n_algebraic) {
  return map_kms(kms::discretize_boundary(k, n_algebraic));
}

namespace {

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  if (x.size() < 2) return 0.0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

ConvergenceTable convergence_study(int k, std::vector<int> node_counts) {
  if (node_counts.size() < 2) throw BadDimension("convergence_study: need at least two node counts");
  std::sort(node_counts.begin(), node_counts.end());
  node_counts.erase(std::unique(node_counts.begin(), node_counts.end()), node_counts.end());

  ConvergenceTable table;
  table.k = k;
  table.reference_count = node_counts.back();
  const ConformalData ref = map_kms(kms::discretize_boundary_with_count(k, table.reference_count));
  table.a_reference = ref.g_derivs[0];
  table.g2_reference = ref.g_derivs[1];
  table.b_reference = ref.g_derivs[0] + 0.5 * ref.g_derivs[1];

  std::vector<double> log_n, log_da, log_db;
  for (std::size_t i = 0; i + 1 < node_counts.size(); ++i) {
    const kms::BoundaryDiscretization d = kms::discretize_boundary_with_count(k, node_counts[i]);
    const ConformalData run = map_kms(d);
    ConvergenceRow row;
    row.node_count = node_counts[i];
    row.n_algebraic = d.n_algebraic;
    row.a = run.g_derivs[0];
    row.g2 = run.g_derivs[1];
    row.b = run.g_derivs[0] + 0.5 * run.g_derivs[1];
    const double n4 = std::pow(static_cast<double>(row.node_count), 4);
    row.a_ratio = (table.a_reference - row.a) * n4;
    row.b_ratio = (row.b - table.b_reference) * n4;
    row.g2_ratio = (row.g2 - table.g2_reference) * n4;
    table.rows.push_back(row);

    const double da = std::abs(table.a_reference - row.a);
    const double db = std::abs(row.b - table.b_reference);
    if (da > 0.0 && db > 0.0) {
      log_n.push_back(std::log(static_cast<double>(row.node_count)));
      log_da.push_back(std::log(da));
      log_db.push_back(std::log(db));
    }
  }
  table.slope_a = fit_slope(log_n, log_da);
  table.slope_b = fit_slope(log_n, log_db);
  return table;
}

}  // namespace crouzeix::conformal
