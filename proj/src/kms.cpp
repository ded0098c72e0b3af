#include "crouzeix/kms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <iomanip>

#include "crouzeix/errors.hpp"

namespace crouzeix::kms {

using std::numbers::pi;

KmsMatrix build_kms(int n) {
  if (n < 2) throw BadDimension("build_kms: n must be >= 2");
  KmsMatrix a;
  a.n = n;
  a.matrix = CMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) a.matrix(i, j) = 1.0;
  return a;
}

Complex boundary_point(int k, double theta) {
  // Same term order as the reference program: sum_j (k-j) e^{i j theta} / k.
  Complex z{0.0, 0.0};
  const double kd = static_cast<double>(k);
  for (int j = 1; j < k; ++j) {
    z += static_cast<double>(k - j) * std::exp(Complex{0.0, j * theta}) / kd;
  }
  return z;
}

BoundaryDescription describe_boundary(int k) {
  if (k < 3) throw BadDimension("describe_boundary: k must be >= 3");
  BoundaryDescription d;
  d.k = k;
  d.algebraic_half_range = 2.0 * pi / k;
  d.segment_half_height = 0.5 / std::tan(pi / k);
  for (int j = 2; j <= k - 1; ++j) d.cusp_angles.push_back((2.0 * j - 1.0) * pi / k);
  for (int j = 1; j <= k - 1; ++j) {
    d.flat_points.emplace_back(-0.5, 0.5 / std::tan(j * pi / k));
  }
  return d;
}

namespace {

// D_m = [(w - (u+iv)/2)^m - (w - (u-iv)/2)^m] / (i v). Both bases are roots
// of t^2 - 2x t + |z|^2 with x = w - u/2, so D_m obeys the same three-term
// recurrence with D_0 = 0, D_1 = -1. No division by v, no complex powers.
struct DividedDifferences {
  double x2, norm2;
  double prev = 0.0, cur = -1.0;
  void advance() {
    const double next = x2 * cur - norm2 * prev;
    prev = cur;
    cur = next;
  }
};

}  // namespace

double tangential_poly(int k, double u, double v, double w) {
  if (k < 1) throw BadDimension("tangential_poly: k must be >= 1");
  if (u == 0.0 && v == 0.0) {
    throw DegenerateDirection("tangential_poly: (u, v) = (0, 0) is not a line direction");
  }
  const double r2 = 0.25 * (u * u + v * v);
  const double x = w - 0.5 * u;
  DividedDifferences d{2.0 * x, x * x + 0.25 * v * v};
  double t = w;
  for (int m = 1; m < k; ++m) {
    t = w * t + d.cur * r2;
    d.advance();
  }
  return t;
}

double tangential_poly_closed(int k, double phi, double w) {
  const Complex base = 0.5 * std::exp(Complex{0.0, phi}) - w;
  const double im = (std::exp(Complex{0.0, -phi}) * std::pow(base, k)).imag();
  const double sign = (k % 2 == 0) ? -1.0 : 1.0;
  return sign * im / std::sin(phi);
}

double cardioid_p(Complex z) {
  const double r2 = std::norm(z);
  return 27.0 * r2 * r2 - 18.0 * r2 - 8.0 * z.real() - 1.0;
}

double support_function(const CMatrix& a, double omega) {
  const Complex rot = std::exp(Complex{0.0, -omega});
  CMatrix herm = rot * a + std::conj(rot) * a.adjoint();
  herm *= 0.5;
  return hermitian_eigs(herm).back();
}

std::vector<double> support_table(const CMatrix& a, int grid) {
  std::vector<double> table(static_cast<std::size_t>(grid));
  for (int j = 0; j < grid; ++j) table[j] = support_function(a, 2.0 * pi * j / grid);
  return table;
}

double support_gap(const std::vector<double>& table, Complex z) {
  const int grid = static_cast<int>(table.size());
  double worst = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < grid; ++j) {
    const double omega = 2.0 * pi * j / grid;
    const double proj = z.real() * std::cos(omega) + z.imag() * std::sin(omega);
    worst = std::max(worst, proj - table[j]);
  }
  return worst;
}

namespace {

struct UpperArc {
  std::vector<Complex> z;
  std::vector<double> theta;
};

UpperArc upper_arc(int k, int n) {
  UpperArc arc;
  arc.z.reserve(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    const double th = 2.0 * j * pi / n / k;
    arc.theta.push_back(th);
    arc.z.push_back(boundary_point(k, th));
  }
  return arc;
}

int segment_count(const UpperArc& arc, int n) {
  const double h0 = std::abs(arc.z[n] - arc.z[n - 1]);
  return static_cast<int>(std::trunc(arc.z[n].imag() / h0 - 0.5));
}

void check_args(int k, int n) {
  if (k < 3) throw BadDimension("discretize_boundary: k must be >= 3");
  if (n < 4) throw BadDimension("discretize_boundary: n must be >= 4");
}

}  // namespace

int node_count_for(int k, int n) {
  check_args(k, n);
  const UpperArc arc = upper_arc(k, n);
  return 2 * (n + segment_count(arc, n)) + 1;
}

BoundaryDiscretization discretize_boundary(int k, int n) {
  check_args(k, n);
  const UpperArc arc = upper_arc(k, n);
  const int n2 = segment_count(arc, n);
  if (n2 < 1) throw TooCoarse("discretize_boundary: no room for a node on the flat segment");

  BoundaryDiscretization d;
  d.k = k;
  d.n_algebraic = n;
  d.n_segment = n2;
  const Complex corner = arc.z[n];
  d.segment_step = corner.imag() / (n2 + 0.5);

  std::vector<Complex> upper = arc.z;
  std::vector<BoundaryPart> parts(arc.z.size(), BoundaryPart::Algebraic);
  std::vector<double> param = arc.theta;
  for (int j = 1; j <= n2; ++j) {
    upper.push_back(corner - Complex{0.0, j * d.segment_step});
    parts.push_back(BoundaryPart::Segment);
    param.push_back(static_cast<double>(j));
  }

  d.nodes = upper;
  d.parts = parts;
  d.parameter = param;
  for (std::size_t r = upper.size() - 1; r >= 1; --r) {
    d.nodes.push_back(std::conj(upper[r]));
    d.parts.push_back(parts[r]);
    d.parameter.push_back(-param[r]);
  }
  return d;
}

BoundaryDiscretization discretize_boundary_with_count(int k, int node_count) {
  for (int n = 4; 2 * n + 1 < node_count; ++n) {
    if (node_count_for(k, n) == node_count) return discretize_boundary(k, n);
  }
  throw TooCoarse("discretize_boundary_with_count: no discretization has " +
                  std::to_string(node_count) + " nodes");
}

std::string boundary_csv(const BoundaryDiscretization& d) {
  std::ostringstream out;
  out << "theta_or_index,re,im,part\n";
  out << std::setprecision(15);
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    out << d.parameter[i] << ',' << d.nodes[i].real() << ',' << d.nodes[i].imag() << ','
        << (d.parts[i] == BoundaryPart::Algebraic ? "algebraic" : "segment") << '\n';
  }
  return out.str();
}

double winding_number(const std::vector<Complex>& closed, Complex center) {
  double total = 0.0;
  const std::size_t n = closed.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Complex a = closed[i] - center;
    const Complex b = closed[(i + 1) % n] - center;
    total += std::arg(b / a);
  }
  return total / (2.0 * pi);
}

}  // namespace crouzeix::kms
