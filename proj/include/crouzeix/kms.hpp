#pragma once

// KMS matrices A_n (ones strictly above the diagonal) and the geometry of
// their numerical ranges: the algebraic boundary arc, the flat segment on
// Re z = -1/2, the tangential polynomial T_k, and a support-function
// membership oracle.

#include <string>
#include <vector>

#include "crouzeix/matrix_core.hpp"

namespace crouzeix::kms {

struct KmsMatrix {
  int n = 0;
  CMatrix matrix;
};

// Throws BadDimension for n < 2.
KmsMatrix build_kms(int n);

// phi_k(theta) = (1/k) sum_{j=1}^{k-1} j e^{i(k-j)theta}
Complex boundary_point(int k, double theta);

struct BoundaryDescription {
  int k = 0;
  double algebraic_half_range = 0.0;  // 2 pi / k
  double segment_re = -0.5;
  double segment_half_height = 0.0;   // cot(pi/k) / 2
  std::vector<double> cusp_angles;    // (2j-1) pi / k, j = 2..k-1
  std::vector<Complex> flat_points;   // -1/2 + i / (2 tan(j pi / k)), j = 1..k-1

  Complex point(double theta) const { return boundary_point(k, theta); }
};

BoundaryDescription describe_boundary(int k);

// T_k(u, v, w) by the three-term recursion. The divided differences are
// generated by their own real recurrence, so v = 0 needs no special case.
// Throws DegenerateDirection when u = v = 0.
double tangential_poly(int k, double u, double v, double w);

// ((-1)^(k+1) / sin phi) Im(e^{-i phi} (e^{i phi}/2 - w)^k); undefined at sin phi = 0.
// The sign is fixed by T_1 = w.
double tangential_poly_closed(int k, double phi, double w);

// 27|z|^4 - 18|z|^2 - 8 Re z - 1; negative inside the k = 3 cardioid.
double cardioid_p(Complex z);

// lambda_max((e^{-i omega} A + e^{i omega} A^*) / 2)
double support_function(const CMatrix& a, double omega);

// Support values h(omega_j) on an equispaced grid of `grid` angles.
std::vector<double> support_table(const CMatrix& a, int grid);

// max_j (Re(e^{-i omega_j} z) - h(omega_j)); <= 0 (to rounding) iff z lies in
// the polygon circumscribing W(A) along the grid directions.
double support_gap(const std::vector<double>& table, Complex z);

enum class BoundaryPart { Algebraic, Segment };

struct BoundaryDiscretization {
  int k = 0;
  int n_algebraic = 0;   // n: nodes phi_k(2 pi j / (k n)), j = 0..n on the upper arc
  int n_segment = 0;     // n2: nodes on the upper half of the flat segment
  double segment_step = 0.0;
  std::vector<Complex> nodes;      // closed polyline, counterclockwise, node 0 = (k-1)/2
  std::vector<BoundaryPart> parts;
  std::vector<double> parameter;   // theta for algebraic nodes, signed index for segment nodes

  std::size_t node_count() const noexcept { return nodes.size(); }
  // Last index of the upper algebraic arc and of the upper segment half.
  std::size_t upper_arc_end() const noexcept { return static_cast<std::size_t>(n_algebraic); }
  std::size_t upper_segment_end() const noexcept {
    return static_cast<std::size_t>(n_algebraic + n_segment);
  }
};

// Node layout of the reference Matlab program: n+1 nodes on the upper arc,
// n2 = trunc(Im z_n / |z_n - z_{n-1}| - 0.5) equispaced nodes below z_n on the
// segment (step Im z_n / (n2 + 0.5)), then completion by conjugation. The
// total count 2(n + n2) + 1 is always odd. Throws TooCoarse if n2 < 1.
BoundaryDiscretization discretize_boundary(int k, int n);

// Total node count 2(n + n2) + 1 for a given n, without building the nodes.
int node_count_for(int k, int n);

// The discretization whose total node count equals `node_count`.
// Throws TooCoarse when no n produces exactly that count.
BoundaryDiscretization discretize_boundary_with_count(int k, int node_count);

// CSV rows "theta_or_index,re,im,part" with a header line.
std::string boundary_csv(const BoundaryDiscretization& d);

// Winding number of a closed polyline about `center`, as a real number.
double winding_number(const std::vector<Complex>& closed, Complex center = {});

}  // namespace crouzeix::kms
