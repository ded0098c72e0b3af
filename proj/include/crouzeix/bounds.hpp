#pragma once

// Two-sided bounds on psi(A_n) = psi_D(M), M = g(A_n):
//   ||b(M)|| <= psi_D(M) <= cond(H)   whenever ||H^-1 M H|| <= 1,
// with b a Blaschke product of order n - 1 and H an upper triangular
// similarity taking M to the nilpotent Jordan block.

#include <optional>
#include <vector>

#include "crouzeix/conformal.hpp"
#include "crouzeix/matrix_core.hpp"

namespace crouzeix::bounds {

struct BlaschkeProduct {
  std::vector<Complex> roots;  // each |r| < 1
};

// prod_i (z - r_i) / (1 - conj(r_i) z). Throws RootOnCircle.
Complex blaschke_eval(const BlaschkeProduct& b, Complex z);

// prod_i (m - r_i I)(I - conj(r_i) m)^-1. Throws RootOnCircle; SingularMatrix if
// some I - conj(r_i) m is singular (impossible for strictly upper triangular m).
CMatrix blaschke_apply(const CMatrix& m, const BlaschkeProduct& b);

struct SearchOutcome {
  BlaschkeProduct product;
  double norm = 0.0;
  double initial_norm = 0.0;
  int iterations = 0;
};

// Nelder-Mead on the root coordinates (Re, Im per root), roots clamped
// radially to |r| <= 1 - 1e-6, maximizing ||b(m)||. Never returns a value below
// the starting one.
SearchOutcome lower_bound_search(const CMatrix& m, const BlaschkeProduct& init);

struct SimilarityH {
  int n = 0;
  CMatrix H;
  std::vector<double> free_params;
};

// Free parameter count of build_H for dimension n (0, 2, 4, 5).
std::size_t free_param_count(int n);

// H such that H^-1 M H = J for the Toeplitz M with first row (0, a, b, ...).
// `toeplitz` holds at least n - 1 entries a, b, c, ...
// Throws BadDimension (n outside 3..6 or too few entries) and BadFreeLength.
SimilarityH build_H(int n, std::span<const double> toeplitz, std::span<const double> free);

struct JordanCheck {
  double residual = 0.0;          // max |H^-1 M H - J|
  double contraction_norm = 0.0;  // ||H^-1 M H||
};

JordanCheck verify_jordan(const SimilarityH& h, const CMatrix& m);

struct UpperOutcome {
  SimilarityH h;
  double cond = 0.0;
  double initial_cond = 0.0;
  int iterations = 0;
};

inline constexpr double kJordanGuard = 1e-8;

// Nelder-Mead over the free entries of H minimizing cond(H), rejecting points
// whose Jordan residual exceeds kJordanGuard.
UpperOutcome upper_bound_search(const CMatrix& m, std::span<const double> init_free, int n);

struct BoundReport {
  int n = 0;
  double lower = 0.0;
  std::vector<Complex> lower_roots;
  double lower_initial = 0.0;      // ||b(M)|| at the published roots
  bool roots_conjugate_symmetric = false;
  std::optional<double> lower_six_value_variant;  // n = 6 only
  double upper = 0.0;
  double upper_initial = 0.0;      // cond(H) at the published free parameters
  std::vector<double> free_params;
  double jordan_residual = 0.0;
  double contraction_norm = 0.0;
  bool bracket_valid = false;
};

// Runs both searches from the published starting points.
BoundReport bracket(int n, const conformal::ConformalData& conformal);
BoundReport bracket(int n, const CMatrix& m);

// Toeplitz matrix with first row (0, entries...).
CMatrix toeplitz_nilpotent(std::size_t n, std::span<const double> entries);

}  // namespace crouzeix::bounds
