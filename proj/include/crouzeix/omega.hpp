#pragma once

// A rational map f1 of the unit disk whose image Omega sits inside W(A_3),
// the similarity H1 it induces, and the sampled check that Omega is contained
// in W(A_3). The check is sampling plus a derivative cap; it is not rigorous.

#include <array>
#include <string>
#include <vector>

#include "crouzeix/bounds.hpp"
#include "crouzeix/matrix_core.hpp"

namespace crouzeix::omega {

// f(z) = (c1 z + ... + c7 z^7) / (1 + d1 z + ... + d7 z^7)
struct RationalMap {
  std::vector<double> num;  // c1..c7
  std::vector<double> den;  // d1..d7

  static RationalMap published();
};

// Throws PoleProximity if the denominator gets within 1e-12 of zero on 10^4
// circle samples, or has a zero inside the disk (winding count on 2^14 points).
void validate(const RationalMap& f);

// Zeros of the denominator inside the unit disk, by the argument principle.
int denominator_zero_count(const RationalMap& f, int points = 1 << 14);

// Throws PoleProximity if |denominator| <= 1e-12 at z.
Complex f1_eval(const RationalMap& f, Complex z);

struct InverseDerivs {
  double a1 = 0.0;  // g1'(0) = 1 / c1
  double g2 = 0.0;  // g1''(0)
  double b1 = 0.0;  // a1 + g2 / 2
};

// Derivatives at 0 of the inverse map g1 = f1^-1. Throws DegenerateMap if |c1| < 1e-12.
InverseDerivs g1_derivs(const RationalMap& f);

struct H1Result {
  InverseDerivs derivs;
  CMatrix M1;  // Toeplitz (0, a1, b1)
  bounds::SimilarityH h1;
  double cond = 0.0;
  double jordan_residual = 0.0;
  double contraction_norm = 0.0;
};

inline constexpr double kH1ResidualLimit = 1e-10;

// Throws NoConvergence if H1^-1 M1 H1 misses the Jordan block by more than kH1ResidualLimit.
H1Result h1_for(const InverseDerivs& d);
H1Result h1_for(const RationalMap& f);
double cond_H1(const RationalMap& f);

struct InclusionReport {
  int samples = 0;
  // (a) theta in [0, 3 pi / 4]: p(f1) < 0 on the cardioid part
  double max_p_cardioid = 0.0;
  double max_dp_quotient = 0.0;
  double cap_a = 0.0;
  double cardioid_certified_bound = 0.0;
  // (b) theta in [3 pi / 4, pi]: Re f1 > -1/2 inside the rectangle
  double min_re_segment = 0.0;
  double max_dre_quotient = 0.0;
  double cap_b = 0.0;
  double segment_certified_bound = 0.0;
  double max_re_segment = 0.0;
  double max_im_segment = 0.0;
  bool box_ok = false;
  std::array<double, 4> corner_gaps{};  // support_gap of the rectangle corners
  bool corners_ok = false;
  bool included = false;
};

inline constexpr double kCornerTolerance = 1e-9;

// Requires samples >= 100 and divisible by 4 (BadDimension otherwise).
InclusionReport verify_inclusion(const RationalMap& f, int samples = 1000);

// Rows "theta,re,im,p,part" for theta_j = j pi / samples, j = 0..samples.
std::string curve_csv(const RationalMap& f, int samples);

}  // namespace crouzeix::omega
