#include "crouzeix/omega.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "crouzeix/errors.hpp"
#include "crouzeix/kms.hpp"
#include "crouzeix/reference_values.hpp"

namespace crouzeix::omega {

using std::numbers::pi;

namespace {

constexpr double kPoleFloor = 1e-12;

Complex horner(const std::vector<double>& coeffs, Complex z) {
  Complex s{};
  for (std::size_t j = coeffs.size(); j-- > 0;) s = (s + coeffs[j]) * z;
  return s;
}

Complex denominator(const RationalMap& f, Complex z) { return 1.0 + horner(f.den, z); }

bool is_published(const RationalMap& f) {
  const RationalMap p = RationalMap::published();
  return f.num == p.num && f.den == p.den;
}

}  // namespace

RationalMap RationalMap::published() {
  return {{reference::kF1Numerator.begin(), reference::kF1Numerator.end()},
          {reference::kF1Denominator.begin(), reference::kF1Denominator.end()}};
}

int denominator_zero_count(const RationalMap& f, int points) {
  double total = 0.0;
  Complex prev = denominator(f, 1.0);
  for (int j = 1; j <= points; ++j) {
    const Complex cur = denominator(f, std::polar(1.0, 2.0 * pi * j / points));
    total += std::arg(cur / prev);
    prev = cur;
  }
  return static_cast<int>(std::lround(total / (2.0 * pi)));
}

void validate(const RationalMap& f) {
  constexpr int kSamples = 10000;
  for (int j = 0; j < kSamples; ++j) {
    if (std::abs(denominator(f, std::polar(1.0, 2.0 * pi * j / kSamples))) <= kPoleFloor) {
      throw PoleProximity("rational map: denominator vanishes on the unit circle");
    }
  }
  if (denominator_zero_count(f) != 0) throw PoleProximity("rational map: denominator has zeros in the disk");
}

Complex f1_eval(const RationalMap& f, Complex z) {
  const Complex d = denominator(f, z);
  if (std::abs(d) <= kPoleFloor) throw PoleProximity("f1_eval: too close to a pole");
  return horner(f.num, z) / d;
}

InverseDerivs g1_derivs(const RationalMap& f) {
  const double c1 = f.num.empty() ? 0.0 : f.num[0];
  if (std::abs(c1) < 1e-12) throw DegenerateMap("g1_derivs: f'(0) vanishes");
  const double c2 = f.num.size() > 1 ? f.num[1] : 0.0;
  const double d1 = f.den.empty() ? 0.0 : f.den[0];
  const double f2 = 2.0 * (c2 - c1 * d1);
  InverseDerivs out;
  out.a1 = 1.0 / c1;
  out.g2 = -f2 / (c1 * c1 * c1);
  out.b1 = out.a1 + 0.5 * out.g2;
  return out;
}

H1Result h1_for(const InverseDerivs& d) {
  H1Result r;
  r.derivs = d;
  const std::vector<double> t{d.a1, d.b1};
  r.M1 = bounds::toeplitz_nilpotent(3, t);
  r.h1 = bounds::build_H(3, t, {});
  const bounds::JordanCheck chk = bounds::verify_jordan(r.h1, r.M1);
  r.jordan_residual = chk.residual;
  r.contraction_norm = chk.contraction_norm;
  if (r.jordan_residual > kH1ResidualLimit) throw NoConvergence("h1_for: H1 does not reduce M1 to the Jordan block");
  r.cond = cond2(r.h1.H);
  return r;
}

H1Result h1_for(const RationalMap& f) { return h1_for(g1_derivs(f)); }

double cond_H1(const RationalMap& f) { return h1_for(f).cond; }

InclusionReport verify_inclusion(const RationalMap& f, int samples) {
  if (samples < 100 || samples % 4 != 0) {
    throw BadDimension("verify_inclusion: samples must be >= 100 and divisible by 4");
  }
  const int split = 3 * samples / 4;
  const double step = pi / samples;
  std::vector<Complex> w(static_cast<std::size_t>(samples) + 1);
  for (int j = 0; j <= samples; ++j) w[j] = f1_eval(f, std::polar(1.0, j * step));

  InclusionReport r;
  r.samples = samples;

  r.max_p_cardioid = -std::numeric_limits<double>::infinity();
  for (int j = 0; j <= split; ++j) {
    r.max_p_cardioid = std::max(r.max_p_cardioid, kms::cardioid_p(w[j]));
    if (j < split) {
      r.max_dp_quotient =
          std::max(r.max_dp_quotient, std::abs(kms::cardioid_p(w[j + 1]) - kms::cardioid_p(w[j])) / step);
    }
  }

  r.min_re_segment = std::numeric_limits<double>::infinity();
  r.max_re_segment = -std::numeric_limits<double>::infinity();
  r.max_im_segment = -std::numeric_limits<double>::infinity();
  for (int j = split; j <= samples; ++j) {
    r.min_re_segment = std::min(r.min_re_segment, w[j].real());
    r.max_re_segment = std::max(r.max_re_segment, w[j].real());
    r.max_im_segment = std::max(r.max_im_segment, std::abs(w[j].imag()));
    if (j < samples) r.max_dre_quotient = std::max(r.max_dre_quotient, std::abs(w[j + 1].real() - w[j].real()) / step);
  }

  // The published caps are only meaningful for the published run, and even
  // there they may not dominate what this sampling sees.
  r.cap_a = 1.05 * r.max_dp_quotient;
  r.cap_b = 1.05 * r.max_dre_quotient;
  if (samples == reference::kOmegaSamples && is_published(f)) {
    r.cap_a = std::max(r.cap_a, reference::kOmegaCapA);
    r.cap_b = std::max(r.cap_b, reference::kOmegaCapB);
  }
  r.cardioid_certified_bound = r.max_p_cardioid + r.cap_a * step / 2.0;
  r.segment_certified_bound = r.min_re_segment - r.cap_b * step / 2.0;

  const double half_height = std::sqrt(3.0) / 6.0;
  r.box_ok = r.max_re_segment <= 0.0 && r.max_im_segment <= half_height + 1e-12;

  const std::vector<double> table = kms::support_table(kms::build_kms(3).matrix, 4096);
  const std::array<Complex, 4> corners{Complex{-0.5, half_height}, Complex{-0.5, -half_height},
                                       Complex{0.0, half_height}, Complex{0.0, -half_height}};
  r.corners_ok = true;
  for (std::size_t i = 0; i < corners.size(); ++i) {
    r.corner_gaps[i] = kms::support_gap(table, corners[i]);
    if (r.corner_gaps[i] > kCornerTolerance) r.corners_ok = false;
  }

  r.included = r.cardioid_certified_bound < 0.0 && r.segment_certified_bound > -0.5 && r.box_ok && r.corners_ok;
  return r;
}

std::string curve_csv(const RationalMap& f, int samples) {
  if (samples < 4) throw BadDimension("curve_csv: need at least 4 samples");
  std::string out = "theta,re,im,p,part\n";
  const int split = 3 * samples / 4;
  char line[160];
  for (int j = 0; j <= samples; ++j) {
    const double theta = j * pi / samples;
    const Complex z = f1_eval(f, std::polar(1.0, theta));
    std::snprintf(line, sizeof line, "%.15g,%.15g,%.15g,%.15g,%s\n", theta, z.real(), z.imag(), kms::cardioid_p(z),
                  j <= split ? "cardioid" : "segment");
    out += line;
  }
  return out;
}

}  // namespace crouzeix::omega
