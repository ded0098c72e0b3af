#include <doctest.h>

#include <cmath>
#include <random>

#include "crouzeix/errors.hpp"
#include "crouzeix/omega.hpp"
#include "crouzeix/reference_values.hpp"
#include "oracles.hpp"

using namespace crouzeix;
using namespace crouzeix::omega;

TEST_CASE("f1_eval") {
  const RationalMap f = RationalMap::published();
  CHECK(f1_eval(f, 0.0) == Complex{0.0, 0.0});
  double sc = 0.0, sd = 1.0;
  for (double c : f.num) sc += c;
  for (double d : f.den) sd += d;
  const Complex one = f1_eval(f, 1.0);
  CHECK(std::abs(one - sc / sd) < 1e-15);
  CHECK(one.real() > 0.99);

  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  for (int i = 0; i < 20; ++i) {
    const Complex z{u(rng), u(rng)};
    CHECK(std::abs(f1_eval(f, std::conj(z)) - std::conj(f1_eval(f, z))) < 1e-15);
  }

  const RationalMap pole{{1.0}, {-1.0}};
  CHECK_THROWS_AS(f1_eval(pole, 1.0), PoleProximity);
}

TEST_CASE("rational map validation") {
  CHECK_NOTHROW(validate(RationalMap::published()));
  CHECK(denominator_zero_count(RationalMap::published()) == 0);
  CHECK(denominator_zero_count(RationalMap{{1.0}, {0.0, 4.0}}) == 2);
  CHECK_THROWS_AS(validate(RationalMap{{1.0}, {0.0, 4.0}}), PoleProximity);
  CHECK_THROWS_AS(validate(RationalMap{{1.0}, {-1.0}}), PoleProximity);
}

TEST_CASE("g1_derivs") {
  const InverseDerivs id = g1_derivs(RationalMap{{1.0}, {}});
  CHECK(id.a1 == 1.0);
  CHECK(id.b1 == 1.0);
  const InverseDerivs half = g1_derivs(RationalMap{{2.0}, {}});
  CHECK(half.a1 == 0.5);
  CHECK(half.b1 == 0.5);
  CHECK_THROWS_AS(g1_derivs(RationalMap{{0.0, 1.0}, {}}), DegenerateMap);

  const RationalMap f = RationalMap::published();
  const InverseDerivs d = g1_derivs(f);
  const oracle::InverseEstimate est = oracle::newton_inverse(f.num, f.den);
  CHECK(std::abs(d.a1 - est.first) <= 1e-10 * std::abs(d.a1));
  CHECK(std::abs(d.g2 - est.second) <= 1e-10 * std::abs(d.g2));
  CHECK(std::abs(d.a1 - 1.36240) < 1e-4);
  CHECK(std::abs(d.b1 - 0.70906) < 1e-3);
}

TEST_CASE("cond of H1") {
  const RationalMap f = RationalMap::published();
  const H1Result h = h1_for(f);
  CHECK(h.jordan_residual <= kH1ResidualLimit);
  CHECK(std::abs(h.contraction_norm - 1.0) < 1e-12);
  CHECK(std::abs(h.cond - reference::kCondH1) < 1e-6);
  CHECK(h.cond >= reference::kLowerBoundA3 - 1e-6);

  CHECK(std::abs(h1_for(InverseDerivs{1.0, 0.0, 0.0}).cond - 1.0) < 1e-14);
  CHECK(std::abs(h1_for(InverseDerivs{1.360374515, 0.0, 0.710915425}).cond - 1.995697855) < 1e-8);
}

TEST_CASE("verify_inclusion: preconditions and structure") {
  const RationalMap f = RationalMap::published();
  CHECK_THROWS_AS(verify_inclusion(f, 96), BadDimension);
  CHECK_THROWS_AS(verify_inclusion(f, 1002), BadDimension);

  const InclusionReport r = verify_inclusion(f, 1000);
  CHECK(r.box_ok);
  CHECK(r.corners_ok);
  for (double g : r.corner_gaps) CHECK(g <= kCornerTolerance);
  CHECK(r.cardioid_certified_bound >= r.max_p_cardioid);
  CHECK(r.segment_certified_bound <= r.min_re_segment);
  CHECK(r.cap_a >= r.max_dp_quotient);
  CHECK(r.cap_b >= r.max_dre_quotient);
  CHECK(std::abs(r.min_re_segment - reference::kOmegaMinRe) < 2e-6);
  CHECK(r.segment_certified_bound > reference::kOmegaSegmentBound);
  CHECK(r.included);
}

TEST_CASE("verify_inclusion: refinement never loses the inclusion") {
  const RationalMap f = RationalMap::published();
  bool previous = verify_inclusion(f, 200).included;
  for (int s : {400, 800, 1600, 3200}) {
    const bool now = verify_inclusion(f, s).included;
    CHECK((!previous || now));
    previous = now;
  }
}

TEST_CASE("curve_csv") {
  const std::string csv = curve_csv(RationalMap::published(), 8);
  CHECK(csv.starts_with("theta,re,im,p,part\n0,0.99"));
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 10);
}
