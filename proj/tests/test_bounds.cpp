#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "crouzeix/bounds.hpp"
#include "crouzeix/errors.hpp"
#include "crouzeix/reference_values.hpp"

using namespace crouzeix;
using namespace crouzeix::bounds;

namespace {

CMatrix published_m(int n) {
  const std::vector<double> t = reference::toeplitz_entries(n);
  return toeplitz_nilpotent(static_cast<std::size_t>(n), t);
}

}  // namespace

TEST_CASE("blaschke_eval has unit modulus on the circle") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-0.7, 0.7), t(0.0, 2 * std::numbers::pi);
  for (int trial = 0; trial < 20; ++trial) {
    BlaschkeProduct b;
    for (int i = 0; i < 4; ++i) b.roots.emplace_back(u(rng), u(rng));
    CHECK(std::abs(std::abs(blaschke_eval(b, std::polar(1.0, t(rng)))) - 1.0) < 1e-12);
  }
  CHECK_THROWS_AS(blaschke_eval(BlaschkeProduct{{Complex{1.0, 0.0}}}, 0.5), RootOnCircle);
}

TEST_CASE("blaschke_apply examples") {
  const CMatrix m = published_m(3);
  CHECK(max_abs_diff(blaschke_apply(m, BlaschkeProduct{{0.0, 0.0}}), m * m) < 1e-15);

  const double norm3 = spectral_norm(blaschke_apply(m, BlaschkeProduct{reference::blaschke_roots(3)}));
  CHECK(std::abs(norm3 - 1.9956978) < 1e-6);
  const double norm4 = spectral_norm(blaschke_apply(published_m(4), BlaschkeProduct{reference::blaschke_roots(4)}));
  CHECK(norm4 >= 1.9938003 - 1e-6);

  CHECK_THROWS_AS(blaschke_apply(m, BlaschkeProduct{{Complex{0.0, 1.0}}}), RootOnCircle);
}

TEST_CASE("blaschke factors commute; the norm ignores root order and unimodular factors") {
  for (int n = 3; n <= 6; ++n) {
    const CMatrix m = published_m(n);
    std::vector<Complex> roots = reference::blaschke_roots(n);
    const CMatrix forward = blaschke_apply(m, BlaschkeProduct{roots});
    std::reverse(roots.begin(), roots.end());
    const CMatrix backward = blaschke_apply(m, BlaschkeProduct{roots});
    CHECK(max_abs_diff(forward, backward) < 1e-12);
    const double base = spectral_norm(forward);
    CHECK(std::abs(spectral_norm(std::polar(1.0, 0.8) * forward) - base) < 1e-10);
    std::rotate(roots.begin(), roots.begin() + 1, roots.end());
    CHECK(std::abs(spectral_norm(blaschke_apply(m, BlaschkeProduct{roots})) - base) < 1e-10);
  }
}

TEST_CASE("blaschke_apply on a general matrix") {
  const CMatrix m{{0.2, 0.1}, {-0.3, 0.1}};
  const BlaschkeProduct b{{Complex{0.3, 0.1}}};
  const CMatrix id = CMatrix::identity(2);
  const Complex r{0.3, 0.1};
  const CMatrix expect = (m - r * id) * inverse(id - std::conj(r) * m);
  CHECK(max_abs_diff(blaschke_apply(m, b), expect) < 1e-15);
}

TEST_CASE("lower_bound_search never regresses") {
  const CMatrix m = published_m(3);
  const SearchOutcome s = lower_bound_search(m, BlaschkeProduct{reference::blaschke_roots(3)});
  CHECK(s.norm >= 1.9956978 - 1e-7);
  CHECK(s.norm >= s.initial_norm - 1e-12);

  const SearchOutcome z = lower_bound_search(m, BlaschkeProduct{{0.0, 0.0}});
  const double a = reference::toeplitz_entries(3)[0];
  CHECK(z.norm >= a * a - 1e-12);

  // On the zero matrix ||b(0)|| = prod |r_i| and the search pushes the roots outwards.
  const SearchOutcome zero = lower_bound_search(CMatrix::zeros(3, 3), BlaschkeProduct{{0.5, Complex{0.0, -0.4}}});
  CHECK(std::abs(zero.initial_norm - 0.2) < 1e-12);
  CHECK(zero.norm > zero.initial_norm);
  CHECK(zero.norm <= 1.0);
  for (Complex r : zero.product.roots) CHECK(std::abs(r) <= 1.0 - 1e-6 + 1e-15);
}

TEST_CASE("build_H examples") {
  const std::vector<double> t3 = reference::toeplitz_entries(3);
  const SimilarityH h3 = build_H(3, t3, {});
  CHECK(std::abs(cond2(h3.H) - 1.995697855) < 1e-8);
  const JordanCheck j3 = verify_jordan(h3, published_m(3));
  CHECK(j3.residual <= 1e-7);
  CHECK(std::abs(j3.contraction_norm - 1.0) <= 1e-7);

  const std::vector<double> unit{1.0, 0.0};
  const SimilarityH hid = build_H(3, unit, {});
  CHECK(max_abs_diff(hid.H, CMatrix::identity(3)) == 0.0);
  CHECK(cond2(hid.H) == doctest::Approx(1.0));

  const std::vector<double> f4 = reference::free_params(4);
  CHECK(std::abs(cond2(build_H(4, reference::toeplitz_entries(4), f4).H) - 1.9938002) < 1e-6);

  const std::vector<double> f6 = reference::free_params(6);
  const SimilarityH h6 = build_H(6, reference::toeplitz_entries(6), f6);
  const JordanCheck j6 = verify_jordan(h6, published_m(6));
  CHECK(j6.residual <= 1e-5);
  CHECK(std::abs(cond2(h6.H) - 1.9924445) < 1e-5);

  CHECK_THROWS_AS(build_H(4, reference::toeplitz_entries(4), std::vector<double>{0.1}), BadFreeLength);
  CHECK_THROWS_AS(build_H(7, reference::toeplitz_entries(6), std::vector<double>{}), BadDimension);
}

TEST_CASE("build_H reduces every published M to the Jordan block") {
  for (int n = 3; n <= 6; ++n) {
    const std::vector<double> free = reference::free_params(n);
    const SimilarityH h = build_H(n, reference::toeplitz_entries(n), free);
    CHECK(h.H.is_upper_triangular());
    const double a = reference::toeplitz_entries(n)[0];
    for (int i = 0; i < n; ++i) {
      CHECK(std::abs(h.H(i, i).real() - std::pow(a, (n - 1) / 2.0 - i)) < 1e-14);
    }
    CHECK(verify_jordan(h, published_m(n)).residual < 1e-12);
  }
  const SimilarityH id{3, CMatrix::identity(3), {}};
  const JordanCheck j = verify_jordan(id, jordan_block(3));
  CHECK(j.residual == 0.0);
  CHECK(std::abs(j.contraction_norm - 1.0) < 1e-14);
}

TEST_CASE("upper_bound_search") {
  const std::vector<double> f4 = reference::free_params(4);
  const UpperOutcome u4 = upper_bound_search(published_m(4), f4, 4);
  CHECK(u4.cond <= 1.9938002 + 1e-7);
  CHECK(u4.cond <= u4.initial_cond + 1e-12);

  const std::vector<double> f5 = reference::free_params(5);
  const UpperOutcome u5 = upper_bound_search(published_m(5), f5, 5);
  CHECK(u5.cond <= 1.9929216 + 1e-7);

  const UpperOutcome u3 = upper_bound_search(published_m(3), {}, 3);
  CHECK(u3.iterations == 0);
  CHECK(u3.cond == u3.initial_cond);
}

TEST_CASE("bracket on the published matrices") {
  for (int n = 3; n <= 6; ++n) {
    const BoundReport r = bracket(n, published_m(n));
    CHECK(r.bracket_valid);
    CHECK(r.lower <= r.upper + 1e-9);
    CHECK(r.upper - r.lower < 1e-5);
    CHECK(r.roots_conjugate_symmetric);
    CHECK(r.lower_six_value_variant.has_value() == (n == 6));
  }
  CHECK_THROWS_AS(bracket(7, CMatrix::zeros(7, 7)), BadDimension);
}
