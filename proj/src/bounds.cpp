#include "crouzeix/bounds.hpp"

#include <cmath>
#include <string>

#include "crouzeix/errors.hpp"
#include "crouzeix/nelder_mead.hpp"
#include "crouzeix/reference_values.hpp"

namespace crouzeix::bounds {

namespace {

constexpr double kRootClamp = 1.0 - 1e-6;

void check_roots(const BlaschkeProduct& b) {
  for (const Complex& r : b.roots) {
    if (!(std::abs(r) < 1.0)) throw RootOnCircle("Blaschke root outside the open unit disk");
  }
}

// (I - s m)^-1 for strictly upper triangular m: unit upper triangular, solved
// column by column by back substitution.
CMatrix unit_upper_inverse(const CMatrix& m, Complex s) {
  const std::size_t n = m.rows();
  CMatrix x(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t i = n; i-- > 0;) {
      Complex v = (i == col) ? Complex{1.0, 0.0} : Complex{};
      for (std::size_t k = i + 1; k < n; ++k) v += s * m(i, k) * x(k, col);
      x(i, col) = v;
    }
  }
  return x;
}

}  // namespace

Complex blaschke_eval(const BlaschkeProduct& b, Complex z) {
  check_roots(b);
  Complex value{1.0, 0.0};
  for (const Complex& r : b.roots) value *= (z - r) / (1.0 - std::conj(r) * z);
  return value;
}

CMatrix blaschke_apply(const CMatrix& m, const BlaschkeProduct& b) {
  if (!m.square()) throw DimensionMismatch("blaschke_apply: matrix must be square");
  check_roots(b);
  const std::size_t n = m.rows();
  const bool nilpotent = m.is_strictly_upper_triangular();
  const CMatrix id = CMatrix::identity(n);
  CMatrix result = id;
  for (const Complex& r : b.roots) {
    const CMatrix denominator_inv =
        nilpotent ? unit_upper_inverse(m, std::conj(r)) : inverse(id - std::conj(r) * m);
    result = result * ((m - r * id) * denominator_inv);
  }
  return result;
}

SearchOutcome lower_bound_search(const CMatrix& m, const BlaschkeProduct& init) {
  check_roots(init);
  const std::size_t degree = init.roots.size();

  auto roots_from = [degree](const std::vector<double>& x) {
    BlaschkeProduct b;
    b.roots.reserve(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      Complex r{x[2 * i], x[2 * i + 1]};
      const double mod = std::abs(r);
      if (mod > kRootClamp) r *= kRootClamp / mod;
      b.roots.push_back(r);
    }
    return b;
  };
  auto objective = [&](const std::vector<double>& x) {
    return -spectral_norm(blaschke_apply(m, roots_from(x)));
  };

  std::vector<double> x0;
  for (const Complex& r : init.roots) {
    x0.push_back(r.real());
    x0.push_back(r.imag());
  }

  SearchOutcome out;
  out.product = roots_from(x0);
  out.initial_norm = -objective(x0);
  out.norm = out.initial_norm;

  const NelderMeadResult nm = nelder_mead(objective, x0);
  out.iterations = nm.iterations;
  if (-nm.value > out.norm) {
    out.norm = -nm.value;
    out.product = roots_from(nm.x);
  }
  return out;
}

std::size_t free_param_count(int n) {
  switch (n) {
    case 3: return 0;
    case 4: return 2;
    case 5: return 4;
    case 6: return 5;
    default: throw BadDimension("build_H: n must be in 3..6");
  }
}

SimilarityH build_H(int n, std::span<const double> toeplitz, std::span<const double> free) {
  const std::size_t expected = free_param_count(n);
  if (toeplitz.size() < static_cast<std::size_t>(n - 1)) {
    throw BadDimension("build_H: need n - 1 Toeplitz entries");
  }
  if (free.size() != expected) {
    throw BadFreeLength("build_H: n = " + std::to_string(n) + " takes " + std::to_string(expected) +
                        " free parameters, got " + std::to_string(free.size()));
  }
  const double a = toeplitz[0];
  const double b = toeplitz[1];
  if (!(a > 0.0)) throw DegenerateMap("build_H: leading entry a must be positive");

  SimilarityH h;
  h.n = n;
  h.free_params.assign(free.begin(), free.end());
  CMatrix H(static_cast<std::size_t>(n), static_cast<std::size_t>(n));

  switch (n) {
    case 3: {
      H(0, 0) = a;
      H(0, 1) = b / (2.0 * a);
      H(0, 2) = -b * b / (8.0 * a * a * a);
      H(1, 1) = 1.0;
      H(1, 2) = -b / (2.0 * a * a);
      H(2, 2) = 1.0 / a;
      break;
    }
    case 4: {
      const double c = toeplitz[2];
      const double z = free[0], t = free[1];
      const double x = b / std::pow(a, 1.5);
      const double y = a * z - b * x / a + c / std::pow(a, 1.5);
      H(0, 0) = std::pow(a, 1.5);
      H(0, 1) = x * a;
      H(0, 2) = y;
      H(0, 3) = t;
      H(1, 1) = std::sqrt(a);
      H(1, 3) = z;
      H(2, 2) = 1.0 / std::sqrt(a);
      // MH = HJ forces -x/a here; the published layout shows -x a, which
      // leaves a Jordan residual of order 0.1.
      H(2, 3) = -x / a;
      H(3, 3) = std::pow(a, -1.5);
      break;
    }
    case 5: {
      const double c = toeplitz[2], d = toeplitz[3];
      const double u = free[0], w = free[1], hg = free[2], hh = free[3];
      const double a2 = a * a;
      const double f = a * hh + b / a2;
      const double v = a * hg + b * hh + c / a2;
      const double z = a * f + b / a;
      const double t = a * w + b * hg + c * hh + d / a2;
      const double y = a * v + b * f + c / a;
      const double x = a * z + b;
      H(0, 0) = a2;
      H(0, 1) = x;
      H(0, 2) = y;
      H(0, 3) = t;
      H(0, 4) = u;
      H(1, 1) = a;
      H(1, 2) = z;
      H(1, 3) = v;
      H(1, 4) = w;
      H(2, 2) = 1.0;
      H(2, 3) = f;
      H(2, 4) = hg;
      H(3, 3) = 1.0 / a;
      H(3, 4) = hh;
      H(4, 4) = 1.0 / a2;
      break;
    }
    case 6: {
      const double c = toeplitz[2], d = toeplitz[3], e = toeplitz[4];
      const double y1 = free[0], y2 = free[1], y3 = free[2], y4 = free[3], y5 = free[4];
      const double p25 = std::pow(a, -2.5), p15 = std::pow(a, -1.5), p05 = std::pow(a, -0.5);
      const double x9 = a * y5 + b * p25;
      const double x8 = a * y4 + b * y5 + c * p25;
      const double x7 = a * x9 + b * p15;
      const double x6 = a * y3 + b * y4 + c * y5 + d * p25;
      const double x5 = a * x8 + b * x9 + c * p15;
      const double x4 = a * x7 + b * p05;
      const double x3 = a * y2 + b * y3 + c * y4 + d * y5 + e * p25;
      const double x2 = a * x6 + b * x8 + c * x9 + d * p15;
      const double x1 = a * x5 + b * x7 + c * p05;
      const double x0 = a * x4 + b * std::sqrt(a);
      const double diag[6] = {std::pow(a, 2.5), std::pow(a, 1.5), std::sqrt(a), p05, p15, p25};
      for (int i = 0; i < 6; ++i) H(i, i) = diag[i];
      H(0, 1) = x0; H(0, 2) = x1; H(0, 3) = x2; H(0, 4) = x3; H(0, 5) = y1;
      H(1, 2) = x4; H(1, 3) = x5; H(1, 4) = x6; H(1, 5) = y2;
      H(2, 3) = x7; H(2, 4) = x8; H(2, 5) = y3;
      H(3, 4) = x9; H(3, 5) = y4;
      H(4, 5) = y5;
      break;
    }
    default:
      throw BadDimension("build_H: n must be in 3..6");
  }
  h.H = std::move(H);
  return h;
}

JordanCheck verify_jordan(const SimilarityH& h, const CMatrix& m) {
  const CMatrix k = inverse(h.H) * m * h.H;
  JordanCheck out;
  out.residual = max_abs_diff(k, jordan_block(m.rows()));
  out.contraction_norm = spectral_norm(k);
  return out;
}

CMatrix toeplitz_nilpotent(std::size_t n, std::span<const double> entries) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (j - i - 1 < entries.size()) m(i, j) = entries[j - i - 1];
  return m;
}

namespace {

std::vector<double> first_row(const CMatrix& m) {
  std::vector<double> row;
  for (std::size_t j = 1; j < m.cols(); ++j) row.push_back(m(0, j).real());
  return row;
}

}  // namespace

UpperOutcome upper_bound_search(const CMatrix& m, std::span<const double> init_free, int n) {
  if (static_cast<int>(m.rows()) != n) throw DimensionMismatch("upper_bound_search: size differs from n");
  const std::vector<double> toeplitz = first_row(m);

  auto objective = [&](const std::vector<double>& free) {
    const SimilarityH h = build_H(n, toeplitz, free);
    try {
      if (verify_jordan(h, m).residual > kJordanGuard) return std::numeric_limits<double>::infinity();
      return cond2(h.H);
    } catch (const SingularMatrix&) {
      return std::numeric_limits<double>::infinity();
    }
  };

  std::vector<double> x0(init_free.begin(), init_free.end());
  UpperOutcome out;
  out.h = build_H(n, toeplitz, x0);
  out.initial_cond = cond2(out.h.H);
  out.cond = out.initial_cond;
  if (x0.empty()) return out;

  const NelderMeadResult nm = nelder_mead(objective, x0);
  out.iterations = nm.iterations;
  if (nm.value < out.cond) {
    out.cond = nm.value;
    out.h = build_H(n, toeplitz, nm.x);
  }
  return out;
}

namespace {

bool conjugate_symmetric(const std::vector<Complex>& roots, double tol) {
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    bool matched = false;
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (used[j]) continue;
      if (std::abs(roots[j] - std::conj(roots[i])) <= tol) {
        used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace

BoundReport bracket(int n, const CMatrix& m) {
  if (n < 3 || n > 6) throw BadDimension("bracket: n must be in 3..6");
  if (static_cast<int>(m.rows()) != n) throw DimensionMismatch("bracket: matrix size differs from n");

  BoundReport report;
  report.n = n;

  const SearchOutcome lower = lower_bound_search(m, BlaschkeProduct{reference::blaschke_roots(n)});
  report.lower = lower.norm;
  report.lower_initial = lower.initial_norm;
  report.lower_roots = lower.product.roots;
  report.roots_conjugate_symmetric = conjugate_symmetric(lower.product.roots, 1e-6);
  if (n == 6) {
    report.lower_six_value_variant =
        spectral_norm(blaschke_apply(m, BlaschkeProduct{reference::blaschke_roots_a6_six_values()}));
  }

  const std::vector<double> init_free = reference::free_params(n);
  const UpperOutcome upper = upper_bound_search(m, init_free, n);
  report.upper = upper.cond;
  report.upper_initial = upper.initial_cond;
  report.free_params = upper.h.free_params;

  const JordanCheck check = verify_jordan(upper.h, m);
  report.jordan_residual = check.residual;
  report.contraction_norm = check.contraction_norm;
  report.bracket_valid = check.contraction_norm <= 1.0 + 1e-9 && report.lower <= report.upper + 1e-9;
  return report;
}

BoundReport bracket(int n, const conformal::ConformalData& conformal) { return bracket(n, conformal.M); }

}  // namespace crouzeix::bounds
