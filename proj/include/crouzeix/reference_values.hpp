#pragma once

// Published constants for A_3 ... A_6: Toeplitz entries of M = g(A_n), the
// Blaschke roots and similarity parameters that realize the bounds, and the
// reported brackets. Every value here is also recomputed by the library; the
// constants serve as starting points and as regression targets.

#include <array>
#include <complex>
#include <vector>

namespace crouzeix::reference {

struct Bracket {
  double lower;
  double upper;
};

// Table of two-sided bounds on psi(A_n), n = 3..6.
inline Bracket table1(int n) {
  switch (n) {
    case 3: return {1.9956978, 1.9956979};
    case 4: return {1.993800, 1.993801};
    case 5: return {1.992921, 1.992922};
    case 6: return {1.992444, 1.992445};
    default: return {0.0, 0.0};
  }
}

// First row of g(A_n): a, b, c, ...
inline std::vector<double> toeplitz_entries(int n) {
  switch (n) {
    case 3: return {1.360374515, 0.710915425};
    case 4: return {1.1888506, 0.3742134, 0.3443362};
    case 5: return {1.1170233, 0.2325756, 0.2187502, 0.1895824};
    case 6: return {1.0798634, 0.1590093, 0.1519169, 0.1359021, 0.1161184};
    default: return {};
  }
}

// g'(0), g''(0), g'''(0) for A_4.
inline constexpr std::array<double, 3> kA4Derivatives{1.1888506, -1.6292742, 4.7085601};

// Blaschke roots giving the lower bounds (order n - 1).
inline std::vector<std::complex<double>> blaschke_roots(int n) {
  using C = std::complex<double>;
  switch (n) {
    case 3: return {C{-0.5470208, 0.0}, C{0.1465739, 0.0}};
    case 4: return {C{-0.4560323, 0.3891911}, C{-0.4560323, -0.3891911}, C{0.2474013, 0.0}};
    case 5:
      return {C{-0.2583004, 0.60451151}, C{-0.2583004, -0.60451151}, C{-0.6247827, 0.0},
              C{0.3295365, 0.0}};
    case 6:
      return {C{-0.5859775, 0.3199164}, C{-0.5859775, -0.3199164}, C{-0.0604565, 0.70030221},
              C{-0.0604565, -0.70030221}, C{0.3972632, 0.0}};
    default: return {};
  }
}

// The A_6 list as printed carries a sixth value that repeats the last A_5
// root; kept so reports can show the norm it produces.
inline std::vector<std::complex<double>> blaschke_roots_a6_six_values() {
  auto roots = blaschke_roots(6);
  roots.emplace_back(0.3295365, 0.0);
  return roots;
}

inline constexpr double kLowerBoundA3 = 1.9956978;
inline constexpr double kLowerBoundA4 = 1.9938003;
inline constexpr double kLowerBoundA5 = 1.9929216;
inline constexpr double kLowerBoundA6 = 1.9924447;

// Free entries of H: none for n = 3; (z, t) for n = 4; (u, w, h_g, h) for
// n = 5; (y1..y5) for n = 6.
inline std::vector<double> free_params(int n) {
  switch (n) {
    case 3: return {};
    case 4: return {-0.0735033, -0.0231366};
    case 5: return {-0.0194597, -0.0384976, -0.1091772, -0.2503045};
    case 6: return {-0.0163999, -0.0248879, -0.0578414, -0.1294105, -0.243031};
    default: return {};
  }
}

inline double cond_h(int n) {
  switch (n) {
    case 3: return 1.995697855;
    case 4: return 1.9938002;
    case 5: return 1.9929216;
    case 6: return 1.9924445;
    default: return 0.0;
  }
}

// g'(0) for n = 3..6.
inline double leading_a(int n) { return toeplitz_entries(n).empty() ? 0.0 : toeplitz_entries(n)[0]; }

// Convergence windows for A_3: (a(ref) - a(n)) n^4 and (b(n) - b(ref)) n^4.
inline constexpr double kRatioAMin = 33.0, kRatioAMax = 65.0;
inline constexpr double kRatioBMin = 130.0, kRatioBMax = 350.0;
inline constexpr int kConvergenceReference = 1447;
inline constexpr std::array<int, 7> kConvergenceCounts{23, 47, 95, 191, 383, 767, 1205};

// Rational map f1 with f1(D) inside W(A_3).
inline constexpr std::array<double, 7> kF1Numerator{0.734, 0.49736, 0.07268, -0.00521,
                                                   0.00013, 0.00061, -0.00251};
inline constexpr std::array<double, 7> kF1Denominator{0.32564, -0.03291, 0.01, -0.004,
                                                     0.00084, -0.00242, 0.00028};
inline constexpr double kCondH1 = 1.9996222;
inline constexpr double kOmegaMaxP = -0.0008777;
inline constexpr double kOmegaCardioidBound = -0.000849;
inline constexpr double kOmegaMinRe = -0.4998968;
inline constexpr double kOmegaSegmentBound = -0.499921;
inline constexpr double kOmegaQuotientA = 0.0174;
inline constexpr double kOmegaQuotientB = 0.01485;
inline constexpr double kOmegaCapA = 0.018;
inline constexpr double kOmegaCapB = 0.015;
inline constexpr int kOmegaSamples = 1000;

}  // namespace crouzeix::reference
