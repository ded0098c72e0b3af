#pragma once

#include <functional>
#include <vector>

namespace crouzeix {

struct NelderMeadOptions {
  double initial_step = 1e-3;  // simplex vertex i = x0 + step * e_i
  int max_iterations = 2000;
  double f_tolerance = 1e-15;  // spread of f over the simplex
  double x_tolerance = 1e-12;  // max distance of a vertex from the best one
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Minimizes f from x0 with the standard reflection/expansion/contraction/shrink
// coefficients (1, 2, 1/2, 1/2). Deterministic; ties between vertices are
// broken lexicographically on the coordinates. f may return +inf to reject a
// point.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, const NelderMeadOptions& options = {});

}  // namespace crouzeix
