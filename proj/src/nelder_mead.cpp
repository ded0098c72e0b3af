#include "crouzeix/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace crouzeix {

namespace {

struct Vertex {
  std::vector<double> x;
  double f;
};

bool better(const Vertex& a, const Vertex& b) {
  if (a.f != b.f) return a.f < b.f;
  return std::lexicographical_compare(a.x.begin(), a.x.end(), b.x.begin(), b.x.end());
}

std::vector<double> affine(const std::vector<double>& base, const std::vector<double>& toward, double t) {
  std::vector<double> out(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) out[i] = base[i] + t * (toward[i] - base[i]);
  return out;
}

}  // namespace

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, const NelderMeadOptions& options) {
  const std::size_t dim = x0.size();
  NelderMeadResult result;
  if (dim == 0) {
    result.x = std::move(x0);
    result.value = f(result.x);
    result.converged = true;
    return result;
  }

  std::vector<Vertex> simplex;
  simplex.push_back({x0, f(x0)});
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<double> x = x0;
    x[i] += options.initial_step;
    simplex.push_back({x, f(x)});
  }

  int it = 0;
  for (; it < options.max_iterations; ++it) {
    std::sort(simplex.begin(), simplex.end(), better);
    const Vertex& best = simplex.front();
    const Vertex& worst = simplex.back();

    double spread = std::abs(worst.f - best.f);
    double size = 0.0;
    for (std::size_t v = 1; v <= dim; ++v)
      for (std::size_t i = 0; i < dim; ++i) size = std::max(size, std::abs(simplex[v].x[i] - best.x[i]));
    if (std::isfinite(worst.f) && spread <= options.f_tolerance && size <= options.x_tolerance) {
      result.converged = true;
      break;
    }
    if (size == 0.0) {
      result.converged = true;
      break;
    }

    std::vector<double> centroid(dim, 0.0);
    for (std::size_t v = 0; v < dim; ++v)
      for (std::size_t i = 0; i < dim; ++i) centroid[i] += simplex[v].x[i] / static_cast<double>(dim);

    Vertex reflected{affine(centroid, worst.x, -1.0), 0.0};
    reflected.f = f(reflected.x);

    if (better(reflected, simplex.front())) {
      Vertex expanded{affine(centroid, worst.x, -2.0), 0.0};
      expanded.f = f(expanded.x);
      simplex.back() = better(expanded, reflected) ? std::move(expanded) : std::move(reflected);
      continue;
    }
    if (better(reflected, simplex[dim - 1])) {
      simplex.back() = std::move(reflected);
      continue;
    }
    const bool outside = better(reflected, simplex.back());
    Vertex contracted{affine(centroid, outside ? reflected.x : worst.x, 0.5), 0.0};
    contracted.f = f(contracted.x);
    if (better(contracted, outside ? reflected : simplex.back())) {
      simplex.back() = std::move(contracted);
      continue;
    }
    for (std::size_t v = 1; v <= dim; ++v) {
      simplex[v].x = affine(simplex.front().x, simplex[v].x, 0.5);
      simplex[v].f = f(simplex[v].x);
    }
  }

  std::sort(simplex.begin(), simplex.end(), better);
  result.x = simplex.front().x;
  result.value = simplex.front().f;
  result.iterations = it;
  return result;
}

}  // namespace crouzeix
