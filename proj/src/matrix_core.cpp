#include "crouzeix/matrix_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "crouzeix/errors.hpp"

namespace crouzeix {

namespace {

void require_finite(std::span<const Complex> entries) {
  for (const Complex& z : entries) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw NonFiniteEntry("CMatrix: non-finite entry");
    }
  }
}

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(std::string(what) + ": shape mismatch");
  }
}

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw DimensionMismatch("CMatrix: entry count does not match rows*cols");
  }
  require_finite(data_);
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("CMatrix: ragged initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
  require_finite(data_);
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const Complex> diag) {
  require_finite(diag);
  CMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

CMatrix CMatrix::transpose() const {
  CMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

double CMatrix::max_abs() const noexcept {
  double best = 0.0;
  for (const Complex& z : data_) best = std::max(best, std::abs(z));
  return best;
}

bool CMatrix::is_strictly_upper_triangular(double tol) const noexcept {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j <= i && j < cols_; ++j)
      if (std::abs((*this)(i, j)) > tol) return false;
  return true;
}

bool CMatrix::is_upper_triangular(double tol) const noexcept {
  for (std::size_t i = 1; i < rows_; ++i)
    for (std::size_t j = 0; j < std::min(i, cols_); ++j)
      if (std::abs((*this)(i, j)) > tol) return false;
  return true;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(Complex scale) noexcept {
  for (Complex& z : data_) z *= scale;
  return *this;
}

CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) throw DimensionMismatch("operator*: inner dimensions differ");
  CMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double best = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    best = std::max(best, std::abs(a.entries()[i] - b.entries()[i]));
  return best;
}

CMatrix jordan_block(std::size_t n) {
  CMatrix j(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) j(i, i + 1) = 1.0;
  return j;
}

// ---------------------------------------------------------------------------
// Real symmetric systems

RSystem::RSystem(std::size_t dim) : dim_(dim), matrix_(dim * dim, 0.0), rhs_(dim, 0.0) {
  if (dim == 0) throw BadDimension("RSystem: dim must be positive");
}

bool RSystem::is_symmetric() const noexcept {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (matrix_[i * dim_ + j] != matrix_[j * dim_ + i]) return false;
  return true;
}

double RSystem::norm_inf() const noexcept {
  double best = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < dim_; ++j) s += std::abs(matrix_[i * dim_ + j]);
    best = std::max(best, s);
  }
  return best;
}

struct SymFactorization::Impl {
  Eigen::PartialPivLU<Eigen::MatrixXd> lu;
  bool singular = false;
};

SymFactorization::SymFactorization(const RSystem& sys) : impl_(std::make_unique<Impl>()) {
  const auto n = static_cast<Eigen::Index>(sys.dim());
  using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const RowMajor> view(sys.matrix().data(), n, n);
  impl_->lu.compute(view);
  const auto& packed = impl_->lu.matrixLU();
  for (Eigen::Index k = 0; k < n; ++k) {
    const double pivot = std::abs(packed(k, k));
    if (!(pivot >= kPivotFloor)) {
      impl_->singular = true;
      break;
    }
  }
}

SymFactorization::~SymFactorization() = default;
SymFactorization::SymFactorization(SymFactorization&&) noexcept = default;
SymFactorization& SymFactorization::operator=(SymFactorization&&) noexcept = default;

bool SymFactorization::singular() const noexcept { return impl_->singular; }

double SymFactorization::cond_estimate() const {
  if (impl_->singular) return std::numeric_limits<double>::infinity();
  const double rcond = impl_->lu.rcond();
  if (!(rcond > 0.0)) return std::numeric_limits<double>::infinity();
  return 1.0 / rcond;
}

std::vector<double> SymFactorization::solve(std::span<const double> rhs) const {
  if (impl_->singular) throw SingularSystem("solve_sym: pivot below 1e-300");
  const auto n = impl_->lu.matrixLU().rows();
  if (static_cast<Eigen::Index>(rhs.size()) != n) {
    throw DimensionMismatch("solve_sym: rhs length differs from dimension");
  }
  Eigen::Map<const Eigen::VectorXd> b(rhs.data(), n);
  Eigen::VectorXd x = impl_->lu.solve(b);
  return {x.data(), x.data() + n};
}

SymSolution solve_sym(const RSystem& sys) {
  SymFactorization factor(sys);
  SymSolution out;
  out.x = factor.solve(sys.rhs());
  out.cond_estimate = factor.cond_estimate();
  out.ill_conditioned = out.cond_estimate > kIllConditioned;
  return out;
}

double relative_residual(const RSystem& sys, std::span<const double> x) {
  const std::size_t n = sys.dim();
  double res = 0.0, xmax = 0.0, bmax = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += sys(i, j) * x[j];
    res = std::max(res, std::abs(s - sys.rhs()[i]));
    xmax = std::max(xmax, std::abs(x[i]));
    bmax = std::max(bmax, std::abs(sys.rhs()[i]));
  }
  const double scale = sys.norm_inf() * xmax + bmax;
  return scale == 0.0 ? res : res / scale;
}

// ---------------------------------------------------------------------------
// Small complex matrices

namespace {

std::vector<Complex> mat_vec(const CMatrix& g, const std::vector<Complex>& x) {
  std::vector<Complex> y(g.rows(), Complex{});
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) y[i] += g(i, j) * x[j];
  return y;
}

double norm2(const std::vector<Complex>& x) {
  double s = 0.0;
  for (const Complex& z : x) s += std::norm(z);
  return std::sqrt(s);
}

// Returns the converged Rayleigh quotient of g, or a negative value on
// stagnation (iteration cap, or the iterate falling into the null space of a
// nonzero g).
double power_iterate(const CMatrix& g, std::vector<Complex> x, const NormOptions& opt) {
  double nx = norm2(x);
  for (Complex& z : x) z /= nx;
  double previous = -1.0;
  for (int it = 0; it < opt.max_iterations; ++it) {
    std::vector<Complex> y = mat_vec(g, x);
    double rho = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) rho += (std::conj(x[i]) * y[i]).real();
    const double ny = norm2(y);
    if (ny == 0.0) return -1.0;
    if (previous >= 0.0 && std::abs(rho - previous) <= opt.tolerance * std::abs(rho)) return rho;
    previous = rho;
    for (std::size_t i = 0; i < y.size(); ++i) x[i] = y[i] / ny;
  }
  return -1.0;
}

}  // namespace

double spectral_norm(const CMatrix& m, const NormOptions& options) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  if (m.max_abs() == 0.0) return 0.0;
  const CMatrix gram = m.adjoint() * m;
  const std::size_t n = gram.rows();

  std::vector<Complex> start(n, Complex{1.0, 0.0});
  double rho = power_iterate(gram, start, options);
  if (rho < 0.0) {
    for (std::size_t i = 0; i < n; ++i) start[i] = Complex{1.0, 0.37 * static_cast<double>(i + 1)};
    rho = power_iterate(gram, start, options);
  }
  if (rho < 0.0) {
    if (!options.eigen_fallback) throw NoConvergence("spectral_norm: power iteration stalled");
    rho = hermitian_eigs(gram).back();
  }
  return std::sqrt(std::max(rho, 0.0));
}

CMatrix inverse(const CMatrix& m) {
  if (!m.square()) throw DimensionMismatch("inverse: matrix must be square");
  const std::size_t n = m.rows();
  CMatrix a = m;
  CMatrix inv = CMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot_row = col;
    double best = std::abs(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a(r, col)) > best) {
        best = std::abs(a(r, col));
        pivot_row = r;
      }
    }
    if (!(best >= kPivotFloor)) throw SingularMatrix("inverse: pivot below 1e-300");
    if (pivot_row != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(col, j), a(pivot_row, j));
        std::swap(inv(col, j), inv(pivot_row, j));
      }
    }
    const Complex p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Complex f = a(r, col);
      if (f == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

double cond2(const CMatrix& m) { return spectral_norm(m) * spectral_norm(inverse(m)); }

std::vector<double> hermitian_eigs(const CMatrix& m) {
  if (!m.square()) throw DimensionMismatch("hermitian_eigs: matrix must be square");
  const std::size_t n = m.rows();
  const double tol = 1e-13 * std::max(1.0, m.max_abs());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) {
        throw NotHermitian("hermitian_eigs: matrix is not Hermitian");
      }

  // Every eigenvalue of m appears twice in the embedding.
  const std::size_t big = 2 * n;
  std::vector<double> s(big * big);
  auto at = [&](std::size_t i, std::size_t j) -> double& { return s[i * big + j]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double re = 0.5 * (m(i, j).real() + m(j, i).real());
      const double im = 0.5 * (m(i, j).imag() - m(j, i).imag());
      at(i, j) = re;
      at(i + n, j + n) = re;
      at(i, j + n) = -im;
      at(i + n, j) = im;
    }

  double frob = 0.0;
  for (double v : s) frob += v * v;
  frob = std::sqrt(frob);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < big; ++i)
      for (std::size_t j = 0; j < big; ++j)
        if (i != j) off += at(i, j) * at(i, j);
    if (std::sqrt(off) <= 1e-14 * frob) break;

    for (std::size_t p = 0; p + 1 < big; ++p) {
      for (std::size_t q = p + 1; q < big; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double tau = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = t * c;
        for (std::size_t k = 0; k < big; ++k) {
          const double kp = at(k, p), kq = at(k, q);
          at(k, p) = c * kp - sn * kq;
          at(k, q) = sn * kp + c * kq;
        }
        for (std::size_t k = 0; k < big; ++k) {
          const double pk = at(p, k), qk = at(q, k);
          at(p, k) = c * pk - sn * qk;
          at(q, k) = sn * pk + c * qk;
        }
      }
    }
  }

  std::vector<double> doubled(big);
  for (std::size_t i = 0; i < big; ++i) doubled[i] = at(i, i);
  std::sort(doubled.begin(), doubled.end());
  std::vector<double> eigs(n);
  for (std::size_t i = 0; i < n; ++i) eigs[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
  return eigs;
}

}  // namespace crouzeix
