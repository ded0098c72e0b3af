#pragma once

// Small dense linear algebra used across the library: complex matrices of
// size <= 8 (norms, inverses, Hermitian spectra) and one large real symmetric
// solve for the collocation system.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <span>
#include <vector>

namespace crouzeix {

using Complex = std::complex<double>;

// Row-major dense complex matrix. Constructors reject NaN/Inf.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols);
  CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static CMatrix identity(std::size_t n);
  static CMatrix zeros(std::size_t rows, std::size_t cols) { return CMatrix(rows, cols); }
  static CMatrix diagonal(std::span<const Complex> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Complex> entries() const noexcept { return data_; }

  CMatrix adjoint() const;
  CMatrix transpose() const;
  double max_abs() const noexcept;
  bool is_strictly_upper_triangular(double tol = 0.0) const noexcept;
  bool is_upper_triangular(double tol = 0.0) const noexcept;

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(Complex scale) noexcept;

  friend CMatrix operator+(CMatrix lhs, const CMatrix& rhs) { return lhs += rhs; }
  friend CMatrix operator-(CMatrix lhs, const CMatrix& rhs) { return lhs -= rhs; }
  friend CMatrix operator*(CMatrix m, Complex s) { return m *= s; }
  friend CMatrix operator*(Complex s, CMatrix m) { return m *= s; }
  friend CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

// max |a_ij - b_ij|; shapes must agree.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

// Nilpotent Jordan block: ones on the superdiagonal.
CMatrix jordan_block(std::size_t n);

// Real symmetric linear system. The matrix is stored dense row-major; writes
// through set_symmetric() keep it exactly symmetric.
class RSystem {
 public:
  explicit RSystem(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  double operator()(std::size_t i, std::size_t j) const { return matrix_[i * dim_ + j]; }
  void set_symmetric(std::size_t i, std::size_t j, double value) {
    matrix_[i * dim_ + j] = value;
    matrix_[j * dim_ + i] = value;
  }
  std::span<double> row(std::size_t i) { return {matrix_.data() + i * dim_, dim_}; }
  std::span<const double> matrix() const noexcept { return matrix_; }
  std::span<double> matrix() noexcept { return matrix_; }
  std::vector<double>& rhs() noexcept { return rhs_; }
  const std::vector<double>& rhs() const noexcept { return rhs_; }

  bool is_symmetric() const noexcept;
  double norm_inf() const noexcept;

 private:
  std::size_t dim_;
  std::vector<double> matrix_;
  std::vector<double> rhs_;
};

inline constexpr double kPivotFloor = 1e-300;
inline constexpr double kIllConditioned = 1e12;

// LU factorization with partial pivoting of an RSystem matrix. Construction
// never throws on a singular matrix; solve() does.
class SymFactorization {
 public:
  explicit SymFactorization(const RSystem& sys);
  ~SymFactorization();
  SymFactorization(SymFactorization&&) noexcept;
  SymFactorization& operator=(SymFactorization&&) noexcept;

  bool singular() const noexcept;
  // 1-norm condition estimate (Hager/Higham); +inf when singular.
  double cond_estimate() const;
  std::vector<double> solve(std::span<const double> rhs) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct SymSolution {
  std::vector<double> x;
  double cond_estimate = 1.0;
  bool ill_conditioned = false;  // cond_estimate > kIllConditioned
};

// Solves sys.matrix * x = sys.rhs. Throws SingularSystem if a pivot falls
// below kPivotFloor.
SymSolution solve_sym(const RSystem& sys);

// max_i |(A x - b)_i| / (||A||_inf ||x||_inf + ||b||_inf)
double relative_residual(const RSystem& sys, std::span<const double> x);

struct NormOptions {
  double tolerance = 1e-14;       // on the Rayleigh quotient, relative
  int max_iterations = 10000;
  bool eigen_fallback = true;     // Jacobi on m*m if both starts stall
};

// Largest singular value by power iteration on m*m, all-ones start.
double spectral_norm(const CMatrix& m, const NormOptions& options = {});

// Gauss-Jordan with partial pivoting. Throws SingularMatrix.
CMatrix inverse(const CMatrix& m);

// ||m|| * ||m^-1|| in the spectral norm.
double cond2(const CMatrix& m);

// Eigenvalues (ascending) of a Hermitian matrix by cyclic Jacobi on the real
// 2n x 2n embedding [[Re, -Im], [Im, Re]].
std::vector<double> hermitian_eigs(const CMatrix& m);

}  // namespace crouzeix
