#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace symlap {

/// Dense row-major real matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  double& operator()(int i, int j) { return data_[index(i, j)]; }
  double operator()(int i, int j) const { return data_[index(i, j)]; }

  std::span<const double> data() const noexcept { return data_; }
  std::span<double> data() noexcept { return data_; }

  Matrix transpose() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

/// Dense real symmetric matrix. Both halves are stored and every mutator
/// writes both, so entries(i, j) == entries(j, i) holds bit for bit.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int dim);

  static SymMatrix identity(int dim);
  /// Throws DimensionError unless `a` is square and symmetric within `tol`
  /// (absolute). The upper triangle is mirrored into the lower one.
  static SymMatrix from_matrix(const Matrix& a, double tol = 0.0);

  int dim() const noexcept { return dim_; }
  double operator()(int i, int j) const { return data_[index(i, j)]; }
  void set(int i, int j, double value);
  void add(int i, int j, double value);

  double trace() const noexcept;
  double frobenius_norm() const noexcept;
  std::span<const double> data() const noexcept { return data_; }
  Matrix to_matrix() const;

  SymMatrix scaled(double factor) const;
  friend SymMatrix operator+(const SymMatrix& a, const SymMatrix& b);
  friend SymMatrix operator-(const SymMatrix& a, const SymMatrix& b);

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(j);
  }

  int dim_ = 0;
  std::vector<double> data_;
};

/// Eigenvalues sorted non-increasing.
struct Spectrum {
  std::vector<double> values;

  double sum() const noexcept;
  std::size_t size() const noexcept { return values.size(); }
};

inline constexpr double kDefaultEigenTol = 1e-12;
inline constexpr int kDefaultSweepCap = 100;
/// Negative eigenvalues down to -kEigClamp are rounding noise and clamp to 0.
inline constexpr double kEigClamp = 1e-10;

/// Cyclic Jacobi eigenvalue iteration. Sweeps visit the upper triangle
/// row-major and stop once the off-diagonal Frobenius norm is at most
/// tol * ||a||_F. Throws ConvergenceError after `max_sweeps`.
Spectrum jacobi_eigen(const SymMatrix& a, double tol = kDefaultEigenTol,
                      int max_sweeps = kDefaultSweepCap);

/// Clamp values in [-eps, 0) to zero; anything below -eps throws SpectrumError.
Spectrum clamp_psd(Spectrum s, double eps = kEigClamp);

/// Eigenvalues with |value| >= threshold, order preserved.
std::vector<double> nonzero_values(const Spectrum& s, double threshold);

/// Largest absolute difference between two equal-length sorted multisets.
double multiset_distance(std::span<const double> a, std::span<const double> b);

enum class Keep { first, second };

/// Partial trace of a (d1*d2)-dimensional operator. Composite index is
/// first * d2 + second. Keep::first traces out the second factor.
SymMatrix partial_trace(const SymMatrix& rho, int d1, int d2, Keep keep);

/// Same contraction applied to the rank-1 operator psi psi^T without
/// forming it.
SymMatrix partial_trace_pure(std::span<const double> psi, int d1, int d2, Keep keep);

std::vector<double> kron(std::span<const double> a, std::span<const double> b);
Matrix kron(const Matrix& a, const Matrix& b);
SymMatrix kron(const SymMatrix& a, const SymMatrix& b);

/// u v^T
Matrix outer(std::span<const double> u, std::span<const double> v);
/// v v^T
SymMatrix outer(std::span<const double> v);

Matrix multiply(const Matrix& a, const Matrix& b);
/// a a^T, symmetric by construction.
SymMatrix gram_rows(const Matrix& a);

double max_abs_diff(const SymMatrix& a, const SymMatrix& b);
double max_abs_diff(const Matrix& a, const Matrix& b);
double norm2(std::span<const double> v);

}  // namespace symlap
