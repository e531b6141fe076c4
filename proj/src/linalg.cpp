#include "symlap/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "symlap/error.hpp"

namespace symlap {

namespace {

void require_dim(int dim, const char* what) {
  if (dim < 0) throw DimensionError(std::string(what) + ": negative dimension");
}

}  // namespace

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  require_dim(rows, "Matrix");
  require_dim(cols, "Matrix");
  data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0.0);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

SymMatrix::SymMatrix(int dim) : dim_(dim) {
  require_dim(dim, "SymMatrix");
  data_.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), 0.0);
}

SymMatrix SymMatrix::identity(int dim) {
  SymMatrix id(dim);
  for (int i = 0; i < dim; ++i) id.set(i, i, 1.0);
  return id;
}

SymMatrix SymMatrix::from_matrix(const Matrix& a, double tol) {
  if (a.rows() != a.cols())
    throw DimensionError("from_matrix: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " is not square");
  SymMatrix s(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = i; j < a.cols(); ++j) {
      if (std::abs(a(i, j) - a(j, i)) > tol)
        throw DimensionError("from_matrix: entry (" + std::to_string(i) + "," + std::to_string(j) +
                             ") breaks symmetry");
      s.set(i, j, a(i, j));
    }
  }
  return s;
}

void SymMatrix::set(int i, int j, double value) {
  data_[index(i, j)] = value;
  data_[index(j, i)] = value;
}

void SymMatrix::add(int i, int j, double value) {
  data_[index(i, j)] += value;
  if (i != j) data_[index(j, i)] += value;
}

double SymMatrix::trace() const noexcept {
  double t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double SymMatrix::frobenius_norm() const noexcept {
  double s = 0.0;
  for (double x : data_) s += x * x;
  return std::sqrt(s);
}

Matrix SymMatrix::to_matrix() const {
  Matrix m(dim_, dim_);
  std::copy(data_.begin(), data_.end(), m.data().begin());
  return m;
}

SymMatrix SymMatrix::scaled(double factor) const {
  SymMatrix out = *this;
  for (double& x : out.data_) x *= factor;
  return out;
}

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b) {
  if (a.dim_ != b.dim_) throw DimensionError("SymMatrix +: dimension mismatch");
  SymMatrix out = a;
  std::transform(out.data_.begin(), out.data_.end(), b.data_.begin(), out.data_.begin(), std::plus<>());
  return out;
}

SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) {
  if (a.dim_ != b.dim_) throw DimensionError("SymMatrix -: dimension mismatch");
  SymMatrix out = a;
  std::transform(out.data_.begin(), out.data_.end(), b.data_.begin(), out.data_.begin(), std::minus<>());
  return out;
}

double Spectrum::sum() const noexcept {
  double s = 0.0;
  for (double v : values) s += v;
  return s;
}

Spectrum jacobi_eigen(const SymMatrix& a, double tol, int max_sweeps) {
  if (!(tol > 0.0)) throw RangeError("jacobi_eigen: tol must be positive");
  const int n = a.dim();
  Matrix w = a.to_matrix();
  const double scale = a.frobenius_norm();

  auto off_norm = [&] {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) s += 2.0 * w(p, q) * w(p, q);
    return std::sqrt(s);
  };

  double off = off_norm();
  int sweeps = 0;
  while (off > tol * scale) {
    if (sweeps == max_sweeps) throw ConvergenceError(sweeps, off);
    ++sweeps;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = w(p, q);
        if (apq == 0.0) continue;
        // Rotation angle from the stable tan formula (Golub & Van Loan 8.5.2).
        const double theta = (w(q, q) - w(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double wkp = w(k, p);
          const double wkq = w(k, q);
          w(k, p) = c * wkp - s * wkq;
          w(k, q) = s * wkp + c * wkq;
        }
        for (int k = 0; k < n; ++k) {
          const double wpk = w(p, k);
          const double wqk = w(q, k);
          w(p, k) = c * wpk - s * wqk;
          w(q, k) = s * wpk + c * wqk;
        }
        w(p, q) = 0.0;
        w(q, p) = 0.0;
      }
    }
    off = off_norm();
  }

  Spectrum out;
  out.values.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.values[static_cast<std::size_t>(i)] = w(i, i);
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

Spectrum clamp_psd(Spectrum s, double eps) {
  for (double& v : s.values) {
    if (v < -eps) throw SpectrumError("eigenvalue " + std::to_string(v) + " is below -" + std::to_string(eps));
    if (v < 0.0) v = 0.0;
  }
  return s;
}

std::vector<double> nonzero_values(const Spectrum& s, double threshold) {
  std::vector<double> out;
  for (double v : s.values)
    if (std::abs(v) >= threshold) out.push_back(v);
  return out;
}

double multiset_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) return INFINITY;
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

SymMatrix partial_trace(const SymMatrix& rho, int d1, int d2, Keep keep) {
  if (d1 < 1 || d2 < 1 || rho.dim() != d1 * d2)
    throw DimensionError("partial_trace: operator of dimension " + std::to_string(rho.dim()) +
                         " does not factor as " + std::to_string(d1) + "x" + std::to_string(d2));
  if (keep == Keep::first) {
    SymMatrix out(d1);
    for (int i = 0; i < d1; ++i)
      for (int j = i; j < d1; ++j) {
        double s = 0.0;
        for (int k = 0; k < d2; ++k) s += rho(i * d2 + k, j * d2 + k);
        out.set(i, j, s);
      }
    return out;
  }
  SymMatrix out(d2);
  for (int k = 0; k < d2; ++k)
    for (int l = k; l < d2; ++l) {
      double s = 0.0;
      for (int i = 0; i < d1; ++i) s += rho(i * d2 + k, i * d2 + l);
      out.set(k, l, s);
    }
  return out;
}

SymMatrix partial_trace_pure(std::span<const double> psi, int d1, int d2, Keep keep) {
  if (d1 < 1 || d2 < 1 || psi.size() != static_cast<std::size_t>(d1) * static_cast<std::size_t>(d2))
    throw DimensionError("partial_trace_pure: vector of length " + std::to_string(psi.size()) +
                         " does not factor as " + std::to_string(d1) + "x" + std::to_string(d2));
  auto at = [&](int i, int k) { return psi[static_cast<std::size_t>(i) * d2 + k]; };
  if (keep == Keep::first) {
    SymMatrix out(d1);
    for (int i = 0; i < d1; ++i)
      for (int j = i; j < d1; ++j) {
        double s = 0.0;
        for (int k = 0; k < d2; ++k) s += at(i, k) * at(j, k);
        out.set(i, j, s);
      }
    return out;
  }
  SymMatrix out(d2);
  for (int i = 0; i < d1; ++i) {
    for (int k = 0; k < d2; ++k) {
      const double a = at(i, k);
      if (a == 0.0) continue;
      for (int l = k; l < d2; ++l) out.add(k, l, a * at(i, l));
    }
  }
  return out;
}

std::vector<double> kron(std::span<const double> a, std::span<const double> b) {
  std::vector<double> out;
  out.reserve(a.size() * b.size());
  for (double x : a)
    for (double y : b) out.push_back(x * y);
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

SymMatrix kron(const SymMatrix& a, const SymMatrix& b) {
  return SymMatrix::from_matrix(kron(a.to_matrix(), b.to_matrix()));
}

Matrix outer(std::span<const double> u, std::span<const double> v) {
  Matrix out(static_cast<int>(u.size()), static_cast<int>(v.size()));
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out(static_cast<int>(i), static_cast<int>(j)) = u[i] * v[j];
  return out;
}

SymMatrix outer(std::span<const double> v) {
  SymMatrix out(static_cast<int>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i; j < v.size(); ++j) out.set(static_cast<int>(i), static_cast<int>(j), v[i] * v[j]);
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw DimensionError("multiply: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                         std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  Matrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

SymMatrix gram_rows(const Matrix& a) {
  SymMatrix out(a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = i; j < a.rows(); ++j) {
      double s = 0.0;
      for (int k = 0; k < a.cols(); ++k) s += a(i, k) * a(j, k);
      out.set(i, j, s);
    }
  return out;
}

double max_abs_diff(const SymMatrix& a, const SymMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("max_abs_diff: dimension mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) d = std::max(d, std::abs(a.data()[i] - b.data()[i]));
  return d;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("max_abs_diff: shape mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) d = std::max(d, std::abs(a.data()[i] - b.data()[i]));
  return d;
}

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace symlap
