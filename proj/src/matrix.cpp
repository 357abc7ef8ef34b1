#include "wvqkd/matrix.hpp"

#include <cmath>
#include <iostream>

#include "wvqkd/qmath.hpp"

namespace wvqkd {

namespace detail {
std::atomic<std::uint64_t>& warning_counter() {
  static std::atomic<std::uint64_t> counter{0};
  return counter;
}
}  // namespace detail

void warn(const std::string& message) {
  detail::warning_counter().fetch_add(1, std::memory_order_relaxed);
  std::cerr << "[wvqkd] warning: " << message << "\n";
}

std::uint64_t warning_count() {
  return detail::warning_counter().load(std::memory_order_relaxed);
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw DimensionError("entry count does not match rows*cols");
  }
  if (!all_finite()) {
    throw InvalidStateError("non-finite matrix entry");
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw DimensionError("ragged initializer for ComplexMatrix");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
  if (!all_finite()) {
    throw InvalidStateError("non-finite matrix entry");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw DimensionError("shape mismatch in matrix addition");
  }
  ComplexMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + other.data_[i];
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw DimensionError("shape mismatch in matrix subtraction");
  }
  ComplexMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - other.data_[i];
  return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& other) const {
  if (cols_ != other.rows_) {
    throw DimensionError("shape mismatch in matrix product");
  }
  ComplexMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Complex aik = (*this)(i, k);
      if (aik == Complex{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        out(i, j) += aik * other(k, j);
      }
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator*(Complex scalar) const {
  ComplexMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * scalar;
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      out(j, i) = std::conj((*this)(i, j));
    }
  }
  return out;
}

Complex ComplexMatrix::trace() const {
  if (!is_square()) {
    throw DimensionError("trace of a non-square matrix");
  }
  Complex t{0.0, 0.0};
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix ComplexMatrix::tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{0.0, 0.0}) continue;
      for (std::size_t k = 0; k < b.rows_; ++k) {
        for (std::size_t l = 0; l < b.cols_; ++l) {
          out(i * b.rows_ + k, j * b.cols_ + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::partial_trace(const std::vector<std::size_t>& dims,
                                           std::size_t traced) const {
  if (!is_square()) {
    throw DimensionError("partial trace of a non-square matrix");
  }
  std::size_t product = 1;
  for (std::size_t d : dims) product *= d;
  if (product != rows_ || traced >= dims.size()) {
    throw DimensionError("subsystem dimensions do not factor the matrix");
  }

  // Row index decomposes as i = (pre * dims[traced] + t) * post + suf, where
  // pre runs over factors left of the traced one and suf over those right.
  std::size_t post = 1;
  for (std::size_t f = traced + 1; f < dims.size(); ++f) post *= dims[f];
  const std::size_t dt = dims[traced];
  const std::size_t pre = rows_ / (dt * post);
  const std::size_t kept = pre * post;

  ComplexMatrix out(kept, kept);
  for (std::size_t rp = 0; rp < pre; ++rp) {
    for (std::size_t rs = 0; rs < post; ++rs) {
      for (std::size_t cp = 0; cp < pre; ++cp) {
        for (std::size_t cs = 0; cs < post; ++cs) {
          Complex acc{0.0, 0.0};
          for (std::size_t t = 0; t < dt; ++t) {
            const std::size_t r = (rp * dt + t) * post + rs;
            const std::size_t c = (cp * dt + t) * post + cs;
            acc += (*this)(r, c);
          }
          out(rp * post + rs, cp * post + cs) = acc;
        }
      }
    }
  }
  return out;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw DimensionError("shape mismatch in max_abs_diff");
  }
  double m = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    m = std::max(m, std::abs(data_[i] - other.data_[i]));
  }
  return m;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& v : data_) m = std::max(m, std::abs(v));
  return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i; j < cols_; ++j) {
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    }
  }
  return true;
}

bool ComplexMatrix::all_finite() const {
  for (const Complex& v : data_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

StateVector::StateVector(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {
  double n2 = 0.0;
  for (const Complex& a : amps_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw InvalidStateError("non-finite state amplitude");
    }
    n2 += std::norm(a);
  }
  if (std::abs(std::sqrt(n2) - 1.0) > 1e-10) {
    throw InvalidStateError("state vector is not unit norm");
  }
}

StateVector StateVector::normalized(std::vector<Complex> amplitudes) {
  double n2 = 0.0;
  for (const Complex& a : amplitudes) n2 += std::norm(a);
  const double n = std::sqrt(n2);
  if (!(n > 1e-150)) {
    throw InvalidStateError("cannot normalize a numerically zero vector");
  }
  for (Complex& a : amplitudes) a /= n;
  return StateVector(std::move(amplitudes));
}

Complex StateVector::inner(const StateVector& other) const {
  if (dim() != other.dim()) {
    throw DimensionError("dimension mismatch in inner product");
  }
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    acc += std::conj(amps_[i]) * other.amps_[i];
  }
  return acc;
}

ComplexMatrix StateVector::projector() const {
  ComplexMatrix out(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) {
      out(i, j) = amps_[i] * std::conj(amps_[j]);
    }
  }
  return out;
}

ComplexMatrix StateVector::as_column() const {
  ComplexMatrix out(dim(), 1);
  for (std::size_t i = 0; i < dim(); ++i) out(i, 0) = amps_[i];
  return out;
}

StateVector StateVector::tensor(const StateVector& a, const StateVector& b) {
  std::vector<Complex> amps(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) {
      amps[i * b.dim() + j] = a[i] * b[j];
    }
  }
  return StateVector(std::move(amps));
}

double StateVector::norm() const {
  double n2 = 0.0;
  for (const Complex& a : amps_) n2 += std::norm(a);
  return std::sqrt(n2);
}

DensityMatrix::DensityMatrix(ComplexMatrix m, double psd_floor) : matrix_(std::move(m)) {
  if (!matrix_.is_square()) {
    throw InvalidStateError("density matrix must be square");
  }
  if (!matrix_.all_finite()) {
    throw InvalidStateError("non-finite density matrix entry");
  }
  if (!matrix_.is_hermitian(1e-10)) {
    throw InvalidStateError("density matrix is not Hermitian within 1e-10");
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - Complex{1.0, 0.0}) > 1e-10) {
    throw InvalidStateError("density matrix trace differs from 1 beyond 1e-10");
  }
  eigenvalues_ = hermitian_eigenvalues(matrix_);
  if (eigenvalues_.back() < -psd_floor) {
    throw InvalidStateError("density matrix has eigenvalue below -" +
                            std::to_string(psd_floor));
  }
}

}  // namespace wvqkd
