#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "wvqkd/errors.hpp"

namespace wvqkd {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Everything in this project is tiny
/// (dimension <= 16), so no attempt is made at blocking or sparsity.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  ComplexMatrix operator+(const ComplexMatrix& other) const;
  ComplexMatrix operator-(const ComplexMatrix& other) const;
  ComplexMatrix operator*(const ComplexMatrix& other) const;
  ComplexMatrix operator*(Complex scalar) const;
  friend ComplexMatrix operator*(Complex scalar, const ComplexMatrix& m) {
    return m * scalar;
  }

  ComplexMatrix adjoint() const;
  Complex trace() const;

  /// Kronecker product a (x) b.
  static ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

  /// Partial trace of a square matrix over one tensor factor. `dims` declares
  /// the subsystem dimensions (their product must equal the matrix dimension)
  /// and `traced` names the factor to trace out.
  ComplexMatrix partial_trace(const std::vector<std::size_t>& dims,
                              std::size_t traced) const;

  /// max_ij |a_ij - b_ij|
  double max_abs_diff(const ComplexMatrix& other) const;
  double max_abs() const;

  bool is_square() const { return rows_ == cols_; }
  bool is_hermitian(double tol) const;
  bool all_finite() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Unit-norm complex vector (norm enforced to 1e-10 at construction).
class StateVector {
 public:
  explicit StateVector(std::vector<Complex> amplitudes);

  /// Rescales to unit norm; errors if the norm is numerically zero.
  static StateVector normalized(std::vector<Complex> amplitudes);

  std::size_t dim() const { return amps_.size(); }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }

  /// <this|other>
  Complex inner(const StateVector& other) const;
  /// |this><this|
  ComplexMatrix projector() const;
  ComplexMatrix as_column() const;

  static StateVector tensor(const StateVector& a, const StateVector& b);

  double norm() const;

 private:
  std::vector<Complex> amps_;
};

/// Hermitian, unit-trace, positive-semidefinite matrix. The three checks run
/// at construction; eigenvalues found during the PSD check are cached since
/// entropy computations need them again.
///
/// `psd_floor` is the admissible negative-eigenvalue slack. The default
/// 1e-10 suits physical states; the WMA pipeline constructs deliberately
/// unphysical matrices and passes a wider floor.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m, double psd_floor = 1e-10);

  std::size_t dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }

  /// Eigenvalues sorted descending, cached from the construction check.
  const std::vector<double>& eigenvalues() const { return eigenvalues_; }
  double min_eigenvalue() const { return eigenvalues_.back(); }

  const Complex& operator()(std::size_t r, std::size_t c) const {
    return matrix_(r, c);
  }

 private:
  ComplexMatrix matrix_;
  std::vector<double> eigenvalues_;
};

}  // namespace wvqkd
