#pragma once

#include <array>
#include <vector>

#include "wvqkd/matrix.hpp"

namespace wvqkd {

/// Eigenvalues of a Hermitian matrix, sorted descending. Cyclic complex
/// Jacobi; converges when max |off-diagonal| < 1e-12 or errors after 100
/// sweeps (never expected at these dimensions).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

struct EigenSystem {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // column k is the eigenvector of values[k]
};

/// Full eigendecomposition of a Hermitian matrix (same Jacobi iteration,
/// with the rotations accumulated).
EigenSystem hermitian_eigensystem(const ComplexMatrix& m);

/// Von Neumann entropy in bits: S = -sum lambda_i log2 lambda_i.
/// Eigenvalues in [-clip_floor, 0) are clipped to zero; anything below
/// -clip_floor raises InvalidStateError. 0 log 0 := 0.
double von_neumann_entropy(const DensityMatrix& rho, double clip_floor = 1e-10);

/// Joint distribution of two bits. p[a][b] = P(A=a, B=b).
struct JointTable {
  std::array<std::array<double, 2>, 2> p{};

  double& operator()(int a, int b) { return p[a][b]; }
  double operator()(int a, int b) const { return p[a][b]; }

  double sum() const { return p[0][0] + p[0][1] + p[1][0] + p[1][1]; }
  double qber() const { return p[0][1] + p[1][0]; }
  double marginal_a(int a) const { return p[a][0] + p[a][1]; }
  double marginal_b(int b) const { return p[0][b] + p[1][b]; }

  /// Nonnegative entries summing to 1 within 1e-10, else
  /// InvalidDistributionError.
  void validate() const;
};

/// I(A:B) in bits for a two-bit joint distribution; zero-probability cells
/// contribute nothing. Validates the table first.
double mutual_information(const JointTable& joint);

/// h(p) = -p log2 p - (1-p) log2 (1-p), with h(0) = h(1) = 0.
double binary_entropy(double p);

}  // namespace wvqkd
