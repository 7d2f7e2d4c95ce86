// Copyright 2026 The cqms Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Dense complex linear algebra used throughout the library. Dimensions here
// are small (a few hundred at most), so everything is dense and eager.

#include <complex>
#include <string_view>

#include <Eigen/Dense>

namespace cqms {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Largest row or column count any operation here will build.
inline constexpr Index kMaxDimension = 1024;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-10;
/// Eigenvalues in (-kNegativeEigenTol, 0) are clipped to zero; anything
/// more negative fails validation.
inline constexpr double kNegativeEigenTol = 1e-10;
/// Eigenvalues below this are exact zeros as far as logarithms go.
inline constexpr double kLogClip = 1e-12;

/// exp(2 pi i k / p), with k reduced mod p first so that k = 0 mod p is exact.
Complex root_of_unity(long long k, int p);

double max_abs(const ComplexMatrix& m);
double hermiticity_residual(const ComplexMatrix& m);
void require_finite(const ComplexMatrix& m, std::string_view what);
void require_square(const ComplexMatrix& m, std::string_view what);

/// A square matrix with U U^dagger = 1 within kUnitaryTol.
class UnitaryMatrix {
 public:
  static UnitaryMatrix from(ComplexMatrix m, double tol = kUnitaryTol);

  const ComplexMatrix& matrix() const { return matrix_; }
  Index dim() const { return matrix_.rows(); }

 private:
  explicit UnitaryMatrix(ComplexMatrix m) : matrix_(std::move(m)) {}
  ComplexMatrix matrix_;
};

/// Hermitian, positive semidefinite, trace one. The eigendecomposition is
/// computed once at validation; eigenvalues are stored clipped at zero.
class DensityMatrix {
 public:
  static DensityMatrix from(ComplexMatrix m, double tol = kNegativeEigenTol);
  static DensityMatrix maximally_mixed(Index dim);

  const ComplexMatrix& matrix() const { return matrix_; }
  Index dim() const { return matrix_.rows(); }
  double eigen_floor() const { return eigen_floor_; }
  const RealVector& eigenvalues() const { return eigenvalues_; }
  const ComplexMatrix& eigenvectors() const { return eigenvectors_; }

  /// Positive square root built from the clipped spectrum.
  ComplexMatrix sqrt() const;

 private:
  DensityMatrix() = default;
  ComplexMatrix matrix_;
  RealVector eigenvalues_;
  ComplexMatrix eigenvectors_;
  double eigen_floor_ = kNegativeEigenTol;
};

struct HermitianEigen {
  RealVector values;  // ascending
  UnitaryMatrix vectors;
};

/// Kronecker product, index (i, j) -> i * b.rows() + j.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b,
                             Index max_dim = kMaxDimension);

/// F(k, j) = omega^{kj} / sqrt(p) with omega = exp(2 pi i / p).
UnitaryMatrix dft_matrix(int p);

/// Reference exp(t A) by Taylor series with scaling and squaring. Knows
/// nothing about circulant structure; the closed forms are tested against it.
ComplexMatrix matrix_exponential_oracle(const ComplexMatrix& a, double t);

HermitianEigen eigen_hermitian(const ComplexMatrix& a,
                               double tol = kHermitianTol);

/// S(eta, rho) = tr(eta log eta - eta log rho) in nats. Returns +infinity
/// when eta has weight outside the support of rho.
double relative_entropy(const DensityMatrix& eta, const DensityMatrix& rho);

}  // namespace cqms
