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

#include "cqms/linalg.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "cqms/errors.hpp"

namespace cqms {

Complex root_of_unity(long long k, int p) {
  long long r = k % p;
  if (r < 0) r += p;
  if (r == 0) return {1.0, 0.0};
  // Quarter turns exactly.
  if (4 * r % p == 0) {
    switch (4 * r / p) {
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / p;
  return {std::cos(angle), std::sin(angle)};
}

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_residual(const ComplexMatrix& m) {
  return max_abs(m - m.adjoint());
}

void require_finite(const ComplexMatrix& m, std::string_view what) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) {
        std::ostringstream msg;
        msg << what << ": non-finite entry at (" << i << ", " << j << ")";
        throw ValidationError(msg.str());
      }
    }
  }
}

void require_square(const ComplexMatrix& m, std::string_view what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    std::ostringstream msg;
    msg << what << ": expected a non-empty square matrix, got " << m.rows()
        << "x" << m.cols();
    throw ValidationError(msg.str());
  }
}

UnitaryMatrix UnitaryMatrix::from(ComplexMatrix m, double tol) {
  require_square(m, "UnitaryMatrix");
  require_finite(m, "UnitaryMatrix");
  const ComplexMatrix id = ComplexMatrix::Identity(m.rows(), m.cols());
  const double residual = max_abs(m * m.adjoint() - id);
  if (residual > tol) {
    std::ostringstream msg;
    msg << "UnitaryMatrix: |U U^dagger - 1|_max = " << residual
        << " exceeds " << tol;
    throw ValidationError(msg.str());
  }
  return UnitaryMatrix(std::move(m));
}

DensityMatrix DensityMatrix::from(ComplexMatrix m, double tol) {
  require_square(m, "DensityMatrix");
  require_finite(m, "DensityMatrix");
  const double herm = hermiticity_residual(m);
  if (herm > kHermitianTol) {
    std::ostringstream msg;
    msg << "DensityMatrix: not Hermitian (residual " << herm << ")";
    throw ValidationError(msg.str());
  }
  const Complex trace = m.trace();
  if (std::abs(trace - 1.0) > kTraceTol) {
    std::ostringstream msg;
    msg << "DensityMatrix: trace " << trace.real() << " differs from 1";
    throw ValidationError(msg.str());
  }
  DensityMatrix out;
  out.matrix_ = (m + m.adjoint()) * 0.5;
  out.eigen_floor_ = tol;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(out.matrix_);
  if (solver.info() != Eigen::Success) {
    throw ConsistencyError("DensityMatrix: eigensolver did not converge");
  }
  out.eigenvalues_ = solver.eigenvalues();
  out.eigenvectors_ = solver.eigenvectors();
  for (Index i = 0; i < out.eigenvalues_.size(); ++i) {
    double& v = out.eigenvalues_(i);
    if (v < -tol) {
      std::ostringstream msg;
      msg << "DensityMatrix: eigenvalue " << v << " below -" << tol;
      throw ValidationError(msg.str());
    }
    if (v < 0.0) v = 0.0;
  }
  return out;
}

DensityMatrix DensityMatrix::maximally_mixed(Index dim) {
  return from(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

ComplexMatrix DensityMatrix::sqrt() const {
  const RealVector roots = eigenvalues_.cwiseSqrt();
  return eigenvectors_ * roots.cast<Complex>().asDiagonal() *
         eigenvectors_.adjoint();
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b,
                             Index max_dim) {
  const Index rows = a.rows() * b.rows();
  const Index cols = a.cols() * b.cols();
  if (rows > max_dim || cols > max_dim) {
    std::ostringstream msg;
    msg << "tensor_product: result " << rows << "x" << cols
        << " exceeds the dimension guard " << max_dim;
    throw ValidationError(msg.str());
  }
  ComplexMatrix out(rows, cols);
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

UnitaryMatrix dft_matrix(int p) {
  if (p < 1) throw ValidationError("dft_matrix: p must be positive");
  const double scale = 1.0 / std::sqrt(static_cast<double>(p));
  ComplexMatrix f(p, p);
  for (int k = 0; k < p; ++k) {
    for (int j = 0; j < p; ++j) {
      f(k, j) = root_of_unity(static_cast<long long>(k) * j, p) * scale;
    }
  }
  return UnitaryMatrix::from(std::move(f), 1e-12);
}

ComplexMatrix matrix_exponential_oracle(const ComplexMatrix& a, double t) {
  require_square(a, "matrix_exponential_oracle");
  require_finite(a, "matrix_exponential_oracle");
  const Index n = a.rows();
  ComplexMatrix scaled = a * t;

  // Scale until the 1-norm is at most 1/2; the Taylor tail is then far
  // below machine precision after ~20 terms.
  const double norm = scaled.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    scaled /= std::ldexp(1.0, squarings);
  }

  ComplexMatrix sum = ComplexMatrix::Identity(n, n);
  ComplexMatrix term = ComplexMatrix::Identity(n, n);
  for (int k = 1; k <= 40; ++k) {
    term = (term * scaled) / static_cast<double>(k);
    sum += term;
    if (max_abs(term) <= 1e-18 * max_abs(sum)) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

HermitianEigen eigen_hermitian(const ComplexMatrix& a, double tol) {
  require_square(a, "eigen_hermitian");
  require_finite(a, "eigen_hermitian");
  const double herm = hermiticity_residual(a);
  if (herm > tol) {
    std::ostringstream msg;
    msg << "eigen_hermitian: input not Hermitian (residual " << herm << ")";
    throw ValidationError(msg.str());
  }
  const ComplexMatrix sym = (a + a.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw ConsistencyError("eigen_hermitian: eigensolver did not converge");
  }
  return HermitianEigen{solver.eigenvalues(),
                        UnitaryMatrix::from(solver.eigenvectors())};
}

double relative_entropy(const DensityMatrix& eta, const DensityMatrix& rho) {
  if (eta.dim() != rho.dim()) {
    std::ostringstream msg;
    msg << "relative_entropy: dimension mismatch " << eta.dim() << " vs "
        << rho.dim();
    throw ValidationError(msg.str());
  }
  const RealVector& lambda = eta.eigenvalues();
  const RealVector& mu = rho.eigenvalues();
  // overlap(i, j) = |<v_i, w_j>|^2
  const Eigen::MatrixXd overlap =
      (eta.eigenvectors().adjoint() * rho.eigenvectors()).cwiseAbs2();

  double entropy = 0.0;
  double cross = 0.0;
  double outside_support = 0.0;
  for (Index i = 0; i < lambda.size(); ++i) {
    if (lambda(i) < kLogClip) continue;
    entropy += lambda(i) * std::log(lambda(i));
    for (Index j = 0; j < mu.size(); ++j) {
      const double weight = lambda(i) * overlap(i, j);
      if (mu(j) < kLogClip) {
        outside_support += weight;
      } else {
        cross += weight * std::log(mu(j));
      }
    }
  }
  if (outside_support > 1e-10) return std::numeric_limits<double>::infinity();
  const double s = entropy - cross;
  return s < 0.0 && s > -1e-12 ? 0.0 : s;
}

}  // namespace cqms
