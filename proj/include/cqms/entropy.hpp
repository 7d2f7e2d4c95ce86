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

// Choi states of a circulant semigroup and its rho-adjoint, and the entropy
// production rate e_p = d/dt S(Omega_t, ~Omega_t) at t = 0.
//
// With Omega_rho = sum_x e_x (x) rho^{1/2} e_x and D_m e_a = e_{a+m}, the
// pre-dual semigroup is T_t(x) = (1/N) sum_m Phi_m(t) D_m x D_m*, so
//
//   Omega_t  = (1/N) sum_m Phi_m(t)  |u_m><u_m|,   u_m = (1 (x) D_m) Omega_rho,
//   ~Omega_t = (1/N) sum_m Phi_-m(t) |u_m><u_m|.
//
// The u_m are orthonormal when rho is the uniform state; for other invariant
// states the sums are still exact but are no longer eigendecompositions.

#include <string>
#include <utility>
#include <vector>

#include "cqms/circulant.hpp"
#include "cqms/linalg.hpp"
#include "cqms/qms.hpp"

namespace cqms {

/// sum_x e_x (x) rho^{1/2} e_x, index (x, y) -> x * N + y.
ComplexVector omega_vector(const DensityMatrix& rho);

/// T_t applied to an arbitrary matrix through exp_generator acting on each
/// subspace B_k.
ComplexMatrix evolve_predual(const CirculantGenerator& g, double t,
                             const ComplexMatrix& x);

struct ChoiState {
  DensityMatrix state;
  std::vector<ComplexVector> vectors;  // u_m
  std::vector<double> weights;         // Phi_m(t) / N (or Phi_-m(t) / N)
  /// max |<u_m, u_m'> - delta|; zero means weights are the eigenvalues.
  double gram_residual = 0.0;
  /// max entry difference between the spectral sum and the direct
  /// (1 (x) T_t)(|Omega><Omega|) construction.
  double direct_residual = 0.0;
};

/// Throws ValidationError if rho is not stationary (residual above 1e-8) or
/// the doubled space exceeds the dimension guard, ConsistencyError if the
/// two constructions disagree by more than 1e-9.
ChoiState forward_choi(const CirculantGenerator& g, const DensityMatrix& rho,
                       double t);
/// Also compared against forward_choi(rho_adjoint(g)) to 1e-10.
ChoiState backward_choi(const CirculantGenerator& g, const DensityMatrix& rho,
                        double t);

/// (alpha(g) - alpha(-g)) log(alpha(g) / alpha(-g)) for each g, with 0 for
/// g = 0 and for 0/0, +inf for a one-sided zero.
std::vector<double> qepr_terms(const CirculantGenerator& g);
/// Half the sum of qepr_terms.
double qepr_closed_form(const CirculantGenerator& g);

/// S(Omega_t, ~Omega_t). Uses the diagonal formula when the u_m are
/// orthonormal and the dense relative entropy otherwise.
double choi_relative_entropy(const CirculantGenerator& g,
                             const DensityMatrix& rho, double t);

inline const std::vector<double> kDefaultTGrid = {1e-2, 3e-3, 1e-3, 3e-4,
                                                  1e-4};

struct NumericalQepr {
  double value = 0.0;  // Richardson extrapolation of the last two points
  std::vector<double> t;
  std::vector<double> quotients;  // S(t) / t
  bool diverged = false;          // closed form infinite
};

/// grid must be strictly decreasing and positive.
NumericalQepr qepr_numerical(const CirculantGenerator& g,
                             const DensityMatrix& rho,
                             const std::vector<double>& grid = kDefaultTGrid);

/// Qian's formula for the diagonal restriction with the uniform measure.
double classical_epr(const CirculantGenerator& g);

struct SeparabilityReport {
  std::vector<double> alpha_p;  // row marginal
  std::vector<double> alpha_q;  // column marginal
  /// max |Omega_t - Omega_p(t) (x) Omega_q(t)| after reordering.
  double product_residual = 0.0;
  /// max |Omega_t - sum_mn (Phi_mn/pq) P_p(m) (x) P_q(n)| after reordering,
  /// P_s(m) = |u_s(m)><u_s(m)|.
  double mixture_residual = 0.0;

  bool product_holds(double tol = 1e-9) const {
    return product_residual <= tol;
  }
  bool mixture_holds(double tol = 1e-9) const {
    return mixture_residual <= tol;
  }
};

/// For alpha(i, j) = alpha_p(i) alpha_q(j) on Z_p x Z_q, uniform state.
/// Throws ValidationError when the table is not rank one to 1e-10.
SeparabilityReport separability_check(const CirculantGenerator& g, double t);

/// (t, S(Omega_t, ~Omega_t)) for ascending non-negative t.
std::vector<std::pair<double, double>> entropy_curve(
    const CirculantGenerator& g, const DensityMatrix& rho,
    const std::vector<double>& t_samples);

struct EPRReport {
  CyclicGroup group;
  double qepr_closed = 0.0;
  NumericalQepr numerical;
  double classical_epr = 0.0;
  bool detailed_balance = false;
  bool reducible_support = false;
  std::vector<double> terms;  // qepr_terms, indexed by group element
};

EPRReport epr_report(const CirculantGenerator& g, const DensityMatrix& rho,
                     const std::vector<double>& grid = kDefaultTGrid,
                     double db_tol = 1e-10);

}  // namespace cqms
