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

// Circulant quantum Markov semigroups. For cycle weights alpha on G the
// embedded chain (pre-dual, Schroedinger picture) is
//
//   Phi_*(x) = sum_g alpha(-g) J^g x J^g*,      L_*(x) = Phi_*(x) - x,
//
// i.e. Kraus operators L_g = alpha(-g)^{1/2} J^g. There is no Hamiltonian
// part. Each B_k = span{|e_x><e_{x+k}|} is invariant and Phi_* acts on it as
// the classical transition matrix Pi = sum_g alpha(g) J^g.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cqms/circulant.hpp"
#include "cqms/cycles.hpp"
#include "cqms/linalg.hpp"

namespace cqms {

struct KrausSet {
  std::vector<ComplexMatrix> operators;
  std::vector<std::string> labels;
};

/// sum_k K x K^dagger.
ComplexMatrix kraus_apply(const KrausSet& kraus, const ComplexMatrix& x);

class CirculantGenerator {
 public:
  explicit CirculantGenerator(CycleWeights weights);

  const CycleWeights& weights() const { return weights_; }
  const CyclicGroup& group() const { return weights_.group(); }
  int dimension() const { return weights_.group().size(); }

  /// Q = Pi - 1 on the diagonal algebra.
  GeneratorCoefficients coefficients() const {
    return GeneratorCoefficients::from_weights(weights_);
  }
  /// Always zero for this class; kept so the GKSL data is complete.
  const ComplexMatrix& hamiltonian() const { return hamiltonian_; }

  /// L_g = alpha(-g)^{1/2} J^g for every g with alpha(-g) > 0, labelled g.
  KrausSet kraus() const;

  /// Whether the support of alpha generates G, i.e. the classical chain is
  /// irreducible. Non-generating supports are legal but worth flagging.
  bool support_generates_group() const;

 private:
  CycleWeights weights_;
  ComplexMatrix hamiltonian_;
};

ComplexMatrix cp_apply(const CirculantGenerator& g, const ComplexMatrix& x);
ComplexMatrix generator_apply(const CirculantGenerator& g,
                              const ComplexMatrix& x);
/// Heisenberg-picture generator L(x) = sum_g alpha(-g) J^g* x J^g - x.
ComplexMatrix generator_apply_heisenberg(const CirculantGenerator& g,
                                         const ComplexMatrix& x);

/// max |L_*(rho)|, zero exactly for invariant states.
double stationarity_residual(const CirculantGenerator& g,
                             const ComplexMatrix& rho);

/// The generator with reversed weights alpha~(g) = alpha(-g).
CirculantGenerator rho_adjoint(const CirculantGenerator& g);

/// q(g) = alpha(g) / alpha(-g) with 0/0 = 1 and x/0 = +inf.
struct WeightRatios {
  CyclicGroup group;
  std::vector<double> q;  // q[0] is 1 by convention
  /// max over matrix units of |(L~ - L)(x) - sum_g (q(g)-1) L_g* x L_g|;
  /// empty when some ratio is infinite.
  std::optional<double> residual;

  bool all_finite() const;
  bool all_one(double tol) const;
};

WeightRatios weighted_db(const CirculantGenerator& g);

bool check_detailed_balance(const CirculantGenerator& g, double tol);

/// Matrix M of Phi_* on B_k, Phi_*(|e_x><e_{x+k}|) = sum_y M(x, y)
/// |e_y><e_{y+k}|, read off by applying the map. Equals Pi for every k.
ComplexMatrix subspace_action(const CirculantGenerator& g, int k);

/// True iff every B_k is mapped into itself by the Kraus map (leakage at
/// most 1e-10 in Hilbert-Schmidt norm) and distinct B_k are orthogonal.
bool check_invariant_subspaces(const KrausSet& kraus, const CyclicGroup& group);
bool check_invariant_subspaces(const CirculantGenerator& g);

struct SpecialRepresentationReport {
  std::vector<Complex> traces;  // tr(rho L_k)
  double max_trace = 0.0;
  /// Smallest singular value of the unit-normalised vectorised family
  /// {1, L_1, L_2, ...}.
  double min_singular_value = 0.0;

  bool traceless(double tol = 1e-10) const { return max_trace <= tol; }
  bool independent(double tol = 1e-8) const {
    return min_singular_value > tol;
  }
  bool special() const { return traceless() && independent(); }
};

SpecialRepresentationReport special_representation_check(
    const KrausSet& kraus, const DensityMatrix& rho);

/// Coefficients of rho = sum_g rho_g J^g with rho_0 = 1/|G|.
class InvariantStateParams {
 public:
  /// Checks rho_0 = 1/|G| and rho_{-g} = conj(rho_g) to 1e-12.
  static InvariantStateParams from(CyclicGroup group,
                                   std::vector<Complex> coeffs);
  static InvariantStateParams uniform(CyclicGroup group);

  const CyclicGroup& group() const { return group_; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }

  /// rho~(k) = sum_g rho_g conj(omega)^{g.k}: the spectrum of the state.
  std::vector<double> fourier_eigenvalues() const;

 private:
  InvariantStateParams(CyclicGroup group, std::vector<Complex> coeffs)
      : group_(std::move(group)), coeffs_(std::move(coeffs)) {}
  CyclicGroup group_;
  std::vector<Complex> coeffs_;
};

/// Throws ValidationError naming the first frequency whose eigenvalue is
/// below -1e-12.
DensityMatrix make_invariant_state(const InvariantStateParams& params);

/// Draws the spectrum uniformly from the simplex and transforms back, so
/// every sample is a valid invariant state.
InvariantStateParams sample_invariant_params(const CyclicGroup& group,
                                             std::mt19937_64& rng);

struct CycleTerm {
  std::string label;
  double weight = 0.0;  // |scalar|^2
  std::vector<Cycle> orbits;
  bool irreducible() const { return orbits.size() == 1; }
};

/// Writes each Kraus operator as a scalar times a permutation matrix and
/// reports the permutation's cycles. Throws ValidationError for operators
/// that are not of that form.
std::vector<CycleTerm> cycle_representation(const KrausSet& kraus);

}  // namespace cqms
