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

// Circulant and block-circulant matrices over a product of cyclic groups
// G = Z_{p_1} x ... x Z_{p_n}. Group elements are flattened in lexicographic
// order (last factor varies fastest), which matches the Kronecker index
// convention of tensor_product. A coefficient table alpha over G assembles
// to R = sum_g alpha(g) J^g with J^g = J_{p_1}^{g_1} (x) ... (x) J_{p_n}^{g_n},
// so R(x, y) = alpha(y - x).

#include <span>
#include <string>
#include <vector>

#include "cqms/linalg.hpp"

namespace cqms {

class CyclicGroup {
 public:
  explicit CyclicGroup(std::vector<int> orders);

  const std::vector<int>& orders() const { return orders_; }
  int rank() const { return static_cast<int>(orders_.size()); }
  int size() const { return size_; }

  std::vector<int> decode(int g) const;
  int encode(std::span<const int> digits) const;  // digits reduced mod p_k

  int add(int a, int b) const;
  int subtract(int a, int b) const;  // a - b
  int negate(int a) const { return subtract(0, a); }

  /// prod_k omega_{p_k}^{a_k b_k}.
  Complex character(int a, int b) const;

  /// "i,j,..." (or "i" for a single factor), the JSON key form.
  std::string label(int g) const;
  /// Inverse of label(); throws ValidationError on malformed keys.
  int parse_label(const std::string& key) const;

  friend bool operator==(const CyclicGroup& a, const CyclicGroup& b) {
    return a.orders_ == b.orders_;
  }

 private:
  std::vector<int> orders_;
  std::vector<int> strides_;
  int size_ = 1;
};

/// Probability weights alpha over G with alpha(0) = 0 and total mass 1.
class CycleWeights {
 public:
  static CycleWeights from(CyclicGroup group, std::vector<double> alpha);

  const CyclicGroup& group() const { return group_; }
  const std::vector<double>& alpha() const { return alpha_; }
  double operator()(int g) const { return alpha_[g]; }

 private:
  CycleWeights(CyclicGroup group, std::vector<double> alpha)
      : group_(std::move(group)), alpha_(std::move(alpha)) {}
  CyclicGroup group_;
  std::vector<double> alpha_;
};

/// Q-matrix coefficients: alpha(0) = -1, non-negative elsewhere, zero sum.
class GeneratorCoefficients {
 public:
  static GeneratorCoefficients from(CyclicGroup group,
                                    std::vector<double> coeffs);
  /// Q = Pi - 1 for the embedded chain with weights w.
  static GeneratorCoefficients from_weights(const CycleWeights& w);

  const CyclicGroup& group() const { return group_; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  double operator()(int g) const { return coeffs_[g]; }

 private:
  GeneratorCoefficients(CyclicGroup group, std::vector<double> coeffs)
      : group_(std::move(group)), coeffs_(std::move(coeffs)) {}
  CyclicGroup group_;
  std::vector<double> coeffs_;
};

/// lambda(k) = sum_g c(g) conj(omega)^{g.k}: the eigenvalue of the assembled
/// matrix on the k-th Fourier vector.
struct Spectrum {
  CyclicGroup group;
  std::vector<Complex> lambda;
};

/// J^g as a dense 0/1 matrix.
ComplexMatrix shift_operator(const CyclicGroup& group, int g);

/// F_{p_1} (x) ... (x) F_{p_n}.
UnitaryMatrix group_dft(const CyclicGroup& group);

ComplexMatrix assemble(const CyclicGroup& group, std::span<const double> table);
ComplexMatrix assemble(const CycleWeights& w);
ComplexMatrix assemble(const GeneratorCoefficients& q);

/// Reads the table off the first row after checking that every entry obeys
/// m(x, y) = m(0, y - x) to 1e-10 and is real.
std::vector<double> circulant_coefficients(const ComplexMatrix& m,
                                           const CyclicGroup& group);
/// circulant_coefficients validated as cycle weights.
CycleWeights birkhoff_coefficients(const ComplexMatrix& m,
                                   const CyclicGroup& group);

Spectrum fourier_transform(const CyclicGroup& group,
                           std::span<const Complex> coeffs);
/// c(g) = (1/|G|) sum_k lambda(k) omega^{g.k}.
std::vector<Complex> inverse_fourier_transform(
    const CyclicGroup& group, std::span<const Complex> lambda);

Spectrum spectrum(const CycleWeights& w);
Spectrum spectrum(const GeneratorCoefficients& q);

/// Phi_m(t) = sum_k omega^{m.k} exp(t lambda(k)) for every m in G. Equals
/// |G| * exp(tQ)(0, m), so it is real and non-negative.
std::vector<double> phi_table(const GeneratorCoefficients& q, double t);
double phi_function(const GeneratorCoefficients& q, double t, int m);

/// exp(tQ) assembled from phi_table: entry (x, y) = Phi_{y-x}(t) / |G|.
ComplexMatrix exp_generator(const GeneratorCoefficients& q, double t);

}  // namespace cqms
