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

#include "cqms/circulant.hpp"

#include <cmath>
#include <sstream>

#include "cqms/cycles.hpp"
#include "cqms/errors.hpp"

namespace cqms {

namespace {

constexpr double kTableTol = 1e-12;
constexpr double kCirculantTol = 1e-10;

void require_table(const CyclicGroup& group, size_t n, const char* what) {
  if (n != static_cast<size_t>(group.size())) {
    std::ostringstream msg;
    msg << what << ": table has " << n << " entries, group has "
        << group.size();
    throw ValidationError(msg.str());
  }
}

void require_finite_entries(const CyclicGroup& group,
                            std::span<const double> table, const char* what) {
  for (int g = 0; g < group.size(); ++g) {
    if (!std::isfinite(table[g])) {
      throw ValidationError(std::string(what) + ": non-finite entry at \"" +
                            group.label(g) + "\"");
    }
  }
}

}  // namespace

CyclicGroup::CyclicGroup(std::vector<int> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) throw ValidationError("CyclicGroup: no factors");
  strides_.assign(orders_.size(), 1);
  long long size = 1;
  for (int k = rank() - 1; k >= 0; --k) {
    if (orders_[k] < 1) {
      throw ValidationError("CyclicGroup: factor orders must be positive");
    }
    strides_[k] = static_cast<int>(size);
    size *= orders_[k];
    if (size > kMaxDimension) {
      std::ostringstream msg;
      msg << "CyclicGroup: group order exceeds the dimension guard "
          << kMaxDimension;
      throw ValidationError(msg.str());
    }
  }
  size_ = static_cast<int>(size);
}

std::vector<int> CyclicGroup::decode(int g) const {
  std::vector<int> digits(orders_.size());
  for (int k = 0; k < rank(); ++k) digits[k] = (g / strides_[k]) % orders_[k];
  return digits;
}

int CyclicGroup::encode(std::span<const int> digits) const {
  if (static_cast<int>(digits.size()) != rank()) {
    throw ValidationError("CyclicGroup::encode: wrong number of digits");
  }
  int g = 0;
  for (int k = 0; k < rank(); ++k) {
    const int d = ((digits[k] % orders_[k]) + orders_[k]) % orders_[k];
    g += d * strides_[k];
  }
  return g;
}

int CyclicGroup::add(int a, int b) const {
  int g = 0;
  for (int k = 0; k < rank(); ++k) {
    const int p = orders_[k];
    const int d = (a / strides_[k]) % p + (b / strides_[k]) % p;
    g += (d >= p ? d - p : d) * strides_[k];
  }
  return g;
}

int CyclicGroup::subtract(int a, int b) const {
  int g = 0;
  for (int k = 0; k < rank(); ++k) {
    const int p = orders_[k];
    const int d = (a / strides_[k]) % p - (b / strides_[k]) % p;
    g += (d < 0 ? d + p : d) * strides_[k];
  }
  return g;
}

Complex CyclicGroup::character(int a, int b) const {
  // Sum the phases as exact fractions of a full turn, then take one
  // exponential; keeps characters of order 1, 2, 4 exact.
  long long num = 0;
  long long den = 1;
  for (int k = 0; k < rank(); ++k) {
    const long long p = orders_[k];
    const long long prod = ((a / strides_[k]) % p) * ((b / strides_[k]) % p);
    num = num * p + (prod % p) * den;
    den *= p;
    num %= den;
  }
  return root_of_unity(num, static_cast<int>(den));
}

std::string CyclicGroup::label(int g) const {
  std::ostringstream out;
  const std::vector<int> digits = decode(g);
  for (size_t k = 0; k < digits.size(); ++k) out << (k ? "," : "") << digits[k];
  return out.str();
}

int CyclicGroup::parse_label(const std::string& key) const {
  std::vector<int> digits;
  std::stringstream in(key);
  std::string part;
  while (std::getline(in, part, ',')) {
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    // Require the whole token to be a number.
    while (used < part.size() && part[used] == ' ') ++used;
    if (part.empty() || used != part.size()) {
      throw ValidationError("malformed group index \"" + key + "\"");
    }
    digits.push_back(value);
  }
  if (static_cast<int>(digits.size()) != rank()) {
    std::ostringstream msg;
    msg << "group index \"" << key << "\" has " << digits.size()
        << " components, expected " << rank();
    throw ValidationError(msg.str());
  }
  for (int k = 0; k < rank(); ++k) {
    if (digits[k] < 0 || digits[k] >= orders_[k]) {
      throw ValidationError("group index \"" + key + "\" out of range");
    }
  }
  return encode(digits);
}

CycleWeights CycleWeights::from(CyclicGroup group, std::vector<double> alpha) {
  require_table(group, alpha.size(), "CycleWeights");
  require_finite_entries(group, alpha, "CycleWeights");
  double total = 0.0;
  for (int g = 0; g < group.size(); ++g) {
    if (alpha[g] < 0.0) {
      throw ValidationError("CycleWeights: negative weight at \"" +
                            group.label(g) + "\"");
    }
    total += alpha[g];
  }
  if (std::abs(alpha[0]) > kTableTol) {
    throw ValidationError("CycleWeights: identity weight must be 0");
  }
  if (std::abs(total - 1.0) > kTableTol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "CycleWeights: weights sum to " << total << ", expected 1";
    throw ValidationError(msg.str());
  }
  alpha[0] = 0.0;
  return CycleWeights(std::move(group), std::move(alpha));
}

GeneratorCoefficients GeneratorCoefficients::from(CyclicGroup group,
                                                  std::vector<double> coeffs) {
  require_table(group, coeffs.size(), "GeneratorCoefficients");
  require_finite_entries(group, coeffs, "GeneratorCoefficients");
  if (std::abs(coeffs[0] + 1.0) > kTableTol) {
    throw ValidationError("GeneratorCoefficients: identity entry must be -1");
  }
  double total = 0.0;
  for (int g = 0; g < group.size(); ++g) {
    if (g != 0 && coeffs[g] < 0.0) {
      throw ValidationError("GeneratorCoefficients: negative rate at \"" +
                            group.label(g) + "\"");
    }
    total += coeffs[g];
  }
  if (std::abs(total) > kTableTol) {
    throw ValidationError("GeneratorCoefficients: entries do not sum to 0");
  }
  return GeneratorCoefficients(std::move(group), std::move(coeffs));
}

GeneratorCoefficients GeneratorCoefficients::from_weights(
    const CycleWeights& w) {
  std::vector<double> coeffs = w.alpha();
  coeffs[0] = -1.0;
  return GeneratorCoefficients(w.group(), std::move(coeffs));
}

ComplexMatrix shift_operator(const CyclicGroup& group, int g) {
  const int n = group.size();
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (int r = 0; r < n; ++r) m(r, group.add(r, g)) = 1.0;
  return m;
}

UnitaryMatrix group_dft(const CyclicGroup& group) {
  ComplexMatrix f = dft_matrix(group.orders()[0]).matrix();
  for (int k = 1; k < group.rank(); ++k) {
    f = tensor_product(f, dft_matrix(group.orders()[k]).matrix());
  }
  return UnitaryMatrix::from(std::move(f));
}

ComplexMatrix assemble(const CyclicGroup& group,
                       std::span<const double> table) {
  require_table(group, table.size(), "assemble");
  const int n = group.size();
  ComplexMatrix m(n, n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) m(x, y) = table[group.subtract(y, x)];
  }
  return m;
}

ComplexMatrix assemble(const CycleWeights& w) {
  return assemble(w.group(), w.alpha());
}

ComplexMatrix assemble(const GeneratorCoefficients& q) {
  return assemble(q.group(), q.coeffs());
}

std::vector<double> circulant_coefficients(const ComplexMatrix& m,
                                           const CyclicGroup& group) {
  const int n = group.size();
  if (m.rows() != n || m.cols() != n) {
    std::ostringstream msg;
    msg << "circulant_coefficients: matrix is " << m.rows() << "x" << m.cols()
        << ", group order is " << n;
    throw ValidationError(msg.str());
  }
  require_finite(m, "circulant_coefficients");
  std::vector<double> table(n);
  for (int g = 0; g < n; ++g) {
    if (std::abs(m(0, g).imag()) > kCirculantTol) {
      throw ValidationError("circulant_coefficients: complex entry at (0, " +
                            std::to_string(g) + ")");
    }
    table[g] = m(0, g).real();
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const Complex expected = table[group.subtract(y, x)];
      if (std::abs(m(x, y) - expected) > kCirculantTol) {
        std::ostringstream msg;
        msg << "matrix is not block circulant over the group: entry (" << x
            << ", " << y << ") = " << m(x, y).real() << " but row 0 implies "
            << expected.real();
        throw ValidationError(msg.str());
      }
    }
  }
  return table;
}

CycleWeights birkhoff_coefficients(const ComplexMatrix& m,
                                   const CyclicGroup& group) {
  return CycleWeights::from(group, circulant_coefficients(m, group));
}

Spectrum fourier_transform(const CyclicGroup& group,
                           std::span<const Complex> coeffs) {
  if (coeffs.size() != static_cast<size_t>(group.size())) {
    throw ValidationError("fourier_transform: table size mismatch");
  }
  const int n = group.size();
  Spectrum s{group, std::vector<Complex>(n)};
  for (int k = 0; k < n; ++k) {
    Complex acc = 0.0;
    for (int g = 0; g < n; ++g) {
      if (coeffs[g] != 0.0) acc += coeffs[g] * std::conj(group.character(g, k));
    }
    s.lambda[k] = acc;
  }
  return s;
}

std::vector<Complex> inverse_fourier_transform(
    const CyclicGroup& group, std::span<const Complex> lambda) {
  if (lambda.size() != static_cast<size_t>(group.size())) {
    throw ValidationError("inverse_fourier_transform: table size mismatch");
  }
  const int n = group.size();
  std::vector<Complex> coeffs(n);
  for (int g = 0; g < n; ++g) {
    Complex acc = 0.0;
    for (int k = 0; k < n; ++k) acc += lambda[k] * group.character(g, k);
    coeffs[g] = acc / static_cast<double>(n);
  }
  return coeffs;
}

namespace {

Spectrum real_spectrum(const CyclicGroup& group,
                       std::span<const double> table) {
  std::vector<Complex> coeffs(table.begin(), table.end());
  return fourier_transform(group, coeffs);
}

}  // namespace

Spectrum spectrum(const CycleWeights& w) {
  return real_spectrum(w.group(), w.alpha());
}

Spectrum spectrum(const GeneratorCoefficients& q) {
  return real_spectrum(q.group(), q.coeffs());
}

std::vector<double> phi_table(const GeneratorCoefficients& q, double t) {
  t = std::max(t, 0.0);
  const CyclicGroup& group = q.group();
  const int n = group.size();
  const Spectrum s = spectrum(q);
  std::vector<Complex> growth(n);
  for (int k = 0; k < n; ++k) growth[k] = std::exp(t * s.lambda[k]);

  std::vector<double> phi(n);
  for (int m = 0; m < n; ++m) {
    Complex acc = 0.0;
    for (int k = 0; k < n; ++k) acc += group.character(m, k) * growth[k];
    if (std::abs(acc.imag()) > 1e-8) {
      std::ostringstream msg;
      msg << "phi_function: imaginary residual " << acc.imag() << " at \""
          << group.label(m) << "\"";
      throw ConsistencyError(msg.str());
    }
    if (acc.real() < -1e-10) {
      std::ostringstream msg;
      msg << "phi_function: negative value " << acc.real() << " at \""
          << group.label(m) << "\"";
      throw ConsistencyError(msg.str());
    }
    phi[m] = acc.real();
  }
  return phi;
}

double phi_function(const GeneratorCoefficients& q, double t, int m) {
  if (m < 0 || m >= q.group().size()) {
    throw ValidationError("phi_function: index out of range");
  }
  return phi_table(q, t)[m];
}

ComplexMatrix exp_generator(const GeneratorCoefficients& q, double t) {
  const std::vector<double> phi = phi_table(q, t);
  const CyclicGroup& group = q.group();
  const int n = group.size();
  ComplexMatrix e(n, n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) e(x, y) = phi[group.subtract(y, x)] / n;
  }
  for (int x = 0; x < n; ++x) {
    const double row = e.row(x).sum().real();
    if (std::abs(row - 1.0) > 1e-10) {
      throw ConsistencyError("exp_generator: row " + std::to_string(x) +
                             " does not sum to 1");
    }
  }
  return e;
}

}  // namespace cqms
