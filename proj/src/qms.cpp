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

#include "cqms/qms.hpp"

#include <cmath>
#include <limits>
#include <queue>
#include <sstream>

#include "cqms/errors.hpp"

namespace cqms {

namespace {

constexpr double kLeakTol = 1e-10;
constexpr double kStationaryTol = 1e-10;
constexpr double kParamTol = 1e-12;
constexpr double kPositivityTol = 1e-12;
constexpr double kScalarTol = 1e-12;

void require_dim(const CyclicGroup& group, const ComplexMatrix& x,
                 const char* what) {
  if (x.rows() != group.size() || x.cols() != group.size()) {
    std::ostringstream msg;
    msg << what << ": expected a " << group.size() << "x" << group.size()
        << " matrix, got " << x.rows() << "x" << x.cols();
    throw ValidationError(msg.str());
  }
}

// sum_g w(g) x(a + s g, b + s g); s = -1 is the pre-dual, s = +1 the
// Heisenberg picture.
ComplexMatrix shifted_sum(const CyclicGroup& group,
                          const std::vector<double>& w, const ComplexMatrix& x,
                          bool predual) {
  const int n = group.size();
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (int g = 0; g < n; ++g) {
    if (w[g] == 0.0) continue;
    const int s = predual ? group.negate(g) : g;
    for (int a = 0; a < n; ++a) {
      const int as = group.add(a, s);
      for (int b = 0; b < n; ++b) out(a, b) += w[g] * x(as, group.add(b, s));
    }
  }
  return out;
}

}  // namespace

ComplexMatrix kraus_apply(const KrausSet& kraus, const ComplexMatrix& x) {
  require_square(x, "kraus_apply");
  ComplexMatrix out = ComplexMatrix::Zero(x.rows(), x.cols());
  for (const ComplexMatrix& k : kraus.operators) {
    if (k.cols() != x.rows()) {
      throw ValidationError("kraus_apply: operator dimension mismatch");
    }
    out.noalias() += k * x * k.adjoint();
  }
  return out;
}

CirculantGenerator::CirculantGenerator(CycleWeights weights)
    : weights_(std::move(weights)),
      hamiltonian_(ComplexMatrix::Zero(weights_.group().size(),
                                       weights_.group().size())) {}

KrausSet CirculantGenerator::kraus() const {
  KrausSet out;
  const CyclicGroup& grp = group();
  for (int g = 1; g < grp.size(); ++g) {
    const double w = weights_(grp.negate(g));
    if (w <= 0.0) continue;
    out.operators.push_back(std::sqrt(w) * shift_operator(grp, g));
    out.labels.push_back(grp.label(g));
  }
  return out;
}

bool CirculantGenerator::support_generates_group() const {
  const CyclicGroup& grp = group();
  std::vector<bool> reached(grp.size(), false);
  std::queue<int> frontier;
  reached[0] = true;
  frontier.push(0);
  while (!frontier.empty()) {
    const int x = frontier.front();
    frontier.pop();
    for (int g = 1; g < grp.size(); ++g) {
      if (weights_(g) <= 0.0) continue;
      const int y = grp.add(x, g);
      if (!reached[y]) {
        reached[y] = true;
        frontier.push(y);
      }
    }
  }
  for (bool r : reached) {
    if (!r) return false;
  }
  return true;
}

ComplexMatrix cp_apply(const CirculantGenerator& g, const ComplexMatrix& x) {
  require_dim(g.group(), x, "cp_apply");
  return shifted_sum(g.group(), g.weights().alpha(), x, true);
}

ComplexMatrix generator_apply(const CirculantGenerator& g,
                              const ComplexMatrix& x) {
  return cp_apply(g, x) - x;
}

ComplexMatrix generator_apply_heisenberg(const CirculantGenerator& g,
                                         const ComplexMatrix& x) {
  require_dim(g.group(), x, "generator_apply_heisenberg");
  return shifted_sum(g.group(), g.weights().alpha(), x, false) - x;
}

double stationarity_residual(const CirculantGenerator& g,
                             const ComplexMatrix& rho) {
  return max_abs(generator_apply(g, rho));
}

CirculantGenerator rho_adjoint(const CirculantGenerator& g) {
  const CyclicGroup& grp = g.group();
  std::vector<double> rev(grp.size());
  for (int h = 0; h < grp.size(); ++h) rev[h] = g.weights()(grp.negate(h));
  return CirculantGenerator(CycleWeights::from(grp, std::move(rev)));
}

bool WeightRatios::all_finite() const {
  for (double v : q) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

bool WeightRatios::all_one(double tol) const {
  for (double v : q) {
    if (!(std::abs(v - 1.0) <= tol)) return false;
  }
  return true;
}

WeightRatios weighted_db(const CirculantGenerator& g) {
  const CyclicGroup& grp = g.group();
  const int n = grp.size();
  WeightRatios out{grp, std::vector<double>(n, 1.0), std::nullopt};
  for (int h = 1; h < n; ++h) {
    const double num = g.weights()(h);
    const double den = g.weights()(grp.negate(h));
    if (den == 0.0) {
      out.q[h] = num == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
    } else {
      out.q[h] = num / den;
    }
  }
  if (!out.all_finite()) return out;

  // Left side from the two generators, right side from explicit Kraus
  // matrices L_h = alpha(-h)^{1/2} J^h.
  const CirculantGenerator adj = rho_adjoint(g);
  std::vector<ComplexMatrix> lh_adj;
  std::vector<double> coef;
  for (int h = 1; h < n; ++h) {
    const double w = g.weights()(grp.negate(h));
    if (w <= 0.0 || out.q[h] == 1.0) continue;
    lh_adj.push_back(std::sqrt(w) * shift_operator(grp, h).adjoint());
    coef.push_back(out.q[h] - 1.0);
  }
  double worst = 0.0;
  ComplexMatrix unit = ComplexMatrix::Zero(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      unit(a, b) = 1.0;
      ComplexMatrix diff = generator_apply_heisenberg(adj, unit) -
                           generator_apply_heisenberg(g, unit);
      for (size_t i = 0; i < lh_adj.size(); ++i) {
        // L* E_ab L = |L* e_a><L* e_b|
        diff.noalias() -=
            coef[i] * lh_adj[i].col(a) * lh_adj[i].col(b).adjoint();
      }
      worst = std::max(worst, max_abs(diff));
      unit(a, b) = 0.0;
    }
  }
  out.residual = worst;
  return out;
}

bool check_detailed_balance(const CirculantGenerator& g, double tol) {
  if (!(tol > 0.0)) {
    throw ValidationError("check_detailed_balance: tol must be positive");
  }
  const CyclicGroup& grp = g.group();
  for (int h = 1; h < grp.size(); ++h) {
    if (std::abs(g.weights()(h) - g.weights()(grp.negate(h))) > tol) {
      return false;
    }
  }
  return true;
}

ComplexMatrix subspace_action(const CirculantGenerator& g, int k) {
  const CyclicGroup& grp = g.group();
  const int n = grp.size();
  if (k < 0 || k >= n) {
    throw ValidationError("subspace_action: subspace index " +
                          std::to_string(k) + " out of range");
  }
  ComplexMatrix m(n, n);
  ComplexMatrix unit = ComplexMatrix::Zero(n, n);
  for (int x = 0; x < n; ++x) {
    unit(x, grp.add(x, k)) = 1.0;
    const ComplexMatrix y = cp_apply(g, unit);
    for (int z = 0; z < n; ++z) m(x, z) = y(z, grp.add(z, k));
    unit(x, grp.add(x, k)) = 0.0;
  }
  return m;
}

bool check_invariant_subspaces(const KrausSet& kraus,
                               const CyclicGroup& group) {
  const int n = group.size();
  for (const ComplexMatrix& op : kraus.operators) {
    if (op.rows() != n || op.cols() != n) return false;
  }
  ComplexMatrix unit = ComplexMatrix::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    for (int x = 0; x < n; ++x) {
      unit(x, group.add(x, k)) = 1.0;
      const ComplexMatrix y = kraus_apply(kraus, unit);
      unit(x, group.add(x, k)) = 0.0;
      double leak = 0.0;
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          if (group.subtract(b, a) != k) leak += std::norm(y(a, b));
        }
      }
      if (std::sqrt(leak) > kLeakTol) return false;
    }
  }
  // Hilbert-Schmidt Gram matrix of all basis elements, grouped by subspace.
  const int n2 = n * n;
  ComplexMatrix basis = ComplexMatrix::Zero(n2, n2);
  for (int k = 0; k < n; ++k) {
    for (int x = 0; x < n; ++x) {
      basis(x * n + group.add(x, k), k * n + x) = 1.0;
    }
  }
  const ComplexMatrix gram = basis.adjoint() * basis;
  for (int i = 0; i < n2; ++i) {
    for (int j = 0; j < n2; ++j) {
      if (i / n != j / n && std::abs(gram(i, j)) > kLeakTol) return false;
    }
  }
  return true;
}

bool check_invariant_subspaces(const CirculantGenerator& g) {
  return check_invariant_subspaces(g.kraus(), g.group());
}

SpecialRepresentationReport special_representation_check(
    const KrausSet& kraus, const DensityMatrix& rho) {
  const Index n = rho.dim();
  SpecialRepresentationReport out;
  const int m = static_cast<int>(kraus.operators.size());
  ComplexMatrix family(n * n, m + 1);
  family.col(0) = ComplexMatrix::Identity(n, n).reshaped() / std::sqrt(
      static_cast<double>(n));
  for (int i = 0; i < m; ++i) {
    const ComplexMatrix& op = kraus.operators[i];
    if (op.rows() != n || op.cols() != n) {
      throw ValidationError("special_representation_check: operator " +
                            std::to_string(i) + " has the wrong dimension");
    }
    const Complex tr = (rho.matrix() * op).trace();
    out.traces.push_back(tr);
    out.max_trace = std::max(out.max_trace, std::abs(tr));
    const double norm = op.norm();
    family.col(i + 1) = norm > 0.0 ? ComplexVector(op.reshaped() / norm)
                                   : ComplexVector::Zero(n * n);
  }
  if (m + 1 > n * n) {
    out.min_singular_value = 0.0;
  } else {
    Eigen::JacobiSVD<ComplexMatrix> svd(family);
    out.min_singular_value = svd.singularValues().minCoeff();
  }
  return out;
}

InvariantStateParams InvariantStateParams::from(CyclicGroup group,
                                                std::vector<Complex> coeffs) {
  const int n = group.size();
  if (static_cast<int>(coeffs.size()) != n) {
    throw ValidationError("invariant state: coefficient table has " +
                          std::to_string(coeffs.size()) +
                          " entries, group has " + std::to_string(n));
  }
  for (int g = 0; g < n; ++g) {
    if (!std::isfinite(coeffs[g].real()) || !std::isfinite(coeffs[g].imag())) {
      throw ValidationError("invariant state: non-finite coefficient at \"" +
                            group.label(g) + "\"");
    }
  }
  if (std::abs(coeffs[0] - Complex(1.0 / n, 0.0)) > kParamTol) {
    throw ValidationError("invariant state: identity coefficient must be 1/" +
                          std::to_string(n));
  }
  for (int g = 1; g < n; ++g) {
    if (std::abs(coeffs[group.negate(g)] - std::conj(coeffs[g])) > kParamTol) {
      throw ValidationError(
          "invariant state: coefficients at \"" + group.label(g) + "\" and \"" +
          group.label(group.negate(g)) + "\" are not complex conjugates");
    }
  }
  return InvariantStateParams(std::move(group), std::move(coeffs));
}

InvariantStateParams InvariantStateParams::uniform(CyclicGroup group) {
  std::vector<Complex> c(group.size(), 0.0);
  c[0] = 1.0 / group.size();
  return InvariantStateParams(std::move(group), std::move(c));
}

std::vector<double> InvariantStateParams::fourier_eigenvalues() const {
  const Spectrum s = fourier_transform(group_, coeffs_);
  std::vector<double> out(s.lambda.size());
  for (size_t k = 0; k < out.size(); ++k) out[k] = s.lambda[k].real();
  return out;
}

DensityMatrix make_invariant_state(const InvariantStateParams& params) {
  const CyclicGroup& grp = params.group();
  const std::vector<double> ev = params.fourier_eigenvalues();
  for (int k = 0; k < grp.size(); ++k) {
    if (ev[k] < -kPositivityTol) {
      std::ostringstream msg;
      msg << "invariant state: Fourier eigenvalue at frequency \""
          << grp.label(k) << "\" is " << ev[k] << " < 0";
      throw ValidationError(msg.str());
    }
  }
  const int n = grp.size();
  ComplexMatrix rho(n, n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) rho(x, y) = params.coeffs()[grp.subtract(y, x)];
  }
  // The small negative slack above is within DensityMatrix's clipping range.
  DensityMatrix out = DensityMatrix::from(std::move(rho));

  // Any weights will do for the check: every shift commutes with rho.
  std::vector<double> probe(n, n > 1 ? 1.0 / (n - 1) : 0.0);
  if (n > 1) {
    probe[0] = 0.0;
    const CirculantGenerator g(CycleWeights::from(grp, probe));
    const double r = stationarity_residual(g, out.matrix());
    if (r > kStationaryTol) {
      throw ConsistencyError("invariant state: stationarity residual " +
                             std::to_string(r));
    }
  }
  return out;
}

InvariantStateParams sample_invariant_params(const CyclicGroup& group,
                                             std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<Complex> lambda(group.size());
  double total = 0.0;
  for (Complex& l : lambda) {
    const double v = expo(rng);
    l = v;
    total += v;
  }
  for (Complex& l : lambda) l /= total;
  std::vector<Complex> c = inverse_fourier_transform(group, lambda);
  c[0] = 1.0 / group.size();
  // Clean up round-off so the conjugate symmetry is exact.
  for (int g = 1; g < group.size(); ++g) {
    const int h = group.negate(g);
    if (h < g) continue;
    const Complex avg = 0.5 * (c[g] + std::conj(c[h]));
    c[g] = avg;
    c[h] = std::conj(avg);
  }
  return InvariantStateParams::from(group, std::move(c));
}

std::vector<CycleTerm> cycle_representation(const KrausSet& kraus) {
  std::vector<CycleTerm> out;
  for (size_t i = 0; i < kraus.operators.size(); ++i) {
    const ComplexMatrix& op = kraus.operators[i];
    const std::string label =
        i < kraus.labels.size() ? kraus.labels[i] : std::to_string(i);
    Index r = 0, c = 0;
    const double s = op.cwiseAbs().maxCoeff(&r, &c);
    if (s <= kScalarTol) {
      throw ValidationError("cycle representation: operator " + label +
                            " is zero");
    }
    const Complex scalar = op(r, c);
    if (scalar.real() <= 0.0 || std::abs(scalar.imag()) > kScalarTol) {
      throw ValidationError("cycle representation: operator " + label +
                            " is not a non-negative multiple of a permutation");
    }
    ComplexMatrix perm = op / scalar.real();
    std::vector<Cycle> orbits;
    try {
      orbits = orbit_decomposition(perm);
    } catch (const ValidationError&) {
      throw ValidationError("cycle representation: operator " + label +
                            " is not a non-negative multiple of a permutation");
    }
    out.push_back({label, s * s, std::move(orbits)});
  }
  return out;
}

}  // namespace cqms
