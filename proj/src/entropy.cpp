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

#include "cqms/entropy.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "cqms/errors.hpp"

namespace cqms {

namespace {

constexpr double kStationaryTol = 1e-8;
constexpr double kDirectTol = 1e-9;
constexpr double kDualityTol = 1e-10;
constexpr double kOrthoTol = 1e-12;
constexpr double kRankOneTol = 1e-10;

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_choi_inputs(const CirculantGenerator& g, const DensityMatrix& rho,
                         double t) {
  const int n = g.dimension();
  if (rho.dim() != n) {
    std::ostringstream msg;
    msg << "Choi state: rho has dimension " << rho.dim() << ", generator "
        << n;
    throw ValidationError(msg.str());
  }
  if (static_cast<long long>(n) * n > kMaxDimension) {
    std::ostringstream msg;
    msg << "Choi state: doubled dimension " << n * n
        << " exceeds the dimension guard " << kMaxDimension;
    throw ValidationError(msg.str());
  }
  if (!std::isfinite(t) || t < 0.0) {
    throw ValidationError("Choi state: t must be finite and non-negative");
  }
  const double r = stationarity_residual(g, rho.matrix());
  if (r > kStationaryTol) {
    std::ostringstream msg;
    msg << "Choi state: rho is not stationary (residual " << r << ")";
    throw ValidationError(msg.str());
  }
}

std::vector<ComplexVector> shifted_vectors(const CyclicGroup& grp,
                                           const ComplexVector& omega) {
  const int n = grp.size();
  std::vector<ComplexVector> u(n, ComplexVector(n * n));
  for (int m = 0; m < n; ++m) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        u[m](x * n + y) = omega(x * n + grp.subtract(y, m));
      }
    }
  }
  return u;
}

double gram_residual(const std::vector<ComplexVector>& u) {
  double worst = 0.0;
  for (size_t i = 0; i < u.size(); ++i) {
    for (size_t j = 0; j < u.size(); ++j) {
      const Complex ip = u[i].dot(u[j]);
      worst = std::max(worst, std::abs(ip - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

ComplexMatrix spectral_sum(const std::vector<ComplexVector>& u,
                           const std::vector<double>& w) {
  const Index d = u.front().size();
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (size_t m = 0; m < u.size(); ++m) {
    if (w[m] == 0.0) continue;
    out.noalias() += w[m] * u[m] * u[m].adjoint();
  }
  return out;
}

ComplexMatrix direct_choi(const CirculantGenerator& g, const DensityMatrix& rho,
                          double t) {
  const int n = g.dimension();
  const ComplexMatrix s = rho.sqrt();
  ComplexMatrix out(n * n, n * n);
  for (int x = 0; x < n; ++x) {
    for (int xp = 0; xp < n; ++xp) {
      const ComplexMatrix block = s.col(x) * s.row(xp);
      out.block(x * n, xp * n, n, n) = evolve_predual(g, t, block);
    }
  }
  return out;
}

// Mixture weights and vectors, without the cross-checks.
struct SpectralParts {
  std::vector<ComplexVector> u;
  std::vector<double> w;
};

SpectralParts spectral_parts(const CirculantGenerator& g,
                             const DensityMatrix& rho, double t,
                             bool backward) {
  const CyclicGroup& grp = g.group();
  const int n = grp.size();
  const std::vector<double> phi = phi_table(g.coefficients(), t);
  SpectralParts out{shifted_vectors(grp, omega_vector(rho)),
                    std::vector<double>(n)};
  for (int m = 0; m < n; ++m) {
    out.w[m] = phi[backward ? grp.negate(m) : m] / n;
  }
  return out;
}

ChoiState build_choi(const CirculantGenerator& g, const DensityMatrix& rho,
                     double t, bool backward) {
  require_choi_inputs(g, rho, t);
  SpectralParts parts = spectral_parts(g, rho, t, backward);
  ComplexMatrix spectral = spectral_sum(parts.u, parts.w);
  const ComplexMatrix direct =
      direct_choi(backward ? rho_adjoint(g) : g, rho, t);
  const double residual = max_abs(spectral - direct);
  if (residual > kDirectTol) {
    std::ostringstream msg;
    msg << "Choi state: spectral and direct constructions differ by "
        << residual;
    throw ConsistencyError(msg.str());
  }
  const double gram = gram_residual(parts.u);
  return ChoiState{DensityMatrix::from(std::move(spectral)), std::move(parts.u),
                   std::move(parts.w), gram, residual};
}

double log_ratio_sum(const std::vector<double>& w,
                     const std::vector<double>& wt) {
  double s = 0.0;
  for (size_t m = 0; m < w.size(); ++m) {
    if (w[m] < kLogClip) continue;
    if (wt[m] < kLogClip) return kInf;
    s += w[m] * std::log(w[m] / wt[m]);
  }
  return std::max(s, 0.0);
}

// Phi_s(m, t) for the one-factor chain with generator Pi_s - 1, where the
// identity weight of Pi_s may be non-zero.
std::vector<double> factor_phi(int s, const std::vector<double>& alpha,
                               double t) {
  const CyclicGroup grp({s});
  std::vector<Complex> c(alpha.begin(), alpha.end());
  c[0] -= 1.0;
  const Spectrum spec = fourier_transform(grp, c);
  std::vector<double> out(s);
  for (int m = 0; m < s; ++m) {
    Complex acc = 0.0;
    for (int k = 0; k < s; ++k) {
      acc += grp.character(m, k) * std::exp(t * spec.lambda[k]);
    }
    out[m] = acc.real();
  }
  return out;
}

// u_s(m) = s^{-1/2} sum_i e_i (x) e_{i+m}
ComplexVector factor_vector(int s, int m) {
  ComplexVector v = ComplexVector::Zero(s * s);
  for (int i = 0; i < s; ++i) v(i * s + (i + m) % s) = 1.0 / std::sqrt(s);
  return v;
}

}  // namespace

ComplexVector omega_vector(const DensityMatrix& rho) {
  const Index n = rho.dim();
  const ComplexMatrix s = rho.sqrt();
  ComplexVector out(n * n);
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) out(x * n + y) = s(y, x);
  }
  return out;
}

ComplexMatrix evolve_predual(const CirculantGenerator& g, double t,
                             const ComplexMatrix& x) {
  const CyclicGroup& grp = g.group();
  const int n = grp.size();
  if (x.rows() != n || x.cols() != n) {
    throw ValidationError("evolve_predual: dimension mismatch");
  }
  const ComplexMatrix p = exp_generator(g.coefficients(), t);
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  ComplexVector a(n);
  for (int k = 0; k < n; ++k) {
    for (int y = 0; y < n; ++y) a(y) = x(y, grp.add(y, k));
    const ComplexVector b = p.transpose() * a;
    for (int y = 0; y < n; ++y) out(y, grp.add(y, k)) = b(y);
  }
  return out;
}

ChoiState forward_choi(const CirculantGenerator& g, const DensityMatrix& rho,
                       double t) {
  return build_choi(g, rho, t, false);
}

ChoiState backward_choi(const CirculantGenerator& g, const DensityMatrix& rho,
                        double t) {
  ChoiState back = build_choi(g, rho, t, true);
  const ChoiState via_adjoint = build_choi(rho_adjoint(g), rho, t, false);
  const double diff =
      max_abs(back.state.matrix() - via_adjoint.state.matrix());
  if (diff > kDualityTol) {
    std::ostringstream msg;
    msg << "backward Choi state differs from the adjoint's forward state by "
        << diff;
    throw ConsistencyError(msg.str());
  }
  return back;
}

std::vector<double> qepr_terms(const CirculantGenerator& g) {
  const CyclicGroup& grp = g.group();
  std::vector<double> out(grp.size(), 0.0);
  for (int h = 1; h < grp.size(); ++h) {
    const double a = g.weights()(h);
    const double b = g.weights()(grp.negate(h));
    if (a == 0.0 && b == 0.0) continue;
    if (a == 0.0 || b == 0.0) {
      out[h] = kInf;
      continue;
    }
    out[h] = (a - b) * std::log(a / b);
  }
  return out;
}

double qepr_closed_form(const CirculantGenerator& g) {
  double s = 0.0;
  for (double v : qepr_terms(g)) s += v;
  return 0.5 * s;
}

double choi_relative_entropy(const CirculantGenerator& g,
                             const DensityMatrix& rho, double t) {
  require_choi_inputs(g, rho, t);
  const SpectralParts fwd = spectral_parts(g, rho, t, false);
  if (gram_residual(fwd.u) <= kOrthoTol) {
    const SpectralParts bwd = spectral_parts(g, rho, t, true);
    return log_ratio_sum(fwd.w, bwd.w);
  }
  const ChoiState a = forward_choi(g, rho, t);
  const ChoiState b = backward_choi(g, rho, t);
  return relative_entropy(a.state, b.state);
}

NumericalQepr qepr_numerical(const CirculantGenerator& g,
                             const DensityMatrix& rho,
                             const std::vector<double>& grid) {
  if (grid.size() < 2) {
    throw ValidationError("qepr_numerical: need at least two grid points");
  }
  for (size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0) || !std::isfinite(grid[i]) ||
        (i > 0 && !(grid[i] < grid[i - 1]))) {
      throw ValidationError(
          "qepr_numerical: t grid must be positive and strictly decreasing");
    }
  }
  NumericalQepr out;
  out.t = grid;
  for (double t : grid) out.quotients.push_back(choi_relative_entropy(g, rho, t) / t);
  if (!std::isfinite(qepr_closed_form(g))) {
    out.diverged = true;
    out.value = kInf;
    return out;
  }
  const size_t n = grid.size();
  const double t1 = grid[n - 2], t2 = grid[n - 1];
  const double f1 = out.quotients[n - 2], f2 = out.quotients[n - 1];
  out.value = (t1 * f2 - t2 * f1) / (t1 - t2);
  return out;
}

double classical_epr(const CirculantGenerator& g) {
  const int n = g.dimension();
  const ComplexMatrix q =
      subspace_action(g, 0) - ComplexMatrix::Identity(n, n);
  const double pi = 1.0 / n;
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double a = pi * q(i, j).real();
      const double b = pi * q(j, i).real();
      if (a == 0.0 && b == 0.0) continue;
      if (a == 0.0 || b == 0.0) return kInf;
      s += (a - b) * std::log(a / b);
    }
  }
  return 0.5 * s;
}

SeparabilityReport separability_check(const CirculantGenerator& g, double t) {
  const CyclicGroup& grp = g.group();
  if (grp.rank() != 2) {
    throw ValidationError("separability_check: needs a group Z_p x Z_q");
  }
  const int p = grp.orders()[0], q = grp.orders()[1];
  SeparabilityReport out;
  out.alpha_p.assign(p, 0.0);
  out.alpha_q.assign(q, 0.0);
  const std::vector<double>& a = g.weights().alpha();
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < q; ++j) {
      out.alpha_p[i] += a[i * q + j];
      out.alpha_q[j] += a[i * q + j];
    }
  }
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < q; ++j) {
      if (std::abs(a[i * q + j] - out.alpha_p[i] * out.alpha_q[j]) >
          kRankOneTol) {
        throw ValidationError(
            "separability_check: weights are not a product table");
      }
    }
  }

  const int n = p * q;
  const DensityMatrix uniform = DensityMatrix::maximally_mixed(n);
  const ChoiState omega = forward_choi(g, uniform, t);

  // (i, j, i', j') -> (i, i', j, j')
  std::vector<Index> perm(n * n);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < q; ++j) {
      for (int ip = 0; ip < p; ++ip) {
        for (int jp = 0; jp < q; ++jp) {
          perm[(i * q + j) * n + ip * q + jp] = ((i * p + ip) * q + j) * q + jp;
        }
      }
    }
  }
  ComplexMatrix reordered(n * n, n * n);
  for (int r = 0; r < n * n; ++r) {
    for (int c = 0; c < n * n; ++c) {
      reordered(perm[r], perm[c]) = omega.state.matrix()(r, c);
    }
  }

  auto factor_state = [t](int s, const std::vector<double>& alpha) {
    const std::vector<double> phi = factor_phi(s, alpha, t);
    ComplexMatrix m = ComplexMatrix::Zero(s * s, s * s);
    for (int k = 0; k < s; ++k) {
      const ComplexVector u = factor_vector(s, k);
      m.noalias() += (phi[k] / s) * u * u.adjoint();
    }
    return m;
  };
  const ComplexMatrix product =
      tensor_product(factor_state(p, out.alpha_p), factor_state(q, out.alpha_q));
  out.product_residual = max_abs(reordered - product);

  const std::vector<double> phi = phi_table(g.coefficients(), t);
  ComplexMatrix mixture = ComplexMatrix::Zero(n * n, n * n);
  for (int m = 0; m < p; ++m) {
    const ComplexVector up = factor_vector(p, m);
    for (int k = 0; k < q; ++k) {
      const ComplexVector uq = factor_vector(q, k);
      ComplexVector v(n * n);
      for (int i = 0; i < p * p; ++i) v.segment(i * q * q, q * q) = up(i) * uq;
      mixture.noalias() += (phi[m * q + k] / n) * v * v.adjoint();
    }
  }
  out.mixture_residual = max_abs(reordered - mixture);
  return out;
}

std::vector<std::pair<double, double>> entropy_curve(
    const CirculantGenerator& g, const DensityMatrix& rho,
    const std::vector<double>& t_samples) {
  std::vector<std::pair<double, double>> out;
  for (size_t i = 0; i < t_samples.size(); ++i) {
    const double t = t_samples[i];
    if (!std::isfinite(t) || t < 0.0 || (i > 0 && t < t_samples[i - 1])) {
      throw ValidationError(
          "entropy_curve: samples must be non-negative and ascending");
    }
    out.emplace_back(t, t == 0.0 ? 0.0 : choi_relative_entropy(g, rho, t));
  }
  return out;
}

EPRReport epr_report(const CirculantGenerator& g, const DensityMatrix& rho,
                     const std::vector<double>& grid, double db_tol) {
  EPRReport r{g.group(), 0.0, {}, 0.0, false, false, {}};
  r.terms = qepr_terms(g);
  r.qepr_closed = qepr_closed_form(g);
  r.numerical = qepr_numerical(g, rho, grid);
  r.classical_epr = classical_epr(g);
  r.detailed_balance = check_detailed_balance(g, db_tol);
  r.reducible_support = !g.support_generates_group();
  return r;
}

}  // namespace cqms
