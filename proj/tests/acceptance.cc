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

// Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cqms/circulant.hpp"
#include "cqms/cycles.hpp"
#include "cqms/entropy.hpp"
#include "cqms/errors.hpp"
#include "cqms/linalg.hpp"
#include "cqms/qms.hpp"
#include "oracles.hpp"

using namespace cqms;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

CirculantGenerator random_generator(std::mt19937_64& rng,
                                    const std::vector<int>& orders,
                                    double floor = 0.0) {
  const CyclicGroup g(orders);
  return CirculantGenerator(
      CycleWeights::from(g, oracle::weights(rng, g.size(), floor)));
}

CirculantGenerator symmetrized(const CirculantGenerator& g) {
  const CyclicGroup& grp = g.group();
  std::vector<double> s(grp.size());
  for (int h = 0; h < grp.size(); ++h) {
    s[h] = 0.5 * (g.weights()(h) + g.weights()(grp.negate(h)));
  }
  return CirculantGenerator(CycleWeights::from(grp, s));
}

// 1. Fourier diagonalization of block circulant matrices.
Outcome diagonalization() {
  const auto start = Clock::now();
  std::mt19937_64 rng(101);
  double worst = 0.0;
  int tables = 0;
  for (int p = 2; p <= 8; ++p) {
    for (int q = 2; q <= 8; ++q) {
      const CyclicGroup g({p, q});
      const ComplexMatrix f = group_dft(g).matrix();
      for (int trial = 0; trial < 50; ++trial, ++tables) {
        const CycleWeights w =
            CycleWeights::from(g, oracle::weights(rng, g.size()));
        const Spectrum s = spectrum(w);
        ComplexMatrix d = f * assemble(w) * f.adjoint();
        for (int k = 0; k < g.size(); ++k) d(k, k) -= s.lambda[k];
        worst = std::max(worst, max_abs(d));
      }
    }
  }
  const double secs = seconds_since(start);
  return {worst <= 1e-10 && secs < 10.0,
          "max error " + fmt("%.2e", worst) + " over " +
              std::to_string(tables) + " tables, " + fmt("%.2f", secs) + " s"};
}

// 2. Closed-form semigroup against the dense exponential.
Outcome closed_form_exponential() {
  const auto start = Clock::now();
  std::mt19937_64 rng(102);
  double worst = 0.0;
  for (int p = 2; p <= 5; ++p) {
    for (int q = 2; q <= 5; ++q) {
      const CyclicGroup g({p, q});
      for (int trial = 0; trial < 3; ++trial) {
        const GeneratorCoefficients c = GeneratorCoefficients::from_weights(
            CycleWeights::from(g, oracle::weights(rng, g.size())));
        const ComplexMatrix a = assemble(c);
        for (double t : {0.1, 1.0, 10.0}) {
          worst = std::max(worst, max_abs(exp_generator(c, t) -
                                          matrix_exponential_oracle(a, t)));
        }
      }
    }
  }
  const double secs = seconds_since(start);
  return {worst <= 1e-10 && secs < 10.0,
          "max error " + fmt("%.2e", worst) + ", " + fmt("%.2f", secs) + " s"};
}

// 3. Numerical entropy production against the closed form.
Outcome qepr_theorem() {
  const auto start = Clock::now();
  std::mt19937_64 rng(103);
  const DensityMatrix uniform = DensityMatrix::maximally_mixed(6);
  double worst = 0.0;
  int tables = 0;
  while (tables < 20) {
    const CirculantGenerator g = random_generator(rng, {3, 2}, 0.05);
    if (check_detailed_balance(g, 1e-10)) continue;
    const double closed = qepr_closed_form(g);
    const double num = qepr_numerical(g, uniform).value;
    worst = std::max(worst, std::abs(num - closed) / closed);
    ++tables;
  }
  const CirculantGenerator z3(
      CycleWeights::from(CyclicGroup({3}), {0, 0.75, 0.25}));
  const double z3_closed = qepr_closed_form(z3);
  const double z3_num =
      qepr_numerical(z3, DensityMatrix::maximally_mixed(3)).value;
  const bool literal = std::abs(z3_closed - 0.183102) <= 1e-5;
  const double secs = seconds_since(start);
  std::ostringstream d;
  d << "max relative error " << fmt("%.2e", worst) << " over 20 tables; Z3 "
    << "(0,3/4,1/4): closed " << fmt("%.6f", z3_closed) << ", numerical "
    << fmt("%.6f", z3_num) << ", expected 0.183102 "
    << (literal ? "matched" : "NOT matched") << "; " << fmt("%.2f", secs)
    << " s";
  return {worst <= 1e-4 && literal && secs < 60.0 &&
              std::abs(z3_num - z3_closed) <= 1e-4 * z3_closed,
          d.str()};
}

// 4. Quantum and classical entropy production agree.
Outcome quantum_equals_classical() {
  const auto start = Clock::now();
  std::mt19937_64 rng(104);
  const std::vector<std::vector<int>> groups{{2, 2}, {3, 2}, {3, 5}, {4, 3}};
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const CirculantGenerator g = random_generator(rng, groups[trial % 4]);
    worst = std::max(worst, std::abs(qepr_closed_form(g) - classical_epr(g)));
  }
  const double secs = seconds_since(start);
  return {worst <= 1e-12 && secs < 5.0,
          "max difference " + fmt("%.2e", worst) + " over 200 tables, " +
              fmt("%.2f", secs) + " s"};
}

// 5. Detailed balance, zero entropy production and unit weight ratios are
// the same verdict.
Outcome equivalence() {
  std::mt19937_64 rng(105);
  const std::vector<std::vector<int>> groups{{3, 2}, {4, 3}, {5}, {3, 5}};
  int disagreements = 0, balanced = 0;
  for (int trial = 0; trial < 250; ++trial) {
    CirculantGenerator g = random_generator(rng, groups[trial % 4]);
    if (trial >= 200) g = symmetrized(g);
    const bool db = check_detailed_balance(g, 1e-10);
    const bool zero = qepr_closed_form(g) <= 1e-10;
    const bool ones = weighted_db(g).all_one(1e-10);
    if (db != zero || db != ones) ++disagreements;
    balanced += db;
  }
  return {disagreements == 0,
          std::to_string(disagreements) + " disagreements over 250 tables (" +
              std::to_string(balanced) + " balanced)"};
}

// 6. Invariant states: stationarity for both semigroups, and the entropy
// production seen from them.
Outcome invariant_states() {
  std::mt19937_64 rng(106);
  double worst_stat = 0.0, worst_match = 0.0;
  std::ostringstream d;
  for (const std::vector<int>& orders :
       {std::vector<int>{3, 2}, std::vector<int>{2, 2}, std::vector<int>{3, 3}}) {
    const CyclicGroup grp(orders);
    const CirculantGenerator g = random_generator(rng, orders, 0.05);
    const CirculantGenerator adj = rho_adjoint(g);
    const double uniform =
        qepr_numerical(g, DensityMatrix::maximally_mixed(grp.size())).value;
    for (int i = 0; i < 20; ++i) {
      const DensityMatrix rho =
          make_invariant_state(sample_invariant_params(grp, rng));
      worst_stat = std::max({worst_stat, stationarity_residual(g, rho.matrix()),
                             stationarity_residual(adj, rho.matrix())});
      if (i < 5) {
        worst_match = std::max(
            worst_match, std::abs(qepr_numerical(g, rho).value - uniform));
      }
    }
  }
  d << "stationarity residual " << fmt("%.2e", worst_stat)
    << "; max |qepr(rho) - qepr(uniform)| " << fmt("%.2e", worst_match);
  return {worst_stat <= 1e-10 && worst_match <= 1e-6, d.str()};
}

// 7. Invariant subspaces of the embedded channel.
Outcome subspace_invariance() {
  std::mt19937_64 rng(107);
  const std::vector<std::vector<int>> groups{{3, 2}, {5}, {2, 2}, {4, 3}, {2, 2, 2}};
  int failures = 0, tested = 0;
  for (int trial = 0; trial < 25; ++trial, ++tested) {
    if (!check_invariant_subspaces(random_generator(rng, groups[trial % 5]))) {
      ++failures;
    }
  }
  const CirculantGenerator g = random_generator(rng, {3, 2});
  KrausSet corrupted = g.kraus();
  corrupted.operators[0] = std::sqrt(0.5) * group_dft(g.group()).matrix();
  const bool control_rejected = !check_invariant_subspaces(corrupted, g.group());
  return {failures == 0 && control_rejected,
          std::to_string(tested - failures) + "/" + std::to_string(tested) +
              " generators pass; corrupted control " +
              (control_rejected ? "rejected" : "ACCEPTED")};
}

// 8. Choi states: spectral sum against the direct construction.
Outcome choi_structure() {
  std::mt19937_64 rng(108);
  double worst_direct = 0.0, worst_oracle = 0.0, worst_trace = 0.0;
  double min_eig = 0.0;
  for (const std::vector<int>& orders :
       {std::vector<int>{3, 2}, std::vector<int>{5}, std::vector<int>{2, 2}}) {
    const CyclicGroup grp(orders);
    const CirculantGenerator g = random_generator(rng, orders);
    const DensityMatrix uniform = DensityMatrix::maximally_mixed(grp.size());
    const DensityMatrix other =
        make_invariant_state(sample_invariant_params(grp, rng));
    for (const DensityMatrix* rho : {&uniform, &other}) {
      for (double t : {0.01, 0.5, 2.0}) {
        for (const ChoiState& s :
             {forward_choi(g, *rho, t), backward_choi(g, *rho, t)}) {
          worst_direct = std::max(worst_direct, s.direct_residual);
          worst_trace = std::max(
              worst_trace, std::abs(s.state.matrix().trace() - 1.0));
          min_eig = std::min(
              min_eig, eigen_hermitian(s.state.matrix()).values.minCoeff());
        }
        worst_oracle = std::max(
            worst_oracle,
            max_abs(forward_choi(g, *rho, t).state.matrix() -
                    oracle::choi(orders, g.weights().alpha(), rho->matrix(), t)));
      }
    }
  }
  std::ostringstream d;
  d << "spectral vs direct " << fmt("%.2e", worst_direct) << ", vs dense oracle "
    << fmt("%.2e", worst_oracle) << ", trace error " << fmt("%.2e", worst_trace)
    << ", min eigenvalue " << fmt("%.2e", min_eig);
  return {worst_direct <= 1e-9 && worst_oracle <= 1e-9 && worst_trace <= 1e-10 &&
              min_eig >= -1e-10,
          d.str()};
}

// 9. Product weights: Omega_t against Omega_p(t) (x) Omega_q(t).
Outcome separability() {
  std::mt19937_64 rng(109);
  const CyclicGroup grp({2, 3});
  double worst_product = 0.0, worst_mixture = 0.0;
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<double> ap, aq;
    if (trial % 2 == 0) {
      ap = {0.0, 1.0};
      aq = oracle::simplex(rng, 3);
    } else {
      ap = oracle::simplex(rng, 2);
      aq = oracle::weights(rng, 3);
    }
    std::vector<double> a(6);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 3; ++j) a[i * 3 + j] = ap[i] * aq[j];
    }
    a[0] = 0.0;
    const CirculantGenerator g(CycleWeights::from(grp, a));
    for (double t : {0.1, 1.0}) {
      const SeparabilityReport r = separability_check(g, t);
      worst_product = std::max(worst_product, r.product_residual);
      worst_mixture = std::max(worst_mixture, r.mixture_residual);
    }
  }
  std::ostringstream d;
  d << "max |Omega_t - Omega_p (x) Omega_q| " << fmt("%.2e", worst_product)
    << " (separable mixture residual " << fmt("%.2e", worst_mixture) << ")";
  return {worst_product <= 1e-9, d.str()};
}

// 10. Cycles and passage matrices.
Outcome cycle_algebra() {
  int cycles = 0, six = 0, failures = 0;
  for (int p = 1; p <= 6; ++p) {
    std::vector<int> rest(p - 1);
    std::iota(rest.begin(), rest.end(), 1);
    do {
      std::vector<int> v{0};
      v.insert(v.end(), rest.begin(), rest.end());
      const Cycle c(v);
      const ComplexMatrix m = passage_matrix(c).matrix;
      if (!(cycle_from_permutation(m) == c)) ++failures;
      for (int i = 0; i < p; ++i) {
        if (m(c[i], c[i + 1]) != Complex(1.0, 0.0)) ++failures;
      }
      ++cycles;
      six += p == 6;
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  const int jc0[4][4] = {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}};
  const int jc1[4][4] = {{0, 0, 0, 1}, {0, 0, 1, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}};
  auto exact = [](const ComplexMatrix& m, const int ref[4][4]) {
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        if (m(i, j) != Complex(ref[i][j], 0.0)) return false;
      }
    }
    return true;
  };
  const bool fixtures = exact(passage_matrix(Cycle({0, 1, 2, 3})).matrix, jc0) &&
                        exact(passage_matrix(Cycle({0, 3, 1, 2})).matrix, jc1);
  return {failures == 0 && six == 120 && fixtures,
          std::to_string(cycles) + " cycles (" + std::to_string(six) +
              " on 6 vertices), " + std::to_string(failures) +
              " round-trip failures; fixtures " +
              (fixtures ? "exact" : "MISMATCH")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"diagonalization", diagonalization},
      {"closed-form exponential", closed_form_exponential},
      {"entropy production limit", qepr_theorem},
      {"quantum = classical", quantum_equals_classical},
      {"detailed balance equivalence", equivalence},
      {"invariant states", invariant_states},
      {"subspace invariance", subspace_invariance},
      {"Choi-state structure", choi_structure},
      {"separability", separability},
      {"cycle algebra", cycle_algebra},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
