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

#include "cqms/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "cqms/circulant.hpp"
#include "cqms/entropy.hpp"
#include "cqms/errors.hpp"
#include "cqms/io.hpp"
#include "cqms/qms.hpp"

namespace cqms {

using nlohmann::json;

namespace {

constexpr double kOracleTol = 1e-8;
constexpr double kDefaultDbTol = 1e-10;
constexpr double kDefaultT = 1.0;
const std::vector<double> kDefaultCurve = {0.0, 1e-3, 1e-2, 1e-1, 1.0};

double time_of(const RunConfig& c) {
  const double t = c.t.value_or(kDefaultT);
  if (!std::isfinite(t) || t < 0.0) {
    throw ValidationError("--t must be finite and non-negative");
  }
  return t;
}

void check_grid(const std::vector<double>& grid) {
  for (double t : grid) {
    if (!std::isfinite(t) || t < 0.0) {
      throw ValidationError("--t-grid values must be finite and non-negative");
    }
  }
}

DensityMatrix state_of(const ModelInput& in) {
  if (in.rho) return make_invariant_state(*in.rho);
  return DensityMatrix::maximally_mixed(in.weights.group().size());
}

json weights_table(const CyclicGroup& grp, const std::vector<double>& w) {
  json out = json::object();
  for (int g = 0; g < grp.size(); ++g) out[grp.label(g)] = w[g];
  return out;
}

json choi_json(const CyclicGroup& grp, const ChoiState& s) {
  std::vector<double> ev(s.state.eigenvalues().begin(),
                         s.state.eigenvalues().end());
  std::sort(ev.rbegin(), ev.rend());
  return json{{"weights", weights_table(grp, s.weights)},
              {"eigenvalues", ev},
              {"gram_residual", s.gram_residual},
              {"direct_residual", s.direct_residual}};
}

json invariant_json(const CirculantGenerator& g,
                    const InvariantStateParams& params) {
  const CyclicGroup& grp = params.group();
  const DensityMatrix rho = make_invariant_state(params);
  json coeffs = json::object();
  for (int h = 0; h < grp.size(); ++h) {
    coeffs[grp.label(h)] = complex_json(params.coeffs()[h]);
  }
  return json{
      {"rho_coeffs", std::move(coeffs)},
      {"fourier_eigenvalues", weights_table(grp, params.fourier_eigenvalues())},
      {"stationarity_residual", stationarity_residual(g, rho.matrix())},
      {"adjoint_stationarity_residual",
       stationarity_residual(rho_adjoint(g), rho.matrix())}};
}

std::string dispatch(const RunConfig& c) {
  const ModelInput in = load_model(c.input_path);
  const CirculantGenerator g(in.weights);
  const CyclicGroup& grp = g.group();
  const double db_tol = c.tol.value_or(kDefaultDbTol);
  if (!(db_tol > 0.0)) throw ValidationError("--tol must be positive");
  check_grid(c.t_grid);

  json out;
  if (c.command == "spectrum") {
    out = to_json(spectrum(g.coefficients()));
  } else if (c.command == "evolve") {
    const double t = time_of(c);
    const ComplexMatrix closed = exp_generator(g.coefficients(), t);
    const ComplexMatrix oracle =
        matrix_exponential_oracle(assemble(g.coefficients()), t);
    const double residual = max_abs(closed - oracle);
    if (residual > kOracleTol) {
      std::ostringstream msg;
      msg << "evolve: closed form and dense exponential differ by "
          << residual;
      throw ConsistencyError(msg.str());
    }
    out = json{{"t", t},
               {"matrix", real_matrix_json(closed)},
               {"oracle_residual", residual}};
  } else if (c.command == "choi") {
    const double t = time_of(c);
    const DensityMatrix rho = state_of(in);
    const ChoiState fwd = forward_choi(g, rho, t);
    const ChoiState bwd = backward_choi(g, rho, t);
    const double residual = std::max(fwd.direct_residual, bwd.direct_residual);
    if (residual > kOracleTol) {
      throw ConsistencyError("choi: oracle residual exceeded");
    }
    out = json{{"t", t},
               {"forward", choi_json(grp, fwd)},
               {"backward", choi_json(grp, bwd)},
               {"oracle_residual", residual}};
  } else if (c.command == "qepr") {
    const std::vector<double>& grid =
        c.t_grid.empty() ? kDefaultTGrid : c.t_grid;
    out = to_json(epr_report(g, state_of(in), grid, db_tol));
  } else if (c.command == "epr-classical") {
    out = json{{"classical_epr", extended_real(classical_epr(g))}};
  } else if (c.command == "check-db") {
    out = to_json(weighted_db(g));
    out["detailed_balance"] = check_detailed_balance(g, db_tol);
    out["tol"] = db_tol;
    out["reducible_support"] = !g.support_generates_group();
  } else if (c.command == "invariant-states") {
    if (c.count < 0) throw ValidationError("--count must be non-negative");
    if (in.rho) out["given"] = invariant_json(g, *in.rho);
    std::mt19937_64 rng(c.seed);
    json samples = json::array();
    for (int i = 0; i < c.count; ++i) {
      samples.push_back(invariant_json(g, sample_invariant_params(grp, rng)));
    }
    out["seed"] = c.seed;
    out["samples"] = std::move(samples);
  } else if (c.command == "cycles") {
    out = to_json(cycle_representation(g.kraus()));
  } else if (c.command == "curve") {
    const std::vector<double>& ts = c.t_grid.empty() ? kDefaultCurve : c.t_grid;
    return curve_csv(entropy_curve(g, state_of(in), ts));
  } else {
    throw ValidationError("unknown command " + c.command);
  }
  return out.dump(2) + "\n";
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const std::string text = dispatch(config);
    if (config.output_path.empty()) {
      out << text;
    } else {
      std::ofstream file(config.output_path);
      if (!file) {
        throw ValidationError("cannot write " + config.output_path);
      }
      file << text;
    }
    return 0;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << "\n";
    return 3;
  }
}

int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Circulant quantum Markov semigroups: spectra, Choi states "
               "and entropy production."};
  RunConfig config;
  app.add_option("command", config.command, "Command to run")
      ->required()
      ->check(CLI::IsMember(kCommands));
  app.add_option("input", config.input_path, "Weight table (JSON)")
      ->required();
  app.add_option("--t", config.t, "Time (default 1)");
  app.add_option("--t-grid", config.t_grid,
                 "Comma-separated times: descending for qepr (default "
                 "1e-2,3e-3,1e-3,3e-4,1e-4), ascending for curve (default "
                 "0,1e-3,1e-2,1e-1,1)")
      ->delimiter(',');
  app.add_option("--tol", config.tol, "Detailed-balance tolerance (1e-10)");
  app.add_option("--seed", config.seed, "Sampling seed (0)");
  app.add_option("--count", config.count,
                 "Invariant states to sample (1)");
  app.add_option("--out", config.output_path, "Output file (stdout)");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return run(config, out, err);
}

}  // namespace cqms
