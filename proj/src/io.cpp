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

#include "cqms/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "cqms/errors.hpp"

namespace cqms {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw ValidationError("input: " + path + ": " + what);
}

double number_at(const json& v, const std::string& path) {
  if (!v.is_number()) bad(path, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) bad(path, "expected a finite number");
  return d;
}

}  // namespace

ModelInput parse_model(const json& doc) {
  if (!doc.is_object()) bad("$", "expected an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "orders" && key != "alpha" && key != "rho_coeffs") {
      bad("$." + key, "unknown key");
    }
  }
  if (!doc.contains("orders")) bad("$.orders", "missing");
  const json& orders_json = doc.at("orders");
  if (!orders_json.is_array() || orders_json.empty()) {
    bad("$.orders", "expected a non-empty array");
  }
  std::vector<int> orders;
  for (size_t i = 0; i < orders_json.size(); ++i) {
    const std::string path = "$.orders[" + std::to_string(i) + "]";
    const json& v = orders_json[i];
    if (!v.is_number_integer()) bad(path, "expected an integer");
    const long long p = v.get<long long>();
    if (p < 1 || p > kMaxDimension) bad(path, "order out of range");
    orders.push_back(static_cast<int>(p));
  }
  CyclicGroup group = [&] {
    try {
      return CyclicGroup(orders);
    } catch (const ValidationError& e) {
      bad("$.orders", e.what());
    }
  }();

  if (!doc.contains("alpha")) bad("$.alpha", "missing");
  const json& alpha_json = doc.at("alpha");
  if (!alpha_json.is_object()) bad("$.alpha", "expected an object");
  std::vector<double> alpha(group.size(), 0.0);
  for (const auto& [key, value] : alpha_json.items()) {
    const std::string path = "$.alpha[\"" + key + "\"]";
    int g = 0;
    try {
      g = group.parse_label(key);
    } catch (const ValidationError& e) {
      bad(path, e.what());
    }
    alpha[g] = number_at(value, path);
  }
  if (alpha[0] != 0.0) {
    bad("$.alpha[\"" + group.label(0) + "\"]", "identity weight must be 0");
  }
  CycleWeights weights = [&] {
    try {
      return CycleWeights::from(group, alpha);
    } catch (const ValidationError& e) {
      bad("$.alpha", e.what());
    }
  }();

  std::optional<InvariantStateParams> rho;
  if (doc.contains("rho_coeffs")) {
    const json& rj = doc.at("rho_coeffs");
    if (!rj.is_object()) bad("$.rho_coeffs", "expected an object");
    std::vector<Complex> c(group.size(), 0.0);
    c[0] = 1.0 / group.size();
    for (const auto& [key, value] : rj.items()) {
      const std::string path = "$.rho_coeffs[\"" + key + "\"]";
      int g = 0;
      try {
        g = group.parse_label(key);
      } catch (const ValidationError& e) {
        bad(path, e.what());
      }
      if (!value.is_array() || value.size() != 2) {
        bad(path, "expected [re, im]");
      }
      c[g] = Complex(number_at(value[0], path + "[0]"),
                     number_at(value[1], path + "[1]"));
    }
    try {
      rho = InvariantStateParams::from(group, std::move(c));
    } catch (const ValidationError& e) {
      bad("$.rho_coeffs", e.what());
    }
  }
  return ModelInput{std::move(weights), std::move(rho)};
}

ModelInput parse_model_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("input: malformed JSON: ") + e.what());
  }
  return parse_model(doc);
}

ModelInput load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("input: cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_model_text(buf.str());
}

json extended_real(double v) {
  if (std::isinf(v) && v > 0) return "inf";
  return v;
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json real_matrix_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) {
      if (std::abs(m(i, j).imag()) > 1e-12) {
        throw ConsistencyError("real_matrix_json: complex entry");
      }
      row.push_back(m(i, j).real());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const Spectrum& s) {
  json lambda = json::object();
  for (int k = 0; k < s.group.size(); ++k) {
    lambda[s.group.label(k)] = complex_json(s.lambda[k]);
  }
  return json{{"orders", s.group.orders()}, {"lambda", std::move(lambda)}};
}

json to_json(const WeightRatios& r) {
  json q = json::object();
  for (int g = 1; g < r.group.size(); ++g) {
    q[r.group.label(g)] = extended_real(r.q[g]);
  }
  json out{{"ratios", std::move(q)}};
  out["residual"] = r.residual ? json(*r.residual) : json(nullptr);
  return out;
}

json to_json(const EPRReport& r) {
  json terms = json::object();
  for (int g = 1; g < r.group.size(); ++g) {
    terms[r.group.label(g)] = extended_real(r.terms[g]);
  }
  json quotients = json::array();
  for (double v : r.numerical.quotients) quotients.push_back(extended_real(v));
  return json{
      {"qepr_closed", extended_real(r.qepr_closed)},
      {"qepr_numerical", extended_real(r.numerical.value)},
      {"classical_epr", extended_real(r.classical_epr)},
      {"detailed_balance", r.detailed_balance},
      {"terms", std::move(terms)},
      {"numerical",
       {{"t", r.numerical.t},
        {"quotients", std::move(quotients)},
        {"diverged", r.numerical.diverged}}},
      {"reducible_support", r.reducible_support},
  };
}

json to_json(const Cycle& c) { return c.vertices(); }

json to_json(const std::vector<CycleTerm>& terms) {
  json out = json::array();
  for (const CycleTerm& t : terms) {
    json orbits = json::array();
    for (const Cycle& c : t.orbits) orbits.push_back(to_json(c));
    json item{{"label", t.label},
              {"weight", t.weight},
              {"irreducible", t.irreducible()},
              {"orbits", std::move(orbits)}};
    if (t.irreducible()) item["cycle"] = to_json(t.orbits.front());
    out.push_back(std::move(item));
  }
  return out;
}

std::string curve_csv(const std::vector<std::pair<double, double>>& curve) {
  std::ostringstream out;
  out << std::setprecision(17) << "t,S\n";
  for (const auto& [t, s] : curve) out << t << ',' << s << '\n';
  return out.str();
}

}  // namespace cqms
