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

// JSON input for weight tables and JSON/CSV output for reports.
//
// Input: {"orders": [p, q], "alpha": {"i,j": value, ...},
//         "rho_coeffs": {"i,j": [re, im], ...}}
// Omitted alpha keys are 0 and the identity key must be absent or 0.
// rho_coeffs is optional; omitted keys are 0 and the identity defaults to
// 1/|G|.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cqms/circulant.hpp"
#include "cqms/cycles.hpp"
#include "cqms/entropy.hpp"
#include "cqms/qms.hpp"

namespace cqms {

struct ModelInput {
  CycleWeights weights;
  std::optional<InvariantStateParams> rho;
};

/// Throws ValidationError with the key path of the first bad field.
ModelInput parse_model(const nlohmann::json& doc);
ModelInput parse_model_text(std::string_view text);
ModelInput load_model(const std::string& path);

/// Doubles, with +inf written as the string "inf" (JSON has no infinities).
nlohmann::json extended_real(double v);
/// [re, im]
nlohmann::json complex_json(Complex z);
/// Rows of [re, im] pairs.
nlohmann::json matrix_json(const ComplexMatrix& m);
/// Rows of reals; throws ConsistencyError if an entry has an imaginary part
/// above 1e-12.
nlohmann::json real_matrix_json(const ComplexMatrix& m);

nlohmann::json to_json(const Spectrum& s);
nlohmann::json to_json(const WeightRatios& r);
nlohmann::json to_json(const EPRReport& r);
nlohmann::json to_json(const std::vector<CycleTerm>& terms);
nlohmann::json to_json(const Cycle& c);

std::string curve_csv(const std::vector<std::pair<double, double>>& curve);

}  // namespace cqms
