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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cqms {

struct RunConfig {
  std::string command;
  std::string input_path;
  std::optional<double> t;
  std::vector<double> t_grid;
  std::optional<double> tol;
  std::uint64_t seed = 0;
  int count = 1;
  std::string output_path;  // empty: write to the output stream
};

inline const std::vector<std::string> kCommands = {
    "spectrum", "evolve", "choi",   "qepr",  "epr-classical",
    "check-db", "invariant-states", "cycles", "curve"};

/// Exit codes: 0 success, 2 validation error, 3 consistency failure.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and calls run().
int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

}  // namespace cqms
