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

#include "cqms/cycles.hpp"

#include <algorithm>
#include <sstream>

namespace cqms {

namespace {

constexpr double kEntryTol = 1e-12;

std::string join(const std::vector<int>& xs) {
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < xs.size(); ++i) out << (i ? ", " : "") << xs[i];
  out << "]";
  return out.str();
}

}  // namespace

Cycle::Cycle(std::vector<int> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw ValidationError("Cycle: no vertices");
  std::vector<int> sorted = vertices_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 0) {
    throw ValidationError("Cycle: negative vertex in " + join(vertices_));
  }
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ValidationError("Cycle: repeated vertex in " + join(vertices_));
  }
  std::rotate(vertices_.begin(),
              std::min_element(vertices_.begin(), vertices_.end()),
              vertices_.end());
}

int Cycle::operator[](int i) const {
  const int p = period();
  return vertices_[((i % p) + p) % p];
}

bool Cycle::is_maximal() const {
  return *std::max_element(vertices_.begin(), vertices_.end()) == period() - 1;
}

ReduciblePermutationError::ReduciblePermutationError(
    std::vector<int> orbit_sizes)
    : ValidationError("permutation is reducible: orbit sizes " +
                      join(orbit_sizes)),
      orbit_sizes_(std::move(orbit_sizes)) {}

ComplexMatrix passage_matrix(const Cycle& c, int dim) {
  for (int v : c.vertices()) {
    if (v >= dim) {
      std::ostringstream msg;
      msg << "passage_matrix: vertex " << v << " out of range for dimension "
          << dim;
      throw ValidationError(msg.str());
    }
  }
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (int i = 0; i < c.period(); ++i) m(c[i], c[i + 1]) = 1.0;
  return m;
}

PassageMatrix passage_matrix(const Cycle& c) {
  if (!c.is_maximal()) {
    throw ValidationError("passage_matrix: cycle is not maximal on {0, ..., " +
                          std::to_string(c.period() - 1) + "}");
  }
  return {passage_matrix(c, c.period()), c};
}

PassageMatrix primary_permutation(int p) {
  if (p < 1) throw ValidationError("primary_permutation: p must be positive");
  std::vector<int> v(p);
  for (int i = 0; i < p; ++i) v[i] = i;
  return passage_matrix(Cycle(std::move(v)));
}

std::vector<int> permutation_of(const ComplexMatrix& m) {
  require_square(m, "permutation_of");
  const Index n = m.rows();
  std::vector<int> perm(n, -1);
  std::vector<bool> column_used(n, false);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const Complex z = m(i, j);
      if (std::abs(z) <= kEntryTol) continue;
      if (std::abs(z - 1.0) > kEntryTol || perm[i] != -1 || column_used[j]) {
        std::ostringstream msg;
        msg << "not a 0/1 permutation matrix: offending entry (" << i << ", "
            << j << ")";
        throw ValidationError(msg.str());
      }
      perm[i] = static_cast<int>(j);
      column_used[j] = true;
    }
    if (perm[i] == -1) {
      throw ValidationError("not a 0/1 permutation matrix: row " +
                            std::to_string(i) + " has no unit entry");
    }
  }
  return perm;
}

std::vector<Cycle> orbit_decomposition(const ComplexMatrix& m) {
  const std::vector<int> perm = permutation_of(m);
  std::vector<bool> seen(perm.size(), false);
  std::vector<Cycle> orbits;
  for (size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> orbit;
    for (int v = static_cast<int>(start); !seen[v]; v = perm[v]) {
      seen[v] = true;
      orbit.push_back(v);
    }
    orbits.emplace_back(std::move(orbit));
  }
  return orbits;
}

bool is_irreducible(const ComplexMatrix& m) {
  return orbit_decomposition(m).size() == 1;
}

Cycle cycle_from_permutation(const ComplexMatrix& m) {
  std::vector<Cycle> orbits = orbit_decomposition(m);
  if (orbits.size() != 1) {
    std::vector<int> sizes;
    for (const Cycle& c : orbits) sizes.push_back(c.period());
    throw ReduciblePermutationError(std::move(sizes));
  }
  return orbits.front();
}

Cycle reverse_cycle(const Cycle& c) {
  std::vector<int> v = c.vertices();
  std::reverse(v.begin() + 1, v.end());
  return Cycle(std::move(v));
}

}  // namespace cqms
