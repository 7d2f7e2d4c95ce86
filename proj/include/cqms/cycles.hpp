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

// Directed cycles and their passage matrices. A cycle (c(0), ..., c(p-1))
// has passage matrix J_c = sum_i |e_c(i)><e_c(i+1)|, which shifts the basis
// backwards along the cycle: J_c e_c(i) = e_c(i-1).

#include <compare>
#include <vector>

#include "cqms/errors.hpp"
#include "cqms/linalg.hpp"

namespace cqms {

class Cycle {
 public:
  /// Validates distinct non-negative vertices and rotates the smallest
  /// vertex to the front.
  explicit Cycle(std::vector<int> vertices);

  const std::vector<int>& vertices() const { return vertices_; }
  int period() const { return static_cast<int>(vertices_.size()); }
  int operator[](int i) const;  // index taken mod period

  /// True iff the vertices are exactly {0, ..., period - 1}.
  bool is_maximal() const;

  friend bool operator==(const Cycle&, const Cycle&) = default;
  friend auto operator<=>(const Cycle&, const Cycle&) = default;

 private:
  std::vector<int> vertices_;
};

struct PassageMatrix {
  ComplexMatrix matrix;
  Cycle cycle;
};

/// Raised when a permutation splits into more than one orbit.
class ReduciblePermutationError : public ValidationError {
 public:
  explicit ReduciblePermutationError(std::vector<int> orbit_sizes);
  const std::vector<int>& orbit_sizes() const { return orbit_sizes_; }

 private:
  std::vector<int> orbit_sizes_;
};

/// Passage matrix of a maximal cycle on {0, ..., period - 1}.
PassageMatrix passage_matrix(const Cycle& c);

/// Passage matrix of any cycle embedded in dimension `dim`: the 0/1
/// indicator of the cycle's edges.
ComplexMatrix passage_matrix(const Cycle& c, int dim);

/// J_p = sum_j |e_j><e_{j+1}|, the left shift on C^p.
PassageMatrix primary_permutation(int p);

/// perm[i] = the column holding the single 1 of row i. Throws if `m` is not
/// a 0/1 permutation matrix.
std::vector<int> permutation_of(const ComplexMatrix& m);

/// Orbits of the permutation, each traced along row -> column edges and
/// returned in canonical form, sorted by first vertex.
std::vector<Cycle> orbit_decomposition(const ComplexMatrix& m);

bool is_irreducible(const ComplexMatrix& m);

/// The unique maximal cycle whose passage matrix is `m`.
Cycle cycle_from_permutation(const ComplexMatrix& m);

Cycle reverse_cycle(const Cycle& c);

}  // namespace cqms
