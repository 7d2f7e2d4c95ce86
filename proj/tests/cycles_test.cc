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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"

using namespace cqms;

namespace {

ComplexMatrix ones_at(int n, std::initializer_list<std::pair<int, int>> at) {
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (auto [r, c] : at) m(r, c) = 1.0;
  return m;
}

ComplexVector e(int n, int i) {
  ComplexVector v = ComplexVector::Zero(n);
  v(i) = 1.0;
  return v;
}

}  // namespace

TEST(cycles, canonical_rotation) {
  EXPECT_EQ(Cycle({2, 0, 1}).vertices(), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(Cycle({3, 1, 2, 0}).vertices(), (std::vector<int>{0, 3, 1, 2}));
  EXPECT_EQ(Cycle({5, 7}), Cycle({7, 5}));
  EXPECT_EQ(Cycle({0, 3, 1, 2})[5], 3);
  EXPECT_TRUE(Cycle({1, 0, 2}).is_maximal());
  EXPECT_FALSE(Cycle({0, 2}).is_maximal());
}

TEST(cycles, invalid_cycles) {
  EXPECT_THROW(Cycle({}), ValidationError);
  EXPECT_THROW(Cycle({0, 1, 0}), ValidationError);
  EXPECT_THROW(Cycle({0, -1}), ValidationError);
  EXPECT_THROW(passage_matrix(Cycle({0, 2})), ValidationError);
}

TEST(cycles, passage_matrix_fixtures) {
  EXPECT_EQ(passage_matrix(Cycle({0, 1, 2, 3})).matrix,
            ones_at(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
  EXPECT_EQ(passage_matrix(Cycle({0, 3, 1, 2})).matrix,
            ones_at(4, {{0, 3}, {3, 1}, {1, 2}, {2, 0}}));
  EXPECT_EQ(passage_matrix(Cycle({0})).matrix, ComplexMatrix::Identity(1, 1));
}

TEST(cycles, general_passage_matrix) {
  EXPECT_EQ(passage_matrix(Cycle({1, 3}), 5), ones_at(5, {{1, 3}, {3, 1}}));
  EXPECT_THROW(passage_matrix(Cycle({1, 5}), 5), ValidationError);
}

TEST(cycles, primary_permutation) {
  EXPECT_EQ(primary_permutation(4).matrix,
            passage_matrix(Cycle({0, 1, 2, 3})).matrix);
  EXPECT_EQ(primary_permutation(1).matrix, ComplexMatrix::Identity(1, 1));
  const ComplexMatrix j5 = primary_permutation(5).matrix;
  ComplexMatrix power = ComplexMatrix::Identity(5, 5);
  for (int k = 0; k < 5; ++k) power = power * j5;
  EXPECT_EQ(power, ComplexMatrix::Identity(5, 5));
  EXPECT_EQ(j5, oracle::shift(5));
}

TEST(cycles, from_permutation_fixtures) {
  const ComplexMatrix jc1 = ones_at(4, {{0, 3}, {1, 2}, {2, 0}, {3, 1}});
  EXPECT_EQ(cycle_from_permutation(jc1), Cycle({0, 3, 1, 2}));

  try {
    cycle_from_permutation(ComplexMatrix::Identity(2, 2));
    FAIL() << "identity is reducible";
  } catch (const ReduciblePermutationError& err) {
    EXPECT_EQ(err.orbit_sizes(), (std::vector<int>{1, 1}));
  }

  const ComplexMatrix j5 = primary_permutation(5).matrix;
  const ComplexMatrix j5sq = j5 * j5;
  const Cycle c = cycle_from_permutation(j5sq);
  EXPECT_EQ(c, Cycle({0, 2, 4, 1, 3}));
  EXPECT_EQ(passage_matrix(c).matrix, j5sq);
}

TEST(cycles, rejects_non_permutations) {
  ComplexMatrix m = ComplexMatrix::Identity(3, 3);
  m(0, 1) = 1.0;
  EXPECT_THROW(cycle_from_permutation(m), ValidationError);
  EXPECT_THROW(is_irreducible(0.5 * ComplexMatrix::Identity(2, 2)),
               ValidationError);
  EXPECT_THROW(permutation_of(ComplexMatrix::Zero(2, 3)), ValidationError);
}

TEST(cycles, irreducibility) {
  EXPECT_TRUE(is_irreducible(primary_permutation(4).matrix));
  EXPECT_FALSE(is_irreducible(ComplexMatrix::Identity(3, 3)));
  ComplexMatrix blocks = ComplexMatrix::Zero(4, 4);
  blocks.block(0, 0, 2, 2) = oracle::shift(2);
  blocks.block(2, 2, 2, 2) = oracle::shift(2);
  EXPECT_FALSE(is_irreducible(blocks));
  EXPECT_EQ(orbit_decomposition(blocks).size(), 2u);
}

TEST(cycles, powers_of_primary_permutation) {
  for (int p : {2, 3, 5, 7}) {
    const ComplexMatrix j = primary_permutation(p).matrix;
    ComplexMatrix power = j;
    for (int k = 1; k < p; ++k, power = power * j) {
      EXPECT_TRUE(is_irreducible(power)) << p << " " << k;
    }
  }
  const ComplexMatrix j4 = primary_permutation(4).matrix;
  EXPECT_FALSE(is_irreducible(j4 * j4));
}

TEST(cycles, reverse) {
  EXPECT_EQ(reverse_cycle(Cycle({0, 1, 2, 3})), Cycle({0, 3, 2, 1}));
  EXPECT_EQ(reverse_cycle(Cycle({4})), Cycle({4}));
  std::mt19937_64 rng(2);
  std::vector<int> v(7);
  std::iota(v.begin(), v.end(), 0);
  for (int trial = 0; trial < 50; ++trial) {
    std::shuffle(v.begin(), v.end(), rng);
    const Cycle c(v);
    EXPECT_EQ(reverse_cycle(reverse_cycle(c)), c);
    EXPECT_EQ(passage_matrix(reverse_cycle(c)).matrix,
              passage_matrix(c).matrix.transpose());
  }
}

TEST(cycles, round_trip_and_left_shift_up_to_8) {
  for (int p = 1; p <= 8; ++p) {
    std::vector<int> rest(p - 1);
    std::iota(rest.begin(), rest.end(), 1);
    int count = 0;
    do {
      std::vector<int> v{0};
      v.insert(v.end(), rest.begin(), rest.end());
      const Cycle c(v);
      const ComplexMatrix m = passage_matrix(c).matrix;
      ASSERT_EQ(cycle_from_permutation(m), c);
      for (int i = 0; i < p; ++i) {
        ASSERT_EQ(m * e(p, c[i]), e(p, c[i - 1 + p]));
      }
      ++count;
    } while (std::next_permutation(rest.begin(), rest.end()));
    int expect = 1;
    for (int k = 2; k < p; ++k) expect *= k;
    EXPECT_EQ(count, expect);
  }
}
