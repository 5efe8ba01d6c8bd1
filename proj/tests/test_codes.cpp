// Copyright 2026 The prmsub Authors
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

#include <gtest/gtest.h>

#include <random>

#include "prmsub/codes.hpp"
#include "prmsub/prm.hpp"

namespace prmsub {
namespace {

Matrix random_matrix(const Field& F, size_t rows, size_t cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<uint32_t> pick(0, F.size() - 1);
  Matrix M(rows, Row(cols));
  for (auto& r : M)
    for (auto& x : r) x = F.from_int(pick(rng));
  return M;
}

// All vectors of F_q^n inside C, found by brute force over F_q^n.
uint64_t count_base_vectors(const LinearCode& C) {
  const Field& F = C.field();
  const auto base = F.subfield_elements(1);
  const size_t n = C.n();
  std::vector<uint32_t> idx(n, 0);
  uint64_t count = 0;
  for (;;) {
    Row v(n);
    for (size_t i = 0; i < n; ++i) v[i] = base[idx[i]];
    count += C.contains(v);
    size_t j = 0;
    while (j < n && ++idx[j] == base.size()) idx[j++] = 0;
    if (j == n) break;
  }
  return count;
}

TEST(LinearAlgebra, RrefRankNullspace) {
  auto F = make_field_for(3, 1);
  Matrix M = {{F->one(), F->one(), FFElem::zero()}, {F->from_int(2), F->from_int(2), FFElem::zero()}};
  EXPECT_EQ(rank_of(*F, M), 1u);
  Matrix K = nullspace(*F, M, 3);
  EXPECT_EQ(K.size(), 2u);
  for (const auto& k : K) {
    FFElem dot = F->add(F->mul(M[0][0], k[0]), F->mul(M[0][1], k[1]));
    EXPECT_TRUE(dot.is_zero());
  }
  Matrix I = {{F->one(), FFElem::zero(), FFElem::zero()},
              {FFElem::zero(), F->one(), FFElem::zero()},
              {FFElem::zero(), FFElem::zero(), F->one()}};
  LinearCode full(F, 1, 3, I, "full");
  EXPECT_EQ(kernel(full).k(), 0u);
  EXPECT_EQ(kernel(LinearCode(F, 1, 3, {}, "zero")).k(), 3u);
}

TEST(LinearAlgebra, KernelIsOrthogonal) {
  std::mt19937_64 rng(3);
  for (auto [q, s] : {std::pair{2u, 2u}, {3u, 2u}, {2u, 3u}}) {
    auto F = make_field_for(q, s);
    for (int t = 0; t < 5; ++t) {
      LinearCode C(F, s, 9, random_matrix(*F, 4, 9, rng), "c");
      LinearCode D = kernel(C);
      EXPECT_EQ(C.k() + D.k(), 9u);
      for (const auto& a : C.gen())
        for (const auto& b : D.gen()) {
          FFElem dot = FFElem::zero();
          for (size_t i = 0; i < 9; ++i) dot = F->add(dot, F->mul(a[i], b[i]));
          EXPECT_TRUE(dot.is_zero());
        }
      EXPECT_EQ(kernel(D), C);
    }
  }
}

TEST(Code, AlphabetAndEquality) {
  auto F = make_field_for(2, 2);
  EXPECT_THROW(LinearCode(F, 1, 2, {{F->alpha(), F->one()}}, "x"), std::invalid_argument);
  EXPECT_THROW(LinearCode(F, 2, 2, {{F->alpha()}}, "x"), std::invalid_argument);
  LinearCode A(F, 2, 2, {{F->alpha(), F->one()}}, "a");
  LinearCode B(F, 2, 2, {{F->one(), F->pow(F->alpha(), 2)}}, "b");
  EXPECT_EQ(A, B);  // same line, different generator
  EXPECT_EQ(A.alphabet_size(), 4u);
  EXPECT_TRUE(A.contains(B));
}

// Both subfield routes against brute force on short random codes.
TEST(Subfield, RoutesMatchBruteForce) {
  std::mt19937_64 rng(5);
  for (auto [q, s] : {std::pair{2u, 2u}, {3u, 2u}, {2u, 3u}}) {
    auto F = make_field_for(q, s);
    for (size_t k : {1u, 3u, 5u, 7u}) {
      LinearCode C(F, s, 8, random_matrix(*F, k, 8, rng), "c");
      LinearCode a = subfield_subcode(C, SubfieldRoute::message);
      LinearCode b = subfield_subcode(C, SubfieldRoute::parity);
      EXPECT_EQ(a, b);
      EXPECT_EQ(a.level(), 1u);
      uint64_t expect = 1;
      for (size_t i = 0; i < a.k(); ++i) expect *= q;
      EXPECT_EQ(count_base_vectors(C), expect);
    }
  }
}

TEST(Subfield, Examples) {
  auto F4 = make_field_for(2, 2);
  EXPECT_EQ(subfield_subcode(prm_code(F4, 2, 1)).k(), 1u);
  Matrix I(5, Row(5, FFElem::zero()));
  for (size_t i = 0; i < 5; ++i) I[i][i] = F4->one();
  EXPECT_EQ(subfield_subcode(LinearCode(F4, 2, 5, I, "full")).k(), 5u);
  auto F16 = make_field_for(2, 4);
  EXPECT_EQ(subfield_subcode(prm_code(F16, 2, 21)).k(), 133u);
}

// C1 inside C2 implies the same for subfield subcodes.
TEST(Subfield, Monotone) {
  auto F = make_field_for(3, 2);
  LinearCode C2 = prm_code(F, 2, 6);
  Matrix half(C2.gen().begin(), C2.gen().begin() + C2.k() / 2);
  LinearCode C1(F, 2, C2.n(), half, "half");
  EXPECT_TRUE(subfield_subcode(C2).contains(subfield_subcode(C1)));
}

TEST(Trace, Examples) {
  auto F = make_field_for(2, 2);
  EXPECT_EQ(trace_code(kernel(prm_code(F, 2, 4))).k(), 10u);
  EXPECT_EQ(trace_code(kernel(prm_code(F, 2, 2))).k(), 19u);
  EXPECT_EQ(trace_code(LinearCode(F, 2, 4, {}, "zero")).k(), 0u);
}

// Tr(C^perp) = (C intersected with F_q^n)^perp.
TEST(Trace, Delsarte) {
  std::mt19937_64 rng(9);
  for (auto [q, s] : {std::pair{2u, 2u}, {3u, 2u}, {2u, 3u}, {4u, 2u}}) {
    auto F = make_field_for(q, s);
    for (size_t k : {2u, 4u, 6u}) {
      LinearCode C(F, s, 10, random_matrix(*F, k, 10, rng), "c");
      EXPECT_EQ(trace_code(kernel(C)), kernel(subfield_subcode(C)));
    }
    for (uint32_t d = 1; d <= 2 * F->order() && F->size() <= 9; ++d) {
      LinearCode C = prm_code(F, 2, d);
      EXPECT_EQ(trace_code(kernel(C)), kernel(subfield_subcode(C))) << "d=" << d;
    }
  }
}

TEST(Galois, Examples) {
  auto F = make_field_for(2, 2);
  // RM_2(2) is not closed: the square of x1 x2 is the reduced x1^2 x2^2
  LinearCode rm22 = rm_code(F, 2, 2);
  PointSet grid = affine_grid(F, 2);
  auto sq = evaluate(SparsePoly::monomial(*F, {2, 2}, F->one()), grid);
  EXPECT_FALSE(rm22.contains(Row(sq.begin(), sq.end())));
  EXPECT_FALSE(is_galois_invariant(rm22));
  EXPECT_TRUE(is_galois_invariant(rm_code(F, 1, 2)));
  EXPECT_FALSE(is_galois_invariant(rm_code(F, 2, 1)));
  EXPECT_TRUE(is_galois_invariant(rm_code(F, 2, 6)));
  EXPECT_FALSE(is_galois_invariant(prm_code(F, 2, 4)));
  Matrix I(4, Row(4, FFElem::zero()));
  for (size_t i = 0; i < 4; ++i) I[i][i] = F->one();
  EXPECT_TRUE(is_galois_invariant(LinearCode(F, 2, 4, I, "full")));
}

}  // namespace
}  // namespace prmsub
