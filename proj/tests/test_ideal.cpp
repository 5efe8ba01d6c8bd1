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

#include "prmsub/ideal.hpp"
#include "prmsub/verify.hpp"

namespace prmsub {
namespace {

SparsePoly var(const Field& F, size_t n, size_t i) { return SparsePoly::variable(F, n, i); }
SparsePoly one(const Field& F, size_t n) { return SparsePoly::constant(F, n, F.one()); }
SparsePoly mono(const Field& F, ExpVec e) { return SparsePoly::monomial(F, e, F.one()); }

TEST(Orders, Examples) {
  MonomialOrder lex{OrderKind::lex}, grlex{OrderKind::grlex}, grevlex{OrderKind::grevlex};
  // x0 x2^3 vs x1^2: lex prefers x0, graded prefers degree
  EXPECT_TRUE(lex.less({0, 2, 0}, {1, 0, 3}));
  EXPECT_TRUE(grlex.less({0, 2, 0}, {1, 0, 3}));
  EXPECT_TRUE(lex.less({0, 3, 0}, {1, 0, 0}));
  EXPECT_TRUE(grlex.less({1, 0, 0}, {0, 3, 0}));
  // x0 x2^2 vs x1^3 in degree 3: grlex picks x0 x2^2, grevlex picks x1^3
  EXPECT_TRUE(grlex.less({0, 3, 0}, {1, 0, 2}));
  EXPECT_TRUE(grevlex.less({1, 0, 2}, {0, 3, 0}));
  EXPECT_FALSE(lex.less({1, 1, 1}, {1, 1, 1}));
  EXPECT_STREQ(order_name(OrderKind::grevlex), "grevlex");
}

TEST(Generators, Shapes) {
  auto F = make_field_for(2, 2);
  auto g2 = groebner_generators(*F, 2).generators;
  ASSERT_EQ(g2.size(), 5u);
  auto l = [&](size_t i) { return var(*F, 3, i) - one(*F, 3); };
  EXPECT_EQ(g2.back(), l(0) * l(1) * l(2));
  EXPECT_EQ(groebner_generators(*F, 3).generators.size(), 7u);
  auto g1 = groebner_generators(*F, 1).generators;
  ASSERT_EQ(g1.size(), 3u);
  EXPECT_EQ(g1[0], mono(*F, {2, 0}) - var(*F, 2, 0));
  EXPECT_EQ(g1[1], mono(*F, {0, 4}) - var(*F, 2, 1));
  EXPECT_EQ(g1[2], (var(*F, 2, 0) - one(*F, 2)) * (var(*F, 2, 1) - one(*F, 2)));
  EXPECT_THROW(groebner_generators(*F, 0), std::invalid_argument);
}

TEST(Quotient, Counts) {
  auto F = make_field_for(2, 2);
  EXPECT_EQ(quotient_basis(*F, 2).size(), 21u);
  auto q1 = quotient_basis(*F, 1);
  std::sort(q1.begin(), q1.end());
  EXPECT_EQ(q1, (std::vector<ExpVec>{{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 0}}));
  for (auto [q, s] : {std::pair{2u, 3u}, {3u, 2u}})
    for (size_t m = 1; m <= 3; ++m) {
      auto G = make_field_for(q, s);
      EXPECT_EQ(quotient_basis(*G, m).size(), projective_length(G->size(), m));
      for (const auto& e : quotient_basis(*G, m)) EXPECT_TRUE(is_standard(*G, e));
    }
}

TEST(Division, Examples) {
  auto F = make_field_for(2, 2);
  auto G = groebner_generators(*F, 2).generators;
  for (OrderKind k : kAllOrders) {
    MonomialOrder ord{k};
    SparsePoly f(*F, 3);
    for (const auto& e : quotient_basis(*F, 2)) f.add_term(e, F->alpha());
    EXPECT_EQ(divide(f, G, ord).remainder, f);
    for (const auto& g : G) EXPECT_TRUE(divide(g, G, ord).remainder.is_zero());
    EXPECT_EQ(divide(mono(*F, {2, 1, 1}), G, ord).remainder, normal_form_closed(*F, {2, 1, 1}, 2));
  }
}

// f = sum q_i g_i + r, and no term of r is divisible by a leading monomial.
TEST(Division, Identity) {
  auto F = make_field_for(3, 2);
  auto G = groebner_generators(*F, 2).generators;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<uint32_t> ex(0, 12), co(0, 8);
  for (OrderKind k : kAllOrders) {
    MonomialOrder ord{k};
    for (int trial = 0; trial < 20; ++trial) {
      SparsePoly f(*F, 3);
      for (int t = 0; t < 5; ++t) f.add_term({ex(rng) % 4, ex(rng), ex(rng)}, F->from_int(co(rng)));
      auto res = divide(f, G, ord);
      SparsePoly back = res.remainder;
      for (size_t i = 0; i < G.size(); ++i) back += res.quotients[i] * G[i];
      EXPECT_EQ(back, f);
      for (const auto& [e, c] : res.remainder.terms())
        for (const auto& g : G) EXPECT_FALSE(divides(leading_term(g, ord).first, e));
    }
  }
}

TEST(Buchberger, Examples) {
  auto F = make_field_for(2, 2);
  EXPECT_TRUE(verify_buchberger(*F, 2, MonomialOrder{OrderKind::lex}));
  EXPECT_TRUE(verify_buchberger(*F, 3, MonomialOrder{OrderKind::grevlex}));
  auto G = groebner_generators(*F, 2).generators;
  for (const auto& g : G) EXPECT_TRUE(s_polynomial(g, g, MonomialOrder{OrderKind::lex}).is_zero());
  // without the last generator the list is no longer a Groebner basis: that
  // ideal member leaves a nonzero remainder
  MonomialOrder lex{OrderKind::lex};
  std::vector<SparsePoly> H(G.begin(), G.end() - 1);
  EXPECT_FALSE(divide(G.back(), H, lex).remainder.is_zero());
}

TEST(NormalForm, Examples) {
  auto F = make_field_for(2, 3);
  auto x0 = var(*F, 3, 0), x1 = var(*F, 3, 1), x2 = var(*F, 3, 2);
  auto o = one(*F, 3);
  EXPECT_EQ(normal_form_closed(*F, {1, 1, 1}, 2), x1 * x2 + (x0 - o) * (x2 + x1 - o));
  EXPECT_EQ(normal_form_closed(*F, {1, 0, 5}, 2), mono(*F, {1, 0, 5}));
  EXPECT_EQ(normal_form_closed(*F, {3, 0, 9}, 2), mono(*F, {1, 0, 2}));
  auto G3 = groebner_generators(*F, 3).generators;
  for (OrderKind k : kAllOrders)
    EXPECT_EQ(normal_form_closed(*F, {1, 1, 1, 1}, 3), divide(mono(*F, {1, 1, 1, 1}), G3, MonomialOrder{k}).remainder);
  EXPECT_THROW(normal_form_closed(*F, {1, 1}, 2), std::invalid_argument);
}

TEST(Suite, SmallInstancesPass) {
  auto F = make_field_for(2, 2);
  for (size_t m = 1; m <= 2; ++m)
    for (const auto& c : verify_groebner(F, m)) EXPECT_TRUE(c.passed) << c.name << " " << c.detail;
  for (const auto& c : verify_groebner(F, 3, 300, 11)) EXPECT_TRUE(c.passed) << c.name << " " << c.detail;
}

}  // namespace
}  // namespace prmsub
