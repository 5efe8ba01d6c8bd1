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

// Property checks comparing the explicit constructions against the
// linear-algebra route, and the Groebner basis facts.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "prmsub/codes.hpp"
#include "prmsub/ideal.hpp"
#include "prmsub/prm.hpp"

namespace prmsub {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

using CheckList = std::vector<CheckResult>;

inline bool all_passed(const CheckList& c) {
  for (const auto& r : c)
    if (!r.passed) return false;
  return true;
}

// Plane checks at one degree: bases against the oracle, dimension formulas,
// membership in F_q and in PRM_d, the simplified variant and Delsarte.
inline CheckList verify_plane_degree(const PlaneContext& P, uint32_t d) {
  const FieldCtx& F = P.field_ctx();
  const std::string tag = " [d=" + std::to_string(d) + "]";
  CheckList out;
  auto add = [&](std::string name, bool ok, std::string detail = "") {
    out.push_back({std::move(name) + tag, ok, std::move(detail)});
  };
  LinearCode prm = prm_code(F, 2, d);
  LinearCode C = subfield_subcode(prm);
  LinearCode Cd = kernel(C);
  BasisSet B = P.build_B(d), D = P.build_D(d), Bs = P.build_B(d, BasisVariant::simplified);
  LinearCode EB = P.evaluate_basis(B, "B"), ED = P.evaluate_basis(D, "D");
  const uint64_t n = P.length(), kp = P.dim_primary(d), kd = P.dim_dual(d);
  add("span(B) equals the subfield subcode", EB == C);
  add("B is linearly independent", EB.k() == B.size(), std::to_string(EB.k()) + " of " + std::to_string(B.size()));
  add("span(D) equals the dual of the subfield subcode", ED == Cd);
  add("D is linearly independent", ED.k() == D.size(), std::to_string(ED.k()) + " of " + std::to_string(D.size()));
  add("|B| + |D| = n", B.size() + D.size() == n,
      std::to_string(B.size()) + " + " + std::to_string(D.size()) + " vs " + std::to_string(n));
  add("primary dimension formula matches rank", kp == C.k(), std::to_string(kp) + " vs " + std::to_string(C.k()));
  add("dual dimension formula matches rank", kd == Cd.k(), std::to_string(kd) + " vs " + std::to_string(Cd.k()));
  bool base = true, inside = true;
  for (const auto& f : B.all()) {
    base = base && evaluates_to_base(F, f);
    auto v = evaluate(f, P.points());
    inside = inside && prm.contains(Row(v.begin(), v.end()));
  }
  add("every B member evaluates to F_q", base);
  add("every B member lies in PRM_d", inside);
  add("simplified variant spans the same code", P.evaluate_basis(Bs, "B'") == C && Bs.size() == B.size());
  add("trace of the dual equals the dual of the subfield subcode", trace_code(kernel(prm)) == Cd);
  // the common zero at [0:0:1] is the last standard representative
  SparsePoly g = (SparsePoly::variable(*F, 3, 0) - SparsePoly::constant(*F, 3, F->one())) *
                 (SparsePoly::variable(*F, 3, 1) - SparsePoly::constant(*F, 3, F->one()));
  auto gv = evaluate(g, P.points());
  bool zero_coord = true;
  for (const auto& r : C.gen()) zero_coord = zero_coord && r.back().is_zero();
  add("(x0-1)(x1-1) in span(D) iff [0:0:1] is a common zero", ED.contains(Row(gv.begin(), gv.end())) == zero_coord);
  return out;
}

inline constexpr OrderKind kAllOrders[] = {OrderKind::lex, OrderKind::grlex, OrderKind::grevlex};

// Leading monomials x0^2, xi^(q^s), x0 x1^2, x0 x1 x2^2, ..., x0 x1 ... xm.
inline std::vector<ExpVec> expected_initial_monomials(const Field& F, size_t m) {
  std::vector<ExpVec> out;
  ExpVec e(m + 1, 0);
  e[0] = 2;
  out.push_back(e);
  for (size_t i = 1; i <= m; ++i) {
    ExpVec x(m + 1, 0);
    x[i] = F.size();
    out.push_back(x);
  }
  for (size_t k = 1; k <= m; ++k) {
    ExpVec x(m + 1, 0);
    for (size_t i = 0; i < k; ++i) x[i] = 1;
    x[k] = k < m ? 2 : 1;
    out.push_back(x);
  }
  return out;
}

// Groebner facts on P^m. Normal forms are checked on every monomial of
// degree <= 2(q^s-1), or on `samples` random ones when samples > 0.
inline CheckList verify_groebner(const FieldCtx& F, size_t m, size_t samples = 0, uint64_t seed = 1) {
  const std::string tag = " [m=" + std::to_string(m) + " " + F->name() + "]";
  CheckList out;
  auto add = [&](std::string name, bool ok, std::string detail = "") {
    out.push_back({std::move(name) + tag, ok, std::move(detail)});
  };
  const auto gb = groebner_generators(*F, m);
  const PointSet pts = standard_representatives(F, m);
  const auto ini = expected_initial_monomials(*F, m);
  for (OrderKind k : kAllOrders) {
    MonomialOrder ord{k};
    add(std::string("S-polynomials reduce to zero (") + order_name(k) + ")", verify_buchberger(*F, m, ord));
    bool lm_ok = gb.generators.size() == ini.size();
    for (size_t i = 0; lm_ok && i < ini.size(); ++i) lm_ok = leading_term(gb.generators[i], ord).first == ini[i];
    add(std::string("leading monomials generate the initial ideal (") + order_name(k) + ")", lm_ok);
  }
  bool vanish = true;
  for (const auto& g : gb.generators)
    for (FFElem x : evaluate(g, pts)) vanish = vanish && x.is_zero();
  add("generators vanish on P^m", vanish);
  const auto qb = quotient_basis(*F, m);
  bool standard = true;
  for (const auto& e : qb)
    for (const auto& l : ini) standard = standard && !divides(l, e);
  add("quotient basis has n standard monomials", qb.size() == pts.size() && standard,
      std::to_string(qb.size()) + " vs " + std::to_string(pts.size()));
  Matrix ev;
  for (const auto& e : qb) {
    auto v = evaluate(SparsePoly::monomial(*F, e, F->one()), pts);
    ev.emplace_back(v.begin(), v.end());
  }
  add("quotient basis evaluations have rank n", rank_of(*F, std::move(ev)) == pts.size());

  std::vector<ExpVec> monos;
  const uint32_t maxdeg = 2 * F->order();
  if (samples == 0) {
    for (uint32_t t = 0; t <= maxdeg; ++t)
      for (auto& e : detail::monomials_of_degree(m + 1, t)) monos.push_back(std::move(e));
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<uint32_t> pick(0, maxdeg);
    while (monos.size() < samples) {
      ExpVec e(m + 1);
      for (auto& x : e) x = pick(rng);
      if (degree_of(e) <= maxdeg) monos.push_back(std::move(e));
    }
  }
  bool by_division = true, by_eval = true, supported = true;
  std::string first_bad;
  for (const auto& e : monos) {
    SparsePoly nf = normal_form_closed(*F, e, m);
    SparsePoly mono = SparsePoly::monomial(*F, e, F->one());
    for (OrderKind k : kAllOrders)
      if (!(divide(mono, gb.generators, MonomialOrder{k}).remainder == nf)) {
        by_division = false;
        if (first_bad.empty()) first_bad = SparsePoly::monomial(*F, e, F->one()).to_string();
      }
    if (evaluate(mono, pts) != evaluate(nf, pts)) by_eval = false;
    for (const auto& [x, c] : nf.terms()) supported = supported && is_standard(*F, x);
  }
  const std::string count = std::to_string(monos.size()) + (samples ? " random" : "") + " monomials";
  add("closed normal form equals the division remainder (all orders)", by_division,
      first_bad.empty() ? count : "first mismatch " + first_bad);
  add("closed normal form has the same evaluation", by_eval, count);
  add("closed normal form uses standard monomials only", supported, count);
  return out;
}

// Any m at one degree: trace generators against the oracle, and Delsarte.
inline CheckList verify_general_degree(const FieldCtx& F, uint32_t m, uint32_t d) {
  const std::string tag = " [m=" + std::to_string(m) + " d=" + std::to_string(d) + "]";
  CheckList out;
  bool cross = true;
  std::string detail;
  try {
    subfield_subcode_general(F, m, d, true);
  } catch (const std::logic_error& e) {
    cross = false;
    detail = e.what();
  }
  out.push_back({"trace generators span the dual of the subfield subcode" + tag, cross, detail});
  LinearCode prm = prm_code(F, m, d);
  out.push_back({"trace of the dual equals the dual of the subfield subcode" + tag,
                 trace_code(kernel(prm)) == kernel(subfield_subcode(prm)), ""});
  return out;
}

}  // namespace prmsub
