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

// Universal Groebner basis of the vanishing ideal of P^m, monomial orders,
// multivariate division and the closed-form normal form.

#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "prmsub/fields.hpp"
#include "prmsub/projgeom.hpp"

namespace prmsub {

enum class OrderKind { lex, grlex, grevlex };

inline const char* order_name(OrderKind k) {
  switch (k) {
    case OrderKind::lex: return "lex";
    case OrderKind::grlex: return "grlex";
    case OrderKind::grevlex: return "grevlex";
  }
  return "?";
}

// Variables ranked x0 > x1 > ... > xm.
struct MonomialOrder {
  OrderKind kind = OrderKind::lex;

  bool less(const ExpVec& a, const ExpVec& b) const {
    if (kind != OrderKind::lex) {
      uint32_t da = degree_of(a), db = degree_of(b);
      if (da != db) return da < db;
    }
    if (kind == OrderKind::grevlex) {
      for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i];
      return false;
    }
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

inline const std::pair<const ExpVec, FFElem>& leading_term(const SparsePoly& f, const MonomialOrder& ord) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial has no leading term");
  auto best = f.terms().begin();
  for (auto it = std::next(best); it != f.terms().end(); ++it)
    if (ord.less(best->first, it->first)) best = it;
  return *best;
}

inline bool divides(const ExpVec& a, const ExpVec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

struct GroebnerBasis {
  size_t m = 0;
  std::vector<SparsePoly> generators;  // f0, f1..fm, g1..gm
};

// f0 = x0^2 - x0, fi = xi^(q^s) - xi, gk = (x0-1)...(x_{k-1}-1)(xk^2 - xk)
// for k < m, and gm = (x0-1)...(xm-1).
inline GroebnerBasis groebner_generators(const Field& F, size_t m) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  const size_t nv = m + 1;
  auto x = [&](size_t i) { return SparsePoly::variable(F, nv, i); };
  auto pw = [&](size_t i, uint32_t k) {
    ExpVec e(nv, 0);
    e[i] = k;
    return SparsePoly::monomial(F, e, F.one());
  };
  const SparsePoly one = SparsePoly::constant(F, nv, F.one());
  GroebnerBasis gb;
  gb.m = m;
  gb.generators.push_back(pw(0, 2) - x(0));
  for (size_t i = 1; i <= m; ++i) gb.generators.push_back(pw(i, F.size()) - x(i));
  SparsePoly prefix = one;
  for (size_t k = 1; k <= m; ++k) {
    prefix = prefix * (x(k - 1) - one);
    if (k < m) gb.generators.push_back(prefix * (pw(k, 2) - x(k)));
    else gb.generators.push_back(prefix * (x(k) - one));
  }
  return gb;
}

struct DivisionResult {
  std::vector<SparsePoly> quotients;
  SparsePoly remainder;
};

// Multivariate division; each step reduces by the first generator in list
// order whose leading monomial divides the current leading term.
inline DivisionResult divide(const SparsePoly& f, const std::vector<SparsePoly>& G, const MonomialOrder& ord) {
  const Field& F = f.field();
  std::vector<std::pair<ExpVec, FFElem>> lts;
  for (const auto& g : G) {
    if (g.nvars() != f.nvars()) throw std::invalid_argument("polynomial arity mismatch");
    lts.push_back(leading_term(g, ord));
  }
  DivisionResult res{std::vector<SparsePoly>(G.size(), SparsePoly(F, f.nvars())), SparsePoly(F, f.nvars())};
  SparsePoly p = f;
  ExpVec shift(f.nvars());
  while (!p.is_zero()) {
    auto [lm, lc] = leading_term(p, ord);
    bool reduced = false;
    for (size_t i = 0; i < G.size(); ++i) {
      if (!divides(lts[i].first, lm)) continue;
      for (size_t j = 0; j < shift.size(); ++j) shift[j] = lm[j] - lts[i].first[j];
      FFElem c = F.div(lc, lts[i].second);
      SparsePoly t = SparsePoly::monomial(F, shift, c);
      res.quotients[i] += t;
      p -= t * G[i];
      reduced = true;
      break;
    }
    if (!reduced) {
      res.remainder.add_term(lm, lc);
      SparsePoly t = SparsePoly::monomial(F, lm, lc);
      p -= t;
    }
  }
  return res;
}

inline SparsePoly s_polynomial(const SparsePoly& f, const SparsePoly& g, const MonomialOrder& ord) {
  const Field& F = f.field();
  auto [lf, cf] = leading_term(f, ord);
  auto [lg, cg] = leading_term(g, ord);
  ExpVec l(lf.size()), a(lf.size()), b(lf.size());
  for (size_t i = 0; i < l.size(); ++i) {
    l[i] = std::max(lf[i], lg[i]);
    a[i] = l[i] - lf[i];
    b[i] = l[i] - lg[i];
  }
  return SparsePoly::monomial(F, a, F.inv(cf)) * f - SparsePoly::monomial(F, b, F.inv(cg)) * g;
}

// Every S-pair of the generators reduces to zero modulo the full list.
inline bool verify_buchberger(const Field& F, size_t m, const MonomialOrder& ord) {
  const auto gb = groebner_generators(F, m);
  const auto& G = gb.generators;
  for (size_t i = 0; i < G.size(); ++i)
    for (size_t j = i + 1; j < G.size(); ++j)
      if (!divide(s_polynomial(G[i], G[j], ord), G, ord).remainder.is_zero()) return false;
  return true;
}

// Standard monomials: x1^a1...xm^am, and x0 x1...x_{k-1} times a monomial in
// x_{k+1}..x_m for k = 1..m; all exponents at most q^s-1.
inline std::vector<ExpVec> quotient_basis(const Field& F, size_t m) {
  std::vector<ExpVec> out;
  auto fill_free = [&](ExpVec base, size_t from) {
    size_t k = m + 1 - from;
    std::vector<uint32_t> idx(k, 0);
    for (;;) {
      for (size_t j = 0; j < k; ++j) base[from + j] = idx[j];
      out.push_back(base);
      size_t j = 0;
      while (j < k && ++idx[j] == F.size()) idx[j++] = 0;
      if (j == k) break;
    }
  };
  fill_free(ExpVec(m + 1, 0), 1);
  for (size_t k = 1; k <= m; ++k) {
    ExpVec base(m + 1, 0);
    for (size_t i = 0; i < k; ++i) base[i] = 1;
    fill_free(base, k + 1);
  }
  return out;
}

// Not divisible by any leading monomial of the Groebner basis.
inline bool is_standard(const Field& F, const ExpVec& e) {
  if (e[0] > 1) return false;
  for (size_t i = 1; i < e.size(); ++i)
    if (e[i] > F.order()) return false;
  if (e[0] == 0) return true;
  for (size_t k = 1; k < e.size(); ++k) {
    if (e[k] == 0) return true;
    if (e[k] > 1) return false;
  }
  return false;
}

// Remainder of a monomial modulo I(P^m) in closed form. Exponents are first
// normalized with x0^k = x0 and x^(q^s) = x.
inline SparsePoly normal_form_closed(const Field& F, const ExpVec& mono, size_t m) {
  if (mono.size() != m + 1) throw std::invalid_argument("monomial arity mismatch");
  const size_t nv = m + 1;
  ExpVec a(nv);
  a[0] = mono[0] > 0 ? 1 : 0;
  for (size_t i = 1; i < nv; ++i) a[i] = reduce_exponent(mono[i], F.order());
  if (a[0] == 0 || a[1] == 0) return SparsePoly::monomial(F, a, F.one());
  size_t l = 1;
  while (l < m && a[l + 1] > 0) ++l;
  const SparsePoly one = SparsePoly::constant(F, nv, F.one());
  auto prod = [&](size_t from, size_t to) {
    ExpVec e(nv, 0);
    for (size_t i = from; i <= to && i <= m; ++i) e[i] = a[i];
    return SparsePoly::monomial(F, e, F.one());
  };
  SparsePoly p = l < m ? SparsePoly::variable(F, nv, l) : one;
  for (size_t k = l; k >= 1; --k) p = prod(k, l) + (SparsePoly::variable(F, nv, k - 1) - one) * p;
  return l + 2 <= m ? prod(l + 2, m) * p : p;
}

}  // namespace prmsub
