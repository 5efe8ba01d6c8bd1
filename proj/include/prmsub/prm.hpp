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

// Projective and affine Reed-Muller codes, their subfield subcodes, and the
// explicit trace bases of the subfield subcode and its dual on the plane.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "prmsub/codes.hpp"
#include "prmsub/cyclo.hpp"
#include "prmsub/fields.hpp"
#include "prmsub/ideal.hpp"
#include "prmsub/projgeom.hpp"

namespace prmsub {

struct PrmParams {
  uint32_t q = 2, s = 1, m = 2, d = 1;

  uint64_t big_q() const {
    uint64_t r = 1;
    for (uint32_t i = 0; i < s; ++i) r *= q;
    return r;
  }
  uint64_t length() const { return projective_length(big_q(), m); }
  int64_t dual_degree() const { return int64_t{m} * int64_t(big_q() - 1) - d; }
};

namespace detail {

// All exponent vectors of length nv with total degree exactly d (first
// coordinate most significant, descending).
inline std::vector<ExpVec> monomials_of_degree(size_t nv, uint32_t d) {
  std::vector<ExpVec> out;
  ExpVec e(nv, 0);
  auto rec = [&](auto&& self, size_t i, uint32_t left) -> void {
    if (i + 1 == nv) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (uint32_t k = left + 1; k-- > 0;) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  if (nv == 0) return out;
  rec(rec, 0, d);
  return out;
}

inline ExpVec reduced_projective(const Field& F, const ExpVec& e) {
  ExpVec r(e.size());
  r[0] = e[0] > 0 ? 1 : 0;
  for (size_t i = 1; i < e.size(); ++i) r[i] = reduce_exponent(e[i], F.order());
  return r;
}

inline Row eval_monomial(const Field& F, const ExpVec& e, const PointSet& pts) {
  auto v = evaluate(SparsePoly::monomial(F, e, F.one()), pts);
  return Row(v.begin(), v.end());
}

}  // namespace detail

// PRM_d(m) over F_{q^s}: evaluations of degree-d monomials at P^m.
inline LinearCode prm_code(const FieldCtx& F, uint32_t m, uint32_t d) {
  if (d < 1 || uint64_t{d} > uint64_t{m} * F->order())
    throw std::out_of_range("degree must lie in 1..m(q^s-1)");
  PointSet pts = standard_representatives(F, m);
  std::map<ExpVec, bool> seen;
  Matrix rows;
  for (const auto& e : detail::monomials_of_degree(m + 1, d)) {
    ExpVec r = detail::reduced_projective(*F, e);
    if (!seen.emplace(r, true).second) continue;
    rows.push_back(detail::eval_monomial(*F, r, pts));
  }
  return LinearCode(F, F->s(), pts.size(), std::move(rows),
                    "PRM_" + std::to_string(d) + "(" + std::to_string(m) + ")");
}

// RM_d(m) over F_{q^s}: evaluations of monomials of degree <= d on the grid.
inline LinearCode rm_code(const FieldCtx& F, uint32_t m, uint32_t d) {
  PointSet pts = affine_grid(F, m);
  std::map<ExpVec, bool> seen;
  Matrix rows;
  for (uint32_t t = 0; t <= d; ++t)
    for (const auto& e : detail::monomials_of_degree(m, t)) {
      ExpVec r(e.size());
      for (size_t i = 0; i < e.size(); ++i) r[i] = reduce_exponent(e[i], F->order());
      if (!seen.emplace(r, true).second) continue;
      rows.push_back(detail::eval_monomial(*F, r, pts));
    }
  return LinearCode(F, F->s(), pts.size(), std::move(rows),
                    "RM_" + std::to_string(d) + "(" + std::to_string(m) + ")");
}

// Basis of the subfield subcode of RM_d(m): T_a(xi_a^r x^a) for every minimal
// set inside the stratum of degree <= d.
inline std::vector<SparsePoly> rm_affine_basis(const CycTable& T, uint32_t d) {
  const Field& F = T.field();
  std::vector<SparsePoly> out;
  for (const auto& a : T.sets()) {
    if (!delta_classify(F, a, d).subset_le) continue;
    FFElem xi = F.primitive_with_nonzero_trace(a.n_a);
    for (uint32_t r = 0; r < a.n_a; ++r)
      out.push_back(trace_poly(F, a, F.pow(xi, r), ExpVec(a.min_rep.begin(), a.min_rep.end())));
  }
  return out;
}

inline Matrix evaluation_rows(const std::vector<SparsePoly>& polys, const PointSet& pts) {
  Matrix rows;
  for (const auto& f : polys) {
    auto v = evaluate(f, pts);
    rows.emplace_back(v.begin(), v.end());
  }
  return rows;
}

struct BasisPart {
  std::string label;
  std::string note;
  std::vector<SparsePoly> members;
};

struct BasisSet {
  std::vector<BasisPart> parts;

  size_t size() const {
    size_t n = 0;
    for (const auto& p : parts) n += p.members.size();
    return n;
  }
  const BasisPart& part(const std::string& label) const {
    for (const auto& p : parts)
      if (p.label == label) return p;
    throw std::out_of_range("no basis part " + label);
  }
  std::vector<SparsePoly> all() const {
    std::vector<SparsePoly> out;
    for (const auto& p : parts) out.insert(out.end(), p.members.begin(), p.members.end());
    return out;
  }
};

enum class MaClass { empty, all_x0, none_x0, two_types };

inline const char* ma_class_name(MaClass c) {
  switch (c) {
    case MaClass::empty: return "empty";
    case MaClass::all_x0: return "all_x0";
    case MaClass::none_x0: return "none_x0";
    case MaClass::two_types: return "two_types";
  }
  return "?";
}

enum class BasisVariant { standard, simplified };

struct SetFamilies {
  uint32_t d = 0, d_perp = 0;
  std::vector<ZqsVec> U;                            // minimal reps, nonempty at d_perp
  std::vector<uint32_t> V;                          // univariate minimal reps
  std::vector<uint32_t> A1_le;                      // univariate sets inside degree <= d
  std::vector<uint32_t> Y;
  std::map<uint32_t, std::vector<ZqsVec>> Y_map;    // keyed by a2 in A1_le
  std::map<uint32_t, std::vector<ZqsVec>> Yprime_map;
};

// Plane constructions for fixed (q, s): cyclotomic tables, points and the
// bases of the subfield subcode of PRM_d(2) and of its dual.
class PlaneContext {
 public:
  explicit PlaneContext(FieldCtx F)
      : F_(std::move(F)), T2_(F_, 2), T1_(F_, 1), pts_(standard_representatives(F_, 2)) {}

  const Field& field() const { return *F_; }
  const FieldCtx& field_ctx() const { return F_; }
  const CycTable& sets2() const { return T2_; }
  const CycTable& sets1() const { return T1_; }
  const PointSet& points() const { return pts_; }
  uint64_t length() const { return pts_.size(); }

  void check_degree(uint32_t d) const {
    if (d < 1) throw std::out_of_range("degree must be at least 1");
    if (d > 2 * F_->order())
      throw std::out_of_range("for d > 2(q^s-1) the code PRM_d(2) is the whole space; nothing to construct");
  }

  // Type of the monomials of degree d whose reduced exponents lie in I_a.
  MaClass classify_Ma(const CycSet& a, uint32_t d) const {
    DeltaFlags f = delta_classify(*F_, a, d);
    if (!f.meets_le) return MaClass::empty;
    bool with_x0 = f.meets_lt, without_x0 = f.meets_d || f.meets_dbar;
    if (with_x0 && without_x0) return MaClass::two_types;
    if (with_x0) return MaClass::all_x0;
    if (!without_x0) throw std::logic_error("nonempty monomial class without a type");
    return MaClass::none_x0;
  }

  // The monomials x0^b0 x1^b1 x2^b2 of degree d with reduced (b1, b2) in I_a.
  std::vector<ExpVec> materialize_Ma(const CycSet& a, uint32_t d) const {
    std::vector<ExpVec> out;
    for (const auto& e : detail::monomials_of_degree(3, d))
      if (a.contains({overline(*F_, e[1]), overline(*F_, e[2])})) out.push_back(e);
    return out;
  }

  FFElem xi(uint32_t n) const { return F_->primitive_with_nonzero_trace(n); }

  SetFamilies build_sets(uint32_t d) const {
    check_degree(d);
    const uint32_t ord = F_->order();
    SetFamilies S;
    S.d = d;
    S.d_perp = 2 * ord - d;
    for (const auto& a : T2_.sets())
      if (classify_Ma(a, S.d_perp) != MaClass::empty) S.U.push_back(a.min_rep);
    const uint32_t dp_bar = overline(*F_, S.d_perp);
    for (const auto& b : T1_.sets()) {
      uint32_t a2 = b.min_rep[0];
      if (T1_.same_set({a2}, {dp_bar})) continue;
      for (const auto& c : T2_.sets())
        if (c.min_rep[1] == a2 && classify_Ma(c, S.d_perp) == MaClass::two_types) {
          S.V.push_back(a2);
          break;
        }
    }
    const uint32_t d_bar = overline(*F_, d);
    for (const auto& b : T1_.sets()) {
      if (!std::all_of(b.elements.begin(), b.elements.end(), [&](const ZqsVec& c) { return c[0] <= d; })) continue;
      uint32_t a2 = b.min_rep[0];
      S.A1_le.push_back(a2);
      auto& ym = S.Y_map[a2];
      auto& yp = S.Yprime_map[a2];
      for (const auto& c2 : b.elements) {
        const CycSet& c = T2_.set_of({overline(*F_, d - c2[0]), c2[0]});
        DeltaFlags f = delta_classify(*F_, c, d);
        if (!f.subset_le || std::find(ym.begin(), ym.end(), c.min_rep) != ym.end()) continue;
        ym.push_back(c.min_rep);
        if (!f.subset_lt) yp.push_back(c.min_rep);
      }
      auto by_order = [](const ZqsVec& x, const ZqsVec& y) { return order_lt(x, y); };
      std::sort(ym.begin(), ym.end(), by_order);
      std::sort(yp.begin(), yp.end(), by_order);
      if (!T1_.same_set({a2}, {d_bar}) && union_condition(a2, d)) S.Y.push_back(a2);
    }
    return S;
  }

  // Basis of the dual of the subfield subcode, parts D1..D4.
  BasisSet build_D(uint32_t d) const {
    const SetFamilies S = build_sets(d);
    const Field& F = *F_;
    const uint32_t dp = S.d_perp, ord = F.order();
    BasisSet B;
    BasisPart D1{"D1", "traces over sets with monomials at the dual degree", {}};
    for (const auto& a : S.U) {
      const CycSet& c = T2_.set_of(a);
      bool x0 = classify_Ma(c, dp) == MaClass::all_x0;
      FFElem xi_a = xi(c.n_a);
      for (uint32_t r = 0; r < c.n_a; ++r)
        D1.members.push_back(trace_poly(F, c, F.pow(xi_a, r), {x0 ? 1u : 0u, a[0], a[1]}));
    }
    BasisPart D2{"D2", "(x0-1)(T(xi^r x2^a2) + T(xi^r)(x1-1)) for univariate sets in V", {}};
    for (uint32_t a2 : S.V) {
      const CycSet& c = T1_.set_of({a2});
      FFElem xi_a = xi(c.n_a);
      for (uint32_t r = 0; r < c.n_a; ++r) {
        FFElem lam = F.pow(xi_a, r);
        SparsePoly t = univariate_trace(c, lam, a2, 2);
        SparsePoly inner = t + (var(1) - one()).scaled(F.trace_between(lam, c.n_a, 1));
        D2.members.push_back((var(0) - one()) * inner);
      }
    }
    BasisPart D3{"D3", "", {}};
    const uint32_t dp_bar = overline(F, dp);
    const uint32_t a2 = T1_.min_rep_of({dp_bar})[0];
    const CycSet& c0 = T2_.set_of({0, a2});
    if (classify_Ma(c0, dp) == MaClass::two_types) {
      FFElem xi_a = xi(c0.n_a);
      for (uint32_t r = 0; r < c0.n_a; ++r) D3.members.push_back(trace_poly(F, c0, F.pow(xi_a, r), {1, 0, a2}));
      bool extra = false;
      for (const auto& c : T2_.sets())
        if (c.min_rep[1] == a2 && c.min_rep != c0.min_rep && classify_Ma(c, dp) == MaClass::two_types) extra = true;
      if (extra) {
        D3.members.push_back((var(0) - one()) * (var(1) - one()));
        D3.note = "two-type class at the reduced dual degree, with a second two-type set";
      } else {
        D3.note = "two-type class at the reduced dual degree";
      }
    } else {
      D3.note = "empty";
    }
    BasisPart D4{"D4", d == ord ? "all-ones vector for d = q^s-1" : "empty", {}};
    if (d == ord) D4.members.push_back(one());
    B.parts = {std::move(D1), std::move(D2), std::move(D3), std::move(D4)};
    return B;
  }

  // Basis of the subfield subcode, parts B1..B3.
  BasisSet build_B(uint32_t d, BasisVariant variant = BasisVariant::standard) const {
    const SetFamilies S = build_sets(d);
    const Field& F = *F_;
    const auto& ysel = variant == BasisVariant::standard ? S.Y_map : S.Yprime_map;
    BasisSet B;
    BasisPart B1{"B1", "x0 T_a(xi_a^r x1^a1 x2^a2) for sets below degree d", {}};
    for (const auto& c : T2_.sets()) {
      if (!delta_classify(F, c, d).subset_lt) continue;
      FFElem xi_a = xi(c.n_a);
      for (uint32_t r = 0; r < c.n_a; ++r)
        B1.members.push_back(trace_poly(F, c, F.pow(xi_a, r), {1, c.min_rep[0], c.min_rep[1]}));
    }
    BasisPart B2{variant == BasisVariant::standard ? "B2" : "B2'", "h^r for univariate sets in Y", {}};
    for (uint32_t a2 : S.Y) {
      const CycSet& c = T1_.set_of({a2});
      FFElem xi_a = xi(c.n_a);
      for (uint32_t r = 0; r < c.n_a; ++r) B2.members.push_back(h_poly(ysel.at(a2), a2, F.pow(xi_a, r)));
    }
    BasisPart B3{variant == BasisVariant::standard ? "B3" : "B3'", "empty", {}};
    const uint32_t d_bar = overline(F, d);
    const uint32_t b2 = T1_.min_rep_of({d_bar})[0];
    if (std::find(S.A1_le.begin(), S.A1_le.end(), b2) != S.A1_le.end()) {
      const auto& ys = ysel.at(b2);
      const CycSet& cb = T1_.set_of({b2});
      SparsePoly l = h_poly(ys, b2, F.one()) + ((one() - var(0)) * (one() - var(1))) * pow_var(2, d_bar);
      const CycSet& top = T2_.set_of({F.order(), b2});
      if (delta_classify(F, top, d).subset_le) {
        B3.note = "the set (q^s-1, d) lies below degree d";
        B3.members.push_back(l - trace_poly(F, top, F.one(), {1, F.order(), b2}));
        FFElem xi_a = xi(cb.n_a);
        for (uint32_t r = 0; r < cb.n_a; ++r) B3.members.push_back(h_poly(ys, b2, F.pow(xi_a, r)));
      } else if (union_condition(b2, d)) {
        B3.note = "single element l";
        B3.members.push_back(std::move(l));
      }
    }
    B.parts = {std::move(B1), std::move(B2), std::move(B3)};
    return B;
  }

  // Closed-form dimension of the subfield subcode.
  uint64_t dim_primary(uint32_t d) const {
    const SetFamilies S = build_sets(d);
    uint64_t k = 0;
    for (const auto& c : T2_.sets())
      if (delta_classify(*F_, c, d).subset_lt) k += c.n_a;
    for (uint32_t a2 : S.Y) k += T1_.set_of({a2}).n_a;
    const uint32_t d_bar = overline(*F_, d);
    const uint32_t b2 = T1_.min_rep_of({d_bar})[0];
    if (std::find(S.A1_le.begin(), S.A1_le.end(), b2) == S.A1_le.end()) return k;
    if (delta_classify(*F_, T2_.set_of({F_->order(), d_bar}), d).subset_le) return k + T1_.set_of({d_bar}).n_a + 1;
    return k + (union_condition(b2, d) ? 1 : 0);
  }

  // Closed-form dimension of its dual.
  uint64_t dim_dual(uint32_t d) const {
    const SetFamilies S = build_sets(d);
    const uint32_t dp = S.d_perp;
    uint64_t k = 0;
    for (const auto& a : S.U) k += T2_.set_of(a).n_a;
    for (uint32_t a2 : S.V) k += T1_.set_of({a2}).n_a;
    const uint32_t dp_bar = overline(*F_, dp);
    const uint32_t a2 = T1_.min_rep_of({dp_bar})[0];
    const CycSet& c0 = T2_.set_of({0, a2});
    if (classify_Ma(c0, dp) == MaClass::two_types) {
      k += c0.n_a;
      for (const auto& c : T2_.sets())
        if (c.min_rep[1] == a2 && c.min_rep != c0.min_rep && classify_Ma(c, dp) == MaClass::two_types) {
          k += 1;
          break;
        }
    }
    if (d == F_->order()) k += 1;
    return k;
  }

  // Evaluation code of a basis at P^2 over F_q.
  LinearCode evaluate_basis(const BasisSet& B, const std::string& label) const {
    return LinearCode(F_, 1, pts_.size(), evaluation_rows(B.all(), pts_), label);
  }

 private:
  SparsePoly one() const { return SparsePoly::constant(*F_, 3, F_->one()); }
  SparsePoly var(size_t i) const { return SparsePoly::variable(*F_, 3, i); }
  SparsePoly pow_var(size_t i, uint32_t k) const {
    ExpVec e(3, 0);
    e[i] = k;
    return SparsePoly::monomial(*F_, e, F_->one());
  }

  // T_{a2}(lambda x_var^a2) as a polynomial in x0, x1, x2.
  SparsePoly univariate_trace(const CycSet& c, FFElem lam, uint32_t a2, size_t var_index) const {
    SparsePoly t = trace_poly(*F_, c, lam, {a2});
    SparsePoly r(*F_, 3);
    for (const auto& [e, coef] : t.terms()) {
      ExpVec x(3, 0);
      x[var_index] = e[0];
      r.add_term(x, coef);
    }
    return r;
  }

  // x0 sum_{c in ys} T_c(lam x1^c1 x2^c2) + (1 - x0) x1 T_{a2}(lam x2^a2).
  SparsePoly h_poly(const std::vector<ZqsVec>& ys, uint32_t a2, FFElem lam) const {
    SparsePoly acc(*F_, 3);
    for (const auto& c : ys) acc += trace_poly(*F_, T2_.set_of(c), lam, {1, c[0], c[1]});
    acc += (one() - var(0)) * var(1) * univariate_trace(T1_.set_of({a2}), lam, a2, 2);
    return acc;
  }

  // Every (d - c2, c2) with c2 in I_{a2} and c2 > d - (q^s-1) generates a set
  // inside degree <= d.
  bool union_condition(uint32_t a2, uint32_t d) const {
    const int64_t ord = F_->order();
    for (const auto& c2 : T1_.set_of({a2}).elements) {
      int64_t v = c2[0];
      if (v <= int64_t{d} - ord) continue;
      if (v > d) return false;
      if (!delta_classify(*F_, T2_.set_of({static_cast<uint32_t>(d - v), c2[0]}), d).subset_le) return false;
    }
    return true;
  }

  FieldCtx F_;
  CycTable T2_, T1_;
  PointSet pts_;
};

// Sorensen's minimum distance of PRM_d(2): (q^s - t) q^(s(1-r)) where
// d - 1 = r(q^s-1) + t with 0 <= t < q^s-1.
inline uint64_t distance_lower_bound(uint64_t big_q, uint32_t d) {
  if (d < 1 || d > 2 * (big_q - 1)) throw std::out_of_range("degree must lie in 1..2(q^s-1)");
  uint64_t r = (d - 1) / (big_q - 1), t = (d - 1) % (big_q - 1);
  return (big_q - t) * (r == 0 ? big_q : 1);
}

// Generators of the trace code of the dual of PRM_d(m): T(xi^r x^gamma) over
// monomials of the dual degree, rewritten through the closed normal form, plus
// the all-ones vector when q^s-1 divides d.
inline std::vector<SparsePoly> dual_trace_generators(const CycTable& T, uint32_t d) {
  const Field& F = T.field();
  const size_t m = T.m();
  const int64_t dp = int64_t(m) * F.order() - d;
  if (dp < 0) throw std::out_of_range("degree exceeds m(q^s-1)");
  std::vector<SparsePoly> out;
  std::map<ExpVec, bool> seen;
  for (const auto& g : detail::monomials_of_degree(m + 1, static_cast<uint32_t>(dp))) {
    ExpVec key = detail::reduced_projective(F, g);
    if (!seen.emplace(key, true).second) continue;
    const CycSet& c = T.set_of(ZqsVec(key.begin() + 1, key.end()));
    FFElem xi = F.primitive_with_nonzero_trace(c.n_a);
    for (uint32_t r = 0; r < c.n_a; ++r) {
      SparsePoly t = trace_poly(F, c, F.pow(xi, r), g);
      SparsePoly nf(F, m + 1);
      for (const auto& [e, coef] : t.terms()) nf += normal_form_closed(F, e, m).scaled(coef);
      out.push_back(std::move(nf));
    }
  }
  if (d % F.order() == 0) out.push_back(SparsePoly::constant(F, m + 1, F.one()));
  return out;
}

// Subfield subcode of PRM_d(m) through the linear-algebra route; with
// cross_check, its dual is compared against the span of the trace generators.
inline LinearCode subfield_subcode_general(const FieldCtx& F, uint32_t m, uint32_t d, bool cross_check = false) {
  LinearCode C = subfield_subcode(prm_code(F, m, d));
  if (cross_check) {
    CycTable T(F, m);
    PointSet pts = standard_representatives(F, m);
    LinearCode Tr(F, 1, pts.size(), evaluation_rows(dual_trace_generators(T, d), pts), "trace generators");
    if (!(Tr == kernel(C))) throw std::logic_error("trace generators disagree with the subfield subcode");
  }
  return C;
}

}  // namespace prmsub
