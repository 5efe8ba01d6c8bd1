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

// Sparse polynomials over F_{q^s}, the standard representatives of P^m,
// evaluation, homogenization and the base-field membership test.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "prmsub/fields.hpp"

namespace prmsub {

using ExpVec = std::vector<uint32_t>;

inline uint32_t degree_of(const ExpVec& e) {
  uint32_t d = 0;
  for (uint32_t x : e) d += x;
  return d;
}

inline std::string format_elem(FFElem x) {
  if (x.is_zero()) return "0";
  if (x.exponent() == 0) return "1";
  if (x.exponent() == 1) return "a";
  return "a^" + std::to_string(x.exponent());
}

// Polynomial with nonzero coefficients only. Holds a non-owning pointer to
// its field, which must outlive it.
class SparsePoly {
 public:
  using Terms = std::map<ExpVec, FFElem>;

  SparsePoly(const Field& f, size_t nvars) : f_(&f), nvars_(nvars) {}

  static SparsePoly constant(const Field& f, size_t nvars, FFElem c) {
    SparsePoly r(f, nvars);
    r.add_term(ExpVec(nvars, 0), c);
    return r;
  }
  static SparsePoly monomial(const Field& f, const ExpVec& e, FFElem c) {
    SparsePoly r(f, e.size());
    r.add_term(e, c);
    return r;
  }
  static SparsePoly variable(const Field& f, size_t nvars, size_t i) {
    ExpVec e(nvars, 0);
    e.at(i) = 1;
    return monomial(f, e, f.one());
  }

  const Field& field() const { return *f_; }
  size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  FFElem coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? FFElem::zero() : it->second;
  }

  void add_term(const ExpVec& e, FFElem c) {
    if (e.size() != nvars_) throw std::invalid_argument("exponent arity mismatch");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (fresh) return;
    it->second = f_->add(it->second, c);
    if (it->second.is_zero()) terms_.erase(it);
  }

  SparsePoly& operator+=(const SparsePoly& g) {
    check(g);
    for (const auto& [e, c] : g.terms_) add_term(e, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& g) {
    check(g);
    for (const auto& [e, c] : g.terms_) add_term(e, f_->neg(c));
    return *this;
  }
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    a.check(b);
    SparsePoly r(*a.f_, a.nvars_);
    ExpVec e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, a.f_->mul(ca, cb));
      }
    return r;
  }
  SparsePoly scaled(FFElem c) const {
    SparsePoly r(*f_, nvars_);
    if (c.is_zero()) return r;
    for (const auto& [e, x] : terms_) r.terms_.emplace(e, f_->mul(x, c));
    return r;
  }
  SparsePoly negated() const { return scaled(f_->neg(f_->one())); }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  uint32_t total_degree() const {
    uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
    return d;
  }
  bool is_homogeneous(uint32_t d) const {
    for (const auto& [e, c] : terms_)
      if (degree_of(e) != d) return false;
    return true;
  }

  FFElem eval(const FFElem* pt) const {
    const uint64_t ord = f_->order();
    FFElem acc = FFElem::zero();
    for (const auto& [e, c] : terms_) {
      uint64_t k = c.exponent();
      bool zero = false;
      for (size_t i = 0; i < nvars_ && !zero; ++i) {
        if (e[i] == 0) continue;
        if (pt[i].is_zero()) zero = true;
        else k += uint64_t{e[i]} * pt[i].exponent();
      }
      if (!zero) acc = f_->add(acc, FFElem::from_exponent(static_cast<uint32_t>(k % ord)));
    }
    return acc;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!first) os << " + ";
      first = false;
      std::string mono;
      for (size_t i = 0; i < nvars_; ++i) {
        if (it->first[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "x" + std::to_string(i + var_offset_);
        if (it->first[i] > 1) mono += "^" + std::to_string(it->first[i]);
      }
      std::string c = format_elem(it->second);
      if (mono.empty()) os << c;
      else if (c == "1") os << mono;
      else os << c << "*" << mono;
    }
    return os.str();
  }

  // Printing names variables x_{offset}, x_{offset+1}, ...
  void set_var_offset(size_t k) { var_offset_ = k; }

 private:
  void check(const SparsePoly& g) const {
    if (g.nvars_ != nvars_ || g.f_ != f_) throw std::invalid_argument("polynomial arity mismatch");
  }

  const Field* f_;
  size_t nvars_;
  size_t var_offset_ = 0;
  Terms terms_;
};

// Ordered list of points with dim coordinates each. For P^m, cell_offsets
// holds the start of A_0, ..., A_m followed by the total count.
struct PointSet {
  FieldCtx field;
  size_t dim = 0;
  std::vector<FFElem> coords;
  std::vector<size_t> cell_offsets;

  size_t size() const { return dim == 0 ? 1 : coords.size() / dim; }
  const FFElem* point(size_t i) const { return coords.data() + i * dim; }
};

// Element with enumeration index t: 0 first, then alpha^(t-1).
inline FFElem elem_by_index(uint32_t t) {
  return t == 0 ? FFElem::zero() : FFElem::from_exponent(t - 1);
}

namespace detail {
// Append all tuples of length k, first coordinate most significant.
inline void append_tuples(const Field& f, size_t k, const std::vector<FFElem>& prefix,
                          std::vector<FFElem>& out) {
  std::vector<uint32_t> idx(k, 0);
  for (;;) {
    out.insert(out.end(), prefix.begin(), prefix.end());
    for (size_t j = 0; j < k; ++j) out.push_back(elem_by_index(idx[j]));
    size_t j = k;
    while (j > 0) {
      if (++idx[j - 1] < f.size()) break;
      idx[j - 1] = 0;
      --j;
    }
    if (j == 0) break;
  }
}
}  // namespace detail

inline PointSet affine_grid(const FieldCtx& f, size_t m) {
  PointSet ps{f, m, {}, {}};
  detail::append_tuples(*f, m, {}, ps.coords);
  ps.cell_offsets = {0, ps.size()};
  return ps;
}

inline PointSet standard_representatives(const FieldCtx& f, size_t m) {
  if (m < 1) throw std::invalid_argument("projective dimension must be at least 1");
  PointSet ps{f, m + 1, {}, {}};
  for (size_t i = 0; i <= m; ++i) {
    ps.cell_offsets.push_back(ps.size());
    std::vector<FFElem> prefix(i, FFElem::zero());
    prefix.push_back(f->one());
    detail::append_tuples(*f, m - i, prefix, ps.coords);
  }
  ps.cell_offsets.push_back(ps.size());
  return ps;
}

inline uint64_t projective_length(uint64_t big_q, size_t m) {
  uint64_t n = 0, pw = 1;
  for (size_t i = 0; i <= m; ++i, pw *= big_q) n += pw;
  return n;
}

inline std::vector<FFElem> evaluate(const SparsePoly& f, const PointSet& pts) {
  if (f.nvars() != pts.dim) throw std::invalid_argument("polynomial arity does not match points");
  std::vector<FFElem> out(pts.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = f.eval(pts.point(i));
  return out;
}

// x0^d f(x1/x0, ..., xm/x0).
inline SparsePoly homogenize(const SparsePoly& f, uint32_t d) {
  SparsePoly r(f.field(), f.nvars() + 1);
  for (const auto& [e, c] : f.terms()) {
    uint32_t deg = degree_of(e);
    if (deg > d) throw std::invalid_argument("degree exceeds homogenization degree");
    ExpVec h;
    h.reserve(e.size() + 1);
    h.push_back(d - deg);
    h.insert(h.end(), e.begin(), e.end());
    r.add_term(h, c);
  }
  return r;
}

// Reduced exponent under x^(q^s) = x: 0 stays 0, otherwise 1..q^s-1.
inline uint32_t reduce_exponent(uint64_t e, uint32_t order) {
  return e == 0 ? 0 : static_cast<uint32_t>((e - 1) % order + 1);
}

// Apply x0^k -> x0 (when projective) and x^(q^s) -> x to every term.
inline SparsePoly reduce_exponents(const SparsePoly& f, bool projective) {
  const uint32_t ord = f.field().order();
  SparsePoly r(f.field(), f.nvars());
  ExpVec e;
  for (const auto& [ex, c] : f.terms()) {
    e = ex;
    for (size_t i = 0; i < e.size(); ++i)
      e[i] = (projective && i == 0) ? (e[i] > 0 ? 1 : 0) : reduce_exponent(e[i], ord);
    r.add_term(e, c);
  }
  return r;
}

// f^(q^k) reduced in the quotient.
inline SparsePoly frobenius_poly(const SparsePoly& f, uint32_t k, bool projective) {
  const Field& F = f.field();
  uint64_t qk = 1;
  for (uint32_t i = 0; i < k; ++i) qk *= F.q();
  SparsePoly r(F, f.nvars());
  ExpVec e;
  for (const auto& [ex, c] : f.terms()) {
    e = ex;
    for (size_t i = 0; i < e.size(); ++i)
      e[i] = (projective && i == 0) ? (e[i] > 0 ? 1 : 0) : reduce_exponent(uint64_t{e[i]} * qk, F.order());
    r.add_term(e, F.frob(c, k));
  }
  return r;
}

// f + f^q + ... + f^(q^(s-1)).
inline SparsePoly full_trace(const SparsePoly& f, bool projective) {
  SparsePoly r(f.field(), f.nvars());
  for (uint32_t k = 0; k < f.field().s(); ++k) r += frobenius_poly(f, k, projective);
  return r;
}

// Substitute x_0 = ... = x_{i-1} = 0, x_i = 1 into a projective polynomial.
inline SparsePoly slice_poly(const SparsePoly& f, size_t i) {
  SparsePoly r(f.field(), f.nvars() - i - 1);
  for (const auto& [e, c] : f.terms()) {
    bool vanishes = false;
    for (size_t j = 0; j < i; ++j) vanishes |= e[j] > 0;
    if (vanishes) continue;
    r.add_term(ExpVec(e.begin() + i + 1, e.end()), c);
  }
  return r;
}

inline bool all_in_base(const Field& F, const std::vector<FFElem>& v) {
  for (FFElem x : v)
    if (!F.in_subfield(x, 1)) return false;
  return true;
}

// True iff f evaluates into F_q on every standard representative. The slice
// criterion on the affine pieces is checked as well and must agree.
inline bool evaluates_to_base(const FieldCtx& F, const SparsePoly& f) {
  const size_t m = f.nvars() - 1;
  bool direct = all_in_base(*F, evaluate(f, standard_representatives(F, m)));
  bool slices = true;
  for (size_t i = 0; i <= m && slices; ++i)
    slices = all_in_base(*F, evaluate(slice_poly(f, i), affine_grid(F, m - i)));
  if (direct != slices) throw std::logic_error("slice criterion disagrees with direct evaluation");
  return direct;
}

}  // namespace prmsub
