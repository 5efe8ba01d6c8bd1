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

// Cyclotomic sets of Z_{q^s}^m under multiplication by q, their order and
// representatives, the degree strata, and trace polynomials.

#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "prmsub/fields.hpp"
#include "prmsub/projgeom.hpp"

namespace prmsub {

// Entries in 0..q^s-1; 0 is its own class, 1..q^s-1 stand for Z/(q^s-1).
using ZqsVec = std::vector<uint32_t>;

// a < b iff the rightmost nonzero entry of b - a is positive.
inline bool order_lt(const ZqsVec& a, const ZqsVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

struct CycSet {
  ZqsVec min_rep;
  std::vector<ZqsVec> elements;  // min_rep, q*min_rep, q^2*min_rep, ...
  uint32_t n_a = 0;
  ZqsVec max_rep;

  bool contains(const ZqsVec& v) const {
    return std::find(elements.begin(), elements.end(), v) != elements.end();
  }
};

inline uint32_t times_q(const Field& F, uint32_t c) {
  return c == 0 ? 0 : static_cast<uint32_t>((uint64_t{c} * F.q() - 1) % F.order() + 1);
}

inline ZqsVec times_q(const Field& F, const ZqsVec& v) {
  ZqsVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = times_q(F, v[i]);
  return r;
}

// Representative in {0} u {1..q^s-1} of an integer in [0, 2(q^s-1)].
inline uint32_t overline(const Field& F, int64_t b) {
  if (b < 0 || b > 2 * int64_t{F.order()}) throw std::out_of_range("overline argument out of range");
  return reduce_exponent(static_cast<uint64_t>(b), F.order());
}

// All minimal cyclotomic sets of Z_{q^s}^m, sorted by minimal representative,
// with a lookup from any vector to its set.
class CycTable {
 public:
  CycTable(FieldCtx F, size_t m) : F_(std::move(F)), m_(m) {
    if (m < 1) throw std::invalid_argument("m must be at least 1");
    const uint64_t Q = F_->size();
    uint64_t total = 1;
    for (size_t i = 0; i < m; ++i) {
      total *= Q;
      if (total > (uint64_t{1} << 24)) throw std::invalid_argument("too many exponent vectors");
    }
    id_.assign(total, kUnset);
    std::vector<CycSet> raw;
    for (uint64_t idx = 0; idx < total; ++idx) {
      if (id_[idx] != kUnset) continue;
      ZqsVec v = decode(idx);
      std::vector<ZqsVec> orbit;
      ZqsVec c = v;
      do {
        orbit.push_back(c);
        id_[encode(c)] = raw.size();
        c = times_q(*F_, c);
      } while (c != v);
      CycSet cs;
      cs.n_a = static_cast<uint32_t>(orbit.size());
      size_t lo = 0, hi = 0;
      for (size_t i = 1; i < orbit.size(); ++i) {
        if (order_lt(orbit[i], orbit[lo])) lo = i;
        if (order_lt(orbit[hi], orbit[i])) hi = i;
      }
      cs.min_rep = orbit[lo];
      cs.max_rep = orbit[hi];
      for (size_t i = 0; i < orbit.size(); ++i) cs.elements.push_back(orbit[(lo + i) % orbit.size()]);
      raw.push_back(std::move(cs));
    }
    std::vector<size_t> perm(raw.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(),
              [&](size_t x, size_t y) { return order_lt(raw[x].min_rep, raw[y].min_rep); });
    std::vector<size_t> where(raw.size());
    for (size_t i = 0; i < perm.size(); ++i) {
      where[perm[i]] = i;
      sets_.push_back(std::move(raw[perm[i]]));
    }
    for (auto& x : id_) x = where[x];
  }

  const Field& field() const { return *F_; }
  const FieldCtx& field_ctx() const { return F_; }
  size_t m() const { return m_; }
  const std::vector<CycSet>& sets() const { return sets_; }
  size_t id_of(const ZqsVec& v) const { return id_.at(encode(v)); }
  const CycSet& set_of(const ZqsVec& v) const { return sets_[id_of(v)]; }
  const ZqsVec& min_rep_of(const ZqsVec& v) const { return set_of(v).min_rep; }
  bool same_set(const ZqsVec& a, const ZqsVec& b) const { return id_of(a) == id_of(b); }

 private:
  static constexpr size_t kUnset = ~size_t{0};

  uint64_t encode(const ZqsVec& v) const {
    if (v.size() != m_) throw std::invalid_argument("vector length mismatch");
    uint64_t idx = 0;
    for (size_t i = m_; i-- > 0;) {
      if (v[i] >= F_->size()) throw std::out_of_range("entry out of range");
      idx = idx * F_->size() + v[i];
    }
    return idx;
  }
  ZqsVec decode(uint64_t idx) const {
    ZqsVec v(m_);
    for (size_t i = 0; i < m_; ++i) {
      v[i] = static_cast<uint32_t>(idx % F_->size());
      idx /= F_->size();
    }
    return v;
  }

  FieldCtx F_;
  size_t m_;
  std::vector<CycSet> sets_;
  std::vector<size_t> id_;
};

struct DeltaFlags {
  bool subset_lt = true, subset_le = true;
  bool meets_lt = false, meets_le = false;
  bool meets_d = false, meets_dbar = false;
};

// Position of the orbit relative to the coordinate-sum strata at d.
inline DeltaFlags delta_classify(const Field& F, const CycSet& a, uint32_t d) {
  const uint64_t dbar = reduce_exponent(d, F.order());
  DeltaFlags fl;
  for (const auto& c : a.elements) {
    uint64_t sum = 0;
    for (uint32_t x : c) sum += x;
    fl.subset_lt &= sum < d;
    fl.subset_le &= sum <= d;
    fl.meets_lt |= sum < d;
    fl.meets_le |= sum <= d;
    fl.meets_d |= sum == d;
    fl.meets_dbar |= sum == dbar;
  }
  return fl;
}

inline ZqsVec conjugate(const Field& F, const ZqsVec& a) {
  if (a.size() != 2) throw std::invalid_argument("conjugate is defined for two coordinates");
  return {F.order() - a[0], F.order() - a[1]};
}

// |I_d| = 1 for univariate d in 1..q^s-1, via the divisibility criterion,
// checked against the orbit itself.
inline bool singleton_orbit(const Field& F, uint32_t d) {
  if (d == 0 || d > F.order()) throw std::out_of_range("degree out of range");
  bool criterion = d % (F.order() / (F.q() - 1)) == 0;
  bool orbit = times_q(F, d) == d;
  if (criterion != orbit) throw std::logic_error("singleton orbit criterion failed");
  return criterion;
}

enum class X0Exponent { reduce, keep };

// T_a(lambda x^gamma) = sum_{i < n_a} lambda^(q^i) x^(q^i gamma), exponents
// reduced. gamma has m entries (affine) or m+1 with x0 first. With full set,
// the sum runs over s terms instead of n_a.
inline SparsePoly trace_poly(const Field& F, const CycSet& a, FFElem lambda, const ExpVec& gamma,
                             X0Exponent x0 = X0Exponent::reduce, bool full = false) {
  const size_t m = a.min_rep.size();
  if (gamma.size() != m && gamma.size() != m + 1) throw std::invalid_argument("exponent arity mismatch");
  const size_t off = gamma.size() - m;
  ZqsVec hat(m);
  for (size_t i = 0; i < m; ++i) hat[i] = reduce_exponent(gamma[i + off], F.order());
  if (!a.contains(hat)) throw std::invalid_argument("exponent not in the cyclotomic set");
  SparsePoly r(F, gamma.size());
  ExpVec e(gamma.size());
  if (off) e[0] = x0 == X0Exponent::keep ? gamma[0] : (gamma[0] > 0 ? 1 : 0);
  ZqsVec c = hat;
  const uint32_t terms = full ? F.s() : a.n_a;
  for (uint32_t i = 0; i < terms; ++i) {
    for (size_t j = 0; j < m; ++j) e[j + off] = c[j];
    r.add_term(e, F.frob(lambda, i));
    c = times_q(F, c);
  }
  return r;
}

}  // namespace prmsub
