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

// Linear codes over levels of the field tower: row reduction, duals, the
// subfield subcode, trace codes and Galois invariance.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "prmsub/fields.hpp"

namespace prmsub {

using Row = std::vector<FFElem>;
using Matrix = std::vector<Row>;

// In-place reduced row echelon form; zero rows are dropped. Returns the
// pivot column of each remaining row.
inline std::vector<size_t> rref(const Field& F, Matrix& M) {
  std::vector<size_t> pivots;
  if (M.empty()) return pivots;
  const size_t cols = M[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < M.size(); ++c) {
    size_t p = r;
    while (p < M.size() && M[p][c].is_zero()) ++p;
    if (p == M.size()) continue;
    std::swap(M[r], M[p]);
    FFElem inv = F.inv(M[r][c]);
    for (size_t j = c; j < cols; ++j) M[r][j] = F.mul(M[r][j], inv);
    for (size_t i = 0; i < M.size(); ++i) {
      if (i == r || M[i][c].is_zero()) continue;
      FFElem f = F.neg(M[i][c]);
      for (size_t j = c; j < cols; ++j)
        if (!M[r][j].is_zero()) M[i][j] = F.add(M[i][j], F.mul(f, M[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  M.resize(r);
  return pivots;
}

inline size_t rank_of(const Field& F, Matrix M) { return rref(F, M).size(); }

// Basis of {x : M x = 0}, the rows of M being constraints on cols unknowns.
inline Matrix nullspace(const Field& F, Matrix M, size_t cols) {
  auto piv = rref(F, M);
  std::vector<char> is_piv(cols, 0);
  for (size_t c : piv) is_piv[c] = 1;
  Matrix out;
  for (size_t j = 0; j < cols; ++j) {
    if (is_piv[j]) continue;
    Row v(cols, FFElem::zero());
    v[j] = F.one();
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = F.neg(M[i][j]);
    out.push_back(std::move(v));
  }
  return out;
}

// Generator matrix in reduced form over the subfield F_{q^level}.
class LinearCode {
 public:
  LinearCode(FieldCtx F, uint32_t level, size_t n, Matrix rows, std::string label)
      : F_(std::move(F)), level_(level), n_(n), label_(std::move(label)) {
    for (const auto& r : rows) {
      if (r.size() != n_) throw std::invalid_argument("row length mismatch");
      for (FFElem x : r)
        if (!F_->in_subfield(x, level_)) throw std::invalid_argument("entry outside the code alphabet");
    }
    pivots_ = rref(*F_, rows);
    gen_ = std::move(rows);
  }

  const FieldCtx& field_ctx() const { return F_; }
  const Field& field() const { return *F_; }
  uint32_t level() const { return level_; }
  uint64_t alphabet_size() const {
    uint64_t r = 1;
    for (uint32_t i = 0; i < level_; ++i) r *= F_->q();
    return r;
  }
  size_t n() const { return n_; }
  size_t k() const { return gen_.size(); }
  const Matrix& gen() const { return gen_; }
  const std::vector<size_t>& pivots() const { return pivots_; }
  const std::string& label() const { return label_; }

  // Residue of v after elimination against the generator rows.
  Row reduce(Row v) const {
    for (size_t i = 0; i < gen_.size(); ++i) {
      FFElem c = v[pivots_[i]];
      if (c.is_zero()) continue;
      FFElem f = F_->neg(c);
      for (size_t j = 0; j < n_; ++j)
        if (!gen_[i][j].is_zero()) v[j] = F_->add(v[j], F_->mul(f, gen_[i][j]));
    }
    return v;
  }
  bool contains(const Row& v) const {
    for (FFElem x : reduce(v))
      if (!x.is_zero()) return false;
    return true;
  }
  bool contains(const LinearCode& other) const {
    for (const auto& r : other.gen_)
      if (!contains(r)) return false;
    return true;
  }
  // Equal row spaces over the same field.
  friend bool operator==(const LinearCode& a, const LinearCode& b) {
    return a.F_ == b.F_ && a.n_ == b.n_ && a.gen_ == b.gen_;
  }

 private:
  FieldCtx F_;
  uint32_t level_;
  size_t n_;
  std::string label_;
  Matrix gen_;
  std::vector<size_t> pivots_;
};

// The dual code over the same alphabet.
inline LinearCode kernel(const LinearCode& C) {
  return LinearCode(C.field_ctx(), C.level(), C.n(), nullspace(C.field(), C.gen(), C.n()),
                    "dual(" + C.label() + ")");
}

enum class SubfieldRoute { automatic, message, parity };

// C intersected with F_q^n. Symbols are expanded over the F_q-basis
// 1, a, ..., a^(s-1) of F_{q^s}; a vector lies in F_q^n exactly when all
// coordinates past the first vanish.
inline LinearCode subfield_subcode(const LinearCode& C, SubfieldRoute route = SubfieldRoute::automatic) {
  const Field& F = C.field();
  const size_t n = C.n(), k = C.k(), s = F.s();
  if (route == SubfieldRoute::automatic)
    route = k <= n - k ? SubfieldRoute::message : SubfieldRoute::parity;
  auto coord = [&](FFElem x, size_t t) { return F.base_element(F.base_coords(x)[t]); };
  Matrix out;
  if (route == SubfieldRoute::message) {
    // unknown (j, t) is the F_q-coefficient of a^t * row j
    Matrix eq, val(n, Row(k * s));
    for (size_t i = 0; i < n; ++i) {
      std::vector<Row> block(s, Row(k * s));
      for (size_t j = 0; j < k; ++j)
        for (size_t t = 0; t < s; ++t) {
          FFElem x = F.mul(C.gen()[j][i], FFElem::from_exponent(static_cast<uint32_t>(t % F.order())));
          for (size_t r = 0; r < s; ++r) block[r][j * s + t] = coord(x, r);
        }
      val[i] = block[0];
      for (size_t r = 1; r < s; ++r) eq.push_back(std::move(block[r]));
    }
    Matrix ker = nullspace(F, std::move(eq), k * s);
    for (const auto& u : ker) {
      Row w(n, FFElem::zero());
      for (size_t i = 0; i < n; ++i)
        for (size_t c = 0; c < k * s; ++c)
          if (!u[c].is_zero() && !val[i][c].is_zero()) w[i] = F.add(w[i], F.mul(u[c], val[i][c]));
      out.push_back(std::move(w));
    }
  } else {
    LinearCode H = kernel(C);
    Matrix eq;
    for (const auto& h : H.gen())
      for (size_t t = 0; t < s; ++t) {
        Row r(n);
        for (size_t i = 0; i < n; ++i) r[i] = coord(h[i], t);
        eq.push_back(std::move(r));
      }
    out = nullspace(F, std::move(eq), n);
  }
  return LinearCode(C.field_ctx(), 1, n, std::move(out), "subfield(" + C.label() + ")");
}

// Row space of Tr(a^t g) over generator rows g and t < s.
inline LinearCode trace_code(const LinearCode& C) {
  const Field& F = C.field();
  Matrix rows;
  for (const auto& g : C.gen())
    for (uint32_t t = 0; t < F.s(); ++t) {
      Row r(C.n());
      FFElem sc = FFElem::from_exponent(t % F.order());
      for (size_t i = 0; i < C.n(); ++i) r[i] = F.trace_to(F.mul(sc, g[i]), 1);
      rows.push_back(std::move(r));
    }
  return LinearCode(C.field_ctx(), 1, C.n(), std::move(rows), "trace(" + C.label() + ")");
}

// Closed under the componentwise q-th power map.
inline bool is_galois_invariant(const LinearCode& C) {
  const Field& F = C.field();
  for (const auto& g : C.gen()) {
    Row r(C.n());
    for (size_t i = 0; i < C.n(); ++i) r[i] = F.frob(g[i], 1);
    if (!C.contains(r)) return false;
  }
  return true;
}

}  // namespace prmsub
