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

// Finite field tower F_p < F_q < F_{q^s} backed by discrete-log tables.

#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace prmsub {

// An element of F_{q^s} in discrete-log form. Zero carries its own tag.
class FFElem {
 public:
  constexpr FFElem() = default;

  static constexpr FFElem zero() { return FFElem(); }
  static constexpr FFElem from_exponent(uint32_t k) {
    FFElem x;
    x.v_ = k;
    return x;
  }

  constexpr bool is_zero() const { return v_ == kZeroTag; }
  // Exponent index of a nonzero element.
  constexpr uint32_t exponent() const { return v_; }

  friend constexpr bool operator==(FFElem, FFElem) = default;
  friend constexpr auto operator<=>(FFElem, FFElem) = default;

 private:
  static constexpr uint32_t kZeroTag = 0xffffffffu;
  uint32_t v_ = kZeroTag;
};

class Field;
using FieldCtx = std::shared_ptr<const Field>;

class Field {
 public:
  static constexpr uint64_t kMaxSize = uint64_t{1} << 20;

  Field(uint32_t p, uint32_t e, uint32_t s) : p_(p), e_(e), s_(s) {
    if (p < 2 || !is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    if (e == 0 || s == 0) throw std::invalid_argument("extension degrees must be positive");
    uint64_t q = 1, big = 1;
    for (uint32_t i = 0; i < e; ++i) {
      q *= p;
      if (q > kMaxSize) throw std::invalid_argument("field size exceeds 2^20");
    }
    for (uint32_t i = 0; i < s; ++i) {
      big *= q;
      if (big > kMaxSize) throw std::invalid_argument("field size exceeds 2^20");
    }
    q_ = static_cast<uint32_t>(q);
    size_ = static_cast<uint32_t>(big);
    order_ = size_ - 1;
    build_tables();
    qpow_.resize(s_ + 1);
    qpow_[0] = 1 % (order_ == 0 ? 1 : order_);
    for (uint32_t i = 1; i <= s_; ++i) qpow_[i] = mulmod(qpow_[i - 1], q_);
  }

  uint32_t p() const { return p_; }
  uint32_t e() const { return e_; }
  uint32_t s() const { return s_; }
  uint32_t q() const { return q_; }
  // q^s and q^s - 1.
  uint32_t size() const { return size_; }
  uint32_t order() const { return order_; }
  // Coefficients of the defining polynomial over F_p, low to high, leading 1 included.
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  FFElem one() const { return FFElem::from_exponent(0); }
  FFElem alpha() const { return FFElem::from_exponent(order_ == 1 ? 0 : 1); }
  FFElem power_of_alpha(uint64_t k) const { return FFElem::from_exponent(static_cast<uint32_t>(k % order_)); }

  FFElem add(FFElem a, FFElem b) const {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    uint32_t i = a.exponent(), j = b.exponent();
    if (i > j) std::swap(i, j);
    uint32_t z = zech_[j - i];
    if (z == kNoLog) return FFElem::zero();
    uint32_t r = i + z;
    return FFElem::from_exponent(r >= order_ ? r - order_ : r);
  }
  FFElem neg(FFElem a) const {
    if (a.is_zero() || p_ == 2) return a;
    uint32_t r = a.exponent() + order_ / 2;
    return FFElem::from_exponent(r >= order_ ? r - order_ : r);
  }
  FFElem sub(FFElem a, FFElem b) const { return add(a, neg(b)); }
  FFElem mul(FFElem a, FFElem b) const {
    if (a.is_zero() || b.is_zero()) return FFElem::zero();
    uint32_t r = a.exponent() + b.exponent();
    return FFElem::from_exponent(r >= order_ ? r - order_ : r);
  }
  FFElem inv(FFElem a) const {
    if (a.is_zero()) throw std::domain_error("inverse of zero");
    return FFElem::from_exponent(a.exponent() == 0 ? 0 : order_ - a.exponent());
  }
  FFElem div(FFElem a, FFElem b) const { return mul(a, inv(b)); }
  FFElem pow(FFElem a, int64_t k) const {
    if (a.is_zero()) {
      if (k < 0) throw std::domain_error("negative power of zero");
      return k == 0 ? one() : a;
    }
    int64_t r = static_cast<int64_t>((static_cast<__int128>(a.exponent()) * k) % order_);
    if (r < 0) r += order_;
    return FFElem::from_exponent(static_cast<uint32_t>(r));
  }
  // x^(q^k), k taken modulo s.
  FFElem frob(FFElem a, uint32_t k) const {
    if (a.is_zero()) return a;
    return FFElem::from_exponent(static_cast<uint32_t>(mulmod(a.exponent(), qpow_[k % s_])));
  }

  // Integer encoding sum c_i p^i of the polynomial-basis coefficients.
  uint32_t to_int(FFElem a) const { return a.is_zero() ? 0 : antilog_[a.exponent()]; }
  FFElem from_int(uint64_t code) const {
    if (code >= size_) throw std::out_of_range("element code out of range");
    return code == 0 ? FFElem::zero() : FFElem::from_exponent(log_[code]);
  }

  // Exponent step (q^s-1)/(q^l-1) of the subfield F_{q^l}.
  uint32_t subfield_step(uint32_t l) const {
    check_divisor(l);
    return static_cast<uint32_t>(order_ / (ipow(q_, l) - 1));
  }
  bool in_subfield(FFElem a, uint32_t l) const {
    return a.is_zero() || a.exponent() % subfield_step(l) == 0;
  }
  std::vector<FFElem> subfield_elements(uint32_t l) const {
    uint32_t step = subfield_step(l);
    std::vector<FFElem> out{FFElem::zero()};
    for (uint32_t k = 0; k < order_; k += step) out.push_back(FFElem::from_exponent(k));
    return out;
  }

  // Tr from F_{q^from} down to F_{q^to}; a must lie in F_{q^from}.
  FFElem trace_between(FFElem a, uint32_t from, uint32_t to) const {
    check_divisor(from);
    check_divisor(to);
    if (from % to != 0) throw std::invalid_argument("trace target must divide source degree");
    FFElem acc = FFElem::zero();
    for (uint32_t i = 0; i < from / to; ++i) acc = add(acc, frob(a, i * to));
    return acc;
  }
  FFElem trace_to(FFElem a, uint32_t l) const { return trace_between(a, s_, l); }

  // Smallest exponent index giving a primitive element of F_{q^n} whose
  // trace to F_q is nonzero.
  FFElem primitive_with_nonzero_trace(uint32_t n) const {
    check_divisor(n);
    uint64_t sub_order = ipow(q_, n) - 1;
    uint32_t step = subfield_step(n);
    for (uint64_t k = 0; k < sub_order; ++k) {
      if (std::gcd(k, sub_order) != 1) continue;
      FFElem x = FFElem::from_exponent(static_cast<uint32_t>((k * step) % order_));
      if (!trace_between(x, n, 1).is_zero()) return x;
    }
    throw std::logic_error("no primitive element with nonzero trace");
  }

  // Base field F_q as indices 0..q-1: 0 is zero, j+1 is alpha^(j (q^s-1)/(q-1)).
  uint32_t base_index(FFElem a) const {
    if (a.is_zero()) return 0;
    uint32_t step = order_ / (q_ - 1);
    if (a.exponent() % step != 0) throw std::domain_error("element not in the base field");
    return a.exponent() / step + 1;
  }
  FFElem base_element(uint32_t idx) const {
    return idx == 0 ? FFElem::zero() : FFElem::from_exponent((idx - 1) * (order_ / (q_ - 1)));
  }

  // Coordinates of a over F_q in the basis 1, alpha, ..., alpha^(s-1),
  // returned as base indices.
  const uint32_t* base_coords(FFElem a) const {
    std::call_once(coords_once_, [this] { build_coords(); });
    return &coords_[static_cast<size_t>(to_int(a)) * s_];
  }

  std::string name() const {
    return "F" + std::to_string(size_) + "/F" + std::to_string(q_);
  }

 private:
  static constexpr uint32_t kNoLog = 0xffffffffu;

  static bool is_prime(uint32_t n) {
    for (uint32_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }
  static uint64_t ipow(uint64_t b, uint32_t k) {
    uint64_t r = 1;
    while (k--) r *= b;
    return r;
  }
  uint64_t mulmod(uint64_t a, uint64_t b) const { return order_ <= 1 ? 0 : (a * b) % order_; }
  void check_divisor(uint32_t l) const {
    if (l == 0 || s_ % l != 0) throw std::invalid_argument("subfield degree must divide s");
  }

  // Walk powers of x modulo each candidate monic polynomial in increasing
  // integer order until x has full multiplicative order.
  void build_tables() {
    const uint32_t n = e_ * s_;
    std::vector<uint32_t> pw(n + 1, 1);
    for (uint32_t i = 1; i <= n; ++i) pw[i] = pw[i - 1] * p_;
    antilog_.assign(order_, 0);
    std::vector<uint32_t> low(n), d(n);
    for (uint32_t cand = 0; cand < size_; ++cand) {
      uint32_t c = cand;
      for (uint32_t i = 0; i < n; ++i) {
        low[i] = c % p_;
        c /= p_;
      }
      if (low[0] == 0) continue;
      std::fill(d.begin(), d.end(), 0);
      d[0] = 1;
      uint32_t steps = 0;
      bool full = true;
      for (;;) {
        uint32_t code = 0;
        for (uint32_t i = 0; i < n; ++i) code += d[i] * pw[i];
        if (steps > 0 && code == 1) break;
        if (steps == order_ || code == 0) {
          full = false;
          break;
        }
        antilog_[steps++] = code;
        uint32_t top = d[n - 1];
        for (uint32_t i = n - 1; i > 0; --i) d[i] = d[i - 1];
        d[0] = 0;
        for (uint32_t i = 0; i < n; ++i) d[i] = (d[i] + (p_ - low[i]) * top) % p_;
      }
      if (full && steps == order_) {
        modulus_.assign(low.begin(), low.end());
        modulus_.push_back(1);
        break;
      }
    }
    if (modulus_.empty()) throw std::logic_error("no primitive polynomial found");
    log_.assign(size_, kNoLog);
    for (uint32_t i = 0; i < order_; ++i) log_[antilog_[i]] = i;
    // zech[k] = log(1 + alpha^k)
    zech_.assign(order_, kNoLog);
    for (uint32_t k = 0; k < order_; ++k) {
      uint32_t a = antilog_[k], sum = 0;
      uint32_t x = a, y = 1;
      for (uint32_t i = 0; i < n; ++i) {
        sum += ((x % p_ + y % p_) % p_) * pw[i];
        x /= p_;
        y /= p_;
      }
      zech_[k] = sum == 0 ? kNoLog : log_[sum];
    }
  }

  void build_coords() const {
    coords_.assign(static_cast<size_t>(size_) * s_, 0);
    std::vector<uint32_t> digits(s_, 0);
    for (uint64_t t = 0; t < size_; ++t) {
      FFElem acc = FFElem::zero();
      for (uint32_t j = 0; j < s_; ++j)
        acc = add(acc, mul(base_element(digits[j]), FFElem::from_exponent(j % order_)));
      uint32_t code = to_int(acc);
      for (uint32_t j = 0; j < s_; ++j) coords_[static_cast<size_t>(code) * s_ + j] = digits[j];
      for (uint32_t j = 0; j < s_; ++j) {
        if (++digits[j] < q_) break;
        digits[j] = 0;
      }
    }
  }

  uint32_t p_, e_, s_, q_ = 0, size_ = 0, order_ = 0;
  std::vector<uint32_t> modulus_, log_, antilog_, zech_;
  std::vector<uint64_t> qpow_;
  mutable std::once_flag coords_once_;
  mutable std::vector<uint32_t> coords_;
};

inline FieldCtx make_field(uint32_t p, uint32_t e, uint32_t s) {
  return std::make_shared<const Field>(p, e, s);
}

// Field of q^s elements over F_q for prime-power q.
inline FieldCtx make_field_for(uint32_t q, uint32_t s) {
  if (q < 2) throw std::invalid_argument("q must be a prime power");
  uint32_t p = 2;
  while (q % p != 0) ++p;
  uint32_t e = 0, r = q;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1) throw std::invalid_argument("q must be a prime power");
  return make_field(p, e, s);
}

}  // namespace prmsub
