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

// Exact weight distributions by exhaustive enumeration, the MacWilliams
// transform, minimum distance and the Gilbert-Varshamov comparison.

#pragma once

#include <algorithm>
#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "prmsub/codes.hpp"

namespace prmsub {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr uint64_t kDefaultBudget = uint64_t{1} << 28;

struct WeightEnumerator {
  std::vector<BigInt> counts;  // A_0..A_n

  BigInt total() const {
    BigInt t = 0;
    for (const auto& c : counts) t += c;
    return t;
  }
  // Smallest positive weight with a codeword, or n+1 for the zero code.
  size_t min_weight() const {
    for (size_t i = 1; i < counts.size(); ++i)
      if (counts[i] != 0) return i;
    return counts.size();
  }
  friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// base^exp, saturating at max+1.
inline uint64_t capped_pow(uint64_t base, uint64_t exp, uint64_t max) {
  uint64_t r = 1;
  for (uint64_t i = 0; i < exp; ++i) {
    if (r > max / base) return max + 1;
    r *= base;
  }
  return r;
}

namespace detail {

using Hist = std::vector<uint64_t>;

// Split the top `top` message symbols into blocks handled by workers; each
// block runs a Gray-style walk over the remaining symbols.
template <class Block>
Hist run_blocks(uint64_t blocks, unsigned threads, size_t n, Block&& block) {
  threads = static_cast<unsigned>(std::max<uint64_t>(1, std::min<uint64_t>(threads, blocks)));
  std::vector<Hist> part(threads, Hist(n + 1, 0));
  auto work = [&](unsigned t) {
    for (uint64_t b = t; b < blocks; b += threads) block(b, part[t]);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  Hist h(n + 1, 0);
  for (const auto& p : part)
    for (size_t i = 0; i <= n; ++i) h[i] += p[i];
  return h;
}

template <size_t W>
Hist enumerate_binary(const std::vector<std::vector<uint64_t>>& rows, size_t n, unsigned top, unsigned threads) {
  const size_t k = rows.size(), low = k - top;
  return run_blocks(uint64_t{1} << top, threads, n, [&](uint64_t b, Hist& h) {
    uint64_t cw[W] = {};
    for (unsigned j = 0; j < top; ++j)
      if ((b >> j) & 1)
        for (size_t w = 0; w < W; ++w) cw[w] ^= rows[low + j][w];
    auto weight = [&] {
      unsigned c = 0;
      for (size_t w = 0; w < W; ++w) c += std::popcount(cw[w]);
      return c;
    };
    ++h[weight()];
    const uint64_t steps = uint64_t{1} << low;
    for (uint64_t i = 1; i < steps; ++i) {
      const auto& r = rows[std::countr_zero(i)];
      for (size_t w = 0; w < W; ++w) cw[w] ^= r[w];
      ++h[weight()];
    }
  });
}

// F_3 vectors as two bit planes: 1 = (hi 0, lo 1), 2 = (hi 1, lo 0).
template <size_t W>
Hist enumerate_ternary(const std::vector<std::vector<uint64_t>>& hi, const std::vector<std::vector<uint64_t>>& lo,
                       size_t n, unsigned top, unsigned threads) {
  const size_t k = hi.size(), low = k - top;
  uint64_t blocks = 1;
  for (unsigned j = 0; j < top; ++j) blocks *= 3;
  return run_blocks(blocks, threads, n, [&](uint64_t b, Hist& h) {
    uint64_t ch[W] = {}, cl[W] = {};
    auto add = [&](const uint64_t* bh, const uint64_t* bl) {
      for (size_t w = 0; w < W; ++w) {
        uint64_t t = (cl[w] | bh[w]) ^ (ch[w] | bl[w]);
        uint64_t nh = (cl[w] | bl[w]) ^ t;
        uint64_t nl = (ch[w] | bh[w]) ^ t;
        ch[w] = nh;
        cl[w] = nl;
      }
    };
    uint64_t rest = b;
    for (unsigned j = 0; j < top; ++j, rest /= 3)
      for (uint64_t c = 0; c < rest % 3; ++c) add(hi[low + j].data(), lo[low + j].data());
    auto weight = [&] {
      unsigned c = 0;
      for (size_t w = 0; w < W; ++w) c += std::popcount(ch[w] | cl[w]);
      return c;
    };
    ++h[weight()];
    std::vector<uint8_t> digit(low + 1, 0);
    for (;;) {
      size_t j = 0;
      while (j < low && digit[j] == 2) digit[j++] = 0;
      if (j == low) break;
      ++digit[j];
      add(hi[j].data(), lo[j].data());
      ++h[weight()];
    }
  });
}

// Any alphabet through small addition tables. steps[j][t] is
// (e_{t+1} - e_t) * row j over the alphabet e_0 = 0, e_1, ..., e_{r-1}, so the
// t-th move of digit j takes its coefficient from e_t to e_{t+1 mod r}.
inline Hist enumerate_generic(const std::vector<std::vector<std::vector<uint32_t>>>& steps, size_t n, uint32_t r,
                              const std::vector<uint32_t>& add_table, unsigned top, unsigned threads) {
  const size_t k = steps.size(), low = k - top;
  uint64_t blocks = 1;
  for (unsigned j = 0; j < top; ++j) blocks *= r;
  return run_blocks(blocks, threads, n, [&](uint64_t b, Hist& h) {
    std::vector<uint32_t> cw(n, 0);
    auto add = [&](const std::vector<uint32_t>& row) {
      for (size_t i = 0; i < n; ++i) cw[i] = add_table[cw[i] * r + row[i]];
    };
    uint64_t rest = b;
    for (unsigned j = 0; j < top; ++j, rest /= r)
      for (uint64_t c = 0; c < rest % r; ++c) add(steps[low + j][c]);
    auto weight = [&] {
      size_t c = 0;
      for (uint32_t x : cw) c += x != 0;
      return c;
    };
    ++h[weight()];
    std::vector<uint32_t> digit(low + 1, 0), moves(low, 0);
    for (;;) {
      size_t j = 0;
      while (j < low && digit[j] == r - 1) digit[j++] = 0;
      if (j == low) break;
      ++digit[j];
      add(steps[j][moves[j]]);
      moves[j] = moves[j] + 1 == r ? 0 : moves[j] + 1;
      ++h[weight()];
    }
  });
}

template <template <size_t> class Fn, class... Args>
Hist dispatch_words(size_t words, Args&&... args) {
  switch (words) {
    case 1: return Fn<1>::run(args...);
    case 2: return Fn<2>::run(args...);
    case 3: return Fn<3>::run(args...);
    case 4: return Fn<4>::run(args...);
    case 5: return Fn<5>::run(args...);
    case 6: return Fn<6>::run(args...);
    case 7: return Fn<7>::run(args...);
    case 8: return Fn<8>::run(args...);
    case 16: return Fn<16>::run(args...);
    case 32: return Fn<32>::run(args...);
    default: throw std::invalid_argument("code length too large for packed enumeration");
  }
}

template <size_t W>
struct BinaryFn {
  template <class... A>
  static Hist run(A&&... a) { return enumerate_binary<W>(a...); }
};
template <size_t W>
struct TernaryFn {
  template <class... A>
  static Hist run(A&&... a) { return enumerate_ternary<W>(a...); }
};

inline size_t round_words(size_t n) {
  size_t w = (n + 63) / 64;
  if (w <= 8) return std::max<size_t>(w, 1);
  return w <= 16 ? 16 : 32;
}

}  // namespace detail

// Exact weight distribution of C by enumerating all messages. Refuses when
// the number of codewords exceeds the budget.
inline WeightEnumerator weight_enumerator(const LinearCode& C, uint64_t budget = kDefaultBudget,
                                          unsigned threads = 1) {
  const Field& F = C.field();
  const size_t n = C.n(), k = C.k();
  const uint64_t r = C.alphabet_size();
  if (capped_pow(r, k, budget) > budget)
    throw BudgetExceeded("code " + C.label() + " has more than " + std::to_string(budget) + " codewords");
  threads = std::max(1u, threads);
  // enough blocks to keep every worker busy
  unsigned top = 0;
  for (uint64_t b = 1; b < threads * 4ull && top < k; b *= r) ++top;
  if (threads == 1) top = 0;
  const uint32_t step = F.subfield_step(C.level());
  auto index_of = [&](FFElem x) -> uint32_t { return x.is_zero() ? 0 : x.exponent() / step + 1; };
  detail::Hist h;
  if (r == 2 || r == 3) {
    const size_t words = detail::round_words(n);
    std::vector<std::vector<uint64_t>> hi(k, std::vector<uint64_t>(words, 0)), lo = hi;
    for (size_t j = 0; j < k; ++j)
      for (size_t i = 0; i < n; ++i) {
        uint32_t v = index_of(C.gen()[j][i]);
        // index 1 is the element 1; for F_3 index 2 is -1 = 2
        if (v == 1) lo[j][i / 64] |= uint64_t{1} << (i % 64);
        if (v == 2) hi[j][i / 64] |= uint64_t{1} << (i % 64);
      }
    if (r == 2) h = detail::dispatch_words<detail::BinaryFn>(words, lo, n, top, threads);
    else h = detail::dispatch_words<detail::TernaryFn>(words, hi, lo, n, top, threads);
  } else {
    const uint32_t rr = static_cast<uint32_t>(r);
    std::vector<uint32_t> add_table(rr * rr);
    for (uint32_t a = 0; a < rr; ++a)
      for (uint32_t b = 0; b < rr; ++b) {
        FFElem x = a == 0 ? FFElem::zero() : FFElem::from_exponent((a - 1) * step);
        FFElem y = b == 0 ? FFElem::zero() : FFElem::from_exponent((b - 1) * step);
        add_table[a * rr + b] = index_of(F.add(x, y));
      }
    auto elem = [&](uint32_t a) { return a == 0 ? FFElem::zero() : FFElem::from_exponent((a - 1) * step); };
    std::vector<std::vector<std::vector<uint32_t>>> steps(k, std::vector<std::vector<uint32_t>>(rr));
    for (size_t j = 0; j < k; ++j)
      for (uint32_t t = 0; t < rr; ++t) {
        FFElem delta = F.sub(elem((t + 1) % rr), elem(t));
        auto& row = steps[j][t];
        row.resize(n);
        for (size_t i = 0; i < n; ++i) row[i] = index_of(F.mul(delta, C.gen()[j][i]));
      }
    h = detail::enumerate_generic(steps, n, rr, add_table, top, threads);
  }
  WeightEnumerator W;
  for (uint64_t c : h) W.counts.emplace_back(c);
  return W;
}

// Distribution of the dual code from that of a code with parameters
// (alphabet q, length n, dimension k).
inline WeightEnumerator macwilliams(const WeightEnumerator& W, uint64_t q, size_t n, size_t k) {
  if (W.counts.size() != n + 1) throw std::invalid_argument("weight enumerator length mismatch");
  BigInt size = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(k));
  if (W.total() != size || W.counts[0] != 1) throw std::invalid_argument("weight enumerator inconsistent with (q, n, k)");
  std::vector<std::vector<BigInt>> binom(n + 1, std::vector<BigInt>(n + 1, 0));
  for (size_t i = 0; i <= n; ++i) {
    binom[i][0] = 1;
    for (size_t j = 1; j <= i; ++j) binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : BigInt(0));
  }
  std::vector<BigInt> qpow(n + 1);
  qpow[0] = 1;
  for (size_t i = 1; i <= n; ++i) qpow[i] = qpow[i - 1] * (q - 1);
  WeightEnumerator out;
  out.counts.assign(n + 1, 0);
  for (size_t j = 0; j <= n; ++j) {
    BigInt acc = 0;
    for (size_t i = 0; i <= n; ++i) {
      if (W.counts[i] == 0) continue;
      // Krawtchouk K_j(i)
      BigInt kr = 0;
      for (size_t l = 0; l <= std::min(i, j); ++l) {
        if (j - l > n - i) continue;
        BigInt t = binom[i][l] * binom[n - i][j - l] * qpow[j - l];
        if (l % 2) kr -= t;
        else kr += t;
      }
      acc += W.counts[i] * kr;
    }
    if (acc % size != 0) throw std::invalid_argument("weight enumerator is not that of a linear code");
    out.counts[j] = acc / size;
  }
  return out;
}

enum class DistanceMethod { exact, bound };

inline const char* method_name(DistanceMethod m) { return m == DistanceMethod::exact ? "exact" : "bound"; }

struct DistanceResult {
  uint64_t value = 0;
  DistanceMethod method = DistanceMethod::bound;
};

// Distance 1 or 2 read off the columns of a generator matrix H of the dual:
// a zero column gives a weight-1 codeword, two proportional columns give a
// weight-2 one. Returns 0 when neither occurs.
inline uint64_t small_distance_from_dual(const Field& F, const Matrix& H, size_t n) {
  std::vector<Row> cols(n, Row(H.size()));
  for (size_t i = 0; i < H.size(); ++i)
    for (size_t j = 0; j < n; ++j) cols[j][i] = H[i][j];
  for (const auto& c : cols)
    if (std::all_of(c.begin(), c.end(), [](FFElem x) { return x.is_zero(); })) return 1;
  // scale each column so its first nonzero entry is 1
  for (auto& c : cols) {
    auto it = std::find_if(c.begin(), c.end(), [](FFElem x) { return !x.is_zero(); });
    FFElem inv = F.inv(*it);
    for (auto& x : c) x = F.mul(x, inv);
  }
  std::sort(cols.begin(), cols.end());
  return std::adjacent_find(cols.begin(), cols.end()) != cols.end() ? 2 : 0;
}

// Exact when the smaller of C and its dual fits the budget; otherwise the
// column test decides distances 1 and 2 and anything else is reported as the
// lower bound max(3, known_bound).
inline DistanceResult min_distance(const LinearCode& C, uint64_t budget = kDefaultBudget, uint64_t known_bound = 0,
                                   unsigned threads = 1) {
  const size_t n = C.n(), k = C.k();
  const uint64_t r = C.alphabet_size();
  if (k == 0) return {n + 1, DistanceMethod::exact};
  const uint64_t primal = capped_pow(r, k, budget), dual = capped_pow(r, n - k, budget);
  if (std::min(primal, dual) <= budget) {
    if (primal <= dual) return {weight_enumerator(C, budget, threads).min_weight(), DistanceMethod::exact};
    auto Wd = weight_enumerator(kernel(C), budget, threads);
    return {macwilliams(Wd, r, n, n - k).min_weight(), DistanceMethod::exact};
  }
  uint64_t small = small_distance_from_dual(C.field(), kernel(C).gen(), n);
  if (small) return {small, DistanceMethod::exact};
  return {std::max<uint64_t>(3, known_bound), DistanceMethod::bound};
}

// Largest d with sum_{i=0}^{d-2} C(n-1,i)(q-1)^i < q^(n-k): the distance a
// linear [n,k] code is guaranteed to reach.
inline uint64_t varshamov_distance(uint64_t q, uint64_t n, uint64_t k) {
  if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
  const BigInt target = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n - k));
  BigInt sum = 0, term = 1;  // term = C(n-1,i)(q-1)^i
  uint64_t d = 1;
  for (uint64_t i = 0; i + 1 <= n; ++i) {
    sum += term;
    if (sum >= target) break;
    d = i + 2;
    term = term * (n - 1 - i) * (q - 1) / (i + 1);
  }
  return d;
}

// Largest d with V_q(n, d-1) = sum_{i=0}^{d-1} C(n,i)(q-1)^i <= q^(n-k), so
// that A_q(n,d) >= q^n / V_q(n,d-1) guarantees q^k words at distance d.
inline uint64_t gv_distance(uint64_t q, uint64_t n, uint64_t k) {
  if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
  const BigInt target = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n - k));
  BigInt sum = 0, term = 1;  // term = C(n,i)(q-1)^i
  uint64_t d = 0;
  for (uint64_t i = 0; i <= n; ++i) {
    sum += term;
    if (sum > target) break;
    d = i + 1;
    term = term * (n - i) * (q - 1) / (i + 1);
  }
  return d;
}

// An [n,k,d]_q code beats the Gilbert-Varshamov bound when d > gv_distance.
inline bool gv_exceeds(uint64_t q, uint64_t n, uint64_t k, uint64_t d) { return d > gv_distance(q, n, k); }

}  // namespace prmsub
