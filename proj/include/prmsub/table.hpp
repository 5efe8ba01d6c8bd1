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

// Parameter rows [n, k, delta] of the subfield subcode and its dual.

#pragma once

#include <cstdint>
#include <memory>
#include <sstream>
#include <string>

#include "json.hpp"
#include "prmsub/codes.hpp"
#include "prmsub/prm.hpp"
#include "prmsub/weights.hpp"

namespace prmsub {

struct TableRow {
  uint32_t d = 0;
  uint64_t n = 0, k = 0, k_perp = 0;
  DistanceResult delta, delta_perp;
};

// The subfield subcode of PRM_d(m): from the explicit basis when m = 2,
// otherwise from the linear-algebra route.
inline LinearCode primary_code(const FieldCtx& F, const PlaneContext* plane, uint32_t m, uint32_t d) {
  if (m == 2 && plane) return plane->evaluate_basis(plane->build_B(d), "B basis, d=" + std::to_string(d));
  return subfield_subcode_general(F, m, d);
}

// Distances are exact when the smaller of the two codes fits the budget; a
// single enumeration serves both sides through MacWilliams.
inline TableRow compute_row(const FieldCtx& F, const PlaneContext* plane, uint32_t m, uint32_t d, uint64_t budget,
                            unsigned threads = 1) {
  LinearCode C = primary_code(F, plane, m, d);
  LinearCode D = kernel(C);
  TableRow row;
  row.d = d;
  row.n = C.n();
  row.k = C.k();
  row.k_perp = D.k();
  const uint64_t r = C.alphabet_size();
  const uint64_t pc = capped_pow(r, C.k(), budget), pd = capped_pow(r, D.k(), budget);
  if (std::min(pc, pd) <= budget) {
    WeightEnumerator wc, wd;
    if (pc <= pd) {
      wc = weight_enumerator(C, budget, threads);
      wd = macwilliams(wc, r, C.n(), C.k());
    } else {
      wd = weight_enumerator(D, budget, threads);
      wc = macwilliams(wd, r, C.n(), D.k());
    }
    row.delta = {wc.min_weight(), DistanceMethod::exact};
    row.delta_perp = {wd.min_weight(), DistanceMethod::exact};
    return row;
  }
  const uint64_t known = m == 2 ? distance_lower_bound(F->size(), d) : 0;
  uint64_t small = small_distance_from_dual(*F, D.gen(), C.n());
  row.delta = small ? DistanceResult{small, DistanceMethod::exact}
                    : DistanceResult{std::max<uint64_t>(3, known), DistanceMethod::bound};
  small = small_distance_from_dual(*F, C.gen(), C.n());
  row.delta_perp = small ? DistanceResult{small, DistanceMethod::exact} : DistanceResult{3, DistanceMethod::bound};
  return row;
}

inline std::string format_distance(const DistanceResult& r) {
  return (r.method == DistanceMethod::exact ? "" : ">=") + std::to_string(r.value);
}

inline std::string row_text(const TableRow& t) {
  std::ostringstream os;
  os << "d=" << t.d << " n=" << t.n << " k=" << t.k << " delta=" << format_distance(t.delta) << " ("
     << method_name(t.delta.method) << ") k_perp=" << t.k_perp << " delta_perp=" << format_distance(t.delta_perp)
     << " (" << method_name(t.delta_perp.method) << ")";
  return os.str();
}

inline nlohmann::ordered_json row_json(const TableRow& t) {
  return {{"d", t.d},
          {"n", t.n},
          {"k", t.k},
          {"delta", t.delta.value},
          {"delta_method", method_name(t.delta.method)},
          {"k_perp", t.k_perp},
          {"delta_perp", t.delta_perp.value},
          {"delta_perp_method", method_name(t.delta_perp.method)}};
}

}  // namespace prmsub
