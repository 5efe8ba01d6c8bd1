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

// Command implementations behind the prmsub tool. Each returns the process
// exit code: 0 ok, 1 verification failure, 2 usage error.

#pragma once

#include <cstdint>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "prmsub/prm.hpp"
#include "prmsub/table.hpp"
#include "prmsub/verify.hpp"
#include "prmsub/weights.hpp"

namespace prmsub {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CliOptions {
  uint32_t q = 0, s = 0, m = 2, d = 0;
  uint32_t dmin = 1, dmax = 0;  // dmax 0 means m(q^s-1)
  uint64_t budget = kDefaultBudget;
  std::string side = "primary";
  std::string variant = "standard";
  bool dall = false;
  bool json = false;
  unsigned threads = 1;
  size_t samples = 10000;
  std::string out;
};

namespace detail {

inline FieldCtx field_from(const CliOptions& o) {
  if (o.q < 2 || o.s < 1) throw UsageError("need --q >= 2 and --s >= 1");
  try {
    return make_field_for(o.q, o.s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

inline void check_degree(const CliOptions& o, const Field& F, uint32_t d) {
  if (o.m < 1) throw UsageError("need --m >= 1");
  const uint64_t top = uint64_t{o.m} * F.order();
  if (d < 1 || d > top)
    throw UsageError("degree must lie in 1.." + std::to_string(top) +
                     (d > top ? "; beyond that PRM_d is the whole space" : ""));
}

inline void require_plane(const CliOptions& o) {
  if (o.m != 2) throw UsageError("explicit bases implemented only for m=2");
}

}  // namespace detail

inline int cmd_params(const CliOptions& o, std::ostream& os) {
  FieldCtx F = detail::field_from(o);
  detail::check_degree(o, *F, o.d);
  const uint64_t n = projective_length(F->size(), o.m);
  if (o.m == 2) {
    PlaneContext P(F);
    const uint64_t k = P.dim_primary(o.d), kp = P.dim_dual(o.d);
    if (k + kp != n) throw std::logic_error("dimension formulas do not add up to n");
    const uint64_t bound = distance_lower_bound(F->size(), o.d);
    os << "n=" << n << " k=" << k << " k⊥=" << kp << " δ≥" << bound << " (bound) GV: "
       << (gv_exceeds(o.q, n, k, bound) ? "exceeds" : "does not exceed") << "\n";
  } else {
    const uint64_t k = subfield_subcode_general(F, o.m, o.d).k();
    os << "n=" << n << " k=" << k << " k⊥=" << n - k << " δ bound: n/a for m≠2 GV: n/a\n";
  }
  return kExitOk;
}

inline int cmd_table(const CliOptions& o, std::ostream& os) {
  FieldCtx F = detail::field_from(o);
  const uint32_t dmax = o.dmax ? o.dmax : o.m * F->order();
  detail::check_degree(o, *F, o.dmin);
  detail::check_degree(o, *F, dmax);
  if (o.dmin > dmax) throw UsageError("--dmin exceeds --dmax");
  std::unique_ptr<PlaneContext> plane;
  if (o.m == 2) plane = std::make_unique<PlaneContext>(F);
  if (!o.json) os << "# " << F->name() << " m=" << o.m << " budget=" << o.budget << "\n";
  for (uint32_t d = o.dmin; d <= dmax; ++d) {
    TableRow row = compute_row(F, plane.get(), o.m, d, o.budget, o.threads);
    os << (o.json ? row_json(row).dump() : row_text(row)) << "\n";
  }
  return kExitOk;
}

inline int cmd_basis(const CliOptions& o, std::ostream& os) {
  detail::require_plane(o);
  FieldCtx F = detail::field_from(o);
  detail::check_degree(o, *F, o.d);
  if (o.side != "primary" && o.side != "dual") throw UsageError("--side must be primary or dual");
  if (o.variant != "standard" && o.variant != "simplified") throw UsageError("--variant must be standard or simplified");
  PlaneContext P(F);
  BasisSet B = o.side == "dual" ? P.build_D(o.d)
                                : P.build_B(o.d, o.variant == "simplified" ? BasisVariant::simplified
                                                                           : BasisVariant::standard);
  os << "# " << o.side << " basis " << F->name() << " d=" << o.d << " (a = primitive element, modulus ";
  for (size_t i = 0; i < F->modulus().size(); ++i) os << (i ? "," : "") << F->modulus()[i];
  os << ")\n";
  for (const auto& part : B.parts) {
    os << part.label << " " << part.members.size() << " : " << part.note << "\n";
    for (const auto& f : part.members) os << "  " << f.to_string() << "\n";
  }
  os << "total " << B.size() << "\n";
  return kExitOk;
}

inline int cmd_verify(const CliOptions& o, std::ostream& os) {
  FieldCtx F = detail::field_from(o);
  if (!o.dall) detail::check_degree(o, *F, o.d);
  if (o.m < 1) throw UsageError("need --m >= 1");
  const uint32_t lo = o.dall ? 1 : o.d, hi = o.dall ? o.m * F->order() : o.d;
  CheckList checks = verify_groebner(F, o.m, o.m >= 3 ? o.samples : 0);
  if (o.m == 2) {
    PlaneContext P(F);
    for (uint32_t d = lo; d <= hi; ++d)
      for (auto& c : verify_plane_degree(P, d)) checks.push_back(std::move(c));
  } else {
    for (uint32_t d = lo; d <= hi; ++d)
      for (auto& c : verify_general_degree(F, o.m, d)) checks.push_back(std::move(c));
  }
  size_t failed = 0;
  for (const auto& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
    failed += !c.passed;
  }
  os << checks.size() << " checks, " << failed << " failed\n";
  return failed ? kExitFailure : kExitOk;
}

// Header, then one line per generator row with elements as integer codes.
inline void write_generator(const LinearCode& C, std::ostream& os) {
  const Field& F = C.field();
  os << "q=" << F.q() << " s=" << F.s() << " n=" << C.n() << " k=" << C.k() << " modulus=";
  for (size_t i = 0; i < F.modulus().size(); ++i) os << (i ? "," : "") << F.modulus()[i];
  os << "\n";
  for (const auto& r : C.gen()) {
    for (size_t i = 0; i < r.size(); ++i) os << (i ? " " : "") << F.to_int(r[i]);
    os << "\n";
  }
}

inline int cmd_export(const CliOptions& o, std::ostream& os) {
  FieldCtx F = detail::field_from(o);
  detail::check_degree(o, *F, o.d);
  if (o.side != "primary" && o.side != "dual") throw UsageError("--side must be primary or dual");
  std::unique_ptr<PlaneContext> plane;
  if (o.m == 2) {
    if (o.d > 2 * F->order()) throw UsageError("degree must lie in 1.." + std::to_string(2 * F->order()));
    plane = std::make_unique<PlaneContext>(F);
  }
  LinearCode C = primary_code(F, plane.get(), o.m, o.d);
  LinearCode E = o.side == "dual" ? kernel(C) : C;
  if (o.out.empty()) {
    write_generator(E, os);
  } else {
    std::ofstream f(o.out);
    if (!f) throw UsageError("cannot open " + o.out);
    write_generator(E, f);
  }
  return kExitOk;
}

}  // namespace prmsub
