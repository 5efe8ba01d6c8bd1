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

// prmsub: projective Reed-Muller subfield subcodes from the command line.

#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "prmsub/cli.hpp"

namespace {

void add_field_flags(CLI::App* c, prmsub::CliOptions& o, bool with_m) {
  c->add_option("--q", o.q, "base field size q (prime power)")->required();
  c->add_option("--s", o.s, "extension degree s")->required();
  if (with_m) c->add_option("--m", o.m, "projective dimension")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  prmsub::CliOptions o;
  CLI::App app{"Projective Reed-Muller codes, their subfield subcodes and trace bases"};
  app.require_subcommand(1);

  auto* params = app.add_subcommand("params", "n, k, k_perp, distance bound and Gilbert-Varshamov verdict");
  add_field_flags(params, o, true);
  params->add_option("--d", o.d, "degree")->required();

  auto* table = app.add_subcommand("table", "parameter rows over a range of degrees");
  add_field_flags(table, o, true);
  table->add_option("--dmin", o.dmin, "first degree")->capture_default_str();
  table->add_option("--dmax", o.dmax, "last degree (default m(q^s-1))");
  table->add_option("--budget", o.budget, "largest number of codewords to enumerate")->capture_default_str();
  table->add_option("--threads", o.threads, "enumeration threads")->capture_default_str();
  table->add_flag("--json", o.json, "one JSON record per row");

  auto* basis = app.add_subcommand("basis", "explicit basis of the subfield subcode or its dual (m=2)");
  add_field_flags(basis, o, true);
  basis->add_option("--d", o.d, "degree")->required();
  basis->add_option("--side", o.side, "primary or dual")->capture_default_str();
  basis->add_option("--variant", o.variant, "standard or simplified")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run the oracle and property checks");
  add_field_flags(verify, o, true);
  auto* dopt = verify->add_option("--d", o.d, "single degree");
  auto* dall = verify->add_flag("--dall", o.dall, "every degree 1..m(q^s-1)");
  dopt->excludes(dall);
  verify->add_option("--samples", o.samples, "random monomials for m >= 3")->capture_default_str();

  auto* exp = app.add_subcommand("export", "write a generator matrix");
  add_field_flags(exp, o, true);
  exp->add_option("--d", o.d, "degree")->required();
  exp->add_option("--side", o.side, "primary or dual")->capture_default_str();
  exp->add_option("--out", o.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : prmsub::kExitUsage;
  }
  try {
    if (*params) return prmsub::cmd_params(o, std::cout);
    if (*table) return prmsub::cmd_table(o, std::cout);
    if (*basis) return prmsub::cmd_basis(o, std::cout);
    if (*verify) {
      if (!o.dall && o.d == 0) throw prmsub::UsageError("verify needs --d or --dall");
      return prmsub::cmd_verify(o, std::cout);
    }
    if (*exp) return prmsub::cmd_export(o, std::cout);
  } catch (const prmsub::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return prmsub::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return prmsub::kExitFailure;
  }
  return prmsub::kExitUsage;
}
