// Copyright 2026 The coheq Authors
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

#include <CLI11.hpp>
#include <iostream>

#include "coheq_cli/commands.hpp"

namespace {

constexpr const char* kFooter = R"(Exit codes:
  0  success
  1  usage error, unreadable file, malformed JSON or schema violation
  2  synthesis failed or a parameter is out of range
  3  a design was written but failed verification
Errors are reported as {"error": ..., "message": ...} on stderr and in
<out>/error.json. COHEQ_TOLERANCE_PROFILE=default|strict selects the
tolerance profile.)";

}  // namespace

int main(int argc, char** argv) {
  using coheq::cli::CommandOptions;
  CLI::App app{"coheq: passive coherent equalizers for linear quantum channels"};
  app.footer(kFooter);
  app.require_subcommand(1);

  CommandOptions opts;
  int density = 0;
  double theta = 0.0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", opts.out, "Output directory (defaults to the config's output_dir)");
    sub->add_option("--grid-density", density, "Verification grid points per side")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", opts.seed, "Seed for randomized spot checks");
  };

  CLI::App* design = app.add_subcommand("design", "Synthesize, verify and write a design");
  design->add_option("--config", opts.config, "Experiment config (JSON)")->required();
  design->add_option("--theta", theta, "Constant Theta, overriding the config");
  common(design);

  CLI::App* verify = app.add_subcommand("verify", "Re-verify a design record");
  verify->add_option("record", opts.record, "design.json written by 'coheq design'");
  verify->add_option("--config", opts.record, "Same as the positional record path");
  common(verify);

  CLI::App* figures = app.add_subcommand("figures", "Write the data behind the figures as CSV");
  figures->add_option("--config", opts.config, "Optional experiment config (JSON)");
  figures->add_option("--only", opts.figures, "Subset of figures to write");
  figures->add_option("--theta", theta, "Constant Theta for the interpolation figures");
  common(figures);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : coheq::cli::kExitUsage;
  }
  for (CLI::App* sub : {design, verify, figures}) {
    if (sub->count("--grid-density")) opts.grid_density = density;
    if (sub->get_option_no_throw("--theta") && sub->count("--theta")) opts.theta = theta;
  }

  if (*design) return coheq::cli::cmd_design(opts, std::cout, std::cerr);
  if (*verify) {
    if (opts.record.empty()) {
      std::cerr << "verify: a record path is required\n";
      return coheq::cli::kExitUsage;
    }
    return coheq::cli::cmd_verify(opts, std::cout, std::cerr);
  }
  return coheq::cli::cmd_figures(opts, std::cout, std::cerr);
}
