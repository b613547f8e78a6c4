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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace coheq::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,         // unreadable or invalid input
  kExitSynthesis = 2,     // synthesis failed or parameters out of range
  kExitVerification = 3,  // a design was produced but failed verification
};

struct CommandOptions {
  std::string config;                // experiment config (design, figures)
  std::string record;                // design record (verify)
  std::string out;                   // output directory; empty means the config's
  std::optional<int> grid_density;   // verification points per side
  std::optional<double> theta;
  std::uint64_t seed = 0;
  std::vector<std::string> figures;  // subset for the figures verb
};

int cmd_design(const CommandOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const CommandOptions& opts, std::ostream& out, std::ostream& err);
int cmd_figures(const CommandOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace coheq::cli
