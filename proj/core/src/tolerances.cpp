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

#include "coheq/tolerances.hpp"

#include <cstdlib>

#include "coheq/errors.hpp"

namespace coheq {

Tolerances Tolerances::defaults() { return Tolerances{}; }

Tolerances Tolerances::strict() {
  Tolerances t;
  t.profile = "strict";
  t.channel_paraunitary = 1e-11;
  t.factor_residual = 1e-11;
  t.contraction_check = 1e-12;
  t.gamma_bisect = 1e-10;
  t.design_paraunitary = 1e-10;
  t.contraction_margin = -1e-11;
  t.oracle_agreement = 1e-11;
  return t;
}

Tolerances Tolerances::named(std::string_view name) {
  if (name.empty() || name == "default") return defaults();
  if (name == "strict") return strict();
  throw Error(ErrorCode::InvalidArgument,
              "unknown tolerance profile '" + std::string(name) + "'");
}

const Tolerances& tolerances() {
  static const Tolerances active = [] {
    const char* env = std::getenv("COHEQ_TOLERANCE_PROFILE");
    return Tolerances::named(env ? std::string_view(env) : std::string_view());
  }();
  return active;
}

}  // namespace coheq
