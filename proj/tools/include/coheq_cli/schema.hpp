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

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace coheq::cli {

struct SchemaIssue {
  std::string path;  // JSON pointer into the document
  std::string message;
};

// Validates a document against the JSON-schema subset used by the published
// schemas: type, const, enum, required, properties, additionalProperties,
// items, min/maxItems, minLength, pattern, numeric bounds, oneOf, anyOf and
// local $ref.
std::vector<SchemaIssue> validate(const nlohmann::json& schema, const nlohmann::json& doc);

const nlohmann::json& experiment_config_schema();
const nlohmann::json& design_record_schema();

}  // namespace coheq::cli
