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

#include "coheq_cli/schema.hpp"

#include <cmath>
#include <regex>

#include "coheq_cli/embedded_schemas.hpp"

namespace coheq::cli {
namespace {

using nlohmann::json;

class Validator {
 public:
  explicit Validator(const json& root) : root_(root) {}

  void check(const json& schema, const json& doc, const std::string& path) {
    if (schema.is_boolean()) {
      if (!schema.get<bool>()) fail(path, "no value is allowed here");
      return;
    }
    if (auto it = schema.find("$ref"); it != schema.end()) {
      check(resolve(it->get<std::string>()), doc, path);
      return;
    }
    if (auto it = schema.find("type"); it != schema.end() && !type_ok(*it, doc)) {
      fail(path, "expected type " + it->dump());
      return;
    }
    if (auto it = schema.find("const"); it != schema.end() && *it != doc) {
      fail(path, "expected " + it->dump());
    }
    if (auto it = schema.find("enum"); it != schema.end()) {
      bool found = false;
      for (const auto& v : *it) found = found || v == doc;
      if (!found) fail(path, "value " + doc.dump() + " not in " + it->dump());
    }
    if (doc.is_number()) numeric(schema, doc.get<double>(), path);
    if (doc.is_string()) string(schema, doc.get<std::string>(), path);
    if (doc.is_object()) object(schema, doc, path);
    if (doc.is_array()) array(schema, doc, path);
    if (auto it = schema.find("oneOf"); it != schema.end()) {
      int matches = 0;
      for (const auto& sub : *it) matches += quiet_ok(sub, doc) ? 1 : 0;
      if (matches != 1) {
        fail(path, "must match exactly one alternative (matched " + std::to_string(matches) +
                       ")");
      }
    }
    if (auto it = schema.find("anyOf"); it != schema.end()) {
      bool any = false;
      for (const auto& sub : *it) any = any || quiet_ok(sub, doc);
      if (!any) fail(path, "must match at least one alternative");
    }
  }

  std::vector<SchemaIssue> issues;

 private:
  void fail(const std::string& path, std::string msg) {
    issues.push_back({path.empty() ? "/" : path, std::move(msg)});
  }

  bool quiet_ok(const json& schema, const json& doc) {
    Validator v(root_);
    v.check(schema, doc, "");
    return v.issues.empty();
  }

  const json& resolve(const std::string& ref) const {
    if (ref.rfind("#", 0) != 0) throw std::runtime_error("unsupported $ref " + ref);
    return root_.at(json::json_pointer(ref.substr(1)));
  }

  static bool one_type(const std::string& t, const json& doc) {
    if (t == "object") return doc.is_object();
    if (t == "array") return doc.is_array();
    if (t == "string") return doc.is_string();
    if (t == "boolean") return doc.is_boolean();
    if (t == "null") return doc.is_null();
    if (t == "number") return doc.is_number();
    if (t == "integer") {
      if (doc.is_number_integer()) return true;
      if (!doc.is_number_float()) return false;
      const double v = doc.get<double>();
      return std::isfinite(v) && v == std::floor(v);
    }
    return false;
  }

  static bool type_ok(const json& type, const json& doc) {
    if (type.is_string()) return one_type(type.get<std::string>(), doc);
    for (const auto& t : type) {
      if (one_type(t.get<std::string>(), doc)) return true;
    }
    return false;
  }

  void numeric(const json& s, double v, const std::string& path) {
    const auto bound = [&](const char* key, auto ok) {
      if (auto it = s.find(key); it != s.end() && !ok(it->template get<double>())) {
        fail(path, std::string("violates ") + key + " " + it->dump());
      }
    };
    bound("minimum", [v](double b) { return v >= b; });
    bound("maximum", [v](double b) { return v <= b; });
    bound("exclusiveMinimum", [v](double b) { return v > b; });
    bound("exclusiveMaximum", [v](double b) { return v < b; });
  }

  void string(const json& s, const std::string& v, const std::string& path) {
    if (auto it = s.find("minLength"); it != s.end() && v.size() < it->get<std::size_t>()) {
      fail(path, "string shorter than " + it->dump());
    }
    if (auto it = s.find("pattern"); it != s.end()) {
      if (!std::regex_search(v, std::regex(it->get<std::string>(), std::regex::ECMAScript))) {
        fail(path, "string does not match pattern " + it->dump());
      }
    }
  }

  void object(const json& s, const json& doc, const std::string& path) {
    if (auto it = s.find("required"); it != s.end()) {
      for (const auto& key : *it) {
        if (!doc.contains(key.get<std::string>())) {
          fail(path, "missing required property " + key.dump());
        }
      }
    }
    const json* props = nullptr;
    if (auto it = s.find("properties"); it != s.end()) props = &*it;
    const auto extra = s.find("additionalProperties");
    for (const auto& [key, value] : doc.items()) {
      const std::string sub = path + "/" + key;
      if (props != nullptr && props->contains(key)) {
        check(props->at(key), value, sub);
      } else if (extra != s.end()) {
        if (extra->is_boolean() && !extra->get<bool>()) {
          fail(sub, "unknown property");
        } else {
          check(*extra, value, sub);
        }
      }
    }
  }

  void array(const json& s, const json& doc, const std::string& path) {
    if (auto it = s.find("minItems"); it != s.end() && doc.size() < it->get<std::size_t>()) {
      fail(path, "fewer than " + it->dump() + " items");
    }
    if (auto it = s.find("maxItems"); it != s.end() && doc.size() > it->get<std::size_t>()) {
      fail(path, "more than " + it->dump() + " items");
    }
    if (auto it = s.find("items"); it != s.end()) {
      for (std::size_t i = 0; i < doc.size(); ++i) {
        check(*it, doc[i], path + "/" + std::to_string(i));
      }
    }
  }

  const json& root_;
};

}  // namespace

std::vector<SchemaIssue> validate(const json& schema, const json& doc) {
  Validator v(schema);
  v.check(schema, doc, "");
  return std::move(v.issues);
}

const json& experiment_config_schema() {
  static const json s = json::parse(embedded::kExperimentConfigSchema);
  return s;
}

const json& design_record_schema() {
  static const json s = json::parse(embedded::kDesignRecordSchema);
  return s;
}

}  // namespace coheq::cli
