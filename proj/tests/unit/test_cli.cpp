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

#include <gtest/gtest.h>

#include <coheq_cli/commands.hpp>
#include <coheq_cli/config.hpp>
#include <coheq_cli/io.hpp>
#include <coheq_cli/record.hpp>
#include <coheq_cli/run.hpp>
#include <coheq_cli/schema.hpp>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

using namespace coheq::cli;

json cavity_config(double sw, const std::string& method) {
  return json{{"channel", {{"type", "cavity"}, {"k", 0.4}, {"kappa", 5}, {"omega_c", 10}}},
              {"intensities", {{"sigma_u_sq", 0.1}, {"sigma_w_sq", sw}}},
              {"method", method}};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("coheq_cli_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

TEST(Schema, ValidatorBasics) {
  const json schema = json::parse(R"({
    "type": "object", "required": ["a"], "additionalProperties": false,
    "properties": {
      "a": {"type": "integer", "minimum": 1},
      "b": {"type": "string", "pattern": "^x+$"},
      "c": {"oneOf": [{"type": "number"}, {"type": "array", "items": {"type": "number"}, "minItems": 2}]}
    }})");
  EXPECT_TRUE(validate(schema, json{{"a", 2}}).empty());
  EXPECT_FALSE(validate(schema, json{{"a", 0}}).empty());
  EXPECT_FALSE(validate(schema, json{{"a", 1.5}}).empty());
  EXPECT_FALSE(validate(schema, json{{"b", "xx"}}).empty());
  EXPECT_FALSE(validate(schema, json{{"a", 1}, {"b", "xy"}}).empty());
  EXPECT_FALSE(validate(schema, json{{"a", 1}, {"z", 1}}).empty());
  EXPECT_TRUE(validate(schema, json{{"a", 1}, {"c", {1, 2}}}).empty());
  EXPECT_FALSE(validate(schema, json{{"a", 1}, {"c", {1}}}).empty());
  const auto issues = validate(schema, json{{"a", 1}, {"b", 3}});
  ASSERT_EQ(issues.size(), 1u);
  EXPECT_EQ(issues[0].path, "/b");
}

TEST(Schema, PublishedSchemasAreWellFormed) {
  EXPECT_EQ(experiment_config_schema().at("type"), "object");
  EXPECT_EQ(design_record_schema().at("properties").at("format").at("const"), kRecordFormat);
}

TEST(Config, ParsesCavityAndStaticForms) {
  const auto c = parse_config(cavity_config(0.2, "sdp_nevpick"));
  EXPECT_EQ(c.channel.type, "cavity");
  EXPECT_EQ(c.method, "sdp_nevpick");
  EXPECT_DOUBLE_EQ(c.tau, 1e-3);
  EXPECT_EQ(node_grid(c).size(), 21u);

  json s{{"channel", {{"type", "static"}, {"eta", 0.7}}},
         {"intensities", {{"sigma_u_sq", 0.1}, {"sigma_w_sq", 4}}},
         {"theta", "sweep:[-0.5, 0, 0.5]"}};
  const auto cs = parse_config(s);
  EXPECT_NEAR(std::norm(cs.channel.k), 0.7, 1e-15);
  EXPECT_NEAR(std::norm(cs.channel.m), 0.3, 1e-15);
  EXPECT_EQ(cs.thetas, (std::vector<double>{-0.5, 0.0, 0.5}));
  EXPECT_TRUE(cs.theta_sweep);

  json km{{"channel", {{"type", "static"}, {"k", {0.0, 0.8}}, {"m", 0.6}}},
          {"intensities", {{"sigma_u_sq", 0.0}, {"sigma_w_sq", 1}}}};
  EXPECT_NEAR(parse_config(km).channel.k.imag(), 0.8, 0.0);
}

TEST(Config, RejectsInvalidInput) {
  auto missing = cavity_config(0.2, "closed_form");
  missing.erase("intensities");
  EXPECT_THROW(parse_config(missing), UsageError);
  EXPECT_THROW(parse_config(cavity_config(-1.0, "closed_form")), UsageError);
  EXPECT_THROW(parse_config(cavity_config(0.2, "magic")), UsageError);
  auto extra = cavity_config(0.2, "closed_form");
  extra["colour"] = "blue";
  EXPECT_THROW(parse_config(extra), UsageError);
  auto badtheta = cavity_config(0.2, "closed_form");
  badtheta["theta"] = 1.5;
  EXPECT_THROW(parse_config(badtheta), UsageError);
  auto dup = cavity_config(0.2, "sdp_nevpick");
  dup["grid"] = {{"omegas", {0.0, 1.0, 1.0}}};
  EXPECT_ANY_THROW(node_grid(parse_config(dup)));
  EXPECT_THROW(parse_theta_sweep("sweep:[0.1,,0.2]"), UsageError);
}

TEST(Record, RationalRoundTripIsExact) {
  const coheq::RationalFunction f = coheq::RationalFunction::from_zpk(
      {coheq::cplx(-5.0, -10.0)}, {coheq::cplx(-7.961234567890123, -10.0)}, coheq::cplx(-1.0, 0.0));
  const json j = rational_to_json(f);
  const auto g = rational_from_json(json::parse(j.dump()));
  EXPECT_EQ(g.zeros(), f.zeros());
  EXPECT_EQ(g.poles(), f.poles());
  EXPECT_EQ(g.gain(), f.gain());
  EXPECT_EQ(exact_string(0.1), "0.10000000000000001");
}

TEST(Record, ReloadReproducesVerification) {
  for (const auto& cfg : {cavity_config(0.2, "closed_form"), cavity_config(4.0, "jspectral")}) {
    RunOptions opts;
    opts.grid_density = 200;
    const DesignRun run = run_design(parse_config(cfg), opts);
    ASSERT_FALSE(run.designs.empty());
    const json rec = json::parse(design_record(run).dump(2));
    EXPECT_TRUE(validate(design_record_schema(), rec).empty());
    const auto ch = make_channel(parse_config(rec.at("config")));
    for (std::size_t i = 0; i < run.designs.size(); ++i) {
      const auto d = design_from_json(rec.at("designs")[i]);
      const auto a = coheq::verify_design(ch, run.designs[i].design, run.designs[i].report.grid_used);
      const auto b = coheq::verify_design(ch, d, run.designs[i].report.grid_used);
      EXPECT_EQ(report_to_json(a).dump(), report_to_json(b).dump());
    }
  }
}

TEST(Record, InterpolantReloadReproducesVerification) {
  RunOptions opts;
  opts.grid_density = 100;
  const DesignRun run = run_design(parse_config(cavity_config(4.0, "sdp_nevpick")), opts);
  ASSERT_EQ(run.interpolants.size(), 3u);
  const json rec = json::parse(design_record(run).dump());
  const auto ch = make_channel(run.config);
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& e = run.interpolants[i];
    const auto h = interpolant_from_json(rec.at("interpolants")[i]);
    const auto a = coheq::verify_interpolant(ch, e.interpolant, e.gamma_sq_bound, e.report.grid_used);
    const auto b = coheq::verify_interpolant(ch, h, e.gamma_sq_bound, e.report.grid_used);
    EXPECT_EQ(report_to_json(a).dump(), report_to_json(b).dump());
  }
}

TEST(Io, CsvFormatting) {
  CsvTable t({"a", "b"});
  t.add_row({1.0, std::nan("")});
  t.add_row({0.1, -2.5e-7});
  EXPECT_EQ(t.str(), "a,b\n1,\n0.1,-2.5e-07\n");
}

TEST(Commands, DesignIsDeterministic) {
  const fs::path dir = scratch("determinism");
  std::ofstream(dir / "cfg.json") << cavity_config(0.2, "sdp_nevpick").dump();
  std::vector<std::string> first;
  for (int pass = 0; pass < 2; ++pass) {
    CommandOptions o;
    o.config = (dir / "cfg.json").string();
    o.out = (dir / ("run" + std::to_string(pass))).string();
    o.grid_density = 100;
    std::ostringstream out, err;
    ASSERT_EQ(cmd_design(o, out, err), kExitOk) << err.str();
    const std::vector<std::string> files{"design.json", "psd.csv", "bode.csv"};
    for (std::size_t i = 0; i < files.size(); ++i) {
      const std::string body = slurp(fs::path(o.out) / files[i]);
      EXPECT_FALSE(body.empty());
      if (pass == 0) first.push_back(body);
      else EXPECT_EQ(body, first[i]) << files[i];
    }
  }
}

TEST(Commands, VerifyReportsParseErrors) {
  const fs::path dir = scratch("verify_parse");
  std::ofstream(dir / "broken.json") << R"({"format": "coheq.design/1", "designs": [)";
  CommandOptions o;
  o.record = (dir / "broken.json").string();
  std::ostringstream out, err;
  EXPECT_EQ(cmd_verify(o, out, err), kExitUsage);
  const json e = json::parse(err.str());
  EXPECT_EQ(e.at("exit_code"), 1);
}

TEST(Commands, OutOfRangeChannelExitsWithSynthesisCode) {
  const fs::path dir = scratch("range");
  json cfg = cavity_config(0.2, "closed_form");
  cfg["channel"]["k"] = std::sqrt(0.6);
  std::ofstream(dir / "cfg.json") << cfg.dump();
  CommandOptions o;
  o.config = (dir / "cfg.json").string();
  o.out = (dir / "out").string();
  std::ostringstream out, err;
  EXPECT_EQ(cmd_design(o, out, err), kExitSynthesis);
  const json e = json::parse(slurp(dir / "out" / "error.json"));
  EXPECT_EQ(e.at("error"), "ParameterOutOfRange");
}

}  // namespace
