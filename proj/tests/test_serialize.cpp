// Copyright 2026 The seqprod Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <functional>
#include <filesystem>
#include <fstream>
#include <string>

#include "helpers.hpp"
#include "seqprod/error.hpp"
#include "seqprod/generators.hpp"
#include "seqprod/report.hpp"
#include "seqprod/scenario.hpp"
#include "seqprod/serialize.hpp"

using namespace seqprod;
using namespace testing;

namespace {

std::string source_path(const std::string& rel) { return std::string(SEQPROD_SOURCE_DIR) + "/" + rel; }

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("seqprod_test_" + name)).string();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

std::string error_text(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_SUITE("serialization") {
  TEST_CASE("matrices round-trip bit-exactly") {
    Rng rng(1);
    for (int t = 0; t < 50; ++t) {
      const ComplexMatrix m = random_hermitian(3, rng) + Complex(0, 1) * random_hermitian(3, rng);
      const Json j = Json::parse(to_json(m).dump());
      CHECK(matrix_from_json(j) == m);
    }
    const Json j = to_json(diag({1, 0.5}));
    CHECK(j["dim"] == 2);
    CHECK(j["rows"][1][1][0] == 0.5);
  }

  TEST_CASE("malformed matrices are parse errors") {
    CHECK(error_kind_of([] { matrix_from_json(Json::parse(R"({"rows": []})")); }) == ErrorKind::ParseError);
    CHECK(error_kind_of([] { matrix_from_json(Json::parse(R"({"dim": 2, "rows": [[[1,0],[0,0]]]})")); }) ==
          ErrorKind::ParseError);
    CHECK(error_kind_of([] { matrix_from_json(Json::parse(R"({"dim": 1, "rows": [[[1]]]})")); }) ==
          ErrorKind::ParseError);
    CHECK(error_kind_of([] { matrix_from_json(Json::parse(R"({"dim": 1, "rows": [[["a", 0]]]})")); }) ==
          ErrorKind::ParseError);
  }

  TEST_CASE("objects round-trip") {
    Rng rng(2);
    const Effect a = random_effect(3, rng);
    const State rho = random_state(3, rng);
    CHECK(effect_from_json(Json::parse(to_json(a).dump())).matrix() == a.matrix());
    CHECK(state_from_json(Json::parse(to_json(rho).dump())).matrix() == rho.matrix());
    CHECK(error_kind_of([&] { effect_from_json(to_json(rho)); }) == ErrorKind::ParseError);

    for (const Operation& op : {luders_operation(a), holevo_operation(a, rho), random_kraus_measuring(a, rng),
                                zero_operation(3)}) {
      const Operation back = operation_from_json(Json::parse(to_json(op).dump()));
      CHECK(back.flavor() == op.flavor());
      CHECK(same_map(back, op, 1e-12));
    }

    const Observable obs = random_observable(3, 4, rng);
    const Observable obs_back = observable_from_json(Json::parse(to_json(obs).dump()));
    REQUIRE(obs_back.size() == obs.size());
    for (std::size_t x = 0; x < obs.size(); ++x) {
      CHECK(obs_back.outcomes()[x] == obs.outcomes()[x]);
      CHECK(obs_back.effects()[x].matrix() == obs.effects()[x].matrix());
    }
    const RealObservable real = random_real_observable(2, {-1.5, 0.25, 3.0}, rng);
    const Observable real_back = observable_from_json(Json::parse(to_json(real.observable()).dump()));
    CHECK(std::get<double>(real_back.outcomes()[1]) == 0.25);

    const Instrument instr = luders_instrument(obs);
    const Instrument instr_back = instrument_from_json(Json::parse(to_json(instr).dump()));
    for (std::size_t x = 0; x < instr.size(); ++x)
      CHECK(same_map(instr_back.operations()[x], instr.operations()[x], 1e-12));

    const BiObservable joint = seq_product_obs(instr, random_observable(3, 2, rng));
    const BiObservable joint_back = bi_observable_from_json(Json::parse(to_json(joint).dump()));
    for (std::size_t i = 0; i < joint.effects().size(); ++i)
      CHECK(joint_back.effects()[i].matrix() == joint.effects()[i].matrix());

    const Json r = to_json(UncertaintyReport{});
    for (const char* key : {"expectation_s", "variance_t", "correlation_re", "correlation_im", "covariance",
                            "commutator_term", "bound"})
      CHECK(r.contains(key));
  }

  TEST_CASE("operation parameters must agree with the Kraus list") {
    Rng rng(3);
    const Effect a = random_effect(2, rng);
    Json j = to_json(luders_operation(a));
    j["kraus"] = Json::array({to_json(random_unitary(2, rng))});
    CHECK(error_kind_of([&] { operation_from_json(j); }) == ErrorKind::InvariantViolation);
    Json bad = Json::parse(R"({"kind": "operation", "flavor": "generic",
                              "kraus": [{"dim": 1, "rows": [[[2, 0]]]}]})");
    CHECK(error_kind_of([&] { operation_from_json(bad); }) == ErrorKind::NotContraction);
    Json unknown = Json::parse(R"({"kind": "operation", "flavor": "weird", "kraus": []})");
    CHECK(error_kind_of([&] { operation_from_json(unknown); }) == ErrorKind::ParseError);
  }
}

TEST_SUITE("scenario") {
  TEST_CASE("bundled example scenario loads and runs") {
    const Scenario sc = load_scenario(source_path("scenarios/example4.scenario"));
    CHECK(sc.name == "example4");
    CHECK(sc.dim == 2);
    for (const char* label : {"a", "b", "J", "K"}) CHECK(sc.objects.count(label) == 1);
    CHECK_MAT_CLOSE(sc.effect("a").matrix(), diag({1, 0.5}), 0.0);
    CHECK_MAT_CLOSE(sc.operation("K").kraus().front(), mat({{0, 1}, {0, 0}}), 0.0);
    const std::vector<SuiteReport> reports = run_scenario(sc, TrialConfig{});
    REQUIRE(reports.size() == sc.checks.size());
    for (const auto& r : reports) {
      CAPTURE(r.suite);
      CHECK(r.ok());
    }
    CHECK(exit_code(reports) == 0);
  }

  TEST_CASE("round-trip save and load") {
    const Scenario sc = load_scenario(source_path("scenarios/example4.scenario"));
    const std::string path = temp_path("roundtrip.scenario");
    save_scenario(sc, path);
    const Scenario back = load_scenario(path);
    CHECK(to_json(back) == to_json(sc));
    std::remove(path.c_str());
  }

  TEST_CASE("invalid scenarios") {
    const std::string path = temp_path("bad.scenario");
    write_file(path, R"({"name": "bad", "dim": 2, "objects": {
        "A": {"kind": "observable", "outcomes": ["0", "1"],
              "effects": [{"dim": 2, "rows": [[[1,0],[0,0]],[[0,0],[0,0]]]},
                          {"dim": 2, "rows": [[[0,0],[0,0]],[[0,0],[0.5,0]]]}]}}})");
    CHECK(error_kind_of([&] { load_scenario(path); }) == ErrorKind::InvariantViolation);
    const std::string msg = error_text([&] { load_scenario(path); });
    CHECK(msg.find("'A'") != std::string::npos);
    CHECK(msg.find("sum") != std::string::npos);

    write_file(path, R"({"name": "dims", "dim": 3, "objects": {
        "a": {"kind": "effect", "dim": 2, "rows": [[[1,0],[0,0]],[[0,0],[0,0]]]}}})");
    CHECK(error_kind_of([&] { load_scenario(path); }) == ErrorKind::InvariantViolation);

    write_file(path, R"({"name": "labels", "dim": 2, "objects": {},
        "checks": [{"check": "measured_effect", "op": "J"}]})");
    CHECK(error_kind_of([&] { load_scenario(path); }) == ErrorKind::InvariantViolation);
    CHECK(error_text([&] { load_scenario(path); }).find("'J'") != std::string::npos);

    write_file(path, R"({"name": "suite", "dim": 2, "checks": [{"suite": "no-such-suite"}]})");
    CHECK(error_kind_of([&] { load_scenario(path); }) == ErrorKind::InvariantViolation);

    write_file(path, "{not json");
    CHECK(error_kind_of([&] { load_scenario(path); }) == ErrorKind::ParseError);
    std::remove(path.c_str());
    CHECK(error_kind_of([&] { load_scenario(path); }) == ErrorKind::IoError);
  }

  TEST_CASE("object checks compare against expected values") {
    Json j = Json::parse(R"({"name": "t", "dim": 2, "objects": {
        "a": {"kind": "effect", "dim": 2, "rows": [[[1,0],[0,0]],[[0,0],[0.5,0]]]},
        "La": {"kind": "operation", "flavor": "luders",
               "params": {"a": {"dim": 2, "rows": [[[1,0],[0,0]],[[0,0],[0.5,0]]]}}}},
      "checks": [{"check": "seq_product", "op": "La", "b": "a",
                  "expected": {"dim": 2, "rows": [[[1,0],[0,0]],[[0,0],[0.25,0]]]}},
                 {"check": "seq_product", "op": "La", "b": "a",
                  "expected": {"dim": 2, "rows": [[[1,0],[0,0]],[[0,0],[0.5,0]]]}}]})");
    const std::vector<SuiteReport> reports = run_scenario(scenario_from_json(j), TrialConfig{});
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].status == SuiteStatus::pass);
    CHECK(reports[1].status == SuiteStatus::fail);
    CHECK(exit_code(reports) == 1);
  }
}

TEST_SUITE("report") {
  TEST_CASE("json and text rendering") {
    TrialConfig cfg;
    const SuiteReport r = run_suite("example-4", cfg);
    const Json arr = Json::parse(render_report({r}, ReportFormat::json));
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 1);
    for (const char* key : {"suite", "paper_claim", "cases_run", "cases_passed", "witnesses", "status"})
      CHECK(arr[0].contains(key));
    CHECK(arr[0]["status"] == "pass");
    CHECK(arr[0]["witnesses"][0].dump().find("\"rows\"") != std::string::npos);

    const std::string text = render_report({r}, ReportFormat::text);
    CHECK(text.find("example-4") != std::string::npos);
    CHECK(text.find("pass") != std::string::npos);
    CHECK(text.find(r.paper_claim) != std::string::npos);

    CHECK(error_kind_of([] { report_format_from_string("xml"); }) == ErrorKind::ParseError);
    CHECK(error_kind_of([&] { emit_report({r}, ReportFormat::json, std::string("/nonexistent-dir/x.json")); }) ==
          ErrorKind::IoError);

    const std::string path = temp_path("report.json");
    emit_report({r}, ReportFormat::json, path);
    std::ifstream in(path);
    CHECK(Json::parse(in).size() == 1);
    std::remove(path.c_str());
  }
}
