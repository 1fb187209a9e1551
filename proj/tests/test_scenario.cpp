#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "gfix/errors.hpp"
#include "gfix/scenario.hpp"

using namespace gfix;

TEST_CASE("built-in scenarios load and echo their configuration") {
    for (const auto& name : Scenario::builtin_names()) {
        const Scenario s = Scenario::builtin(name);
        CHECK(s.name == name);
        CHECK(s.config_echo["scenario"] == name);
    }
    CHECK_THROWS_AS(Scenario::builtin("no-such"), ConfigError);
    CHECK_THROWS_AS(Scenario::load("no-such-file-or-builtin"), ConfigError);
}

TEST_CASE("solve on example-2.6 certifies the zero fixed point") {
    const Scenario s = Scenario::builtin("example-2.6");
    const RunReport report = cmd_solve(s);
    CHECK(report.exit_code == 0);
    CHECK(report.payload["passed"] == true);
    const auto& cert = report.payload["solve"]["certificate"];
    CHECK(cert["accepted"] == true);
    CHECK(cert["uniqueness"] == "unique-on-sample");
    for (const auto& [role, value] : cert["residuals"].items()) {
        INFO(role);
        CHECK(value.get<double>() <= 1e-9);
    }
    CHECK(report.payload["solve"]["trace"]["iterations"].get<int>() <= 100);
}

TEST_CASE("check on example-2.6 surfaces the contraction discrepancy") {
    const Scenario s = Scenario::builtin("example-2.6");  // shipped constant 0.5
    const RunReport report = cmd_check(s);
    // Axioms, d_G and properties pass; the contraction check at 0.5 does not.
    CHECK(report.exit_code == 1);
    for (const auto& c : report.payload["checks"]) CHECK(c["passed"] == true);
    CHECK(report.payload["contraction"]["check"]["passed"] == false);
    CHECK(report.payload["contraction"]["estimate"]["status"] == "ok");
    CHECK(report.payload["contraction"]["estimate"]["value"].get<double>() ==
          doctest::Approx(2.0 / 3.0));

    Scenario at_third = s;
    at_third.constant = 1.0 / 3.0;
    const RunReport third = cmd_check(at_third);
    CHECK(third.exit_code == 1);
    bool found = false;
    for (const auto& v : third.payload["contraction"]["check"]["violations"]) {
        if (v["rule"] == "2.1" && v["witness"][0] == "0" && v["witness"][1] == "1") {
            found = true;
            CHECK(v["lhs"].get<double>() == doctest::Approx(1.0 / 12.0));
            CHECK(v["rhs"].get<double>() == doctest::Approx(1.0 / 18.0));
        }
    }
    CHECK(found);
}

TEST_CASE("check passes end to end at an admissible constant") {
    Scenario s = Scenario::builtin("example-2.6");
    s.constant = 0.7;  // above the measured minimal constant 2/3
    const RunReport report = cmd_check(s);
    CHECK(report.payload["contraction"]["check"]["passed"] == true);
    CHECK(report.exit_code == 0);
}

TEST_CASE("sum variant: hypothesis fails, solve still converges") {
    const Scenario s = Scenario::builtin("example-2.6-sum");
    const RunReport check = cmd_check(s);
    CHECK(check.exit_code == 1);
    CHECK(check.payload["contraction"]["form"] == "sum");
    CHECK(check.payload["contraction"]["estimate"]["value"].get<double>() ==
          doctest::Approx(1.0));
    const RunReport solve = cmd_solve(s);
    CHECK(solve.exit_code == 0);
    CHECK(solve.payload["solve"]["certificate"]["accepted"] == true);
    CHECK(solve.payload["solve"]["hypotheses"]["all_passed"] == false);
}

TEST_CASE("discrete-3pt passes checks and solves by enumeration") {
    const Scenario s = Scenario::builtin("discrete-3pt");
    REQUIRE(s.maps.has_value());
    CHECK(s.maps->A.aliases(s.maps->B));
    CHECK(s.maps->S.aliases(s.maps->T));
    CHECK_FALSE(s.maps->A.aliases(s.maps->S));

    const RunReport check = cmd_check(s);
    CHECK(check.exit_code == 0);
    const RunReport solve = cmd_solve(s);
    CHECK(solve.exit_code == 0);
    CHECK(solve.payload["solve"]["certificate"]["z"] == "a");
    CHECK(solve.payload["solve"]["certificate"]["uniqueness"] == "proved-by-enumeration");
}

TEST_CASE("table command") {
    const Scenario s = Scenario::builtin("table-3pt");
    const RunReport report = cmd_table(s);
    CHECK(report.exit_code == 0);
    CHECK(report.payload["symmetry"]["state"] == "non-symmetric");
    CHECK(report.payload["symmetry"]["witness"][0] == "a");
    CHECK(report.payload["symmetry"]["witness"][1] == "b");

    // An all-zeros table violates G2 and is rejected while building.
    json bad = s.config_echo;
    for (auto& [key, value] : bad["gmetric"]["rows"].items()) value = 0.0;
    CHECK_THROWS_AS(Scenario::from_json(bad), InvalidConstruction);

    // A diagonal-only table is incomplete: a configuration error.
    json incomplete = s.config_echo;
    incomplete["gmetric"]["rows"] = {{"a,a,a", 0.0}, {"b,b,b", 0.0}, {"c,c,c", 0.0}};
    CHECK_THROWS_AS(Scenario::from_json(incomplete), ConfigError);
}

TEST_CASE("reports are byte-identical across runs modulo wall time") {
    for (const char* name : {"example-2.6", "discrete-3pt"}) {
        const Scenario s = Scenario::builtin(name);
        const std::string a = cmd_check(s).to_string(true);
        const std::string b = cmd_check(s).to_string(true);
        CHECK(a == b);
        const std::string c = cmd_solve(s).to_string(true);
        const std::string d = cmd_solve(s).to_string(true);
        CHECK(c == d);
        // Wall time is present in the full payload.
        CHECK(cmd_check(s).payload.contains("wall_time_ms"));
    }
}

TEST_CASE("seed overrides change the sample, deterministically") {
    const Scenario s = Scenario::builtin("example-2.6");
    RunOverrides a;
    a.seed = 1234;
    RunOverrides b;
    b.seed = 5678;
    const std::string ra = cmd_check(s, a).to_string(true);
    const std::string rb = cmd_check(s, b).to_string(true);
    const std::string ra2 = cmd_check(s, a).to_string(true);
    CHECK(ra == ra2);
    CHECK(ra != rb);  // different random pairs recorded in the reports
}

TEST_CASE("config files round-trip through the loader") {
    const char* path = "gfix_test_config.json";
    {
        json config;
        config["scenario"] = "file-scenario";
        config["space"] = {{"kind", "finite"}, {"points", {"p", "q"}}};
        config["gmetric"] = {{"kind", "nonsym"},
                             {"metric", {{"kind", "abs"}}},
                             {"kappa", 1.0}};
        config["maps"] = {{"A", {{"kind", "identity"}}},
                          {"B", {{"kind", "identity"}}},
                          {"S", {{"kind", "constant"}, {"value", "p"}}},
                          {"T", {{"kind", "constant"}, {"value", "p"}}}};
        config["run"] = {{"form", "max"}, {"constant", 0.5}, {"x0", "q"}};
        std::ofstream out(path);
        out << config.dump(2);
    }
    const Scenario s = Scenario::load(path);
    CHECK(s.name == "file-scenario");
    const RunReport solve = cmd_solve(s);
    CHECK(solve.exit_code == 0);
    CHECK(solve.payload["solve"]["certificate"]["z"] == "p");
    std::remove(path);

    std::ofstream(path) << "{ not json";
    CHECK_THROWS_AS(Scenario::load(path), ConfigError);
    std::remove(path);
}

TEST_CASE("constants outside theorem ranges need the exploratory flag") {
    json config = Scenario::builtin("example-2.6").config_echo;
    config["run"]["constant"] = 1.5;
    CHECK_THROWS_AS(Scenario::from_json(config), ConfigError);
    config["run"]["exploratory"] = true;
    const Scenario s = Scenario::from_json(config);
    const RunReport report = cmd_check(s);
    // h = 1.5 dominates the measured minimal constant 2/3: inequality holds.
    CHECK(report.payload["contraction"]["check"]["passed"] == true);
    CHECK(report.payload["contraction"]["check"]["note"].get<std::string>().find(
              "exploratory") != std::string::npos);
    CHECK(report.exit_code == 0);

    config["run"]["constant"] = -0.5;
    CHECK_THROWS_AS(Scenario::from_json(config), ConfigError);
}

TEST_CASE("maps can reference the named built-ins") {
    json config;
    config["scenario"] = "builtin-maps";
    config["space"] = {{"kind", "interval"}, {"lo", 0.0}, {"hi", 1.0}};
    config["gmetric"] = {{"kind", "max_of_metric"}, {"metric", {{"kind", "abs"}}}};
    config["maps"] = {{"A", {{"kind", "builtin"}, {"name", "example-2.6.A"}}},
                      {"B", {{"kind", "builtin"}, {"name", "example-2.6.B"}}},
                      {"S", {{"kind", "builtin"}, {"name", "example-2.6.S"}}},
                      {"T", {{"kind", "builtin"}, {"name", "example-2.6.T"}}}};
    config["run"] = {{"form", "max"}, {"x0", 1.0}};
    const Scenario s = Scenario::from_json(config);
    CHECK(s.maps->A(0.9) == doctest::Approx(0.3));
    CHECK(s.maps->T(0.6) == doctest::Approx(0.05));
    CHECK(cmd_solve(s).exit_code == 0);

    config["maps"]["A"]["name"] = "no-such-map";
    CHECK_THROWS_AS(Scenario::from_json(config), ConfigError);
}

TEST_CASE("partition and transform metrics load from config") {
    json config;
    config["scenario"] = "partitioned";
    config["space"] = {{"kind", "finite"}, {"points", {"a", "b", "c"}}};
    config["gmetric"] = {{"kind", "partition_shift"},
                         {"kappa", 1.0},
                         {"blocks", {{"a"}, {"b", "c"}}},
                         {"inner", {{"kind", "discrete"}}}};
    const Scenario s = Scenario::from_json(config);
    const Space& sp = s.space;
    CHECK((*s.metric)(sp.point(0), sp.point(1), sp.point(1)) == doctest::Approx(2.0));
    CHECK(cmd_check(s).exit_code == 0);

    json overlapping = config;
    overlapping["gmetric"]["blocks"] = {{"a", "b"}, {"b", "c"}};
    CHECK_THROWS_AS(Scenario::from_json(overlapping), ConfigError);
}

TEST_CASE("solve requires maps, check requires a metric") {
    json config;
    config["scenario"] = "metric-only";
    config["space"] = {{"kind", "finite"}, {"points", {"a", "b", "c"}}};
    config["gmetric"] = {{"kind", "discrete"}};
    const Scenario s = Scenario::from_json(config);
    CHECK(cmd_check(s).exit_code == 0);  // metric checks alone
    CHECK_THROWS_AS(cmd_solve(s), ConfigError);

    json no_metric;
    no_metric["scenario"] = "empty";
    no_metric["space"] = {{"kind", "interval"}, {"lo", 0.0}, {"hi", 1.0}};
    CHECK_THROWS_AS(cmd_check(Scenario::from_json(no_metric)), ConfigError);
}
