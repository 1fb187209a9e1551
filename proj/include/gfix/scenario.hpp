#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gfix/constructors.hpp"
#include "gfix/gmetric.hpp"
#include "gfix/maps.hpp"
#include "gfix/solver.hpp"

namespace gfix {

using json = nlohmann::ordered_json;

inline constexpr const char* toolkit_version = "1.0.0";
inline constexpr int report_schema_version = 1;

/// A fully resolved scenario: space, G-metric, optional map system, and run
/// parameters. Built from a JSON config document (see from_json) or one of
/// the shipped built-ins.
struct Scenario {
    std::string name;
    json config_echo;               // the resolved configuration
    Space space = Space::interval(0.0, 1.0);
    std::optional<GMetric> metric;
    std::optional<MapSystem> maps;
    Point x0 = 0.0;
    SolveOptions solve;
    std::optional<double> constant;     // h or kappa for checks
    ContractionForm form = ContractionForm::Max;
    bool exploratory = false;           // permit constants outside theorem ranges

    static Scenario from_json(const json& config);
    /// Named built-ins: example-2.6, example-2.6-sum, table-3pt, discrete-3pt.
    static Scenario builtin(const std::string& name);
    static std::vector<std::string> builtin_names();
    /// Path or built-in name; built-ins win only when the file does not exist.
    static Scenario load(const std::string& path_or_name);
};

/// Per-run command-line overrides (CLI flags / environment).
struct RunOverrides {
    std::optional<double> tol;
    std::optional<std::uint64_t> seed;
    std::optional<int> n_max;
    std::optional<int> starts;      // number of seeded random starts
    std::optional<bool> strict;
    std::optional<double> constant; // h or kappa, within the theorem range
};

/// One invocation's machine-readable output plus its exit code:
///   0 all requested checks passed / certificate accepted,
///   1 violations or unaccepted certificate,
///   2 configuration errors (raised as ConfigError before a report exists).
struct RunReport {
    json payload;
    int exit_code = 0;

    /// Serialized payload; wall-time is the only nondeterministic field and
    /// can be stripped for byte-comparisons.
    std::string to_string(bool drop_wall_time = false) const;
    std::string to_human() const;
};

RunReport cmd_check(const Scenario& scenario, const RunOverrides& overrides = {});
RunReport cmd_solve(const Scenario& scenario, const RunOverrides& overrides = {});
RunReport cmd_table(const Scenario& scenario, const RunOverrides& overrides = {});

}  // namespace gfix
