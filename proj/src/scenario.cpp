#include "gfix/scenario.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "gfix/errors.hpp"

namespace gfix {

namespace {

Space parse_space(const json& spec) {
    if (!spec.is_object() || !spec.contains("kind"))
        throw ConfigError("space: missing kind");
    const std::string kind = spec.at("kind");
    if (kind == "interval") {
        return Space::interval(spec.at("lo").get<double>(), spec.at("hi").get<double>());
    }
    if (kind == "finite") {
        std::vector<std::string> labels = spec.at("points").get<std::vector<std::string>>();
        if (spec.contains("values"))
            return Space::finite(std::move(labels),
                                 spec.at("values").get<std::vector<double>>());
        return Space::finite(std::move(labels));
    }
    throw ConfigError("space: unknown kind '" + kind + "'");
}

Point parse_point(const json& v, const Space& space) {
    if (v.is_string()) {
        if (!space.is_finite())
            throw ConfigError("point labels need a finite space: " + v.get<std::string>());
        const auto& labels = space.labels();
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == v.get<std::string>()) return space.point(i);
        throw ConfigError("unknown point label '" + v.get<std::string>() + "'");
    }
    if (v.is_number()) {
        const Point p = v.get<double>();
        if (!space.contains(p)) throw ConfigError("point outside the space");
        return p;
    }
    throw ConfigError("point must be a number or a label");
}

MetricFn parse_base_metric(const json& spec, const Space& space) {
    const std::string kind = spec.at("kind");
    if (kind == "abs") return MetricFn::absolute(space);
    if (kind == "discrete") return MetricFn::discrete(space);
    throw ConfigError("metric: unknown kind '" + kind + "'");
}

GMetric parse_gmetric(const json& spec, const Space& space) {
    if (!spec.is_object() || !spec.contains("kind"))
        throw ConfigError("gmetric: missing kind");
    const std::string kind = spec.at("kind");
    if (kind == "sum_of_metric")
        return from_metric_sum(parse_base_metric(spec.at("metric"), space));
    if (kind == "max_of_metric")
        return from_metric_max(parse_base_metric(spec.at("metric"), space));
    if (kind == "discrete") return discrete_gmetric(space);
    if (kind == "max_value") return max_value_gmetric(space);
    if (kind == "nonsym")
        return nonsym_from_metric(parse_base_metric(spec.at("metric"), space),
                                  spec.at("kappa").get<double>(),
                                  spec.value("extend_to_distinct", false));
    if (kind == "scale")
        return scale(parse_gmetric(spec.at("inner"), space), spec.at("kappa").get<double>());
    if (kind == "truncate_min")
        return truncate_min(parse_gmetric(spec.at("inner"), space),
                            spec.at("kappa").get<double>());
    if (kind == "normalize") return normalize(parse_gmetric(spec.at("inner"), space));
    if (kind == "partition_shift") {
        PartitionSpec part;
        part.kappa = spec.at("kappa").get<double>();
        for (const auto& block : spec.at("blocks")) {
            std::vector<std::size_t> indices;
            for (const auto& label : block)
                indices.push_back(space.index_of(parse_point(label, space)));
            part.blocks.push_back(std::move(indices));
        }
        return partition_shift(parse_gmetric(spec.at("inner"), space), part);
    }
    if (kind == "table") {
        TripleTable t(space);
        const auto& labels = space.labels();
        auto label_index = [&](const std::string& s) -> std::size_t {
            for (std::size_t i = 0; i < labels.size(); ++i)
                if (labels[i] == s) return i;
            throw ConfigError("table: unknown point label '" + s + "'");
        };
        for (const auto& [key, value] : spec.at("rows").items()) {
            std::istringstream in(key);
            std::string a, b, c;
            if (!std::getline(in, a, ',') || !std::getline(in, b, ',') ||
                !std::getline(in, c, ','))
                throw ConfigError("table: row key must be 'x,y,z', got '" + key + "'");
            t.set(label_index(a), label_index(b), label_index(c), value.get<double>());
        }
        if (!t.complete())
            throw ConfigError("incomplete table: missing " + t.first_missing(space));
        return finite_table(space, t);
    }
    throw ConfigError("gmetric: unknown kind '" + kind + "'");
}

SelfMap parse_map(const json& spec, const Space& space, const std::string& role) {
    const std::string kind = spec.at("kind");
    if (kind == "affine")
        return SelfMap::affine(space, spec.at("slope").get<double>(),
                               spec.value("intercept", 0.0), role);
    if (kind == "identity") return SelfMap::identity(space);
    if (kind == "constant")
        return SelfMap::constant(space, parse_point(spec.at("value"), space), role);
    if (kind == "table") {
        std::vector<std::size_t> image;
        for (const auto& label : spec.at("image"))
            image.push_back(space.index_of(parse_point(label, space)));
        return SelfMap::table(space, std::move(image), role);
    }
    if (kind == "builtin") {
        // The four named maps of the example-2.6 scenario, usable in any
        // interval config: x/3, x/6, x/9, x/12.
        const std::string name = spec.at("name");
        double slope = 0.0;
        if (name == "example-2.6.A") slope = 1.0 / 3.0;
        else if (name == "example-2.6.B") slope = 1.0 / 6.0;
        else if (name == "example-2.6.S") slope = 1.0 / 9.0;
        else if (name == "example-2.6.T") slope = 1.0 / 12.0;
        else throw ConfigError("map " + role + ": unknown builtin '" + name + "'");
        return SelfMap::affine(space, slope, 0.0, name);
    }
    throw ConfigError("map " + role + ": unknown kind '" + kind + "'");
}

MapSystem parse_maps(const json& spec, const Space& space) {
    if (!spec.is_object()) throw ConfigError("maps: expected an object");
    // Aliases ({"alias": "A"}) resolve against already-built roles so aliased
    // roles share one map object.
    std::map<std::string, SelfMap> built;
    const char* roles[4] = {"A", "B", "S", "T"};
    for (const char* role : roles) {
        if (!spec.contains(role)) throw ConfigError(std::string("maps: missing role ") + role);
        const json& m = spec.at(role);
        if (m.is_object() && m.contains("alias")) {
            const std::string of = m.at("alias");
            auto it = built.find(of);
            if (it == built.end())
                throw ConfigError("maps: alias of '" + of + "' must follow its target");
            built.emplace(role, it->second);
        } else {
            built.emplace(role, parse_map(m, space, role));
        }
    }
    MapSystem sys{built.at("A"), built.at("B"), built.at("S"), built.at("T")};
    sys.validate();
    return sys;
}

json check_report_to_json(const CheckReport& report, const Space* space) {
    json out;
    out["name"] = report.name;
    out["checked"] = report.checked;
    out["passed"] = report.passed();
    out["conclusive"] = report.conclusive;
    out["violation_count"] = report.violation_count;
    json vs = json::array();
    for (const auto& v : report.worst_violations(100)) {
        json jv;
        jv["rule"] = v.rule;
        json w = json::array();
        for (Point p : v.witness) {
            if (space)
                w.push_back(space->describe(p));
            else
                w.push_back(p);
        }
        jv["witness"] = w;
        jv["lhs"] = v.lhs;
        jv["rhs"] = v.rhs;
        vs.push_back(jv);
    }
    out["violations"] = vs;
    if (!report.note.empty()) out["note"] = report.note;
    return out;
}

json estimate_to_json(const ConstantEstimate& est, const Space& space) {
    json out;
    switch (est.status) {
        case ConstantEstimate::Status::Ok:
            out["status"] = "ok";
            out["value"] = est.value;
            break;
        case ConstantEstimate::Status::Unbounded:
            out["status"] = "unbounded";
            break;
        case ConstantEstimate::Status::Inconclusive:
            out["status"] = "inconclusive";
            break;
    }
    out["witness"] = {space.describe(est.witness[0]), space.describe(est.witness[1])};
    out["pairs_used"] = est.pairs_used;
    out["pairs_skipped"] = est.pairs_skipped;
    return out;
}

json contraction_to_json(const ContractionReport& report, const Space& space) {
    json out;
    out["form"] = to_string(report.form);
    out["constant"] = report.constant;
    out["check"] = check_report_to_json(report.check, &space);
    if (report.estimate) out["estimate"] = estimate_to_json(*report.estimate, space);
    return out;
}

json symmetry_to_json(const SymmetryResult& sym, const Space& space) {
    json out;
    out["state"] = to_string(sym.state);
    if (sym.witness)
        out["witness"] = {space.describe((*sym.witness)[0]),
                          space.describe((*sym.witness)[1])};
    out["checked"] = sym.checked;
    return out;
}

json trace_to_json(const IterationTrace& trace, const Space& space) {
    json out;
    out["status"] = to_string(trace.status);
    out["iterations"] = trace.y_seq.size();
    const std::size_t head = 256, tail = 32;
    auto seq_to_json = [&](const std::vector<double>& seq) {
        json arr = json::array();
        if (seq.size() <= head + tail) {
            for (double v : seq) arr.push_back(v);
        } else {
            for (std::size_t i = 0; i < head; ++i) arr.push_back(seq[i]);
            for (std::size_t i = seq.size() - tail; i < seq.size(); ++i)
                arr.push_back(seq[i]);
        }
        return arr;
    };
    out["x_seq"] = seq_to_json(trace.x_seq);
    out["y_seq"] = seq_to_json(trace.y_seq);
    out["step_g"] = seq_to_json(trace.step_g);
    out["truncated"] = trace.y_seq.size() > head + tail;
    if (!trace.predicted_bound.empty())
        out["predicted_bound"] = seq_to_json(trace.predicted_bound);
    if (trace.limit) out["limit"] = space.describe(*trace.limit);
    if (trace.failed_target) out["failed_target"] = *trace.failed_target;
    return out;
}

json certificate_to_json(const FixedPointCertificate& cert, const Space& space) {
    json out;
    out["z"] = space.describe(cert.z);
    out["residuals"] = {{"A", cert.residual_a},
                        {"B", cert.residual_b},
                        {"S", cert.residual_s},
                        {"T", cert.residual_t}};
    out["accepted"] = cert.accepted;
    out["rate_constant_used"] = cert.rate_constant_used;
    out["uniqueness"] = to_string(cert.uniqueness);
    if (!cert.uniqueness_witnesses.empty()) {
        json w = json::array();
        for (Point p : cert.uniqueness_witnesses) w.push_back(space.describe(p));
        out["uniqueness_witnesses"] = w;
    }
    out["continuity_evidence"] = cert.continuity_evidence;
    return out;
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

json report_header(const char* command, const Scenario& scenario, std::uint64_t seed) {
    json out;
    out["schema_version"] = report_schema_version;
    out["toolkit_version"] = toolkit_version;
    out["command"] = command;
    out["scenario"] = scenario.config_echo;
    out["seed"] = seed;
    return out;
}

}  // namespace

Scenario Scenario::from_json(const json& config) {
    Scenario s;
    s.config_echo = config;
    s.name = config.value("scenario", "unnamed");
    if (!config.contains("space")) throw ConfigError("config: missing space");
    s.space = parse_space(config.at("space"));
    if (config.contains("gmetric")) s.metric = parse_gmetric(config.at("gmetric"), s.space);
    if (config.contains("maps")) s.maps = parse_maps(config.at("maps"), s.space);

    const json run = config.value("run", json::object());
    if (run.contains("form")) {
        const std::string f = run.at("form");
        if (f == "max") s.form = ContractionForm::Max;
        else if (f == "sum") s.form = ContractionForm::Sum;
        else throw ConfigError("run.form must be 'max' or 'sum'");
    }
    if (run.contains("constant")) s.constant = run.at("constant").get<double>();
    s.exploratory = run.value("exploratory", false);
    if (s.constant) {
        if (*s.constant < 0.0) throw ConfigError("run.constant must be nonnegative");
        const double bound = s.form == ContractionForm::Max ? 1.0 : 0.5;
        if (*s.constant >= bound && !s.exploratory)
            throw ConfigError("run.constant outside the theorem range [0, " +
                              std::to_string(bound) +
                              "); set run.exploratory to evaluate anyway");
    }
    s.solve.tol = run.value("tol", 1e-9);
    s.solve.n_max = run.value("n_max", 10000);
    s.solve.strict = run.value("strict", false);
    s.solve.form = s.form;
    s.solve.constant = s.constant;
    if (run.contains("seed")) s.solve.sampling.seed = run.at("seed").get<std::uint64_t>();
    if (run.contains("x0")) s.x0 = parse_point(run.at("x0"), s.space);
    if (run.contains("starts"))
        for (const auto& v : run.at("starts"))
            s.solve.starts.push_back(parse_point(v, s.space));
    return s;
}

std::vector<std::string> Scenario::builtin_names() {
    return {"example-2.6", "example-2.6-sum", "table-3pt", "discrete-3pt"};
}

Scenario Scenario::builtin(const std::string& name) {
    json config;
    config["scenario"] = name;
    if (name == "example-2.6" || name == "example-2.6-sum") {
        // Four affine contractions toward 0 on [0,1] under the max-difference
        // metric. The sum variant runs the same maps against the sum-form
        // hypothesis, whose measured minimal constant (1.0) lies outside
        // [0, 1/2): `check` reports violations while `solve` still converges.
        config["space"] = {{"kind", "interval"}, {"lo", 0.0}, {"hi", 1.0}};
        config["gmetric"] = {{"kind", "max_of_metric"}, {"metric", {{"kind", "abs"}}}};
        config["maps"] = {
            {"A", {{"kind", "affine"}, {"slope", 1.0 / 3.0}, {"intercept", 0.0}}},
            {"B", {{"kind", "affine"}, {"slope", 1.0 / 6.0}, {"intercept", 0.0}}},
            {"S", {{"kind", "affine"}, {"slope", 1.0 / 9.0}, {"intercept", 0.0}}},
            {"T", {{"kind", "affine"}, {"slope", 1.0 / 12.0}, {"intercept", 0.0}}}};
        json run;
        run["form"] = name == "example-2.6-sum" ? "sum" : "max";
        run["constant"] = name == "example-2.6-sum" ? 0.25 : 0.5;
        run["x0"] = 1.0;
        run["starts"] = {0.0, 0.25, 0.5, 1.0};
        config["run"] = run;
        return from_json(config);
    }
    if (name == "table-3pt") {
        config["space"] = {{"kind", "finite"}, {"points", {"a", "b", "c"}}};
        json rows;
        const char* pts = "abc";
        const GMetric g = table_3pt();
        const Space sp = space_3pt();
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) {
                    std::string key;
                    key += pts[i]; key += ','; key += pts[j]; key += ','; key += pts[k];
                    rows[key] = g(sp.point(i), sp.point(j), sp.point(k));
                }
        config["gmetric"] = {{"kind", "table"}, {"rows", rows}};
        return from_json(config);
    }
    if (name == "discrete-3pt") {
        // Discrete metric with identity anchors and constant S = T: the
        // common fixed point is the constant's value, provable by
        // enumeration.
        config["space"] = {{"kind", "finite"}, {"points", {"a", "b", "c"}}};
        config["gmetric"] = {{"kind", "discrete"}};
        config["maps"] = {{"A", {{"kind", "identity"}}},
                          {"B", {{"kind", "alias"}, {"alias", "A"}}},
                          {"S", {{"kind", "constant"}, {"value", "a"}}},
                          {"T", {{"kind", "alias"}, {"alias", "S"}}}};
        json run;
        run["form"] = "max";
        run["constant"] = 0.5;
        run["x0"] = "b";
        config["run"] = run;
        return from_json(config);
    }
    throw ConfigError("unknown built-in scenario '" + name + "'");
}

Scenario Scenario::load(const std::string& path_or_name) {
    std::ifstream in(path_or_name);
    if (in.good()) {
        json config;
        try {
            config = json::parse(in);
        } catch (const json::parse_error& e) {
            throw ConfigError("config parse error in " + path_or_name + ": " + e.what());
        }
        return from_json(config);
    }
    for (const auto& name : builtin_names())
        if (name == path_or_name) return builtin(name);
    throw ConfigError("no such config file or built-in scenario: " + path_or_name);
}

std::string RunReport::to_string(bool drop_wall_time) const {
    if (!drop_wall_time) return payload.dump(2);
    json copy = payload;
    copy.erase("wall_time_ms");
    return copy.dump(2);
}

std::string RunReport::to_human() const {
    std::ostringstream out;
    out << payload.value("command", "?") << " "
        << payload["scenario"].value("scenario", "?") << ": "
        << (payload.value("passed", false) ? "PASS" : "FAIL") << "\n";
    if (payload.contains("checks"))
        for (const auto& c : payload["checks"])
            out << "  " << c.value("name", "?") << ": "
                << (c.value("passed", false) ? "pass" : "FAIL") << " ("
                << c.value("checked", 0) << " checked, " << c.value("violation_count", 0)
                << " violations)\n";
    if (payload.contains("contraction")) {
        const auto& c = payload["contraction"];
        out << "  contraction[" << c.value("form", "?") << "] at "
            << c["constant"].dump() << ": "
            << (c["check"].value("passed", false) ? "pass" : "FAIL") << "\n";
        if (c.contains("estimate")) {
            out << "  min-constant estimate: " << c["estimate"].value("status", "?");
            if (c["estimate"].contains("value"))
                out << " " << c["estimate"]["value"].dump();
            out << "\n";
        }
    }
    if (payload.contains("solve")) {
        const auto& s = payload["solve"];
        out << "  trace: " << s["trace"].value("status", "?") << " in "
            << s["trace"].value("iterations", 0) << " iterations\n";
        if (s.contains("certificate")) {
            out << "  z = " << s["certificate"]["z"].dump()
                << ", accepted = " << s["certificate"]["accepted"].dump()
                << ", uniqueness = " << s["certificate"].value("uniqueness", "?") << "\n";
        }
    }
    return out.str();
}

namespace {

void apply_overrides(Scenario& scenario, const RunOverrides& overrides) {
    if (overrides.tol) scenario.solve.tol = *overrides.tol;
    if (overrides.seed) scenario.solve.sampling.seed = *overrides.seed;
    if (overrides.n_max) scenario.solve.n_max = *overrides.n_max;
    if (overrides.strict) scenario.solve.strict = *overrides.strict;
    if (overrides.constant) {
        const double bound = scenario.form == ContractionForm::Max ? 1.0 : 0.5;
        if (*overrides.constant < 0.0 ||
            (*overrides.constant >= bound && !scenario.exploratory))
            throw ConfigError("--constant outside the theorem range [0, " +
                              std::to_string(bound) + ")");
        scenario.constant = *overrides.constant;
        scenario.solve.constant = *overrides.constant;
    }
    if (overrides.starts) {
        scenario.solve.starts.clear();
        SplitMix64 rng(scenario.solve.sampling.seed ^ 0x5747a1eb5747a1ebULL);
        for (int i = 0; i < *overrides.starts; ++i) {
            if (scenario.space.is_finite())
                scenario.solve.starts.push_back(
                    scenario.space.point(rng.next_index(scenario.space.size())));
            else
                scenario.solve.starts.push_back(
                    rng.next_in(scenario.space.lo(), scenario.space.hi()));
        }
    }
}

}  // namespace

RunReport cmd_check(const Scenario& input, const RunOverrides& overrides) {
    Stopwatch watch;
    Scenario scenario = input;
    apply_overrides(scenario, overrides);
    if (!scenario.metric) throw ConfigError("check needs a gmetric");
    const GMetric& g = *scenario.metric;
    const CheckOptions co{scenario.solve.tol, scenario.solve.point_tol};
    const SampleSet samples = make_samples(scenario.space, scenario.solve.sampling);

    RunReport report;
    report.payload = report_header("check", scenario, scenario.solve.sampling.seed);
    report.payload["tolerance"] = co.tol;

    json checks = json::array();
    bool all_passed = true;
    auto push = [&](const CheckReport& r) {
        checks.push_back(check_report_to_json(r, &scenario.space));
        all_passed = all_passed && r.passed();
    };

    push(check_axioms(g, samples, co));
    report.payload["symmetry"] = symmetry_to_json(is_symmetric(g, samples, co),
                                                  scenario.space);
    push(check_dg_bounds(g, samples, co));
    push(check_basic_properties(g, samples, co));

    if (scenario.maps) {
        const MapSystem& sys = *scenario.maps;
        push(check_weakly_commuting(g, sys.S, sys.A, samples, co));
        push(check_weakly_commuting(g, sys.T, sys.B, samples, co));
        push(check_range_inclusion(sys.T, sys.A, samples, co));
        push(check_range_inclusion(sys.S, sys.B, samples, co));

        ContractionReport contraction;
        if (scenario.constant) {
            const double bound = scenario.form == ContractionForm::Max ? 1.0 : 0.5;
            if (*scenario.constant < bound)
                contraction =
                    scenario.form == ContractionForm::Max
                        ? check_condition_max(g, sys, *scenario.constant, samples, co)
                        : check_condition_sum(g, sys, *scenario.constant, samples, co);
            else  // permitted only with run.exploratory
                contraction = check_condition_at(g, sys, *scenario.constant,
                                                 scenario.form, samples, co);
            all_passed = all_passed && contraction.passed();
        } else {
            contraction.form = scenario.form;
        }
        contraction.estimate = estimate_min_constant(g, sys, scenario.form, samples, co);
        report.payload["contraction"] = contraction_to_json(contraction, scenario.space);
    }

    report.payload["checks"] = checks;
    report.payload["passed"] = all_passed;
    report.exit_code = all_passed ? 0 : 1;
    report.payload["wall_time_ms"] = watch.ms();
    return report;
}

RunReport cmd_solve(const Scenario& input, const RunOverrides& overrides) {
    Stopwatch watch;
    Scenario scenario = input;
    apply_overrides(scenario, overrides);
    if (!scenario.metric) throw ConfigError("solve needs a gmetric");
    if (!scenario.maps) throw ConfigError("solve needs a map system");

    const SolveResult result =
        find_common_fixed_point(*scenario.metric, *scenario.maps, scenario.x0,
                                scenario.solve);

    RunReport report;
    report.payload = report_header("solve", scenario, scenario.solve.sampling.seed);
    report.payload["tolerance"] = scenario.solve.tol;

    json solve;
    json hyp;
    hyp["range_t_in_a"] = check_report_to_json(result.hypotheses.range_t_in_a,
                                               &scenario.space);
    hyp["range_s_in_b"] = check_report_to_json(result.hypotheses.range_s_in_b,
                                               &scenario.space);
    hyp["commuting_sa"] = check_report_to_json(result.hypotheses.commuting_sa,
                                               &scenario.space);
    hyp["commuting_tb"] = check_report_to_json(result.hypotheses.commuting_tb,
                                               &scenario.space);
    hyp["contraction"] = contraction_to_json(result.hypotheses.contraction,
                                             scenario.space);
    hyp["all_passed"] = result.hypotheses.all_passed();
    solve["hypotheses"] = hyp;
    solve["trace"] = trace_to_json(result.trace, scenario.space);
    solve["rate"] = check_report_to_json(result.rate, nullptr);
    solve["convergence"] = check_report_to_json(result.convergence, nullptr);
    if (result.certificate)
        solve["certificate"] = certificate_to_json(*result.certificate, scenario.space);
    solve["aborted_strict"] = result.aborted_strict;
    solve["notes"] = result.notes;
    report.payload["solve"] = solve;

    const bool accepted = result.certificate && result.certificate->accepted;
    report.payload["passed"] = accepted;
    report.exit_code = accepted ? 0 : 1;
    report.payload["wall_time_ms"] = watch.ms();
    return report;
}

RunReport cmd_table(const Scenario& input, const RunOverrides& overrides) {
    Stopwatch watch;
    Scenario scenario = input;
    apply_overrides(scenario, overrides);
    if (!scenario.space.is_finite()) throw ConfigError("table needs a finite space");
    if (!scenario.metric) throw ConfigError("table needs a gmetric");
    const GMetric& g = *scenario.metric;
    const CheckOptions co{scenario.solve.tol, scenario.solve.point_tol};
    const SampleSet samples = make_samples(scenario.space, scenario.solve.sampling);

    RunReport report;
    report.payload = report_header("table", scenario, scenario.solve.sampling.seed);

    const CheckReport axioms = check_axioms(g, samples, co);
    report.payload["checks"] = json::array({check_report_to_json(axioms, &scenario.space)});
    report.payload["symmetry"] = symmetry_to_json(is_symmetric(g, samples, co),
                                                  scenario.space);
    report.payload["passed"] = axioms.passed();
    report.exit_code = axioms.passed() ? 0 : 1;
    report.payload["wall_time_ms"] = watch.ms();
    return report;
}

}  // namespace gfix
