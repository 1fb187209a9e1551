#include "gfix/contraction.hpp"

#include <cmath>

#include "gfix/errors.hpp"

namespace gfix {

std::string to_string(ContractionForm f) {
    return f == ContractionForm::Max ? "max" : "sum";
}

namespace {

struct PairTerms {
    double lhs1, base1;  // G(Sx,Ty,Ty) vs its comparison term
    double lhs2, base2;  // G(Sx,Sx,Ty) vs its comparison term
};

PairTerms eval_terms(const GMetric& g, const MapSystem& sys, Point x, Point y,
                     ContractionForm form) {
    const Point ax = sys.A(x), by = sys.B(y), sx = sys.S(x), ty = sys.T(y);
    PairTerms t{};
    t.lhs1 = g(sx, ty, ty);
    t.lhs2 = g(sx, sx, ty);
    if (form == ContractionForm::Max) {
        t.base1 = std::max({g(ax, by, by), g(sx, ax, ax), g(ty, by, by)});
        t.base2 = std::max({g(ax, ax, by), g(sx, sx, ax), g(ty, ty, by)});
    } else {
        t.base1 = g(sx, ax, ax) + g(ty, by, by);
        t.base2 = g(sx, sx, ax) + g(ty, ty, by);
    }
    return t;
}

ContractionReport check_condition(const GMetric& g, const MapSystem& sys,
                                  double constant, ContractionForm form,
                                  const SampleSet& samples, const CheckOptions& opts) {
    sys.validate();
    if (!(g.space() == sys.space()))
        throw ConfigError("metric and map system live on different spaces");

    ContractionReport report;
    report.form = form;
    report.constant = constant;
    report.check.name = "contraction-" + to_string(form);
    const char* rule1 = form == ContractionForm::Max ? "2.1" : "2.14";
    const char* rule2 = form == ContractionForm::Max ? "2.2" : "2.15";

    for (const auto& p : samples.pairs) {
        const PairTerms t = eval_terms(g, sys, p[0], p[1], form);
        ++report.check.checked;
        if (t.lhs1 > constant * t.base1 + opts.tol)
            report.check.add_violation({rule1, {p[0], p[1]}, t.lhs1, constant * t.base1});
        if (t.lhs2 > constant * t.base2 + opts.tol)
            report.check.add_violation({rule2, {p[0], p[1]}, t.lhs2, constant * t.base2});
    }
    return report;
}

}  // namespace

ContractionReport check_condition_max(const GMetric& g, const MapSystem& sys, double h,
                                      const SampleSet& samples,
                                      const CheckOptions& opts) {
    if (!(h >= 0.0 && h < 1.0))
        throw ConfigError("max-form constant must lie in [0, 1)");
    return check_condition(g, sys, h, ContractionForm::Max, samples, opts);
}

ContractionReport check_condition_sum(const GMetric& g, const MapSystem& sys,
                                      double kappa, const SampleSet& samples,
                                      const CheckOptions& opts) {
    if (!(kappa >= 0.0 && kappa < 0.5))
        throw ConfigError("sum-form constant must lie in [0, 1/2)");
    return check_condition(g, sys, kappa, ContractionForm::Sum, samples, opts);
}

ContractionReport check_condition_at(const GMetric& g, const MapSystem& sys, double c,
                                     ContractionForm form, const SampleSet& samples,
                                     const CheckOptions& opts) {
    if (!(c >= 0.0)) throw ConfigError("contraction constant must be nonnegative");
    ContractionReport report = check_condition(g, sys, c, form, samples, opts);
    const double bound = form == ContractionForm::Max ? 1.0 : 0.5;
    if (c >= bound)
        report.check.note = "exploratory: constant outside the theorem range [0, " +
                            std::to_string(bound) + ")";
    return report;
}

ConstantEstimate estimate_min_constant(const GMetric& g, const MapSystem& sys,
                                       ContractionForm form, const SampleSet& samples,
                                       const CheckOptions& opts) {
    sys.validate();
    ConstantEstimate est;
    double best = -1.0;

    for (const auto& p : samples.pairs) {
        const PairTerms t = eval_terms(g, sys, p[0], p[1], form);
        for (const auto& [lhs, base] : {std::pair{t.lhs1, t.base1},
                                        std::pair{t.lhs2, t.base2}}) {
            if (lhs <= opts.tol && base <= opts.tol) {
                ++est.pairs_skipped;  // no information at a common fixed point
                continue;
            }
            if (base <= opts.tol) {
                est.status = ConstantEstimate::Status::Unbounded;
                est.witness = p;
                est.pairs_used += 1;
                return est;
            }
            const double ratio = lhs / base;
            ++est.pairs_used;
            if (ratio > best) {
                best = ratio;
                est.witness = p;
            }
        }
    }
    if (est.pairs_used == 0) {
        est.status = ConstantEstimate::Status::Inconclusive;
        return est;
    }
    est.status = ConstantEstimate::Status::Ok;
    est.value = std::max(best, 0.0);
    return est;
}

}  // namespace gfix
