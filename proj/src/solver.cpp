#include "gfix/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "gfix/errors.hpp"

namespace gfix {

std::string to_string(TraceStatus s) {
    switch (s) {
        case TraceStatus::Converged: return "converged";
        case TraceStatus::MaxIter: return "max-iter";
        case TraceStatus::PreimageFailure: return "preimage-failure";
    }
    return "max-iter";
}

std::string to_string(Uniqueness u) {
    switch (u) {
        case Uniqueness::ProvedByEnumeration: return "proved-by-enumeration";
        case Uniqueness::UniqueOnSample: return "unique-on-sample";
        case Uniqueness::NotChecked: return "not-checked";
        case Uniqueness::MultipleFound: return "multiple-found";
    }
    return "not-checked";
}

double FixedPointCertificate::max_residual() const {
    return std::max({residual_a, residual_b, residual_s, residual_t});
}

bool HypothesisReport::all_passed() const {
    return range_t_in_a.passed() && range_s_in_b.passed() && commuting_sa.passed() &&
           commuting_tb.passed() && contraction.passed();
}

std::vector<std::string> HypothesisReport::failed() const {
    std::vector<std::string> out;
    if (!range_t_in_a.passed()) out.push_back("range TX in AX");
    if (!range_s_in_b.passed()) out.push_back("range SX in BX");
    if (!commuting_sa.passed()) out.push_back("weak commutativity (S,A)");
    if (!commuting_tb.passed()) out.push_back("weak commutativity (T,B)");
    if (!contraction.passed()) out.push_back("contraction condition");
    return out;
}

IterationTrace build_sequence(const GMetric& g, const MapSystem& sys, Point x0,
                              int n_max, double tol, const CheckOptions& opts) {
    sys.validate();
    IterationTrace trace;
    trace.x_seq.push_back(x0);

    // y_{2n} = T x_{2n}, y_{2n+1} = S x_{2n+1}; the next x solves
    // A x_{2n+1} = y_{2n} (even steps) or B x_{2n+2} = y_{2n+1} (odd steps).
    try {
        trace.y_seq.push_back(sys.T(x0));
        int consecutive_small = 0;
        while (static_cast<int>(trace.y_seq.size()) < n_max) {
            const std::size_t n = trace.y_seq.size() - 1;  // index of last y
            const bool even = n % 2 == 0;
            const SelfMap& inverted = even ? sys.A : sys.B;
            const Point x_next = inverted.solve_preimage(trace.y_seq.back(), opts);
            trace.x_seq.push_back(x_next);
            const Point y_next = even ? sys.S(x_next) : sys.T(x_next);
            trace.y_seq.push_back(y_next);
            trace.step_g.push_back(g(trace.y_seq[n], y_next, y_next));
            if (trace.step_g.back() <= tol) {
                if (++consecutive_small >= 3) {
                    trace.status = TraceStatus::Converged;
                    break;
                }
            } else {
                consecutive_small = 0;
            }
        }
    } catch (const NoPreimageError& e) {
        trace.status = TraceStatus::PreimageFailure;
        trace.failed_target = e.target();
        return trace;
    }
    if (trace.status == TraceStatus::Converged) trace.limit = trace.y_seq.back();
    return trace;
}

CheckReport check_rate(const GMetric& g, IterationTrace& trace, double c,
                       ContractionForm form, const CheckOptions& opts) {
    CheckReport report;
    report.name = "rate-bound";
    double lambda = c;
    if (form == ContractionForm::Sum) {
        if (!(c >= 0.0 && c < 0.5))
            throw ConfigError("sum-form rate constant must lie in [0, 1/2)");
        lambda = c / (1.0 - c);
    } else if (!(c >= 0.0 && c < 1.0)) {
        throw ConfigError("max-form rate constant must lie in [0, 1)");
    }

    const std::vector<double>& steps = trace.step_g;
    if (steps.empty()) {
        report.conclusive = false;
        report.note = "trace too short for a rate check";
        return report;
    }
    const double g0 = steps.front();

    trace.predicted_bound.clear();
    double bound = g0;
    for (std::size_t n = 0; n < steps.size(); ++n) {
        trace.predicted_bound.push_back(bound);
        ++report.checked;
        if (steps[n] > bound + opts.tol)
            report.add_violation({"2.5", {static_cast<double>(n)}, steps[n], bound});
        bound *= lambda;
    }

    // Tail bound G(y_n, y_m, y_m) <= lambda^n/(1-lambda) * g0 over a
    // deterministic spread of index pairs.
    const std::size_t len = trace.y_seq.size();
    const std::size_t stride = std::max<std::size_t>(1, len / 16);
    for (std::size_t n = 0; n + 1 < len; n += stride) {
        const std::size_t candidates[3] = {n + 1, (n + len) / 2, len - 1};
        for (std::size_t m : candidates) {
            if (m <= n || m >= len) continue;
            const double lhs = g(trace.y_seq[n], trace.y_seq[m], trace.y_seq[m]);
            const double rhs = std::pow(lambda, static_cast<double>(n)) /
                               (1.0 - lambda) * g0;
            ++report.checked;
            if (lhs > rhs + opts.tol)
                report.add_violation(
                    {"tail", {static_cast<double>(n), static_cast<double>(m)}, lhs, rhs});
        }
    }
    return report;
}

CheckReport check_convergence_equivalences(const GMetric& g,
                                           const IterationTrace& trace,
                                           const CheckOptions& opts) {
    CheckReport report;
    report.name = "convergence-equivalences";
    if (trace.status != TraceStatus::Converged || !trace.limit) {
        report.conclusive = false;
        report.note = "not converged";
        return report;
    }
    const Point z = *trace.limit;
    const std::size_t len = trace.y_seq.size();
    // Single steps are only bounded by tol at the stopping rule, so the tail
    // quantities get a 3x allowance.
    const double threshold = 3.0 * opts.tol;
    const std::size_t first = len > 4 ? len - 4 : 0;
    for (std::size_t n = first; n < len; ++n) {
        const Point yn = trace.y_seq[n];
        const double v1 = g(yn, yn, z);
        const double v2 = g(yn, z, z);
        ++report.checked;
        if (v1 > threshold)
            report.add_violation({"G(yn,yn,z)->0", {static_cast<double>(n)}, v1, threshold});
        if (v2 > threshold)
            report.add_violation({"G(yn,z,z)->0", {static_cast<double>(n)}, v2, threshold});
        for (std::size_t m = n + 1; m < len; ++m) {
            const double v3 = g(yn, trace.y_seq[m], z);
            if (v3 > threshold)
                report.add_violation(
                    {"G(yn,ym,z)->0", {static_cast<double>(n), static_cast<double>(m)}, v3,
                     threshold});
        }
    }
    return report;
}

std::vector<Point> brute_force_fixed_points(const MapSystem& sys,
                                            const CheckOptions& opts) {
    sys.validate();
    const Space& sp = sys.space();
    if (!sp.is_finite())
        throw UnsupportedError("brute_force_fixed_points needs a finite space");
    std::vector<Point> out;
    for (Point p : sp.enumerate()) {
        const bool fixed = sp.same_point(sys.A(p), p, opts.point_tol) &&
                           sp.same_point(sys.B(p), p, opts.point_tol) &&
                           sp.same_point(sys.S(p), p, opts.point_tol) &&
                           sp.same_point(sys.T(p), p, opts.point_tol);
        if (fixed) out.push_back(p);
    }
    return out;
}

SolveResult find_common_fixed_point(const GMetric& g, const MapSystem& sys, Point x0,
                                    const SolveOptions& opts) {
    sys.validate();
    if (!(g.space() == sys.space()))
        throw ConfigError("metric and map system live on different spaces");
    const CheckOptions co = opts.check_options();
    const SampleSet samples = make_samples(g.space(), opts.sampling);

    SolveResult result;
    result.hypotheses.range_t_in_a = check_range_inclusion(sys.T, sys.A, samples, co);
    result.hypotheses.range_s_in_b = check_range_inclusion(sys.S, sys.B, samples, co);
    result.hypotheses.commuting_sa = check_weakly_commuting(g, sys.S, sys.A, samples, co);
    result.hypotheses.commuting_tb = check_weakly_commuting(g, sys.T, sys.B, samples, co);
    result.hypotheses.estimate = estimate_min_constant(g, sys, opts.form, samples, co);

    const double bound = opts.form == ContractionForm::Max ? 1.0 : 0.5;
    std::optional<double> constant;
    if (opts.constant) {
        constant = *opts.constant;
    } else if (result.hypotheses.estimate.status == ConstantEstimate::Status::Ok &&
               result.hypotheses.estimate.value < bound) {
        constant = result.hypotheses.estimate.value;
    }
    const bool admissible = constant && *constant >= 0.0 && *constant < bound;

    if (admissible) {
        result.hypotheses.contraction =
            opts.form == ContractionForm::Max
                ? check_condition_max(g, sys, *constant, samples, co)
                : check_condition_sum(g, sys, *constant, samples, co);
    } else {
        // No constant inside the theorem range: the hypothesis is not met.
        result.hypotheses.contraction.form = opts.form;
        result.hypotheses.contraction.constant = constant.value_or(bound);
        result.hypotheses.contraction.check.name = "contraction-" + to_string(opts.form);
        result.hypotheses.contraction.check.note =
            "no admissible constant below " + std::to_string(bound);
        result.hypotheses.contraction.check.add_violation(
            {"constant-range", {result.hypotheses.estimate.witness[0],
                                result.hypotheses.estimate.witness[1]},
             result.hypotheses.estimate.status == ConstantEstimate::Status::Ok
                 ? result.hypotheses.estimate.value
                 : std::numeric_limits<double>::infinity(),
             bound});
    }
    result.hypotheses.contraction.estimate = result.hypotheses.estimate;

    if (!result.hypotheses.all_passed()) {
        std::ostringstream note;
        note << "hypothesis checks failed:";
        for (const auto& f : result.hypotheses.failed()) note << " [" << f << "]";
        result.notes.push_back(note.str());
        if (opts.strict) {
            result.aborted_strict = true;
            return result;
        }
    }

    result.trace = build_sequence(g, sys, x0, opts.n_max, opts.tol, co);
    if (result.trace.status == TraceStatus::PreimageFailure) {
        std::ostringstream note;
        note << "preimage failure at target " << *result.trace.failed_target;
        result.notes.push_back(note.str());
        return result;
    }

    if (admissible && result.trace.y_seq.size() >= 2)
        result.rate = check_rate(g, result.trace, *constant, opts.form, co);
    else {
        result.rate.name = "rate-bound";
        result.rate.conclusive = false;
        result.rate.note = "no admissible rate constant";
    }
    result.convergence = check_convergence_equivalences(g, result.trace, co);

    if (result.trace.status != TraceStatus::Converged) {
        result.notes.push_back("did not converge within n_max");
        return result;
    }

    FixedPointCertificate cert;
    cert.z = *result.trace.limit;
    cert.residual_a = g(sys.A(cert.z), cert.z, cert.z);
    cert.residual_b = g(sys.B(cert.z), cert.z, cert.z);
    cert.residual_s = g(sys.S(cert.z), cert.z, cert.z);
    cert.residual_t = g(sys.T(cert.z), cert.z, cert.z);
    cert.accepted = cert.max_residual() <= opts.tol;
    cert.rate_constant_used = admissible ? *constant : 0.0;

    // Sequential-continuity evidence of A and B along the generated tail.
    const std::size_t len = result.trace.y_seq.size();
    const std::size_t tail = len > 5 ? len - 5 : 0;
    double dev = 0.0;
    const Point az = sys.A(cert.z), bz = sys.B(cert.z);
    for (std::size_t n = tail; n < len; ++n) {
        const Point w = result.trace.y_seq[n];
        dev = std::max(dev, g(sys.A(w), az, az));
        dev = std::max(dev, g(sys.B(w), bz, bz));
    }
    cert.continuity_evidence = dev;

    if (g.space().is_finite()) {
        const auto fixed = brute_force_fixed_points(sys, co);
        if (fixed.size() == 1 && g.space().same_point(fixed[0], cert.z, co.point_tol)) {
            cert.uniqueness = Uniqueness::ProvedByEnumeration;
        } else if (fixed.size() >= 2) {
            cert.uniqueness = Uniqueness::MultipleFound;
            cert.uniqueness_witnesses = fixed;
        } else {
            cert.uniqueness = Uniqueness::NotChecked;
            result.notes.push_back("enumeration found no matching common fixed point");
        }
    } else if (!opts.starts.empty()) {
        std::vector<Point> limits{cert.z};
        for (Point s : opts.starts) {
            const IterationTrace t = build_sequence(g, sys, s, opts.n_max, opts.tol, co);
            if (t.status == TraceStatus::Converged) limits.push_back(*t.limit);
        }
        bool agree = true;
        for (Point zi : limits)
            if (std::abs(zi - cert.z) > 10.0 * opts.tol) agree = false;
        if (agree) {
            cert.uniqueness = Uniqueness::UniqueOnSample;
        } else {
            cert.uniqueness = Uniqueness::MultipleFound;
            cert.uniqueness_witnesses = limits;
            result.notes.push_back("multi-start limits disagree");
        }
    }

    if (!result.rate.passed() && result.rate.conclusive) {
        const auto failed = result.hypotheses.failed();
        std::ostringstream note;
        note << "rate bound violated; ";
        if (failed.empty())
            note << "all hypothesis checks passed - implementation defect";
        else {
            note << "failed hypothesis checks explain it:";
            for (const auto& f : failed) note << " [" << f << "]";
        }
        result.notes.push_back(note.str());
    }

    result.certificate = cert;
    return result;
}

}  // namespace gfix
