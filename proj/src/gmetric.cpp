#include "gfix/gmetric.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gfix/errors.hpp"

namespace gfix {

std::string to_string(SymmetryClass s) {
    switch (s) {
        case SymmetryClass::Symmetric: return "symmetric";
        case SymmetryClass::NonSymmetric: return "non-symmetric";
        case SymmetryClass::SymmetricOnSample: return "symmetric-on-sample";
        case SymmetryClass::Unknown: return "unknown";
    }
    return "unknown";
}

std::vector<Violation> CheckReport::worst_violations(std::size_t n) const {
    std::vector<Violation> out = violations;
    std::sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
        const double ea = a.lhs - a.rhs, eb = b.lhs - b.rhs;
        if (ea != eb) return ea > eb;
        if (a.witness != b.witness) return a.witness < b.witness;
        return a.rule < b.rule;
    });
    if (out.size() > n) out.resize(n);
    return out;
}

std::string CheckReport::describe_first(const Space& space) const {
    if (violations.empty()) return "";
    const Violation& v = violations.front();
    std::ostringstream out;
    out << v.rule << " at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
        if (i) out << ", ";
        out << space.describe(v.witness[i]);
    }
    out << "): lhs=" << v.lhs << " rhs=" << v.rhs;
    return out.str();
}

GMetric::GMetric(Space space, Eval eval, std::string name, SymmetryClass hint,
                 std::optional<std::array<Point, 2>> hint_witness)
    : space_(std::move(space)),
      eval_(std::move(eval)),
      name_(std::move(name)),
      hint_(hint),
      hint_witness_(std::move(hint_witness)) {
    if (!eval_) throw ConfigError("GMetric needs an evaluation function");
}

double GMetric::operator()(Point x, Point y, Point z) const {
    double v = eval_(x, y, z);
    if (!std::isfinite(v) || v < 0.0) {
        std::ostringstream out;
        out << name_ << " evaluated to " << v << " at (" << space_.describe(x) << ", "
            << space_.describe(y) << ", " << space_.describe(z) << ")";
        throw EvalError(out.str());
    }
    return v;
}

CheckReport check_axioms(const GMetric& g, const SampleSet& samples,
                         const CheckOptions& opts) {
    CheckReport report;
    report.name = "axioms";
    const Space& sp = g.space();
    const double tol = opts.tol;

    // G5's auxiliary point: every point on finite spaces, fresh seeded draws
    // per triple on intervals.
    const bool finite = sp.is_finite();
    SplitMix64 aux_rng(samples.seed ^ 0xa5a5a5a5a5a5a5a5ULL);
    const int aux_draws = 32;

    for (const auto& t : samples.triples) {
        const Point x = t[0], y = t[1], z = t[2];
        const double gxyz = g(x, y, z);
        ++report.checked;

        const bool xy = sp.same_point(x, y, opts.point_tol);
        const bool yz = sp.same_point(y, z, opts.point_tol);

        if (xy && yz && std::abs(gxyz) > tol)
            report.add_violation({"G1", {x, y, z}, gxyz, 0.0});
        if (!xy && gxyz <= tol)
            report.add_violation({"G2", {x, y, z}, gxyz, tol});
        if (!yz) {
            const double gxxy = g(x, x, y);
            if (gxxy > gxyz + tol)
                report.add_violation({"G3", {x, y, z}, gxxy, gxyz});
        }
        {
            const double perms[6] = {gxyz,       g(x, z, y), g(y, x, z),
                                     g(y, z, x), g(z, x, y), g(z, y, x)};
            const auto [lo_it, hi_it] = std::minmax_element(perms, perms + 6);
            if (*hi_it - *lo_it > tol)
                report.add_violation({"G4", {x, y, z}, *hi_it, *lo_it});
        }
        if (finite) {
            for (Point a : samples.aux_pool) {
                const double rhs = g(x, a, a) + g(a, y, z);
                if (gxyz > rhs + tol)
                    report.add_violation({"G5", {x, y, z, a}, gxyz, rhs});
            }
        } else {
            for (int k = 0; k < aux_draws; ++k) {
                const Point a = aux_rng.next_in(sp.lo(), sp.hi());
                const double rhs = g(x, a, a) + g(a, y, z);
                if (gxyz > rhs + tol)
                    report.add_violation({"G5", {x, y, z, a}, gxyz, rhs});
            }
        }
    }
    return report;
}

SymmetryResult is_symmetric(const GMetric& g, const SampleSet& samples,
                            const CheckOptions& opts) {
    SymmetryResult result;
    if (g.hint() == SymmetryClass::Symmetric) {
        result.state = SymmetryClass::Symmetric;
        return result;
    }
    if (g.hint() == SymmetryClass::NonSymmetric && g.hint_witness()) {
        result.state = SymmetryClass::NonSymmetric;
        result.witness = g.hint_witness();
        return result;
    }
    for (const auto& p : samples.pairs) {
        ++result.checked;
        const double fwd = g(p[0], p[1], p[1]);
        const double rev = g(p[1], p[0], p[0]);
        if (std::abs(fwd - rev) > opts.tol) {
            result.state = SymmetryClass::NonSymmetric;
            result.witness = p;
            return result;
        }
    }
    // Finite exhaustive pair sets certify symmetry; a sampled interval only
    // ever supports it.
    result.state = samples.exhaustive ? SymmetryClass::Symmetric
                                      : SymmetryClass::SymmetricOnSample;
    return result;
}

double derived_metric(const GMetric& g, Point x, Point y) {
    return g(x, y, y) + g(y, x, x);
}

CheckReport check_dg_bounds(const GMetric& g, const SampleSet& samples,
                            const CheckOptions& opts) {
    CheckReport report;
    report.name = "dg-bounds";
    const SymmetryResult sym = is_symmetric(g, samples, opts);
    const bool certified_symmetric = sym.state == SymmetryClass::Symmetric;
    report.note = certified_symmetric ? "symmetric: asserting d_G = 2 G(x,y,y)"
                                      : "asserting (3/2) G(x,y,y) <= d_G <= 3 G(x,y,y)";

    for (const auto& p : samples.pairs) {
        const Point x = p[0], y = p[1];
        const double fwd = g(x, y, y);
        const double dg = fwd + g(y, x, x);
        ++report.checked;
        if (certified_symmetric) {
            if (std::abs(dg - 2.0 * fwd) > opts.tol)
                report.add_violation({"dG=2G", {x, y}, dg, 2.0 * fwd});
        } else {
            if (1.5 * fwd > dg + opts.tol)
                report.add_violation({"(3/2)G<=dG", {x, y}, 1.5 * fwd, dg});
            if (dg > 3.0 * fwd + opts.tol)
                report.add_violation({"dG<=3G", {x, y}, dg, 3.0 * fwd});
        }
        const double gxxy = g(x, x, y);
        if (gxxy > 2.0 * fwd + opts.tol)
            report.add_violation({"G(x,x,y)<=2G(x,y,y)", {x, y}, gxxy, 2.0 * fwd});
    }
    return report;
}

CheckReport check_basic_properties(const GMetric& g, const SampleSet& samples,
                                   const CheckOptions& opts) {
    CheckReport report;
    report.name = "basic-properties";
    const Space& sp = g.space();
    const double tol = opts.tol;

    for (const auto& q : samples.quintuples) {
        const Point r = q[0], u = q[1], s = q[2], y = q[3], x = q[4];
        ++report.checked;

        const double grus = g(r, u, s);
        // (i) zero value forces a diagonal triple
        if (grus <= tol) {
            const bool diag = sp.same_point(r, u, opts.point_tol) &&
                              sp.same_point(u, s, opts.point_tol);
            if (!diag) report.add_violation({"(i)", {r, u, s}, grus, 0.0});
        }
        // (ii) G(r,y,s) <= G(r,y,y) + G(y,s,y)
        {
            const double lhs = g(r, y, s), rhs = g(r, y, y) + g(y, s, y);
            if (lhs > rhs + tol) report.add_violation({"(ii)", {r, y, s}, lhs, rhs});
        }
        // (iii) G(r,r,u) <= 2 G(u,r,u)
        {
            const double lhs = g(r, r, u), rhs = 2.0 * g(u, r, u);
            if (lhs > rhs + tol) report.add_violation({"(iii)", {r, u}, lhs, rhs});
        }
        // (iv) G(r,u,s) <= G(r,x,s) + G(x,u,s)
        {
            const double rhs = g(r, x, s) + g(x, u, s);
            if (grus > rhs + tol) report.add_violation({"(iv)", {r, u, s, x}, grus, rhs});
        }
        // (v) G(r,u,s) <= (2/3)(G(r,u,y) + G(r,y,s) + G(y,u,s))
        {
            const double rhs = (2.0 / 3.0) * (g(r, u, y) + g(r, y, s) + g(y, u, s));
            if (grus > rhs + tol) report.add_violation({"(v)", {r, u, s, y}, grus, rhs});
        }
        // (vi) G(r,u,s) <= G(r,y,y) + G(y,u,y) + G(y,y,s)
        {
            const double rhs = g(r, y, y) + g(y, u, y) + g(y, y, s);
            if (grus > rhs + tol) report.add_violation({"(vi)", {r, u, s, y}, grus, rhs});
        }
        // (vii) |G(r,u,s) - G(r,u,y)| <= max{G(y,s,s), G(s,y,y)}
        {
            const double lhs = std::abs(grus - g(r, u, y));
            const double rhs = std::max(g(y, s, s), g(s, y, y));
            if (lhs > rhs + tol) report.add_violation({"(vii)", {r, u, s, y}, lhs, rhs});
        }
        // (viii) |G(r,u,s) - G(r,u,x)| <= G(r,x,s)
        {
            const double lhs = std::abs(grus - g(r, u, x));
            const double rhs = g(r, x, s);
            if (lhs > rhs + tol) report.add_violation({"(viii)", {r, u, s, x}, lhs, rhs});
        }
        // (ix) |G(r,u,s) - G(u,s,s)| <= max{G(r,s,s), G(s,r,r)}
        {
            const double lhs = std::abs(grus - g(u, s, s));
            const double rhs = std::max(g(r, s, s), g(s, r, r));
            if (lhs > rhs + tol) report.add_violation({"(ix)", {r, u, s}, lhs, rhs});
        }
        // (x) |G(r,y,y) - G(y,r,r)| <= max{G(y,r,r), G(r,y,y)}
        {
            const double fwd = g(r, y, y), rev = g(y, r, r);
            const double lhs = std::abs(fwd - rev), rhs = std::max(rev, fwd);
            if (lhs > rhs + tol) report.add_violation({"(x)", {r, y}, lhs, rhs});
        }
    }
    return report;
}

}  // namespace gfix
