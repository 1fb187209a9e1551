#include "gfix/maps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "gfix/errors.hpp"

namespace gfix {

struct SelfMap::Impl {
    Space space;
    Fn apply;
    Fn preimage;  // may be null
    std::string label;

    Impl(Space s, Fn a, Fn p, std::string l)
        : space(std::move(s)), apply(std::move(a)), preimage(std::move(p)),
          label(std::move(l)) {}
};

SelfMap::SelfMap(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

namespace {

void validate_closure(const Space& space, const SelfMap::Fn& apply,
                      const std::string& label, const SampleOptions& sample_opts) {
    const SampleSet samples = make_samples(space, sample_opts);
    for (Point p : samples.points) {
        const Point q = apply(p);
        if (!space.contains(q, 1e-9)) {
            std::ostringstream out;
            out << "map " << label << " leaves the space: " << space.describe(p)
                << " -> " << q;
            throw InvalidConstruction(out.str());
        }
    }
}

}  // namespace

SelfMap SelfMap::affine(const Space& space, double slope, double intercept,
                        std::string label) {
    if (space.is_finite())
        throw ConfigError("affine maps are defined on interval spaces");
    auto apply = [slope, intercept](Point x) { return slope * x + intercept; };
    Fn preimage = nullptr;
    if (slope != 0.0)
        preimage = [slope, intercept](Point t) { return (t - intercept) / slope; };
    // Endpoint check suffices: an affine image of [lo, hi] is spanned by the
    // endpoint images.
    const double a = apply(space.lo()), b = apply(space.hi());
    if (!space.contains(a) || !space.contains(b)) {
        std::ostringstream out;
        out << "affine map " << slope << "*x + " << intercept
            << " leaves the interval: image [" << std::min(a, b) << ", "
            << std::max(a, b) << "]";
        throw InvalidConstruction(out.str());
    }
    return SelfMap(std::make_shared<Impl>(space, std::move(apply), std::move(preimage),
                                          std::move(label)));
}

SelfMap SelfMap::identity(const Space& space) {
    return SelfMap(std::make_shared<Impl>(
        space, [](Point x) { return x; }, [](Point t) { return t; }, "identity"));
}

SelfMap SelfMap::constant(const Space& space, Point value, std::string label) {
    if (!space.contains(value))
        throw InvalidConstruction("constant map value outside the space");
    return SelfMap(std::make_shared<Impl>(
        space, [value](Point) { return value; }, nullptr, std::move(label)));
}

SelfMap SelfMap::table(const Space& space, std::vector<std::size_t> image,
                       std::string label) {
    if (!space.is_finite()) throw ConfigError("table maps need a finite space");
    if (image.size() != space.size())
        throw ConfigError("table map must cover every point");
    for (std::size_t idx : image)
        if (idx >= space.size()) throw ConfigError("table map image index out of range");
    Space sp = space;
    auto apply = [sp, image](Point x) { return sp.point(image[sp.index_of(x)]); };
    return SelfMap(std::make_shared<Impl>(space, std::move(apply), nullptr,
                                          std::move(label)));
}

SelfMap SelfMap::custom(const Space& space, Fn apply, std::string label, Fn preimage,
                        const SampleOptions& sample_opts) {
    validate_closure(space, apply, label, sample_opts);
    return SelfMap(std::make_shared<Impl>(space, std::move(apply), std::move(preimage),
                                          std::move(label)));
}

Point SelfMap::operator()(Point x) const {
    const Point y = impl_->apply(x);
    if (!std::isfinite(y))
        throw EvalError("map " + impl_->label + " produced a non-finite value");
    return y;
}

bool SelfMap::has_preimage_oracle() const { return impl_->preimage != nullptr; }
const Space& SelfMap::space() const { return impl_->space; }
const std::string& SelfMap::label() const { return impl_->label; }

bool SelfMap::aliases(const SelfMap& other) const { return impl_ == other.impl_; }

Point SelfMap::solve_preimage(Point t, const CheckOptions& opts) const {
    const Space& sp = impl_->space;

    if (impl_->preimage) {
        const Point x = impl_->preimage(t);
        if (!sp.contains(x, opts.point_tol))
            throw NoPreimageError("preimage oracle of " + impl_->label +
                                      " left the space for target " + sp.describe(t),
                                  t);
        if (std::abs(impl_->apply(x) - t) > opts.tol)
            throw NoPreimageError("preimage oracle of " + impl_->label +
                                      " does not invert at target " + sp.describe(t),
                                  t);
        return x;
    }

    if (sp.is_finite()) {
        for (Point p : sp.enumerate())
            if (std::abs(impl_->apply(p) - t) <= opts.tol) return p;
        throw NoPreimageError("no point of the finite space maps to " + sp.describe(t),
                              t);
    }

    // Oracle-less interval map: bisection, guarded by a monotonicity probe.
    const int probe_n = 101;
    const double lo = sp.lo(), hi = sp.hi();
    int direction = 0;
    Point prev = impl_->apply(lo);
    for (int i = 1; i < probe_n; ++i) {
        const double x = lo + (hi - lo) * i / (probe_n - 1);
        const double v = impl_->apply(x);
        if (v > prev + opts.tol) {
            if (direction < 0)
                throw ConfigError("map " + impl_->label +
                                  " is not monotone; supply a preimage oracle");
            direction = 1;
        } else if (v < prev - opts.tol) {
            if (direction > 0)
                throw ConfigError("map " + impl_->label +
                                  " is not monotone; supply a preimage oracle");
            direction = -1;
        }
        prev = v;
    }

    double a = lo, b = hi;
    double fa = impl_->apply(a), fb = impl_->apply(b);
    if (direction < 0) { std::swap(a, b); std::swap(fa, fb); }
    if (t < std::min(fa, fb) - opts.tol || t > std::max(fa, fb) + opts.tol)
        throw NoPreimageError("target " + sp.describe(t) + " outside the image of " +
                                  impl_->label,
                              t);
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (a + b);
        const double fm = impl_->apply(mid);
        if (std::abs(fm - t) <= opts.tol) return mid;
        if ((fm < t) == (fa < t)) { a = mid; fa = fm; }
        else { b = mid; }
        if (std::abs(b - a) < 1e-15) break;
    }
    const double mid = 0.5 * (a + b);
    if (std::abs(impl_->apply(mid) - t) <= opts.tol) return mid;
    throw NoPreimageError("bisection on " + impl_->label + " did not reach target " +
                              sp.describe(t),
                          t);
}

void MapSystem::validate() const {
    if (!(A.space() == B.space() && B.space() == S.space() && S.space() == T.space()))
        throw ConfigError("all four maps must share one space");
}

CheckReport check_weakly_commuting(const GMetric& g, const SelfMap& f, const SelfMap& h,
                                   const SampleSet& samples, const CheckOptions& opts) {
    CheckReport report;
    report.name = "weakly-commuting(" + f.label() + ", " + h.label() + ")";
    if (f.aliases(h)) {
        // f(f(x)) = f(f(x)): the left side is G(w,w,w) = 0.
        report.note = "aliased pair; holds identically";
        report.checked = samples.points.size();
        return report;
    }
    for (Point x : samples.points) {
        const Point fh = f(h(x)), hf = h(f(x));
        const double lhs = g(fh, hf, hf);
        const double rhs = g(f(x), h(x), h(x));
        ++report.checked;
        if (lhs > rhs + opts.tol)
            report.add_violation({"weak-commute", {x}, lhs, rhs});
    }
    return report;
}

CheckReport check_range_inclusion(const SelfMap& f, const SelfMap& h,
                                  const SampleSet& samples, const CheckOptions& opts) {
    CheckReport report;
    report.name = "range(" + f.label() + ") in range(" + h.label() + ")";
    const Space& sp = f.space();

    if (f.aliases(h)) {
        report.note = "aliased pair; identical images";
        report.checked = samples.points.size();
        return report;
    }

    if (sp.is_finite()) {
        // Exact image subset test.
        std::vector<Point> h_image;
        for (Point p : sp.enumerate()) h_image.push_back(h(p));
        for (Point p : sp.enumerate()) {
            const Point t = f(p);
            ++report.checked;
            const bool covered = std::any_of(h_image.begin(), h_image.end(), [&](Point q) {
                return sp.same_point(q, t, opts.point_tol);
            });
            if (!covered) report.add_violation({"range", {p, t}, t, 0.0});
        }
        return report;
    }

    if (h.has_preimage_oracle()) {
        for (Point x : samples.points) {
            const Point t = f(x);
            ++report.checked;
            try {
                const Point u = h.solve_preimage(t, opts);
                (void)u;
            } catch (const NoPreimageError&) {
                report.add_violation({"range", {x, t}, t, 0.0});
            }
        }
        return report;
    }

    // Sampled-image coverage: min distance from each target to the sampled
    // image of h, with a tolerance adapted to the image sample's resolution.
    if (samples.points.size() < 16) {
        report.conclusive = false;
        report.note = "no preimage oracle and no dense sample";
        return report;
    }
    std::vector<double> image;
    image.reserve(samples.points.size());
    for (Point x : samples.points) image.push_back(h(x));
    std::sort(image.begin(), image.end());
    double max_gap = 0.0;
    for (std::size_t i = 1; i < image.size(); ++i)
        max_gap = std::max(max_gap, image[i] - image[i - 1]);
    const double coverage_tol = std::max(opts.tol, max_gap);

    double worst = 0.0;
    for (Point x : samples.points) {
        const Point t = f(x);
        ++report.checked;
        auto it = std::lower_bound(image.begin(), image.end(), t);
        double dmin = std::numeric_limits<double>::infinity();
        if (it != image.end()) dmin = std::min(dmin, *it - t);
        if (it != image.begin()) dmin = std::min(dmin, t - *(it - 1));
        worst = std::max(worst, dmin);
        if (dmin > coverage_tol) report.add_violation({"range", {x, t}, dmin, coverage_tol});
    }
    std::ostringstream note;
    note << "sampled-image coverage; worst min-distance " << worst;
    report.note = note.str();
    return report;
}

Point preimage_solve(const SelfMap& m, Point t, const CheckOptions& opts) {
    return m.solve_preimage(t, opts);
}

}  // namespace gfix
