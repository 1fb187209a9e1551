#include "gfix/space.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>

#include "gfix/errors.hpp"

namespace gfix {

struct Space::Impl {
    SpaceKind kind;
    std::vector<std::string> labels;  // finite
    std::vector<double> values;      // finite
    double lo = 0.0, hi = 0.0;       // interval
};

Space Space::finite(std::vector<std::string> labels) {
    std::vector<double> values(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) values[i] = static_cast<double>(i);
    return finite(std::move(labels), std::move(values));
}

Space Space::finite(std::vector<std::string> labels, std::vector<double> values) {
    if (labels.empty()) throw ConfigError("finite space needs at least one point");
    if (labels.size() != values.size())
        throw ConfigError("finite space: labels and values differ in length");
    std::set<std::string> seen_labels(labels.begin(), labels.end());
    if (seen_labels.size() != labels.size())
        throw ConfigError("finite space: duplicate labels");
    std::set<double> seen_values(values.begin(), values.end());
    if (seen_values.size() != values.size())
        throw ConfigError("finite space: point values must be distinct");
    for (double v : values)
        if (!std::isfinite(v)) throw ConfigError("finite space: non-finite point value");
    auto impl = std::make_shared<Impl>();
    impl->kind = SpaceKind::Finite;
    impl->labels = std::move(labels);
    impl->values = std::move(values);
    return Space(std::move(impl));
}

Space Space::interval(double lo, double hi) {
    if (!(lo < hi)) throw ConfigError("interval space needs lo < hi");
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw ConfigError("interval space bounds must be finite");
    auto impl = std::make_shared<Impl>();
    impl->kind = SpaceKind::Interval;
    impl->lo = lo;
    impl->hi = hi;
    return Space(std::move(impl));
}

SpaceKind Space::kind() const { return impl_->kind; }

std::size_t Space::size() const {
    if (!is_finite()) throw UnsupportedError("size() on an interval space");
    return impl_->values.size();
}

double Space::lo() const {
    if (is_finite()) throw UnsupportedError("lo() on a finite space");
    return impl_->lo;
}

double Space::hi() const {
    if (is_finite()) throw UnsupportedError("hi() on a finite space");
    return impl_->hi;
}

const std::vector<std::string>& Space::labels() const {
    if (!is_finite()) throw UnsupportedError("labels() on an interval space");
    return impl_->labels;
}

const std::vector<double>& Space::values() const {
    if (!is_finite()) throw UnsupportedError("values() on an interval space");
    return impl_->values;
}

Point Space::point(std::size_t index) const {
    const auto& v = values();
    if (index >= v.size()) throw ConfigError("point index out of range");
    return v[index];
}

std::size_t Space::index_of(Point p, double tol) const {
    const auto& v = values();
    std::size_t best = v.size();
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i) {
        double d = std::abs(v[i] - p);
        if (d < best_dist) { best_dist = d; best = i; }
    }
    if (best == v.size() || best_dist > tol)
        throw EvalError("point " + std::to_string(p) + " is not in the finite space");
    return best;
}

bool Space::contains(Point p, double tol) const {
    if (!std::isfinite(p)) return false;
    if (is_finite()) {
        for (double v : impl_->values)
            if (std::abs(v - p) <= tol) return true;
        return false;
    }
    return p >= impl_->lo - tol && p <= impl_->hi + tol;
}

bool Space::same_point(Point a, Point b, double tol) const {
    if (is_finite()) return index_of(a, tol) == index_of(b, tol);
    return std::abs(a - b) <= tol;
}

std::string Space::describe(Point p) const {
    if (is_finite()) {
        for (std::size_t i = 0; i < impl_->values.size(); ++i)
            if (impl_->values[i] == p || std::abs(impl_->values[i] - p) <= 1e-9)
                return impl_->labels[i];
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", p);
    return buf;
}

std::vector<Point> Space::enumerate() const {
    if (!is_finite()) throw UnsupportedError("cannot enumerate an interval space");
    return impl_->values;
}

bool Space::operator==(const Space& other) const {
    if (impl_ == other.impl_) return true;
    if (impl_->kind != other.impl_->kind) return false;
    if (is_finite())
        return impl_->values == other.impl_->values && impl_->labels == other.impl_->labels;
    return impl_->lo == other.impl_->lo && impl_->hi == other.impl_->hi;
}

std::uint64_t SplitMix64::next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double SplitMix64::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SplitMix64::next_in(double lo, double hi) {
    return lo + (hi - lo) * next_unit();
}

std::size_t SplitMix64::next_index(std::size_t n) {
    return static_cast<std::size_t>(next_unit() * static_cast<double>(n)) % n;
}

namespace {

// Exhaustive tuples for small finite spaces, seeded samples otherwise.
void fill_finite(SampleSet& s, const SampleOptions& opts) {
    const auto pts = s.space.enumerate();
    const std::size_t n = pts.size();
    s.points = pts;
    s.aux_pool = pts;

    const bool small_pairs = n * n <= opts.finite_cap;
    const bool small_triples = n * n * n <= opts.finite_cap;
    const bool small_quints = n * n * n * n * n <= opts.finite_cap;
    s.exhaustive = small_pairs && small_triples && small_quints;

    SplitMix64 rng(opts.seed);
    if (small_pairs) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) s.pairs.push_back({pts[i], pts[j]});
    } else {
        for (int k = 0; k < opts.triples; ++k)
            s.pairs.push_back({pts[rng.next_index(n)], pts[rng.next_index(n)]});
    }
    if (small_triples) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    s.triples.push_back({pts[i], pts[j], pts[k]});
    } else {
        for (int k = 0; k < opts.triples; ++k)
            s.triples.push_back(
                {pts[rng.next_index(n)], pts[rng.next_index(n)], pts[rng.next_index(n)]});
    }
    if (small_quints) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    for (std::size_t d = 0; d < n; ++d)
                        for (std::size_t e = 0; e < n; ++e)
                            s.quintuples.push_back({pts[a], pts[b], pts[c], pts[d], pts[e]});
    } else {
        for (int k = 0; k < opts.quintuples; ++k)
            s.quintuples.push_back({pts[rng.next_index(n)], pts[rng.next_index(n)],
                                    pts[rng.next_index(n)], pts[rng.next_index(n)],
                                    pts[rng.next_index(n)]});
    }
}

void fill_interval(SampleSet& s, const SampleOptions& opts) {
    const double lo = s.space.lo(), hi = s.space.hi();
    SplitMix64 rng(opts.seed);

    for (int i = 0; i < opts.grid_points; ++i) {
        double t = opts.grid_points == 1 ? 0.0
                                         : static_cast<double>(i) / (opts.grid_points - 1);
        s.points.push_back(lo + t * (hi - lo));
    }
    const std::size_t grid_end = s.points.size();
    for (int i = 0; i < opts.random_points; ++i) s.points.push_back(rng.next_in(lo, hi));

    // Pairs: grid cross product plus seeded random pairs.
    for (std::size_t i = 0; i < grid_end; ++i)
        for (std::size_t j = 0; j < grid_end; ++j)
            s.pairs.push_back({s.points[i], s.points[j]});
    for (int i = 0; i < opts.random_pairs; ++i)
        s.pairs.push_back({rng.next_in(lo, hi), rng.next_in(lo, hi)});

    // Triples: random draws from the pool plus structured shapes (diagonals
    // and repeated-point patterns), which exercise G1-G3 directly.
    const std::size_t pool = s.points.size();
    for (int i = 0; i < opts.triples; ++i)
        s.triples.push_back({s.points[rng.next_index(pool)], s.points[rng.next_index(pool)],
                             s.points[rng.next_index(pool)]});
    for (std::size_t i = 0; i < grid_end; ++i)
        s.triples.push_back({s.points[i], s.points[i], s.points[i]});
    for (int i = 0; i < 600; ++i) {
        Point x = s.points[rng.next_index(pool)], y = s.points[rng.next_index(pool)];
        s.triples.push_back(i % 2 == 0 ? std::array<Point, 3>{x, x, y}
                                       : std::array<Point, 3>{x, y, y});
    }

    // 5-tuples: random plus collapsed patterns so implications with repeated
    // points get hit.
    for (int i = 0; i < opts.quintuples; ++i) {
        std::array<Point, 5> q;
        for (auto& v : q) v = s.points[rng.next_index(pool)];
        if (i % 5 == 0) q[1] = q[0];
        if (i % 7 == 0) q[2] = q[0];
        if (i % 11 == 0) q[3] = q[4];
        s.quintuples.push_back(q);
    }

    for (int i = 0; i < 256; ++i) s.aux_pool.push_back(rng.next_in(lo, hi));
    s.exhaustive = false;
}

}  // namespace

SampleSet make_samples(const Space& space, const SampleOptions& opts) {
    SampleSet s{space, {}, {}, {}, {}, {}, opts.seed, false};
    if (space.is_finite())
        fill_finite(s, opts);
    else
        fill_interval(s, opts);
    return s;
}

}  // namespace gfix
