#include "gfix/constructors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gfix/errors.hpp"

namespace gfix {

namespace {

double checked_eval(const MetricFn::Eval& eval, const Space& sp, Point x, Point y,
                    const std::string& name) {
    double v = eval(x, y);
    if (!std::isfinite(v) || v < 0.0) {
        std::ostringstream out;
        out << name << " evaluated to " << v << " at (" << sp.describe(x) << ", "
            << sp.describe(y) << ")";
        throw EvalError(out.str());
    }
    return v;
}

void validate_metric(const Space& space, const MetricFn::Eval& eval,
                     const std::string& name, const SampleOptions& sample_opts,
                     const CheckOptions& opts) {
    const SampleSet samples = make_samples(space, sample_opts);
    for (Point p : samples.points) {
        if (checked_eval(eval, space, p, p, name) > opts.tol)
            throw InvalidConstruction(name + ": d(x,x) != 0 at " + space.describe(p));
    }
    for (const auto& pr : samples.pairs) {
        const double fwd = checked_eval(eval, space, pr[0], pr[1], name);
        const double rev = checked_eval(eval, space, pr[1], pr[0], name);
        if (std::abs(fwd - rev) > opts.tol)
            throw InvalidConstruction(name + ": not symmetric at (" +
                                      space.describe(pr[0]) + ", " +
                                      space.describe(pr[1]) + ")");
    }
    for (const auto& t : samples.triples) {
        const double xz = checked_eval(eval, space, t[0], t[2], name);
        const double xy = checked_eval(eval, space, t[0], t[1], name);
        const double yz = checked_eval(eval, space, t[1], t[2], name);
        if (xz > xy + yz + opts.tol)
            throw InvalidConstruction(name + ": triangle inequality fails at (" +
                                      space.describe(t[0]) + ", " + space.describe(t[1]) +
                                      ", " + space.describe(t[2]) + ")");
    }
}

}  // namespace

MetricFn::MetricFn(Space space, Eval eval, std::string name)
    : space_(std::move(space)), eval_(std::move(eval)), name_(std::move(name)) {}

MetricFn MetricFn::absolute(const Space& space) {
    return MetricFn(space, [](Point x, Point y) { return std::abs(x - y); }, "abs");
}

MetricFn MetricFn::discrete(const Space& space) {
    Space sp = space;
    auto eval = [sp](Point x, Point y) {
        return sp.same_point(x, y) ? 0.0 : 1.0;
    };
    return MetricFn(space, std::move(eval), "discrete");
}

MetricFn MetricFn::custom(Space space, Eval eval, std::string name,
                          const SampleOptions& sample_opts, const CheckOptions& opts) {
    validate_metric(space, eval, name, sample_opts, opts);
    return MetricFn(std::move(space), std::move(eval), std::move(name));
}

double MetricFn::operator()(Point x, Point y) const {
    return checked_eval(eval_, space_, x, y, name_);
}

GMetric from_metric_sum(const MetricFn& d) {
    MetricFn dc = d;
    auto eval = [dc](Point x, Point y, Point z) {
        return dc(x, y) + dc(y, z) + dc(z, x);
    };
    return GMetric(d.space(), std::move(eval), "sum_of_metric(" + d.name() + ")",
                   SymmetryClass::Symmetric);
}

GMetric from_metric_max(const MetricFn& d) {
    MetricFn dc = d;
    auto eval = [dc](Point x, Point y, Point z) {
        return std::max({dc(x, y), dc(y, z), dc(z, x)});
    };
    return GMetric(d.space(), std::move(eval), "max_of_metric(" + d.name() + ")",
                   SymmetryClass::Symmetric);
}

GMetric discrete_gmetric(const Space& space) {
    Space sp = space;
    auto eval = [sp](Point x, Point y, Point z) {
        return sp.same_point(x, y) && sp.same_point(y, z) ? 0.0 : 1.0;
    };
    return GMetric(space, std::move(eval), "discrete", SymmetryClass::Symmetric);
}

GMetric max_value_gmetric(const Space& space) {
    if (space.is_finite()) {
        for (double v : space.values())
            if (v < 0.0)
                throw ConfigError("max_value needs nonnegative point values");
    } else if (space.lo() < 0.0) {
        throw ConfigError("max_value needs a nonnegative interval");
    }
    Space sp = space;
    auto eval = [sp](Point x, Point y, Point z) {
        if (sp.same_point(x, y) && sp.same_point(y, z)) return 0.0;
        return std::max({x, y, z});
    };
    return GMetric(space, std::move(eval), "max_value", SymmetryClass::Symmetric);
}

GMetric scale(const GMetric& g, double kappa) {
    if (!(kappa > 0.0)) throw ConfigError("scale needs kappa > 0");
    GMetric gc = g;
    auto eval = [gc, kappa](Point x, Point y, Point z) { return kappa * gc(x, y, z); };
    std::ostringstream name;
    name << "scale(" << g.name() << ", " << kappa << ")";
    // kappa * t is strictly increasing: the symmetry class carries over.
    return GMetric(g.space(), std::move(eval), name.str(), g.hint(), g.hint_witness());
}

GMetric truncate_min(const GMetric& g, double kappa) {
    if (!(kappa > 0.0)) throw ConfigError("truncate_min needs kappa > 0");
    GMetric gc = g;
    auto eval = [gc, kappa](Point x, Point y, Point z) {
        return std::min(kappa, gc(x, y, z));
    };
    std::ostringstream name;
    name << "truncate_min(" << g.name() << ", " << kappa << ")";
    // min{kappa, t} is not strictly increasing: a non-symmetry witness
    // survives only if both orientations are not flattened to kappa.
    SymmetryClass hint = g.hint();
    auto witness = g.hint_witness();
    if (hint == SymmetryClass::NonSymmetric) {
        bool still_witnesses = false;
        if (witness) {
            const Point x = (*witness)[0], y = (*witness)[1];
            still_witnesses =
                std::abs(std::min(kappa, gc(x, y, y)) - std::min(kappa, gc(y, x, x))) > 1e-12;
        }
        if (!still_witnesses) {
            hint = SymmetryClass::Unknown;
            witness.reset();
        }
    }
    return GMetric(g.space(), std::move(eval), name.str(), hint, witness);
}

GMetric normalize(const GMetric& g) {
    GMetric gc = g;
    auto eval = [gc](Point x, Point y, Point z) {
        const double v = gc(x, y, z);
        return v / (1.0 + v);
    };
    return GMetric(g.space(), std::move(eval), "normalize(" + g.name() + ")", g.hint(),
                   g.hint_witness());
}

GMetric partition_shift(const GMetric& g, const PartitionSpec& partition) {
    const Space& space = g.space();
    if (!space.is_finite())
        throw ConfigError("partition_shift is defined for finite spaces only");
    if (!(partition.kappa > 0.0)) throw ConfigError("partition_shift needs kappa > 0");

    const std::size_t n = space.size();
    std::vector<int> block_of(n, -1);
    for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
        for (std::size_t idx : partition.blocks[b]) {
            if (idx >= n) throw ConfigError("partition block index out of range");
            if (block_of[idx] != -1) throw ConfigError("partition blocks overlap");
            block_of[idx] = static_cast<int>(b);
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (block_of[i] == -1) throw ConfigError("partition blocks do not cover the space");

    GMetric gc = g;
    Space sp = space;
    const double kappa = partition.kappa;
    auto eval = [gc, sp, block_of, kappa](Point x, Point y, Point z) {
        const int bx = block_of[sp.index_of(x)];
        const int by = block_of[sp.index_of(y)];
        const int bz = block_of[sp.index_of(z)];
        const double base = gc(x, y, z);
        return (bx == by && by == bz) ? base : kappa + base;
    };
    std::ostringstream name;
    name << "partition_shift(" << g.name() << ", " << kappa << ")";
    // The offset applies to both orientations of any pair alike, so the
    // symmetry class carries over.
    return GMetric(space, std::move(eval), name.str(), g.hint(), g.hint_witness());
}

GMetric nonsym_from_metric(const MetricFn& d, double kappa, bool extend_to_distinct) {
    if (!(kappa > 0.0)) throw ConfigError("nonsym_from_metric needs kappa > 0");
    const Space& space = d.space();
    if (!extend_to_distinct) {
        if (!space.is_finite() || space.size() != 2)
            throw UnsupportedError(
                "nonsym_from_metric is total only on 2-point spaces; pass "
                "extend_to_distinct to enable the verified extension");
    }

    // Orientation (fixed by ordering points by value): with p < q,
    //   G(p,p,q) and its rearrangements = kappa d(p,q),
    //   G(p,q,q) and its rearrangements = 2 kappa d(p,q).
    // Distinct triples (extension mode) take 2 kappa max pairwise d, the
    // least value compatible with G3 against both orientations; axioms are
    // re-verified below and the constructor rejects on violation.
    MetricFn dc = d;
    Space sp = space;
    auto eval = [dc, sp, kappa](Point x, Point y, Point z) {
        const bool xy = sp.same_point(x, y), yz = sp.same_point(y, z),
                   xz = sp.same_point(x, z);
        if (xy && yz) return 0.0;
        if (xy || yz || xz) {
            Point doubled, single;
            if (xy) { doubled = x; single = z; }
            else if (yz) { doubled = y; single = x; }
            else { doubled = x; single = y; }
            const double dist = dc(doubled, single);
            return doubled < single ? kappa * dist : 2.0 * kappa * dist;
        }
        const double m = std::max({dc(x, y), dc(y, z), dc(z, x)});
        return 2.0 * kappa * m;
    };

    std::ostringstream name;
    name << "nonsym(" << d.name() << ", " << kappa << ")";

    // Witness for the non-symmetry hint: the pair realizing the largest d.
    std::optional<std::array<Point, 2>> witness;
    SymmetryClass hint = SymmetryClass::Unknown;
    if (space.is_finite()) {
        double best = 0.0;
        for (Point p : space.enumerate())
            for (Point q : space.enumerate())
                if (p < q && dc(p, q) > best) {
                    best = dc(p, q);
                    witness = {{p, q}};
                }
        if (witness) hint = SymmetryClass::NonSymmetric;
    }

    GMetric g(space, std::move(eval), name.str(), hint, witness);
    const SampleSet samples = make_samples(space);
    const CheckReport axioms = check_axioms(g, samples);
    if (!axioms.passed())
        throw InvalidConstruction("nonsym_from_metric: axioms fail on this domain: " +
                                  axioms.describe_first(space));
    return g;
}

TripleTable::TripleTable(const Space& space)
    : n_(space.size()), values_(n_ * n_ * n_, 0.0), set_(n_ * n_ * n_, false) {}

void TripleTable::set(std::size_t i, std::size_t j, std::size_t k, double value) {
    if (i >= n_ || j >= n_ || k >= n_) throw ConfigError("table index out of range");
    const std::size_t at = (i * n_ + j) * n_ + k;
    values_[at] = value;
    set_[at] = true;
}

bool TripleTable::complete() const {
    return std::all_of(set_.begin(), set_.end(), [](bool b) { return b; });
}

std::string TripleTable::first_missing(const Space& space) const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t k = 0; k < n_; ++k)
                if (!set_[(i * n_ + j) * n_ + k])
                    return "(" + space.labels()[i] + ", " + space.labels()[j] + ", " +
                           space.labels()[k] + ")";
    return "";
}

double TripleTable::get(std::size_t i, std::size_t j, std::size_t k) const {
    return values_[(i * n_ + j) * n_ + k];
}

GMetric finite_table(const Space& space, const TripleTable& table,
                     const CheckOptions& opts) {
    if (!space.is_finite()) throw ConfigError("finite_table needs a finite space");
    if (table.n() != space.size())
        throw ConfigError("table size does not match the space");
    if (!table.complete())
        throw ConfigError("incomplete table: missing " + table.first_missing(space));

    TripleTable tc = table;
    Space sp = space;
    auto eval = [tc, sp](Point x, Point y, Point z) {
        return tc.get(sp.index_of(x), sp.index_of(y), sp.index_of(z));
    };

    GMetric g(space, std::move(eval), "table", SymmetryClass::Unknown);
    const SampleSet samples = make_samples(space);
    const CheckReport axioms = check_axioms(g, samples, opts);
    if (!axioms.passed())
        throw InvalidConstruction("table is not a G-metric: " +
                                  axioms.describe_first(space));

    // Exhaustive symmetry classification, witness in lexicographic order.
    SymmetryClass hint = SymmetryClass::Symmetric;
    std::optional<std::array<Point, 2>> witness;
    const auto pts = space.enumerate();
    for (std::size_t i = 0; i < pts.size() && !witness; ++i)
        for (std::size_t j = 0; j < pts.size() && !witness; ++j) {
            if (std::abs(g(pts[i], pts[j], pts[j]) - g(pts[j], pts[i], pts[i])) >
                opts.tol) {
                hint = SymmetryClass::NonSymmetric;
                witness = {{pts[i], pts[j]}};
            }
        }
    return GMetric(space, [g](Point x, Point y, Point z) { return g(x, y, z); }, "table",
                   hint, witness);
}

Space space_3pt() { return Space::finite({"a", "b", "c"}); }

GMetric table_3pt() {
    const Space space = space_3pt();
    TripleTable t(space);
    // Value per orbit of the argument multiset.
    const auto orbit = [&t](std::size_t i, std::size_t j, std::size_t k, double v) {
        t.set(i, j, k, v); t.set(i, k, j, v); t.set(j, i, k, v);
        t.set(j, k, i, v); t.set(k, i, j, v); t.set(k, j, i, v);
    };
    t.set(0, 0, 0, 0.0); t.set(1, 1, 1, 0.0); t.set(2, 2, 2, 0.0);
    orbit(0, 1, 1, 1.0);  // {a,b,b}
    orbit(0, 0, 1, 2.0);  // {a,a,b}
    orbit(1, 2, 2, 2.0);  // {b,c,c}
    orbit(0, 0, 2, 3.0);  // {a,a,c}
    orbit(0, 2, 2, 3.0);  // {a,c,c}
    orbit(1, 1, 2, 4.0);  // {b,b,c}
    orbit(0, 1, 2, 4.0);  // {a,b,c}
    return finite_table(space, t);
}

}  // namespace gfix
