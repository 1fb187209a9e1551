#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gfix {

/// A point of a space. Finite spaces use the point's numeric value (distinct
/// per point, default 0,1,2,...); interval spaces use the coordinate itself.
using Point = double;

enum class SpaceKind { Finite, Interval };

/// The underlying set X: either a finite list of labeled points or a closed
/// real interval [lo, hi]. Immutable; copies share the representation.
class Space {
public:
    static Space finite(std::vector<std::string> labels);
    static Space finite(std::vector<std::string> labels, std::vector<double> values);
    static Space interval(double lo, double hi);

    SpaceKind kind() const;
    bool is_finite() const { return kind() == SpaceKind::Finite; }

    /// Number of points (finite spaces only).
    std::size_t size() const;
    double lo() const;
    double hi() const;

    const std::vector<std::string>& labels() const;
    const std::vector<double>& values() const;

    /// Point for a finite index.
    Point point(std::size_t index) const;
    /// Index of a finite point's value (nearest within tol); throws EvalError
    /// when no point matches.
    std::size_t index_of(Point p, double tol = 1e-9) const;

    bool contains(Point p, double tol = 1e-9) const;
    bool same_point(Point a, Point b, double tol = 1e-9) const;

    /// "a" / "b" / ... on finite spaces, the shortest round-trip decimal on
    /// intervals.
    std::string describe(Point p) const;

    /// All points of a finite space; throws UnsupportedError on intervals.
    std::vector<Point> enumerate() const;

    bool operator==(const Space& other) const;

private:
    struct Impl;
    explicit Space(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

/// Deterministic sampling knobs. All randomness in the toolkit flows from
/// `seed`; identical options reproduce identical samples bit-for-bit.
struct SampleOptions {
    std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
    int grid_points = 101;       // uniform grid on intervals
    int random_points = 400;     // seeded random pool on intervals
    int triples = 10000;         // random triples on intervals
    int quintuples = 10000;      // random 5-tuples for the property suite
    int aux_per_triple = 32;     // auxiliary 'a' draws per triple (axiom G5)
    int random_pairs = 400;      // random pairs beyond the grid cross product
    std::size_t finite_cap = 200000;  // switch to sampling above this count
};

/// Value/point comparison tolerances used by every checker.
struct CheckOptions {
    double tol = 1e-9;        // |lhs - rhs| comparisons
    double point_tol = 1e-9;  // point equality on intervals
};

/// A deterministic draw of points, pairs, triples and 5-tuples from a space.
/// Finite spaces enumerate exhaustively (up to finite_cap); intervals combine
/// the uniform grid with seeded random points.
struct SampleSet {
    Space space;
    std::vector<Point> points;                    // 1-D pool
    std::vector<std::array<Point, 2>> pairs;
    std::vector<std::array<Point, 3>> triples;
    std::vector<std::array<Point, 5>> quintuples;
    std::vector<Point> aux_pool;                  // 'a' candidates for G5
    std::uint64_t seed = 0;
    bool exhaustive = false;                      // true when fully enumerated
};

SampleSet make_samples(const Space& space, const SampleOptions& opts = {});

/// Splitmix-style generator for portable deterministic doubles in [0, 1).
/// (std::uniform_real_distribution is implementation-defined; this is not.)
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next_u64();
    /// Uniform in [0, 1).
    double next_unit();
    /// Uniform in [lo, hi).
    double next_in(double lo, double hi);
    /// Uniform integer in [0, n).
    std::size_t next_index(std::size_t n);

private:
    std::uint64_t state_;
};

}  // namespace gfix
