#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gfix/gmetric.hpp"
#include "gfix/report.hpp"
#include "gfix/space.hpp"

namespace gfix {

/// A self-mapping of a space, optionally carrying an exact preimage oracle
/// (t -> x with apply(x) = t). Copies share the implementation, which is how
/// role aliasing (S = T, A = identity, ...) is detected.
class SelfMap {
public:
    using Fn = std::function<Point(Point)>;

    /// slope * x + intercept; the image must stay inside the space. Supplies
    /// a closed-form preimage when slope != 0.
    static SelfMap affine(const Space& space, double slope, double intercept,
                          std::string label = "affine");
    static SelfMap identity(const Space& space);
    static SelfMap constant(const Space& space, Point value, std::string label = "const");
    /// Finite map by point index.
    static SelfMap table(const Space& space, std::vector<std::size_t> image,
                         std::string label = "table");
    /// Arbitrary function, sample-validated to stay inside the space.
    static SelfMap custom(const Space& space, Fn apply, std::string label,
                          Fn preimage = nullptr,
                          const SampleOptions& sample_opts = {});

    Point operator()(Point x) const;
    bool has_preimage_oracle() const;
    const Space& space() const;
    const std::string& label() const;

    /// True when both handles refer to one underlying map.
    bool aliases(const SelfMap& other) const;

    /// Solves apply(x) = t: the supplied oracle when present, exhaustive scan
    /// on finite spaces, bisection on intervals when the map samples as
    /// monotone. Throws NoPreimageError when no solution exists within tol,
    /// ConfigError for non-monotone oracle-less interval maps.
    Point solve_preimage(Point t, const CheckOptions& opts = {}) const;

private:
    struct Impl;
    explicit SelfMap(std::shared_ptr<const Impl> impl);
    std::shared_ptr<const Impl> impl_;
};

/// The four roles of the common-fixed-point engine. Aliases are permitted
/// and meaningful: S = T, A = B, or identity roles realize the specialized
/// (two- and three-map) variants through the same code path.
struct MapSystem {
    SelfMap A, B, S, T;

    /// Throws ConfigError unless all four maps share one space.
    void validate() const;
    const Space& space() const { return A.space(); }
};

/// Weak commutativity of the ordered pair (f, h):
///   G(f(h(x)), h(f(x)), h(f(x))) <= G(f(x), h(x), h(x))  for sampled x.
/// Aliased pairs pass identically (the left side is G(w,w,w) = 0).
CheckReport check_weakly_commuting(const GMetric& g, const SelfMap& f,
                                   const SelfMap& h, const SampleSet& samples,
                                   const CheckOptions& opts = {});

/// Image inclusion f(X) subseteq h(X). Exact on finite spaces; on intervals
/// uses h's preimage oracle when present, otherwise a sampled-image coverage
/// test (conclusive = false when the sample cannot decide).
CheckReport check_range_inclusion(const SelfMap& f, const SelfMap& h,
                                  const SampleSet& samples,
                                  const CheckOptions& opts = {});

/// Free-function spelling of SelfMap::solve_preimage.
Point preimage_solve(const SelfMap& m, Point t, const CheckOptions& opts = {});

}  // namespace gfix
