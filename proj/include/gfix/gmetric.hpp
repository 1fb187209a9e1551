#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>

#include "gfix/report.hpp"
#include "gfix/space.hpp"

namespace gfix {

/// Symmetry classification of a G-metric. `SymmetricOnSample` is the honest
/// verdict for sampled intervals: no counterexample found, not a proof.
enum class SymmetryClass { Symmetric, NonSymmetric, SymmetricOnSample, Unknown };

std::string to_string(SymmetryClass s);

struct SymmetryResult {
    SymmetryClass state = SymmetryClass::Unknown;
    std::optional<std::array<Point, 2>> witness;  // (x, y) with G(x,y,y) != G(y,x,x)
    std::size_t checked = 0;
};

/// A ternary perimeter-like distance on a space: nonnegative, zero exactly on
/// diagonal triples, permutation-symmetric in its arguments, and satisfying
/// the rectangle-type inequality G(x,y,z) <= G(x,a,a) + G(a,y,z).
///
/// Evaluation validates the result (finite, >= 0) and throws EvalError
/// otherwise. Instances are immutable; evaluation functions must be pure.
class GMetric {
public:
    using Eval = std::function<double(Point, Point, Point)>;

    GMetric(Space space, Eval eval, std::string name,
            SymmetryClass hint = SymmetryClass::Unknown,
            std::optional<std::array<Point, 2>> hint_witness = std::nullopt);

    double operator()(Point x, Point y, Point z) const;

    const Space& space() const { return space_; }
    const std::string& name() const { return name_; }

    /// Symmetry knowledge established at construction (by the constructor's
    /// own structure or an exhaustive table check); Unknown when nothing is
    /// known a priori.
    SymmetryClass hint() const { return hint_; }
    const std::optional<std::array<Point, 2>>& hint_witness() const { return hint_witness_; }

private:
    Space space_;
    Eval eval_;
    std::string name_;
    SymmetryClass hint_;
    std::optional<std::array<Point, 2>> hint_witness_;
};

/// Checks axioms G1-G5 on the sampled triples (rules "G1".."G5"):
///   G1  G(x,x,x) = 0
///   G2  G(x,y,z) > 0 when x != y
///   G3  G(x,x,y) <= G(x,y,z) when y != z
///   G4  equal across all six argument permutations
///   G5  G(x,y,z) <= G(x,a,a) + G(a,y,z) for sampled a
CheckReport check_axioms(const GMetric& g, const SampleSet& samples,
                         const CheckOptions& opts = {});

/// Classifies symmetry (G(x,y,y) vs G(y,x,x)) over the sampled pairs.
/// Finite exhaustive samples certify Symmetric; intervals report
/// SymmetricOnSample. A construction-time hint short-circuits the scan.
SymmetryResult is_symmetric(const GMetric& g, const SampleSet& samples,
                            const CheckOptions& opts = {});

/// The binary metric induced by any G-metric: d_G(x,y) = G(x,y,y) + G(y,x,x).
double derived_metric(const GMetric& g, Point x, Point y);

/// Bounds tying d_G to G over sampled pairs: equality d_G = 2 G(x,y,y) for
/// (certified) symmetric metrics; (3/2) G(x,y,y) <= d_G <= 3 G(x,y,y)
/// otherwise; and always G(x,x,y) <= 2 G(x,y,y).
CheckReport check_dg_bounds(const GMetric& g, const SampleSet& samples,
                            const CheckOptions& opts = {});

/// The ten derived properties of a G-metric, instantiated over sampled
/// 5-tuples (r,u,s,y,x); rules "(i)".."(x)". These are theorems for any
/// valid G-metric, so a violation indicates a broken metric (or a bug).
CheckReport check_basic_properties(const GMetric& g, const SampleSet& samples,
                                   const CheckOptions& opts = {});

}  // namespace gfix
