#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gfix/space.hpp"

namespace gfix {

/// One falsified rule instance: which rule, at which points, and the two
/// sides of the inequality as evaluated. Witnesses re-evaluate to the
/// recorded lhs/rhs within the equality tolerance.
struct Violation {
    std::string rule;
    std::vector<Point> witness;
    double lhs = 0.0;
    double rhs = 0.0;
};

/// Outcome of a sampled check. `passed()` holds exactly when no instance was
/// violated. The in-memory list is complete; serialization trims it to the
/// worst entries (see worst_violations).
struct CheckReport {
    std::string name;
    std::size_t checked = 0;
    std::size_t violation_count = 0;
    std::vector<Violation> violations;
    bool conclusive = true;   // false: sample insufficient to decide
    std::string note;

    bool passed() const { return violation_count == 0 && conclusive; }

    void add_violation(Violation v) {
        ++violation_count;
        violations.push_back(std::move(v));
    }

    /// Up to n violations ordered by excess (lhs - rhs) descending, ties by
    /// witness then rule; deterministic for a fixed sample.
    std::vector<Violation> worst_violations(std::size_t n) const;

    /// First recorded violation formatted with the space's point labels.
    std::string describe_first(const Space& space) const;
};

}  // namespace gfix
