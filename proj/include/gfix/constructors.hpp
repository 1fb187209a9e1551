#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gfix/gmetric.hpp"
#include "gfix/space.hpp"

namespace gfix {

/// An ordinary binary metric d on a space. Factories sample-check symmetry,
/// identity and the triangle inequality at construction and throw
/// InvalidConstruction on failure.
class MetricFn {
public:
    using Eval = std::function<double(Point, Point)>;

    static MetricFn absolute(const Space& space);   // d(x,y) = |x - y| on point values
    static MetricFn discrete(const Space& space);   // 0/1 metric
    static MetricFn custom(Space space, Eval eval, std::string name,
                           const SampleOptions& sample_opts = {},
                           const CheckOptions& opts = {});

    double operator()(Point x, Point y) const;
    const Space& space() const { return space_; }
    const std::string& name() const { return name_; }

private:
    MetricFn(Space space, Eval eval, std::string name);
    Space space_;
    Eval eval_;
    std::string name_;
};

/// Disjoint blocks covering a finite space, plus the cross-block offset.
struct PartitionSpec {
    std::vector<std::vector<std::size_t>> blocks;  // point indices
    double kappa = 1.0;
};

// --- constructions from a binary metric ---

/// G(x,y,z) = d(x,y) + d(y,z) + d(z,x). Symmetric.
GMetric from_metric_sum(const MetricFn& d);

/// G(x,y,z) = max{d(x,y), d(y,z), d(z,x)}. Symmetric.
GMetric from_metric_max(const MetricFn& d);

/// G(x,x,y) = kappa d(x,y), G(x,y,y) = 2 kappa d(x,y), 0 on the diagonal.
/// By default only total on 2-point spaces; `extend_to_distinct` enables the
/// (2/3) kappa perimeter extension for distinct triples, clamped up to
/// kappa * max pairwise d, and re-verifies the axioms at construction.
GMetric nonsym_from_metric(const MetricFn& d, double kappa,
                           bool extend_to_distinct = false);

// --- direct constructions ---

/// 0 on diagonal triples, 1 otherwise.
GMetric discrete_gmetric(const Space& space);

/// 0 on diagonal triples, max{x,y,z} otherwise. Space values must be >= 0.
GMetric max_value_gmetric(const Space& space);

// --- G-metric transforms ---

GMetric scale(const GMetric& g, double kappa);          // kappa * G
GMetric truncate_min(const GMetric& g, double kappa);   // min{kappa, G}
GMetric normalize(const GMetric& g);                    // G / (1 + G), range [0, 1)

/// G within a block, kappa + G across blocks (finite spaces only).
GMetric partition_shift(const GMetric& g, const PartitionSpec& partition);

// --- table-backed finite metrics ---

/// A fully explicit finite G-metric: one value per ordered triple of point
/// indices (all n^3 required). The constructor checks the axioms exhaustively
/// and rejects invalid or incomplete tables; symmetry is classified exactly.
class TripleTable {
public:
    TripleTable(const Space& space) ;
    void set(std::size_t i, std::size_t j, std::size_t k, double value);
    bool complete() const;
    /// First missing triple, for error messages.
    std::string first_missing(const Space& space) const;
    double get(std::size_t i, std::size_t j, std::size_t k) const;
    std::size_t n() const { return n_; }

private:
    std::size_t n_;
    std::vector<double> values_;
    std::vector<bool> set_;
};

GMetric finite_table(const Space& space, const TripleTable& table,
                     const CheckOptions& opts = {});

/// The built-in non-symmetric 3-point table (values 0..4 over the G4 orbits).
GMetric table_3pt();

/// Its space, points labeled a, b, c.
Space space_3pt();

}  // namespace gfix
