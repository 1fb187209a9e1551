#pragma once

#include <array>
#include <optional>
#include <string>

#include "gfix/gmetric.hpp"
#include "gfix/maps.hpp"
#include "gfix/report.hpp"

namespace gfix {

/// Which generalized contraction hypothesis is being tested.
///   Max: G(Sx,Ty,Ty) <= h * max{G(Ax,By,By), G(Sx,Ax,Ax), G(Ty,By,By)}
///        G(Sx,Sx,Ty) <= h * max{G(Ax,Ax,By), G(Sx,Sx,Ax), G(Ty,Ty,By)}
///   Sum: G(Sx,Ty,Ty) <= k * (G(Sx,Ax,Ax) + G(Ty,By,By))
///        G(Sx,Sx,Ty) <= k * (G(Sx,Sx,Ax) + G(Ty,Ty,By))
enum class ContractionForm { Max, Sum };

std::string to_string(ContractionForm f);

/// Smallest constant compatible with the sampled pairs: the supremum of
/// LHS / base over the sample. Pairs with both sides below tolerance carry
/// no information and are skipped; base ~ 0 with LHS > 0 is unbounded.
struct ConstantEstimate {
    enum class Status { Ok, Unbounded, Inconclusive };
    Status status = Status::Inconclusive;
    double value = 0.0;                      // valid when status == Ok
    std::array<Point, 2> witness{0.0, 0.0};  // arg-sup pair (or unbounded witness)
    std::size_t pairs_used = 0;
    std::size_t pairs_skipped = 0;
};

/// Result of testing one contraction hypothesis at a fixed constant over
/// sampled pairs; both displayed inequalities are tested independently
/// (rules "2.1"/"2.2" for the max form, "2.14"/"2.15" for the sum form).
struct ContractionReport {
    ContractionForm form = ContractionForm::Max;
    double constant = 0.0;
    CheckReport check;
    std::optional<ConstantEstimate> estimate;

    bool passed() const { return check.passed(); }
};

/// Max-form hypothesis at constant h in [0,1); throws ConfigError outside.
ContractionReport check_condition_max(const GMetric& g, const MapSystem& sys,
                                      double h, const SampleSet& samples,
                                      const CheckOptions& opts = {});

/// Sum-form hypothesis at constant kappa in [0,1/2); throws ConfigError outside.
ContractionReport check_condition_sum(const GMetric& g, const MapSystem& sys,
                                      double kappa, const SampleSet& samples,
                                      const CheckOptions& opts = {});

/// The same inequalities at an arbitrary constant c >= 0, bypassing the
/// theorem range preconditions; for exploratory runs.
ContractionReport check_condition_at(const GMetric& g, const MapSystem& sys, double c,
                                     ContractionForm form, const SampleSet& samples,
                                     const CheckOptions& opts = {});

/// Supremum of observed LHS/base ratios over both inequalities of the chosen
/// form. Deterministic for a fixed sample.
ConstantEstimate estimate_min_constant(const GMetric& g, const MapSystem& sys,
                                       ContractionForm form,
                                       const SampleSet& samples,
                                       const CheckOptions& opts = {});

}  // namespace gfix
