#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gfix/contraction.hpp"
#include "gfix/gmetric.hpp"
#include "gfix/maps.hpp"
#include "gfix/report.hpp"

namespace gfix {

enum class TraceStatus { Converged, MaxIter, PreimageFailure };

std::string to_string(TraceStatus s);

/// The coupled sequence of the four-map construction:
///   y_{2n}   = A x_{2n+1} = T x_{2n}
///   y_{2n+1} = B x_{2n+2} = S x_{2n+1}
/// x_{2n+1} and x_{2n+2} come from preimage solves of A and B. step_g[n]
/// records G(y_n, y_{n+1}, y_{n+1}); the iteration stops after three
/// consecutive sub-tolerance steps.
struct IterationTrace {
    std::vector<Point> x_seq;
    std::vector<Point> y_seq;
    std::vector<double> step_g;
    std::vector<double> predicted_bound;  // c^n * step_g[0], filled by rate checks
    std::optional<Point> limit;
    TraceStatus status = TraceStatus::MaxIter;
    std::optional<double> failed_target;  // preimage target that had no solution
};

struct SolveOptions {
    double tol = 1e-9;
    double point_tol = 1e-9;
    int n_max = 10000;
    ContractionForm form = ContractionForm::Max;
    std::optional<double> constant;   // h (max form) or kappa (sum form)
    std::vector<Point> starts;        // extra starts for uniqueness evidence
    bool strict = false;              // abort on hypothesis-check failure
    SampleOptions sampling;

    CheckOptions check_options() const { return CheckOptions{tol, point_tol}; }
};

enum class Uniqueness { ProvedByEnumeration, UniqueOnSample, NotChecked, MultipleFound };

std::string to_string(Uniqueness u);

/// What the run certifies about the located point. Accepted only when all
/// four residuals G(Mz, z, z) are below tolerance.
struct FixedPointCertificate {
    Point z = 0.0;
    double residual_a = 0.0, residual_b = 0.0, residual_s = 0.0, residual_t = 0.0;
    double rate_constant_used = 0.0;
    Uniqueness uniqueness = Uniqueness::NotChecked;
    std::vector<Point> uniqueness_witnesses;  // extra points / disagreeing limits
    double continuity_evidence = 0.0;         // tail deviation of A, B at the limit
    bool accepted = false;

    double max_residual() const;
};

/// Hypothesis checks run ahead of the iteration, as in the theorems:
/// range inclusions TX in AX and SX in BX, weak commutativity of (S,A) and
/// (T,B), and the contraction condition at the supplied or estimated
/// constant.
struct HypothesisReport {
    CheckReport range_t_in_a;
    CheckReport range_s_in_b;
    CheckReport commuting_sa;
    CheckReport commuting_tb;
    ContractionReport contraction;
    ConstantEstimate estimate;

    bool all_passed() const;
    /// Names of the failed checks, for diagnostics.
    std::vector<std::string> failed() const;
};

struct SolveResult {
    IterationTrace trace;
    std::optional<FixedPointCertificate> certificate;
    HypothesisReport hypotheses;
    CheckReport rate;          // bound check at the rate constant used
    CheckReport convergence;   // tail equivalence diagnostics
    std::vector<std::string> notes;
    bool aborted_strict = false;
};

/// Runs the coupled iteration from x0. Requires preimages of A and B to be
/// solvable along the way; a failed solve ends the trace with
/// PreimageFailure and the offending target. The metric drives the stopping
/// rule and the recorded step values.
IterationTrace build_sequence(const GMetric& g, const MapSystem& sys, Point x0,
                              int n_max, double tol, const CheckOptions& opts = {});

/// Geometric decay of the step values against constant c:
///   step_g[n] <= lambda^n * step_g[0],  lambda = c (max form),
///                                       lambda = c/(1-c) (sum form);
/// and the tail bound G(y_n, y_m, y_m) <= lambda^n/(1-lambda) * step_g[0]
/// for sampled n < m. Fills trace.predicted_bound as a side effect on a copy.
CheckReport check_rate(const GMetric& g, IterationTrace& trace, double c,
                       ContractionForm form, const CheckOptions& opts = {});

/// Tail diagnostics of the convergence equivalences: G(y_n,y_n,z),
/// G(y_n,z,z) and G(y_n,y_m,z) all small at the final recorded indices.
/// Uses 3*tol as threshold (single steps are only bounded by tol).
CheckReport check_convergence_equivalences(const GMetric& g,
                                           const IterationTrace& trace,
                                           const CheckOptions& opts = {});

/// All z with A z = B z = S z = T z = z, by enumeration. Finite spaces only.
std::vector<Point> brute_force_fixed_points(const MapSystem& sys,
                                            const CheckOptions& opts = {});

/// The full pipeline: hypothesis checks, coupled iteration, residual
/// certificate, rate and convergence diagnostics, uniqueness evidence
/// (enumeration on finite spaces, multi-start agreement on intervals).
/// Hypothesis failures are recorded and do not abort unless opts.strict.
SolveResult find_common_fixed_point(const GMetric& g, const MapSystem& sys,
                                    Point x0, const SolveOptions& opts = {});

}  // namespace gfix
