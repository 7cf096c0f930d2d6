#pragma once

#include <string>
#include <vector>

#include "salarium/envelope.hpp"
#include "salarium/model.hpp"

namespace salarium {

// Result of solving base^x = target by bracketed bisection.
struct ExponentSolve {
    double base = 0.0;
    double target = 0.0;
    double solution = 0.0;
    double residual = 0.0; // |base^solution - target|
    int iterations = 0;
};

// Bisection on the monotone map x -> base^x over the bracket [-10, 10],
// tolerance 1e-9 on x, at most 200 iterations. Requires base > 0, base != 1,
// target > 0; throws CalibrationError when the target lies outside the
// bracket's attainable range.
ExponentSolve solve_exponent(double base, double target);

// One calibration anchor: the value a component must take at a given
// profile, plus (optionally) the parameter the anchor determines. Anchors
// without solve_for only contribute a residual check.
struct Anchor {
    std::string name;
    ComponentSelector component = ComponentSelector::base;
    ResearcherProfile profile;
    Money target;
    double tolerance = 0.005; // relative, must lie in (0, 0.05]
    std::string solve_for;    // ModelParameters field name, or empty
};

using AnchorSet = std::vector<Anchor>;

void validate(const AnchorSet& anchors);

// Anchors reproducing the model's worked figures; shipped with the tool.
AnchorSet default_anchors();

struct AnchorResidual {
    std::string anchor;
    std::string solved_parameter; // empty for check-only anchors
    double target_kzt = 0.0;
    double achieved_kzt = 0.0;
    double relative_residual = 0.0;
    bool within_tolerance = false;
};

struct CalibrationResult {
    ModelParameters params;
    std::vector<AnchorResidual> residuals; // one per anchor, input order
};

// Solves anchors sequentially in input order: exponents via solve_exponent
// on the anchor's ratio structure, linear coefficients via division. Solved
// parameters get provenance example_implied. Every anchor is then
// re-evaluated under the final parameters; inconsistent (e.g. duplicate)
// anchors surface as residuals above tolerance rather than as errors.
// Throws CalibrationError naming the parameter when an anchor cannot
// determine it, or when the anchor set is empty.
CalibrationResult calibrate_from_anchors(const AnchorSet& anchors,
                                         const ModelParameters& seed);

// Local sensitivity of the total salary to one profile metric, from finite
// differences on the smooth model: central differences inside the metric's
// range, one-sided at its boundaries (flagged). Counts at zero report the
// discrete first increment instead, since the average-based grant amount is
// singular as the count approaches zero. Gradients are signed: under
// per-grant-average semantics the grant term falls as the count grows with
// the total held fixed.
struct SensitivityRow {
    Metric metric = Metric::experience_years;
    double at_value = 0.0;     // metric value the gradient is taken at
    double gradient_kzt = 0.0; // KZT per unit of the metric
    double elasticity = 0.0;   // (x / S) * dS/dx
    bool one_sided = false;
};

SensitivityRow sensitivity(const ResearcherProfile& profile, const ModelParameters& params,
                           Metric metric);

// One row per metric, in kAllMetrics order.
std::vector<SensitivityRow> sensitivity_table(const ResearcherProfile& profile,
                                              const ModelParameters& params);

// Second differences of a component's curve at unit-spaced points of
// [x_lo, x_hi]. The four saturating components are concave (all second
// differences negative); the publication/citation power terms with
// exponents above one are not, and get reported as such rather than hidden.
struct DiminishingPoint {
    double x = 0.0;
    double second_difference = 0.0;
};

struct DiminishingReport {
    ComponentSelector component = ComponentSelector::collaborative;
    bool all_diminishing = false;
    std::vector<DiminishingPoint> points;
};

DiminishingReport diminishing_marginal_check(ComponentSelector component,
                                             const ModelParameters& params, int x_lo,
                                             int x_hi);

} // namespace salarium
