#include "salarium/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

namespace salarium {

ExponentSolve solve_exponent(double base, double target) {
    if (!(base > 0.0) || base == 1.0 || !std::isfinite(base)) {
        throw ValidationError("solve_exponent needs a positive base different from 1, got " +
                              std::to_string(base));
    }
    if (!(target > 0.0) || !std::isfinite(target)) {
        throw ValidationError("solve_exponent needs a strictly positive target, got " +
                              std::to_string(target));
    }

    constexpr double kLo = -10.0;
    constexpr double kHi = 10.0;
    constexpr double kTolX = 1e-9;
    constexpr int kMaxIterations = 200;

    const auto value = [base](double x) { return std::pow(base, x); };
    const double at_lo = value(kLo);
    const double at_hi = value(kHi);
    if (target < std::min(at_lo, at_hi) || target > std::max(at_lo, at_hi)) {
        throw CalibrationError("target " + std::to_string(target) +
                               " is not bracketable by base " + std::to_string(base) +
                               " over exponents in [-10, 10]");
    }

    // base^x - target changes sign exactly once on the bracket; keep the
    // sign orientation explicit so bases below 1 work unchanged.
    const bool increasing = base > 1.0;
    double lo = kLo;
    double hi = kHi;
    int iterations = 0;
    while (hi - lo > kTolX && iterations < kMaxIterations) {
        const double mid = 0.5 * (lo + hi);
        const bool mid_above = value(mid) > target;
        if (mid_above == increasing) {
            hi = mid;
        } else {
            lo = mid;
        }
        ++iterations;
    }

    ExponentSolve s;
    s.base = base;
    s.target = target;
    s.solution = 0.5 * (lo + hi);
    s.residual = std::abs(value(s.solution) - target);
    s.iterations = iterations;
    return s;
}

void validate(const AnchorSet& anchors) {
    for (const Anchor& a : anchors) {
        if (!(a.target.amount() > 0.0)) {
            throw ValidationError("anchor '" + a.name + "' needs a strictly positive target");
        }
        if (!(a.tolerance > 0.0 && a.tolerance <= 0.05)) {
            throw ValidationError("anchor '" + a.name + "' tolerance must lie in (0, 0.05]");
        }
        validate(a.profile);
    }
}

AnchorSet default_anchors() {
    AnchorSet anchors;

    Anchor base;
    base.name = "base_minimum";
    base.component = ComponentSelector::base;
    base.profile = ResearcherProfile{}; // T = 0, L = 1
    base.target = Money(209000.0);
    base.tolerance = 1e-6;
    base.solve_for = "base_w0";
    anchors.push_back(base);

    Anchor pub;
    pub.name = "publications_at_100";
    pub.component = ComponentSelector::publication;
    pub.profile.publications = 100;
    pub.target = Money(1'888'350.0);
    pub.tolerance = 0.005;
    pub.solve_for = "pub_delta";
    anchors.push_back(pub);

    Anchor cit;
    cit.name = "h_index_at_50";
    cit.component = ComponentSelector::citation;
    cit.profile.h_index = 50;
    cit.target = Money(631'000.0);
    cit.tolerance = 0.005;
    cit.solve_for = "cit_delta";
    anchors.push_back(cit);

    Anchor grant;
    grant.name = "three_grants_of_50m_total";
    grant.component = ComponentSelector::grant;
    grant.profile.grant_count = 3;
    grant.profile.grant_total_kzt = Money(50'000'000.0);
    grant.target = Money(304'800.0);
    grant.tolerance = 0.005;
    grant.solve_for = "grant_impact";
    anchors.push_back(grant);

    return anchors;
}

namespace {

[[noreturn]] void fail_underdetermined(const std::string& parameter, const Anchor& anchor,
                                       const std::string& why) {
    throw CalibrationError("anchor '" + anchor.name + "' cannot determine " + parameter + ": " +
                           why);
}

double grant_inner_base(const Anchor& a, const ModelParameters& p, const std::string& parameter) {
    if (a.profile.grant_count <= 0 || !(a.profile.grant_total_kzt.amount() > 0.0)) {
        fail_underdetermined(parameter, a, "the grant term vanishes without grants");
    }
    const double clamped = std::min<double>(a.profile.grant_count, p.grant_count_cap.value);
    const double amount = p.grant_amount_semantics == GrantAmountSemantics::per_grant_average
                              ? a.profile.grant_total_kzt.amount() / clamped
                              : a.profile.grant_total_kzt.amount();
    return amount / 1e6;
}

double saturation_factor(const Anchor& a, double x, double mu, double cap,
                         const std::string& parameter) {
    const double clamped = std::min(x, cap);
    const double factor = -std::expm1(-mu * clamped);
    if (!(factor > 0.0)) {
        fail_underdetermined(parameter, a, "the saturation factor vanishes at a zero count");
    }
    return factor;
}

// Solves the single parameter an anchor isolates and writes it back,
// tagging the result example_implied. Exponents go through solve_exponent
// on the anchor's ratio structure, linear coefficients through division.
void solve_anchor(const Anchor& a, ModelParameters& p) {
    const std::string& name = a.solve_for;
    const double target = a.target.amount();
    const auto solved = [&](double v) { return Param{v, Provenance::example_implied}; };
    const auto positive_ratio = [&](double denominator) {
        if (!(denominator > 0.0) || !std::isfinite(denominator)) {
            fail_underdetermined(name, a, "the anchor's fixed factors are degenerate");
        }
        return target / denominator;
    };
    const auto exponent_of = [&](double base, double ratio) {
        if (base == 1.0) {
            fail_underdetermined(name, a, "an anchor at input 1 fixes no exponent");
        }
        try {
            return solve_exponent(base, ratio).solution;
        } catch (const CalibrationError& e) {
            fail_underdetermined(name, a, e.what());
        } catch (const ValidationError& e) {
            fail_underdetermined(name, a, e.what());
        }
    };

    if (a.component == ComponentSelector::base) {
        const double log_term = std::log1p(a.profile.experience_years / p.base_t0.value);
        const double growth = std::pow(1.0 + p.base_alpha.value * log_term, p.base_beta.value);
        const double qual = 1.0 + p.base_lambda.value * a.profile.qualification_level;
        if (name == "base_w0") {
            p.base_w0 = solved(positive_ratio(growth * qual));
            return;
        }
        if (name == "base_lambda") {
            const double ratio = positive_ratio(p.base_w0.value * growth);
            if (ratio <= 1.0) {
                fail_underdetermined(name, a, "the target leaves no qualification uplift");
            }
            p.base_lambda = solved((ratio - 1.0) / a.profile.qualification_level);
            return;
        }
    } else if (a.component == ComponentSelector::publication) {
        const int count = a.profile.publications;
        if (count <= 0) fail_underdetermined(name, a, "the publication term vanishes at P = 0");
        if (name == "pub_gamma") {
            p.pub_gamma = solved(positive_ratio(std::pow(count, p.pub_delta.value)));
            return;
        }
        if (name == "pub_delta") {
            p.pub_delta = solved(exponent_of(count, positive_ratio(p.pub_gamma.value)));
            return;
        }
    } else if (a.component == ComponentSelector::citation) {
        const int h = a.profile.h_index;
        if (h <= 0) fail_underdetermined(name, a, "the citation term vanishes at H = 0");
        if (name == "cit_gamma") {
            p.cit_gamma = solved(positive_ratio(std::pow(h, p.cit_delta.value)));
            return;
        }
        if (name == "cit_delta") {
            p.cit_delta = solved(exponent_of(h, positive_ratio(p.cit_gamma.value)));
            return;
        }
    } else if (a.component == ComponentSelector::grant) {
        const double inner = grant_inner_base(a, p, name);
        const double clamped = std::min<double>(a.profile.grant_count, p.grant_count_cap.value);
        const double phi_factor =
            std::pow(p.golden_phi.value, clamped / p.grant_count_cap.value);
        if (name == "grant_gamma") {
            p.grant_gamma = solved(
                positive_ratio(phi_factor * std::pow(inner, p.grant_impact.value)));
            return;
        }
        if (name == "grant_impact") {
            p.grant_impact = solved(
                exponent_of(inner, positive_ratio(p.grant_gamma.value * phi_factor)));
            return;
        }
    } else if (a.component == ComponentSelector::collaborative && name == "collab_lambda") {
        p.collab_lambda = solved(positive_ratio(
            saturation_factor(a, a.profile.internal_projects, p.collab_mu.value,
                              p.cap_internal_projects.value, name)));
        return;
    } else if (a.component == ComponentSelector::competency && name == "skill_lambda") {
        p.skill_lambda = solved(positive_ratio(
            saturation_factor(a, a.profile.certifications, p.skill_mu.value,
                              p.cap_certifications.value, name)));
        return;
    } else if (a.component == ComponentSelector::insignia && name == "insig_lambda") {
        p.insig_lambda = solved(positive_ratio(
            saturation_factor(a, a.profile.insignia_count, p.insig_mu.value,
                              p.cap_insignia.value, name)));
        return;
    } else if (a.component == ComponentSelector::intl_collab && name == "intl_lambda") {
        p.intl_lambda = solved(positive_ratio(
            saturation_factor(a, a.profile.intl_projects, p.intl_mu.value,
                              p.cap_intl_projects.value, name)));
        return;
    }

    throw CalibrationError("anchor '" + a.name + "': no solver maps component '" +
                           std::string(to_string(a.component)) + "' to parameter '" + name +
                           "'");
}

} // namespace

CalibrationResult calibrate_from_anchors(const AnchorSet& anchors, const ModelParameters& seed) {
    if (anchors.empty()) {
        throw CalibrationError("anchor set is empty; no parameter can be determined");
    }
    validate(anchors);

    CalibrationResult result;
    result.params = seed;
    for (const Anchor& a : anchors) {
        if (!a.solve_for.empty()) {
            solve_anchor(a, result.params);
        }
    }

    // Residuals are judged against the final parameter set, so an earlier
    // anchor overwritten by an inconsistent duplicate shows up flagged.
    for (const Anchor& a : anchors) {
        AnchorResidual r;
        r.anchor = a.name;
        r.solved_parameter = a.solve_for;
        r.target_kzt = a.target.amount();
        r.achieved_kzt = component_value(a.component, a.profile, result.params).amount();
        r.relative_residual = std::abs(r.achieved_kzt - r.target_kzt) / r.target_kzt;
        r.within_tolerance = r.relative_residual <= a.tolerance;
        result.residuals.push_back(r);
    }
    return result;
}

namespace {

std::optional<double> metric_upper_bound(Metric metric, const ModelParameters& p) {
    switch (metric) {
        case Metric::qualification_level: return 3.0;
        case Metric::grant_count: return p.grant_count_cap.value;
        case Metric::internal_projects: return p.cap_internal_projects.value;
        case Metric::certifications: return p.cap_certifications.value;
        case Metric::insignia_count: return p.cap_insignia.value;
        case Metric::intl_projects: return p.cap_intl_projects.value;
        default: return std::nullopt;
    }
}

} // namespace

SensitivityRow sensitivity(const ResearcherProfile& profile, const ModelParameters& params,
                           Metric metric) {
    validate(profile);
    const ProfileMetrics metrics = metrics_of(profile);
    const double x = get(metrics, metric);
    const double lower = metric == Metric::qualification_level ? 1.0 : 0.0;
    const std::optional<double> upper = metric_upper_bound(metric, params);
    const double h = std::max(1e-6, 1e-6 * std::abs(x));

    const auto salary_with = [&](double value) {
        ProfileMetrics probe = metrics;
        set(probe, metric, value);
        return total_salary_at(probe, params);
    };

    SensitivityRow row;
    row.metric = metric;
    row.at_value = x;
    if (x <= lower) {
        row.one_sided = true;
        // Counts report the discrete first step at the bottom of the range;
        // the per-grant average blows up as a real-valued count -> 0.
        const double step = metric_is_integer(metric) ? 1.0 : h;
        row.gradient_kzt = (salary_with(x + step) - salary_with(x)) / step;
    } else if (upper && x >= *upper) {
        // Left derivative at the cap; beyond it the model is flat.
        row.one_sided = true;
        row.gradient_kzt = (salary_with(x) - salary_with(x - h)) / h;
    } else {
        row.gradient_kzt = (salary_with(x + h) - salary_with(x - h)) / (2.0 * h);
    }

    const double salary = total_salary_at(metrics, params);
    row.elasticity = salary > 0.0 ? (x / salary) * row.gradient_kzt : 0.0;
    return row;
}

std::vector<SensitivityRow> sensitivity_table(const ResearcherProfile& profile,
                                              const ModelParameters& params) {
    std::vector<SensitivityRow> rows;
    rows.reserve(kAllMetrics.size());
    for (Metric m : kAllMetrics) {
        rows.push_back(sensitivity(profile, params, m));
    }
    return rows;
}

DiminishingReport diminishing_marginal_check(ComponentSelector component,
                                             const ModelParameters& params, int x_lo, int x_hi) {
    if (component == ComponentSelector::base || component == ComponentSelector::grant) {
        throw ValidationError("diminishing-returns check needs a single-count component curve");
    }
    if (x_lo < 0 || x_hi < x_lo) {
        throw ValidationError("diminishing-returns check needs 0 <= x_lo <= x_hi");
    }

    // The raw curves, deliberately unclamped: the question is whether the
    // marginal value of one more unit keeps shrinking, and a cap would
    // trivially flatten everything past it.
    const auto curve = [&](double x) -> double {
        switch (component) {
            case ComponentSelector::publication:
                return x <= 0.0 ? 0.0 : params.pub_gamma.value * std::pow(x, params.pub_delta.value);
            case ComponentSelector::citation:
                return x <= 0.0 ? 0.0 : params.cit_gamma.value * std::pow(x, params.cit_delta.value);
            case ComponentSelector::collaborative:
                return params.collab_lambda.value * -std::expm1(-params.collab_mu.value * x);
            case ComponentSelector::competency:
                return params.skill_lambda.value * -std::expm1(-params.skill_mu.value * x);
            case ComponentSelector::insignia:
                return params.insig_lambda.value * -std::expm1(-params.insig_mu.value * x);
            case ComponentSelector::intl_collab:
                return params.intl_lambda.value * -std::expm1(-params.intl_mu.value * x);
            default: throw ValidationError("unsupported component curve");
        }
    };

    DiminishingReport report;
    report.component = component;
    report.all_diminishing = true;
    for (int x = x_lo + 1; x <= x_hi - 1; ++x) {
        DiminishingPoint pt;
        pt.x = x;
        pt.second_difference = curve(x + 1) - 2.0 * curve(x) + curve(x - 1);
        if (!(pt.second_difference < 0.0)) report.all_diminishing = false;
        report.points.push_back(pt);
    }
    return report;
}

} // namespace salarium
