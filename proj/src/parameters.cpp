#include "salarium/parameters.hpp"

#include <cmath>
#include <string>

#include "salarium/calibration.hpp"

namespace salarium {

std::string_view to_string(Provenance p) {
    switch (p) {
        case Provenance::paper_stated: return "paper_stated";
        case Provenance::example_implied: return "example_implied";
        case Provenance::assumed: return "assumed";
    }
    throw ValidationError("unknown provenance value");
}

Provenance provenance_from_string(std::string_view s) {
    if (s == "paper_stated") return Provenance::paper_stated;
    if (s == "example_implied") return Provenance::example_implied;
    if (s == "assumed") return Provenance::assumed;
    throw ValidationError("unknown provenance '" + std::string(s) + "'");
}

std::string_view to_string(BaseForm f) {
    return f == BaseForm::worked_example ? "worked_example" : "additive";
}

BaseForm base_form_from_string(std::string_view s) {
    if (s == "worked_example") return BaseForm::worked_example;
    if (s == "additive") return BaseForm::additive;
    throw ValidationError("unknown base_form '" + std::string(s) + "'");
}

std::string_view to_string(GrantAmountSemantics s) {
    return s == GrantAmountSemantics::per_grant_average ? "per_grant_average" : "total";
}

GrantAmountSemantics grant_semantics_from_string(std::string_view s) {
    if (s == "per_grant_average") return GrantAmountSemantics::per_grant_average;
    if (s == "total") return GrantAmountSemantics::total;
    throw ValidationError("unknown grant_amount_semantics '" + std::string(s) + "'");
}

ModelParameters ModelParameters::defaults() {
    ModelParameters p;
    const auto stated = [](double v) { return Param{v, Provenance::paper_stated}; };
    const auto implied = [](double v) { return Param{v, Provenance::example_implied}; };

    p.base_w0 = stated(190000.0);
    p.base_alpha = stated(0.05);
    p.base_beta = stated(1.2);
    p.base_t0 = stated(5.0);
    p.base_lambda = stated(0.1);

    p.pub_gamma = stated(15000.0);
    // 100^1.05 reproduces the printed publication factor 125.89; the stated
    // exponent range is 1..1.2.
    p.pub_delta = implied(1.05);
    p.cit_gamma = stated(10000.0);
    // The citation exponent is whatever makes 50^d equal the printed factor
    // 63.10; solved here instead of freezing a rounded literal.
    p.cit_delta = implied(solve_exponent(50.0, 63.10).solution);

    p.grant_gamma = stated(20000.0);
    p.golden_phi = stated(1.618);
    p.grant_count_cap = stated(3.0);
    // Likewise for the grant impact factor: (50/3)^gif = 9.42, the only
    // reading of the printed grant factor that stays inside the stated
    // 0.7..0.8 range (three grants averaging 50/3 million).
    p.grant_impact = implied(solve_exponent(50.0 / 3.0, 9.42).solution);

    p.collab_lambda = stated(50000.0);
    p.collab_mu = stated(0.1);
    p.skill_lambda = stated(40000.0);
    p.skill_mu = stated(0.15);
    p.insig_lambda = stated(70000.0);
    p.insig_mu = stated(0.1);
    p.intl_lambda = stated(100000.0);
    p.intl_mu = stated(0.2);

    p.cap_internal_projects = stated(20.0);
    p.cap_certifications = stated(10.0);
    p.cap_insignia = stated(10.0);
    p.cap_intl_projects = stated(10.0);

    p.max_profile.experience_years = 40.0;
    p.max_profile.qualification_level = 3;
    p.max_profile.publications = 100;
    p.max_profile.h_index = 50;
    p.max_profile.grant_count = 3;
    p.max_profile.grant_total_kzt = Money(50'000'000.0);
    p.max_profile.internal_projects = 20;
    p.max_profile.certifications = 10;
    p.max_profile.insignia_count = 10;
    p.max_profile.intl_projects = 10;
    p.max_profile.expectancy = 1.0;
    p.max_profile.instrumentality = 1.0;
    p.max_profile.valence = 1.0;

    return p;
}

namespace {

void require_positive(const Param& p, const char* field) {
    if (!(p.value > 0.0) || !std::isfinite(p.value)) {
        throw ValidationError(std::string(field) + " must be strictly positive, got " +
                              std::to_string(p.value));
    }
}

void require_integral_count(const Param& p, const char* field, double min_value) {
    if (!(p.value >= min_value) || p.value != std::floor(p.value)) {
        throw ValidationError(std::string(field) + " must be an integer >= " +
                              std::to_string(static_cast<int>(min_value)));
    }
}

} // namespace

void validate(const ModelParameters& p) {
    require_positive(p.base_w0, "base_w0");
    require_positive(p.base_alpha, "base_alpha");
    require_positive(p.base_beta, "base_beta");
    if (!(p.base_beta.value > 1.0)) {
        throw ValidationError("base_beta must exceed 1 for the saturation effect");
    }
    require_positive(p.base_t0, "base_t0");
    require_positive(p.base_lambda, "base_lambda");
    require_positive(p.pub_gamma, "pub_gamma");
    require_positive(p.pub_delta, "pub_delta");
    require_positive(p.cit_gamma, "cit_gamma");
    require_positive(p.cit_delta, "cit_delta");
    require_positive(p.grant_gamma, "grant_gamma");
    require_positive(p.golden_phi, "golden_phi");
    require_positive(p.grant_impact, "grant_impact");
    require_integral_count(p.grant_count_cap, "grant_count_cap", 1.0);
    require_positive(p.collab_lambda, "collab_lambda");
    require_positive(p.collab_mu, "collab_mu");
    require_positive(p.skill_lambda, "skill_lambda");
    require_positive(p.skill_mu, "skill_mu");
    require_positive(p.insig_lambda, "insig_lambda");
    require_positive(p.insig_mu, "insig_mu");
    require_positive(p.intl_lambda, "intl_lambda");
    require_positive(p.intl_mu, "intl_mu");
    require_integral_count(p.cap_internal_projects, "cap_internal_projects", 0.0);
    require_integral_count(p.cap_certifications, "cap_certifications", 0.0);
    require_integral_count(p.cap_insignia, "cap_insignia", 0.0);
    require_integral_count(p.cap_intl_projects, "cap_intl_projects", 0.0);
    if (p.base_form == BaseForm::additive) {
        if (!p.base_alpha_additive) {
            throw ValidationError(
                "base_alpha_additive must be supplied when base_form is additive");
        }
        require_positive(*p.base_alpha_additive, "base_alpha_additive");
    }
    validate(p.max_profile);
}

} // namespace salarium
