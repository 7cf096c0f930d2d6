#include "salarium/model.hpp"

#include <cmath>
#include <string>

namespace salarium {

std::string_view to_string(ComponentSelector c) {
    switch (c) {
        case ComponentSelector::base: return "base";
        case ComponentSelector::publication: return "publication";
        case ComponentSelector::citation: return "citation";
        case ComponentSelector::grant: return "grant";
        case ComponentSelector::collaborative: return "collaborative";
        case ComponentSelector::competency: return "competency";
        case ComponentSelector::insignia: return "insignia";
        case ComponentSelector::intl_collab: return "intl_collab";
    }
    throw ValidationError("unknown component selector");
}

ComponentSelector component_from_string(std::string_view s) {
    if (s == "base") return ComponentSelector::base;
    if (s == "publication") return ComponentSelector::publication;
    if (s == "citation") return ComponentSelector::citation;
    if (s == "grant") return ComponentSelector::grant;
    if (s == "collaborative") return ComponentSelector::collaborative;
    if (s == "competency") return ComponentSelector::competency;
    if (s == "insignia") return ComponentSelector::insignia;
    if (s == "intl_collab") return ComponentSelector::intl_collab;
    throw ValidationError("unknown component '" + std::string(s) + "'");
}

std::string_view to_string(Metric m) {
    switch (m) {
        case Metric::experience_years: return "experience_years";
        case Metric::qualification_level: return "qualification_level";
        case Metric::publications: return "publications";
        case Metric::h_index: return "h_index";
        case Metric::grant_count: return "grant_count";
        case Metric::grant_total_kzt: return "grant_total_kzt";
        case Metric::internal_projects: return "internal_projects";
        case Metric::certifications: return "certifications";
        case Metric::insignia_count: return "insignia_count";
        case Metric::intl_projects: return "intl_projects";
    }
    throw ValidationError("unknown metric");
}

Metric metric_from_string(std::string_view s) {
    for (Metric m : kAllMetrics) {
        if (to_string(m) == s) return m;
    }
    throw ValidationError("unknown metric '" + std::string(s) + "'");
}

bool metric_is_integer(Metric m) {
    return m != Metric::experience_years && m != Metric::grant_total_kzt;
}

ProfileMetrics metrics_of(const ResearcherProfile& p) {
    ProfileMetrics m;
    m.experience_years = p.experience_years;
    m.qualification_level = p.qualification_level;
    m.publications = p.publications;
    m.h_index = p.h_index;
    m.grant_count = p.grant_count;
    m.grant_total_kzt = p.grant_total_kzt.amount();
    m.internal_projects = p.internal_projects;
    m.certifications = p.certifications;
    m.insignia_count = p.insignia_count;
    m.intl_projects = p.intl_projects;
    return m;
}

double get(const ProfileMetrics& m, Metric metric) {
    switch (metric) {
        case Metric::experience_years: return m.experience_years;
        case Metric::qualification_level: return m.qualification_level;
        case Metric::publications: return m.publications;
        case Metric::h_index: return m.h_index;
        case Metric::grant_count: return m.grant_count;
        case Metric::grant_total_kzt: return m.grant_total_kzt;
        case Metric::internal_projects: return m.internal_projects;
        case Metric::certifications: return m.certifications;
        case Metric::insignia_count: return m.insignia_count;
        case Metric::intl_projects: return m.intl_projects;
    }
    throw ValidationError("unknown metric");
}

void set(ProfileMetrics& m, Metric metric, double value) {
    switch (metric) {
        case Metric::experience_years: m.experience_years = value; return;
        case Metric::qualification_level: m.qualification_level = value; return;
        case Metric::publications: m.publications = value; return;
        case Metric::h_index: m.h_index = value; return;
        case Metric::grant_count: m.grant_count = value; return;
        case Metric::grant_total_kzt: m.grant_total_kzt = value; return;
        case Metric::internal_projects: m.internal_projects = value; return;
        case Metric::certifications: m.certifications = value; return;
        case Metric::insignia_count: m.insignia_count = value; return;
        case Metric::intl_projects: m.intl_projects = value; return;
    }
    throw ValidationError("unknown metric");
}

namespace {

double base_at(double years, double level, const ModelParameters& p) {
    const double log_term = std::log1p(years / p.base_t0.value);
    const double qual = 1.0 + p.base_lambda.value * level;
    if (p.base_form == BaseForm::worked_example) {
        return p.base_w0.value * std::pow(1.0 + p.base_alpha.value * log_term, p.base_beta.value) *
               qual;
    }
    if (!p.base_alpha_additive) {
        throw ValidationError("base_alpha_additive must be supplied when base_form is additive");
    }
    return p.base_w0.value +
           p.base_alpha_additive->value * qual * std::pow(log_term, p.base_beta.value);
}

double publication_at(double count, const ModelParameters& p) {
    return count <= 0.0 ? 0.0 : p.pub_gamma.value * std::pow(count, p.pub_delta.value);
}

double citation_at(double h, const ModelParameters& p) {
    return h <= 0.0 ? 0.0 : p.cit_gamma.value * std::pow(h, p.cit_delta.value);
}

double grant_at(double count, double total, const ModelParameters& p) {
    if (count <= 0.0 || total <= 0.0) return 0.0;
    const double clamped = std::min(count, p.grant_count_cap.value);
    const double amount = p.grant_amount_semantics == GrantAmountSemantics::per_grant_average
                              ? total / clamped
                              : total;
    return p.grant_gamma.value *
           std::pow(p.golden_phi.value, clamped / p.grant_count_cap.value) *
           std::pow(amount / 1e6, p.grant_impact.value);
}

double saturating_at(double x, double lambda, double mu, double cap) {
    const double clamped = std::min(x, cap);
    // -expm1 keeps 1 - e^(-mu*x) accurate for small mu*x.
    return lambda * (-std::expm1(-mu * clamped));
}

} // namespace

double component_at(ComponentSelector c, const ProfileMetrics& m, const ModelParameters& p) {
    switch (c) {
        case ComponentSelector::base:
            return base_at(m.experience_years, m.qualification_level, p);
        case ComponentSelector::publication: return publication_at(m.publications, p);
        case ComponentSelector::citation: return citation_at(m.h_index, p);
        case ComponentSelector::grant: return grant_at(m.grant_count, m.grant_total_kzt, p);
        case ComponentSelector::collaborative:
            return saturating_at(m.internal_projects, p.collab_lambda.value, p.collab_mu.value,
                                 p.cap_internal_projects.value);
        case ComponentSelector::competency:
            return saturating_at(m.certifications, p.skill_lambda.value, p.skill_mu.value,
                                 p.cap_certifications.value);
        case ComponentSelector::insignia:
            return saturating_at(m.insignia_count, p.insig_lambda.value, p.insig_mu.value,
                                 p.cap_insignia.value);
        case ComponentSelector::intl_collab:
            return saturating_at(m.intl_projects, p.intl_lambda.value, p.intl_mu.value,
                                 p.cap_intl_projects.value);
    }
    throw ValidationError("unknown component selector");
}

double total_salary_at(const ProfileMetrics& m, const ModelParameters& p) {
    const double performance = publication_at(m.publications, p) + citation_at(m.h_index, p) +
                               grant_at(m.grant_count, m.grant_total_kzt, p);
    return base_at(m.experience_years, m.qualification_level, p) + performance +
           component_at(ComponentSelector::collaborative, m, p) +
           component_at(ComponentSelector::competency, m, p) +
           component_at(ComponentSelector::insignia, m, p) +
           component_at(ComponentSelector::intl_collab, m, p);
}

Money base_component(const ResearcherProfile& profile, const ModelParameters& params) {
    if (!(profile.experience_years >= 0.0) || !std::isfinite(profile.experience_years)) {
        throw ValidationError("experience_years must be a finite non-negative number");
    }
    if (profile.qualification_level < 1 || profile.qualification_level > 3) {
        throw ValidationError("qualification_level must be 1, 2 or 3, got " +
                              std::to_string(profile.qualification_level));
    }
    return Money(base_at(profile.experience_years, profile.qualification_level, params));
}

Money publication_term(int publications, const ModelParameters& params) {
    if (publications < 0) {
        throw ValidationError("publications must be non-negative, got " +
                              std::to_string(publications));
    }
    return Money(publication_at(publications, params));
}

Money citation_term(int h_index, const ModelParameters& params) {
    if (h_index < 0) {
        throw ValidationError("h_index must be non-negative, got " + std::to_string(h_index));
    }
    return Money(citation_at(h_index, params));
}

Money grant_term(int grant_count, Money grant_total_kzt, const ModelParameters& params) {
    if (grant_count < 0) {
        throw ValidationError("grant_count must be non-negative, got " +
                              std::to_string(grant_count));
    }
    return Money(grant_at(grant_count, grant_total_kzt.amount(), params));
}

PerformanceBreakdown performance_component(const ResearcherProfile& profile,
                                           const ModelParameters& params) {
    PerformanceBreakdown b;
    b.publication = publication_term(profile.publications, params);
    b.citation = citation_term(profile.h_index, params);
    b.grant = grant_term(profile.grant_count, profile.grant_total_kzt, params);
    b.total = b.publication + b.citation + b.grant;
    return b;
}

Money saturating_component(double x, Money lambda, double mu, double cap) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw ValidationError("saturating component input must be a finite non-negative number");
    }
    if (!(mu > 0.0) || !(cap >= 0.0)) {
        throw ValidationError("saturating component needs mu > 0 and cap >= 0");
    }
    return Money(saturating_at(x, lambda.amount(), mu, cap));
}

ComponentBreakdown total_salary(const ResearcherProfile& profile, const ModelParameters& params) {
    validate(profile);
    const ProfileMetrics m = metrics_of(profile);
    ComponentBreakdown b;
    b.base = Money(component_at(ComponentSelector::base, m, params));
    const PerformanceBreakdown perf = performance_component(profile, params);
    b.performance_pub = perf.publication;
    b.performance_cit = perf.citation;
    b.performance_grant = perf.grant;
    b.performance_total = perf.total;
    b.collaborative = Money(component_at(ComponentSelector::collaborative, m, params));
    b.competency = Money(component_at(ComponentSelector::competency, m, params));
    b.insignia = Money(component_at(ComponentSelector::insignia, m, params));
    b.intl_collab = Money(component_at(ComponentSelector::intl_collab, m, params));
    b.total = b.base + b.performance_total + b.collaborative + b.competency + b.insignia +
              b.intl_collab;
    return b;
}

Money component_value(ComponentSelector c, const ResearcherProfile& profile,
                      const ModelParameters& params) {
    validate(profile);
    return Money(component_at(c, metrics_of(profile), params));
}

} // namespace salarium
