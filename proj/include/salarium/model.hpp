#pragma once

#include <array>
#include <string_view>

#include "salarium/parameters.hpp"

namespace salarium {

// The six component values, the three performance sub-terms and the total.
struct ComponentBreakdown {
    Money base;
    Money performance_pub;
    Money performance_cit;
    Money performance_grant;
    Money performance_total; // pub + cit + grant
    Money collaborative;
    Money competency;
    Money insignia;
    Money intl_collab;
    Money total; // base + performance_total + the four saturating components
};

struct PerformanceBreakdown {
    Money publication;
    Money citation;
    Money grant;
    Money total;
};

// Salary components addressable by name (anchors, diminishing-returns
// checks, reports).
enum class ComponentSelector {
    base,
    publication,
    citation,
    grant,
    collaborative,
    competency,
    insignia,
    intl_collab,
};

std::string_view to_string(ComponentSelector c);
ComponentSelector component_from_string(std::string_view s);

// Profile metrics that enter the salary formulas, addressable for
// sensitivity analysis. Order is the stable report order.
enum class Metric {
    experience_years,
    qualification_level,
    publications,
    h_index,
    grant_count,
    grant_total_kzt,
    internal_projects,
    certifications,
    insignia_count,
    intl_projects,
};

inline constexpr std::array<Metric, 10> kAllMetrics = {
    Metric::experience_years, Metric::qualification_level, Metric::publications,
    Metric::h_index,          Metric::grant_count,         Metric::grant_total_kzt,
    Metric::internal_projects, Metric::certifications,     Metric::insignia_count,
    Metric::intl_projects,
};

std::string_view to_string(Metric m);
Metric metric_from_string(std::string_view s);
bool metric_is_integer(Metric m);

// Real-valued view of the salary-relevant metrics. Every component formula
// is smooth in its inputs, so sensitivity analysis may probe between
// integer counts through this view.
struct ProfileMetrics {
    double experience_years = 0.0;
    double qualification_level = 1.0;
    double publications = 0.0;
    double h_index = 0.0;
    double grant_count = 0.0;
    double grant_total_kzt = 0.0;
    double internal_projects = 0.0;
    double certifications = 0.0;
    double insignia_count = 0.0;
    double intl_projects = 0.0;
};

ProfileMetrics metrics_of(const ResearcherProfile& profile);
double get(const ProfileMetrics& m, Metric metric);
void set(ProfileMetrics& m, Metric metric, double value);

// Unrounded KZT totals evaluated on the real-valued view. The pair of
// overloads below and the public component operations all share this path.
double total_salary_at(const ProfileMetrics& m, const ModelParameters& params);
double component_at(ComponentSelector c, const ProfileMetrics& m, const ModelParameters& params);

// Base component S_b(T, L). Strictly increasing in T and L under the
// worked_example form; equals W0*(1 + lambda*L) at T = 0.
Money base_component(const ResearcherProfile& profile, const ModelParameters& params);

// gamma1 * P^delta1; zero at P = 0.
Money publication_term(int publications, const ModelParameters& params);

// gamma2 * H^delta2.
Money citation_term(int h_index, const ModelParameters& params);

// gamma3 * phi^(Gp/cap) * (G/1e6)^gif with Gp clamped to the cap before any
// use (including the per-grant average). Zero when there are no grant
// projects or no grant money.
Money grant_term(int grant_count, Money grant_total_kzt, const ModelParameters& params);

PerformanceBreakdown performance_component(const ResearcherProfile& profile,
                                           const ModelParameters& params);

// lambda * (1 - e^(-mu*min(x, cap))). Bounded above by lambda; constant at
// lambda*(1 - e^(-mu*cap)) once x reaches the cap.
Money saturating_component(double x, Money lambda, double mu, double cap);

// Full six-component evaluation for one researcher.
ComponentBreakdown total_salary(const ResearcherProfile& profile, const ModelParameters& params);

Money component_value(ComponentSelector c, const ResearcherProfile& profile,
                      const ModelParameters& params);

} // namespace salarium
