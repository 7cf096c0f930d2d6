#pragma once

#include "salarium/money.hpp"

namespace salarium {

// One researcher's metrics. Counts above the model caps are allowed here;
// the component formulas clamp them silently.
struct ResearcherProfile {
    double experience_years = 0.0; // T, years of service
    int qualification_level = 1;   // L: 1 master's, 2 PhD, 3 doctor of science
    int publications = 0;          // P, indexed publications
    int h_index = 0;               // H
    int grant_count = 0;           // number of grant projects
    Money grant_total_kzt{};       // total attracted grant funding
    int internal_projects = 0;     // projects inside the organization
    int certifications = 0;        // professional development courses
    int insignia_count = 0;        // awards, memberships, honors
    int intl_projects = 0;         // international research projects

    // Expectancy-theory inputs, each in [0,1].
    double expectancy = 0.0;
    double instrumentality = 0.0;
    double valence = 0.0;
};

// Throws ValidationError naming the offending field.
void validate(const ResearcherProfile& profile);

} // namespace salarium
