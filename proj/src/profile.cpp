#include "salarium/profile.hpp"

#include <cmath>
#include <string>

namespace salarium {

namespace {

void require_count(int value, const char* field) {
    if (value < 0) {
        throw ValidationError(std::string(field) + " must be non-negative, got " +
                              std::to_string(value));
    }
}

void require_unit_interval(double value, const char* field) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw ValidationError(std::string(field) + " must lie in [0,1], got " +
                              std::to_string(value));
    }
}

} // namespace

void validate(const ResearcherProfile& p) {
    if (!(p.experience_years >= 0.0) || !std::isfinite(p.experience_years)) {
        throw ValidationError("experience_years must be a finite non-negative number");
    }
    if (p.qualification_level < 1 || p.qualification_level > 3) {
        throw ValidationError("qualification_level must be 1, 2 or 3, got " +
                              std::to_string(p.qualification_level));
    }
    require_count(p.publications, "publications");
    require_count(p.h_index, "h_index");
    require_count(p.grant_count, "grant_count");
    require_count(p.internal_projects, "internal_projects");
    require_count(p.certifications, "certifications");
    require_count(p.insignia_count, "insignia_count");
    require_count(p.intl_projects, "intl_projects");
    require_unit_interval(p.expectancy, "expectancy");
    require_unit_interval(p.instrumentality, "instrumentality");
    require_unit_interval(p.valence, "valence");
}

} // namespace salarium
