#include "salarium/envelope.hpp"

#include <cmath>
#include <cstdio>

namespace salarium {

namespace {

// Performance-component maximum as originally reported for the envelope.
// It exceeds what the model's own worked publication/citation/grant maxima
// sum to (2,824,219); replication mode substitutes it verbatim so the
// reported envelope ceiling of 3,613,066 can be reproduced.
constexpr double kReportedPerformanceMaxKzt = 3'128'133.0;

} // namespace

std::string_view to_string(EnvelopeMode m) {
    return m == EnvelopeMode::paper_replication ? "paper_replication" : "consistent";
}

EnvelopeMode envelope_mode_from_string(std::string_view s) {
    if (s == "paper_replication" || s == "paper") return EnvelopeMode::paper_replication;
    if (s == "consistent") return EnvelopeMode::consistent;
    throw ValidationError("unknown envelope mode '" + std::string(s) + "'");
}

std::string_view to_string(MotivationBand b) {
    switch (b) {
        case MotivationBand::sub_threshold: return "sub_threshold";
        case MotivationBand::emergence_band: return "emergence_band";
        case MotivationBand::boundary: return "boundary";
    }
    throw ValidationError("unknown motivation band");
}

ResearcherProfile minimum_profile() {
    return ResearcherProfile{}; // T = 0, L = 1, every metric zero
}

Money salary_min(const ModelParameters& params) {
    return total_salary(minimum_profile(), params).total;
}

Money salary_max(const ModelParameters& params, EnvelopeMode mode) {
    const ComponentBreakdown b = total_salary(params.max_profile, params);
    if (mode == EnvelopeMode::consistent) return b.total;
    return b.base + Money(kReportedPerformanceMaxKzt) + b.collaborative + b.competency +
           b.insignia + b.intl_collab;
}

Money optimal_salary(Money minimum, Money maximum) {
    if (!(minimum.amount() > 0.0)) {
        throw ValidationError("optimal salary needs a strictly positive minimum");
    }
    if (minimum > maximum) {
        throw ValidationError("envelope minimum exceeds its maximum");
    }
    return Money(std::sqrt(minimum.amount() * maximum.amount()));
}

SalaryEnvelope compute_envelope(const ModelParameters& params, EnvelopeMode mode) {
    SalaryEnvelope e;
    e.mode = mode;
    e.min_profile = minimum_profile();
    e.max_profile = params.max_profile;
    e.minimum = salary_min(params);
    e.maximum = salary_max(params, mode);
    e.optimal = optimal_salary(e.minimum, e.maximum);
    return e;
}

MotivationAssessment motivational_force(double expectancy, double instrumentality,
                                        double valence) {
    const auto check = [](double v, const char* field) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw ValidationError(std::string(field) + " must lie in [0,1]");
        }
    };
    check(expectancy, "expectancy");
    check(instrumentality, "instrumentality");
    check(valence, "valence");

    MotivationAssessment a;
    a.mf = expectancy * instrumentality * valence;
    if (a.mf >= 1.0) {
        a.band = MotivationBand::boundary;
    } else if (a.mf > 0.5) {
        a.band = MotivationBand::emergence_band;
    } else {
        a.band = MotivationBand::sub_threshold;
    }
    return a;
}

std::string format_mf(double mf) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", mf);
    return buf;
}

std::vector<std::pair<std::string, Money>> figure_data(const SalaryEnvelope& envelope) {
    return {
        {"minimum", envelope.minimum},
        {"optimal", envelope.optimal},
        {"maximum", envelope.maximum},
    };
}

} // namespace salarium
