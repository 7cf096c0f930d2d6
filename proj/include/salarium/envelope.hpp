#pragma once

#include <string>
#include <utility>
#include <vector>

#include "salarium/model.hpp"

namespace salarium {

// consistent: every figure recomputed from the parameter set.
// paper_replication: the maximum substitutes the originally reported
// performance-component constant, which is larger than what the model's own
// worked performance figures sum to; kept so the reported envelope can be
// reproduced verbatim.
enum class EnvelopeMode { paper_replication, consistent };

std::string_view to_string(EnvelopeMode m);
EnvelopeMode envelope_mode_from_string(std::string_view s);

struct SalaryEnvelope {
    Money minimum;
    Money maximum;
    Money optimal; // geometric mean of minimum and maximum
    ResearcherProfile min_profile;
    ResearcherProfile max_profile;
    EnvelopeMode mode = EnvelopeMode::consistent;
};

enum class MotivationBand {
    sub_threshold,  // mf <= 0.5
    emergence_band, // 0.5 < mf < 1
    boundary,       // mf = 1
};

std::string_view to_string(MotivationBand b);

struct MotivationAssessment {
    double mf = 0.0; // expectancy * instrumentality * valence
    MotivationBand band = MotivationBand::sub_threshold;
};

// Zero-metrics profile: first year, master's level, nothing else.
ResearcherProfile minimum_profile();

// Total salary at the zero-metrics profile: W0 * (1 + lambda).
Money salary_min(const ModelParameters& params);

// Total salary at params.max_profile. Monotonicity of every component in
// its own metric (grant count taken with its per-grant amount) makes this
// corner the maximum over the boxed domain.
Money salary_max(const ModelParameters& params,
                 EnvelopeMode mode = EnvelopeMode::consistent);

// Geometric mean sqrt(minimum * maximum); requires 0 < minimum <= maximum.
Money optimal_salary(Money minimum, Money maximum);

SalaryEnvelope compute_envelope(const ModelParameters& params,
                                EnvelopeMode mode = EnvelopeMode::consistent);

// mf = E * I * V at full precision; band per the strict 0.5 < mf < 1 rule.
MotivationAssessment motivational_force(double expectancy, double instrumentality,
                                        double valence);

// Two-decimal display form of an MF value, e.g. 0.648 -> "0.65".
std::string format_mf(double mf);

// (label, amount) series for plotting, ascending: minimum, optimal, maximum.
std::vector<std::pair<std::string, Money>> figure_data(const SalaryEnvelope& envelope);

} // namespace salarium
