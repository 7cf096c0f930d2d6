#pragma once

#include <optional>
#include <string_view>

#include "salarium/profile.hpp"

namespace salarium {

// Where a parameter value comes from: printed as-is in the source model,
// reverse-engineered from its worked figures, or assumed by the user.
enum class Provenance { paper_stated, example_implied, assumed };

std::string_view to_string(Provenance p);
Provenance provenance_from_string(std::string_view s);

// A numeric model parameter together with its provenance tag.
struct Param {
    double value = 0.0;
    Provenance source = Provenance::assumed;
};

// Which functional form the base component evaluates. The multiplicative
// worked_example form is canonical: the model's reference minimum and
// maximum figures derive from it. The additive form is the alternative
// written-out formula and needs a separately supplied KZT-scaled weight
// (base_alpha_additive).
enum class BaseForm { worked_example, additive };

// How the grant amount G entering (G/1e6)^gif is derived from the profile's
// grant_total_kzt: the average per (clamped) grant project, or the total.
enum class GrantAmountSemantics { per_grant_average, total };

std::string_view to_string(BaseForm f);
BaseForm base_form_from_string(std::string_view s);
std::string_view to_string(GrantAmountSemantics s);
GrantAmountSemantics grant_semantics_from_string(std::string_view s);

struct ModelParameters {
    // Base component: W0 * (1 + alpha*ln(1 + T/T0))^beta * (1 + lambda*L).
    Param base_w0;     // W0, guaranteed base rate, KZT
    Param base_alpha;  // experience weight inside the saturating factor
    Param base_beta;   // saturation exponent, > 1
    Param base_t0;     // years scale of the experience logarithm
    Param base_lambda; // qualification weight

    // Performance component: gamma1*P^delta1 + gamma2*H^delta2 + grant term.
    Param pub_gamma;
    Param pub_delta;
    Param cit_gamma;
    Param cit_delta;

    // Grant term: gamma3 * phi^(Gp/cap) * (G/1e6)^gif, Gp clamped to cap.
    Param grant_gamma;
    Param golden_phi;      // 1.618 unless explicitly overridden
    Param grant_impact;    // gif, damps grant funding volume
    Param grant_count_cap; // max Gp

    // Saturating components lambda*(1 - e^(-mu*x)) and their count caps.
    Param collab_lambda, collab_mu;
    Param skill_lambda, skill_mu;
    Param insig_lambda, insig_mu;
    Param intl_lambda, intl_mu;
    Param cap_internal_projects;
    Param cap_certifications;
    Param cap_insignia;
    Param cap_intl_projects;

    // KZT-scaled experience weight of the additive base form; must be
    // supplied when base_form == additive.
    std::optional<Param> base_alpha_additive;

    BaseForm base_form = BaseForm::worked_example;
    GrantAmountSemantics grant_amount_semantics = GrantAmountSemantics::per_grant_average;

    // Profile attaining the salary maximum over the boxed metric domain.
    ResearcherProfile max_profile;

    // Reference parameter set. The citation exponent and the grant impact
    // factor are solved from the model's worked figures at construction
    // (see calibration::solve_exponent) rather than hard-coded.
    static ModelParameters defaults();
};

// Throws ValidationError; checks positivity, base_beta > 1, cap >= 1,
// integral caps, and the additive-form weight when that form is selected.
void validate(const ModelParameters& params);

} // namespace salarium
