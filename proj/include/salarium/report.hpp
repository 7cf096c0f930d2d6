#pragma once

#include <string>
#include <vector>

#include "salarium/calibration.hpp"
#include "salarium/serialization.hpp"

namespace salarium {

enum class OutputFormat { table, json, csv };

OutputFormat output_format_from_string(std::string_view s);

// All renderers return the complete report as a string; Money appears as
// whole KZT, and identical inputs yield byte-identical output.

struct EvaluationRow {
    std::string profile;
    ComponentBreakdown breakdown;
};

std::string render_evaluation(const std::vector<EvaluationRow>& rows, OutputFormat format);
std::string render_envelope(const SalaryEnvelope& envelope, OutputFormat format);
std::string render_sensitivity(const std::vector<SensitivityRow>& rows, OutputFormat format);
std::string render_residuals(const std::vector<AnchorResidual>& rows, OutputFormat format);

// Figure data CSV, header exactly "label,amount_kzt".
std::string figure_csv(const SalaryEnvelope& envelope);

// Per-component formulas with substituted values for one researcher; the
// audit trail behind each breakdown row.
std::string explain_breakdown(const std::string& name, const ResearcherProfile& profile,
                              const ModelParameters& params);
std::string explain_envelope(const SalaryEnvelope& envelope);

} // namespace salarium
