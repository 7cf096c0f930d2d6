#include "salarium/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "salarium/envelope.hpp"

namespace salarium {

OutputFormat output_format_from_string(std::string_view s) {
    if (s == "table") return OutputFormat::table;
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    throw ParseError("unknown output format '" + std::string(s) + "'");
}

namespace {

std::string formatted(const char* fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

std::string kzt(Money m) { return std::to_string(m.rounded_kzt()); }

// Two-space gutters, first column left-aligned, the rest right-aligned.
// Every number is already a string here, so alignment is by plain width.
std::string aligned_table(const std::vector<std::string>& header,
                          const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) widths[c] = header[c].size();
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            widths[c] = std::max(widths[c], row[c].size());
        }
    }

    std::ostringstream out;
    const auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out << "  ";
            const std::string pad(widths[c] - row[c].size(), ' ');
            out << (c == 0 ? row[c] + pad : pad + row[c]);
        }
        out << '\n';
    };
    emit(header);
    for (const auto& row : rows) emit(row);
    return out.str();
}

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream out;
    const auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out << ',';
            out << row[c];
        }
        out << '\n';
    };
    emit(header);
    for (const auto& row : rows) emit(row);
    return out.str();
}

const std::vector<std::string> kEvaluationHeader = {
    "profile",  "base",     "performance", "collaborative",
    "competency", "insignia", "intl_collab", "total",
};

std::vector<std::string> evaluation_row(const EvaluationRow& r) {
    return {r.profile,
            kzt(r.breakdown.base),
            kzt(r.breakdown.performance_total),
            kzt(r.breakdown.collaborative),
            kzt(r.breakdown.competency),
            kzt(r.breakdown.insignia),
            kzt(r.breakdown.intl_collab),
            kzt(r.breakdown.total)};
}

nlohmann::json breakdown_to_json(const ComponentBreakdown& b) {
    return nlohmann::json{
        {"base_kzt", b.base.rounded_kzt()},
        {"performance",
         {{"publication_kzt", b.performance_pub.rounded_kzt()},
          {"citation_kzt", b.performance_cit.rounded_kzt()},
          {"grant_kzt", b.performance_grant.rounded_kzt()},
          {"total_kzt", b.performance_total.rounded_kzt()}}},
        {"collaborative_kzt", b.collaborative.rounded_kzt()},
        {"competency_kzt", b.competency.rounded_kzt()},
        {"insignia_kzt", b.insignia.rounded_kzt()},
        {"intl_collab_kzt", b.intl_collab.rounded_kzt()},
        {"total_kzt", b.total.rounded_kzt()},
    };
}

} // namespace

std::string render_evaluation(const std::vector<EvaluationRow>& rows, OutputFormat format) {
    if (format == OutputFormat::json) {
        nlohmann::json j = nlohmann::json::array();
        for (const EvaluationRow& r : rows) {
            nlohmann::json entry = breakdown_to_json(r.breakdown);
            entry["profile"] = r.profile;
            j.push_back(entry);
        }
        return j.dump(2) + "\n";
    }
    std::vector<std::vector<std::string>> body;
    body.reserve(rows.size());
    for (const EvaluationRow& r : rows) body.push_back(evaluation_row(r));
    return format == OutputFormat::csv ? csv_table(kEvaluationHeader, body)
                                       : aligned_table(kEvaluationHeader, body);
}

std::string figure_csv(const SalaryEnvelope& envelope) {
    std::ostringstream out;
    out << "label,amount_kzt\n";
    for (const auto& [label, amount] : figure_data(envelope)) {
        out << label << ',' << kzt(amount) << '\n';
    }
    return out.str();
}

std::string render_envelope(const SalaryEnvelope& envelope, OutputFormat format) {
    if (format == OutputFormat::csv) {
        return figure_csv(envelope);
    }
    if (format == OutputFormat::json) {
        const nlohmann::json j{
            {"mode", std::string(to_string(envelope.mode))},
            {"minimum_kzt", envelope.minimum.rounded_kzt()},
            {"optimal_kzt", envelope.optimal.rounded_kzt()},
            {"maximum_kzt", envelope.maximum.rounded_kzt()},
        };
        return j.dump(2) + "\n";
    }
    std::vector<std::vector<std::string>> body;
    for (const auto& [label, amount] : figure_data(envelope)) {
        body.push_back({label, kzt(amount)});
    }
    return "mode: " + std::string(to_string(envelope.mode)) + "\n" +
           aligned_table({"bound", "amount_kzt"}, body);
}

std::string render_sensitivity(const std::vector<SensitivityRow>& rows, OutputFormat format) {
    if (format == OutputFormat::json) {
        nlohmann::json j = nlohmann::json::array();
        for (const SensitivityRow& r : rows) {
            j.push_back({
                {"metric", std::string(to_string(r.metric))},
                {"gradient_kzt", r.gradient_kzt},
                {"elasticity", r.elasticity},
            });
        }
        return j.dump(2) + "\n";
    }
    const std::vector<std::string> header = {"metric", "gradient_kzt", "elasticity"};
    std::vector<std::vector<std::string>> body;
    body.reserve(rows.size());
    for (const SensitivityRow& r : rows) {
        body.push_back({std::string(to_string(r.metric)), formatted("%.6f", r.gradient_kzt),
                        formatted("%.6f", r.elasticity)});
    }
    return format == OutputFormat::csv ? csv_table(header, body) : aligned_table(header, body);
}

std::string render_residuals(const std::vector<AnchorResidual>& rows, OutputFormat format) {
    if (format == OutputFormat::json) {
        nlohmann::json j = nlohmann::json::array();
        for (const AnchorResidual& r : rows) {
            j.push_back({
                {"anchor", r.anchor},
                {"parameter", r.solved_parameter},
                {"target_kzt", Money(r.target_kzt).rounded_kzt()},
                {"achieved_kzt", Money(r.achieved_kzt).rounded_kzt()},
                {"rel_residual", r.relative_residual},
                {"within_tol", r.within_tolerance},
            });
        }
        return j.dump(2) + "\n";
    }
    const std::vector<std::string> header = {"anchor",       "parameter",    "target_kzt",
                                             "achieved_kzt", "rel_residual", "within_tol"};
    std::vector<std::vector<std::string>> body;
    body.reserve(rows.size());
    for (const AnchorResidual& r : rows) {
        body.push_back({r.anchor, r.solved_parameter, kzt(Money(r.target_kzt)),
                        kzt(Money(r.achieved_kzt)), formatted("%.3e", r.relative_residual),
                        r.within_tolerance ? "yes" : "no"});
    }
    return format == OutputFormat::csv ? csv_table(header, body) : aligned_table(header, body);
}

namespace {

std::string num(double v) {
    // Shortest form that still shows calibrated exponents in full.
    std::string s = formatted("%.10g", v);
    return s;
}

std::string amount2(double v) { return formatted("%.2f", v); }

} // namespace

std::string explain_breakdown(const std::string& name, const ResearcherProfile& profile,
                              const ModelParameters& params) {
    const ComponentBreakdown b = total_salary(profile, params);
    std::ostringstream out;
    out << "profile: " << name << '\n';

    const double T = profile.experience_years;
    const int L = profile.qualification_level;
    if (params.base_form == BaseForm::worked_example) {
        out << "base: " << num(params.base_w0.value) << " * (1 + " << num(params.base_alpha.value)
            << "*ln(1 + " << num(T) << "/" << num(params.base_t0.value) << "))^"
            << num(params.base_beta.value) << " * (1 + " << num(params.base_lambda.value) << "*"
            << L << ") = " << amount2(b.base.amount()) << " KZT\n";
    } else {
        out << "base: " << num(params.base_w0.value) << " + "
            << num(params.base_alpha_additive->value) << " * (1 + "
            << num(params.base_lambda.value) << "*" << L << ") * (ln(1 + " << num(T) << "/"
            << num(params.base_t0.value) << "))^" << num(params.base_beta.value) << " = "
            << amount2(b.base.amount()) << " KZT\n";
    }

    out << "publications: " << num(params.pub_gamma.value) << " * " << profile.publications
        << "^" << num(params.pub_delta.value) << " = " << amount2(b.performance_pub.amount())
        << " KZT\n";
    out << "citations: " << num(params.cit_gamma.value) << " * " << profile.h_index << "^"
        << num(params.cit_delta.value) << " = " << amount2(b.performance_cit.amount())
        << " KZT\n";

    if (profile.grant_count <= 0 || !(profile.grant_total_kzt.amount() > 0.0)) {
        out << "grants: none held = 0.00 KZT\n";
    } else {
        const double cap = params.grant_count_cap.value;
        const double clamped = std::min<double>(profile.grant_count, cap);
        const double amount =
            params.grant_amount_semantics == GrantAmountSemantics::per_grant_average
                ? profile.grant_total_kzt.amount() / clamped
                : profile.grant_total_kzt.amount();
        out << "grants: " << num(params.grant_gamma.value) << " * "
            << num(params.golden_phi.value) << "^(" << num(clamped) << "/" << num(cap) << ") * ("
            << amount2(amount) << "/1e6)^" << num(params.grant_impact.value) << " = "
            << amount2(b.performance_grant.amount()) << " KZT\n";
    }
    out << "performance: " << amount2(b.performance_pub.amount()) << " + "
        << amount2(b.performance_cit.amount()) << " + " << amount2(b.performance_grant.amount())
        << " = " << amount2(b.performance_total.amount()) << " KZT\n";

    const auto saturating_line = [&](const char* label, int x, const Param& lambda,
                                     const Param& mu, const Param& cap, Money value) {
        out << label << ": " << num(lambda.value) << " * (1 - e^(-" << num(mu.value) << "*min("
            << x << ", " << num(cap.value) << "))) = " << amount2(value.amount()) << " KZT\n";
    };
    saturating_line("collaborative", profile.internal_projects, params.collab_lambda,
                    params.collab_mu, params.cap_internal_projects, b.collaborative);
    saturating_line("competency", profile.certifications, params.skill_lambda, params.skill_mu,
                    params.cap_certifications, b.competency);
    saturating_line("insignia", profile.insignia_count, params.insig_lambda, params.insig_mu,
                    params.cap_insignia, b.insignia);
    saturating_line("intl_collab", profile.intl_projects, params.intl_lambda, params.intl_mu,
                    params.cap_intl_projects, b.intl_collab);

    out << "total: " << amount2(b.base.amount()) << " + " << amount2(b.performance_total.amount())
        << " + " << amount2(b.collaborative.amount()) << " + " << amount2(b.competency.amount())
        << " + " << amount2(b.insignia.amount()) << " + " << amount2(b.intl_collab.amount())
        << " = " << amount2(b.total.amount()) << " KZT (" << b.total.rounded_kzt()
        << " whole KZT)\n";

    const MotivationAssessment mf =
        motivational_force(profile.expectancy, profile.instrumentality, profile.valence);
    out << "motivational force: " << num(profile.expectancy) << " * "
        << num(profile.instrumentality) << " * " << num(profile.valence) << " = "
        << format_mf(mf.mf) << " (" << to_string(mf.band) << ")\n";
    return out.str();
}

std::string explain_envelope(const SalaryEnvelope& envelope) {
    std::ostringstream out;
    out << "mode: " << to_string(envelope.mode) << '\n';
    out << "minimum: total salary of the zero-metrics profile = " << kzt(envelope.minimum)
        << " KZT\n";
    if (envelope.mode == EnvelopeMode::paper_replication) {
        out << "maximum: total at the metric-cap corner profile, with the performance "
               "component replaced by the originally reported ceiling = "
            << kzt(envelope.maximum) << " KZT\n";
    } else {
        out << "maximum: total salary at the metric-cap corner profile = "
            << kzt(envelope.maximum) << " KZT\n";
    }
    out << "optimal: sqrt(minimum * maximum) = sqrt(" << amount2(envelope.minimum.amount())
        << " * " << amount2(envelope.maximum.amount()) << ") = " << kzt(envelope.optimal)
        << " KZT\n";
    return out.str();
}

} // namespace salarium
