#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "salarium/envelope.hpp"
#include "salarium/report.hpp"
#include "salarium/serialization.hpp"

namespace {

using namespace salarium;

struct Options {
    std::string params_path;
    std::string profiles_path;
    std::string anchors_path;
    std::string out_path;
    std::string figure_path;
    std::string profile_name;
    std::string mode = "consistent";
    std::string format = "table";
    bool explain = false;
};

ModelParameters load_params_or_defaults(const Options& opt) {
    return opt.params_path.empty() ? ModelParameters::defaults()
                                   : load_parameters(opt.params_path);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot open '" + path + "' for writing");
    }
    out << text;
    if (!out) {
        throw ParseError("failed while writing '" + path + "'");
    }
}

// Reports land on stdout unless --out redirects them to a file.
void emit_report(const Options& opt, const std::string& report) {
    if (opt.out_path.empty()) {
        std::cout << report;
    } else {
        write_text(opt.out_path, report);
    }
}

// Explanations share stdout with table reports; under json/csv they move to
// stderr so the machine-readable stream stays clean.
std::ostream& explain_stream(const Options& opt, OutputFormat format) {
    return format == OutputFormat::table && opt.out_path.empty() ? std::cout : std::cerr;
}

int cmd_evaluate(const Options& opt) {
    const OutputFormat format = output_format_from_string(opt.format);
    const ModelParameters params = load_params_or_defaults(opt);
    const std::vector<NamedProfile> profiles = load_profiles(opt.profiles_path);

    std::vector<EvaluationRow> rows;
    rows.reserve(profiles.size());
    for (const NamedProfile& np : profiles) {
        try {
            rows.push_back({np.name, total_salary(np.profile, params)});
        } catch (const ValidationError& e) {
            throw ValidationError("profile '" + np.name + "': " + e.what());
        }
    }
    emit_report(opt, render_evaluation(rows, format));
    if (opt.explain) {
        for (const NamedProfile& np : profiles) {
            explain_stream(opt, format) << explain_breakdown(np.name, np.profile, params);
        }
    }
    return 0;
}

int cmd_envelope(const Options& opt) {
    const OutputFormat format = output_format_from_string(opt.format);
    const EnvelopeMode mode = envelope_mode_from_string(opt.mode);
    const ModelParameters params = load_params_or_defaults(opt);
    const SalaryEnvelope envelope = compute_envelope(params, mode);

    emit_report(opt, render_envelope(envelope, format));
    if (!opt.figure_path.empty()) {
        write_text(opt.figure_path, figure_csv(envelope));
    }
    if (opt.explain) {
        explain_stream(opt, format) << explain_envelope(envelope);
    }
    return 0;
}

int cmd_calibrate(const Options& opt) {
    const OutputFormat format = output_format_from_string(opt.format);
    const ModelParameters seed = load_params_or_defaults(opt);
    const AnchorSet anchors = load_anchors(opt.anchors_path);

    const CalibrationResult result = calibrate_from_anchors(anchors, seed);
    save_parameters(opt.out_path, result.params);
    std::cout << render_residuals(result.residuals, format);
    return 0;
}

int cmd_sensitivity(const Options& opt) {
    const OutputFormat format = output_format_from_string(opt.format);
    const ModelParameters params = load_params_or_defaults(opt);
    const std::vector<NamedProfile> profiles = load_profiles(opt.profiles_path);

    const NamedProfile* selected = nullptr;
    for (const NamedProfile& np : profiles) {
        if (np.name == opt.profile_name) {
            selected = &np;
            break;
        }
    }
    if (!selected) {
        throw ValidationError("unknown profile '" + opt.profile_name + "'");
    }

    emit_report(opt, render_sensitivity(sensitivity_table(selected->profile, params), format));
    if (opt.explain) {
        explain_stream(opt, format)
            << explain_breakdown(selected->name, selected->profile, params);
    }
    return 0;
}

void add_common_flags(CLI::App* cmd, Options& opt, bool with_mode = true) {
    cmd->add_option("--params", opt.params_path,
                    "Parameters JSON file; built-in reference values when omitted");
    cmd->add_option("--format", opt.format, "Report format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", opt.out_path, "Write the report here instead of stdout");
    cmd->add_flag("--explain", opt.explain,
                  "Also print each formula with its substituted values");
    if (with_mode) {
        cmd->add_option("--mode", opt.mode,
                        "Envelope mode; evaluation itself is always model-consistent")
            ->check(CLI::IsMember({"paper", "paper_replication", "consistent"}))
            ->capture_default_str();
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Researcher compensation model: evaluation, envelopes, calibration, "
                 "sensitivity"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* evaluate =
        app.add_subcommand("evaluate", "Component breakdown for each profile in a file");
    add_common_flags(evaluate, opt);
    evaluate->add_option("--profiles", opt.profiles_path, "Profiles JSON file")->required();

    CLI::App* envelope =
        app.add_subcommand("envelope", "Salary minimum, optimal and maximum bounds");
    add_common_flags(envelope, opt);
    envelope->add_option("--figure", opt.figure_path, "Also write plot data CSV here");

    CLI::App* calibrate =
        app.add_subcommand("calibrate", "Fit parameters to anchor values and report residuals");
    add_common_flags(calibrate, opt);
    calibrate->add_option("--anchors", opt.anchors_path, "Anchors JSON file")->required();
    calibrate->get_option("--out")->required();

    CLI::App* sensitivity = app.add_subcommand(
        "sensitivity", "Salary gradient and elasticity per metric for one profile");
    add_common_flags(sensitivity, opt);
    sensitivity->add_option("--profiles", opt.profiles_path, "Profiles JSON file")->required();
    sensitivity->add_option("--profile", opt.profile_name, "Name of the profile to analyze")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (evaluate->parsed()) return cmd_evaluate(opt);
        if (envelope->parsed()) return cmd_envelope(opt);
        if (calibrate->parsed()) return cmd_calibrate(opt);
        return cmd_sensitivity(opt);
    } catch (const salarium::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const salarium::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const salarium::CalibrationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
