// Acceptance harness: re-derives every reference figure the toolkit must
// reproduce and prints one PASS/FAIL line per criterion. Exits nonzero if
// any criterion fails. Oracle constants are hand-derived from the model's
// published worked figures, independently of the library code under test.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "salarium/calibration.hpp"
#include "salarium/envelope.hpp"
#include "salarium/model.hpp"
#include "salarium/report.hpp"

using namespace salarium;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int number, const std::string& label, bool ok, const std::string& detail) {
    std::printf("[%s] %2d. %s (%s)\n", ok ? "PASS" : "FAIL", number, label.c_str(),
                detail.c_str());
    if (!ok) ++g_failures;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

ResearcherProfile senior_profile() {
    ResearcherProfile p;
    p.experience_years = 40.0;
    p.qualification_level = 3;
    p.publications = 100;
    p.h_index = 50;
    p.grant_count = 3;
    p.grant_total_kzt = Money(50'000'000.0);
    p.internal_projects = 20;
    p.certifications = 10;
    p.insignia_count = 10;
    p.intl_projects = 10;
    return p;
}

// ---- criteria 1-8: reference figures ----

void criterion_base_minimum(const ModelParameters& params) {
    const long long total = total_salary(ResearcherProfile{}, params).total.rounded_kzt();
    report(1, "entry profile total is exactly 209,000 KZT", total == 209000,
           "got " + std::to_string(total));
}

void criterion_base_maximum(const ModelParameters& params) {
    ResearcherProfile p;
    p.experience_years = 40.0;
    p.qualification_level = 3;
    const double base = base_component(p, params).amount();
    report(2, "senior base component is 279,911 KZT within 5", std::abs(base - 279911.0) <= 5.0,
           "got " + fmt(base));
}

void criterion_performance_total(const ModelParameters& params) {
    const double total = performance_component(senior_profile(), params).total.amount();
    const double rel = std::abs(total - 2824150.0) / 2824150.0;
    report(3, "senior performance total is 2,824,150 KZT within 0.5%", rel <= 0.005,
           "got " + fmt(total) + ", rel " + fmt(rel));
}

void criterion_saturating_maxima(const ModelParameters& params) {
    const ResearcherProfile p = senior_profile();
    const double collab = component_value(ComponentSelector::collaborative, p, params).amount();
    const double skill = component_value(ComponentSelector::competency, p, params).amount();
    const double insig = component_value(ComponentSelector::insignia, p, params).amount();
    const double intl = component_value(ComponentSelector::intl_collab, p, params).amount();
    const bool ok = std::abs(collab - 43233.0) <= 1.0 && std::abs(skill - 31075.0) <= 1.0 &&
                    std::abs(insig - 44248.0) <= 1.0 && std::abs(intl - 86467.0) <= 1.0;
    std::ostringstream detail;
    detail << "got " << fmt(collab) << " / " << fmt(skill) << " / " << fmt(insig) << " / "
           << fmt(intl);
    report(4, "saturating maxima are 43,233 / 31,075 / 44,248 / 86,467 KZT within 1", ok,
           detail.str());
}

void criterion_envelope_replication(const ModelParameters& params) {
    const SalaryEnvelope env = compute_envelope(params, EnvelopeMode::paper_replication);
    const bool ok = env.minimum.rounded_kzt() == 209000 &&
                    std::abs(env.maximum.amount() - 3613066.0) <= 1.0 &&
                    std::abs(env.optimal.amount() - 868982.0) <= 5.0;
    std::ostringstream detail;
    detail << "got " << env.minimum.rounded_kzt() << " / " << fmt(env.optimal.amount()) << " / "
           << fmt(env.maximum.amount());
    report(5, "replication envelope is 209,000 / 868,982 (+/-5) / 3,613,066 (+/-1)", ok,
           detail.str());
}

void criterion_envelope_consistent(const ModelParameters& params) {
    const SalaryEnvelope env = compute_envelope(params, EnvelopeMode::consistent);
    // Hand-summed per-component maxima: 279,911 + 2,824,150 + 43,233 +
    // 31,075 + 44,248 + 86,467.
    const double hand_summed = 3309084.0;
    const double rel = std::abs(env.maximum.amount() - hand_summed) / hand_summed;
    const double identity = std::abs(env.optimal.amount() -
                                     std::sqrt(env.minimum.amount() * env.maximum.amount())) /
                            env.optimal.amount();
    const bool ok = rel <= 0.005 && identity <= 1e-9;
    report(6, "consistent maximum matches the hand-summed 3,309,084 within 0.5%", ok,
           "got " + fmt(env.maximum.amount()) + ", rel " + fmt(rel) + ", geometric identity " +
               fmt(identity));
}

void criterion_calibration(const ModelParameters& seed) {
    const AnchorSet anchors = default_anchors();
    const CalibrationResult result = calibrate_from_anchors(anchors, seed);
    const double d1 = result.params.pub_delta.value;
    const double d2 = result.params.cit_delta.value;
    const double gif = result.params.grant_impact.value;
    const double d2_oracle = std::log(63.10) / std::log(50.0);
    const double gif_oracle = std::log(9.42) / std::log(50.0 / 3.0);

    bool anchors_reproduced = true;
    for (const Anchor& a : anchors) {
        const double achieved = component_value(a.component, a.profile, result.params).amount();
        if (std::abs(achieved - a.target.amount()) / a.target.amount() > a.tolerance) {
            anchors_reproduced = false;
        }
    }
    const bool ok = std::abs(d1 - 1.05) <= 1e-3 && std::abs(d2 - d2_oracle) <= 1e-3 &&
                    std::abs(gif - gif_oracle) <= 1e-3 && anchors_reproduced;
    std::ostringstream detail;
    detail << "d1 " << fmt(d1) << ", d2 " << fmt(d2) << ", gif " << fmt(gif) << ", anchors "
           << (anchors_reproduced ? "reproduced" : "missed");
    report(7, "shipped anchors recover the implied exponents and round-trip", ok, detail.str());
}

void criterion_motivation() {
    const MotivationAssessment a = motivational_force(0.8, 0.9, 0.9);
    const bool ok = std::abs(a.mf - 0.648) <= 1e-12 && format_mf(a.mf) == "0.65" &&
                    a.band == MotivationBand::emergence_band;
    report(8, "MF(0.8, 0.9, 0.9) = 0.648, displays 0.65, emergence band", ok,
           "got " + fmt(a.mf) + ", shown " + format_mf(a.mf) + ", band " +
               std::string(to_string(a.band)));
}

// ---- criterion 9: property suites, 500+ random cases each ----

bool suite_monotonicity(const ModelParameters& params, std::string& note) {
    std::mt19937 rng(90001);
    std::uniform_real_distribution<double> years(0.0, 60.0);
    std::uniform_int_distribution<int> counts(0, 150);
    std::uniform_real_distribution<double> averages(1e4, 5e7);
    for (int i = 0; i < 500; ++i) {
        double t1 = years(rng), t2 = years(rng);
        if (t1 > t2) std::swap(t1, t2);
        ResearcherProfile lo, hi;
        lo.experience_years = t1;
        hi.experience_years = t2 + 0.01;
        if (!(base_component(hi, params).amount() > base_component(lo, params).amount())) {
            note = "base not increasing in experience";
            return false;
        }
        const int p1 = counts(rng);
        if (!(publication_term(p1 + 1, params).amount() >
              publication_term(p1, params).amount()) ||
            !(citation_term(p1 + 1, params).amount() > citation_term(p1, params).amount())) {
            note = "performance terms not increasing";
            return false;
        }
        const double average = averages(rng);
        const int c1 = 1 + static_cast<int>(rng() % 2);
        if (!(grant_term(c1 + 1, Money(average * (c1 + 1)), params).amount() >
              grant_term(c1, Money(average * c1), params).amount())) {
            note = "grant term not increasing in count at fixed average";
            return false;
        }
        std::uniform_real_distribution<double> below(0.0, 9.0);
        double x1 = below(rng), x2 = below(rng);
        if (x1 > x2) std::swap(x1, x2);
        if (!(saturating_component(x2 + 0.05, Money(1e5), 0.2, 10.0).amount() >
              saturating_component(x1, Money(1e5), 0.2, 10.0).amount())) {
            note = "saturating component not increasing below cap";
            return false;
        }
    }
    return true;
}

bool suite_saturation_bound(std::string& note) {
    std::mt19937 rng(90002);
    std::uniform_real_distribution<double> lambdas(1e3, 5e5);
    std::uniform_real_distribution<double> mus(0.01, 1.5);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        const double lambda = lambdas(rng);
        const double mu = mus(rng);
        const double cap = std::min(30.0 / mu, 60.0) * unit(rng);
        const double x = unit(rng) * (cap + 20.0);
        if (!(saturating_component(x, Money(lambda), mu, cap).amount() < lambda)) {
            note = "value reached lambda at x " + fmt(x);
            return false;
        }
    }
    return true;
}

bool suite_geometric_identity(std::string& note) {
    std::mt19937 rng(90003);
    std::uniform_real_distribution<double> factors(0.2, 5.0);
    for (int i = 0; i < 500; ++i) {
        ModelParameters params = ModelParameters::defaults();
        for (Param* coeff : {&params.base_w0, &params.pub_gamma, &params.cit_gamma,
                             &params.grant_gamma, &params.collab_lambda, &params.skill_lambda,
                             &params.insig_lambda, &params.intl_lambda}) {
            coeff->value *= factors(rng);
        }
        const SalaryEnvelope env = compute_envelope(params);
        const double identity =
            std::abs(env.optimal.amount() * env.optimal.amount() -
                     env.minimum.amount() * env.maximum.amount()) /
            (env.minimum.amount() * env.maximum.amount());
        if (!(env.minimum <= env.optimal && env.optimal <= env.maximum) || identity > 1e-9) {
            note = "identity broke at case " + std::to_string(i);
            return false;
        }
    }
    return true;
}

bool suite_scale_equivariance(std::string& note) {
    const ModelParameters base = ModelParameters::defaults();
    const SalaryEnvelope reference = compute_envelope(base);
    std::mt19937 rng(90004);
    std::uniform_int_distribution<int> powers(-8, 8);
    for (int i = 0; i < 500; ++i) {
        const double k = std::ldexp(1.0, powers(rng));
        ModelParameters scaled = base;
        for (Param* coeff : {&scaled.base_w0, &scaled.pub_gamma, &scaled.cit_gamma,
                             &scaled.grant_gamma, &scaled.collab_lambda, &scaled.skill_lambda,
                             &scaled.insig_lambda, &scaled.intl_lambda}) {
            coeff->value *= k;
        }
        const SalaryEnvelope env = compute_envelope(scaled);
        if (env.minimum.amount() != k * reference.minimum.amount() ||
            env.maximum.amount() != k * reference.maximum.amount() ||
            env.optimal.amount() != k * reference.optimal.amount()) {
            note = "envelope did not scale exactly by 2^j";
            return false;
        }
    }
    return true;
}

bool suite_gradient_agreement(const ModelParameters& params, std::string& note) {
    std::mt19937 rng(90005);
    struct Probe {
        Metric metric;
        double lambda, mu;
        int cap;
    };
    const Probe probes[] = {
        {Metric::internal_projects, 50000.0, 0.1, 20},
        {Metric::certifications, 40000.0, 0.15, 10},
        {Metric::insignia_count, 70000.0, 0.1, 10},
        {Metric::intl_projects, 100000.0, 0.2, 10},
    };
    for (int i = 0; i < 500; ++i) {
        const Probe& probe = probes[rng() % 4];
        const int x = 1 + static_cast<int>(rng() % (probe.cap - 1));
        ResearcherProfile p;
        switch (probe.metric) {
            case Metric::internal_projects: p.internal_projects = x; break;
            case Metric::certifications: p.certifications = x; break;
            case Metric::insignia_count: p.insignia_count = x; break;
            default: p.intl_projects = x; break;
        }
        const SensitivityRow row = sensitivity(p, params, probe.metric);
        const double closed_form = probe.lambda * probe.mu * std::exp(-probe.mu * x);
        if (std::abs(row.gradient_kzt - closed_form) / closed_form > 1e-6) {
            note = "gradient diverged at x " + std::to_string(x);
            return false;
        }
    }
    return true;
}

bool suite_concavity(std::string& note) {
    std::mt19937 rng(90006);
    std::uniform_real_distribution<double> lambdas(1e3, 5e5);
    std::uniform_real_distribution<double> mus(0.02, 0.7);
    for (int i = 0; i < 500; ++i) {
        ModelParameters params = ModelParameters::defaults();
        params.collab_lambda.value = lambdas(rng);
        params.collab_mu.value = mus(rng);
        params.skill_lambda.value = lambdas(rng);
        params.skill_mu.value = mus(rng);
        params.insig_lambda.value = lambdas(rng);
        params.insig_mu.value = mus(rng);
        params.intl_lambda.value = lambdas(rng);
        params.intl_mu.value = mus(rng);
        for (ComponentSelector c :
             {ComponentSelector::collaborative, ComponentSelector::competency,
              ComponentSelector::insignia, ComponentSelector::intl_collab}) {
            if (!diminishing_marginal_check(c, params, 0, 40).all_diminishing) {
                note = "second difference went non-negative";
                return false;
            }
        }
    }
    return true;
}

void criterion_properties(const ModelParameters& params) {
    std::string note;
    bool ok = true;
    const auto run = [&](const char* name, bool passed) {
        if (!passed) {
            ok = false;
            if (!note.empty()) note = std::string(name) + ": " + note;
        }
    };
    run("monotonicity", suite_monotonicity(params, note));
    run("saturation bound", suite_saturation_bound(note));
    run("geometric identity", suite_geometric_identity(note));
    run("scale equivariance", suite_scale_equivariance(note));
    run("gradient agreement", suite_gradient_agreement(params, note));
    run("concavity", suite_concavity(note));
    report(9, "six property suites, 500 random cases each", ok,
           ok ? "all suites passed" : note);
}

// ---- criterion 10: CLI contract ----

struct CliRun {
    int code = -1;
    std::string out;
};

std::string read_file(const fs::path& path) {
    std::ifstream in(path);
    return std::string((std::istreambuf_iterator<char>(in)), {});
}

CliRun run_cli(const std::string& args, const fs::path& dir, int index) {
    const fs::path out = dir / ("stdout" + std::to_string(index) + ".txt");
    const std::string command =
        std::string(SALARIUM_CLI_PATH) + " " + args + " >" + out.string() + " 2>/dev/null";
    const int status = std::system(command.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, read_file(out)};
}

void criterion_cli() {
    const fs::path dir = fs::temp_directory_path() / "salarium_acceptance";
    fs::create_directories(dir);
    const fs::path profiles = std::string(SALARIUM_FIXTURES_DIR) + "/profiles_reference.json";
    const fs::path anchors = std::string(SALARIUM_FIXTURES_DIR) + "/anchors_default.json";

    std::string detail;
    bool ok = true;
    const auto expect = [&](bool passed, const std::string& what) {
        if (!passed && ok) {
            ok = false;
            detail = what;
        }
    };

    const fs::path figure = dir / "figure.csv";
    const CliRun success = run_cli("envelope --figure " + figure.string(), dir, 0);
    expect(success.code == 0, "success run exited " + std::to_string(success.code));
    expect(read_file(figure).rfind("label,amount_kzt\n", 0) == 0,
           "figure CSV header mismatch");

    const fs::path broken = dir / "broken.json";
    std::ofstream(broken) << "{ not json";
    expect(run_cli("evaluate --profiles " + broken.string(), dir, 1).code == 2,
           "parse failure did not exit 2");

    const fs::path invalid = dir / "invalid.json";
    std::ofstream(invalid) << R"([{"name": "x", "publications": -3}])";
    expect(run_cli("evaluate --profiles " + invalid.string(), dir, 2).code == 3,
           "validation failure did not exit 3");

    const fs::path empty_anchors = dir / "empty_anchors.json";
    std::ofstream(empty_anchors) << "[]";
    expect(run_cli("calibrate --anchors " + empty_anchors.string() + " --out " +
                       (dir / "sink.json").string(),
                   dir, 3)
                   .code == 4,
           "infeasible calibration did not exit 4");

    const std::string eval_args = "evaluate --format csv --profiles " + profiles.string();
    const CliRun first = run_cli(eval_args, dir, 4);
    const CliRun second = run_cli(eval_args, dir, 5);
    expect(first.code == 0 && first.out == second.out, "re-runs were not byte-identical");

    const CliRun calib = run_cli("calibrate --anchors " + anchors.string() + " --out " +
                                     (dir / "fitted.json").string(),
                                 dir, 6);
    expect(calib.code == 0, "calibrate run exited " + std::to_string(calib.code));

    report(10, "CLI exit codes 0/2/3/4, byte-identical re-runs, exact figure header", ok,
           ok ? "contract held" : detail);
}

} // namespace

int main() {
    const ModelParameters params = ModelParameters::defaults();
    criterion_base_minimum(params);
    criterion_base_maximum(params);
    criterion_performance_total(params);
    criterion_saturating_maxima(params);
    criterion_envelope_replication(params);
    criterion_envelope_consistent(params);
    criterion_calibration(params);
    criterion_motivation();
    criterion_properties(params);
    criterion_cli();

    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all 10 criteria passed\n");
    return 0;
}
