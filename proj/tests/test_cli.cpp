#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

#include "salarium/serialization.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kCli = SALARIUM_CLI_PATH;
const fs::path kFixtures = SALARIUM_FIXTURES_DIR;

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "salarium_cli_tests";
    fs::create_directories(dir);
    return dir;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path);
    return std::string((std::istreambuf_iterator<char>(in)), {});
}

struct CliRun {
    int code = -1;
    std::string out;
    std::string err;
};

CliRun run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path out = scratch_dir() / ("stdout" + std::to_string(counter) + ".txt");
    const fs::path err = scratch_dir() / ("stderr" + std::to_string(counter) + ".txt");
    ++counter;
    const std::string command =
        kCli + " " + args + " >" + out.string() + " 2>" + err.string();
    const int status = std::system(command.c_str());
    CliRun r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = read_file(out);
    r.err = read_file(err);
    return r;
}

std::string fixture(const char* name) { return (kFixtures / name).string(); }

fs::path write_scratch(const char* name, const std::string& content) {
    const fs::path path = scratch_dir() / name;
    std::ofstream(path) << content;
    return path;
}

} // namespace

TEST_CASE("evaluate renders one row per profile in input order") {
    const CliRun r = run_cli("evaluate --profiles " + fixture("profiles_reference.json"));
    CHECK(r.code == 0);
    const auto entry = r.out.find("entry_level");
    const auto mid = r.out.find("mid_career");
    const auto senior = r.out.find("senior_maximum");
    REQUIRE(entry != std::string::npos);
    REQUIRE(mid != std::string::npos);
    REQUIRE(senior != std::string::npos);
    CHECK(entry < mid);
    CHECK(mid < senior);
    CHECK(r.out.find("209000") != std::string::npos);
}

TEST_CASE("evaluate json carries the full breakdown") {
    const CliRun r = run_cli("evaluate --format json --profiles " +
                             fixture("profiles_reference.json"));
    CHECK(r.code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 3);
    CHECK(j[0]["profile"] == "entry_level");
    CHECK(j[0]["total_kzt"] == 209000);
    CHECK(j[2]["performance"]["total_kzt"].get<long long>() == 2824219);
}

TEST_CASE("evaluate supports an explicit parameters file") {
    const CliRun r = run_cli("evaluate --params " + fixture("parameters_default.json") +
                             " --profiles " + fixture("profiles_reference.json") +
                             " --format csv");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("profile,base,performance,collaborative,competency,insignia,"
                      "intl_collab,total\n",
                      0) == 0);
}

TEST_CASE("an empty profile list is a valid empty report") {
    const fs::path empty = write_scratch("empty_profiles.json", "[]\n");
    const CliRun table = run_cli("evaluate --profiles " + empty.string());
    CHECK(table.code == 0);
    CHECK(table.out.rfind("profile", 0) == 0);

    const CliRun json = run_cli("evaluate --format json --profiles " + empty.string());
    CHECK(json.code == 0);
    CHECK(nlohmann::json::parse(json.out).empty());
}

TEST_CASE("identical invocations produce byte-identical reports") {
    const std::string args = "evaluate --format csv --profiles " +
                             fixture("profiles_reference.json");
    const CliRun first = run_cli(args);
    const CliRun second = run_cli(args);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);

    const std::string envelope_args = "envelope --format json";
    CHECK(run_cli(envelope_args).out == run_cli(envelope_args).out);
}

TEST_CASE("envelope defaults to the consistent mode and writes figure data") {
    const fs::path figure = scratch_dir() / "figure.csv";
    const CliRun r = run_cli("envelope --format json --figure " + figure.string());
    CHECK(r.code == 0);

    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["mode"] == "consistent");
    CHECK(j["minimum_kzt"] == 209000);
    CHECK(j["maximum_kzt"] == 3309153);
    CHECK(j["optimal_kzt"] == 831633);

    const std::string csv = read_file(figure);
    CHECK(csv.rfind("label,amount_kzt\n", 0) == 0);
    CHECK(csv.find("minimum,209000\n") != std::string::npos);
    CHECK(csv.find("maximum,3309153\n") != std::string::npos);
}

TEST_CASE("envelope paper mode reproduces the reported bounds") {
    const CliRun r = run_cli("envelope --mode paper --format json");
    CHECK(r.code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["mode"] == "paper_replication");
    CHECK(j["minimum_kzt"] == 209000);
    CHECK(j["maximum_kzt"] == 3613067);
    CHECK(j["optimal_kzt"] == 868983);
}

TEST_CASE("envelope csv report equals the figure file") {
    const fs::path figure = scratch_dir() / "figure_same.csv";
    const CliRun r = run_cli("envelope --format csv --figure " + figure.string());
    CHECK(r.code == 0);
    CHECK(r.out == read_file(figure));
}

TEST_CASE("explain prints the substituted formulas") {
    const CliRun r = run_cli("evaluate --explain --profiles " +
                             fixture("profiles_reference.json"));
    CHECK(r.code == 0);
    CHECK(r.out.find("motivational force: 0.8 * 0.9 * 0.9 = 0.65 (emergence_band)") !=
          std::string::npos);
    CHECK(r.out.find("base: 190000") != std::string::npos);

    const CliRun envelope = run_cli("envelope --explain");
    CHECK(envelope.code == 0);
    CHECK(envelope.out.find("sqrt(minimum * maximum)") != std::string::npos);
}

TEST_CASE("calibrate writes a fitted parameters file and a residual table") {
    const fs::path fitted = scratch_dir() / "fitted.json";
    const CliRun r = run_cli("calibrate --anchors " + fixture("anchors_default.json") +
                             " --out " + fitted.string());
    CHECK(r.code == 0);
    CHECK(r.out.find("within_tol") != std::string::npos);
    CHECK(r.out.find(" no\n") == std::string::npos); // every anchor hit its tolerance

    const salarium::ModelParameters params = salarium::load_parameters(fitted);
    CHECK(params.pub_delta.value == doctest::Approx(1.05).epsilon(1e-3));
    CHECK(params.pub_delta.source == salarium::Provenance::example_implied);
    CHECK(params.base_w0.source == salarium::Provenance::example_implied);
}

TEST_CASE("sensitivity reports ten metric rows for a named profile") {
    const CliRun r = run_cli("sensitivity --profiles " + fixture("profiles_reference.json") +
                             " --profile senior_maximum --format csv");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("metric,gradient_kzt,elasticity\n", 0) == 0);
    int lines = 0;
    for (char c : r.out) {
        if (c == '\n') ++lines;
    }
    CHECK(lines == 11); // header + ten metrics
    CHECK(r.out.find("intl_projects,2706.7") != std::string::npos);
}

TEST_CASE("exit codes follow the documented contract") {
    // 0: success.
    CHECK(run_cli("envelope").code == 0);

    // 2: malformed input file.
    const fs::path broken = write_scratch("broken.json", "{ not json");
    CHECK(run_cli("evaluate --profiles " + broken.string()).code == 2);

    // 2: unknown key counts as a parse failure too.
    const fs::path unknown_key =
        write_scratch("unknown_key.json", R"([{"name": "x", "publictions": 3}])");
    CHECK(run_cli("evaluate --profiles " + unknown_key.string()).code == 2);

    // 2: bad command-line usage.
    CHECK(run_cli("evaluate").code == 2);
    CHECK(run_cli("envelope --mode verbatim").code == 2);

    // 3: structurally valid file with invalid values.
    const fs::path invalid =
        write_scratch("invalid_profile.json", R"([{"name": "x", "publications": -3}])");
    const CliRun r3 = run_cli("evaluate --profiles " + invalid.string());
    CHECK(r3.code == 3);
    CHECK(r3.err.find("publications") != std::string::npos);

    // 3: unknown profile name.
    CHECK(run_cli("sensitivity --profiles " + fixture("profiles_reference.json") +
                  " --profile nobody")
              .code == 3);

    // 4: infeasible calibration.
    const fs::path empty_anchors = write_scratch("empty_anchors.json", "[]\n");
    const fs::path sink = scratch_dir() / "sink.json";
    CHECK(run_cli("calibrate --anchors " + empty_anchors.string() + " --out " + sink.string())
              .code == 4);
}
