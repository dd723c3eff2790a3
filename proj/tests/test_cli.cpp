#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include <json.hpp>

using eigencount::cli::run;
namespace fs = std::filesystem;

namespace {

struct Outcome
{
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "eigencount");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string spec(const char* name) { return std::string(EIGENCOUNT_SOURCE_DIR "/specs/") + name; }

fs::path scratch(const std::string& name)
{
    const auto dir = fs::temp_directory_path() / "eigencount_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

std::string write_file(const std::string& name, const std::string& text)
{
    const auto path = scratch(name);
    std::ofstream(path) << text;
    return path.string();
}

} // namespace

TEST_CASE("input digest")
{
    CHECK(eigencount::cli::input_digest("") == "fnv1a64:cbf29ce484222325");
    CHECK(eigencount::cli::input_digest("a") == "fnv1a64:af63dc4c8601ec8c");
}

TEST_CASE("bound on the shift example")
{
    const auto r = invoke({"bound", spec("shift_example_d50.json"), "--p", "1", "--s", "1.5"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["command"] == "bound");
    CHECK(doc["oracle"]["count_outside"] == 1);
    CHECK(doc["model"]["l0_norm"] == 1.0);
    CHECK(doc["input"]["digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);
    CHECK(!doc.contains("wall_time_s"));
    bool saw_disk = false;
    for (const auto& b : doc["bounds"]) {
        CHECK(b["admissible"] == true);
        CHECK(b["bound"].get<double>() >= 1.0);
        saw_disk = saw_disk || b["kind"] == "disk";
    }
    CHECK(saw_disk);
}

TEST_CASE("bound output is deterministic")
{
    const std::vector<std::string> args{"bound", spec("shift_example_d50.json"), "--p", "1", "--s", "1.5"};
    CHECK(invoke(args).out == invoke(args).out);
    auto timed = args;
    timed.push_back("--timing");
    CHECK(nlohmann::json::parse(invoke(timed).out).contains("wall_time_s"));
}

TEST_CASE("bound exit codes")
{
    const auto low = invoke({"bound", spec("shift_example_d50.json"), "--p", "1", "--s", "0.5"});
    CHECK(low.code == eigencount::cli::exit_admissibility);
    CHECK(low.err.find("s > ||L0||") != std::string::npos);

    const auto bad = write_file("bad_dim.json", R"({"dim": 3, "norm": "l2", "base": {"kind": "diagonal", "values": [[1,0]]}, "perturbation": {"kind": "zero"}})");
    CHECK(invoke({"bound", bad, "--p", "1", "--s", "2"}).code == eigencount::cli::exit_parse);
    CHECK(invoke({"bound", "/nonexistent/spec.json", "--p", "1", "--s", "2"}).code == eigencount::cli::exit_usage);
    CHECK(invoke({"bound", spec("shift_example_d50.json"), "--p", "1", "--s", "2", "--format", "xml"}).code ==
          eigencount::cli::exit_usage);
    CHECK(invoke({"--help"}).code == eigencount::cli::exit_ok);
}

TEST_CASE("point target and csv output")
{
    const auto r = invoke({"bound", spec("shift_example_d50.json"), "--p", "1", "--point", "2,0"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["oracle"]["multiplicity"] == 1);
    CHECK(doc["bounds"][0]["bound"].get<double>() >= 1.0);

    const auto path = scratch("report.csv");
    const auto c = invoke({"bound", spec("shift_example_d50.json"), "--p", "1", "--s", "1.5", "--format", "csv",
                           "--out", path.string()});
    REQUIRE(c.code == 0);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header.find("kind") != std::string::npos);
    CHECK(header.find("bound") != std::string::npos);
}

TEST_CASE("compact model reports the Koenig bound")
{
    const auto r = invoke({"bound", spec("compact_diag.json"), "--p", "1", "--s", "1"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["oracle"]["count_outside"] == 1);
    bool saw = false;
    for (const auto& b : doc["bounds"])
        if (b["kind"] == "koenig") {
            saw = true;
            CHECK(b["bound"].get<double>() == doctest::Approx(16.3215078711798694));
        }
    CHECK(saw);
}

TEST_CASE("oracle command")
{
    const auto curve = invoke({"oracle", spec("diag123.json"), "--curve"});
    REQUIRE(curve.code == 0);
    CHECK(nlohmann::json::parse(curve.out)["curve"]["breakpoints"].size() == 3);

    const auto csv = invoke({"oracle", spec("diag123.json"), "--curve", "--format", "csv"});
    REQUIRE(csv.code == 0);
    CHECK(csv.out.rfind("record,x,value\n", 0) == 0);

    const auto moment = invoke({"oracle", spec("shift_example_d50.json"), "--q", "1.5"});
    CHECK(moment.code == 0);
    CHECK(moment.err.find("q > p + 1") != std::string::npos);
}

TEST_CASE("verify and gamma")
{
    const auto lambert = invoke({"verify", "--suite", "lambert"});
    CHECK(lambert.code == 0);
    CHECK(lambert.out.find("PASS") != std::string::npos);
    CHECK(invoke({"verify", "--suite", "koenig", "--seed", "7"}).code == 0);
    CHECK(invoke({"verify", "--suite", "bogus"}).code == eigencount::cli::exit_usage);

    const auto g1 = invoke({"gamma", "--p", "1"});
    REQUIRE(g1.code == 0);
    CHECK(nlohmann::json::parse(g1.out)["gamma"] == doctest::Approx(1.0));
    CHECK(invoke({"gamma", "--p", "0"}).code == eigencount::cli::exit_admissibility);
}

TEST_CASE("example-shift")
{
    const auto single = invoke({"example-shift", "--family", "single", "--dims", "8,16,32"});
    REQUIRE(single.code == 0);
    std::istringstream rows(single.out);
    std::string line;
    std::getline(rows, line);
    CHECK(line.rfind("dim,S", 0) == 0);
    int count = 0;
    while (std::getline(rows, line)) {
        CHECK(line.find(",1,") != std::string::npos);
        ++count;
    }
    CHECK(count == 3);

    const auto coeffs = write_file("coeffs.json", "[0, 0, 0]");
    CHECK(invoke({"example-shift", "--coeffs", coeffs, "--dims", "8"}).code == 0);
    const auto broken = write_file("broken.json", "[0, ");
    CHECK(invoke({"example-shift", "--coeffs", broken, "--dims", "8"}).code == eigencount::cli::exit_parse);
}
