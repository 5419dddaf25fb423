#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

std::string cli_path() {
    const char* p = std::getenv("UQGL21_CLI");
    REQUIRE_MESSAGE(p != nullptr, "UQGL21_CLI must point at the command-line binary");
    return p;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    fs::path tmp = fs::temp_directory_path() / "uqgl21-cli-out.txt";
    std::string cmd = cli_path() + " " + args + " >" + tmp.string() + " 2>&1";
    int rc = std::system(cmd.c_str());
    std::ifstream in(tmp);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, ss.str()};
}

fs::path workdir() {
    fs::path dir = fs::temp_directory_path() / "uqgl21-test-cli";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("build writes a well-formed representation file") {
    fs::path out = workdir() / "r.json";
    RunResult r = run("build --j1 1/2 --j2 1 --j3 0 --out " + out.string());
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(slurp(out));
    CHECK(j.at("dimension") == 8);
    CHECK(j.at("generators").size() == 12);
    CHECK(j.at("params").at("j1") == "1/2");
    CHECK(j.at("coeffs") == "standard-D");
}

TEST_CASE("repeated builds are byte-identical") {
    fs::path a = workdir() / "a.json", b = workdir() / "b.json";
    CHECK(run("build --j1 1 --j2 -1/2 --j3 1/2 --out " + a.string()).exit_code == 0);
    CHECK(run("build --j1 1 --j2 -1/2 --j3 1/2 --out " + b.string()).exit_code == 0);
    CHECK(slurp(a) == slurp(b));
}

TEST_CASE("classify prints the class and quotient dimension") {
    RunResult r = run("classify --j1 1/2 --j2 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("Nontypical2, invariant = V1⊕V2, quotient dim 5") != std::string::npos);
    CHECK(run("classify --j1 1 --j2 1").out.find("Typical") != std::string::npos);
}

TEST_CASE("quotient writes an importable file and rejects typical points") {
    fs::path out = workdir() / "q.json";
    RunResult r = run("quotient --j1 1/2 --j2 -1 --out " + out.string());
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(slurp(out));
    CHECK(j.at("dimension") == 3);
    CHECK(run("verify --in " + out.string() + " --nmax 2").exit_code == 0);
    CHECK(run("quotient --j1 1 --j2 1 --out " + out.string()).exit_code == 2);
}

TEST_CASE("verify exit codes honor the contract") {
    CHECK(run("verify --j1 0 --j2 1/2 --j3 0 --nmax 4").exit_code == 0);

    fs::path good = workdir() / "v.json";
    REQUIRE(run("build --j1 1/2 --j2 1 --j3 0 --out " + good.string()).exit_code == 0);
    CHECK(run("verify --in " + good.string() + " --nmax 3").exit_code == 0);

    std::string text = slurp(good);
    auto pos = text.find("\"E21\"");
    pos = text.find("\"(z", pos);
    REQUIRE(pos != std::string::npos);
    text.insert(pos + 2, "3*");
    fs::path bad = workdir() / "tampered.json";
    std::ofstream(bad) << text;
    CHECK(run("verify --in " + bad.string() + " --nmax 2").exit_code == 1);

    fs::path trunc = workdir() / "trunc.json";
    std::ofstream(trunc) << slurp(good).substr(0, 40);
    CHECK(run("verify --in " + trunc.string()).exit_code == 2);

    CHECK(run("verify --j1 -1/2").exit_code == 2);
    CHECK(run("verify --j1 banana").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
}

TEST_CASE("factorize and limit") {
    CHECK(run("factorize --j1 1/2 --j2 1").exit_code == 0);
    CHECK(run("limit --j1 1/2 --j2 1 --q 1").exit_code == 0);
    CHECK(run("limit --j1 1/2 --j2 1 --q 9/4").exit_code == 0);
    CHECK(run("limit --j1 1/2 --j2 1 --q 3").exit_code == 2);   // not a rational square
    CHECK(run("limit --j1 1/2 --j2 1 --z 2/3").exit_code == 0);
}

TEST_CASE("custom coefficient family from a file") {
    fs::path cf = workdir() / "fam.cf";
    std::ofstream(cf) << "F1 = 1\nF2 = 1\nF3 = 1\nF4 = 1\n";
    CHECK(run("verify --j1 1/2 --j2 1 --nmax 3 --coeffs " + cf.string()).exit_code == 0);
    fs::path out = workdir() / "c.json";
    CHECK(run("build --j1 1/2 --j2 1 --coeffs " + cf.string() + " --out " + out.string())
              .exit_code == 0);
    auto j = nlohmann::json::parse(slurp(out));
    CHECK(j.at("coeffs").is_object());
    // The factorization identity is tied to the standard family.
    CHECK(run("factorize --j1 1/2 --j2 1 --coeffs " + cf.string()).exit_code == 2);
}

TEST_CASE("csv export writes one file per generator") {
    fs::path stem = workdir() / "m.csv";
    RunResult r = run("build --j1 1/2 --j2 1 --format csv --out " + stem.string());
    CHECK(r.exit_code == 0);
    CHECK(fs::exists(workdir() / "m.H1.csv"));
    CHECK(fs::exists(workdir() / "m.E31.csv"));
}
