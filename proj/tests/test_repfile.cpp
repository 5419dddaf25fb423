#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "uqgl21/errors.hpp"
#include "uqgl21/repbuilder.hpp"
#include "uqgl21/structure.hpp"
#include "uqgl21/repfile.hpp"

using namespace uqgl21;

namespace {
RealizationParams params(long t1, long t2, long t3) {
    RealizationParams p;
    p.j1 = HalfInt(t1);
    p.j2 = HalfInt(t2);
    p.j3 = HalfInt(t3);
    return p;
}
}  // namespace

TEST_CASE("round-trip is exact and deterministic") {
    Representation rep = build_rep(params(1, 2, 0));
    std::string a = export_rep_json(rep);
    std::string b = export_rep_json(rep);
    CHECK(a == b);

    Representation back = import_rep_json(a);
    CHECK(back.dim() == rep.dim());
    CHECK(back.params.j1 == rep.params.j1);
    CHECK(back.params.j2 == rep.params.j2);
    for (Gen g : kAllGens) CHECK(back.matrix(g) == rep.matrix(g));
    CHECK(export_rep_json(back) == a);
}

TEST_CASE("round-trip with an embedded custom family") {
    RealizationParams p = params(2, 0, 1);
    p.coeffs = CoeffFamily::uniform("qpow(N)");
    Representation rep = build_rep(p);
    std::string text = export_rep_json(rep);
    Representation back = import_rep_json(text);
    CHECK(!back.params.coeffs.is_standard);
    for (Gen g : kAllGens) CHECK(back.matrix(g) == rep.matrix(g));
    CHECK(export_rep_json(back) == text);
}

TEST_CASE("quotient representations round-trip through the file format") {
    RealizationParams p = params(1, 0, 0);
    Representation rep = build_rep(p);
    Subspace sub = invariant_closure(rep, tower_seeds(rep, 1));
    Representation quot = quotient_rep(rep, sub);
    std::string text = export_rep_json(quot);
    Representation back = import_rep_json(text);
    CHECK(back.dim() == 5);
    for (Gen g : kAllGens) CHECK(back.matrix(g) == quot.matrix(g));
    CHECK(export_rep_json(back) == text);
}

TEST_CASE("malformed inputs raise ParseError with context") {
    Representation rep = build_rep(params(1, 1, 0));
    std::string good = export_rep_json(rep);

    CHECK_THROWS_AS((void)import_rep_json(good.substr(0, good.size() / 2)), ParseError);
    CHECK_THROWS_AS((void)import_rep_json("{}"), ParseError);
    CHECK_THROWS_AS((void)import_rep_json("not json"), ParseError);

    std::string wrong_version = good;
    auto pos = wrong_version.find("\"version\": 1");
    REQUIRE(pos != std::string::npos);
    wrong_version.replace(pos, 12, "\"version\": 2");
    CHECK_THROWS_AS((void)import_rep_json(wrong_version), SchemaVersionMismatch);

    std::string bad_dim = good;
    pos = bad_dim.find("\"dimension\": 8");
    REQUIRE(pos != std::string::npos);
    bad_dim.replace(pos, 14, "\"dimension\": 9");
    CHECK_THROWS_AS((void)import_rep_json(bad_dim), ParseError);
}

TEST_CASE("file round-trip through the filesystem") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "uqgl21-test-repfile";
    fs::create_directories(dir);
    Representation rep = build_rep(params(1, 0, 0));
    fs::path file = dir / "rep.json";
    export_rep(rep, file.string());
    Representation back = import_rep(file.string());
    for (Gen g : kAllGens) CHECK(back.matrix(g) == rep.matrix(g));
    CHECK_THROWS_AS((void)import_rep((dir / "missing.json").string()), Error);
}

TEST_CASE("CSV export: one file per generator, diagonal integers for H1") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "uqgl21-test-csv";
    fs::create_directories(dir);
    Representation rep = build_rep(params(1, 2, 0));
    auto files = export_rep_csv(rep, (dir / "rep.csv").string());
    CHECK(files.size() == 12);

    std::ifstream h1(dir / "rep.H1.csv");
    REQUIRE(h1.good());
    std::string line;
    std::getline(h1, line);
    CHECK(line == "row,col,value");
    int rows = 0;
    while (std::getline(h1, line)) {
        ++rows;
        auto c1 = line.find(','), c2 = line.find(',', c1 + 1);
        CHECK(line.substr(0, c1) == line.substr(c1 + 1, c2 - c1 - 1));  // diagonal
        CHECK(QScalar::parse(line.substr(c2 + 1)).is_integer());
    }
    CHECK(rows == 6);  // two of the eight H1 eigenvalues vanish
}
