#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "toric/io.hpp"

using namespace toric;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
    const fs::path d = fs::temp_directory_path() / "toric_io_test";
    fs::create_directories(d);
    return d;
}

fs::path write_text(const std::string& name, const std::string& text) {
    const fs::path p = scratch_dir() / name;
    std::ofstream(p) << text;
    return p;
}

int run(const std::string& args, const fs::path& out = {}) {
    std::string cmd = std::string(TORIC_CLI) + " " + args;
    cmd += out.empty() ? " > /dev/null 2>&1" : " > " + out.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("matrix roundtrip") {
    std::mt19937 rng(4);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = rng() % 5;
        const std::size_t cols = 1 + rng() % 6;
        std::vector<IntVec> r;
        for (std::size_t i = 0; i < rows; ++i) r.push_back(oracle::random_vec(rng, cols, -1000, 1000));
        const IntMat m = IntMat::from_rows(r, cols);
        CHECK(parse_matrix_text(format_matrix(m)) == m);
    }
    const IntMat big = IntMat::from_rows({{INT64_MAX, INT64_MIN}});
    CHECK(parse_matrix_text(format_matrix(big)) == big);
}

TEST_CASE("parse accepts free whitespace and blank leading lines") {
    CHECK(parse_matrix_text("\n\n1 4\n1\t5\n 20   24\n") == IntMat::from_rows({{1, 5, 20, 24}}));
    CHECK(parse_matrix_text("0 3\n").rows() == 0);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_matrix_text(""), ParseError);
    CHECK_THROWS_AS(parse_matrix_text("1\n1"), ParseError);
    CHECK_THROWS_AS(parse_matrix_text("1 2 3\n1 2"), ParseError);
    CHECK_THROWS_AS(parse_matrix_text("1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix_text("-1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix_text("1 2\n1"), ParseError);
    CHECK_THROWS_AS(parse_matrix_text("1 2\n1 2 3"), ParseError);
    CHECK_THROWS_AS(parse_matrix_text("1 2\n1 x"), ParseError);
    CHECK_THROWS_AS(parse_matrix_text("1 2\n1 2.5"), ParseError);
    CHECK_THROWS_AS(parse_matrix_text("1 1\n99999999999999999999"), OverflowError);
}

TEST_CASE("moves matrix") {
    CHECK(moves_matrix({}, 4).rows() == 0);
    CHECK(format_matrix(moves_matrix({}, 4)) == "0 4\n");
    const std::vector<Move> mv{IntVec{1, -1}, IntVec{2, 0}};
    CHECK(matrix_moves(moves_matrix(mv, 2)) == mv);
    CHECK_THROWS_AS(moves_matrix(mv, 3), DimensionError);
}

TEST_CASE("configuration from matrix") {
    CHECK(configuration_from_matrix(IntMat::from_rows({{3, 4, 5}})).kind() == ConfigKind::curve);
    const Configuration g = configuration_from_matrix(IntMat::from_rows({{1, 1, 1}, {0, 1, 2}}));
    CHECK(g.kind() == ConfigKind::general);
    CHECK_THROWS_AS(configuration_from_matrix(IntMat::from_rows({{1, -1}, {0, 1}})),
                    InvalidConfiguration);
}

TEST_CASE("verdict layout") {
    const auto j = verdict("x", {{"n", 3}}, true, nlohmann::json::object(), 0.5);
    CHECK(j["schema"] == kReportSchemaVersion);
    CHECK(j["claim"] == "x");
    CHECK(j["pass"] == true);
    CHECK(j.contains("certificate"));
    CHECK(j["seconds"] == 0.5);
}

TEST_CASE("environment budget") {
    setenv("TORIC_MAX_FIBER", "17", 1);
    CHECK(budget_from_environment().max_fiber == 17);
    setenv("TORIC_MAX_FIBER", "-3", 1);
    CHECK_THROWS_AS(budget_from_environment(), ParseError);
    unsetenv("TORIC_MAX_FIBER");
    CHECK(budget_from_environment().max_fiber == kDefaultFiberCap);
}

TEST_CASE("cli exit codes and outputs") {
    const fs::path a5 = write_text("a5.mat", "1 4\n1 5 20 24\n");
    const fs::path c345 = write_text("c345.mat", "1 3\n3 4 5\n");
    const fs::path zero = write_text("zero.mat", "1 2\n0 1\n");
    const fs::path out = scratch_dir() / "out.txt";

    CHECK(run("markov " + a5.string(), out) == 0);
    CHECK(parse_matrix_text(slurp(out)).rows() == 3);
    CHECK(run("graver " + c345.string(), out) == 0);
    CHECK(parse_matrix_text(slurp(out)).rows() == 7);
    CHECK(run("fiber " + c345.string() + " --deg 12", out) == 0);
    CHECK(parse_matrix_text(slurp(out)) ==
          IntMat::from_rows({{0, 3, 0}, {1, 1, 1}, {4, 0, 0}}));
    CHECK(run("indispensable " + c345.string(), out) == 0);
    CHECK(parse_matrix_text(slurp(out)).rows() == 3);
    CHECK(run("lift " + a5.string() + " --r 2", out) == 0);
    CHECK(parse_matrix_text(slurp(out)).rows() == 6);

    CHECK(run("verify --claim lemma1 --n 5", out) == 0);
    const auto j = nlohmann::json::parse(slurp(out));
    CHECK(j["pass"] == true);
    CHECK(j["claim"] == "lemma1");
    CHECK(run("verify --claim remark6") == 1);
    CHECK(run("complexity " + a5.string() + " --rmax 2", out) == 0);
    CHECK(nlohmann::json::parse(slurp(out))["rows"][0]["size"] == 46);

    CHECK(run("markov " + zero.string()) == 2);
    CHECK(run("markov " + (scratch_dir() / "missing.mat").string()) == 2);
    CHECK(run("verify --claim nonsense") == 2);
    CHECK(run("") == 2);
    CHECK(run("--max-fiber 2 fiber " + c345.string() + " --deg 12") == 2);
    CHECK(run("--max-completion 10 complexity " + a5.string() + " --rmax 3") == 2);
}
