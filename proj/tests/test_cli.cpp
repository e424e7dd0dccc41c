#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "obvp/cli.hpp"
#include "obvp/errors.hpp"
#include "obvp/examples.hpp"
#include "obvp/exact.hpp"
#include "obvp/problem_file.hpp"

using namespace obvp;
using namespace obvp::cli;
namespace fs = std::filesystem;

namespace {

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("obvp_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(path(name)) << text;
        return path(name);
    }

    std::string exported(const std::string& id, bool drop_pins = false) const {
        const std::string p = path(id + (drop_pins ? "_nopin" : "") + ".json");
        std::ostringstream out;
        std::ostringstream err;
        EXPECT_EQ(cmd_export(id, p, drop_pins, out, err), kExitOk);
        return p;
    }

    fs::path dir_;
};

std::vector<std::string> lines(const std::string& file) {
    std::ifstream in(file);
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

}  // namespace

TEST_F(CliTest, RoundTripIsBitwise) {
    for (const auto& s : examples::list_examples()) {
        const auto& bvp = examples::get_example(s.id).bvp;
        const auto parsed = parse_problem_text(export_problem(bvp));
        EXPECT_EQ(parsed, bvp) << s.id;
        if (s.id == "eq11") {
            continue;
        }
        const auto a = exact::solve_exact(bvp);
        const auto b = exact::solve_exact(parsed);
        for (std::size_t k = 0; k < a.pieces.size(); ++k) {
            EXPECT_EQ(a.pieces[k].constants, b.pieces[k].constants) << s.id;
        }
    }
}

TEST_F(CliTest, SolveFirstExample) {
    const auto in = exported("3.1.1");
    const auto csv = path("out.csv");
    std::ostringstream out;
    std::ostringstream err;
    ASSERT_EQ(cmd_solve(in, csv, 57, out, err), kExitOk) << err.str();
    EXPECT_NE(out.str().find("3 pieces"), std::string::npos);
    std::size_t constants = 0;
    for (std::size_t pos = 0; (pos = out.str().find("c[", pos)) != std::string::npos; ++pos) {
        ++constants;
    }
    EXPECT_EQ(constants, 6u);

    const auto rows = lines(csv);
    ASSERT_EQ(rows.size(), 58u);
    EXPECT_EQ(rows[0], "x,piece,u,du1");
    double prev_x = -1e300;
    int prev_piece = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        std::istringstream row(rows[i]);
        std::string cell;
        std::getline(row, cell, ',');
        const double x = std::stod(cell);
        std::getline(row, cell, ',');
        const int piece = std::stoi(cell);
        EXPECT_GT(x, prev_x);
        EXPECT_GE(piece, prev_piece);
        prev_x = x;
        prev_piece = piece;
    }
    EXPECT_EQ(prev_x, 1.0);
}

TEST_F(CliTest, SolveWithoutPinsReportsFreeColumns) {
    const auto in = exported("3.1.6", true);
    std::ostringstream out;
    std::ostringstream err;
    EXPECT_EQ(cmd_solve(in, path("out.csv"), 11, out, err), kExitRank);
    EXPECT_NE(err.str().find("free columns"), std::string::npos);
    EXPECT_NE(err.str().find("pinning"), std::string::npos);
}

TEST_F(CliTest, MalformedInputs) {
    std::ostringstream out;
    std::ostringstream err;
    EXPECT_EQ(cmd_solve(write("bad.json", "{ order: 2 "), path("o.csv"), 11, out, err), kExitInput);
    EXPECT_EQ(cmd_solve(write("unk.json", R"({"order":2,"pieces":[],"extra":1})"), path("o.csv"), 11, out, err),
              kExitInput);
    EXPECT_EQ(cmd_solve(path("missing.json"), path("o.csv"), 11, out, err), kExitInput);
    EXPECT_EQ(cmd_solve(exported("3.1.1"), path("o.csv"), 1, out, err), kExitInput);
    EXPECT_THROW(parse_problem_text(R"({"order":2,"pieces":[{"interval":[0,1],"coeffs":["a"]}]})"), InputError);
    EXPECT_THROW(parse_problem_text(R"({"order":7,"pieces":[]})"), InputError);
}

TEST_F(CliTest, SignIsFolded) {
    const auto bvp = parse_problem_text(R"({
        "order": 2,
        "pieces": [{"interval": [0, 1], "sign": -1, "coeffs": [1], "forcing": [1]}],
        "conditions": [{"x": 0, "deriv": 0, "value": 0}, {"x": 1, "deriv": 0, "value": 0}],
        "continuity": [0, 1]
    })");
    EXPECT_EQ(bvp.pieces[0].coeffs[0], -1.0);
    EXPECT_EQ(bvp.pieces[0].forcing, Polynomial{-1.0});
}

TEST_F(CliTest, Reproduce) {
    std::ostringstream out;
    std::ostringstream err;
    EXPECT_EQ(cmd_reproduce("3.1.4", false, out, err), kExitOk) << err.str();
    EXPECT_NE(out.str().find("a1"), std::string::npos);
    EXPECT_NE(out.str().find("0.43285044"), std::string::npos);

    std::ostringstream out5;
    EXPECT_EQ(cmd_reproduce("3.1.5", true, out5, err), kExitOk);
    EXPECT_NE(out5.str().find("inconsistency flag"), std::string::npos);
    EXPECT_NE(out5.str().find("oracle comparison skipped"), std::string::npos);

    std::ostringstream out6;
    EXPECT_EQ(cmd_reproduce("3.1.6", true, out6, err), kExitOk);
    EXPECT_NE(out6.str().find("alternate reading"), std::string::npos);

    std::ostringstream unknown;
    EXPECT_EQ(cmd_reproduce("nope", false, unknown, err), kExitInput);
}

TEST_F(CliTest, ReproduceAll) {
    std::ostringstream out;
    std::ostringstream err;
    EXPECT_EQ(cmd_reproduce("all", true, out, err), kExitOk) << err.str();
    EXPECT_NE(out.str().find("-> eq11"), std::string::npos);
}

TEST_F(CliTest, Verify) {
    std::ostringstream out;
    std::ostringstream err;
    EXPECT_EQ(cmd_verify(exported("3.1.1"), 1e-3, false, out, err), kExitOk) << err.str();
    EXPECT_NE(out.str().find("PASS"), std::string::npos);

    std::ostringstream jout;
    EXPECT_EQ(cmd_verify(exported("3.1.2"), 1e-3, true, jout, err), kExitOk);
    const auto j = nlohmann::json::parse(jout.str());
    EXPECT_LE(j.at("oracle_delta").get<double>(), 1e-6);

    auto bvp = examples::get_example("3.1.1").bvp;
    bvp.conditions.push_back({-1.0, 0, 1.0});
    const auto contradictory = path("contra.json");
    save_problem(contradictory, bvp);
    std::ostringstream cerr_;
    EXPECT_EQ(cmd_verify(contradictory, 1e-3, false, out, cerr_), kExitRank);
    EXPECT_NE(cerr_.str().find("inconsistent"), std::string::npos);
}

TEST_F(CliTest, VerifyFailureExitCode) {
    // Coarse steps put the oracle outside its 1e-6 tolerance.
    std::ostringstream out;
    std::ostringstream err;
    EXPECT_EQ(cmd_verify(exported("3.1.4"), 0.5, false, out, err), kExitVerify);
}

TEST_F(CliTest, ListAndBinary) {
    std::ostringstream out;
    EXPECT_EQ(cmd_list(out), kExitOk);
    EXPECT_NE(out.str().find("eq11"), std::string::npos);
    const std::string bin = OBVP_CLI_PATH;
    EXPECT_EQ(std::system((bin + " list > " + path("list.txt")).c_str()), 0);
    EXPECT_NE(std::system((bin + " reproduce > " + path("x.txt") + " 2>&1").c_str()), 0);
    const int status = std::system((bin + " bogus > " + path("x.txt") + " 2>&1").c_str());
    EXPECT_EQ(WEXITSTATUS(status), 1);
}
