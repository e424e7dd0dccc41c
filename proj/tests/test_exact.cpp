#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "obvp/errors.hpp"
#include "obvp/examples.hpp"
#include "obvp/exact.hpp"
#include "obvp/model.hpp"

using namespace obvp;
using namespace obvp::exact;
using std::numbers::e;
using std::numbers::pi;

namespace {

model::PieceOde piece(int n, std::vector<double> coeffs, Polynomial forcing) {
    return model::normalize_piece(1, std::move(coeffs), std::move(forcing), {0.0, 1.0}, n);
}

}  // namespace

TEST(ParticularSolution, Examples) {
    EXPECT_EQ(particular_solution(piece(2, {1.0}, Polynomial{-1.0})), Polynomial{1.0});
    EXPECT_EQ(particular_solution(piece(2, {0.0}, Polynomial{0.0, 1.0})), (Polynomial{0.0, 0.0, 0.0, 1.0 / 6}));
    EXPECT_EQ(particular_solution(piece(3, {1.0}, Polynomial{-1.0, 1.0})), (Polynomial{1.0, -1.0}));
}

TEST(ParticularSolution, ResonanceWithFirstDerivative) {
    // u'' = u' - 2: root 0 is simple, so the ansatz is x * const.
    EXPECT_EQ(particular_solution(piece(2, {0.0, 1.0}, Polynomial{-2.0})), (Polynomial{0.0, 2.0}));
}

TEST(ParticularSolution, SatisfiesOperatorGenerally) {
    const auto p = piece(4, {0.0, 0.0, 1.5, -2.0}, Polynomial{1.0, -2.0, 0.5, 0.0, 0.0, 0.0, 3.0});
    const auto up = particular_solution(p);
    for (double x : {-1.0, 0.0, 0.3, 2.0}) {
        double lhs = up.derivative_at(x, 4);
        for (int j = 0; j < 4; ++j) {
            lhs -= p.coeffs[j] * up.derivative_at(x, j);
        }
        EXPECT_NEAR(lhs, p.forcing(x), 1e-9 * (1 + std::abs(p.forcing(x))));
    }
}

TEST(SolveExact, FirstExampleCentre) {
    const auto& bvp = examples::get_example("3.1.1").bvp;
    const auto sol = solve_exact(bvp);
    EXPECT_NEAR(eval_solution(sol, bvp, 0.0, 0), 1 - 4 * std::sqrt(e) / (1 + 3 * e), 1e-12);
    EXPECT_NEAR(eval_solution(sol, bvp, 0.0, 0), 0.2796290125, 1e-10);
    EXPECT_NEAR(eval_solution(sol, bvp, -1.0, 0), 0.0, 1e-15);
    EXPECT_EQ(sol.rank_report.rank, 6u);
    EXPECT_EQ(sol.rank_report.nullity, 0u);
}

TEST(SolveExact, FourthExampleSlope) {
    const auto& bvp = examples::get_example("3.1.4").bvp;
    const auto sol = solve_exact(bvp);
    const double a1 = 4 / (pi + 4 / std::tanh(pi / 4));
    EXPECT_NEAR(sol.pieces[0].constants[1], a1, 1e-12);
    EXPECT_NEAR(a1, 0.4328504429, 1e-10);
    EXPECT_NEAR(eval_solution(sol, bvp, pi, 0), 0.0, 1e-14);
}

TEST(SolveExact, SecondExampleFirstBranch) {
    const auto& bvp = examples::get_example("3.1.2").bvp;
    const auto sol = solve_exact(bvp);
    const double x = 0.125;
    const double slope = -(-2049 + 80 * std::sqrt(e) + 545 * e) / (96 * (-9 + 25 * e));
    EXPECT_NEAR(eval_solution(sol, bvp, x, 0), slope * x + x * x * x / 6, 1e-13);
}

TEST(SolveExact, ZeroProblem) {
    const auto bvp = model::build_second_order({}, {0.0, 0.3, 0.6, 1.0}, {{0.0, 0, 0.0}, {1.0, 0, 0.0}});
    const auto sol = solve_exact(bvp);
    for (const auto& p : sol.pieces) {
        for (double c : p.constants) {
            EXPECT_EQ(c, 0.0);
        }
    }
    EXPECT_EQ(eval_solution(sol, bvp, 0.5, 0), 0.0);
}

TEST(SolveExact, RankDeficiencyNamesFreeColumn) {
    auto bvp = examples::get_example("3.1.6").bvp;
    bvp.pins.clear();
    try {
        solve_exact(bvp);
        FAIL() << "expected RankDeficientError";
    } catch (const RankDeficientError& err) {
        EXPECT_EQ(err.rank(), 8u);
        EXPECT_EQ(err.nullity(), 1u);
        ASSERT_EQ(err.free_columns().size(), 1u);
        EXPECT_FALSE(err.pin_candidates().empty());
        const auto& cand = err.pin_candidates();
        EXPECT_NE(std::find(cand.begin(), cand.end(), ColumnLabel{2, 0}), cand.end());
        EXPECT_NE(std::string(err.what()).find("free columns"), std::string::npos);
    }
}

TEST(SolveExact, PinnedThirdOrder) {
    const auto& bvp = examples::get_example("3.1.6").bvp;
    const auto sol = solve_exact(bvp);
    const std::vector<double> expected{0, 1.00417536, -2.00835072, 12.80826543, 5.50786476, 3.14122701, 1, -3, 2};
    std::size_t i = 0;
    for (const auto& p : sol.pieces) {
        for (double c : p.constants) {
            EXPECT_NEAR(c, expected[i], 1e-7) << "column " << i;
            ++i;
        }
    }
}

TEST(SolveExact, ContradictoryConditionsAreInconsistent) {
    auto bvp = examples::get_example("3.1.1").bvp;
    bvp.conditions.push_back({-1.0, 0, 1.0});
    EXPECT_THROW(solve_exact(bvp), InconsistentSystemError);
}

TEST(SolveExact, RedundantConsistentRowAccepted) {
    auto bvp = examples::get_example("3.1.1").bvp;
    bvp.conditions.push_back({-1.0, 0, 0.0});
    const auto sol = solve_exact(bvp);
    EXPECT_NEAR(sol.pieces[0].constants[1], 2 * (e - 1) / (1 + 3 * e), 1e-12);
}

TEST(SolveExact, InvalidInputRejected) {
    auto bvp = examples::get_example("3.1.1").bvp;
    bvp.pieces[2].interval.lo = 0.6;
    EXPECT_THROW(solve_exact(bvp), InputError);
}

TEST(SolveExact, FourthOrderSinglePiece) {
    // u'''' = 24 with u = x^4 data on [0,1]: solution x^4.
    model::PiecewiseBvp bvp;
    bvp.order = 4;
    bvp.pieces = {model::normalize_piece(1, {0.0}, Polynomial{24.0}, {0.0, 1.0}, 4)};
    bvp.conditions = {{0.0, 0, 0.0}, {0.0, 1, 0.0}, {1.0, 0, 1.0}, {1.0, 1, 4.0}};
    bvp.continuity = model::ContinuitySpec::all_orders(4);
    const auto sol = solve_exact(bvp);
    EXPECT_NEAR(eval_solution(sol, bvp, 0.5, 0), 0.0625, 1e-13);
    EXPECT_NEAR(eval_solution(sol, bvp, 0.5, 3), 12.0, 1e-12);
}

TEST(EvalSolution, OwnershipAndRange) {
    const auto& bvp = examples::get_example("3.1.1").bvp;
    const auto sol = solve_exact(bvp);
    // Derivative order 2 is not continuous at -1/2: the right piece owns it.
    EXPECT_NEAR(eval_solution(sol, bvp, -0.5, 2), eval_piece(sol, 1, -0.5, 2), 0.0);
    EXPECT_NE(eval_piece(sol, 0, -0.5, 2), eval_piece(sol, 1, -0.5, 2));
    EXPECT_THROW(eval_solution(sol, bvp, 1.5, 0), InputError);
    EXPECT_FALSE(describe_constants(sol, bvp).empty());
}
