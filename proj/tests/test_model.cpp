#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "obvp/errors.hpp"
#include "obvp/examples.hpp"
#include "obvp/model.hpp"
#include "obvp/polynomial.hpp"

using namespace obvp;
using namespace obvp::model;

TEST(Polynomial, TrimsAndEvaluates) {
    const Polynomial p{1.0, 2.0, 0.0, 0.0};
    EXPECT_EQ(p.degree(), 1);
    EXPECT_DOUBLE_EQ(p(3.0), 7.0);
    EXPECT_EQ(Polynomial{}.degree(), -1);
    EXPECT_DOUBLE_EQ(Polynomial::monomial(3)(2.0), 8.0);
}

TEST(Polynomial, Derivatives) {
    const Polynomial p{0.0, 0.0, 0.0, 1.0 / 6};
    EXPECT_DOUBLE_EQ(p.derivative_at(2.0, 1), 2.0);
    EXPECT_DOUBLE_EQ(p.derivative_at(2.0, 3), 1.0);
    EXPECT_DOUBLE_EQ(p.derivative_at(2.0, 4), 0.0);
    EXPECT_EQ(p.derivative(3), Polynomial{1.0});
}

TEST(NormalizePiece, PlusSignKeepsEquation) {
    const auto p = normalize_piece(1, {1.0}, Polynomial{-1.0}, {0.25, 0.75}, 2);
    EXPECT_EQ(p.order, 2);
    ASSERT_EQ(p.coeffs.size(), 2u);
    EXPECT_EQ(p.coeffs[0], 1.0);
    EXPECT_EQ(p.coeffs[1], 0.0);
    EXPECT_EQ(p.forcing, Polynomial{-1.0});
}

TEST(NormalizePiece, MinusSignNegates) {
    const auto p = normalize_piece(-1, {1.0}, Polynomial{1.0}, {0.0, std::numbers::pi / 4}, 2);
    EXPECT_EQ(p.coeffs[0], -1.0);
    EXPECT_EQ(p.forcing, Polynomial{-1.0});
}

TEST(NormalizePiece, ZeroCase) {
    const auto p = normalize_piece(1, {0.0}, Polynomial{}, {0.0, 1.0}, 2);
    EXPECT_EQ(p.coeffs, (std::vector<double>{0.0, 0.0}));
    EXPECT_EQ(p.forcing.degree(), -1);
}

TEST(NormalizePiece, SignFlipEquivalence) {
    const auto a = normalize_piece(-1, {2.0, -3.0, 0.5}, Polynomial{1.0, 4.0}, {0.0, 1.0}, 3);
    const auto b = normalize_piece(1, {-2.0, 3.0, -0.5}, Polynomial{-1.0, -4.0}, {0.0, 1.0}, 3);
    EXPECT_EQ(a, b);
}

TEST(NormalizePiece, Rejections) {
    EXPECT_THROW(normalize_piece(1, {0.0}, Polynomial{}, {0.0, 1.0}, 5), InputError);
    EXPECT_THROW(normalize_piece(1, {0.0}, Polynomial{}, {1.0, 1.0}, 2), InputError);
    EXPECT_THROW(normalize_piece(2, {0.0}, Polynomial{}, {0.0, 1.0}, 2), InputError);
    EXPECT_THROW(normalize_piece(1, {0, 0, 0}, Polynomial{}, {0.0, 1.0}, 2), InputError);
}

TEST(ValidateBvp, ForcingDegreeLimit) {
    auto bvp = examples::get_example("3.1.1").bvp;
    bvp.pieces[0].forcing = Polynomial::monomial(7);
    EXPECT_FALSE(validate_bvp(bvp).ok());
    bvp.pieces[0].forcing = Polynomial::monomial(6);
    EXPECT_TRUE(validate_bvp(bvp).ok());
}

TEST(ValidateBvp, FirstExampleIsSquare) {
    const auto r = validate_bvp(examples::get_example("3.1.1").bvp);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.unknowns, 6u);
    EXPECT_EQ(r.equations, 6u);
    EXPECT_EQ(r.determinacy, Determinacy::Square);
}

TEST(ValidateBvp, ThirdOrderWithoutPinIsUnderdetermined) {
    auto bvp = examples::get_example("3.1.6").bvp;
    bvp.pins.clear();
    const auto r = validate_bvp(bvp);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.unknowns, 9u);
    EXPECT_EQ(r.equations, 8u);
    EXPECT_EQ(r.determinacy, Determinacy::Underdetermined);
}

TEST(ValidateBvp, StringProblemIsOverdetermined) {
    const auto r = validate_bvp(examples::get_example("eq11").bvp);
    EXPECT_EQ(r.unknowns, 6u);
    EXPECT_EQ(r.equations, 7u);
    EXPECT_EQ(r.determinacy, Determinacy::Overdetermined);
}

TEST(ValidateBvp, EquationCountFormula) {
    for (const auto& s : examples::list_examples()) {
        const auto& bvp = examples::get_example(s.id).bvp;
        const auto r = validate_bvp(bvp);
        EXPECT_TRUE(r.ok()) << s.id << ": " << r.summary();
        EXPECT_EQ(r.unknowns, bvp.order * bvp.pieces.size());
        EXPECT_EQ(r.equations,
                  bvp.conditions.size() + bvp.continuity.enforced_orders.size() * (bvp.pieces.size() - 1));
    }
}

TEST(ValidateBvp, ReportsGapAndBadCondition) {
    auto bvp = examples::get_example("3.1.1").bvp;
    bvp.pieces[1].interval.lo = -0.4;
    bvp.conditions.push_back({5.0, 0, 0.0});
    bvp.conditions.push_back({0.0, 2, 0.0});
    const auto r = validate_bvp(bvp);
    EXPECT_GE(r.issues.size(), 3u);
    EXPECT_THROW(require_valid(bvp), InputError);
}

TEST(ValidateBvp, RejectsBadContinuityAndPins) {
    auto bvp = examples::get_example("3.1.1").bvp;
    bvp.continuity.enforced_orders = {};
    EXPECT_FALSE(validate_bvp(bvp).ok());
    bvp.continuity.enforced_orders = {0, 2};
    EXPECT_FALSE(validate_bvp(bvp).ok());
    bvp.continuity.enforced_orders = {0, 1};
    bvp.pins = {{3, 0, 1.0}};
    EXPECT_FALSE(validate_bvp(bvp).ok());
}

TEST(Builders, SecondOrderShape) {
    const auto bvp = build_second_order({Polynomial{0.0, 1.0}, {}, 1.0, -1.0, 1}, {0.0, 0.25, 0.75, 1.0},
                                        {{0.0, 0, 0.0}, {1.0, 0, 0.0}});
    ASSERT_EQ(bvp.pieces.size(), 3u);
    EXPECT_EQ(bvp.pieces[0].forcing, (Polynomial{0.0, 1.0}));
    EXPECT_EQ(bvp.pieces[1].coeffs, (std::vector<double>{1.0, 0.0}));
    EXPECT_EQ(bvp.pieces[1].forcing, (Polynomial{-1.0, 1.0}));
    EXPECT_EQ(bvp.pieces[2].coeffs, (std::vector<double>{0.0, 0.0}));
    EXPECT_EQ(bvp.continuity, ContinuitySpec::all_orders(2));
    EXPECT_EQ(bvp.breakpoints(), (std::vector<double>{0.0, 0.25, 0.75, 1.0}));
}

TEST(Builders, CouplingFoldedIntoCoeffs) {
    const auto& bvp = examples::get_example("3.1.3").bvp;
    EXPECT_EQ(bvp.pieces[0].coeffs, (std::vector<double>{0.0, 1.0}));
    EXPECT_EQ(bvp.pieces[0].forcing, Polynomial{-2.0});
    EXPECT_EQ(bvp.pieces[1].coeffs, (std::vector<double>{1.0, 1.0}));
    EXPECT_EQ(bvp.pieces[1].forcing, Polynomial{-3.0});
}

TEST(Builders, ZeroProblem) {
    const auto bvp = build_second_order({}, {0.0, 0.3, 0.6, 1.0}, {{0.0, 0, 0.0}, {1.0, 0, 0.0}});
    for (const auto& p : bvp.pieces) {
        EXPECT_EQ(p.coeffs, (std::vector<double>{0.0, 0.0}));
        EXPECT_EQ(p.forcing.degree(), -1);
    }
}

TEST(Builders, HigherOrdersAndOrdering) {
    const auto third = build_third_order({Polynomial{1.0}, {}, 2.0, 0.5, 1}, {0.0, 1.0, 2.0, 3.0}, {});
    EXPECT_EQ(third.order, 3);
    EXPECT_EQ(third.pieces[1].coeffs, (std::vector<double>{2.0, 0.0, 0.0}));
    const auto fourth = build_fourth_order({Polynomial{}, {}, 1.0, 0.0, 1}, {0.0, 1.0, 2.0, 3.0}, {});
    EXPECT_EQ(fourth.order, 4);
    EXPECT_EQ(fourth.continuity, ContinuitySpec::all_orders(4));
    EXPECT_THROW(build_second_order({}, {0.0, 0.5, 0.4, 1.0}, {}), InputError);
}

TEST(Ownership, ConditionAndEvaluationPieces) {
    auto bvp = examples::get_example("3.1.6").bvp;
    EXPECT_EQ(condition_piece(bvp, 0.25), 0u);
    EXPECT_EQ(evaluation_piece(bvp, 0.25), 1u);
    EXPECT_EQ(evaluation_piece(bvp, 1.0), 2u);
    EXPECT_EQ(evaluation_piece(bvp, 0.0), 0u);
    bvp.condition_side = ConditionSide::Right;
    EXPECT_EQ(condition_piece(bvp, 0.25), 1u);
    EXPECT_THROW(evaluation_piece(bvp, 1.5), InputError);
}
