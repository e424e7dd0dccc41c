#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "obvp/exact.hpp"
#include "obvp/model.hpp"
#include "obvp/oracle.hpp"

namespace obvp::verify {

struct TolerancePolicy {
    double residual = 1e-8;
    double jump = 1e-9;
    double condition = 1e-9;
    double oracle = 1e-6;
};

struct JumpEntry {
    std::size_t breakpoint = 0;  // index of the right piece
    double x = 0.0;
    int order = 0;
    double left = 0.0;
    double right = 0.0;
    double jump = 0.0;
    bool enforced = false;  // unenforced orders are informational only
};

struct ConditionCheck {
    model::PointCondition condition;
    std::size_t piece = 0;
    double actual = 0.0;
    double violation = 0.0;
};

struct VerificationReport {
    std::vector<double> residuals;  // per piece
    std::vector<JumpEntry> jumps;
    std::vector<ConditionCheck> conditions;
    std::optional<double> oracle_delta;
    TolerancePolicy tolerances;
    bool pass = false;
};

/// Max |u^(n) - sum_j a_j u^(j) - q| over `samples_per_piece` interior
/// uniform points of each piece. Throws InputError if samples_per_piece < 2.
std::vector<double> residual_report(const exact::PiecewiseSolution& sol,
                                    const model::PiecewiseBvp& bvp, std::size_t samples_per_piece);

/// Both one-sided values of every order 0..n-1 at every interior breakpoint.
std::vector<JumpEntry> continuity_report(const exact::PiecewiseSolution& sol,
                                         const model::PiecewiseBvp& bvp);

/// Each point condition evaluated on the piece that owns it in the matching system.
std::vector<ConditionCheck> condition_report(const exact::PiecewiseSolution& sol,
                                             const model::PiecewiseBvp& bvp);

/// Max |exact - numeric| of u over `grid_points` uniform points of [a, b].
/// Throws InputError when the two solutions cover different domains.
double compare_solutions(const exact::PiecewiseSolution& exact_sol, const model::PiecewiseBvp& bvp,
                         const oracle::NumericSolution& numeric, std::size_t grid_points);

/// Same measure between two numeric solutions of one problem.
double compare_solutions(const oracle::NumericSolution& lhs, const oracle::NumericSolution& rhs,
                         std::size_t grid_points);

/// True iff every figure is within its tolerance (unenforced jumps ignored).
bool passes(const VerificationReport& report, const TolerancePolicy& tolerances);

struct VerifyOptions {
    TolerancePolicy tolerances;
    std::size_t samples_per_piece = 1000;
    std::size_t grid_points = 2001;
};

VerificationReport build_report(const exact::PiecewiseSolution& sol, const model::PiecewiseBvp& bvp,
                                const oracle::NumericSolution* numeric,
                                const VerifyOptions& options = {});

nlohmann::json to_json(const VerificationReport& report);
std::string to_table(const VerificationReport& report);

}  // namespace obvp::verify
