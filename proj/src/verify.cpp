#include "obvp/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace obvp::verify {

std::vector<double> residual_report(const exact::PiecewiseSolution& sol,
                                    const model::PiecewiseBvp& bvp, std::size_t samples_per_piece) {
    if (samples_per_piece < 2) {
        throw InputError("residual_report needs at least 2 samples per piece");
    }
    const int n = bvp.order;
    std::vector<double> out;
    for (std::size_t k = 0; k < bvp.pieces.size(); ++k) {
        const auto& piece = bvp.pieces[k];
        const double lo = piece.interval.lo;
        const double w = piece.interval.width();
        double worst = 0.0;
        for (std::size_t i = 1; i <= samples_per_piece; ++i) {
            // t depends only on the ratio, so nested sample sets share points exactly.
            const double t = static_cast<double>(i) / static_cast<double>(samples_per_piece + 1);
            const double x = lo + t * w;
            double r = exact::eval_piece(sol, k, x, n) - piece.forcing(x);
            for (int j = 0; j < n; ++j) {
                r -= piece.coeffs[static_cast<std::size_t>(j)] * exact::eval_piece(sol, k, x, j);
            }
            worst = std::max(worst, std::abs(r));
        }
        out.push_back(worst);
    }
    return out;
}

std::vector<JumpEntry> continuity_report(const exact::PiecewiseSolution& sol,
                                         const model::PiecewiseBvp& bvp) {
    std::vector<JumpEntry> out;
    for (std::size_t k = 1; k < bvp.pieces.size(); ++k) {
        const double x = bvp.pieces[k].interval.lo;
        for (int j = 0; j < bvp.order; ++j) {
            JumpEntry e;
            e.breakpoint = k;
            e.x = x;
            e.order = j;
            e.left = exact::eval_piece(sol, k - 1, x, j);
            e.right = exact::eval_piece(sol, k, x, j);
            e.jump = std::abs(e.left - e.right);
            e.enforced = bvp.continuity.enforces(j);
            out.push_back(e);
        }
    }
    return out;
}

std::vector<ConditionCheck> condition_report(const exact::PiecewiseSolution& sol,
                                             const model::PiecewiseBvp& bvp) {
    std::vector<ConditionCheck> out;
    for (const auto& c : bvp.conditions) {
        ConditionCheck check;
        check.condition = c;
        check.piece = model::condition_piece(bvp, c.location);
        check.actual = exact::eval_piece(sol, check.piece, c.location, c.deriv_order);
        check.violation = std::abs(check.actual - c.value);
        out.push_back(check);
    }
    return out;
}

namespace {

template <typename F, typename G>
double max_difference(F&& f, G&& g, double a, double b, std::size_t points) {
    if (points < 2) {
        throw InputError("comparison needs at least 2 grid points");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < points; ++i) {
        const double x = i + 1 == points
                             ? b
                             : a + (b - a) * (static_cast<double>(i) / static_cast<double>(points - 1));
        worst = std::max(worst, std::abs(f(x) - g(x)));
    }
    return worst;
}

}  // namespace

double compare_solutions(const exact::PiecewiseSolution& exact_sol, const model::PiecewiseBvp& bvp,
                         const oracle::NumericSolution& numeric, std::size_t grid_points) {
    if (numeric.grid.empty() || numeric.lower() != bvp.lower() || numeric.upper() != bvp.upper() ||
        numeric.order != bvp.order) {
        throw InputError("compare_solutions: numeric solution does not match the problem domain");
    }
    return max_difference([&](double x) { return exact::eval_solution(exact_sol, bvp, x, 0); },
                          [&](double x) { return oracle::sample(numeric, x, 0); }, bvp.lower(),
                          bvp.upper(), grid_points);
}

double compare_solutions(const oracle::NumericSolution& lhs, const oracle::NumericSolution& rhs,
                         std::size_t grid_points) {
    if (lhs.grid.empty() || rhs.grid.empty() || lhs.lower() != rhs.lower() ||
        lhs.upper() != rhs.upper()) {
        throw InputError("compare_solutions: numeric solutions cover different domains");
    }
    return max_difference([&](double x) { return oracle::sample(lhs, x, 0); },
                          [&](double x) { return oracle::sample(rhs, x, 0); }, lhs.lower(),
                          lhs.upper(), grid_points);
}

bool passes(const VerificationReport& report, const TolerancePolicy& tol) {
    const bool residuals_ok = std::all_of(report.residuals.begin(), report.residuals.end(),
                                          [&](double r) { return r <= tol.residual; });
    const bool jumps_ok = std::all_of(report.jumps.begin(), report.jumps.end(), [&](const JumpEntry& j) {
        return !j.enforced || j.jump <= tol.jump;
    });
    const bool conditions_ok =
        std::all_of(report.conditions.begin(), report.conditions.end(),
                    [&](const ConditionCheck& c) { return c.violation <= tol.condition; });
    const bool oracle_ok = !report.oracle_delta || *report.oracle_delta <= tol.oracle;
    return residuals_ok && jumps_ok && conditions_ok && oracle_ok;
}

VerificationReport build_report(const exact::PiecewiseSolution& sol, const model::PiecewiseBvp& bvp,
                                const oracle::NumericSolution* numeric, const VerifyOptions& options) {
    VerificationReport report;
    report.tolerances = options.tolerances;
    report.residuals = residual_report(sol, bvp, options.samples_per_piece);
    report.jumps = continuity_report(sol, bvp);
    report.conditions = condition_report(sol, bvp);
    if (numeric != nullptr) {
        report.oracle_delta = compare_solutions(sol, bvp, *numeric, options.grid_points);
    }
    report.pass = passes(report, options.tolerances);
    return report;
}

nlohmann::json to_json(const VerificationReport& report) {
    nlohmann::json j;
    j["pass"] = report.pass;
    j["tolerances"] = {{"residual", report.tolerances.residual},
                       {"jump", report.tolerances.jump},
                       {"condition", report.tolerances.condition},
                       {"oracle", report.tolerances.oracle}};
    j["residuals"] = report.residuals;
    j["jumps"] = nlohmann::json::array();
    for (const auto& e : report.jumps) {
        j["jumps"].push_back({{"breakpoint", e.breakpoint},
                              {"x", e.x},
                              {"order", e.order},
                              {"left", e.left},
                              {"right", e.right},
                              {"jump", e.jump},
                              {"enforced", e.enforced}});
    }
    j["conditions"] = nlohmann::json::array();
    for (const auto& c : report.conditions) {
        j["conditions"].push_back({{"x", c.condition.location},
                                   {"deriv", c.condition.deriv_order},
                                   {"value", c.condition.value},
                                   {"piece", c.piece},
                                   {"actual", c.actual},
                                   {"violation", c.violation}});
    }
    if (report.oracle_delta) {
        j["oracle_delta"] = *report.oracle_delta;
    } else {
        j["oracle_delta"] = nullptr;
    }
    return j;
}

std::string to_table(const VerificationReport& report) {
    const auto& tol = report.tolerances;
    auto mark = [](bool ok) { return ok ? "ok" : "FAIL"; };
    std::ostringstream os;
    os << std::scientific << std::setprecision(3);
    os << "ODE residuals (tol " << tol.residual << ")\n";
    for (std::size_t k = 0; k < report.residuals.size(); ++k) {
        os << "  piece " << k << "  " << report.residuals[k] << "  "
           << mark(report.residuals[k] <= tol.residual) << "\n";
    }
    if (!report.jumps.empty()) {
        os << "Interface jumps (tol " << tol.jump << ", enforced orders only)\n";
        for (const auto& e : report.jumps) {
            os << "  x=" << std::defaultfloat << std::setprecision(6) << e.x << std::scientific
               << std::setprecision(3) << "  order " << e.order << "  " << e.jump << "  "
               << (e.enforced ? mark(e.jump <= tol.jump) : "info") << "\n";
        }
    }
    os << "Point conditions (tol " << tol.condition << ")\n";
    for (const auto& c : report.conditions) {
        os << "  u^(" << c.condition.deriv_order << ")(" << std::defaultfloat << std::setprecision(6)
           << c.condition.location << ") = " << c.condition.value << std::scientific
           << std::setprecision(3) << "  violation " << c.violation << "  "
           << mark(c.violation <= tol.condition) << "\n";
    }
    if (report.oracle_delta) {
        os << "Exact vs shooting oracle (tol " << tol.oracle << ")\n  max |diff| "
           << *report.oracle_delta << "  " << mark(*report.oracle_delta <= tol.oracle) << "\n";
    }
    os << "Overall: " << (report.pass ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace obvp::verify
