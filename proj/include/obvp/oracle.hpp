#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "obvp/match_system.hpp"
#include "obvp/model.hpp"

/// Independent numeric check: linear shooting by superposition of RK4-integrated
/// fundamental solutions. Nothing here touches characteristic roots, basis
/// functions or particular polynomials.
namespace obvp::oracle {

inline constexpr double kDefaultStep = 1e-3;

/// States (u, u', ..., u^(n-1)) sampled on `grid` for the n unit initial
/// states at lo with zero forcing, and for the zero initial state with forcing.
struct FundamentalTrajectory {
    std::vector<double> grid;
    /// homogeneous[j][i]: state at grid[i] started from unit vector e_j.
    std::vector<std::vector<std::vector<double>>> homogeneous;
    std::vector<std::vector<double>> particular;
};

/// Classic RK4 on the first-order companion system from lo to hi. Every knot
/// inside the interval becomes a grid point; each stretch between knots uses
/// equal steps no longer than h. Throws InputError for h <= 0 and
/// std::runtime_error (naming x) if the integration leaves the finite range.
FundamentalTrajectory integrate_fundamental(const model::PieceOde& piece, double h,
                                            std::span<const double> knots = {});

struct NumericSolution {
    int order = 2;
    double step = kDefaultStep;
    /// Strictly increasing; contains every breakpoint and condition location.
    std::vector<double> grid;
    /// State at each grid point, breakpoints owned by the right piece.
    std::vector<std::vector<double>> states;
    /// u^(n) at each grid point (right piece at breakpoints).
    std::vector<double> highest;
    /// Left limits; identical to states/highest except at interior breakpoints.
    std::vector<std::vector<double>> left_states;
    std::vector<double> left_highest;
    std::size_t rank = 0;
    double residual_norm = 0.0;

    double lower() const { return grid.front(); }
    double upper() const { return grid.back(); }
};

/// Solves the same matching rows as the closed-form solver, with the initial
/// state of every piece as unknowns. Pins are only translated on pieces with
/// no u-coupling (u^(n) = q), where basis constant j is the x^j coefficient
/// of u; other pins raise InputError. Rank problems raise the same errors as
/// the closed-form solver.
NumericSolution shooting_solve(const model::PiecewiseBvp& bvp, double h = kDefaultStep,
                               const exact::GaussOptions& options = {});

/// Derivative `deriv_order` (< n) at x by cubic Hermite interpolation of the
/// bracketing states; exact grid hits return the stored value.
double sample(const NumericSolution& sol, double x, int deriv_order);

}  // namespace obvp::oracle
