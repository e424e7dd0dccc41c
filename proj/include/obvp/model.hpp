#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "obvp/errors.hpp"
#include "obvp/polynomial.hpp"

/// Piecewise linear obstacle boundary-value problems in normalized form
///
///     u^(n)(x) = sum_j a_j u^(j)(x) + q(x)      on each piece,
///
/// with point conditions, interface continuity and optional pinned constants.
namespace obvp::model {

inline constexpr int kMinOrder = 2;
inline constexpr int kMaxOrder = 4;
inline constexpr int kMaxForcingDegree = 6;
inline constexpr std::size_t kMaxPieces = 16;

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double width() const noexcept { return hi - lo; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// One interval's ODE  u^(n) = sum_j coeffs[j] u^(j) + forcing(x).
struct PieceOde {
    int order = 2;
    Interval interval;
    std::vector<double> coeffs;  // a_0 .. a_{n-1}
    Polynomial forcing;

    friend bool operator==(const PieceOde&, const PieceOde&) = default;
};

/// u^(deriv_order)(location) = value
struct PointCondition {
    double location = 0.0;
    int deriv_order = 0;
    double value = 0.0;

    friend bool operator==(const PointCondition&, const PointCondition&) = default;
};

/// Derivative orders matched at every interior breakpoint.
struct ContinuitySpec {
    std::vector<int> enforced_orders;

    static ContinuitySpec all_orders(int order);
    bool enforces(int deriv_order) const;
    friend bool operator==(const ContinuitySpec&, const ContinuitySpec&) = default;
};

/// Fixes basis constant `basis_index` of piece `piece_index` to `value`.
struct PinnedConstant {
    std::size_t piece_index = 0;
    std::size_t basis_index = 0;
    double value = 0.0;

    friend bool operator==(const PinnedConstant&, const PinnedConstant&) = default;
};

/// Which piece owns a point condition placed exactly on an interior breakpoint.
enum class ConditionSide { Left, Right };

struct PiecewiseBvp {
    int order = 2;
    std::vector<PieceOde> pieces;
    std::vector<PointCondition> conditions;
    ContinuitySpec continuity;
    std::vector<PinnedConstant> pins;
    ConditionSide condition_side = ConditionSide::Left;

    double lower() const { return pieces.front().interval.lo; }
    double upper() const { return pieces.back().interval.hi; }
    /// a, interior breakpoints, b.
    std::vector<double> breakpoints() const;

    friend bool operator==(const PiecewiseBvp&, const PiecewiseBvp&) = default;
};

/// Folds a leading sign on u^(n) into the right-hand side. Throws InputError
/// on an unsupported order, a degenerate interval or a bad coefficient count.
PieceOde normalize_piece(int sign, std::vector<double> raw_coeffs, Polynomial raw_forcing,
                         Interval interval, int order);

enum class Determinacy { Square, Overdetermined, Underdetermined };

std::string to_string(Determinacy d);

struct ValidationReport {
    std::vector<std::string> issues;
    std::size_t unknowns = 0;
    /// Point conditions plus continuity rows. Pins are counted separately.
    std::size_t equations = 0;
    std::size_t pins = 0;
    Determinacy determinacy = Determinacy::Square;

    bool ok() const noexcept { return issues.empty(); }
    std::string summary() const;
};

ValidationReport validate_bvp(const PiecewiseBvp& bvp);

/// Throws InputError listing every issue if `validate_bvp` finds any.
void require_valid(const PiecewiseBvp& bvp);

/// Piece used for a point condition at x (interior breakpoints follow
/// `bvp.condition_side`). Throws InputError when x is outside [a, b].
std::size_t condition_piece(const PiecewiseBvp& bvp, double x);

/// Piece used for evaluation at x: breakpoints belong to the right piece,
/// except b which belongs to the last piece. Throws InputError outside [a, b].
std::size_t evaluation_piece(const PiecewiseBvp& bvp, double x);

/// Right-hand side of the generic obstacle problem
///
///     sign * u^(n) = g(x)                    a <= x < c
///     sign * u^(n) = f u + g(x) + r          c <= x < d
///     sign * u^(n) = g(x)                    d <= x <= b
///
/// where g may carry derivative couplings: g(x) = sum_j g_coupling[j] u^(j) + g.
struct ObstacleForm {
    Polynomial g;
    std::vector<double> g_coupling;
    double f = 0.0;
    double r = 0.0;
    int sign = 1;
};

struct Breakpoints {
    double a = 0.0;
    double c = 0.0;
    double d = 0.0;
    double b = 0.0;
};

/// Three-piece problem of the given order; continuity defaults to all orders 0..n-1.
PiecewiseBvp build_obstacle_problem(int order, const ObstacleForm& form, const Breakpoints& at,
                                    std::vector<PointCondition> conditions);

PiecewiseBvp build_second_order(const ObstacleForm& form, const Breakpoints& at,
                                std::vector<PointCondition> conditions);
PiecewiseBvp build_third_order(const ObstacleForm& form, const Breakpoints& at,
                               std::vector<PointCondition> conditions);
PiecewiseBvp build_fourth_order(const ObstacleForm& form, const Breakpoints& at,
                                std::vector<PointCondition> conditions);

/// "u'' = u - 1" style rendering of a piece.
std::string describe(const PieceOde& piece);

}  // namespace obvp::model
