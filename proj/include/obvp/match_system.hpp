#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "obvp/errors.hpp"
#include "obvp/model.hpp"

/// Interface-matching systems and their dense solver. The row layout is shared
/// by the closed-form solver and the shooting oracle; only the column values
/// differ.
namespace obvp::exact {

/// Dense row-major m x N system with per-column (piece, basis) labels.
struct MatchSystem {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> matrix;
    std::vector<double> rhs;
    std::vector<ColumnLabel> labels;
    std::vector<std::string> row_tags;

    MatchSystem() = default;
    MatchSystem(std::size_t m, std::size_t n);

    double& at(std::size_t r, std::size_t c) { return matrix[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return matrix[r * cols + c]; }
    std::span<double> row(std::size_t r) { return {matrix.data() + r * cols, cols}; }
    std::span<const double> row(std::size_t r) const { return {matrix.data() + r * cols, cols}; }
};

/// How the piece-level quantities entering the rows are evaluated.
struct PieceEvaluator {
    /// Value of derivative `order` of homogeneous solution `column` of `piece` at x.
    std::function<double(std::size_t piece, std::size_t column, double x, int order)> homogeneous;
    /// Value of derivative `order` of the particular solution of `piece` at x.
    std::function<double(std::size_t piece, double x, int order)> particular;
    /// Fills the coefficients of a pin row restricted to the pinned piece's
    /// columns and returns the row's right-hand side.
    std::function<double(const model::PinnedConstant& pin, std::span<double> piece_row)> pin;
};

/// Rows: point conditions (in input order), then continuity by breakpoint then
/// order (left value minus right value), then pins.
MatchSystem assemble_match_system(const model::PiecewiseBvp& bvp, const PieceEvaluator& eval);

enum class SolveStatus { Solved, RankDeficient, Inconsistent };

struct GaussOptions {
    /// Pivot magnitudes at or below rank_tol * max|entry| count as zero.
    double rank_tol = 1e-11;
    /// Max |Mx - b| accepted for overdetermined and rank-deficient systems.
    double consistency_tol = 1e-9;
};

struct GaussResult {
    SolveStatus status = SolveStatus::Solved;
    std::vector<double> solution;  // empty unless a solution exists
    std::size_t rank = 0;
    std::size_t nullity = 0;
    double residual_norm = 0.0;  // max |Mx - b| for the returned solution
    bool consistent = true;
    /// Columns without a pivot in the column-ordered elimination.
    std::vector<std::size_t> free_columns;
    /// Null-space basis, one vector per free column (free entry set to 1).
    std::vector<std::vector<double>> null_basis;
};

/// Gaussian elimination with partial pivoting.
///  - square, full rank: exact solve;
///  - overdetermined, full rank: least squares via the normal equations,
///    status Inconsistent if the residual exceeds consistency_tol;
///  - rank deficient: rank, nullity, free columns, null basis, and a
///    particular solution (free entries zero) when the system is consistent.
GaussResult gauss_solve(const MatchSystem& system, const GaussOptions& options = {});

/// Plain dense square solve (row-major); throws std::runtime_error when singular.
std::vector<double> solve_square(std::vector<double> a, std::vector<double> b, std::size_t n);

/// Columns whose entry in some null-space vector is non-negligible.
std::vector<std::size_t> pin_candidates(const GaussResult& result);

/// Throws RankDeficientError / InconsistentSystemError for unsolved results.
void require_solved(const GaussResult& result, const MatchSystem& system,
                    const std::function<std::string(const ColumnLabel&)>& describe_column = {});

std::string describe_label(const ColumnLabel& label);

}  // namespace obvp::exact
