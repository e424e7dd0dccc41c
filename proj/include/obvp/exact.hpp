#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "obvp/basis.hpp"
#include "obvp/match_system.hpp"
#include "obvp/model.hpp"

/// Closed-form piecewise solutions: particular polynomial plus a combination
/// of the real homogeneous basis on each piece, with constants fixed by the
/// interface-matching system.
namespace obvp::exact {

struct PieceSolution {
    std::vector<basis::BasisFunction> basis;
    std::vector<double> constants;
    Polynomial particular;
};

struct RankReport {
    std::size_t rank = 0;
    std::size_t nullity = 0;
    double residual_norm = 0.0;
};

struct PiecewiseSolution {
    std::vector<PieceSolution> pieces;
    RankReport rank_report;
};

/// Polynomial u_p with L[u_p] = forcing, by undetermined coefficients. The
/// ansatz is x^s * (polynomial of the forcing's degree), s being the
/// multiplicity of the characteristic root 0.
Polynomial particular_solution(const model::PieceOde& piece);

/// Matching system whose columns are the basis constants; a pin row is the
/// unit vector of its constant.
MatchSystem assemble_system(const model::PiecewiseBvp& bvp,
                            const std::vector<std::vector<basis::BasisFunction>>& bases,
                            const std::vector<Polynomial>& particulars);

struct ExactOptions {
    double cluster_tol = basis::kDefaultClusterTol;
    GaussOptions gauss;
};

/// Bases, particulars and the assembled matching system of `bvp`.
struct ExactSetup {
    std::vector<std::vector<basis::BasisFunction>> bases;
    std::vector<Polynomial> particulars;
    MatchSystem system;
};

ExactSetup prepare_exact(const model::PiecewiseBvp& bvp, const ExactOptions& options = {});

/// Throws InputError for invalid problems, RankDeficientError (with pin
/// advice) and InconsistentSystemError when the constants are not determined.
PiecewiseSolution solve_exact(const model::PiecewiseBvp& bvp, const ExactOptions& options = {});

/// Derivative `deriv_order` of the solution restricted to piece `piece`
/// (no ownership rule; x may be any real).
double eval_piece(const PiecewiseSolution& sol, std::size_t piece, double x, int deriv_order);

/// Derivative of the solution at x using the owning piece (breakpoints belong
/// to the right piece, b to the last). Throws InputError outside [a, b].
double eval_solution(const PiecewiseSolution& sol, const model::PiecewiseBvp& bvp, double x,
                     int deriv_order);

/// "c = 0.375 * x" style listing of every constant with its label.
std::string describe_constants(const PiecewiseSolution& sol, const model::PiecewiseBvp& bvp);

}  // namespace obvp::exact
