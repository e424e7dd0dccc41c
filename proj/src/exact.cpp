#include "obvp/exact.hpp"

#include <cassert>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace obvp::exact {

Polynomial particular_solution(const model::PieceOde& piece) {
    if (piece.forcing.is_zero()) {
        return {};
    }
    const int n = piece.order;
    const auto c = basis::characteristic_coeffs(piece);
    int s = 0;
    while (s < n && c[static_cast<std::size_t>(s)] == 0.0) {
        ++s;
    }
    const int m = piece.forcing.degree();
    auto char_coeff = [&](int j) { return j >= 0 && j <= n ? c[static_cast<std::size_t>(j)] : 0.0; };

    // Power t of L[sum_p d_p x^p] collects d_p c_{p-t} p!/t!; with p in
    // [s, s+m] the system is triangular, solved from the top power down.
    std::vector<double> d(static_cast<std::size_t>(m + s) + 1, 0.0);
    for (int t = m; t >= 0; --t) {
        double acc = piece.forcing.coefficient(t);
        for (int p = t + s + 1; p <= m + s; ++p) {
            acc -= d[static_cast<std::size_t>(p)] * char_coeff(p - t) * falling_factorial(p, p - t);
        }
        const double diag = char_coeff(s) * falling_factorial(t + s, s);
        assert(diag != 0.0);
        d[static_cast<std::size_t>(t + s)] = acc / diag;
    }
    return Polynomial(std::move(d));
}

MatchSystem assemble_system(const model::PiecewiseBvp& bvp,
                            const std::vector<std::vector<basis::BasisFunction>>& bases,
                            const std::vector<Polynomial>& particulars) {
    PieceEvaluator eval;
    eval.homogeneous = [&bases](std::size_t piece, std::size_t col, double x, int k) {
        return basis::eval_basis(bases[piece][col], x, k);
    };
    eval.particular = [&particulars](std::size_t piece, double x, int k) {
        return particulars[piece].derivative_at(x, k);
    };
    eval.pin = [](const model::PinnedConstant& pin, std::span<double> row) {
        row[pin.basis_index] = 1.0;
        return pin.value;
    };
    return assemble_match_system(bvp, eval);
}

ExactSetup prepare_exact(const model::PiecewiseBvp& bvp, const ExactOptions& options) {
    model::require_valid(bvp);
    ExactSetup setup;
    for (const auto& piece : bvp.pieces) {
        setup.bases.push_back(basis::piece_basis(piece, options.cluster_tol));
        setup.particulars.push_back(particular_solution(piece));
    }
    setup.system = assemble_system(bvp, setup.bases, setup.particulars);
    return setup;
}

PiecewiseSolution solve_exact(const model::PiecewiseBvp& bvp, const ExactOptions& options) {
    auto setup = prepare_exact(bvp, options);
    const auto result = gauss_solve(setup.system, options.gauss);
    require_solved(result, setup.system, [&setup](const ColumnLabel& l) {
        return describe_label(l) + " (" + basis::describe(setup.bases[l.piece][l.basis]) + ")";
    });

    const std::size_t n = static_cast<std::size_t>(bvp.order);
    PiecewiseSolution sol;
    sol.rank_report = {result.rank, result.nullity, result.residual_norm};
    for (std::size_t k = 0; k < bvp.pieces.size(); ++k) {
        PieceSolution ps;
        ps.basis = setup.bases[k];
        ps.particular = setup.particulars[k];
        ps.constants.assign(result.solution.begin() + static_cast<std::ptrdiff_t>(k * n),
                            result.solution.begin() + static_cast<std::ptrdiff_t>((k + 1) * n));
        sol.pieces.push_back(std::move(ps));
    }
    return sol;
}

double eval_piece(const PiecewiseSolution& sol, std::size_t piece, double x, int deriv_order) {
    const auto& ps = sol.pieces.at(piece);
    double acc = ps.particular.derivative_at(x, deriv_order);
    for (std::size_t i = 0; i < ps.basis.size(); ++i) {
        acc += ps.constants[i] * basis::eval_basis(ps.basis[i], x, deriv_order);
    }
    return acc;
}

double eval_solution(const PiecewiseSolution& sol, const model::PiecewiseBvp& bvp, double x,
                     int deriv_order) {
    return eval_piece(sol, model::evaluation_piece(bvp, x), x, deriv_order);
}

std::string describe_constants(const PiecewiseSolution& sol, const model::PiecewiseBvp& bvp) {
    std::ostringstream os;
    os << std::setprecision(17);
    for (std::size_t k = 0; k < sol.pieces.size(); ++k) {
        const auto& ps = sol.pieces[k];
        const auto& iv = bvp.pieces[k].interval;
        os << "piece " << k << " [" << iv.lo << ", " << iv.hi
           << (k + 1 == sol.pieces.size() ? "]" : ")") << ": " << model::describe(bvp.pieces[k])
           << "\n";
        for (std::size_t i = 0; i < ps.constants.size(); ++i) {
            os << "  c[" << k << "," << i << "] = " << std::setw(24) << ps.constants[i] << "  * "
               << basis::describe(ps.basis[i]) << "\n";
        }
        os << "  particular: " << ps.particular.to_string() << "\n";
    }
    os << "rank " << sol.rank_report.rank << ", nullity " << sol.rank_report.nullity
       << ", residual " << sol.rank_report.residual_norm << "\n";
    return os.str();
}

}  // namespace obvp::exact
