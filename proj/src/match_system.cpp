#include "obvp/match_system.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace obvp::exact {

MatchSystem::MatchSystem(std::size_t m, std::size_t n)
    : rows(m), cols(n), matrix(m * n, 0.0), rhs(m, 0.0), labels(n), row_tags(m) {}

MatchSystem assemble_match_system(const model::PiecewiseBvp& bvp, const PieceEvaluator& eval) {
    const std::size_t n = static_cast<std::size_t>(bvp.order);
    const std::size_t pieces = bvp.pieces.size();
    const auto& orders = bvp.continuity.enforced_orders;
    const std::size_t m = bvp.conditions.size() +
                          orders.size() * (pieces > 0 ? pieces - 1 : 0) + bvp.pins.size();
    MatchSystem sys(m, n * pieces);
    for (std::size_t k = 0; k < pieces; ++k) {
        for (std::size_t j = 0; j < n; ++j) {
            sys.labels[k * n + j] = {k, j};
        }
    }

    std::size_t r = 0;
    for (const auto& cond : bvp.conditions) {
        const std::size_t k = model::condition_piece(bvp, cond.location);
        for (std::size_t j = 0; j < n; ++j) {
            sys.at(r, k * n + j) = eval.homogeneous(k, j, cond.location, cond.deriv_order);
        }
        sys.rhs[r] = cond.value - eval.particular(k, cond.location, cond.deriv_order);
        std::ostringstream tag;
        tag << "u^(" << cond.deriv_order << ")(" << cond.location << ") = " << cond.value;
        sys.row_tags[r] = tag.str();
        ++r;
    }
    for (std::size_t k = 1; k < pieces; ++k) {
        const double x = bvp.pieces[k].interval.lo;
        for (int order : orders) {
            for (std::size_t j = 0; j < n; ++j) {
                sys.at(r, (k - 1) * n + j) = eval.homogeneous(k - 1, j, x, order);
                sys.at(r, k * n + j) = -eval.homogeneous(k, j, x, order);
            }
            sys.rhs[r] = eval.particular(k, x, order) - eval.particular(k - 1, x, order);
            std::ostringstream tag;
            tag << "jump u^(" << order << ") at " << x;
            sys.row_tags[r] = tag.str();
            ++r;
        }
    }
    for (const auto& pin : bvp.pins) {
        auto piece_row = sys.row(r).subspan(pin.piece_index * n, n);
        sys.rhs[r] = eval.pin(pin, piece_row);
        std::ostringstream tag;
        tag << "pin piece " << pin.piece_index << " basis " << pin.basis_index << " = " << pin.value;
        sys.row_tags[r] = tag.str();
        ++r;
    }
    return sys;
}

std::vector<double> solve_square(std::vector<double> a, std::vector<double> b, std::size_t n) {
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < n; ++r) {
            if (std::abs(a[r * n + c]) > std::abs(a[p * n + c])) {
                p = r;
            }
        }
        if (a[p * n + c] == 0.0) {
            throw std::runtime_error("singular matrix in solve_square");
        }
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a[p * n + j], a[c * n + j]);
            }
            std::swap(b[p], b[c]);
        }
        for (std::size_t r = c + 1; r < n; ++r) {
            const double f = a[r * n + c] / a[c * n + c];
            if (f == 0.0) {
                continue;
            }
            for (std::size_t j = c; j < n; ++j) {
                a[r * n + j] -= f * a[c * n + j];
            }
            b[r] -= f * b[c];
        }
    }
    std::vector<double> x(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            s -= a[i * n + j] * x[j];
        }
        x[i] = s / a[i * n + i];
    }
    return x;
}

namespace {

double residual_inf(const MatchSystem& sys, const std::vector<double>& x) {
    double worst = 0.0;
    for (std::size_t r = 0; r < sys.rows; ++r) {
        double s = -sys.rhs[r];
        for (std::size_t c = 0; c < sys.cols; ++c) {
            s += sys.at(r, c) * x[c];
        }
        worst = std::max(worst, std::abs(s));
    }
    return worst;
}

}  // namespace

GaussResult gauss_solve(const MatchSystem& system, const GaussOptions& options) {
    const std::size_t m = system.rows;
    const std::size_t n = system.cols;
    GaussResult result;

    std::vector<double> a = system.matrix;
    std::vector<double> b = system.rhs;
    double scale = 0.0;
    for (double v : a) {
        scale = std::max(scale, std::abs(v));
    }
    const double zero_pivot = options.rank_tol * std::max(scale, 1e-300);

    // Row echelon form, one column at a time; a column with no usable pivot is free.
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (row >= m) {
            result.free_columns.push_back(c);
            continue;
        }
        std::size_t p = row;
        for (std::size_t r = row + 1; r < m; ++r) {
            if (std::abs(a[r * n + c]) > std::abs(a[p * n + c])) {
                p = r;
            }
        }
        if (std::abs(a[p * n + c]) <= zero_pivot) {
            result.free_columns.push_back(c);
            continue;
        }
        if (p != row) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a[p * n + j], a[row * n + j]);
            }
            std::swap(b[p], b[row]);
        }
        for (std::size_t r = row + 1; r < m; ++r) {
            const double f = a[r * n + c] / a[row * n + c];
            if (f == 0.0) {
                continue;
            }
            for (std::size_t j = c; j < n; ++j) {
                a[r * n + j] -= f * a[row * n + j];
            }
            a[r * n + c] = 0.0;
            b[r] -= f * b[row];
        }
        pivot_cols.push_back(c);
        ++row;
    }
    result.rank = pivot_cols.size();
    result.nullity = n - result.rank;

    // Back substitution on the echelon form with the given free values.
    auto back_substitute = [&](std::vector<double> x, const std::vector<double>& rhs) {
        for (std::size_t i = result.rank; i-- > 0;) {
            const std::size_t c = pivot_cols[i];
            double s = rhs[i];
            for (std::size_t j = c + 1; j < n; ++j) {
                s -= a[i * n + j] * x[j];
            }
            x[c] = s / a[i * n + c];
        }
        return x;
    };

    if (result.nullity > 0) {
        result.status = SolveStatus::RankDeficient;
        const std::vector<double> zeros(m, 0.0);
        for (std::size_t f : result.free_columns) {
            std::vector<double> seed(n, 0.0);
            seed[f] = 1.0;
            result.null_basis.push_back(back_substitute(std::move(seed), zeros));
        }
        auto x = back_substitute(std::vector<double>(n, 0.0), b);
        result.residual_norm = residual_inf(system, x);
        result.consistent = result.residual_norm <= options.consistency_tol;
        if (result.consistent) {
            result.solution = std::move(x);
        }
        return result;
    }

    if (m == n) {
        result.solution = back_substitute(std::vector<double>(n, 0.0), b);
        result.residual_norm = residual_inf(system, result.solution);
        return result;
    }

    // Full column rank, more rows than columns: normal equations.
    std::vector<double> ata(n * n, 0.0);
    std::vector<double> atb(n, 0.0);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t i = 0; i < n; ++i) {
            const double ri = system.at(r, i);
            atb[i] += ri * system.rhs[r];
            for (std::size_t j = 0; j < n; ++j) {
                ata[i * n + j] += ri * system.at(r, j);
            }
        }
    }
    auto x = solve_square(std::move(ata), std::move(atb), n);
    result.residual_norm = residual_inf(system, x);
    result.consistent = result.residual_norm <= options.consistency_tol;
    if (result.consistent) {
        result.solution = std::move(x);
    } else {
        result.status = SolveStatus::Inconsistent;
    }
    return result;
}

std::vector<std::size_t> pin_candidates(const GaussResult& result) {
    std::vector<std::size_t> out;
    if (result.null_basis.empty()) {
        return out;
    }
    const std::size_t n = result.null_basis.front().size();
    for (std::size_t c = 0; c < n; ++c) {
        for (const auto& v : result.null_basis) {
            double norm = 0.0;
            for (double e : v) {
                norm = std::max(norm, std::abs(e));
            }
            if (std::abs(v[c]) > 1e-8 * norm) {
                out.push_back(c);
                break;
            }
        }
    }
    return out;
}

std::string describe_label(const ColumnLabel& label) {
    return "piece " + std::to_string(label.piece) + " basis " + std::to_string(label.basis);
}

void require_solved(const GaussResult& result, const MatchSystem& system,
                    const std::function<std::string(const ColumnLabel&)>& describe_column) {
    auto text = [&](const ColumnLabel& l) {
        return describe_column ? describe_column(l) : describe_label(l);
    };
    if (result.status == SolveStatus::RankDeficient) {
        std::vector<ColumnLabel> free;
        std::vector<ColumnLabel> candidates;
        std::ostringstream os;
        os << "matching system is rank deficient: " << system.rows << "x" << system.cols
           << ", rank " << result.rank << ", nullity " << result.nullity;
        if (!result.consistent) {
            os << ", inconsistent (residual " << result.residual_norm << ")";
        }
        os << "\n  free columns:";
        for (std::size_t c : result.free_columns) {
            free.push_back(system.labels[c]);
            os << "\n    " << text(system.labels[c]);
        }
        const auto cand = pin_candidates(result);
        os << "\n  pinning any one of these restores uniqueness when nullity is 1:";
        for (std::size_t c : cand) {
            candidates.push_back(system.labels[c]);
            os << "\n    " << text(system.labels[c]);
        }
        throw RankDeficientError(os.str(), result.rank, result.nullity, std::move(free),
                                 std::move(candidates));
    }
    if (result.status == SolveStatus::Inconsistent) {
        std::ostringstream os;
        os << "overdetermined matching system is inconsistent: " << system.rows << "x"
           << system.cols << ", least-squares residual " << result.residual_norm;
        throw InconsistentSystemError(os.str(), result.residual_norm);
    }
}

}  // namespace obvp::exact
