#include "obvp/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace obvp::oracle {

namespace {

using State = std::array<double, model::kMaxOrder>;

struct Companion {
    const model::PieceOde& piece;
    bool forced;

    State operator()(double x, const State& y) const {
        const auto n = static_cast<std::size_t>(piece.order);
        State dy{};
        for (std::size_t k = 0; k + 1 < n; ++k) {
            dy[k] = y[k + 1];
        }
        double top = forced ? piece.forcing(x) : 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            top += piece.coeffs[j] * y[j];
        }
        dy[n - 1] = top;
        return dy;
    }
};

State axpy(const State& y, double a, const State& k) {
    State out;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = y[i] + a * k[i];
    }
    return out;
}

State rk4_step(const Companion& f, double x, const State& y, double h) {
    const State k1 = f(x, y);
    const State k2 = f(x + 0.5 * h, axpy(y, 0.5 * h, k1));
    const State k3 = f(x + 0.5 * h, axpy(y, 0.5 * h, k2));
    const State k4 = f(x + h, axpy(y, h, k3));
    State out;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    return out;
}

std::vector<double> piece_grid(const model::Interval& iv, double h, std::span<const double> knots) {
    std::vector<double> stops{iv.lo};
    std::vector<double> inner;
    for (double k : knots) {
        if (k > iv.lo && k < iv.hi) {
            inner.push_back(k);
        }
    }
    std::sort(inner.begin(), inner.end());
    inner.erase(std::unique(inner.begin(), inner.end()), inner.end());
    stops.insert(stops.end(), inner.begin(), inner.end());
    stops.push_back(iv.hi);

    std::vector<double> grid{iv.lo};
    for (std::size_t s = 0; s + 1 < stops.size(); ++s) {
        const double a = stops[s];
        const double b = stops[s + 1];
        const auto steps = static_cast<std::size_t>(std::max(1.0, std::ceil((b - a) / h - 1e-9)));
        const double dx = (b - a) / static_cast<double>(steps);
        for (std::size_t i = 1; i < steps; ++i) {
            grid.push_back(a + static_cast<double>(i) * dx);
        }
        grid.push_back(b);
    }
    return grid;
}

std::vector<std::vector<double>> integrate(const model::PieceOde& piece, const std::vector<double>& grid,
                                           const State& start, bool forced) {
    const auto n = static_cast<std::size_t>(piece.order);
    const Companion f{piece, forced};
    std::vector<std::vector<double>> out;
    out.reserve(grid.size());
    State y = start;
    out.emplace_back(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(n));
    for (std::size_t i = 1; i < grid.size(); ++i) {
        y = rk4_step(f, grid[i - 1], y, grid[i] - grid[i - 1]);
        for (std::size_t k = 0; k < n; ++k) {
            if (!std::isfinite(y[k])) {
                std::ostringstream os;
                os << "RK4 integration blew up at x = " << grid[i] << " on piece ["
                   << piece.interval.lo << ", " << piece.interval.hi << "]";
                throw std::runtime_error(os.str());
            }
        }
        out.emplace_back(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(n));
    }
    return out;
}

std::size_t grid_index(const std::vector<double>& grid, double x) {
    const auto it = std::lower_bound(grid.begin(), grid.end(), x);
    if (it == grid.end() || *it != x) {
        std::ostringstream os;
        os << "x = " << x << " is not a grid point of the shooting trajectory";
        throw std::logic_error(os.str());
    }
    return static_cast<std::size_t>(it - grid.begin());
}

double binomial(int n, int k) { return falling_factorial(n, k) / falling_factorial(k, k); }

Polynomial antiderivative(const Polynomial& p, int times) {
    std::vector<double> c = p.coeffs();
    for (int t = 0; t < times; ++t) {
        if (c.empty()) {
            break;
        }
        std::vector<double> next(c.size() + 1, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] = c[i] / static_cast<double>(i + 1);
        }
        c = std::move(next);
    }
    return Polynomial(std::move(c));
}

/// Pin row for a piece whose ODE is u^(n) = q: the basis constant of x^j is
/// the x^j coefficient of u = sum_k y_k(lo) (x-lo)^k / k! + P(x), where P is
/// the solution with zero state at lo.
double polynomial_pin_row(const model::PieceOde& piece, const model::PinnedConstant& pin,
                          std::span<double> row) {
    const bool uncoupled = std::all_of(piece.coeffs.begin(), piece.coeffs.end(),
                                       [](double a) { return a == 0.0; });
    if (!uncoupled) {
        throw InputError("oracle cannot translate a pin on coupled piece " +
                         std::to_string(pin.piece_index) +
                         " (pins are supported on pieces of the form u^(n) = q(x) only)");
    }
    const int n = piece.order;
    const int j = static_cast<int>(pin.basis_index);
    const double lo = piece.interval.lo;
    const Polynomial q_int = antiderivative(piece.forcing, n);
    double p_j = q_int.coefficient(j);
    for (int k = j; k < n; ++k) {
        const double w = binomial(k, j) * std::pow(-lo, k - j) / falling_factorial(k, k);
        row[static_cast<std::size_t>(k)] = w;
        p_j -= q_int.derivative_at(lo, k) * w;
    }
    return pin.value - p_j;
}

}  // namespace

FundamentalTrajectory integrate_fundamental(const model::PieceOde& piece, double h,
                                            std::span<const double> knots) {
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw InputError("step h must be positive and finite");
    }
    if (piece.order < model::kMinOrder || piece.order > model::kMaxOrder ||
        piece.coeffs.size() != static_cast<std::size_t>(piece.order)) {
        throw InputError("integrate_fundamental: malformed piece");
    }
    FundamentalTrajectory traj;
    traj.grid = piece_grid(piece.interval, h, knots);
    for (int j = 0; j < piece.order; ++j) {
        State e{};
        e[static_cast<std::size_t>(j)] = 1.0;
        traj.homogeneous.push_back(integrate(piece, traj.grid, e, false));
    }
    traj.particular = integrate(piece, traj.grid, State{}, true);
    return traj;
}

NumericSolution shooting_solve(const model::PiecewiseBvp& bvp, double h,
                               const exact::GaussOptions& options) {
    model::require_valid(bvp);
    const auto n = static_cast<std::size_t>(bvp.order);

    std::vector<double> knots;
    for (const auto& c : bvp.conditions) {
        knots.push_back(c.location);
    }
    std::vector<FundamentalTrajectory> trajs;
    trajs.reserve(bvp.pieces.size());
    for (const auto& piece : bvp.pieces) {
        trajs.push_back(integrate_fundamental(piece, h, knots));
    }

    exact::PieceEvaluator eval;
    eval.homogeneous = [&trajs](std::size_t piece, std::size_t col, double x, int k) {
        const auto& t = trajs[piece];
        return t.homogeneous[col][grid_index(t.grid, x)][static_cast<std::size_t>(k)];
    };
    eval.particular = [&trajs](std::size_t piece, double x, int k) {
        const auto& t = trajs[piece];
        return t.particular[grid_index(t.grid, x)][static_cast<std::size_t>(k)];
    };
    eval.pin = [&bvp](const model::PinnedConstant& pin, std::span<double> row) {
        return polynomial_pin_row(bvp.pieces[pin.piece_index], pin, row);
    };
    const auto system = exact::assemble_match_system(bvp, eval);
    const auto result = exact::gauss_solve(system, options);
    exact::require_solved(result, system, [](const ColumnLabel& l) {
        return "piece " + std::to_string(l.piece) + " initial u^(" + std::to_string(l.basis) + ")";
    });

    NumericSolution sol;
    sol.order = bvp.order;
    sol.step = h;
    sol.rank = result.rank;
    sol.residual_norm = result.residual_norm;
    for (std::size_t k = 0; k < bvp.pieces.size(); ++k) {
        const auto& piece = bvp.pieces[k];
        const auto& t = trajs[k];
        for (std::size_t i = 0; i < t.grid.size(); ++i) {
            std::vector<double> state = t.particular[i];
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t d = 0; d < n; ++d) {
                    state[d] += result.solution[k * n + j] * t.homogeneous[j][i][d];
                }
            }
            double top = piece.forcing(t.grid[i]);
            for (std::size_t d = 0; d < n; ++d) {
                top += piece.coeffs[d] * state[d];
            }
            if (i == 0 && k > 0) {
                // Shared breakpoint: keep the left limit, take the right state.
                sol.states.back() = state;
                sol.highest.back() = top;
                continue;
            }
            sol.grid.push_back(t.grid[i]);
            sol.left_states.push_back(state);
            sol.left_highest.push_back(top);
            sol.states.push_back(std::move(state));
            sol.highest.push_back(top);
        }
    }
    return sol;
}

double sample(const NumericSolution& sol, double x, int deriv_order) {
    if (deriv_order < 0 || deriv_order >= sol.order) {
        throw InputError("sample: derivative order " + std::to_string(deriv_order) +
                         " not in [0, n-1]");
    }
    if (sol.grid.empty() || !(x >= sol.lower() && x <= sol.upper())) {
        std::ostringstream os;
        os << "sample: x = " << x << " outside the solution grid";
        throw InputError(os.str());
    }
    const auto k = static_cast<std::size_t>(deriv_order);
    const auto it = std::lower_bound(sol.grid.begin(), sol.grid.end(), x);
    const auto hi = static_cast<std::size_t>(it - sol.grid.begin());
    if (*it == x) {
        return sol.states[hi][k];
    }
    const std::size_t lo = hi - 1;
    auto slope = [&](const std::vector<double>& s, double top) {
        return k + 1 < s.size() ? s[k + 1] : top;
    };
    const double y0 = sol.states[lo][k];
    const double d0 = slope(sol.states[lo], sol.highest[lo]);
    const double y1 = sol.left_states[hi][k];
    const double d1 = slope(sol.left_states[hi], sol.left_highest[hi]);
    const double w = sol.grid[hi] - sol.grid[lo];
    const double t = (x - sol.grid[lo]) / w;
    const double t2 = t * t;
    const double t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + t) * w * d0 + (-2 * t3 + 3 * t2) * y1 +
           (t3 - t2) * w * d1;
}

}  // namespace obvp::oracle
