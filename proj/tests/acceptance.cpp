// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "obvp/basis.hpp"
#include "obvp/errors.hpp"
#include "obvp/examples.hpp"
#include "obvp/exact.hpp"
#include "obvp/oracle.hpp"
#include "obvp/verify.hpp"

using namespace obvp;
using std::numbers::e;
using std::numbers::pi;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

int failures = 0;

void run(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& ex) {
        out = {false, std::string("exception: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0 && secs > limit_seconds) {
        out.ok = false;
        out.detail += " (over time limit)";
    }
    if (!out.ok) {
        ++failures;
    }
    std::printf("[%s] criterion %d: %s | %s | %.3fs\n", out.ok ? "PASS" : "FAIL", id, title, out.detail.c_str(),
                secs);
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

double constant(const exact::PiecewiseSolution& sol, std::size_t piece, std::size_t basis) {
    return sol.pieces.at(piece).constants.at(basis);
}

Outcome first_example() {
    const auto& bvp = examples::get_example("3.1.1").bvp;
    const auto sol = exact::solve_exact(bvp);
    const double slope = 2 * (e - 1) / (1 + 3 * e);
    const double centre = 1 - 4 * std::sqrt(e) / (1 + 3 * e);
    const double d1 = std::abs(constant(sol, 0, 1) - slope);
    const double d2 = std::abs(exact::eval_solution(sol, bvp, 0.0, 0) - centre);
    return {std::max(d1, d2) <= 1e-9, "slope err " + sci(d1) + ", u(0) err " + sci(d2)};
}

Outcome fourth_example() {
    const auto sol = exact::solve_exact(examples::get_example("3.1.4").bvp);
    const double a1 = 4 / (pi + 4 / std::tanh(pi / 4));
    const double den = 4 - pi + std::exp(pi / 2) * (4 + pi);
    const double a2 = -4 * std::exp(-pi / 4) / den;
    const double a3 = -4 * std::exp(3 * pi / 4) / den;
    // The last piece is a4 (pi - x) / pi = a4 - (a4/pi) x.
    const double a4 = pi * a1;
    const double worst = std::max({std::abs(constant(sol, 0, 1) - a1), std::abs(constant(sol, 1, 1) - a2),
                                   std::abs(constant(sol, 1, 0) - a3), std::abs(constant(sol, 2, 0) - a4)});
    return {worst <= 1e-9, "max constant err " + sci(worst)};
}

Outcome second_example() {
    const auto& ex = examples::get_example("3.1.2");
    const auto sol = exact::solve_exact(ex.bvp);
    double worst = 0.0;
    for (int i = 0; i <= 100; ++i) {
        const double x = i / 100.0;
        worst = std::max(worst, std::abs(exact::eval_solution(sol, ex.bvp, x, 0) - ex.reference(x)));
    }
    return {worst <= 1e-9, "max grid err " + sci(worst) + " over 101 points"};
}

Outcome oracle_equivalence() {
    double worst = 0.0;
    std::string worst_id;
    auto check = [&](const std::string& id, const model::PiecewiseBvp& bvp) {
        const auto ex = exact::solve_exact(bvp);
        const auto num = oracle::shooting_solve(bvp, 1e-3);
        const double d = verify::compare_solutions(ex, bvp, num, 2001);
        if (d >= worst) {
            worst = d;
            worst_id = id;
        }
    };
    for (const char* id : {"3.1.1", "3.1.2", "3.1.3", "3.1.4", "3.1.6", "3.1.7", "3.1.8"}) {
        check(id, examples::get_example(id).bvp);
    }
    check("eq11 consistent", examples::eq11_consistent());
    return {worst <= 1e-6, "max |exact - oracle| " + sci(worst) + " (" + worst_id + ")"};
}

Outcome invariant_suite() {
    std::ostringstream detail;
    bool ok = true;
    std::size_t solved = 0;
    for (const auto& s : examples::list_examples()) {
        const auto& entry = examples::get_example(s.id);
        const auto& bvp = entry.consistent_variant ? *entry.consistent_variant : entry.bvp;
        const auto sol = exact::solve_exact(bvp);
        const auto report = verify::build_report(sol, bvp, nullptr);
        ok = ok && report.pass;
        if (!report.pass) {
            detail << s.id << " fails; ";
        }
        ++solved;
    }
    detail << solved << " entries checked";

    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> coef(-10.0, 10.0);
    std::uniform_real_distribution<double> small(-3.0, 3.0);
    std::uniform_int_distribution<int> degree(2, 4);
    std::uniform_real_distribution<double> where(-1.0, pi);
    std::size_t root_fail = 0;
    std::size_t fd_fail = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = degree(rng);
        std::vector<double> c(n + 1);
        for (int i = 0; i < n; ++i) {
            c[i] = coef(rng);
        }
        c[n] = 1.0;
        std::vector<std::complex<double>> poly{1.0};
        for (const auto& r : basis::find_roots(c)) {
            for (int m = 0; m < r.multiplicity; ++m) {
                std::vector<std::complex<double>> next(poly.size() + 1, 0.0);
                for (std::size_t i = 0; i < poly.size(); ++i) {
                    next[i + 1] += poly[i];
                    next[i] -= r.value * poly[i];
                }
                poly = std::move(next);
            }
        }
        bool good = poly.size() == c.size();
        for (std::size_t i = 0; good && i < c.size(); ++i) {
            good = std::abs(poly[i].real() - c[i]) <= 1e-8;
        }
        root_fail += good ? 0 : 1;

        std::vector<double> a(n);
        for (auto& v : a) {
            v = small(rng);
        }
        const auto piece = model::normalize_piece(1, a, {}, {0.0, 1.0}, n);
        for (const auto& fn : basis::piece_basis(piece)) {
            const double x = where(rng);
            for (int k = 0; k <= 3; ++k) {
                const double h = 1e-5;
                const double fd = (basis::eval_basis(fn, x + h, k) - basis::eval_basis(fn, x - h, k)) / (2 * h);
                if (std::abs(basis::eval_basis(fn, x, k + 1) - fd) >
                    1e-5 * (1 + std::abs(basis::eval_basis(fn, x, k)))) {
                    ++fd_fail;
                }
            }
        }
    }
    ok = ok && root_fail == 0 && fd_fail == 0;
    detail << "; 1000 random root reconstructions (" << root_fail << " failed), basis finite-difference checks ("
           << fd_fail << " failed)";
    return {ok, detail.str()};
}

Outcome rank_diagnostics() {
    auto bvp = examples::get_example("3.1.6").bvp;
    bvp.pins.clear();
    std::ostringstream detail;
    bool named = false;
    std::size_t nullity = 0;
    try {
        exact::solve_exact(bvp);
        return {false, "unpinned system unexpectedly solved"};
    } catch (const RankDeficientError& err) {
        nullity = err.nullity();
        named = !err.free_columns().empty();
        detail << "unpinned: rank " << err.rank() << ", nullity " << nullity;
        if (named) {
            detail << ", free column " << exact::describe_label(err.free_columns().front());
        }
    }
    const auto pinned = exact::solve_exact(examples::get_example("3.1.6").bvp);
    detail << "; pinned c=1: rank " << pinned.rank_report.rank << ", nullity " << pinned.rank_report.nullity;
    return {nullity >= 1 && named && pinned.rank_report.nullity == 0 && pinned.rank_report.rank == 9, detail.str()};
}

Outcome convergence_order() {
    const auto& bvp = examples::get_example("3.1.1").bvp;
    const auto ex = exact::solve_exact(bvp);
    auto error = [&](double h) {
        const auto num = oracle::shooting_solve(bvp, h);
        double worst = 0.0;
        for (std::size_t i = 0; i < num.grid.size(); ++i) {
            worst = std::max(worst, std::abs(num.states[i][0] - exact::eval_solution(ex, bvp, num.grid[i], 0)));
        }
        return worst;
    };
    const double coarse = error(0.1);
    const double fine = error(0.05);
    const double ratio = coarse / fine;
    return {ratio >= 12.0,
            "err(h=0.1) " + sci(coarse) + ", err(h=0.05) " + sci(fine) + ", ratio " + sci(ratio)};
}

}  // namespace

int main() {
    run(1, "Ex 3.1.1 constants", 1.0, first_example);
    run(2, "Ex 3.1.4 constants", 1.0, fourth_example);
    run(3, "Ex 3.1.2 closed form on 101 points", 0.0, second_example);
    run(4, "exact vs shooting oracle, h=1e-3, 2001 points", 10.0, oracle_equivalence);
    run(5, "invariant suite", 30.0, invariant_suite);
    run(6, "rank diagnostics on Ex 3.1.6", 0.0, rank_diagnostics);
    run(7, "RK4 convergence order", 0.0, convergence_order);
    std::printf("%d of 7 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
