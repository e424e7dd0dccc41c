#include "obvp/basis.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace obvp::basis {

namespace {

using cd = std::complex<double>;

std::string poly_text(std::span<const double> coeffs) {
    return Polynomial(std::vector<double>(coeffs.begin(), coeffs.end())).to_string("lambda");
}

std::vector<cd> quadratic_roots(double c0, double c1) {
    // lambda^2 + c1 lambda + c0
    const double disc = c1 * c1 - 4.0 * c0;
    if (disc >= 0.0) {
        const double t = -0.5 * (c1 + std::copysign(std::sqrt(disc), c1));
        if (t == 0.0) {
            return {cd(0.0), cd(0.0)};
        }
        return {cd(t), cd(c0 / t)};
    }
    const double alpha = -0.5 * c1;
    const double beta = 0.5 * std::sqrt(-disc);
    return {cd(alpha, beta), cd(alpha, -beta)};
}

std::vector<cd> companion_roots(std::span<const double> coeffs) {
    const auto n = static_cast<Eigen::Index>(coeffs.size() - 1);
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 1; i < n; ++i) {
        companion(i, i - 1) = 1.0;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        companion(i, n - 1) = -coeffs[static_cast<std::size_t>(i)];
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("root finder did not converge for " + poly_text(coeffs));
    }
    std::vector<cd> out;
    for (Eigen::Index i = 0; i < n; ++i) {
        out.push_back(solver.eigenvalues()(i));
    }
    return out;
}

cd horner(std::span<const double> coeffs, cd z) {
    cd acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

cd horner_derivative(std::span<const double> coeffs, cd z) {
    cd acc = 0.0;
    for (std::size_t p = coeffs.size() - 1; p >= 1; --p) {
        acc = acc * z + coeffs[p] * static_cast<double>(p);
    }
    return acc;
}

struct Cluster {
    cd sum;
    int count = 0;
    cd mean() const { return sum / static_cast<double>(count); }
};

double scale_of(cd z) { return std::max(1.0, std::abs(z)); }

}  // namespace

std::vector<double> characteristic_coeffs(const model::PieceOde& piece) {
    std::vector<double> c(static_cast<std::size_t>(piece.order) + 1, 0.0);
    for (std::size_t j = 0; j < piece.coeffs.size() && j < c.size() - 1; ++j) {
        c[j] = -piece.coeffs[j];
    }
    c.back() = 1.0;
    return c;
}

std::vector<CharRoot> find_roots(std::span<const double> coeffs, double cluster_tol) {
    if (coeffs.size() < 3 || coeffs.size() > 5) {
        throw InputError("find_roots supports degree 2..4, got degree " +
                         std::to_string(static_cast<int>(coeffs.size()) - 1));
    }
    if (coeffs.back() != 1.0) {
        throw InputError("find_roots expects a monic polynomial: " + poly_text(coeffs));
    }
    std::vector<cd> raw =
        coeffs.size() == 3 ? quadratic_roots(coeffs[0], coeffs[1]) : companion_roots(coeffs);
    for (const cd& z : raw) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw std::runtime_error("root finder produced a non-finite root for " +
                                     poly_text(coeffs));
        }
    }

    // Greedy clustering on the raw roots.
    std::vector<Cluster> clusters;
    for (const cd& z : raw) {
        auto hit = std::find_if(clusters.begin(), clusters.end(), [&](const Cluster& c) {
            return std::abs(c.mean() - z) <= cluster_tol * scale_of(z);
        });
        if (hit == clusters.end()) {
            clusters.push_back({z, 1});
        } else {
            hit->sum += z;
            ++hit->count;
        }
    }

    // Eigenvalues split a double root by roughly sqrt(eps), which exceeds the
    // clustering tolerance. Merge a close pair when its midpoint also
    // annihilates the derivative.
    const double coeff_scale =
        std::accumulate(coeffs.begin(), coeffs.end(), 0.0,
                        [](double acc, double c) { return std::max(acc, std::abs(c)); });
    for (bool merged = true; merged;) {
        merged = false;
        for (std::size_t i = 0; i < clusters.size() && !merged; ++i) {
            for (std::size_t j = i + 1; j < clusters.size() && !merged; ++j) {
                const cd zi = clusters[i].mean();
                const cd zj = clusters[j].mean();
                if (std::abs(zi - zj) > 1e-4 * scale_of(zi)) {
                    continue;
                }
                const cd mid = (zi * static_cast<double>(clusters[i].count) +
                                zj * static_cast<double>(clusters[j].count)) /
                               static_cast<double>(clusters[i].count + clusters[j].count);
                if (std::abs(horner_derivative(coeffs, mid)) <= 1e-9 * coeff_scale * scale_of(mid) &&
                    std::abs(horner(coeffs, mid)) <= 1e-9 * coeff_scale * scale_of(mid)) {
                    clusters[i].sum += clusters[j].sum;
                    clusters[i].count += clusters[j].count;
                    clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(j));
                    merged = true;
                }
            }
        }
    }

    std::vector<CharRoot> reals;
    std::vector<CharRoot> upper;
    std::vector<CharRoot> lower;
    for (const auto& c : clusters) {
        const cd z = c.mean();
        if (std::abs(z.imag()) <= cluster_tol * scale_of(z)) {
            reals.push_back({cd(z.real(), 0.0), c.count});
        } else if (z.imag() > 0) {
            upper.push_back({z, c.count});
        } else {
            lower.push_back({z, c.count});
        }
    }
    if (upper.size() != lower.size()) {
        throw std::runtime_error("unpaired complex root for " + poly_text(coeffs));
    }

    std::vector<CharRoot> out = reals;
    std::vector<bool> used(lower.size(), false);
    for (const auto& u : upper) {
        std::size_t best = lower.size();
        double best_dist = 0.0;
        for (std::size_t k = 0; k < lower.size(); ++k) {
            if (used[k] || lower[k].multiplicity != u.multiplicity) {
                continue;
            }
            const double dist = std::abs(std::conj(lower[k].value) - u.value);
            if (best == lower.size() || dist < best_dist) {
                best = k;
                best_dist = dist;
            }
        }
        if (best == lower.size()) {
            throw std::runtime_error("unpaired complex root for " + poly_text(coeffs));
        }
        used[best] = true;
        const double alpha = 0.5 * (u.value.real() + lower[best].value.real());
        const double beta = 0.5 * (u.value.imag() - lower[best].value.imag());
        out.push_back({cd(alpha, beta), u.multiplicity});
        out.push_back({cd(alpha, -beta), u.multiplicity});
    }
    std::sort(out.begin(), out.end(), [](const CharRoot& l, const CharRoot& r) {
        return std::tuple(l.value.real(), l.value.imag()) < std::tuple(r.value.real(), r.value.imag());
    });
    return out;
}

std::vector<BasisFunction> real_basis(std::span<const CharRoot> roots) {
    std::vector<BasisFunction> out;
    std::vector<const CharRoot*> negatives;
    for (const auto& r : roots) {
        if (r.multiplicity < 1) {
            throw std::logic_error("root multiplicity must be positive");
        }
        if (r.value.imag() == 0.0) {
            for (int k = 0; k < r.multiplicity; ++k) {
                out.push_back(BasisFunction::poly_exp(k, r.value.real()));
            }
        } else if (r.value.imag() > 0.0) {
            for (int k = 0; k < r.multiplicity; ++k) {
                out.push_back(BasisFunction::exp_cos(k, r.value.real(), r.value.imag()));
                out.push_back(BasisFunction::exp_sin(k, r.value.real(), r.value.imag()));
            }
        } else {
            negatives.push_back(&r);
        }
    }
    // Every lower-half-plane root needs an exact conjugate partner.
    for (const CharRoot* neg : negatives) {
        const auto partner = std::find_if(roots.begin(), roots.end(), [&](const CharRoot& r) {
            return r.value == std::conj(neg->value) && r.multiplicity == neg->multiplicity;
        });
        if (partner == roots.end()) {
            throw std::logic_error("unpaired complex root in real_basis");
        }
    }
    const std::size_t expected_count = std::accumulate(
        roots.begin(), roots.end(), std::size_t{0},
        [](std::size_t acc, const CharRoot& r) { return acc + static_cast<std::size_t>(r.multiplicity); });
    if (out.size() != expected_count) {
        throw std::logic_error("unpaired complex root in real_basis");
    }
    std::sort(out.begin(), out.end(), [](const BasisFunction& l, const BasisFunction& r) {
        return std::tuple(l.rate, static_cast<int>(l.kind), l.frequency, l.power) <
               std::tuple(r.rate, static_cast<int>(r.kind), r.frequency, r.power);
    });
    return out;
}

double eval_basis(const BasisFunction& fn, double x, int deriv_order) {
    if (deriv_order < 0) {
        throw InputError("negative derivative order");
    }
    // Leibniz on x^k * e^{z x}:
    //   sum_i C(d, i) k!/(k-i)! x^{k-i} z^{d-i} e^{z x}
    const cd z = fn.kind == BasisKind::PolyExp ? cd(fn.rate, 0.0) : cd(fn.rate, fn.frequency);
    cd acc = 0.0;
    double binom = 1.0;
    for (int i = 0; i <= std::min(deriv_order, fn.power); ++i) {
        if (i > 0) {
            binom = binom * static_cast<double>(deriv_order - i + 1) / static_cast<double>(i);
        }
        const double poly_part = falling_factorial(fn.power, i) * std::pow(x, fn.power - i);
        acc += binom * poly_part * std::pow(z, deriv_order - i);
    }
    const cd value = acc * std::exp(z * x);
    switch (fn.kind) {
        case BasisKind::PolyExp: return value.real();
        case BasisKind::ExpCos: return value.real();
        case BasisKind::ExpSin: return value.imag();
    }
    return 0.0;
}

std::vector<BasisFunction> piece_basis(const model::PieceOde& piece, double cluster_tol) {
    const auto coeffs = characteristic_coeffs(piece);
    const auto roots = find_roots(coeffs, cluster_tol);
    return real_basis(roots);
}

std::string describe(const BasisFunction& fn) {
    std::ostringstream os;
    os.precision(10);
    std::string sep;
    if (fn.power > 0) {
        os << "x";
        if (fn.power > 1) {
            os << "^" << fn.power;
        }
        sep = "*";
    }
    if (fn.rate != 0.0) {
        os << sep << "exp(" << fn.rate << "*x)";
        sep = "*";
    }
    if (fn.kind == BasisKind::ExpCos) {
        os << sep << "cos(" << fn.frequency << "*x)";
    } else if (fn.kind == BasisKind::ExpSin) {
        os << sep << "sin(" << fn.frequency << "*x)";
    }
    const std::string s = os.str();
    return s.empty() ? "1" : s;
}

}  // namespace obvp::basis
