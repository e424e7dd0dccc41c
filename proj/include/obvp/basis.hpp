#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "obvp/model.hpp"

/// Characteristic roots and real fundamental solutions of constant-coefficient
/// linear operators  L[u] = u^(n) - sum_j a_j u^(j).
namespace obvp::basis {

struct CharRoot {
    std::complex<double> value;
    int multiplicity = 1;
};

enum class BasisKind {
    PolyExp,  // x^k e^{rate x}; rate == 0 is the monomial x^k
    ExpCos,   // x^k e^{rate x} cos(frequency x)
    ExpSin,   // x^k e^{rate x} sin(frequency x)
};

struct BasisFunction {
    BasisKind kind = BasisKind::PolyExp;
    int power = 0;
    double rate = 0.0;
    double frequency = 0.0;

    static BasisFunction monomial(int k) { return {BasisKind::PolyExp, k, 0.0, 0.0}; }
    static BasisFunction poly_exp(int k, double lambda) { return {BasisKind::PolyExp, k, lambda, 0.0}; }
    static BasisFunction exp_cos(int k, double alpha, double beta) {
        return {BasisKind::ExpCos, k, alpha, beta};
    }
    static BasisFunction exp_sin(int k, double alpha, double beta) {
        return {BasisKind::ExpSin, k, alpha, beta};
    }

    friend bool operator==(const BasisFunction&, const BasisFunction&) = default;
};

inline constexpr double kDefaultClusterTol = 1e-8;

/// lambda^n - sum_j a_j lambda^j, ascending, length n + 1, leading 1.
std::vector<double> characteristic_coeffs(const model::PieceOde& piece);

/// All roots of a monic polynomial of degree 2..4 (ascending coefficients),
/// clustered into multiplicities, with conjugate pairs made exactly symmetric.
/// Throws InputError for an unsupported degree or non-monic input and
/// std::runtime_error if the eigenvalue iteration does not converge.
std::vector<CharRoot> find_roots(std::span<const double> coeffs,
                                 double cluster_tol = kDefaultClusterTol);

/// Exactly sum(multiplicity) real basis functions, ordered by ascending real
/// part, then kind, then frequency, then power.
std::vector<BasisFunction> real_basis(std::span<const CharRoot> roots);

/// d^k/dx^k of the basis function at x, from the closed-form expansion.
double eval_basis(const BasisFunction& fn, double x, int deriv_order);

/// Basis of the homogeneous operator of `piece`.
std::vector<BasisFunction> piece_basis(const model::PieceOde& piece,
                                       double cluster_tol = kDefaultClusterTol);

std::string describe(const BasisFunction& fn);

}  // namespace obvp::basis
