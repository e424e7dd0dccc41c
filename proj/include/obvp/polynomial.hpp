#pragma once

#include <initializer_list>
#include <string>
#include <vector>

namespace obvp {

/// Real polynomial with coefficients in ascending powers. Trailing zero
/// coefficients are dropped, so the zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> coeffs);
    Polynomial(std::initializer_list<double> coeffs);

    static Polynomial constant(double value) { return Polynomial({value}); }
    static Polynomial monomial(int power, double scale = 1.0);

    const std::vector<double>& coeffs() const noexcept { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    double coefficient(int power) const noexcept;

    double operator()(double x) const noexcept;
    double derivative_at(double x, int order) const noexcept;
    Polynomial derivative(int order = 1) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(double scale);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(Polynomial lhs, double scale) { return lhs *= scale; }
    friend Polynomial operator*(double scale, Polynomial rhs) { return rhs *= scale; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Human-readable form in the variable `var`, e.g. "1 - 2*x + x^3".
    std::string to_string(const std::string& var = "x") const;

private:
    void trim();

    std::vector<double> coeffs_;
};

/// Falling factorial p (p-1) ... (p-k+1); zero when k > p.
double falling_factorial(int p, int k) noexcept;

}  // namespace obvp
