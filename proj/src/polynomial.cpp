#include "obvp/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace obvp {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<double> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::monomial(int power, double scale) {
    std::vector<double> c(static_cast<std::size_t>(power) + 1, 0.0);
    c.back() = scale;
    return Polynomial(std::move(c));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0.0) {
        coeffs_.pop_back();
    }
}

double Polynomial::coefficient(int power) const noexcept {
    if (power < 0 || power > degree()) {
        return 0.0;
    }
    return coeffs_[static_cast<std::size_t>(power)];
}

double Polynomial::operator()(double x) const noexcept {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

double falling_factorial(int p, int k) noexcept {
    if (k > p) {
        return 0.0;
    }
    double r = 1.0;
    for (int i = 0; i < k; ++i) {
        r *= static_cast<double>(p - i);
    }
    return r;
}

double Polynomial::derivative_at(double x, int order) const noexcept {
    double acc = 0.0;
    for (int p = degree(); p >= order; --p) {
        acc = acc * x + coeffs_[static_cast<std::size_t>(p)] * falling_factorial(p, order);
    }
    return acc;
}

Polynomial Polynomial::derivative(int order) const {
    if (order > degree()) {
        return {};
    }
    std::vector<double> c;
    c.reserve(static_cast<std::size_t>(degree() - order + 1));
    for (int p = order; p <= degree(); ++p) {
        c.push_back(coeffs_[static_cast<std::size_t>(p)] * falling_factorial(p, order));
    }
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (double& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size(), 0.0);
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial& Polynomial::operator*=(double scale) {
    for (double& c : coeffs_) {
        c *= scale;
    }
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) {
        return {};
    }
    std::vector<double> c(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            c[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return Polynomial(std::move(c));
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    os.precision(10);
    bool first = true;
    for (int p = 0; p <= degree(); ++p) {
        double c = coeffs_[static_cast<std::size_t>(p)];
        if (c == 0.0) {
            continue;
        }
        if (first) {
            if (c < 0) {
                os << "-";
            }
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        double a = std::abs(c);
        if (p == 0) {
            os << a;
        } else {
            if (a != 1.0) {
                os << a << "*";
            }
            os << var;
            if (p > 1) {
                os << "^" << p;
            }
        }
        first = false;
    }
    return os.str();
}

}  // namespace obvp
