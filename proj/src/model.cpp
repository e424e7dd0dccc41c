#include "obvp/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace obvp::model {

ContinuitySpec ContinuitySpec::all_orders(int order) {
    ContinuitySpec spec;
    for (int j = 0; j < order; ++j) {
        spec.enforced_orders.push_back(j);
    }
    return spec;
}

bool ContinuitySpec::enforces(int deriv_order) const {
    return std::find(enforced_orders.begin(), enforced_orders.end(), deriv_order) !=
           enforced_orders.end();
}

std::vector<double> PiecewiseBvp::breakpoints() const {
    std::vector<double> out;
    out.reserve(pieces.size() + 1);
    for (const auto& p : pieces) {
        out.push_back(p.interval.lo);
    }
    if (!pieces.empty()) {
        out.push_back(pieces.back().interval.hi);
    }
    return out;
}

PieceOde normalize_piece(int sign, std::vector<double> raw_coeffs, Polynomial raw_forcing,
                         Interval interval, int order) {
    if (order < kMinOrder || order > kMaxOrder) {
        throw InputError("unsupported order " + std::to_string(order) + " (expected 2..4)");
    }
    if (sign != 1 && sign != -1) {
        throw InputError("leading sign must be +1 or -1, got " + std::to_string(sign));
    }
    if (!std::isfinite(interval.lo) || !std::isfinite(interval.hi) || !(interval.lo < interval.hi)) {
        std::ostringstream os;
        os << "degenerate interval [" << interval.lo << ", " << interval.hi << "]";
        throw InputError(os.str());
    }
    if (raw_coeffs.size() > static_cast<std::size_t>(order)) {
        throw InputError("piece has " + std::to_string(raw_coeffs.size()) +
                         " coefficients, order " + std::to_string(order) + " allows at most " +
                         std::to_string(order));
    }
    raw_coeffs.resize(static_cast<std::size_t>(order), 0.0);
    if (sign == -1) {
        for (double& c : raw_coeffs) {
            c = -c;
        }
        raw_forcing = -raw_forcing;
    }
    return PieceOde{order, interval, std::move(raw_coeffs), std::move(raw_forcing)};
}

std::string to_string(Determinacy d) {
    switch (d) {
        case Determinacy::Square: return "square";
        case Determinacy::Overdetermined: return "overdetermined";
        case Determinacy::Underdetermined: return "underdetermined";
    }
    return "unknown";
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    os << unknowns << " unknowns, " << equations << " equations";
    if (pins > 0) {
        os << " + " << pins << " pins";
    }
    os << " (" << to_string(determinacy) << ")";
    for (const auto& issue : issues) {
        os << "\n  - " << issue;
    }
    return os.str();
}

namespace {

bool all_finite(const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

}  // namespace

ValidationReport validate_bvp(const PiecewiseBvp& bvp) {
    ValidationReport report;
    auto issue = [&report](std::string msg) { report.issues.push_back(std::move(msg)); };
    const int n = bvp.order;

    if (n < kMinOrder || n > kMaxOrder) {
        issue("order " + std::to_string(n) + " outside 2..4");
    }
    if (bvp.pieces.empty()) {
        issue("problem has no pieces");
    }
    if (bvp.pieces.size() > kMaxPieces) {
        issue("problem has " + std::to_string(bvp.pieces.size()) + " pieces (max 16)");
    }

    for (std::size_t k = 0; k < bvp.pieces.size(); ++k) {
        const auto& p = bvp.pieces[k];
        const std::string where = "piece " + std::to_string(k) + ": ";
        if (p.order != n) {
            issue(where + "order " + std::to_string(p.order) + " differs from problem order " +
                  std::to_string(n));
        }
        if (p.coeffs.size() != static_cast<std::size_t>(n)) {
            issue(where + "expected " + std::to_string(n) + " coefficients, got " +
                  std::to_string(p.coeffs.size()));
        }
        if (!all_finite(p.coeffs) || !all_finite(p.forcing.coeffs())) {
            issue(where + "non-finite coefficient");
        }
        if (!std::isfinite(p.interval.lo) || !std::isfinite(p.interval.hi) ||
            !(p.interval.lo < p.interval.hi)) {
            issue(where + "interval is empty or reversed");
        }
        if (p.forcing.degree() > kMaxForcingDegree) {
            issue(where + "forcing degree " + std::to_string(p.forcing.degree()) + " exceeds 6");
        }
        if (k + 1 < bvp.pieces.size() && p.interval.hi != bvp.pieces[k + 1].interval.lo) {
            std::ostringstream os;
            os << "pieces " << k << " and " << k + 1 << " are not contiguous (" << p.interval.hi
               << " != " << bvp.pieces[k + 1].interval.lo << ")";
            issue(os.str());
        }
    }

    const bool have_domain = !bvp.pieces.empty();
    for (std::size_t i = 0; i < bvp.conditions.size(); ++i) {
        const auto& c = bvp.conditions[i];
        const std::string where = "condition " + std::to_string(i) + ": ";
        if (c.deriv_order < 0 || c.deriv_order >= n) {
            issue(where + "derivative order " + std::to_string(c.deriv_order) + " not in [0, n-1]");
        }
        if (!std::isfinite(c.value) || !std::isfinite(c.location)) {
            issue(where + "non-finite location or value");
        } else if (have_domain && (c.location < bvp.lower() || c.location > bvp.upper())) {
            std::ostringstream os;
            os << where << "location " << c.location << " outside [" << bvp.lower() << ", "
               << bvp.upper() << "]";
            issue(os.str());
        }
    }

    if (bvp.continuity.enforced_orders.empty()) {
        issue("continuity spec is empty");
    }
    std::set<int> seen;
    for (int j : bvp.continuity.enforced_orders) {
        if (j < 0 || j >= n) {
            issue("continuity order " + std::to_string(j) + " not in [0, n-1]");
        }
        if (!seen.insert(j).second) {
            issue("continuity order " + std::to_string(j) + " listed twice");
        }
    }

    for (std::size_t i = 0; i < bvp.pins.size(); ++i) {
        const auto& pin = bvp.pins[i];
        const std::string where = "pin " + std::to_string(i) + ": ";
        if (pin.piece_index >= bvp.pieces.size()) {
            issue(where + "piece index " + std::to_string(pin.piece_index) + " out of range");
        }
        if (pin.basis_index >= static_cast<std::size_t>(std::max(n, 0))) {
            issue(where + "basis index " + std::to_string(pin.basis_index) + " out of range");
        }
        if (!std::isfinite(pin.value)) {
            issue(where + "non-finite value");
        }
    }

    const std::size_t pieces = bvp.pieces.size();
    report.unknowns = static_cast<std::size_t>(std::max(n, 0)) * pieces;
    report.equations = bvp.conditions.size() +
                       bvp.continuity.enforced_orders.size() * (pieces > 0 ? pieces - 1 : 0);
    report.pins = bvp.pins.size();
    const std::size_t rows = report.equations + report.pins;
    report.determinacy = rows == report.unknowns  ? Determinacy::Square
                         : rows > report.unknowns ? Determinacy::Overdetermined
                                                  : Determinacy::Underdetermined;
    return report;
}

void require_valid(const PiecewiseBvp& bvp) {
    auto report = validate_bvp(bvp);
    if (!report.ok()) {
        std::string msg = "invalid problem:";
        for (const auto& i : report.issues) {
            msg += "\n  - " + i;
        }
        throw InputError(msg);
    }
}

namespace {

void require_in_domain(const PiecewiseBvp& bvp, double x) {
    if (bvp.pieces.empty() || !(x >= bvp.lower() && x <= bvp.upper())) {
        std::ostringstream os;
        os << "x = " << x << " outside the problem domain";
        if (!bvp.pieces.empty()) {
            os << " [" << bvp.lower() << ", " << bvp.upper() << "]";
        }
        throw InputError(os.str());
    }
}

std::size_t right_owner(const PiecewiseBvp& bvp, double x) {
    // Last piece whose lower end is <= x.
    std::size_t k = 0;
    while (k + 1 < bvp.pieces.size() && bvp.pieces[k + 1].interval.lo <= x) {
        ++k;
    }
    return k;
}

}  // namespace

std::size_t evaluation_piece(const PiecewiseBvp& bvp, double x) {
    require_in_domain(bvp, x);
    return right_owner(bvp, x);
}

std::size_t condition_piece(const PiecewiseBvp& bvp, double x) {
    require_in_domain(bvp, x);
    std::size_t k = right_owner(bvp, x);
    if (bvp.condition_side == ConditionSide::Left && k > 0 && bvp.pieces[k].interval.lo == x) {
        --k;
    }
    return k;
}

PiecewiseBvp build_obstacle_problem(int order, const ObstacleForm& form, const Breakpoints& at,
                                    std::vector<PointCondition> conditions) {
    if (!(at.a < at.c && at.c < at.d && at.d < at.b)) {
        std::ostringstream os;
        os << "breakpoints must satisfy a < c < d < b, got " << at.a << ", " << at.c << ", "
           << at.d << ", " << at.b;
        throw InputError(os.str());
    }
    if (form.g_coupling.size() > static_cast<std::size_t>(std::max(order, 0))) {
        throw InputError("g coupling has more terms than the order allows");
    }
    std::vector<double> outer = form.g_coupling;
    outer.resize(static_cast<std::size_t>(std::max(order, 0)), 0.0);
    std::vector<double> middle = outer;
    if (!middle.empty()) {
        middle[0] += form.f;
    }
    const Polynomial middle_forcing = form.g + Polynomial::constant(form.r);

    PiecewiseBvp bvp;
    bvp.order = order;
    bvp.pieces.push_back(normalize_piece(form.sign, outer, form.g, {at.a, at.c}, order));
    bvp.pieces.push_back(normalize_piece(form.sign, middle, middle_forcing, {at.c, at.d}, order));
    bvp.pieces.push_back(normalize_piece(form.sign, outer, form.g, {at.d, at.b}, order));
    bvp.conditions = std::move(conditions);
    bvp.continuity = ContinuitySpec::all_orders(order);
    return bvp;
}

PiecewiseBvp build_second_order(const ObstacleForm& form, const Breakpoints& at,
                                std::vector<PointCondition> conditions) {
    return build_obstacle_problem(2, form, at, std::move(conditions));
}

PiecewiseBvp build_third_order(const ObstacleForm& form, const Breakpoints& at,
                               std::vector<PointCondition> conditions) {
    return build_obstacle_problem(3, form, at, std::move(conditions));
}

PiecewiseBvp build_fourth_order(const ObstacleForm& form, const Breakpoints& at,
                                std::vector<PointCondition> conditions) {
    return build_obstacle_problem(4, form, at, std::move(conditions));
}

std::string describe(const PieceOde& piece) {
    std::ostringstream os;
    os.precision(10);
    os << "u";
    for (int i = 0; i < piece.order; ++i) {
        os << "'";
    }
    os << " =";
    bool any = false;
    for (std::size_t j = 0; j < piece.coeffs.size(); ++j) {
        const double a = piece.coeffs[j];
        if (a == 0.0) {
            continue;
        }
        os << (any ? (a < 0 ? " - " : " + ") : (a < 0 ? " -" : " "));
        if (std::abs(a) != 1.0) {
            os << std::abs(a) << "*";
        }
        os << "u" << std::string(j, '\'');
        any = true;
    }
    if (!piece.forcing.is_zero()) {
        const std::string q = piece.forcing.to_string();
        if (any) {
            if (q.front() == '-') {
                os << " - " << q.substr(1);
            } else {
                os << " + " << q;
            }
        } else {
            os << " " << q;
        }
        any = true;
    }
    if (!any) {
        os << " 0";
    }
    return os.str();
}

}  // namespace obvp::model
