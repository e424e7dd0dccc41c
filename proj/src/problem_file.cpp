#include "obvp/problem_file.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include "obvp/errors.hpp"

namespace obvp::cli {

namespace {

using nlohmann::json;

void check_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) {
        throw InputError(where + ": expected an object");
    }
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed) {
            known = known || item.key() == key;
        }
        if (!known) {
            throw InputError(where + ": unknown key '" + item.key() + "'");
        }
    }
}

const json& field(const json& obj, const std::string& where, const char* key) {
    if (!obj.contains(key)) {
        throw InputError(where + ": missing '" + key + "'");
    }
    return obj.at(key);
}

double number(const json& v, const std::string& where) {
    if (!v.is_number()) {
        throw InputError(where + ": expected a number");
    }
    return v.get<double>();
}

int integer(const json& v, const std::string& where) {
    if (!v.is_number_integer()) {
        throw InputError(where + ": expected an integer");
    }
    return v.get<int>();
}

std::vector<double> numbers(const json& v, const std::string& where) {
    if (!v.is_array()) {
        throw InputError(where + ": expected an array of numbers");
    }
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out.push_back(number(v[i], where + "[" + std::to_string(i) + "]"));
    }
    return out;
}

const json& array(const json& v, const std::string& where) {
    if (!v.is_array()) {
        throw InputError(where + ": expected an array");
    }
    return v;
}

}  // namespace

model::PiecewiseBvp parse_problem(const json& doc) {
    check_keys(doc, "problem", {"order", "pieces", "conditions", "continuity", "pins", "condition_side"});
    model::PiecewiseBvp bvp;
    bvp.order = integer(field(doc, "problem", "order"), "order");
    if (bvp.order < model::kMinOrder || bvp.order > model::kMaxOrder) {
        throw InputError("order must be in 2..4");
    }

    const auto& pieces = array(field(doc, "problem", "pieces"), "pieces");
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const std::string where = "pieces[" + std::to_string(i) + "]";
        const auto& p = pieces[i];
        check_keys(p, where, {"interval", "sign", "coeffs", "forcing"});
        const auto iv = numbers(field(p, where, "interval"), where + ".interval");
        if (iv.size() != 2) {
            throw InputError(where + ".interval: expected [lo, hi]");
        }
        const int sign = p.contains("sign") ? integer(p.at("sign"), where + ".sign") : 1;
        auto coeffs = numbers(field(p, where, "coeffs"), where + ".coeffs");
        auto forcing = p.contains("forcing") ? numbers(p.at("forcing"), where + ".forcing")
                                             : std::vector<double>{};
        if (static_cast<int>(coeffs.size()) > bvp.order) {
            throw InputError(where + ".coeffs: more than order entries");
        }
        bvp.pieces.push_back(model::normalize_piece(sign, std::move(coeffs), Polynomial(std::move(forcing)),
                                                    {iv[0], iv[1]}, bvp.order));
    }

    if (doc.contains("conditions")) {
        const auto& conds = array(doc.at("conditions"), "conditions");
        for (std::size_t i = 0; i < conds.size(); ++i) {
            const std::string where = "conditions[" + std::to_string(i) + "]";
            check_keys(conds[i], where, {"x", "deriv", "value"});
            bvp.conditions.push_back({number(field(conds[i], where, "x"), where + ".x"),
                                      integer(field(conds[i], where, "deriv"), where + ".deriv"),
                                      number(field(conds[i], where, "value"), where + ".value")});
        }
    }

    if (doc.contains("continuity")) {
        const auto& cont = array(doc.at("continuity"), "continuity");
        for (std::size_t i = 0; i < cont.size(); ++i) {
            bvp.continuity.enforced_orders.push_back(integer(cont[i], "continuity[" + std::to_string(i) + "]"));
        }
    } else {
        bvp.continuity = model::ContinuitySpec::all_orders(bvp.order);
    }

    if (doc.contains("pins")) {
        const auto& pins = array(doc.at("pins"), "pins");
        for (std::size_t i = 0; i < pins.size(); ++i) {
            const std::string where = "pins[" + std::to_string(i) + "]";
            check_keys(pins[i], where, {"piece", "basis", "value"});
            const int piece = integer(field(pins[i], where, "piece"), where + ".piece");
            const int basis = integer(field(pins[i], where, "basis"), where + ".basis");
            if (piece < 0 || basis < 0) {
                throw InputError(where + ": negative index");
            }
            bvp.pins.push_back({static_cast<std::size_t>(piece), static_cast<std::size_t>(basis),
                                number(field(pins[i], where, "value"), where + ".value")});
        }
    }

    if (doc.contains("condition_side")) {
        const auto& side = doc.at("condition_side");
        if (side == "left") {
            bvp.condition_side = model::ConditionSide::Left;
        } else if (side == "right") {
            bvp.condition_side = model::ConditionSide::Right;
        } else {
            throw InputError("condition_side: expected \"left\" or \"right\"");
        }
    }

    model::require_valid(bvp);
    return bvp;
}

model::PiecewiseBvp parse_problem_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed problem file: ") + e.what());
    }
    return parse_problem(doc);
}

model::PiecewiseBvp load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem_text(buf.str());
}

json problem_to_json(const model::PiecewiseBvp& bvp) {
    json doc;
    doc["order"] = bvp.order;
    doc["pieces"] = json::array();
    for (const auto& p : bvp.pieces) {
        doc["pieces"].push_back({{"interval", {p.interval.lo, p.interval.hi}},
                                 {"sign", 1},
                                 {"coeffs", p.coeffs},
                                 {"forcing", p.forcing.coeffs()}});
    }
    doc["conditions"] = json::array();
    for (const auto& c : bvp.conditions) {
        doc["conditions"].push_back({{"x", c.location}, {"deriv", c.deriv_order}, {"value", c.value}});
    }
    doc["continuity"] = bvp.continuity.enforced_orders;
    doc["pins"] = json::array();
    for (const auto& pin : bvp.pins) {
        doc["pins"].push_back({{"piece", pin.piece_index}, {"basis", pin.basis_index}, {"value", pin.value}});
    }
    doc["condition_side"] = bvp.condition_side == model::ConditionSide::Left ? "left" : "right";
    return doc;
}

std::string export_problem(const model::PiecewiseBvp& bvp) { return problem_to_json(bvp).dump(2) + "\n"; }

void save_problem(const std::string& path, const model::PiecewiseBvp& bvp) {
    std::ofstream out(path);
    if (!out) {
        throw InputError("cannot write '" + path + "'");
    }
    out << export_problem(bvp);
}

}  // namespace obvp::cli
