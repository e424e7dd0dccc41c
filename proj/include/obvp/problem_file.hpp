#pragma once

#include <string>

#include "json.hpp"
#include "obvp/model.hpp"

/// JSON problem files: order, pieces, conditions, continuity, pins.
namespace obvp::cli {

/// Parses and validates. Unknown keys, wrong types and invalid problems
/// raise InputError.
model::PiecewiseBvp parse_problem(const nlohmann::json& doc);
model::PiecewiseBvp parse_problem_text(const std::string& text);
model::PiecewiseBvp load_problem(const std::string& path);

/// Pieces are written with sign 1 (coefficients already normalized).
nlohmann::json problem_to_json(const model::PiecewiseBvp& bvp);
std::string export_problem(const model::PiecewiseBvp& bvp);
void save_problem(const std::string& path, const model::PiecewiseBvp& bvp);

}  // namespace obvp::cli
