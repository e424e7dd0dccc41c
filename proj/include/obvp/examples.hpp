#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "obvp/errors.hpp"
#include "obvp/model.hpp"

/// Built-in registry of the worked obstacle problems.
namespace obvp::examples {

/// A constant printed in closed form for a worked example, tied to the
/// solver's (piece, basis) column it corresponds to.
struct PrintedConstant {
    std::string name;
    ColumnLabel column;
    double value = 0.0;
};

struct ExampleEntry {
    std::string id;
    std::string description;
    model::PiecewiseBvp bvp;
    model::ContinuitySpec printed_continuity;
    /// Printed closed form u(x), when simple enough to trust.
    std::function<double(double)> reference;
    std::vector<PrintedConstant> printed_constants;
    /// True when the printed constants are a reliable target (not just logged).
    bool constants_trusted = false;
    std::vector<std::string> notes;
    /// The printed material is internally inconsistent.
    bool flagged = false;
    bool oracle_excluded = false;
    /// Solvable stand-in when the printed conditions cannot all hold.
    std::optional<model::PiecewiseBvp> consistent_variant;

    bool has_reference() const { return static_cast<bool>(reference); }
};

struct ExampleSummary {
    std::string id;
    std::string description;
    bool has_reference = false;
    bool flagged = false;
};

/// Throws InputError for an unknown id.
const ExampleEntry& get_example(const std::string& id);

/// Registry order: 3.1.1 .. 3.1.8, eq11.
std::vector<ExampleSummary> list_examples();

/// Printed closed form at each x. Throws InputError if `id` has none.
std::vector<double> reference_values(const std::string& id, std::span<const double> xs);

/// Penalty system on the reference obstacle with u(0) = 0, u'(1) = 0.
model::PiecewiseBvp eq11_consistent(double force = 0.0);

}  // namespace obvp::examples
