#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace obvp {

/// Malformed or structurally invalid problem input.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Column tag of a matching system: basis constant `basis` of piece `piece`.
struct ColumnLabel {
    std::size_t piece = 0;
    std::size_t basis = 0;

    friend bool operator==(const ColumnLabel&, const ColumnLabel&) = default;
};

/// The matching system has a nontrivial null space; pinning one of
/// `free_columns` (or any column in `pin_candidates`) restores uniqueness.
class RankDeficientError : public std::runtime_error {
public:
    RankDeficientError(const std::string& what, std::size_t rank, std::size_t nullity,
                       std::vector<ColumnLabel> free_columns,
                       std::vector<ColumnLabel> pin_candidates)
        : std::runtime_error(what),
          rank_(rank),
          nullity_(nullity),
          free_columns_(std::move(free_columns)),
          pin_candidates_(std::move(pin_candidates)) {}

    std::size_t rank() const noexcept { return rank_; }
    std::size_t nullity() const noexcept { return nullity_; }
    const std::vector<ColumnLabel>& free_columns() const noexcept { return free_columns_; }
    const std::vector<ColumnLabel>& pin_candidates() const noexcept { return pin_candidates_; }

private:
    std::size_t rank_;
    std::size_t nullity_;
    std::vector<ColumnLabel> free_columns_;
    std::vector<ColumnLabel> pin_candidates_;
};

/// Overdetermined system whose least-squares residual exceeds the consistency gate.
class InconsistentSystemError : public std::runtime_error {
public:
    InconsistentSystemError(const std::string& what, double residual_norm)
        : std::runtime_error(what), residual_norm_(residual_norm) {}

    double residual_norm() const noexcept { return residual_norm_; }

private:
    double residual_norm_;
};

}  // namespace obvp
