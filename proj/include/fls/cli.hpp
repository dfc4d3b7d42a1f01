#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "fls/classification.hpp"
#include "fls/solver.hpp"

namespace fls::cli {

inline constexpr int kExitStrong = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitWeak = 2;
inline constexpr int kExitSingular = 3;

int exit_code(Verdict v) noexcept;

struct CommandOptions {
    std::string input_path;
    std::optional<std::string> output_path;
    std::optional<std::size_t> grid_points;  // --grid
    bool strict = false;                     // require monotone components for Strong
};

/// Number of r-levels: --grid, then the document's grid_points, then the
/// FLS_GRID_POINTS environment variable, then 101.
std::size_t resolve_grid_points(std::optional<std::size_t> flag,
                                std::optional<std::size_t> document);

/// One row per level: r, x1_lower, x1_upper, ..., fixed 10-decimal format.
std::string format_plot_data(const SolutionCandidate& candidate, const RGrid& grid);

int cmd_solve(const CommandOptions& opts, std::ostream& out, std::ostream& err);
int cmd_classify(const CommandOptions& opts, std::ostream& out, std::ostream& err);
int cmd_plot_data(const CommandOptions& opts, std::ostream& out, std::ostream& err);

/// Full `fls` command line, including argument parsing.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fls::cli
