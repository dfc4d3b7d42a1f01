#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "fls/classification.hpp"
#include "fls/system.hpp"
#include "fls/verification.hpp"

namespace fls {

/// Malformed input document. The message starts with the offending field path,
/// e.g. "rhs[1].c: ...".
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// On-disk description of a system:
///
///   { "n": 2,
///     "matrix": [[1, -1], [1, 2]],
///     "rhs": [ {"type": "triangular", "a": 0, "c": 1, "b": 2},
///              {"type": "crisp", "a": 3},
///              {"type": "sampled", "grid": [0, 1], "lower": [0, 1], "upper": [2, 1]} ],
///     "grid_points": 101 }            // optional
struct SystemDocument {
    FuzzySystem system;
    std::optional<std::size_t> grid_points;

    bool operator==(const SystemDocument&) const = default;
};

SystemDocument parse_system_document(const nlohmann::json& doc);
SystemDocument parse_system_document(const std::string& text);
SystemDocument load_system_document(const std::string& path);

nlohmann::json to_json(const FuzzyNumber& u);
nlohmann::json to_json(const SystemDocument& doc);

/// Machine-readable result of a solve: verdict, solution profiles, condition
/// vector extremes and residual summary. Doubles keep full precision.
nlohmann::json result_document(const FuzzySystem& sys, const ClassificationReport& report,
                               const std::optional<ResidualReport>& residual);

}  // namespace fls
