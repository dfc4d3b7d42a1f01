#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "fls/fuzzy_number.hpp"
#include "fls/solver.hpp"
#include "fls/system.hpp"

namespace fls {

/// Componentwise bound for (B + C)^{-1}(lower - upper) <= 0. A zero component
/// satisfies it and yields a crisp solution component.
inline constexpr double kStrongConditionTolerance = 1e-9;

/// Inverse entries above this count as nonnegative.
inline constexpr double kNonnegativeInverseTolerance = -1e-10;

enum class Verdict { Strong, Weak, Singular };

std::string_view to_string(Verdict v) noexcept;

/// (B + C)^{-1} (lower - upper) at one level; equals lower - upper of the solution.
struct LevelVector {
    double r;
    std::vector<double> values;
};

struct StrongConditionResult {
    bool holds = false;
    std::vector<LevelVector> vectors;  // one per checked level

    /// Componentwise max/min over all levels.
    std::vector<double> max_components() const;
    std::vector<double> min_components() const;
};

/// Evaluates the right-hand-side dependent strong-solution condition on every
/// working level. For an affine rhs only the endpoint levels are solved and the
/// remaining levels interpolated (the spread is affine in r).
/// Throws SingularMatrixError if B + C is singular.
StrongConditionResult strong_condition(const FuzzySystem& sys, const RGrid& grid,
                                       const LinSolveConfig& cfg = {});

struct MonomialCheck {
    bool flag = false;              // B + C nonsingular with entrywise nonnegative inverse
    double inverse_min_entry = 0.0; // NaN when B + C is singular
    bool structural = false;        // exactly one nonzero per row and column of B + C

    bool agrees() const noexcept { return flag == structural; }
};

/// Detects the case where every right-hand side gives a strong solution.
MonomialCheck is_monomial_case(const CrispMatrix& a, const LinSolveConfig& cfg = {});

struct VariableViolation {
    std::size_t variable;  // 0-based
    double witness_r;
    double lower;
    double upper;
};

struct ComponentValidity {
    std::size_t variable;
    ValidityReport report;
};

struct ClassificationDetails {
    StrongConditionResult condition;
    std::vector<VariableViolation> violating_variables;
    std::vector<ComponentValidity> definition1_violations;  // only invalid components
    MonomialCheck monomial;
    SolutionCandidate candidate;
};

struct ClassificationReport {
    Verdict verdict = Verdict::Singular;
    NonsingularityCheck nonsingularity;
    std::optional<ClassificationDetails> details;  // absent when Singular

    /// Strong, and every component also has monotone profiles.
    bool fuzzy_components() const noexcept {
        return verdict == Verdict::Strong && details && details->definition1_violations.empty();
    }
};

struct ClassifyOptions {
    LinSolveConfig linsolve{};
    /// Also demand monotone lower/upper profiles of each component for Strong.
    /// Off by default: Strong then means nonsingular S plus the spread condition.
    bool require_fuzzy_components = false;
    double validity_tolerance = kValidityTolerance;
};

ClassificationReport classify(const FuzzySystem& sys, const RGrid& grid,
                              const ClassifyOptions& options = {});

/// Spread inequalities of the 2x2 worked example x1 - x2 = b1, x1 + 2 x2 = b2.
struct WorkedExampleConditions {
    bool second_spread_at_most_twice_first;  // s2 <= 2 s1
    bool first_spread_at_most_second;        // s1 <= s2
};

/// Closed-form oracle for the worked example only; throws DomainError for any
/// other matrix.
WorkedExampleConditions worked_example_conditions(const FuzzySystem& sys, double r);

}  // namespace fls
