#pragma once

#include <cstddef>
#include <vector>

#include "fls/fuzzy_number.hpp"
#include "fls/solver.hpp"
#include "fls/system.hpp"

namespace fls {

inline constexpr double kResidualTolerance = 1e-8;

struct EquationResidual {
    double lower = 0.0;  // max over levels of |lhs.lower - b.lower|
    double upper = 0.0;  // max over levels of |lhs.upper - b.upper|

    double worst() const noexcept { return lower > upper ? lower : upper; }
};

struct ResidualReport {
    std::vector<EquationResidual> equations;
    double max_residual = 0.0;
    double tolerance = kResidualTolerance;  // effective: tol * max(1, max|b|)
    bool pass = false;
};

/// Substitutes the candidate into each equation using only fuzzy scalar
/// multiplication and addition, independent of the embedded matrix. Weak
/// candidates go through the same sign-split rule on their raw profiles.
/// Throws DomainError when the candidate does not fit the system or grid.
ResidualReport residual(const FuzzySystem& sys, const SolutionCandidate& candidate,
                        const RGrid& grid, double tol = kResidualTolerance);

}  // namespace fls
