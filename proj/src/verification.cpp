#include "fls/verification.hpp"

#include <algorithm>
#include <cmath>

namespace fls {

ResidualReport residual(const FuzzySystem& sys, const SolutionCandidate& candidate,
                        const RGrid& grid, double tol) {
    const std::size_t n = sys.n();
    if (candidate.n() != n) {
        throw DomainError("candidate has " + std::to_string(candidate.n()) +
                          " components for a system of size " + std::to_string(n));
    }
    if (!candidate.affine() && !candidate.grid.contains_all(grid)) {
        throw DomainError("residual grid has levels the sampled candidate was not solved at");
    }
    if (tol < 0.0) {
        throw DomainError("residual tolerance must be nonnegative");
    }

    const auto& a = sys.coefficients();
    ResidualReport report;
    report.equations.resize(n);
    double b_scale = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        FuzzyNumber lhs = FuzzyNumber::crisp(0.0);
        for (std::size_t j = 0; j < n; ++j) {
            lhs = lhs + a(i, j) * candidate.components[j];
        }
        auto& eq = report.equations[i];
        for (double r : grid.points()) {
            const auto got = lhs.at(r);
            const auto want = sys.rhs()[i].at(r);
            eq.lower = std::max(eq.lower, std::abs(got.lower - want.lower));
            eq.upper = std::max(eq.upper, std::abs(got.upper - want.upper));
            b_scale = std::max({b_scale, std::abs(want.lower), std::abs(want.upper)});
        }
        report.max_residual = std::max(report.max_residual, eq.worst());
    }
    report.tolerance = tol * b_scale;
    report.pass = report.max_residual <= report.tolerance;
    return report;
}

}  // namespace fls
