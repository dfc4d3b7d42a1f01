#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fls/fuzzy_number.hpp"
#include "fls/matrix.hpp"
#include "fls/system.hpp"

namespace fls {

struct LinSolveConfig {
    /// Pivot threshold relative to the matrix max-norm.
    double singularity_tolerance = 1e-12;
};

/// Elimination hit a pivot below tolerance * max|M|.
class SingularMatrixError : public std::runtime_error {
public:
    SingularMatrixError(std::string matrix_name, std::size_t pivot_column);

    const std::string& matrix_name() const noexcept { return matrix_name_; }
    std::size_t pivot_column() const noexcept { return pivot_column_; }

private:
    std::string matrix_name_;
    std::size_t pivot_column_;
};

/// Row-pivoted LU factorization P M = L U, computed once and reused for many
/// right-hand sides. Read-only after construction, so concurrent solves are safe.
class LuFactorization {
public:
    /// Throws SingularMatrixError (carrying `name` and the failing column).
    static LuFactorization factor(const Matrix& m, const LinSolveConfig& cfg,
                                  std::string name = "matrix");

    /// Returns the failing pivot column, or nullopt when `m` factors cleanly.
    static std::optional<std::size_t> find_singular_pivot(const Matrix& m,
                                                          const LinSolveConfig& cfg);

    std::size_t size() const noexcept { return lu_.rows(); }
    /// Substitution followed by iterative refinement against the original matrix.
    std::vector<double> solve(std::span<const double> v) const;
    Matrix inverse() const;

private:
    LuFactorization(Matrix original, Matrix lu, std::vector<std::size_t> perm)
        : original_(std::move(original)), lu_(std::move(lu)), perm_(std::move(perm)) {}

    std::vector<double> substitute(std::span<const double> v) const;

    Matrix original_;
    Matrix lu_;
    std::vector<std::size_t> perm_;
};

/// Solves M y = v. Throws SingularMatrixError or DomainError on shape mismatch.
std::vector<double> solve_crisp(const Matrix& m, std::span<const double> v,
                                const LinSolveConfig& cfg = {});

/// Three independent elimination runs on A, B + C and the embedding S.
struct NonsingularityCheck {
    bool a_ok = false;
    bool sum_ok = false;
    bool embedding_ok = false;
    std::optional<std::size_t> a_pivot;
    std::optional<std::size_t> sum_pivot;
    std::optional<std::size_t> embedding_pivot;

    /// S nonsingular iff A and B + C both are.
    bool consistent() const noexcept { return embedding_ok == (a_ok && sum_ok); }
};

NonsingularityCheck check_nonsingularity(const CrispMatrix& a, const LinSolveConfig& cfg = {});

/// Raw per-variable lower/upper profiles from the crisp solve; not certified as
/// fuzzy numbers. Affine components when the rhs is all Crisp/Triangular,
/// Sampled on `grid` otherwise.
struct SolutionCandidate {
    std::vector<FuzzyNumber> components;
    RGrid grid;

    std::size_t n() const noexcept { return components.size(); }
    bool affine() const noexcept;
};

/// Levels at which the general (non-affine) path solves: `grid` merged with every
/// Sampled rhs knot.
RGrid working_grid(const FuzzySystem& sys, const RGrid& grid);

/// Solves the 2n x 2n embedded system at each level.
SolutionCandidate solve_full(const FuzzySystem& sys, const RGrid& grid,
                             const LinSolveConfig& cfg = {});

/// Solves (B + C) d = lower - upper and (B - C) s = lower + upper, then
/// lower = (s + d) / 2 and upper = (s - d) / 2. Default path.
SolutionCandidate solve_block(const FuzzySystem& sys, const RGrid& grid,
                              const LinSolveConfig& cfg = {});

}  // namespace fls
