#include "fls/solver.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace fls {

namespace {

struct Elimination {
    Matrix lu;
    std::vector<std::size_t> perm;
    std::optional<std::size_t> failed_column;
};

Elimination eliminate(const Matrix& m, const LinSolveConfig& cfg) {
    if (!m.is_square()) {
        throw DomainError("elimination needs a square matrix");
    }
    if (!(cfg.singularity_tolerance > 0.0)) {
        throw DomainError("singularity tolerance must be positive");
    }
    const std::size_t n = m.rows();
    Elimination e{m, std::vector<std::size_t>(n), std::nullopt};
    for (std::size_t i = 0; i < n; ++i) e.perm[i] = i;

    const double threshold = cfg.singularity_tolerance * m.max_abs();
    Matrix& a = e.lu;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(a(i, k)) > std::abs(a(p, k))) p = i;
        }
        if (std::abs(a(p, k)) <= threshold) {
            e.failed_column = k;
            return e;
        }
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            std::swap(e.perm[k], e.perm[p]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = a(i, k) / a(k, k);
            a(i, k) = f;
            if (f == 0.0) continue;
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return e;
}

// Per-level lower/upper vectors for variables 0..n-1.
struct LevelSolution {
    std::vector<double> lower;
    std::vector<double> upper;
};

template <typename SolveAt>
SolutionCandidate assemble(const FuzzySystem& sys, const RGrid& grid, SolveAt solve_at) {
    const std::size_t n = sys.n();
    if (sys.affine_rhs()) {
        // Affine rhs maps to affine profiles through a fixed linear map, so the
        // two endpoint levels determine everything.
        auto at0 = solve_at(0.0);
        auto at1 = solve_at(1.0);
        SolutionCandidate out{{}, grid};
        out.components.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double core = 0.5 * (at1.lower[i] + at1.upper[i]);
            out.components.push_back(FuzzyNumber::affine(at0.lower[i], core, at0.upper[i]));
        }
        return out;
    }
    RGrid levels = working_grid(sys, grid);
    std::vector<std::vector<double>> lower(n, std::vector<double>(levels.size()));
    std::vector<std::vector<double>> upper(n, std::vector<double>(levels.size()));
    for (std::size_t k = 0; k < levels.size(); ++k) {
        auto x = solve_at(levels[k]);
        for (std::size_t i = 0; i < n; ++i) {
            lower[i][k] = x.lower[i];
            upper[i][k] = x.upper[i];
        }
    }
    SolutionCandidate out{{}, levels};
    out.components.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.components.push_back(FuzzyNumber::sampled(levels, std::move(lower[i]), std::move(upper[i])));
    }
    return out;
}

}  // namespace

SingularMatrixError::SingularMatrixError(std::string matrix_name, std::size_t pivot_column)
    : std::runtime_error(matrix_name + " is singular (pivot column " +
                         std::to_string(pivot_column + 1) + ")"),
      matrix_name_(std::move(matrix_name)),
      pivot_column_(pivot_column) {}

LuFactorization LuFactorization::factor(const Matrix& m, const LinSolveConfig& cfg,
                                        std::string name) {
    auto e = eliminate(m, cfg);
    if (e.failed_column) {
        throw SingularMatrixError(std::move(name), *e.failed_column);
    }
    return LuFactorization(m, std::move(e.lu), std::move(e.perm));
}

std::optional<std::size_t> LuFactorization::find_singular_pivot(const Matrix& m,
                                                                const LinSolveConfig& cfg) {
    return eliminate(m, cfg).failed_column;
}

std::vector<double> LuFactorization::solve(std::span<const double> v) const {
    const std::size_t n = size();
    if (v.size() != n) {
        throw DomainError("right-hand side length does not match the factored matrix");
    }
    auto x = substitute(v);
    // Residuals accumulated in extended precision; two passes are plenty for n <= a few dozen.
    std::vector<double> res(n);
    for (int pass = 0; pass < 2; ++pass) {
        bool zero = true;
        for (std::size_t i = 0; i < n; ++i) {
            long double acc = v[i];
            for (std::size_t j = 0; j < n; ++j) {
                acc -= static_cast<long double>(original_(i, j)) * x[j];
            }
            res[i] = static_cast<double>(acc);
            zero = zero && res[i] == 0.0;
        }
        if (zero) break;
        const auto dx = substitute(res);
        for (std::size_t i = 0; i < n; ++i) x[i] += dx[i];
    }
    return x;
}

std::vector<double> LuFactorization::substitute(std::span<const double> v) const {
    const std::size_t n = size();
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = v[perm_[i]];
        for (std::size_t j = 0; j < i; ++j) acc -= lu_(i, j) * y[j];
        y[i] = acc;
    }
    for (std::size_t i = n; i-- > 0;) {
        double acc = y[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= lu_(i, j) * y[j];
        y[i] = acc / lu_(i, i);
    }
    return y;
}

Matrix LuFactorization::inverse() const {
    const std::size_t n = size();
    Matrix inv(n, n);
    std::vector<double> e(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        e[j] = 1.0;
        auto col = solve(e);
        e[j] = 0.0;
        for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
    }
    return inv;
}

std::vector<double> solve_crisp(const Matrix& m, std::span<const double> v,
                                const LinSolveConfig& cfg) {
    if (v.size() != m.rows()) {
        throw DomainError("right-hand side length does not match the matrix");
    }
    return LuFactorization::factor(m, cfg).solve(v);
}

NonsingularityCheck check_nonsingularity(const CrispMatrix& a, const LinSolveConfig& cfg) {
    const auto parts = split(a);
    NonsingularityCheck check;
    check.a_pivot = LuFactorization::find_singular_pivot(a.matrix(), cfg);
    check.sum_pivot = LuFactorization::find_singular_pivot(parts.sum(), cfg);
    check.embedding_pivot = LuFactorization::find_singular_pivot(assemble_embedding(parts), cfg);
    check.a_ok = !check.a_pivot;
    check.sum_ok = !check.sum_pivot;
    check.embedding_ok = !check.embedding_pivot;
    return check;
}

bool SolutionCandidate::affine() const noexcept {
    return std::all_of(components.begin(), components.end(),
                       [](const auto& u) { return u.is_affine(); });
}

RGrid working_grid(const FuzzySystem& sys, const RGrid& grid) {
    RGrid levels = grid;
    for (const auto& u : sys.rhs()) {
        if (auto* s = std::get_if<Sampled>(&u.representation())) {
            levels = levels.merged(s->grid);
        }
    }
    return levels;
}

SolutionCandidate solve_full(const FuzzySystem& sys, const RGrid& grid, const LinSolveConfig& cfg) {
    const std::size_t n = sys.n();
    const auto lu = LuFactorization::factor(assemble_embedding(split(sys.coefficients())), cfg, "S");
    return assemble(sys, grid, [&](double r) {
        auto y = lu.solve(embed_rhs(sys.rhs(), r));
        LevelSolution x{std::vector<double>(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(n)),
                        std::vector<double>(n)};
        for (std::size_t i = 0; i < n; ++i) x.upper[i] = -y[i + n];
        return x;
    });
}

SolutionCandidate solve_block(const FuzzySystem& sys, const RGrid& grid, const LinSolveConfig& cfg) {
    const std::size_t n = sys.n();
    const auto parts = split(sys.coefficients());
    const auto sum_lu = LuFactorization::factor(parts.sum(), cfg, "B+C");
    const auto diff_lu = LuFactorization::factor(parts.difference(), cfg, "A");
    return assemble(sys, grid, [&](double r) {
        const auto d = sum_lu.solve(spread_vector(sys.rhs(), r));
        const auto s = diff_lu.solve(center_sum_vector(sys.rhs(), r));
        LevelSolution x{std::vector<double>(n), std::vector<double>(n)};
        for (std::size_t i = 0; i < n; ++i) {
            x.lower[i] = 0.5 * (s[i] + d[i]);
            x.upper[i] = 0.5 * (s[i] - d[i]);
        }
        return x;
    });
}

}  // namespace fls
