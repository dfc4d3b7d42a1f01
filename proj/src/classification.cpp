#include "fls/classification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fls {

std::string_view to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::Strong: return "strong";
        case Verdict::Weak: return "weak";
        case Verdict::Singular: return "singular";
    }
    return "unknown";
}

std::vector<double> StrongConditionResult::max_components() const {
    if (vectors.empty()) return {};
    std::vector<double> out = vectors.front().values;
    for (const auto& lv : vectors) {
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(out[i], lv.values[i]);
    }
    return out;
}

std::vector<double> StrongConditionResult::min_components() const {
    if (vectors.empty()) return {};
    std::vector<double> out = vectors.front().values;
    for (const auto& lv : vectors) {
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::min(out[i], lv.values[i]);
    }
    return out;
}

StrongConditionResult strong_condition(const FuzzySystem& sys, const RGrid& grid,
                                       const LinSolveConfig& cfg) {
    const auto lu = LuFactorization::factor(split(sys.coefficients()).sum(), cfg, "B+C");
    StrongConditionResult result;
    auto below = [](const std::vector<double>& v) {
        return std::all_of(v.begin(), v.end(),
                           [](double x) { return x <= kStrongConditionTolerance; });
    };

    if (sys.affine_rhs()) {
        const auto d0 = lu.solve(spread_vector(sys.rhs(), 0.0));
        const auto d1 = lu.solve(spread_vector(sys.rhs(), 1.0));
        // Affine in r, so the endpoints bound every level.
        result.holds = below(d0) && below(d1);
        for (double r : grid.points()) {
            LevelVector lv{r, std::vector<double>(d0.size())};
            for (std::size_t i = 0; i < d0.size(); ++i) lv.values[i] = (1.0 - r) * d0[i] + r * d1[i];
            if (r == 0.0) lv.values = d0;
            if (r == 1.0) lv.values = d1;
            result.vectors.push_back(std::move(lv));
        }
        return result;
    }

    result.holds = true;
    const RGrid levels = working_grid(sys, grid);
    for (double r : levels.points()) {
        LevelVector lv{r, lu.solve(spread_vector(sys.rhs(), r))};
        result.holds = result.holds && below(lv.values);
        result.vectors.push_back(std::move(lv));
    }
    return result;
}

MonomialCheck is_monomial_case(const CrispMatrix& a, const LinSolveConfig& cfg) {
    const Matrix sum = split(a).sum();
    const std::size_t n = sum.rows();
    MonomialCheck check;

    std::vector<std::size_t> row_count(n, 0);
    std::vector<std::size_t> col_count(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (sum(i, j) != 0.0) {
                ++row_count[i];
                ++col_count[j];
            }
        }
    }
    auto one = [](std::size_t c) { return c == 1; };
    check.structural = std::all_of(row_count.begin(), row_count.end(), one) &&
                       std::all_of(col_count.begin(), col_count.end(), one);

    if (LuFactorization::find_singular_pivot(sum, cfg)) {
        check.inverse_min_entry = std::numeric_limits<double>::quiet_NaN();
        return check;
    }
    const Matrix inv = LuFactorization::factor(sum, cfg, "B+C").inverse();
    double lowest = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        for (double x : inv.row(i)) lowest = std::min(lowest, x);
    }
    check.inverse_min_entry = lowest;
    check.flag = lowest >= kNonnegativeInverseTolerance;
    return check;
}

ClassificationReport classify(const FuzzySystem& sys, const RGrid& grid,
                              const ClassifyOptions& options) {
    ClassificationReport report;
    report.nonsingularity = check_nonsingularity(sys.coefficients(), options.linsolve);
    if (!report.nonsingularity.embedding_ok) {
        report.verdict = Verdict::Singular;
        return report;
    }

    ClassificationDetails details{
        strong_condition(sys, grid, options.linsolve),
        {},
        {},
        is_monomial_case(sys.coefficients(), options.linsolve),
        solve_block(sys, grid, options.linsolve),
    };

    const auto& cand = details.candidate;
    for (std::size_t i = 0; i < cand.n(); ++i) {
        for (double r : cand.grid.points()) {
            auto p = cand.components[i].at(r);
            if (p.lower > p.upper + kStrongConditionTolerance) {
                details.violating_variables.push_back({i, r, p.lower, p.upper});
                break;
            }
        }
        auto validity = is_valid_fuzzy(cand.components[i], cand.grid, options.validity_tolerance);
        if (!validity) {
            details.definition1_violations.push_back({i, std::move(validity)});
        }
    }

    bool strong = details.condition.holds && details.violating_variables.empty();
    if (options.require_fuzzy_components) {
        strong = strong && details.definition1_violations.empty();
    }
    report.verdict = strong ? Verdict::Strong : Verdict::Weak;
    report.details = std::move(details);
    return report;
}

WorkedExampleConditions worked_example_conditions(const FuzzySystem& sys, double r) {
    if (!(sys.coefficients() == CrispMatrix{{1.0, -1.0}, {1.0, 2.0}})) {
        throw DomainError("worked-example conditions apply only to A = [[1,-1],[1,2]]");
    }
    const auto b1 = eval(sys.rhs()[0], r);
    const auto b2 = eval(sys.rhs()[1], r);
    const double s1 = b1.upper - b1.lower;
    const double s2 = b2.upper - b2.lower;
    return {s2 <= 2.0 * s1, s1 <= s2};
}

}  // namespace fls
