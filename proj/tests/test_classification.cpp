#include <catch2/catch_amalgamated.hpp>

#include "fls/classification.hpp"
#include "fls/verification.hpp"
#include "support/generators.hpp"

using namespace fls;
using Catch::Approx;

namespace {

FuzzySystem worked(FuzzyNumber b1, FuzzyNumber b2) {
    return FuzzySystem(testing::worked_example_matrix(), {std::move(b1), std::move(b2)});
}

}  // namespace

TEST_CASE("strong_condition on the worked example", "[classification]") {
    const auto grid = RGrid::uniform();

    auto strong = strong_condition(worked(make_triangular(0, 1, 2), make_triangular(1, 2, 3)), grid);
    CHECK(strong.holds);
    REQUIRE(strong.vectors.front().r == 0.0);
    CHECK(strong.vectors.front().values[0] == Approx(-2.0));
    CHECK(strong.vectors.front().values[1] == Approx(0.0).margin(1e-14));

    auto weak = strong_condition(worked(make_triangular(0, 1, 4), make_triangular(0, 1, 2)), grid);
    CHECK_FALSE(weak.holds);
    CHECK(weak.vectors.front().values[0] == Approx(-6.0));
    CHECK(weak.vectors.front().values[1] == Approx(2.0));
    CHECK(weak.max_components()[1] == Approx(2.0));

    auto crisp = strong_condition(worked(FuzzyNumber::crisp(1), FuzzyNumber::crisp(-4)), grid);
    CHECK(crisp.holds);
    for (const auto& lv : crisp.vectors) {
        for (double x : lv.values) CHECK(x == 0.0);
    }

    FuzzySystem singular(CrispMatrix{{1, -1}, {1, 1}}, {FuzzyNumber::crisp(0), FuzzyNumber::crisp(0)});
    CHECK_THROWS_AS(strong_condition(singular, grid), SingularMatrixError);
}

TEST_CASE("classify verdicts", "[classification]") {
    const auto grid = RGrid::uniform();

    auto strong = classify(worked(make_triangular(0, 1, 2), make_triangular(1, 2, 3)), grid);
    CHECK(strong.verdict == Verdict::Strong);
    REQUIRE(strong.details);
    CHECK(strong.details->violating_variables.empty());
    CHECK(strong.details->definition1_violations.empty());
    CHECK_FALSE(strong.details->monomial.flag);
    CHECK(strong.fuzzy_components());

    auto weak = classify(worked(make_triangular(0, 1, 4), make_triangular(0, 1, 2)), grid);
    CHECK(weak.verdict == Verdict::Weak);
    REQUIRE(weak.details);
    REQUIRE(weak.details->violating_variables.size() == 1);
    CHECK(weak.details->violating_variables[0].variable == 1);
    CHECK(weak.details->violating_variables[0].witness_r == 0.0);

    auto singular = classify(FuzzySystem(CrispMatrix{{1, -1}, {1, 1}},
                                         {make_triangular(0, 1, 2), make_triangular(-3, 0, 0)}),
                             grid);
    CHECK(singular.verdict == Verdict::Singular);
    CHECK_FALSE(singular.details);
    CHECK_FALSE(singular.nonsingularity.sum_ok);
    CHECK(singular.nonsingularity.a_ok);
}

TEST_CASE("strong condition without monotone components", "[classification]") {
    // Spreads 2 and 3 satisfy both spread inequalities, but the asymmetric
    // triangles push x1's lower profile from 2/3 down to 0.
    const auto grid = RGrid::uniform();
    auto sys = worked(make_triangular(0, 0, 2), make_triangular(0, 0, 3));
    auto cond = worked_example_conditions(sys, 0.0);
    CHECK(cond.second_spread_at_most_twice_first);
    CHECK(cond.first_spread_at_most_second);

    auto report = classify(sys, grid);
    CHECK(report.verdict == Verdict::Strong);
    REQUIRE(report.details);
    REQUIRE(report.details->definition1_violations.size() == 1);
    CHECK(report.details->definition1_violations[0].variable == 0);
    CHECK_FALSE(report.fuzzy_components());
    CHECK(equals(report.details->candidate.components[0], FuzzyNumber::affine(2.0 / 3, 0.0, 5.0 / 3), grid,
                 1e-12));
    CHECK(residual(sys, report.details->candidate, grid).pass);

    ClassifyOptions strict;
    strict.require_fuzzy_components = true;
    CHECK(classify(sys, grid, strict).verdict == Verdict::Weak);
    CHECK(classify(worked(make_triangular(0, 1, 2), make_triangular(1, 2, 3)), grid, strict).verdict ==
          Verdict::Strong);
}

TEST_CASE("is_monomial_case", "[classification]") {
    auto anti = is_monomial_case(CrispMatrix{{0, 3}, {-2, 0}});
    CHECK(anti.flag);
    CHECK(anti.structural);
    CHECK(anti.inverse_min_entry == 0.0);

    CHECK(is_monomial_case(CrispMatrix(Matrix::identity(3))).flag);

    auto paper = is_monomial_case(testing::worked_example_matrix());
    CHECK_FALSE(paper.flag);
    CHECK_FALSE(paper.structural);
    CHECK(paper.inverse_min_entry == Approx(-1.0));

    auto singular = is_monomial_case(CrispMatrix{{1, -1}, {1, 1}});
    CHECK_FALSE(singular.flag);
    CHECK(std::isnan(singular.inverse_min_entry));
    CHECK(singular.agrees());

    auto zero_column = is_monomial_case(CrispMatrix{{1, 0}, {1, 0}});
    CHECK_FALSE(zero_column.flag);
    CHECK(zero_column.agrees());
}

TEST_CASE("worked_example_conditions", "[classification]") {
    auto both = worked_example_conditions(worked(make_triangular(0, 1, 2), make_triangular(1, 2, 3)), 0.0);
    CHECK(both.second_spread_at_most_twice_first);
    CHECK(both.first_spread_at_most_second);

    auto only7 = worked_example_conditions(worked(make_triangular(0, 1, 4), make_triangular(0, 1, 2)), 0.0);
    CHECK(only7.second_spread_at_most_twice_first);
    CHECK_FALSE(only7.first_spread_at_most_second);

    auto core = worked_example_conditions(worked(make_triangular(0, 1, 9), make_triangular(0, 1, 2)), 1.0);
    CHECK(core.second_spread_at_most_twice_first);
    CHECK(core.first_spread_at_most_second);

    FuzzySystem other(CrispMatrix(Matrix::identity(2)), {FuzzyNumber::crisp(0), FuzzyNumber::crisp(0)});
    CHECK_THROWS_AS(worked_example_conditions(other, 0.0), DomainError);
}

TEST_CASE("spread condition matches the worked-example inequalities", "[classification][property]") {
    testing::Rng rng(99);
    const auto grid = RGrid::uniform(11);
    for (int trial = 0; trial < 400; ++trial) {
        auto sys = worked(testing::random_valid(rng), testing::random_valid(rng));
        auto cond = strong_condition(sys, grid);
        bool all = true;
        for (const auto& lv : cond.vectors) {
            auto w = worked_example_conditions(sys, lv.r);
            all = all && w.second_spread_at_most_twice_first && w.first_spread_at_most_second;
        }
        CHECK(cond.holds == all);
    }
}

TEST_CASE("spread condition is equivalent to ordered candidate profiles", "[classification][property]") {
    testing::Rng rng(1234);
    const auto grid = RGrid::uniform(17);
    int checked = 0, held = 0;
    while (checked < 300) {
        const std::size_t n = testing::pick(rng, 1, 5);
        CrispMatrix a(testing::random_matrix(rng, n));
        if (!check_nonsingularity(a).embedding_ok) continue;
        ++checked;
        FuzzySystem sys(a, testing::random_rhs(rng, n));
        auto cond = strong_condition(sys, grid);
        auto cand = solve_block(sys, grid);
        bool ordered = true;
        for (const auto& u : cand.components) {
            for (double r : cand.grid.points()) {
                auto p = u.at(r);
                ordered = ordered && p.lower <= p.upper + kStrongConditionTolerance;
            }
        }
        CHECK(cond.holds == ordered);
        held += cond.holds;
    }
    CHECK(held > 0);
}

TEST_CASE("monomial matrices give strong solutions for any rhs", "[classification][property]") {
    testing::Rng rng(77);
    const auto grid = RGrid::uniform(21);
    for (int m = 0; m < 20; ++m) {
        const std::size_t n = testing::pick(rng, 1, 6);
        CrispMatrix a(testing::random_monomial(rng, n));
        auto mono = is_monomial_case(a);
        REQUIRE(mono.flag);
        CHECK(mono.agrees());
        for (int k = 0; k < 20; ++k) {
            auto report = classify(FuzzySystem(a, testing::random_rhs(rng, n)), grid);
            CHECK(report.verdict == Verdict::Strong);
            CHECK(report.fuzzy_components());
        }
    }
}

TEST_CASE("non-monomial matrices admit a weak right-hand side", "[classification][property]") {
    testing::Rng rng(78);
    const auto grid = RGrid::uniform(21);
    int built = 0;
    while (built < 50) {
        const std::size_t n = testing::pick(rng, 2, 6);
        Matrix m = built % 2 ? testing::random_matrix(rng, n) : testing::random_integer_matrix(rng, n, 3);
        CrispMatrix a(m);
        if (!check_nonsingularity(a).embedding_ok) continue;
        auto mono = is_monomial_case(a);
        CHECK(mono.agrees());
        if (mono.flag) continue;
        ++built;

        auto inv = LuFactorization::factor(split(a).sum(), {}).inverse();
        std::size_t col = n;
        for (std::size_t j = 0; j < n && col == n; ++j)
            for (std::size_t i = 0; i < n; ++i)
                if (inv(i, j) < kNonnegativeInverseTolerance) col = j;
        REQUIRE(col < n);

        std::vector<FuzzyNumber> rhs(n, FuzzyNumber::crisp(0.0));
        rhs[col] = make_triangular(-1, 0, 1);
        CHECK(classify(FuzzySystem(a, rhs), grid).verdict == Verdict::Weak);
    }
}
