#include <catch2/catch_amalgamated.hpp>

#include "fls/fuzzy_number.hpp"
#include "support/generators.hpp"

using namespace fls;
using Catch::Approx;

TEST_CASE("make_triangular evaluates both affine profiles", "[fuzzy_core]") {
    auto u = make_triangular(0, 1, 2);
    CHECK(eval(u, 0.0) == LevelPair{0.0, 2.0});
    CHECK(eval(u, 1.0) == LevelPair{1.0, 1.0});

    auto wide = make_triangular(0, 1, 4);
    CHECK(eval(wide, 0.5).lower == Approx(0.5));
    CHECK(eval(wide, 0.5).upper == Approx(2.5));

    auto degenerate = make_triangular(5, 5, 5);
    for (double r : {0.0, 0.3, 1.0}) CHECK(eval(degenerate, r) == LevelPair{5.0, 5.0});
}

TEST_CASE("make_triangular rejects misordered triples", "[fuzzy_core]") {
    CHECK_THROWS_WITH(make_triangular(2, 1, 3), Catch::Matchers::ContainsSubstring("a <= c"));
    CHECK_THROWS_WITH(make_triangular(0, 3, 2), Catch::Matchers::ContainsSubstring("c <= b"));
    CHECK_THROWS_AS(make_triangular(0, std::nan(""), 1), DomainError);
}

TEST_CASE("eval", "[fuzzy_core]") {
    CHECK(eval(FuzzyNumber::crisp(3), 0.7) == LevelPair{3.0, 3.0});
    CHECK(eval(make_triangular(0, 1, 2), 1.0) == LevelPair{1.0, 1.0});

    auto s = FuzzyNumber::sampled(RGrid({0.0, 1.0}), {0.0, 1.0}, {2.0, 1.0});
    CHECK(eval(s, 0.5).lower == Approx(0.5));
    CHECK(eval(s, 0.5).upper == Approx(1.5));

    CHECK_THROWS_AS(eval(s, -0.1), DomainError);
    CHECK_THROWS_AS(eval(s, 1.0000001), DomainError);
    CHECK_THROWS_AS(eval(s, std::nan("")), DomainError);
}

TEST_CASE("RGrid invariants", "[fuzzy_core]") {
    CHECK_THROWS_AS(RGrid({0.0}), DomainError);
    CHECK_THROWS_AS(RGrid({0.0, 0.5, 0.5, 1.0}), DomainError);
    CHECK_THROWS_AS(RGrid({0.1, 1.0}), DomainError);
    CHECK_THROWS_AS(RGrid({0.0, 0.9}), DomainError);
    CHECK_THROWS_AS(RGrid::uniform(1), DomainError);

    auto g = RGrid::uniform();
    CHECK(g.size() == 101);
    CHECK(g[0] == 0.0);
    CHECK(g[100] == 1.0);
    CHECK(g[50] == 0.5);

    auto m = RGrid({0.0, 0.25, 1.0}).merged(RGrid({0.0, 0.5, 1.0}));
    CHECK(m == RGrid({0.0, 0.25, 0.5, 1.0}));
    CHECK(m.contains_all(RGrid({0.0, 0.5, 1.0})));
    CHECK_FALSE(RGrid({0.0, 0.5, 1.0}).contains_all(m));
}

TEST_CASE("add", "[fuzzy_core]") {
    CHECK(add(make_triangular(0, 1, 2), make_triangular(1, 2, 3)) == make_triangular(1, 3, 5));
    CHECK(add(FuzzyNumber::crisp(2), FuzzyNumber::crisp(3)) == FuzzyNumber::crisp(5));

    auto u = make_triangular(-1, 0.5, 4);
    CHECK(add(u, FuzzyNumber::crisp(0)) == u);

    auto s = FuzzyNumber::sampled(RGrid({0.0, 0.5, 1.0}), {0.0, 1.5, 2.0}, {5.0, 2.5, 2.0});
    CHECK(add(s, FuzzyNumber::crisp(0)) == s);

    SECTION("mixed representations go to the union grid") {
        auto t = FuzzyNumber::sampled(RGrid({0.0, 0.25, 1.0}), {0.0, 0.0, 0.0}, {1.0, 1.0, 0.0});
        auto sum = add(s, t);
        const auto& rep = std::get<Sampled>(sum.representation());
        CHECK(rep.grid == RGrid({0.0, 0.25, 0.5, 1.0}));
        for (double r : {0.0, 0.1, 0.25, 0.4, 0.5, 0.8, 1.0}) {
            CHECK(sum.at(r).lower == Approx(s.at(r).lower + t.at(r).lower));
            CHECK(sum.at(r).upper == Approx(s.at(r).upper + t.at(r).upper));
        }
    }
}

TEST_CASE("scale", "[fuzzy_core]") {
    CHECK(scale(2, make_triangular(0, 1, 2)) == make_triangular(0, 2, 4));
    CHECK(scale(-1, make_triangular(0, 1, 2)) == make_triangular(-2, -1, 0));
    CHECK(scale(0, make_triangular(0, 1, 2)) == FuzzyNumber::crisp(0));

    auto s = FuzzyNumber::sampled(RGrid({0.0, 1.0}), {0.0, 1.0}, {3.0, 2.0});
    auto neg = scale(-2, s);
    CHECK(neg.at(0.0) == LevelPair{-6.0, 0.0});
    CHECK(neg.at(1.0) == LevelPair{-4.0, -2.0});
}

TEST_CASE("equals", "[fuzzy_core]") {
    const auto grid = RGrid::uniform();
    auto u = make_triangular(0, 1, 2);
    CHECK(equals(u, u, grid, 0.0));
    CHECK(equals(u, FuzzyNumber::sampled(RGrid({0.0, 1.0}), {0.0, 1.0}, {2.0, 1.0}), grid, 1e-12));
    CHECK_FALSE(equals(u, make_triangular(0, 1, 2.1), grid, 1e-3));
    CHECK_THROWS_AS(equals(u, u, grid, -1.0), DomainError);
}

TEST_CASE("is_valid_fuzzy", "[fuzzy_core]") {
    const auto grid = RGrid::uniform();
    CHECK(is_valid_fuzzy(make_triangular(0, 1, 2), grid).valid());
    CHECK(is_valid_fuzzy(FuzzyNumber::crisp(7), grid).valid());

    auto decreasing = is_valid_fuzzy(FuzzyNumber::sampled(RGrid({0.0, 1.0}), {1.0, 0.0}, {2.0, 1.0}), grid);
    REQUIRE_FALSE(decreasing.valid());
    CHECK(decreasing.violations.front().kind == ViolationKind::LowerDecreasing);

    auto crossed = is_valid_fuzzy(FuzzyNumber::sampled(RGrid({0.0, 1.0}), {3.0, 1.0}, {2.0, 1.0}), grid);
    REQUIRE_FALSE(crossed.valid());
    bool found = false;
    for (const auto& v : crossed.violations) {
        if (v.kind == ViolationKind::LowerAboveUpper && v.r == 0.0) {
            found = true;
            CHECK(v.first == 3.0);
            CHECK(v.second == 2.0);
        }
    }
    CHECK(found);

    SECTION("knots between grid points are checked") {
        auto spike = FuzzyNumber::sampled(RGrid({0.0, 0.013, 1.0}), {0.0, 0.5, 0.4}, {2.0, 1.0, 1.0});
        CHECK_FALSE(is_valid_fuzzy(spike, RGrid({0.0, 1.0})).valid());
    }
    SECTION("affine triple with peak outside the endpoints") {
        auto raw = FuzzyNumber::affine(2.0 / 3.0, 0.0, 5.0 / 3.0);
        auto report = is_valid_fuzzy(raw, grid);
        REQUIRE_FALSE(report.valid());
        CHECK(report.violations.front().kind == ViolationKind::LowerDecreasing);
    }
}

TEST_CASE("fuzzy arithmetic properties on random values", "[fuzzy_core][property]") {
    testing::Rng rng(20261016);
    const auto grid = RGrid::uniform(37);
    for (int trial = 0; trial < 500; ++trial) {
        const auto u = testing::random_valid(rng);
        const auto v = testing::random_valid(rng);
        const double k1 = testing::uniform(rng, -4.0, 4.0);
        const double k2 = testing::uniform(rng, -4.0, 4.0);

        const auto sum = add(u, v);
        for (double r : grid.points()) {
            CHECK(sum.at(r).lower == Approx(u.at(r).lower + v.at(r).lower).margin(1e-12));
            CHECK(sum.at(r).upper == Approx(u.at(r).upper + v.at(r).upper).margin(1e-12));
        }

        CHECK(equals(scale(k1, scale(k2, u)), scale(k1 * k2, u), grid, 1e-12));
        CHECK(scale(-1, scale(-1, u)) == u);

        CHECK(is_valid_fuzzy(sum, grid).valid());
        CHECK(is_valid_fuzzy(scale(k1, u), grid).valid());
        CHECK(is_valid_fuzzy(scale(k1, u) + scale(k2, v), grid).valid());

        if (std::holds_alternative<Triangular>(u.representation())) {
            auto rendered = u.sampled_on(RGrid::uniform(2 + static_cast<std::size_t>(trial % 50)));
            CHECK(equals(u, rendered, grid, 1e-12));
        }
    }
}
