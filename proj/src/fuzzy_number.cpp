#include "fls/fuzzy_number.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <sstream>

namespace fls {

namespace {

void require_level(double r) {
    if (!(r >= 0.0 && r <= 1.0)) {
        std::ostringstream msg;
        msg << "level r=" << r << " is outside [0,1]";
        throw DomainError(msg.str());
    }
}

void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) {
        throw DomainError(std::string(what) + " must be finite");
    }
}

double interpolate(std::span<const double> knots, std::span<const double> values, double r) {
    auto hi = std::upper_bound(knots.begin(), knots.end(), r);
    if (hi == knots.end()) {
        return values.back();
    }
    auto k = static_cast<std::size_t>(std::distance(knots.begin(), hi)) - 1;
    if (r == knots[k]) {
        return values[k];
    }
    double t = (r - knots[k]) / (knots[k + 1] - knots[k]);
    return values[k] + t * (values[k + 1] - values[k]);
}

Sampled to_sampled(const FuzzyNumber& u, const RGrid& grid) {
    Sampled s{grid, {}, {}};
    s.lower.reserve(grid.size());
    s.upper.reserve(grid.size());
    for (double r : grid.points()) {
        auto p = u.at(r);
        s.lower.push_back(p.lower);
        s.upper.push_back(p.upper);
    }
    return s;
}

const RGrid* knots_of(const FuzzyNumber& u) {
    if (auto* s = std::get_if<Sampled>(&u.representation())) {
        return &s->grid;
    }
    return nullptr;
}

}  // namespace

// ---------------------------------------------------------------------------
// RGrid

RGrid::RGrid(std::vector<double> points) : points_(std::move(points)) {
    if (points_.size() < 2) {
        throw DomainError("r-grid needs at least 2 points");
    }
    if (points_.front() != 0.0 || points_.back() != 1.0) {
        throw DomainError("r-grid must start at 0 and end at 1");
    }
    for (std::size_t i = 1; i < points_.size(); ++i) {
        if (!(points_[i] > points_[i - 1])) {
            std::ostringstream msg;
            msg << "r-grid must be strictly increasing (point " << i << " = " << points_[i] << ")";
            throw DomainError(msg.str());
        }
    }
}

RGrid RGrid::uniform(std::size_t count) {
    if (count < 2) {
        throw DomainError("r-grid needs at least 2 points");
    }
    std::vector<double> pts(count);
    const double last = static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
        pts[i] = static_cast<double>(i) / last;
    }
    pts.back() = 1.0;
    return RGrid(std::move(pts));
}

RGrid RGrid::merged(const RGrid& other) const {
    std::vector<double> out;
    out.reserve(points_.size() + other.points_.size());
    std::set_union(points_.begin(), points_.end(), other.points_.begin(), other.points_.end(),
                   std::back_inserter(out));
    return RGrid(std::move(out));
}

bool RGrid::contains_all(const RGrid& other) const {
    return std::includes(points_.begin(), points_.end(), other.points_.begin(), other.points_.end());
}

// ---------------------------------------------------------------------------
// FuzzyNumber

FuzzyNumber FuzzyNumber::crisp(double a) {
    require_finite(a, "crisp value");
    return FuzzyNumber(Crisp{a});
}

FuzzyNumber FuzzyNumber::triangular(double a, double c, double b) {
    require_finite(a, "triangle endpoint a");
    require_finite(c, "triangle peak c");
    require_finite(b, "triangle endpoint b");
    if (!(a <= c)) {
        std::ostringstream msg;
        msg << "triangle requires a <= c (got a=" << a << ", c=" << c << ")";
        throw DomainError(msg.str());
    }
    if (!(c <= b)) {
        std::ostringstream msg;
        msg << "triangle requires c <= b (got c=" << c << ", b=" << b << ")";
        throw DomainError(msg.str());
    }
    return FuzzyNumber(Triangular{a, c, b});
}

FuzzyNumber FuzzyNumber::affine(double a, double c, double b) {
    require_finite(a, "affine lower(0)");
    require_finite(c, "affine core value");
    require_finite(b, "affine upper(0)");
    return FuzzyNumber(Triangular{a, c, b});
}

FuzzyNumber FuzzyNumber::sampled(RGrid grid, std::vector<double> lower, std::vector<double> upper) {
    if (lower.size() != grid.size() || upper.size() != grid.size()) {
        throw DomainError("sampled profile lengths must match the grid size");
    }
    for (double x : lower) require_finite(x, "sampled lower value");
    for (double x : upper) require_finite(x, "sampled upper value");
    return FuzzyNumber(Sampled{std::move(grid), std::move(lower), std::move(upper)});
}

LevelPair FuzzyNumber::at(double r) const {
    require_level(r);
    return std::visit(
        [r](const auto& u) -> LevelPair {
            using T = std::decay_t<decltype(u)>;
            if constexpr (std::is_same_v<T, Crisp>) {
                return {u.a, u.a};
            } else if constexpr (std::is_same_v<T, Triangular>) {
                if (r == 1.0) return {u.c, u.c};
                return {u.a + (u.c - u.a) * r, u.b + (u.c - u.b) * r};
            } else {
                return {interpolate(u.grid.points(), u.lower, r),
                        interpolate(u.grid.points(), u.upper, r)};
            }
        },
        rep_);
}

FuzzyNumber FuzzyNumber::sampled_on(const RGrid& grid) const {
    return FuzzyNumber(to_sampled(*this, grid));
}

FuzzyNumber make_triangular(double a, double c, double b) {
    return FuzzyNumber::triangular(a, c, b);
}

LevelPair eval(const FuzzyNumber& u, double r) {
    return u.at(r);
}

FuzzyNumber add(const FuzzyNumber& u, const FuzzyNumber& v) {
    const auto& ru = u.representation();
    const auto& rv = v.representation();
    if (auto* cu = std::get_if<Crisp>(&ru)) {
        if (auto* cv = std::get_if<Crisp>(&rv)) {
            return FuzzyNumber::crisp(cu->a + cv->a);
        }
    }
    if (u.is_affine() && v.is_affine()) {
        // Both affine in r: add the (lower(0), core, upper(0)) triples.
        auto triple = [](const FuzzyNumber::Representation& rep) {
            if (auto* c = std::get_if<Crisp>(&rep)) return Triangular{c->a, c->a, c->a};
            return std::get<Triangular>(rep);
        };
        auto tu = triple(ru);
        auto tv = triple(rv);
        return FuzzyNumber::affine(tu.a + tv.a, tu.c + tv.c, tu.b + tv.b);
    }
    const RGrid* gu = knots_of(u);
    const RGrid* gv = knots_of(v);
    RGrid grid = gu && gv ? gu->merged(*gv) : (gu ? *gu : *gv);
    auto su = to_sampled(u, grid);
    auto sv = to_sampled(v, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        su.lower[i] += sv.lower[i];
        su.upper[i] += sv.upper[i];
    }
    return FuzzyNumber::sampled(std::move(grid), std::move(su.lower), std::move(su.upper));
}

FuzzyNumber scale(double k, const FuzzyNumber& u) {
    if (k == 0.0) {
        return FuzzyNumber::crisp(0.0);
    }
    return std::visit(
        [k](const auto& v) -> FuzzyNumber {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Crisp>) {
                return FuzzyNumber::crisp(k * v.a);
            } else if constexpr (std::is_same_v<T, Triangular>) {
                if (k > 0.0) return FuzzyNumber::affine(k * v.a, k * v.c, k * v.b);
                return FuzzyNumber::affine(k * v.b, k * v.c, k * v.a);
            } else {
                std::vector<double> lower(v.lower.size());
                std::vector<double> upper(v.upper.size());
                const auto& from_lower = k > 0.0 ? v.lower : v.upper;
                const auto& from_upper = k > 0.0 ? v.upper : v.lower;
                for (std::size_t i = 0; i < lower.size(); ++i) {
                    lower[i] = k * from_lower[i];
                    upper[i] = k * from_upper[i];
                }
                return FuzzyNumber::sampled(v.grid, std::move(lower), std::move(upper));
            }
        },
        u.representation());
}

bool equals(const FuzzyNumber& u, const FuzzyNumber& v, const RGrid& grid, double tol) {
    if (tol < 0.0) {
        throw DomainError("equality tolerance must be nonnegative");
    }
    for (double r : grid.points()) {
        auto pu = u.at(r);
        auto pv = v.at(r);
        if (std::abs(pu.lower - pv.lower) > tol || std::abs(pu.upper - pv.upper) > tol) {
            return false;
        }
    }
    return true;
}

std::string describe(const ValidityViolation& v) {
    std::ostringstream out;
    switch (v.kind) {
        case ViolationKind::LowerDecreasing:
            out << "lower profile decreases to " << v.second << " at r=" << v.r << " (previous "
                << v.first << ")";
            break;
        case ViolationKind::UpperIncreasing:
            out << "upper profile increases to " << v.second << " at r=" << v.r << " (previous "
                << v.first << ")";
            break;
        case ViolationKind::LowerAboveUpper:
            out << "lower(" << v.r << ")=" << v.first << " exceeds upper(" << v.r
                << ")=" << v.second;
            break;
    }
    return out.str();
}

ValidityReport is_valid_fuzzy(const FuzzyNumber& u, const RGrid& grid, double tol) {
    const RGrid* knots = knots_of(u);
    const RGrid levels = knots ? grid.merged(*knots) : grid;

    ValidityReport report;
    LevelPair prev{};
    for (std::size_t i = 0; i < levels.size(); ++i) {
        const double r = levels[i];
        const auto cur = u.at(r);
        if (i > 0) {
            if (cur.lower < prev.lower - tol) {
                report.violations.push_back({ViolationKind::LowerDecreasing, r, prev.lower, cur.lower});
            }
            if (cur.upper > prev.upper + tol) {
                report.violations.push_back({ViolationKind::UpperIncreasing, r, prev.upper, cur.upper});
            }
        }
        if (cur.lower > cur.upper + tol) {
            report.violations.push_back({ViolationKind::LowerAboveUpper, r, cur.lower, cur.upper});
        }
        prev = cur;
    }
    return report;
}

}  // namespace fls
