#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace fls {

/// Raised when an argument falls outside an operation's domain
/// (r outside [0,1], badly ordered triangle, mismatched lengths, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Slack used by validity checks; floating-point monotonicity wobbles at round-off scale.
inline constexpr double kValidityTolerance = 1e-9;

/// Strictly increasing discretization of the membership level r over [0,1].
class RGrid {
public:
    static constexpr std::size_t kDefaultPoints = 101;

    /// Throws DomainError unless points start at 0, end at 1, are strictly
    /// increasing and number at least two.
    explicit RGrid(std::vector<double> points);

    /// `count` equally spaced points, endpoints exact.
    static RGrid uniform(std::size_t count = kDefaultPoints);

    std::span<const double> points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    double operator[](std::size_t i) const { return points_[i]; }

    /// Sorted union of both grids.
    RGrid merged(const RGrid& other) const;

    /// True when every point of `other` also appears (exactly) here.
    bool contains_all(const RGrid& other) const;

    bool operator==(const RGrid&) const = default;

private:
    std::vector<double> points_;
};

/// Value of a parametric fuzzy number at one level r.
struct LevelPair {
    double lower;
    double upper;

    bool operator==(const LevelPair&) const = default;
};

struct Crisp {
    double a;
    bool operator==(const Crisp&) const = default;
};

/// Triangle (a, c, b): lower(r) = a + (c - a) r, upper(r) = b + (c - b) r.
struct Triangular {
    double a;
    double c;
    double b;
    bool operator==(const Triangular&) const = default;
};

/// Piecewise-linear profiles given at the knots of `grid`.
struct Sampled {
    RGrid grid;
    std::vector<double> lower;
    std::vector<double> upper;
    bool operator==(const Sampled&) const = default;
};

/// A fuzzy number in parametric form, a pair (lower(r), upper(r)) on r in [0,1].
///
/// Values are immutable. Construction through `triangular` enforces a <= c <= b;
/// `sampled` and `affine` only check shape, so they can also carry the raw
/// lower/upper pairs of a weak solution. Use is_valid_fuzzy to certify a value.
/// Jump-discontinuous profiles cannot be represented.
class FuzzyNumber {
public:
    using Representation = std::variant<Crisp, Triangular, Sampled>;

    static FuzzyNumber crisp(double a);
    static FuzzyNumber triangular(double a, double c, double b);
    static FuzzyNumber sampled(RGrid grid, std::vector<double> lower, std::vector<double> upper);
    /// Affine pair with lower(0)=a, lower(1)=upper(1)=c, upper(0)=b. No ordering check.
    static FuzzyNumber affine(double a, double c, double b);

    const Representation& representation() const noexcept { return rep_; }

    /// Crisp or Triangular, i.e. both profiles affine in r.
    bool is_affine() const noexcept { return !std::holds_alternative<Sampled>(rep_); }

    LevelPair at(double r) const;

    /// Sampled rendering on `grid`. Exact for affine values.
    FuzzyNumber sampled_on(const RGrid& grid) const;

    bool operator==(const FuzzyNumber&) const = default;

private:
    explicit FuzzyNumber(Representation rep) : rep_(std::move(rep)) {}

    Representation rep_;
};

FuzzyNumber make_triangular(double a, double c, double b);

/// Throws DomainError for r outside [0,1].
LevelPair eval(const FuzzyNumber& u, double r);

FuzzyNumber add(const FuzzyNumber& u, const FuzzyNumber& v);

/// k > 0 scales both parts, k < 0 scales and swaps them, k = 0 gives Crisp(0).
FuzzyNumber scale(double k, const FuzzyNumber& u);

inline FuzzyNumber operator+(const FuzzyNumber& u, const FuzzyNumber& v) { return add(u, v); }
inline FuzzyNumber operator*(double k, const FuzzyNumber& u) { return scale(k, u); }

/// Pointwise comparison of both profiles on the grid.
bool equals(const FuzzyNumber& u, const FuzzyNumber& v, const RGrid& grid, double tol);

enum class ViolationKind {
    LowerDecreasing,
    UpperIncreasing,
    LowerAboveUpper,
};

struct ValidityViolation {
    ViolationKind kind;
    double r;       // offending level
    double first;   // LowerAboveUpper: lower(r); monotonicity: value at the previous level
    double second;  // LowerAboveUpper: upper(r); monotonicity: value at r
};

struct ValidityReport {
    std::vector<ValidityViolation> violations;

    bool valid() const noexcept { return violations.empty(); }
    explicit operator bool() const noexcept { return valid(); }
};

std::string describe(const ValidityViolation& v);

/// Checks the three parametric requirements at every point of `grid`, plus the
/// knots of a Sampled value, with slack `tol`.
ValidityReport is_valid_fuzzy(const FuzzyNumber& u, const RGrid& grid,
                              double tol = kValidityTolerance);

}  // namespace fls
