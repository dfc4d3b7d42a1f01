#pragma once

#include <span>
#include <vector>

#include "fls/fuzzy_number.hpp"
#include "fls/matrix.hpp"

namespace fls {

/// n x n system A x = b with crisp A and fuzzy right-hand side.
class FuzzySystem {
public:
    /// Throws DomainError if rhs length differs from A.n() or any entry fails
    /// is_valid_fuzzy on the default grid.
    FuzzySystem(CrispMatrix a, std::vector<FuzzyNumber> rhs);

    std::size_t n() const noexcept { return a_.n(); }
    const CrispMatrix& coefficients() const noexcept { return a_; }
    std::span<const FuzzyNumber> rhs() const noexcept { return rhs_; }

    /// Every rhs entry is Crisp or Triangular.
    bool affine_rhs() const noexcept;

    bool operator==(const FuzzySystem&) const = default;

private:
    CrispMatrix a_;
    std::vector<FuzzyNumber> rhs_;
};

/// A = positive - negative, both parts entrywise nonnegative with disjoint support.
struct SplitMatrices {
    Matrix positive;  // entries a_ij >= 0 (zeros land here)
    Matrix negative;  // |a_ij| for a_ij < 0

    Matrix sum() const { return positive + negative; }
    Matrix difference() const { return positive - negative; }
};

SplitMatrices split(const CrispMatrix& a);

/// The 2n x 2n nonnegative embedding [[P, N], [N, P]].
Matrix assemble_embedding(const SplitMatrices& parts);

/// (lower_1(r) .. lower_n(r), -upper_1(r) .. -upper_n(r)).
std::vector<double> embed_rhs(std::span<const FuzzyNumber> rhs, double r);

/// lower_i(r) - upper_i(r); nonpositive for valid fuzzy entries.
std::vector<double> spread_vector(std::span<const FuzzyNumber> rhs, double r);

/// lower_i(r) + upper_i(r).
std::vector<double> center_sum_vector(std::span<const FuzzyNumber> rhs, double r);

}  // namespace fls
