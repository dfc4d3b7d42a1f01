#include "fls/system.hpp"

#include <algorithm>
#include <sstream>

namespace fls {

FuzzySystem::FuzzySystem(CrispMatrix a, std::vector<FuzzyNumber> rhs)
    : a_(std::move(a)), rhs_(std::move(rhs)) {
    if (rhs_.size() != a_.n()) {
        std::ostringstream msg;
        msg << "right-hand side has " << rhs_.size() << " entries, matrix is " << a_.n() << "x"
            << a_.n();
        throw DomainError(msg.str());
    }
    const auto grid = RGrid::uniform();
    for (std::size_t i = 0; i < rhs_.size(); ++i) {
        auto report = is_valid_fuzzy(rhs_[i], grid);
        if (!report) {
            std::ostringstream msg;
            msg << "rhs[" << i << "] is not a fuzzy number: " << describe(report.violations.front());
            throw DomainError(msg.str());
        }
    }
}

bool FuzzySystem::affine_rhs() const noexcept {
    return std::all_of(rhs_.begin(), rhs_.end(), [](const auto& u) { return u.is_affine(); });
}

SplitMatrices split(const CrispMatrix& a) {
    const std::size_t n = a.n();
    SplitMatrices parts{Matrix(n, n), Matrix(n, n)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double x = a(i, j);
            if (x >= 0.0) {
                parts.positive(i, j) = x;
            } else {
                parts.negative(i, j) = -x;
            }
        }
    }
    return parts;
}

Matrix assemble_embedding(const SplitMatrices& parts) {
    const std::size_t n = parts.positive.rows();
    Matrix s(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            s(i, j) = parts.positive(i, j);
            s(i + n, j + n) = parts.positive(i, j);
            s(i, j + n) = parts.negative(i, j);
            s(i + n, j) = parts.negative(i, j);
        }
    }
    return s;
}

std::vector<double> embed_rhs(std::span<const FuzzyNumber> rhs, double r) {
    const std::size_t n = rhs.size();
    std::vector<double> out(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        auto p = eval(rhs[i], r);
        out[i] = p.lower;
        out[i + n] = -p.upper;
    }
    return out;
}

std::vector<double> spread_vector(std::span<const FuzzyNumber> rhs, double r) {
    std::vector<double> out;
    out.reserve(rhs.size());
    for (const auto& u : rhs) {
        auto p = eval(u, r);
        out.push_back(p.lower - p.upper);
    }
    return out;
}

std::vector<double> center_sum_vector(std::span<const FuzzyNumber> rhs, double r) {
    std::vector<double> out;
    out.reserve(rhs.size());
    for (const auto& u : rhs) {
        auto p = eval(u, r);
        out.push_back(p.lower + p.upper);
    }
    return out;
}

}  // namespace fls
