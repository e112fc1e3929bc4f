#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sdpmds/algebra.hpp"

namespace sdpmds {

// Dense matrix over an Algebra. All elimination-based operations run per
// CRT component over the factor fields and lift the results back: over
// the ring a plain Gaussian elimination can strand an invertible matrix
// on a zero-divisor pivot, while componentwise every nonzero pivot is a
// unit. For a field this degenerates to ordinary elimination.
class Matrix {
public:
    Matrix(std::shared_ptr<const Algebra> alg, std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Algebra& algebra() const { return *alg_; }
    const std::shared_ptr<const Algebra>& algebra_ptr() const { return alg_; }

    std::uint64_t at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, std::uint64_t v);

    Matrix select_columns(const std::vector<std::size_t>& cols) const;
    std::vector<std::uint64_t> mul_vector(const std::vector<std::uint64_t>& x) const;

    std::uint64_t determinant() const; // square matrices only
    bool is_invertible() const;        // determinant is a unit
    // Componentwise rank; over the ring this is the minimum over the
    // factor fields, i.e. the largest k such that some k x k minor is a
    // unit.
    std::size_t rank() const;

    struct SolveResult {
        enum class Status { kUnique, kUnderdetermined, kInconsistent };
        Status status = Status::kUnique;
        std::vector<std::uint64_t> solution; // filled only when kUnique
        // Columns with no pivot in at least one component (sorted); these
        // unknowns have no unique value.
        std::vector<std::size_t> free_columns;
    };
    // Solve (*this) x = b.
    SolveResult solve(const std::vector<std::uint64_t>& b) const;

    std::string to_string() const; // one row per line, lowercase hex

private:
    std::shared_ptr<const Algebra> alg_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint64_t> data_;
};

} // namespace sdpmds
