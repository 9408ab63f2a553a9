#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace gapn {

// Dense matrix over the prime field F_p with explicit modular pivoting.
// Sizes stay tiny here (at most 2n x 2n for subspace work), so everything
// is plain Gaussian elimination.
class FpMatrix {
public:
    FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);

    std::uint32_t p() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint32_t& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    std::uint32_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    static FpMatrix identity(std::uint32_t p, std::size_t n);

    std::size_t rank() const;
    bool invertible() const { return rows_ == cols_ && rank() == rows_; }
    std::optional<FpMatrix> inverse() const;

    // Reduced row echelon form with zero rows dropped: a canonical basis of
    // the row space.
    FpMatrix row_basis() const;

    // Basis of the right kernel {v : M v = 0}, one row per basis vector.
    FpMatrix kernel_basis() const;

    std::vector<std::uint32_t> mul_vec(std::span<const std::uint32_t> v) const;

    static FpMatrix vstack(const FpMatrix& top, const FpMatrix& bottom);

    // Basis of the intersection of the two row spaces (Zassenhaus).
    static FpMatrix row_space_intersection(const FpMatrix& a, const FpMatrix& b);

    bool operator==(const FpMatrix& other) const = default;

private:
    std::uint32_t p_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> a_;

    std::uint32_t inv_mod(std::uint32_t v) const;
    // In-place RREF; returns pivot columns.
    std::vector<std::size_t> reduce();
};

} // namespace gapn
