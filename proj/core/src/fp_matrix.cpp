#include "gapn/fp_matrix.hpp"

#include "gapn/numeric.hpp"

namespace gapn {

FpMatrix::FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0)
{
}

FpMatrix FpMatrix::identity(std::uint32_t p, std::size_t n)
{
    FpMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

std::uint32_t FpMatrix::inv_mod(std::uint32_t v) const
{
    return static_cast<std::uint32_t>(pow_mod_u64(v, p_ - 2, p_));
}

std::vector<std::size_t> FpMatrix::reduce()
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t pr = row;
        while (pr < rows_ && at(pr, col) == 0)
            ++pr;
        if (pr == rows_)
            continue;
        if (pr != row) {
            for (std::size_t c = 0; c < cols_; ++c)
                std::swap(at(pr, c), at(row, c));
        }
        std::uint32_t pi = inv_mod(at(row, col));
        for (std::size_t c = col; c < cols_; ++c)
            at(row, c) = static_cast<std::uint32_t>(
                static_cast<std::uint64_t>(at(row, c)) * pi % p_);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || at(r, col) == 0)
                continue;
            std::uint32_t f = at(r, col);
            for (std::size_t c = col; c < cols_; ++c) {
                std::uint64_t sub = static_cast<std::uint64_t>(f) * at(row, c) % p_;
                at(r, c) = static_cast<std::uint32_t>((at(r, c) + p_ - sub) % p_);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t FpMatrix::rank() const
{
    FpMatrix copy = *this;
    return copy.reduce().size();
}

std::optional<FpMatrix> FpMatrix::inverse() const
{
    if (rows_ != cols_)
        return std::nullopt;
    if (rows_ == 0)
        return FpMatrix(p_, 0, 0);
    FpMatrix aug(p_, rows_, 2 * cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c)
            aug.at(r, c) = at(r, c);
        aug.at(r, cols_ + r) = 1;
    }
    auto pivots = aug.reduce();
    if (pivots.size() != rows_ || pivots.back() >= cols_)
        return std::nullopt;
    FpMatrix inv(p_, rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            inv.at(r, c) = aug.at(r, cols_ + c);
    return inv;
}

FpMatrix FpMatrix::row_basis() const
{
    FpMatrix copy = *this;
    auto pivots = copy.reduce();
    FpMatrix out(p_, pivots.size(), cols_);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out.at(r, c) = copy.at(r, c);
    return out;
}

FpMatrix FpMatrix::kernel_basis() const
{
    FpMatrix copy = *this;
    auto pivots = copy.reduce();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots)
        is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c])
            free_cols.push_back(c);
    FpMatrix out(p_, free_cols.size(), cols_);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t fc = free_cols[k];
        out.at(k, fc) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            std::uint32_t v = copy.at(r, fc);
            if (v != 0)
                out.at(k, pivots[r]) = p_ - v;
        }
    }
    return out;
}

std::vector<std::uint32_t> FpMatrix::mul_vec(std::span<const std::uint32_t> v) const
{
    std::vector<std::uint32_t> out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < cols_; ++c)
            acc += static_cast<std::uint64_t>(at(r, c)) * v[c];
        out[r] = static_cast<std::uint32_t>(acc % p_);
    }
    return out;
}

FpMatrix FpMatrix::vstack(const FpMatrix& top, const FpMatrix& bottom)
{
    FpMatrix out(top.p_, top.rows_ + bottom.rows_, top.cols_);
    for (std::size_t r = 0; r < top.rows_; ++r)
        for (std::size_t c = 0; c < top.cols_; ++c)
            out.at(r, c) = top.at(r, c);
    for (std::size_t r = 0; r < bottom.rows_; ++r)
        for (std::size_t c = 0; c < bottom.cols_; ++c)
            out.at(top.rows_ + r, c) = bottom.at(r, c);
    return out;
}

FpMatrix FpMatrix::row_space_intersection(const FpMatrix& a, const FpMatrix& b)
{
    // Zassenhaus: reduce [A|A; B|0]; rows with zero left half carry an
    // intersection basis in their right half.
    std::size_t c = a.cols_;
    FpMatrix block(a.p_, a.rows_ + b.rows_, 2 * c);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t j = 0; j < c; ++j) {
            block.at(r, j) = a.at(r, j);
            block.at(r, c + j) = a.at(r, j);
        }
    for (std::size_t r = 0; r < b.rows_; ++r)
        for (std::size_t j = 0; j < c; ++j)
            block.at(a.rows_ + r, j) = b.at(r, j);
    block.reduce();
    std::vector<std::size_t> inter_rows;
    for (std::size_t r = 0; r < block.rows_; ++r) {
        bool left_zero = true;
        bool right_zero = true;
        for (std::size_t j = 0; j < c; ++j) {
            if (block.at(r, j) != 0)
                left_zero = false;
            if (block.at(r, c + j) != 0)
                right_zero = false;
        }
        if (left_zero && !right_zero)
            inter_rows.push_back(r);
    }
    FpMatrix out(a.p_, inter_rows.size(), c);
    for (std::size_t k = 0; k < inter_rows.size(); ++k)
        for (std::size_t j = 0; j < c; ++j)
            out.at(k, j) = block.at(inter_rows[k], c + j);
    return out;
}

} // namespace gapn
