#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Bit-packed linear algebra over GF(2).
//
// Convention used everywhere in this library (vectors, matrices, files):
// coordinate k of a length-n vector, counted from 1, lives in bit k-1 of the
// packed word array, i.e. word[(k-1)/64] bit (k-1)%64.  All APIs below take
// 0-based bit indices; the 1-based coordinate language only shows up in
// user-facing text.  Bits at positions >= length are always zero.

namespace hampart {

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::uint32_t length)
        : len_(length), w_((length + 63) / 64, 0) {}

    static BitVector unit(std::uint32_t length, std::uint32_t bit);
    // Accepts only '0'/'1'; character i becomes bit i.
    static BitVector from_string(std::string_view s);

    std::uint32_t length() const { return len_; }
    bool get(std::uint32_t bit) const {
        return (w_[bit >> 6] >> (bit & 63)) & 1u;
    }
    void set(std::uint32_t bit, bool value) {
        if (value)
            w_[bit >> 6] |= std::uint64_t(1) << (bit & 63);
        else
            w_[bit >> 6] &= ~(std::uint64_t(1) << (bit & 63));
    }

    std::uint32_t weight() const;
    bool is_zero() const;
    // Index of the lowest set bit, or length() if none.
    std::uint32_t leading_bit() const;

    BitVector& operator^=(const BitVector& o);
    friend BitVector operator^(BitVector a, const BitVector& b) { a ^= b; return a; }
    // Parity of the AND of two equal-length vectors.
    friend bool dot(const BitVector& a, const BitVector& b);

    bool operator==(const BitVector& o) const = default;

    std::string to_string() const;
    const std::vector<std::uint64_t>& words() const { return w_; }
    std::vector<std::uint64_t>& words() { return w_; }

private:
    std::uint32_t len_ = 0;
    std::vector<std::uint64_t> w_;
};

class BitMatrix {
public:
    BitMatrix() = default;
    // 0 x cols, to be filled by append_row
    explicit BitMatrix(std::uint32_t cols) : cols_(cols) {}
    BitMatrix(std::uint32_t rows, std::uint32_t cols)
        : cols_(cols), rows_(rows, BitVector(cols)) {}

    static BitMatrix identity(std::uint32_t n);
    static BitMatrix from_strings(const std::vector<std::string>& rows);

    std::uint32_t rows() const { return static_cast<std::uint32_t>(rows_.size()); }
    std::uint32_t cols() const { return cols_; }
    const BitVector& row(std::uint32_t i) const { return rows_[i]; }
    BitVector& row(std::uint32_t i) { return rows_[i]; }
    bool get(std::uint32_t r, std::uint32_t c) const { return rows_[r].get(c); }
    void set(std::uint32_t r, std::uint32_t c, bool v) { rows_[r].set(c, v); }

    void append_row(BitVector v);
    // Rows of a stacked on top of rows of b; column counts must agree.
    friend BitMatrix stack(const BitMatrix& a, const BitMatrix& b);
    BitMatrix transposed() const;

    // y = M x, length rows(); bit r of y is the parity of row r AND x.
    BitVector mul(const BitVector& x) const;

    bool operator==(const BitMatrix& o) const = default;

private:
    std::uint32_t cols_ = 0;
    std::vector<BitVector> rows_;
};

// Gaussian elimination with a fixed pivot rule: pivots are chosen on the
// leftmost available column, rows in first-come order.  This makes rank,
// rref, solve and kernel_basis fully deterministic for a given input.
std::uint32_t rank(const BitMatrix& m);

// Reduced row echelon form with zero rows dropped; canonical for the row
// space, so two matrices have equal row spaces iff their rrefs are equal.
BitMatrix rref(const BitMatrix& m);

// One solution of M x = b or nullopt when inconsistent.  Free variables are
// fixed to zero, so the solution is canonical.
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b);

// Basis of {x : M x = 0}, one row per free column of rref(M), ordered by
// free-column index.  Row count is always cols - rank.
BitMatrix kernel_basis(const BitMatrix& m);

} // namespace hampart
