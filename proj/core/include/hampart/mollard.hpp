// Mollard-style composition: two Hamming codes of lengths l and t combine
// into one of length lt + l + t, and componentwise application turns a pair
// of coset partitions into a partition at the composed length.
#pragma once

#include "hampart/codes.hpp"
#include "hampart/partition.hpp"

namespace hampart {

// Coordinate layout of a composed word (x, y, z): the x block is an l-by-t
// array stored row major in positions 0 .. lt-1, then y (length l), then z
// (length t).
struct MollardFrame {
    std::uint32_t l = 0;
    std::uint32_t t = 0;

    std::uint32_t n() const { return l * t + l + t; }
    std::uint32_t x_pos(std::uint32_t i, std::uint32_t j) const { return i * t + j; }
    std::uint32_t y_pos(std::uint32_t i) const { return l * t + i; }
    std::uint32_t z_pos(std::uint32_t j) const { return l * t + l + j; }
};

// Row parities of the x block: p1(v)[i] = sum_j x[i][j].
BitVector p1(const MollardFrame& f, const BitVector& v);
// Column parities: p2(v)[j] = sum_i x[i][j].
BitVector p2(const MollardFrame& f, const BitVector& v);

// The composed code M(C, D) = { (x, y, z) : p1(x) + y in C, p2(x) + z in D }.
// Both inputs must be Hamming codes; the result is again Hamming-shaped of
// redundancy a + b since the stacked parity columns run through every
// nonzero pair exactly once.
LinearCode mollard_code(const LinearCode& c, const LinearCode& d);

// Componentwise composition of two partitions: component (i, j) is
// M(C_i, D_j) + (0, u_i, w_j) with u_i, w_j the input leaders.  A word
// (x, y, z) lands in (i, j) exactly when p1(x) + y falls in component i of
// `a` and p2(x) + z in component j of `b`, so the output tiles the whole
// space; components come back re-indexed by their own leaders.
//
// Intersection dimensions compose additively,
//   dim(M(C_i,D_j) ^ M(C_r,D_s)) = lt + dim(C_i ^ C_r) + dim(D_j ^ D_s),
// so the result is uniform precisely when at least one input is a
// single-code partition (all pairs on that side meet in full dimension).
CodePartition construction_b(const CodePartition& a, const CodePartition& b);

} // namespace hampart
