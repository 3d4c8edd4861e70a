#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hampart/gf2.hpp"

#include <algorithm>
#include <random>
#include <vector>

using namespace hampart;

namespace {

// Plain int Gaussian elimination, written without any bit packing so it can
// serve as an independent oracle for the packed routines.
std::uint32_t naive_rank(std::vector<std::vector<int>> m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && m[i][c])
                for (std::size_t j = 0; j < cols; ++j) m[i][j] ^= m[r][j];
        ++r;
    }
    return static_cast<std::uint32_t>(r);
}

BitMatrix from_mask(std::uint64_t mask, std::uint32_t rows, std::uint32_t cols) {
    BitMatrix m(rows, cols);
    for (std::uint32_t r = 0; r < rows; ++r)
        for (std::uint32_t c = 0; c < cols; ++c)
            m.set(r, c, (mask >> (r * cols + c)) & 1);
    return m;
}

std::vector<std::vector<int>> unpack(const BitMatrix& m) {
    std::vector<std::vector<int>> out(m.rows(), std::vector<int>(m.cols()));
    for (std::uint32_t r = 0; r < m.rows(); ++r)
        for (std::uint32_t c = 0; c < m.cols(); ++c) out[r][c] = m.get(r, c);
    return out;
}

std::mt19937_64 rng(0x9a3c51u);

BitMatrix random_matrix(std::uint32_t rows, std::uint32_t cols) {
    BitMatrix m(rows, cols);
    for (std::uint32_t r = 0; r < rows; ++r)
        for (std::uint32_t c = 0; c < cols; ++c) m.set(r, c, rng() & 1);
    return m;
}

BitVector random_vector(std::uint32_t n) {
    BitVector v(n);
    for (std::uint32_t i = 0; i < n; ++i) v.set(i, rng() & 1);
    return v;
}

// Membership of v in the row space of m, decided by the rank characterisation
// (valid once rank itself is trusted against the naive oracle).
bool in_row_space(const BitMatrix& m, const BitVector& v) {
    BitMatrix ext = m;
    ext.append_row(v);
    return rank(ext) == rank(m);
}

} // namespace

TEST_CASE("bit vector basics across the word boundary") {
    BitVector v(130);
    CHECK(v.length() == 130);
    CHECK(v.is_zero());
    CHECK(v.weight() == 0);
    CHECK(v.leading_bit() == 130);
    v.set(0, true);
    v.set(63, true);
    v.set(64, true);
    v.set(129, true);
    CHECK(v.weight() == 4);
    CHECK(v.leading_bit() == 0);
    v.set(0, false);
    CHECK(v.leading_bit() == 63);
    CHECK(v.get(63));
    CHECK(v.get(64));
    CHECK_FALSE(v.get(65));

    BitVector u = BitVector::unit(130, 64);
    CHECK(u.weight() == 1);
    v ^= u;
    CHECK_FALSE(v.get(64));
    CHECK(v.weight() == 2);
}

TEST_CASE("bit vector string round trip") {
    const std::string s = "01101000110";
    BitVector v = BitVector::from_string(s);
    CHECK(v.length() == s.size());
    CHECK(v.to_string() == s);
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(v.get(i) == (s[i] == '1'));
}

TEST_CASE("dot is the parity of the and") {
    for (int trial = 0; trial < 50; ++trial) {
        BitVector a = random_vector(100), b = random_vector(100);
        int acc = 0;
        for (std::uint32_t i = 0; i < 100; ++i) acc ^= (a.get(i) && b.get(i)) ? 1 : 0;
        CHECK(dot(a, b) == (acc != 0));
    }
}

TEST_CASE("rank agrees with the naive oracle on every small matrix") {
    for (std::uint32_t rows = 1; rows <= 3; ++rows)
        for (std::uint32_t cols = 1; cols <= 4; ++cols) {
            const std::uint64_t total = std::uint64_t(1) << (rows * cols);
            for (std::uint64_t mask = 0; mask < total; ++mask) {
                BitMatrix m = from_mask(mask, rows, cols);
                REQUIRE(rank(m) == naive_rank(unpack(m)));
            }
        }
}

TEST_CASE("rank agrees with the naive oracle on random matrices") {
    for (int trial = 0; trial < 300; ++trial) {
        std::uint32_t rows = 1 + rng() % 8, cols = 1 + rng() % 10;
        BitMatrix m = random_matrix(rows, cols);
        CHECK(rank(m) == naive_rank(unpack(m)));
    }
}

TEST_CASE("rref is canonical for the row space") {
    for (int trial = 0; trial < 200; ++trial) {
        std::uint32_t rows = 2 + rng() % 6, cols = 3 + rng() % 10;
        BitMatrix m = random_matrix(rows, cols);
        BitMatrix r = rref(m);

        // idempotent, rank preserved, zero rows dropped
        CHECK(rref(r) == r);
        CHECK(r.rows() == rank(m));

        // every original row lies in the row space of the rref and vice versa
        for (std::uint32_t i = 0; i < m.rows(); ++i) CHECK(in_row_space(r, m.row(i)));
        for (std::uint32_t i = 0; i < r.rows(); ++i) CHECK(in_row_space(m, r.row(i)));

        // invariant under row operations
        BitMatrix shuffled = m;
        for (int k = 0; k < 8; ++k) {
            std::uint32_t a = rng() % rows, b = rng() % rows;
            if (a == b) continue;
            shuffled.row(a) ^= shuffled.row(b);
        }
        std::vector<BitVector> perm;
        for (std::uint32_t i = 0; i < rows; ++i) perm.push_back(shuffled.row(i));
        std::shuffle(perm.begin(), perm.end(), rng);
        BitMatrix reordered(cols);
        for (auto& row : perm) reordered.append_row(row);
        CHECK(rref(reordered) == r);
    }
}

TEST_CASE("solve returns a preimage exactly when one exists") {
    int solvable = 0, unsolvable = 0;
    for (int trial = 0; trial < 300; ++trial) {
        std::uint32_t rows = 1 + rng() % 7, cols = 1 + rng() % 9;
        BitMatrix m = random_matrix(rows, cols);
        BitVector b = random_vector(rows);
        auto x = solve(m, b);

        BitMatrix mt = m.transposed(); // rows of mt = columns of m
        BitMatrix ext = mt;
        // b is reachable iff it lies in the column space
        bool reachable = [&] {
            BitMatrix cols_and_b = mt;
            cols_and_b.append_row(b);
            return rank(cols_and_b) == rank(mt);
        }();
        CHECK(x.has_value() == reachable);
        if (x) {
            CHECK(m.mul(*x) == b);
            ++solvable;
        } else {
            ++unsolvable;
        }
        (void)ext;
    }
    // both branches actually exercised
    CHECK(solvable > 20);
    CHECK(unsolvable > 20);
}

TEST_CASE("solve hits constructed right-hand sides") {
    for (int trial = 0; trial < 200; ++trial) {
        std::uint32_t rows = 1 + rng() % 7, cols = 1 + rng() % 9;
        BitMatrix m = random_matrix(rows, cols);
        BitVector x = random_vector(cols);
        BitVector b = m.mul(x);
        auto got = solve(m, b);
        REQUIRE(got.has_value());
        CHECK(m.mul(*got) == b);
    }
}

TEST_CASE("kernel basis spans exactly the null space") {
    for (int trial = 0; trial < 200; ++trial) {
        std::uint32_t rows = 1 + rng() % 6, cols = 1 + rng() % 10;
        BitMatrix m = random_matrix(rows, cols);
        BitMatrix k = kernel_basis(m);
        CHECK(k.rows() == cols - rank(m));
        CHECK(rank(k) == k.rows()); // independent
        for (std::uint32_t i = 0; i < k.rows(); ++i)
            CHECK(m.mul(k.row(i)).is_zero());
    }
}

TEST_CASE("kernel of a large packed matrix") {
    BitMatrix m = random_matrix(40, 500);
    BitMatrix k = kernel_basis(m);
    CHECK(k.rows() == 500 - rank(m));
    for (std::uint32_t i = 0; i < k.rows(); ++i) CHECK(m.mul(k.row(i)).is_zero());
}

TEST_CASE("stack transpose and mul agree with index arithmetic") {
    BitMatrix a = random_matrix(5, 9), b = random_matrix(3, 9);
    BitMatrix s = stack(a, b);
    REQUIRE(s.rows() == 8);
    for (std::uint32_t r = 0; r < 5; ++r) CHECK(s.row(r) == a.row(r));
    for (std::uint32_t r = 0; r < 3; ++r) CHECK(s.row(5 + r) == b.row(r));

    BitMatrix t = a.transposed();
    REQUIRE(t.rows() == 9);
    REQUIRE(t.cols() == 5);
    for (std::uint32_t r = 0; r < 5; ++r)
        for (std::uint32_t c = 0; c < 9; ++c) CHECK(a.get(r, c) == t.get(c, r));

    BitVector x = random_vector(9);
    BitVector y = a.mul(x);
    for (std::uint32_t r = 0; r < 5; ++r) CHECK(y.get(r) == dot(a.row(r), x));
}

TEST_CASE("identity and from_strings") {
    BitMatrix id = BitMatrix::identity(6);
    CHECK(rank(id) == 6);
    CHECK(rref(id) == id);

    BitMatrix m = BitMatrix::from_strings({"101", "011"});
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m.get(0, 0));
    CHECK_FALSE(m.get(0, 1));
    CHECK(m.get(1, 2));
}
