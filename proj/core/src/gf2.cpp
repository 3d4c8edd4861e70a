#include "hampart/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace hampart {

BitVector BitVector::unit(std::uint32_t length, std::uint32_t bit) {
    if (bit >= length) throw std::invalid_argument("unit: bit out of range");
    BitVector v(length);
    v.set(bit, true);
    return v;
}

BitVector BitVector::from_string(std::string_view s) {
    BitVector v(static_cast<std::uint32_t>(s.size()));
    for (std::uint32_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            v.set(i, true);
        else if (s[i] != '0')
            throw std::invalid_argument("from_string: expected '0' or '1'");
    }
    return v;
}

std::uint32_t BitVector::weight() const {
    std::uint32_t w = 0;
    for (std::uint64_t x : w_) w += static_cast<std::uint32_t>(std::popcount(x));
    return w;
}

bool BitVector::is_zero() const {
    for (std::uint64_t x : w_)
        if (x) return false;
    return true;
}

std::uint32_t BitVector::leading_bit() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return static_cast<std::uint32_t>(i * 64 + std::countr_zero(w_[i]));
    return len_;
}

BitVector& BitVector::operator^=(const BitVector& o) {
    if (o.len_ != len_) throw std::invalid_argument("xor: length mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

bool dot(const BitVector& a, const BitVector& b) {
    if (a.len_ != b.len_) throw std::invalid_argument("dot: length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < a.w_.size(); ++i) acc ^= a.w_[i] & b.w_[i];
    return std::popcount(acc) & 1;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (std::uint32_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitMatrix BitMatrix::identity(std::uint32_t n) {
    BitMatrix m(n, n);
    for (std::uint32_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
    BitMatrix m;
    for (const auto& r : rows) m.append_row(BitVector::from_string(r));
    return m;
}

void BitMatrix::append_row(BitVector v) {
    if (rows_.empty())
        cols_ = v.length();
    else if (v.length() != cols_)
        throw std::invalid_argument("append_row: column count mismatch");
    rows_.push_back(std::move(v));
}

BitMatrix stack(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows() && b.rows() && a.cols() != b.cols())
        throw std::invalid_argument("stack: column count mismatch");
    BitMatrix m = a;
    for (std::uint32_t i = 0; i < b.rows(); ++i) m.append_row(b.row(i));
    return m;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows());
    for (std::uint32_t r = 0; r < rows(); ++r)
        for (std::uint32_t c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r, true);
    return t;
}

BitVector BitMatrix::mul(const BitVector& x) const {
    if (x.length() != cols_) throw std::invalid_argument("mul: length mismatch");
    BitVector y(rows());
    for (std::uint32_t r = 0; r < rows(); ++r)
        if (dot(rows_[r], x)) y.set(r, true);
    return y;
}

namespace {

// Shared elimination core.  Pivot rows are kept sorted by pivot column; each
// incoming row is reduced against all of them, then becomes a new pivot if
// nonzero.  With full_reduce the pivot column is also cleared from earlier
// pivot rows, which yields the rref.
struct Elimination {
    std::vector<BitVector> pivot_rows;
    std::vector<std::uint32_t> pivot_cols; // ascending

    // Returns the reduced remainder of v.
    BitVector reduce(BitVector v) const {
        for (std::size_t i = 0; i < pivot_rows.size(); ++i)
            if (v.get(pivot_cols[i])) v ^= pivot_rows[i];
        return v;
    }

    // Reduce and, when nonzero remains, insert as a pivot.  Returns true if
    // the row increased the rank.
    bool add(BitVector v, bool full_reduce) {
        v = reduce(std::move(v));
        std::uint32_t lead = v.leading_bit();
        if (lead == v.length()) return false;
        std::size_t at = 0;
        while (at < pivot_cols.size() && pivot_cols[at] < lead) ++at;
        if (full_reduce)
            for (std::size_t i = 0; i < pivot_rows.size(); ++i)
                if (pivot_rows[i].get(lead)) pivot_rows[i] ^= v;
        pivot_rows.insert(pivot_rows.begin() + at, std::move(v));
        pivot_cols.insert(pivot_cols.begin() + at, lead);
        return true;
    }
};

} // namespace

std::uint32_t rank(const BitMatrix& m) {
    Elimination e;
    std::uint32_t r = 0;
    for (std::uint32_t i = 0; i < m.rows(); ++i)
        if (e.add(m.row(i), false)) ++r;
    return r;
}

BitMatrix rref(const BitMatrix& m) {
    Elimination e;
    for (std::uint32_t i = 0; i < m.rows(); ++i) e.add(m.row(i), true);
    BitMatrix out;
    for (auto& row : e.pivot_rows) out.append_row(std::move(row));
    if (out.rows() == 0) out = BitMatrix(0, m.cols());
    return out;
}

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b) {
    if (b.length() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
    // Eliminate with the rhs carried as an extra bit beyond the last column;
    // a zero row with that bit set witnesses inconsistency.
    const std::uint32_t n = m.cols();
    Elimination e;
    for (std::uint32_t i = 0; i < m.rows(); ++i) {
        BitVector aug(n + 1);
        for (std::uint32_t c = 0; c < n; ++c) aug.set(c, m.get(i, c));
        aug.set(n, b.get(i));
        aug = e.reduce(std::move(aug));
        std::uint32_t lead = aug.leading_bit();
        if (lead == n) return std::nullopt;   // 0 = 1
        if (lead > n) continue;               // dependent consistent row
        std::size_t at = 0;
        while (at < e.pivot_cols.size() && e.pivot_cols[at] < lead) ++at;
        for (auto& p : e.pivot_rows)
            if (p.get(lead)) p ^= aug;
        e.pivot_rows.insert(e.pivot_rows.begin() + at, std::move(aug));
        e.pivot_cols.insert(e.pivot_cols.begin() + at, lead);
    }
    BitVector x(n);
    for (std::size_t i = 0; i < e.pivot_rows.size(); ++i)
        x.set(e.pivot_cols[i], e.pivot_rows[i].get(n));
    return x;
}

BitMatrix kernel_basis(const BitMatrix& m) {
    const std::uint32_t n = m.cols();
    BitMatrix r = rref(m);
    std::vector<bool> is_pivot(n, false);
    std::vector<std::uint32_t> pivot_of_row(r.rows());
    for (std::uint32_t i = 0; i < r.rows(); ++i) {
        pivot_of_row[i] = r.row(i).leading_bit();
        is_pivot[pivot_of_row[i]] = true;
    }
    BitMatrix out(0, n);
    for (std::uint32_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        BitVector v(n);
        v.set(f, true);
        for (std::uint32_t i = 0; i < r.rows(); ++i)
            if (r.get(i, f)) v.set(pivot_of_row[i], true);
        out.append_row(std::move(v));
    }
    return out;
}

} // namespace hampart
