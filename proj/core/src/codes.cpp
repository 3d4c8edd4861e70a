#include "hampart/codes.hpp"

#include <stdexcept>
#include <string>

namespace hampart {

void LinearCode::finish() {
    n_ = parity_.cols();
    if (rank(parity_) != parity_.rows())
        throw std::invalid_argument("parity-check rows are dependent");
    parity_rref_ = rref(parity_);

    const std::uint32_t r = parity_.rows();
    hamming_ = false;
    syndrome_pos_.clear();
    if (r < 32 && n_ == (std::uint32_t(1) << r) - 1) {
        std::vector<std::int32_t> pos(std::size_t(1) << r, -1);
        bool ok = true;
        for (std::uint32_t k = 0; k < n_ && ok; ++k) {
            std::uint32_t v = column_value(k);
            if (v == 0 || pos[v] >= 0)
                ok = false;
            else
                pos[v] = static_cast<std::int32_t>(k);
        }
        if (ok) {
            hamming_ = true;
            syndrome_pos_ = std::move(pos);
        }
    }
}

LinearCode LinearCode::from_parity_check(BitMatrix h) {
    LinearCode c;
    c.parity_ = std::move(h);
    c.finish();
    return c;
}

LinearCode LinearCode::from_generator(const BitMatrix& g) {
    if (rank(g) != g.rows())
        throw std::invalid_argument("generator rows are dependent");
    LinearCode c;
    c.parity_ = kernel_basis(g);
    c.finish();
    // kernel_basis guarantees annihilation; the dimension identity is the
    // cheap cross-check that g really had full rank against the kernel.
    if (c.dimension() != g.rows())
        throw std::logic_error("generator/parity dimension mismatch");
    return c;
}

bool LinearCode::contains(const BitVector& v) const {
    if (v.length() != n_) throw std::invalid_argument("contains: length mismatch");
    for (std::uint32_t i = 0; i < parity_.rows(); ++i)
        if (dot(parity_.row(i), v)) return false;
    return true;
}

std::uint32_t LinearCode::column_value(std::uint32_t position) const {
    std::uint32_t v = 0;
    for (std::uint32_t i = 0; i < parity_.rows(); ++i)
        if (parity_.get(i, position)) v |= std::uint32_t(1) << i;
    return v;
}

std::uint32_t LinearCode::syndrome_of(const BitVector& v) const {
    std::uint32_t s = 0;
    for (std::uint32_t i = 0; i < parity_.rows(); ++i)
        if (dot(parity_.row(i), v)) s |= std::uint32_t(1) << i;
    return s;
}

std::uint32_t LinearCode::position_of_syndrome(std::uint32_t s) const {
    if (!hamming_ || s == 0 || s >= syndrome_pos_.size())
        throw std::invalid_argument("position_of_syndrome: no such column");
    return static_cast<std::uint32_t>(syndrome_pos_[s]);
}

std::uint32_t intersection_dim(const LinearCode& a, const LinearCode& b) {
    if (a.length() != b.length())
        throw std::invalid_argument("intersection_dim: length mismatch");
    return a.length() - rank(stack(a.parity_check(), b.parity_check()));
}

LinearCode hamming_code(std::uint32_t m, std::span<const std::uint32_t> column_order) {
    if (m < 2 || m > 20) throw std::invalid_argument("hamming_code: m out of range");
    const std::uint32_t n = (std::uint32_t(1) << m) - 1;
    if (column_order.size() != n)
        throw std::invalid_argument("hamming_code: column_order has wrong size");
    std::vector<bool> seen(n + 1, false);
    BitMatrix h(m, n);
    for (std::uint32_t k = 0; k < n; ++k) {
        std::uint32_t v = column_order[k];
        if (v == 0 || v > n || seen[v])
            throw std::invalid_argument("hamming_code: column_order is not a bijection onto 1..2^m-1");
        seen[v] = true;
        for (std::uint32_t i = 0; i < m; ++i)
            if ((v >> i) & 1) h.set(i, k, true);
    }
    return LinearCode::from_parity_check(std::move(h));
}

LinearCode hamming_code(std::uint32_t m) {
    const std::uint32_t n = (std::uint32_t(1) << m) - 1;
    std::vector<std::uint32_t> order(n);
    for (std::uint32_t k = 0; k < n; ++k) order[k] = k + 1;
    return hamming_code(m, order);
}

BitVector coset_leader(const LinearCode& code, const BitVector& representative) {
    std::uint32_t s = code.syndrome_of(representative);
    if (s == 0) return BitVector(code.length());
    if (!code.is_hamming())
        throw std::invalid_argument("coset_leader: code is not Hamming-shaped");
    return BitVector::unit(code.length(), code.position_of_syndrome(s));
}

Coset make_coset(LinearCode code, BitVector representative) {
    if (representative.length() != code.length())
        throw std::invalid_argument("make_coset: length mismatch");
    BitVector leader = coset_leader(code, representative);
    return Coset{std::move(code), std::move(representative), std::move(leader)};
}

std::optional<std::uint32_t> coset_intersection_size_log(const Coset& a, const Coset& b) {
    const std::uint32_t n = a.code.length();
    if (b.code.length() != n)
        throw std::invalid_argument("coset_intersection_size_log: length mismatch");
    // x lies in both cosets iff the stacked system H_a x = H_a r_a,
    // H_b x = H_b r_b is satisfied; solvability decides disjointness and the
    // solution space has dimension n - rank(stack).
    BitMatrix h = stack(a.code.parity_check(), b.code.parity_check());
    BitVector rhs(h.rows());
    std::uint32_t at = 0;
    for (std::uint32_t i = 0; i < a.code.parity_check().rows(); ++i, ++at)
        rhs.set(at, dot(a.code.parity_check().row(i), a.representative));
    for (std::uint32_t i = 0; i < b.code.parity_check().rows(); ++i, ++at)
        rhs.set(at, dot(b.code.parity_check().row(i), b.representative));
    if (!solve(h, rhs)) return std::nullopt;
    return n - rank(h);
}

LinearCode extend(const LinearCode& c) {
    const std::uint32_t n = c.length();
    // Parity check of the extension: old rows padded with 0, plus the
    // all-ones row enforcing even weight.  The all-ones row is independent
    // because every padded row ends in 0.
    BitMatrix h(c.redundancy() + 1, n + 1);
    for (std::uint32_t i = 0; i < c.redundancy(); ++i)
        for (std::uint32_t k = 0; k < n; ++k)
            h.set(i, k, c.parity_check().get(i, k));
    for (std::uint32_t k = 0; k <= n; ++k) h.set(c.redundancy(), k, true);
    return LinearCode::from_parity_check(std::move(h));
}

LinearCode puncture(const LinearCode& c, std::uint32_t position) {
    const std::uint32_t n = c.length();
    if (position >= n) throw std::invalid_argument("puncture: position out of range");
    BitMatrix g = c.generator();
    BitMatrix pg(0, n - 1);
    for (std::uint32_t i = 0; i < g.rows(); ++i) {
        BitVector row(n - 1);
        for (std::uint32_t k = 0, at = 0; k < n; ++k) {
            if (k == position) continue;
            row.set(at++, g.get(i, k));
        }
        pg.append_row(std::move(row));
    }
    if (rank(pg) != g.rows())
        throw std::invalid_argument("puncture: coordinate " + std::to_string(position + 1) +
                                    " carries information, dimension would drop");
    return LinearCode::from_generator(pg);
}

} // namespace hampart
