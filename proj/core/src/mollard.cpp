#include "hampart/mollard.hpp"

#include <stdexcept>

namespace hampart {

BitVector p1(const MollardFrame& f, const BitVector& v) {
    if (v.length() != f.n()) throw std::invalid_argument("p1: length mismatch");
    BitVector out(f.l);
    for (std::uint32_t i = 0; i < f.l; ++i) {
        bool s = false;
        for (std::uint32_t j = 0; j < f.t; ++j) s ^= v.get(f.x_pos(i, j));
        out.set(i, s);
    }
    return out;
}

BitVector p2(const MollardFrame& f, const BitVector& v) {
    if (v.length() != f.n()) throw std::invalid_argument("p2: length mismatch");
    BitVector out(f.t);
    for (std::uint32_t j = 0; j < f.t; ++j) {
        bool s = false;
        for (std::uint32_t i = 0; i < f.l; ++i) s ^= v.get(f.x_pos(i, j));
        out.set(j, s);
    }
    return out;
}

LinearCode mollard_code(const LinearCode& c, const LinearCode& d) {
    if (!c.is_hamming() || !d.is_hamming())
        throw std::invalid_argument("mollard_code: inputs must be Hamming codes");
    MollardFrame f{c.length(), d.length()};
    const std::uint32_t n = f.n();
    const BitMatrix& hc = c.parity_check();
    const BitMatrix& hd = d.parity_check();

    // Parity rows written out directly from the membership conditions:
    // a row h of H_C contributes h_i at every cell (i, j) and at y_i; a row
    // g of H_D contributes g_j at every cell (i, j) and at z_j.
    BitMatrix h(n);
    for (std::uint32_t r = 0; r < hc.rows(); ++r) {
        BitVector row(n);
        for (std::uint32_t i = 0; i < f.l; ++i) {
            if (!hc.row(r).get(i)) continue;
            for (std::uint32_t j = 0; j < f.t; ++j) row.set(f.x_pos(i, j), true);
            row.set(f.y_pos(i), true);
        }
        h.append_row(std::move(row));
    }
    for (std::uint32_t r = 0; r < hd.rows(); ++r) {
        BitVector row(n);
        for (std::uint32_t j = 0; j < f.t; ++j) {
            if (!hd.row(r).get(j)) continue;
            for (std::uint32_t i = 0; i < f.l; ++i) row.set(f.x_pos(i, j), true);
            row.set(f.z_pos(j), true);
        }
        h.append_row(std::move(row));
    }
    return LinearCode::from_parity_check(std::move(h));
}

CodePartition construction_b(const CodePartition& a, const CodePartition& b) {
    if (a.components.size() != std::size_t(a.n) + 1 ||
        b.components.size() != std::size_t(b.n) + 1)
        throw std::invalid_argument("construction_b: inputs are not full partitions");
    MollardFrame f{a.n, b.n};
    const std::uint32_t n = f.n();

    std::vector<Coset> cosets;
    cosets.reserve(std::size_t(a.n + 1) * (b.n + 1));
    for (std::uint32_t i = 0; i <= a.n; ++i) {
        for (std::uint32_t j = 0; j <= b.n; ++j) {
            LinearCode code = mollard_code(a.components[i].code, b.components[j].code);
            BitVector rep(n);
            for (std::uint32_t k = 0; k < a.n; ++k)
                if (a.components[i].leader.get(k)) rep.set(f.y_pos(k), true);
            for (std::uint32_t k = 0; k < b.n; ++k)
                if (b.components[j].leader.get(k)) rep.set(f.z_pos(k), true);
            cosets.push_back(make_coset(std::move(code), std::move(rep)));
        }
    }
    return partition_from_cosets(std::move(cosets));
}

} // namespace hampart
