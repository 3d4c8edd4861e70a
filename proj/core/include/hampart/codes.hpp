#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hampart/gf2.hpp"

namespace hampart {

// A binary linear code identified by its row space.  The parity-check matrix
// always has full row rank; the canonical rref of the parity check is kept so
// that equality tests and set keys are cheap.  The generator matrix is not
// stored (it can be large); generator() derives one on demand.
class LinearCode {
public:
    static LinearCode from_parity_check(BitMatrix h);
    static LinearCode from_generator(const BitMatrix& g);

    std::uint32_t length() const { return n_; }
    std::uint32_t dimension() const { return n_ - parity_.rows(); }
    std::uint32_t redundancy() const { return parity_.rows(); }

    const BitMatrix& parity_check() const { return parity_; }
    // Canonical for the row space of the parity check (hence for the code).
    const BitMatrix& parity_rref() const { return parity_rref_; }
    // A basis of the code, kernel of the parity check.  Deterministic.
    BitMatrix generator() const { return kernel_basis(parity_); }

    bool contains(const BitVector& v) const;

    // True when length = 2^r - 1 and the parity-check columns are exactly the
    // distinct nonzero r-bit values: the structural shape of a Hamming code,
    // which is equivalent to perfectness with distance 3.
    bool is_hamming() const { return hamming_; }

    // Column of the parity check at 0-based position, read as an r-bit value
    // with row r contributing bit r.
    std::uint32_t column_value(std::uint32_t position) const;
    std::uint32_t syndrome_of(const BitVector& v) const;
    // 0-based position whose column equals the given nonzero syndrome.
    // Requires is_hamming().
    std::uint32_t position_of_syndrome(std::uint32_t s) const;

    bool operator==(const LinearCode& o) const { return parity_rref_ == o.parity_rref_; }

private:
    LinearCode() = default;
    void finish();

    std::uint32_t n_ = 0;
    BitMatrix parity_;
    BitMatrix parity_rref_;
    bool hamming_ = false;
    std::vector<std::int32_t> syndrome_pos_; // 2^r entries when hamming_, else empty
};

inline bool code_equal(const LinearCode& a, const LinearCode& b) { return a == b; }

// Dimension of the intersection of two codes of equal length:
// n - rank(stack of the two parity checks).
std::uint32_t intersection_dim(const LinearCode& a, const LinearCode& b);

// Hamming code of length 2^m - 1 whose parity-check column at position k
// (0-based) is column_order[k].  column_order must enumerate 1..2^m-1.
LinearCode hamming_code(std::uint32_t m, std::span<const std::uint32_t> column_order);
// Natural order: column at position k is the value k+1.
LinearCode hamming_code(std::uint32_t m);

// Coset of a Hamming code.  The leader is the unique member of weight <= 1,
// found by syndrome lookup; leader position p means leader = e_{p+1}, and a
// zero leader marks the code itself.
struct Coset {
    LinearCode code;
    BitVector representative;
    BitVector leader;
};

BitVector coset_leader(const LinearCode& code, const BitVector& representative);
Coset make_coset(LinearCode code, BitVector representative);

// log2 of |A ∩ B| for two cosets of equal length, or nullopt when disjoint.
std::optional<std::uint32_t> coset_intersection_size_log(const Coset& a, const Coset& b);

// Append an overall parity coordinate at the end (position length+1 in
// 1-based terms).  Dimension is preserved; every extended word has even
// weight.
LinearCode extend(const LinearCode& c);

// Delete one coordinate (0-based).  Throws when the deletion drops the
// dimension.  puncture(extend(C), length) == C.
LinearCode puncture(const LinearCode& c, std::uint32_t position);

} // namespace hampart
