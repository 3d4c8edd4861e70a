// Isometries of binary Hamming space (coordinate permutation plus
// translation), their action on coset partitions, and transitivity
// certificates for the induced component-label groups.
#pragma once

#include "hampart/mollard.hpp"
#include "hampart/partition.hpp"

#include <optional>
#include <vector>

namespace hampart {

// x |-> pi(x) + shift with pi moving coordinate k to perm[k].
struct Isometry {
    std::vector<std::uint32_t> perm;
    BitVector shift;

    static Isometry identity(std::uint32_t n);
    std::uint32_t n() const { return static_cast<std::uint32_t>(perm.size()); }
    BitVector apply(const BitVector& x) const;
};

Isometry compose(const Isometry& a, const Isometry& b); // first b, then a
Isometry inverse(const Isometry& a);
bool operator==(const Isometry& a, const Isometry& b);

// Where each component goes under the isometry: out[k] = index of the
// component equal to pi(C_k) + pi(rep_k) + shift, or nullopt when some image
// is not a component of p.  Images of distinct components are disjoint, so a
// successful map is automatically a permutation of the labels.
std::optional<std::vector<std::uint32_t>> partition_action(const CodePartition& p,
                                                           const Isometry& iso);
bool is_automorphism(const CodePartition& p, const Isometry& iso);

// Entire automorphism group by scanning all n! * 2^n isometries; feasible
// for n <= 7.  Permutations not matching the component codes as a multiset
// are discarded before any shift is tried.
std::vector<Isometry> exhaustive_automorphisms(const CodePartition& p);

// Generators of the full affine stabiliser of a single-code partition:
// translations spanning the syndrome space plus column-value transvections.
// The induced label action is that of AGL(m, 2) on syndromes, which is
// 2-transitive; works at any length.  Throws unless all components share
// one code.
std::vector<Isometry> affine_automorphisms(const CodePartition& p);

// Lift a pair of isometries at lengths l and t to the composed length:
// cell (i, j) goes to (pi_a(i), pi_b(j)), the y and z blocks move by pi_a
// and pi_b, and the shift acts on those blocks only.  When the inputs are
// automorphisms of partitions a and b, the lift is an automorphism of
// construction_b(a, b).
Isometry lift_isometry(const MollardFrame& f, const Isometry& fa, const Isometry& fb);

// Lifts of (g, id) and (id, g) for every supplied generator.
std::vector<Isometry> lifted_automorphisms(const MollardFrame& f,
                                           const std::vector<Isometry>& gens_a,
                                           const std::vector<Isometry>& gens_b);

struct TransitivityReport {
    bool transitive = false;
    bool two_transitive = false;
    std::size_t point_orbit = 0; // orbit of label 0
    std::size_t pair_orbit = 0;  // orbit of the ordered pair (0, 1)
};

// Orbit computation on component labels under the group generated by `gens`;
// throws if some generator does not preserve the partition.  2-transitivity
// holds exactly when the ordered-pair orbit has size (n+1) * n.
TransitivityReport two_transitive(const CodePartition& p,
                                  const std::vector<Isometry>& gens);

} // namespace hampart
