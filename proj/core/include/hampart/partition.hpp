#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hampart/codes.hpp"

namespace hampart {

// Partition of F^n into the n+1 cosets of Hamming codes, indexed by coset
// leader: components[0] is a code (leader 0) and components[k], k >= 1, has
// leader e_k, i.e. the unit vector at bit k-1.  The struct itself is a plain
// container so that deliberately broken inputs can be built for testing;
// verify_partition checks every invariant.
struct CodePartition {
    std::uint32_t n = 0;
    std::vector<Coset> components;

    std::uint32_t redundancy() const { return components.empty() ? 0 : components[0].code.redundancy(); }
    std::uint32_t code_dimension() const { return components.empty() ? 0 : components[0].code.dimension(); }
};

// All cosets of one Hamming code.
CodePartition trivial_partition(const LinearCode& h);

// Canonicalize an unordered family of cosets: recompute leaders, require the
// leader map to be a bijection onto {0, e_1, ..., e_n}, and order by leader.
CodePartition partition_from_cosets(std::vector<Coset> cosets);

enum class PartitionFault {
    none,
    shape,          // wrong component count / lengths / dimensions / not Hamming
    overlap,        // two components share a vector
    leader,         // leader map is not the identity on indices
    uncovered,      // exhaustive mode: vector in no component
    double_covered, // exhaustive mode: vector in two components
};

struct PartitionCheck {
    bool valid = false;
    PartitionFault fault = PartitionFault::none;
    // Offending pair for overlap faults, offending component for leader
    // faults (in comp_a).
    std::uint32_t comp_a = 0, comp_b = 0;
    std::optional<BitVector> witness; // offending vector where applicable
    std::string detail;
};

// Certifies the partition property.  The default mode is pure linear algebra:
// pairwise coset disjointness (solvability of the stacked parity systems)
// plus the counting identity (n+1) * 2^(n-m) = 2^n, which together imply the
// covering.  With exhaustive = true every vector of F^n is additionally
// classified by membership tests; intended for n <= 15.
PartitionCheck verify_partition(const CodePartition& p, bool exhaustive = false);

struct UniformityReport {
    bool is_uniform = false;
    // Constant intersection dimension over pairs of distinct component
    // codes; for a partition whose codes all coincide this is the code
    // dimension (the intersection of the code with itself).
    std::optional<std::uint32_t> uniformity_number;
    // Histogram over all component pairs {i, j}, i < j, of
    // intersection_dim(code_i, code_j), equal-code pairs included.
    std::map<std::uint32_t, std::size_t> dim_histogram;
    std::size_t parallel_pairs = 0; // pairs with identical codes
    std::uint32_t n = 0;

    // Flat triangular storage of all pairwise dims.
    std::vector<std::uint16_t> pair_dims;
    std::uint32_t dim(std::uint32_t i, std::uint32_t j) const;
};

// Pairwise intersection dimensions of the component codes (linear parts,
// never the shifted cosets).  A partition is uniform when the dimension is
// one constant across all pairs of distinct codes; pairs of identical codes
// trivially intersect in the full code and are not held against uniformity.
UniformityReport uniformity(const CodePartition& p);

// Multiset of all pairwise intersection dimensions, as a dim -> count map.
// Invariant under isometries, so it separates inequivalent partitions.
std::map<std::uint32_t, std::size_t> invariant_signature(const CodePartition& p);

// The distinct Hamming codes of length 7 (row spaces over all column
// orders), in a deterministic order.
const std::vector<LinearCode>& all_hamming_codes_7();

struct SearchOptions {
    std::size_t limit = 16;              // stop after this many solutions
    std::uint64_t node_budget = ~0ull;   // backtracking nodes before giving up
};

struct SearchOutcome {
    std::vector<CodePartition> partitions;
    bool budget_exhausted = false;
    std::uint64_t nodes = 0;
};

// Backtracking search for partitions of F^7 whose component codes pairwise
// intersect in dimension target_dim: slot k takes a code whose coset with
// leader e_k is disjoint from everything chosen so far, pruning on the
// pairwise dimension.  target_dim 4 forces all components onto one code and
// recovers exactly the single-code partitions.
SearchOutcome phelps_search(std::uint32_t target_dim, SearchOptions opt = {});

// Same search shape over a sampled pool of length-2^m-1 codes; the pool is
// complete only at m = 3.  For m >= 4 this is a bounded-effort probe, not an
// exhaustion: an empty result says nothing about existence.
SearchOutcome bounded_uniform_search(std::uint32_t m, std::uint32_t target_dim,
                                     SearchOptions opt, std::uint64_t seed);

// Partition of the even-weight half of F^(n+1) obtained by appending the
// overall parity bit to every component.
struct ExtendedPartition {
    std::uint32_t n = 0; // extended length
    std::vector<std::pair<LinearCode, BitVector>> components; // code, representative
};

ExtendedPartition extend_partition(const CodePartition& p);
// Reverses extend_partition when position is the appended coordinate; any
// position whose deletion keeps all dimensions works.
CodePartition puncture_partition(const ExtendedPartition& p, std::uint32_t position);
PartitionCheck verify_extended(const ExtendedPartition& p);

} // namespace hampart
