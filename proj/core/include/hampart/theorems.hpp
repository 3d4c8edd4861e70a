// Drivers reproducing the uniformity-number tables: row recipes built from
// the length-7 seed partitions and the composition, verified against the
// predicted value n - 2m + 2e - delta(m).
#pragma once

#include "hampart/mollard.hpp"
#include "hampart/partition.hpp"
#include "hampart/symmetry.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hampart {

// Externally supplied partitions, keyed by length.  add() runs the full
// certificate and the uniformity scan; anything invalid or non-uniform is
// rejected, so a stored entry is always trusted data.
struct ImportStore {
    struct Entry {
        CodePartition partition;
        std::uint32_t eta; // uniformity number as certified on import
    };
    std::map<std::uint32_t, Entry> by_length;

    void add(CodePartition p);
    const Entry* find(std::uint32_t n) const;
};

enum class RowStatus {
    built_verified,          // recipe executed, partition valid, number matches
    skipped_missing_import,  // recipe needs an import that was not supplied
    open,                    // no construction known
    failed,                  // recipe executed but the check did not come out
};

const char* to_string(RowStatus s);

struct TheoremRow {
    std::uint32_t m = 0;
    std::uint32_t e = 0;
    std::uint32_t delta = 0;
    std::uint32_t n = 0;
    std::uint32_t predicted = 0; // n - 2m + 2e - delta
    std::string recipe;          // expression, e.g. "b(trivial:3, phelps7)"
    RowStatus status = RowStatus::open;
    std::optional<std::uint32_t> computed; // uniformity number when built
    std::string detail;
};

std::uint32_t delta_of(std::uint32_t m);
std::uint32_t e_max(std::uint32_t m); // (m + 1) / 2

// The canonical length-7 partition with uniformity number 2: first hit of
// the deterministic backtracking search, cached.
const CodePartition& phelps7();

// Recipe grammar: trivial:N | phelps7 | krotov:N | b(R, R).  krotov:N pulls
// a verified import of length N from the store.
CodePartition build_recipe(const std::string& expr, const ImportStore& imports);

// Automorphism generators matching a recipe: affine stabiliser generators
// for trivial seeds, the exhaustive group at length 7, lifts across b(,).
// Imported partitions contribute no generators (their groups are unknown).
std::vector<Isometry> recipe_generators(const std::string& expr, const ImportStore& imports);

// One row per e in 1..e_max(m); every buildable recipe is executed and its
// uniformity number compared against the prediction.  Rows whose recipe
// produces a valid but non-uniform partition are reported as failed with
// the observed dimension histogram.
std::vector<TheoremRow> theorem_table(std::uint32_t m);
std::vector<TheoremRow> theorem_table(std::uint32_t m, const ImportStore& imports);

struct ChainStep {
    std::string name;
    std::uint32_t n = 0;
    std::uint32_t expected = 0;
    std::string formula; // the composition arithmetic, e.g. "1 + 2 + 21"
    RowStatus status = RowStatus::skipped_missing_import;
    std::optional<std::uint32_t> computed;
    std::string detail;
};

// The 31 -> 127 / 255 -> 1023 composition chains.  The 31 step needs no
// import; the rest require a certified length-31 partition with uniformity
// number 22.
std::vector<ChainStep> lemma3_chains(const ImportStore& imports);

struct CountsRow {
    std::uint32_t e = 0;
    RowStatus status = RowStatus::open;
    std::optional<std::uint32_t> eta;
    bool two_transitive = false;
    std::size_t pair_orbit = 0;
    std::size_t generators = 0;
};

struct CountsReport {
    std::uint32_t m = 0;
    std::uint32_t required_uniform = 0;
    std::uint32_t exhibited_uniform = 0;     // built rows, pairwise-distinct signatures
    bool signatures_distinct = false;
    std::uint32_t required_two_transitive = 0;
    std::uint32_t certified_two_transitive = 0;
    std::vector<CountsRow> rows;
};

// Nonequivalence counting: how many of the rows of theorem_table(m) were
// built with pairwise-distinct invariant signatures, and how many carry a
// 2-transitivity certificate from verified generators.
CountsReport corollary_counts(std::uint32_t m);
CountsReport corollary_counts(std::uint32_t m, const ImportStore& imports);

} // namespace hampart
