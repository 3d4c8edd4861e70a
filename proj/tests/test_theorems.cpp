#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hampart/io.hpp"
#include "hampart/theorems.hpp"

#include <string>
#include <vector>

using namespace hampart;

namespace {

ImportStore store_with(CodePartition p) {
    ImportStore s;
    s.add(std::move(p));
    return s;
}

} // namespace

TEST_CASE("parameter helpers") {
    CHECK(delta_of(3) == 1);
    CHECK(delta_of(4) == 0);
    CHECK(delta_of(5) == 1);
    CHECK(delta_of(6) == 0);
    CHECK(e_max(3) == 2);
    CHECK(e_max(4) == 2);
    CHECK(e_max(5) == 3);
    CHECK(e_max(6) == 3);
    CHECK(e_max(10) == 5);
}

TEST_CASE("the cached length-7 search partition") {
    const CodePartition& p = phelps7();
    CHECK(p.n == 7);
    CHECK(verify_partition(p, true).valid);
    UniformityReport rep = uniformity(p);
    CHECK(rep.is_uniform);
    CHECK(*rep.uniformity_number == 2);
    // cached: same object both times
    CHECK(&phelps7() == &p);
}

TEST_CASE("recipe expressions build what they say") {
    ImportStore none;
    CodePartition t7 = build_recipe("trivial:7", none);
    CHECK(t7.n == 7);
    CHECK(*uniformity(t7).uniformity_number == 4);

    CodePartition p31 = build_recipe("b(trivial:3, phelps7)", none);
    CHECK(p31.n == 31);
    CHECK(*uniformity(p31).uniformity_number == 24);

    CodePartition p511 = build_recipe("b(trivial:3, b(phelps7, trivial:15))", none);
    CHECK(p511.n == 511);
    CHECK(verify_partition(p511).valid);
    // 1 + (2 + 11 + 105) + 3*127 = 500
    CHECK(*uniformity(p511).uniformity_number == 500);
}

TEST_CASE("recipe grammar rejects malformed input") {
    ImportStore none;
    CHECK_THROWS_AS(build_recipe("krotov", none), std::invalid_argument);
    CHECK_THROWS_AS(build_recipe("b(trivial:3", none), std::invalid_argument);
    CHECK_THROWS_AS(build_recipe("trivial:6", none), std::invalid_argument);
    CHECK_THROWS_AS(build_recipe("gold:31", none), std::invalid_argument);
    CHECK_THROWS_AS(build_recipe("trivial:7 x", none), std::invalid_argument);
    CHECK_THROWS_AS(build_recipe("", none), std::invalid_argument);
}

TEST_CASE("krotov seeds pull from the import store") {
    ImportStore none;
    CHECK_THROWS_WITH_AS(build_recipe("krotov:31", none),
                         "no verified import of length 31 in the store",
                         std::runtime_error);

    ImportStore s = store_with(build_recipe("b(trivial:3, phelps7)", none));
    CodePartition p = build_recipe("krotov:31", s);
    CHECK(p.n == 31);
}

TEST_CASE("import store certifies on add") {
    ImportStore s;
    CodePartition good = build_recipe("b(trivial:3, phelps7)", ImportStore{});
    s.add(good);
    REQUIRE(s.find(31) != nullptr);
    CHECK(s.find(31)->eta == 24);
    CHECK(s.find(15) == nullptr);

    CodePartition broken = good;
    broken.components[3].representative = broken.components[8].representative;
    CHECK_THROWS_AS(s.add(broken), std::runtime_error);

    // valid but not uniform: also rejected
    CodePartition lopsided = construction_b(phelps7(), phelps7());
    REQUIRE(verify_partition(lopsided).valid);
    CHECK_THROWS_AS(s.add(lopsided), std::runtime_error);
}

TEST_CASE("table rows for m = 3 and 4") {
    auto t3 = theorem_table(3);
    REQUIRE(t3.size() == 2);
    CHECK(t3[0].e == 1);
    CHECK(t3[0].recipe == "phelps7");
    CHECK(t3[0].status == RowStatus::built_verified);
    CHECK(t3[0].predicted == 2);
    CHECK(t3[0].computed == 2);
    CHECK(t3[1].recipe == "trivial:7");
    CHECK(t3[1].computed == 4);

    auto t4 = theorem_table(4);
    REQUIRE(t4.size() == 2);
    CHECK(t4[0].status == RowStatus::open);
    CHECK(t4[0].predicted == 9);
    CHECK_FALSE(t4[0].computed.has_value());
    CHECK(t4[1].status == RowStatus::built_verified);
    CHECK(t4[1].computed == 11);
}

TEST_CASE("table rows for m = 5") {
    auto t5 = theorem_table(5);
    REQUIRE(t5.size() == 3);
    CHECK(t5[0].recipe == "krotov:31");
    CHECK(t5[0].status == RowStatus::skipped_missing_import);
    CHECK(t5[0].predicted == 22);
    CHECK(t5[0].detail ==
          "needs an imported length-31 partition with uniformity number 22");
    CHECK(t5[1].recipe == "b(trivial:3, phelps7)");
    CHECK(t5[1].computed == 24);
    CHECK(t5[2].computed == 26);
}

TEST_CASE("an import with the wrong number is not silently used") {
    ImportStore s = store_with(build_recipe("b(trivial:3, phelps7)", ImportStore{}));
    auto t5 = theorem_table(5, s);
    CHECK(t5[0].status == RowStatus::skipped_missing_import);
    CHECK(t5[0].detail == "import of length 31 has uniformity number 24, need 22");
}

TEST_CASE("table rows for m = 6: the additive law blocks e = 1") {
    auto t6 = theorem_table(6);
    REQUIRE(t6.size() == 3);
    CHECK(t6[0].recipe == "b(phelps7, phelps7)");
    CHECK(t6[0].predicted == 53);
    CHECK(t6[0].status == RowStatus::failed);
    CHECK(t6[0].detail ==
          "built partition is not uniform; dims {53: 1568, 55: 448}");
    CHECK(t6[1].status == RowStatus::built_verified);
    CHECK(t6[1].computed == 55);
    CHECK(t6[2].status == RowStatus::built_verified);
    CHECK(t6[2].computed == 57);
}

TEST_CASE("table rows for m = 7") {
    auto t7 = theorem_table(7);
    REQUIRE(t7.size() == 4);
    CHECK(t7[0].recipe == "krotov:127");
    CHECK(t7[0].status == RowStatus::skipped_missing_import);
    CHECK(t7[1].recipe == "b(trivial:3, krotov:31)");
    CHECK(t7[1].status == RowStatus::skipped_missing_import);
    CHECK(t7[2].recipe == "b(phelps7, trivial:15)");
    CHECK(t7[2].status == RowStatus::built_verified);
    CHECK(t7[2].computed == 118);
    CHECK(t7[3].computed == 120);
}

TEST_CASE("predictions follow n - 2m + 2e - delta") {
    for (std::uint32_t m = 3; m <= 8; ++m) {
        auto rows = theorem_table(m);
        REQUIRE(rows.size() == e_max(m));
        const std::uint32_t n = (1u << m) - 1;
        for (const TheoremRow& row : rows) {
            CHECK(row.n == n);
            CHECK(row.predicted == n - 2 * m + 2 * row.e - delta_of(m));
            if (row.status == RowStatus::built_verified) CHECK(row.computed == row.predicted);
        }
    }
}

TEST_CASE("composition chain report without an import") {
    auto chains = lemma3_chains(ImportStore{});
    REQUIRE(chains.size() == 4);
    CHECK(chains[0].name == "31/24");
    CHECK(chains[0].status == RowStatus::built_verified);
    CHECK(chains[0].computed == 24);
    CHECK(chains[0].formula == "1 + 2 + 21");

    CHECK(chains[1].name == "127/116");
    CHECK(chains[1].formula == "1 + 22 + 93");
    CHECK(chains[2].name == "255/241");
    CHECK(chains[2].formula == "2 + 22 + 217");
    CHECK(chains[3].name == "1023/1007");
    CHECK(chains[3].formula == "1 + 241 + 765");
    for (int i = 1; i < 4; ++i) {
        CHECK(chains[i].status == RowStatus::skipped_missing_import);
        CHECK_FALSE(chains[i].computed.has_value());
    }
    // the arithmetic in the formulas adds up to the expected numbers
    CHECK(chains[0].expected == 24);
    CHECK(chains[1].expected == 116);
    CHECK(chains[2].expected == 241);
    CHECK(chains[3].expected == 1007);
}

TEST_CASE("generator sets attached to recipes") {
    ImportStore none;
    CHECK(recipe_generators("trivial:7", none).size() == 9);
    CHECK(recipe_generators("phelps7", none).size() == 336);
    CHECK(recipe_generators("b(trivial:3, phelps7)", none).size() == 340);

    // imported seeds contribute no generators
    ImportStore s = store_with(build_recipe("b(trivial:3, phelps7)", ImportStore{}));
    CHECK(recipe_generators("krotov:31", s).empty());
}

TEST_CASE("counts at m = 3: both rows uniform, both 2-transitive") {
    CountsReport rep = corollary_counts(3);
    CHECK(rep.required_uniform == 2);
    CHECK(rep.exhibited_uniform == 2);
    CHECK(rep.signatures_distinct);
    CHECK(rep.required_two_transitive == 2);
    CHECK(rep.certified_two_transitive == 2);
    REQUIRE(rep.rows.size() == 2);
    CHECK(rep.rows[0].pair_orbit == 56);
    CHECK(rep.rows[0].generators == 336);
    CHECK(rep.rows[1].pair_orbit == 56);
    CHECK(rep.rows[1].generators == 9);
}

TEST_CASE("counts at m = 4") {
    CountsReport rep = corollary_counts(4);
    CHECK(rep.required_uniform == 1);
    CHECK(rep.exhibited_uniform == 1);
    CHECK(rep.required_two_transitive == 0);
    CHECK(rep.certified_two_transitive == 1);
    REQUIRE(rep.rows.size() == 2);
    CHECK(rep.rows[0].status == RowStatus::open);
    CHECK(rep.rows[1].two_transitive);
    CHECK(rep.rows[1].pair_orbit == 240);
    CHECK(rep.rows[1].generators == 16);
}

TEST_CASE("counts at m = 5: the composed partition misses 2-transitivity") {
    CountsReport rep = corollary_counts(5);
    CHECK(rep.required_uniform == 3);
    CHECK(rep.exhibited_uniform == 2); // first row needs the external import
    CHECK(rep.signatures_distinct);
    CHECK(rep.required_two_transitive == 2);
    CHECK(rep.certified_two_transitive == 1);
    REQUIRE(rep.rows.size() == 3);
    CHECK(rep.rows[0].status == RowStatus::skipped_missing_import);
    CHECK_FALSE(rep.rows[1].two_transitive);
    CHECK(rep.rows[1].pair_orbit == 672);
    CHECK(rep.rows[1].generators == 340);
    CHECK(rep.rows[2].two_transitive);
    CHECK(rep.rows[2].pair_orbit == 992);
    CHECK(rep.rows[2].generators == 25);
}

TEST_CASE("a built table round-trips through the file format") {
    auto rows = theorem_table(5);
    ImportStore none;
    for (const TheoremRow& row : rows) {
        if (row.status != RowStatus::built_verified) continue;
        CodePartition p = build_recipe(row.recipe, none);
        CodePartition back = parse_partition(serialize_partition(p));
        CHECK(*uniformity(back).uniformity_number == *row.computed);
    }
}

TEST_CASE("status names") {
    CHECK(std::string(to_string(RowStatus::built_verified)) == "built-verified");
    CHECK(std::string(to_string(RowStatus::skipped_missing_import)) == "skipped-missing-import");
    CHECK(std::string(to_string(RowStatus::open)) == "open");
    CHECK(std::string(to_string(RowStatus::failed)) == "failed");
}
