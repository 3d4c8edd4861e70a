#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hampart/io.hpp"
#include "hampart/theorems.hpp"

#include <sstream>
#include <string>

using namespace hampart;

namespace {

bool same_partition(const CodePartition& a, const CodePartition& b) {
    if (a.n != b.n || a.components.size() != b.components.size()) return false;
    for (std::size_t k = 0; k < a.components.size(); ++k) {
        const Coset &x = a.components[k], &y = b.components[k];
        if (!(x.code == y.code)) return false;
        if (!x.code.contains(x.representative ^ y.representative)) return false;
    }
    return true;
}

// a small well-formed file, built by hand so the tests control every line
std::string sample_file() {
    CodePartition p = trivial_partition(hamming_code(2));
    return serialize_partition(p);
}

} // namespace

TEST_CASE("serialize then parse is the identity") {
    CodePartition ps[] = {
        trivial_partition(hamming_code(2)),
        trivial_partition(hamming_code(3)),
        phelps7(),
        construction_b(trivial_partition(hamming_code(2)), phelps7()),
    };
    for (const CodePartition& p : ps) {
        CodePartition back = parse_partition(serialize_partition(p));
        CHECK(same_partition(p, back));
        CHECK(verify_partition(back).valid);
    }
}

TEST_CASE("extended round trip") {
    ExtendedPartition e = extend_partition(phelps7());
    ExtendedPartition back = parse_extended(serialize_extended(e));
    REQUIRE(back.n == e.n);
    REQUIRE(back.components.size() == e.components.size());
    for (std::size_t k = 0; k < e.components.size(); ++k) {
        CHECK(back.components[k].first == e.components[k].first);
        CHECK(back.components[k].first.contains(back.components[k].second ^
                                                e.components[k].second));
    }
    CHECK(verify_extended(back).valid);
}

TEST_CASE("comments and blank lines are skipped") {
    std::string text = sample_file();
    std::string commented = "# a partition of F^3\n\n" + text + "# trailing note\n";
    CodePartition p = parse_partition(commented);
    CHECK(verify_partition(p).valid);
}

TEST_CASE("crlf endings parse") {
    std::string text = sample_file(), crlf;
    for (char c : text) {
        if (c == '\n') crlf += '\r';
        crlf += c;
    }
    CodePartition p = parse_partition(crlf);
    CHECK(verify_partition(p).valid);
}

TEST_CASE("stream interface matches string interface") {
    std::istringstream in(sample_file());
    CodePartition a = parse_partition(in);
    CodePartition b = parse_partition(sample_file());
    CHECK(same_partition(a, b));
}

TEST_CASE("parse errors carry the offending line number") {
    SUBCASE("wrong header") {
        try {
            parse_partition("hampart partition v9\nn 3\n");
            FAIL("no throw");
        } catch (const ParseError& e) {
            CHECK(e.line == 1);
        }
    }
    SUBCASE("bad length line") {
        try {
            parse_partition("hampart partition v1\nn x\n");
            FAIL("no throw");
        } catch (const ParseError& e) {
            CHECK(e.line == 2);
        }
    }
    SUBCASE("component out of order") {
        std::string text = "hampart partition v1\nn 3\ncomponent 2\n";
        try {
            parse_partition(text);
            FAIL("no throw");
        } catch (const ParseError& e) {
            CHECK(e.line == 3);
        }
    }
    SUBCASE("representative of the wrong length") {
        std::string text =
            "hampart partition v1\nn 3\ncomponent 0\nrep 0000\n";
        try {
            parse_partition(text);
            FAIL("no throw");
        } catch (const ParseError& e) {
            CHECK(e.line == 4);
        }
    }
    SUBCASE("non-binary characters") {
        std::string text =
            "hampart partition v1\nn 3\ncomponent 0\nrep 0a0\n";
        CHECK_THROWS_AS(parse_partition(text), ParseError);
    }
    SUBCASE("truncated file") {
        std::string text = sample_file();
        text.resize(text.size() / 2);
        CHECK_THROWS_AS(parse_partition(text), ParseError);
    }
    SUBCASE("trailing garbage") {
        std::string text = sample_file() + "one more line\n";
        CHECK_THROWS_AS(parse_partition(text), ParseError);
    }
}

TEST_CASE("a structurally fine file with a broken partition still parses") {
    CodePartition p = trivial_partition(hamming_code(2));
    p.components[1].representative = p.components[2].representative;
    std::string text = serialize_partition(p);
    CodePartition back = parse_partition(text); // structure only
    PartitionCheck chk = verify_partition(back);
    CHECK_FALSE(chk.valid);
    CHECK(chk.fault == PartitionFault::overlap);
}

TEST_CASE("import_verified accepts good and rejects bad") {
    CHECK_NOTHROW(import_verified(serialize_partition(phelps7())));

    CodePartition p = trivial_partition(hamming_code(3));
    p.components[2].representative = p.components[6].representative;
    CHECK_THROWS_AS(import_verified(serialize_partition(p)), std::runtime_error);
}

TEST_CASE("serialized form is stable") {
    // first lines of the trivial length-3 file, frozen
    std::string text = sample_file();
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    CHECK(line == "hampart partition v1");
    std::getline(in, line);
    CHECK(line == "n 3");
    std::getline(in, line);
    CHECK(line == "component 0");
}
