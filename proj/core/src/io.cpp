#include "hampart/io.hpp"

#include <sstream>

namespace hampart {

namespace {

constexpr const char* kPartitionHeader = "hampart partition v1";
constexpr const char* kExtendedHeader = "hampart extended v1";

struct LineReader {
    std::istream& in;
    std::size_t line_no = 0;

    // next non-blank, non-comment line; false at end of stream
    bool next(std::string& out) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_no;
            if (!raw.empty() && raw.back() == '\r') raw.pop_back();
            std::size_t at = raw.find_first_not_of(" \t");
            if (at == std::string::npos || raw[at] == '#') continue;
            out = raw.substr(at);
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_no, what); }
};

std::uint32_t parse_uint(LineReader& r, const std::string& tok, const char* what) {
    try {
        std::size_t used = 0;
        unsigned long v = std::stoul(tok, &used);
        if (used != tok.size() || v > 0xffffffffull) throw std::invalid_argument("");
        return static_cast<std::uint32_t>(v);
    } catch (...) {
        r.fail(std::string("bad ") + what + " '" + tok + "'");
    }
}

BitVector parse_bits(LineReader& r, const std::string& tok, std::uint32_t n) {
    if (tok.size() != n) r.fail("expected " + std::to_string(n) + " bits, got " +
                                std::to_string(tok.size()));
    for (char c : tok)
        if (c != '0' && c != '1') r.fail("bit string has a character other than 0/1");
    return BitVector::from_string(tok);
}

// key/value line split on first whitespace run
std::pair<std::string, std::string> split(const std::string& line) {
    std::size_t sp = line.find_first_of(" \t");
    if (sp == std::string::npos) return {line, ""};
    std::size_t val = line.find_first_not_of(" \t", sp);
    return {line.substr(0, sp), val == std::string::npos ? "" : line.substr(val)};
}

void expect_header(LineReader& r, const char* header) {
    std::string line;
    if (!r.next(line)) r.fail("missing header");
    if (line != header) r.fail(std::string("expected '") + header + "'");
}

std::uint32_t expect_n(LineReader& r) {
    std::string line;
    if (!r.next(line)) r.fail("missing 'n' line");
    auto [key, val] = split(line);
    if (key != "n") r.fail("expected 'n <length>'");
    std::uint32_t n = parse_uint(r, val, "length");
    if (n < 3 || n > 1u << 20) r.fail("length out of range");
    return n;
}

struct RawComponent {
    BitVector rep{0};
    BitMatrix parity{1};
};

RawComponent read_component(LineReader& r, std::uint32_t n, std::uint32_t expect_idx) {
    std::string line;
    if (!r.next(line)) r.fail("missing component " + std::to_string(expect_idx));
    auto [key, val] = split(line);
    if (key != "component") r.fail("expected 'component " + std::to_string(expect_idx) + "'");
    if (parse_uint(r, val, "component index") != expect_idx)
        r.fail("components must appear in order; expected index " + std::to_string(expect_idx));

    if (!r.next(line)) r.fail("missing 'rep' line");
    auto [rkey, rval] = split(line);
    if (rkey != "rep") r.fail("expected 'rep <bits>'");
    RawComponent out;
    out.rep = parse_bits(r, rval, n);
    out.parity = BitMatrix(n);
    for (;;) {
        std::streampos mark = r.in.tellg();
        std::size_t mark_line = r.line_no;
        if (!r.next(line)) break;
        auto [pkey, pval] = split(line);
        if (pkey != "parity") {
            r.in.seekg(mark);
            r.line_no = mark_line;
            break;
        }
        out.parity.append_row(parse_bits(r, pval, n));
    }
    if (out.parity.rows() == 0) r.fail("component has no parity rows");
    return out;
}

} // namespace

std::string serialize_partition(const CodePartition& p) {
    std::ostringstream out;
    out << kPartitionHeader << "\n" << "n " << p.n << "\n";
    for (std::size_t k = 0; k < p.components.size(); ++k) {
        const Coset& c = p.components[k];
        out << "component " << k << "\n";
        out << "rep " << c.representative.to_string() << "\n";
        for (std::uint32_t r = 0; r < c.code.parity_check().rows(); ++r)
            out << "parity " << c.code.parity_check().row(r).to_string() << "\n";
    }
    return out.str();
}

std::string serialize_extended(const ExtendedPartition& p) {
    std::ostringstream out;
    out << kExtendedHeader << "\n" << "n " << p.n << "\n";
    for (std::size_t k = 0; k < p.components.size(); ++k) {
        out << "component " << k << "\n";
        out << "rep " << p.components[k].second.to_string() << "\n";
        const BitMatrix& h = p.components[k].first.parity_check();
        for (std::uint32_t r = 0; r < h.rows(); ++r)
            out << "parity " << h.row(r).to_string() << "\n";
    }
    return out.str();
}

CodePartition parse_partition(std::istream& in) {
    LineReader r{in};
    expect_header(r, kPartitionHeader);
    std::uint32_t n = expect_n(r);
    CodePartition p;
    p.n = n;
    for (std::uint32_t k = 0; k <= n; ++k) {
        RawComponent raw = read_component(r, n, k);
        std::size_t at_line = r.line_no;
        try {
            LinearCode code = LinearCode::from_parity_check(std::move(raw.parity));
            // leave the leader to the verifier when the code is not
            // Hamming-shaped; the file may describe a broken partition
            BitVector leader = code.is_hamming() ? coset_leader(code, raw.rep) : raw.rep;
            p.components.push_back(Coset{std::move(code), raw.rep, std::move(leader)});
        } catch (const std::exception& e) {
            throw ParseError(at_line, "component " + std::to_string(k) + ": " + e.what());
        }
    }
    std::string trailing;
    if (r.next(trailing)) r.fail("unexpected trailing line '" + trailing + "'");
    return p;
}

CodePartition parse_partition(const std::string& text) {
    std::istringstream in(text);
    return parse_partition(in);
}

ExtendedPartition parse_extended(std::istream& in) {
    LineReader r{in};
    expect_header(r, kExtendedHeader);
    std::uint32_t n = expect_n(r);
    ExtendedPartition p;
    p.n = n;
    for (std::uint32_t k = 0; k < n; ++k) {
        RawComponent raw = read_component(r, n, k);
        std::size_t at_line = r.line_no;
        try {
            p.components.emplace_back(LinearCode::from_parity_check(std::move(raw.parity)),
                                      raw.rep);
        } catch (const std::exception& e) {
            throw ParseError(at_line, "component " + std::to_string(k) + ": " + e.what());
        }
    }
    std::string trailing;
    if (r.next(trailing)) r.fail("unexpected trailing line '" + trailing + "'");
    return p;
}

ExtendedPartition parse_extended(const std::string& text) {
    std::istringstream in(text);
    return parse_extended(in);
}

CodePartition import_verified(const std::string& text) {
    CodePartition p = parse_partition(text);
    PartitionCheck chk = verify_partition(p);
    if (!chk.valid) throw std::runtime_error("imported partition is invalid: " + chk.detail);
    return p;
}

} // namespace hampart
