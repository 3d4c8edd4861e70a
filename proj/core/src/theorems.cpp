#include "hampart/theorems.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace hampart {

namespace {

std::uint32_t log2_exact(std::uint32_t v) {
    if (v == 0 || (v & (v - 1)) != 0) throw std::invalid_argument("not a power of two");
    return static_cast<std::uint32_t>(std::bit_width(v) - 1);
}

// ---- recipe expressions ----------------------------------------------------

struct Node {
    enum Kind { trivial, phelps, krotov, compose } kind;
    std::uint32_t n = 0; // trivial/krotov length
    std::unique_ptr<Node> a, b;
};

struct RecipeParser {
    const std::string& s;
    std::size_t at = 0;

    void skip_ws() {
        while (at < s.size() && (s[at] == ' ' || s[at] == '\t')) ++at;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("recipe: " + what + " at offset " + std::to_string(at));
    }
    bool eat(char c) {
        skip_ws();
        if (at < s.size() && s[at] == c) {
            ++at;
            return true;
        }
        return false;
    }
    std::uint32_t number() {
        skip_ws();
        std::size_t start = at;
        while (at < s.size() && std::isdigit(static_cast<unsigned char>(s[at]))) ++at;
        if (at == start) fail("expected a number");
        return static_cast<std::uint32_t>(std::stoul(s.substr(start, at - start)));
    }
    std::string word() {
        skip_ws();
        std::size_t start = at;
        while (at < s.size() && (std::isalnum(static_cast<unsigned char>(s[at])))) ++at;
        return s.substr(start, at - start);
    }

    std::unique_ptr<Node> expr() {
        std::string w = word();
        auto node = std::make_unique<Node>();
        if (w == "b") {
            node->kind = Node::compose;
            if (!eat('(')) fail("expected '('");
            node->a = expr();
            if (!eat(',')) fail("expected ','");
            node->b = expr();
            if (!eat(')')) fail("expected ')'");
        } else if (w == "phelps7") {
            node->kind = Node::phelps;
            node->n = 7;
        } else if (w == "trivial" || w == "krotov") {
            node->kind = w == "trivial" ? Node::trivial : Node::krotov;
            if (!eat(':')) fail("expected ':'");
            node->n = number();
            if (node->n < 3 || ((node->n + 1) & node->n) != 0) fail("length is not 2^m - 1");
        } else {
            fail("unknown seed '" + w + "'");
        }
        return node;
    }

    std::unique_ptr<Node> parse() {
        auto node = expr();
        skip_ws();
        if (at != s.size()) fail("trailing input");
        return node;
    }
};

std::unique_ptr<Node> parse_recipe(const std::string& s) {
    RecipeParser p{s};
    return p.parse();
}

void collect_krotov(const Node& node, std::vector<std::uint32_t>& out) {
    if (node.kind == Node::krotov) out.push_back(node.n);
    if (node.a) collect_krotov(*node.a, out);
    if (node.b) collect_krotov(*node.b, out);
}

CodePartition eval(const Node& node, const ImportStore& imports) {
    switch (node.kind) {
        case Node::trivial:
            return trivial_partition(hamming_code(log2_exact(node.n + 1)));
        case Node::phelps:
            return phelps7();
        case Node::krotov: {
            const ImportStore::Entry* e = imports.find(node.n);
            if (!e)
                throw std::runtime_error("no verified import of length " +
                                         std::to_string(node.n) + " in the store");
            return e->partition;
        }
        case Node::compose:
            return construction_b(eval(*node.a, imports), eval(*node.b, imports));
    }
    throw std::logic_error("unreachable");
}

std::uint32_t length_of(const Node& node) {
    if (node.kind != Node::compose) return node.n;
    std::uint32_t l = length_of(*node.a), t = length_of(*node.b);
    return l * t + l + t;
}

std::vector<Isometry> gens_of(const Node& node, const ImportStore& imports) {
    switch (node.kind) {
        case Node::trivial:
            return affine_automorphisms(trivial_partition(hamming_code(log2_exact(node.n + 1))));
        case Node::phelps: {
            static const std::vector<Isometry> cached = exhaustive_automorphisms(phelps7());
            return cached;
        }
        case Node::krotov:
            return {}; // automorphisms of the imported partition are unknown
        case Node::compose:
            return lifted_automorphisms(MollardFrame{length_of(*node.a), length_of(*node.b)},
                                        gens_of(*node.a, imports), gens_of(*node.b, imports));
    }
    throw std::logic_error("unreachable");
}

// The punctured partitions expected from external data have the smallest
// number for their length: n - 2m + 1.
std::uint32_t krotov_required_eta(std::uint32_t n) {
    std::uint32_t m = log2_exact(n + 1);
    return n - 2 * m + 1;
}

std::string histogram_string(const UniformityReport& rep) {
    std::ostringstream out;
    out << "dims {";
    bool first = true;
    for (const auto& [d, cnt] : rep.dim_histogram) {
        if (!first) out << ", ";
        out << d << ": " << cnt;
        first = false;
    }
    out << "}";
    return out.str();
}

std::string row_recipe(std::uint32_t m, std::uint32_t e) {
    std::uint32_t n = (1u << m) - 1;
    if (e == e_max(m)) return "trivial:" + std::to_string(n);
    if (m == 3 && e == 1) return "phelps7";
    if (m == 4 && e == 1) return ""; // open
    if (m % 2 == 1 && e == 1) return "krotov:" + std::to_string(n);
    if (m == 5 && e == 2) return "b(trivial:3, phelps7)";
    if (m == 7 && e == 2) return "b(trivial:3, krotov:31)";
    if (m == 10 && e == 2) return "b(trivial:3, b(phelps7, krotov:31))";
    std::uint32_t inner_e = m % 2 == 0 ? e : e - 1;
    std::string inner = row_recipe(m - 3, inner_e);
    if (inner.empty()) return "";
    return "b(phelps7, " + inner + ")";
}

struct BuiltRow {
    TheoremRow row;
    std::optional<CodePartition> partition;
};

BuiltRow build_row(std::uint32_t m, std::uint32_t e, const ImportStore& imports) {
    BuiltRow out;
    TheoremRow& row = out.row;
    row.m = m;
    row.e = e;
    row.delta = delta_of(m);
    row.n = (1u << m) - 1;
    row.predicted = row.n - 2 * m + 2 * e - row.delta;
    row.recipe = row_recipe(m, e);
    if (row.recipe.empty()) {
        row.recipe = "open";
        row.status = RowStatus::open;
        row.detail = "no construction known for this cell";
        return out;
    }

    auto tree = parse_recipe(row.recipe);
    std::vector<std::uint32_t> needed;
    collect_krotov(*tree, needed);
    for (std::uint32_t len : needed) {
        const ImportStore::Entry* entry = imports.find(len);
        std::uint32_t want = krotov_required_eta(len);
        if (!entry) {
            row.status = RowStatus::skipped_missing_import;
            row.detail = "needs an imported length-" + std::to_string(len) +
                         " partition with uniformity number " + std::to_string(want);
            return out;
        }
        if (entry->eta != want) {
            row.status = RowStatus::skipped_missing_import;
            row.detail = "import of length " + std::to_string(len) +
                         " has uniformity number " + std::to_string(entry->eta) +
                         ", need " + std::to_string(want);
            return out;
        }
    }

    CodePartition p = eval(*tree, imports);
    PartitionCheck chk = verify_partition(p);
    if (!chk.valid) {
        row.status = RowStatus::failed;
        row.detail = "partition certificate failed: " + chk.detail;
        return out;
    }
    UniformityReport rep = uniformity(p);
    if (!rep.is_uniform) {
        row.status = RowStatus::failed;
        row.detail = "built partition is not uniform; " + histogram_string(rep);
    } else if (*rep.uniformity_number != row.predicted) {
        row.status = RowStatus::failed;
        row.computed = rep.uniformity_number;
        row.detail = "computed " + std::to_string(*rep.uniformity_number) +
                     " != predicted " + std::to_string(row.predicted);
    } else {
        row.status = RowStatus::built_verified;
        row.computed = rep.uniformity_number;
    }
    out.partition = std::move(p);
    return out;
}

} // namespace

void ImportStore::add(CodePartition p) {
    PartitionCheck chk = verify_partition(p);
    if (!chk.valid) throw std::runtime_error("import rejected: " + chk.detail);
    UniformityReport rep = uniformity(p);
    if (!rep.is_uniform) throw std::runtime_error("import rejected: partition is not uniform");
    std::uint32_t n = p.n;
    by_length.insert_or_assign(n, Entry{std::move(p), *rep.uniformity_number});
}

const ImportStore::Entry* ImportStore::find(std::uint32_t n) const {
    auto it = by_length.find(n);
    return it == by_length.end() ? nullptr : &it->second;
}

const char* to_string(RowStatus s) {
    switch (s) {
        case RowStatus::built_verified: return "built-verified";
        case RowStatus::skipped_missing_import: return "skipped-missing-import";
        case RowStatus::open: return "open";
        case RowStatus::failed: return "failed";
    }
    return "?";
}

std::uint32_t delta_of(std::uint32_t m) { return m % 2; }

std::uint32_t e_max(std::uint32_t m) { return (m + 1) / 2; }

const CodePartition& phelps7() {
    static const CodePartition p = [] {
        SearchOptions opt;
        opt.limit = 1;
        SearchOutcome out = phelps_search(2, opt);
        if (out.partitions.empty())
            throw std::logic_error("no length-7 partition with pairwise dimension 2 found");
        return out.partitions.front();
    }();
    return p;
}

CodePartition build_recipe(const std::string& expr, const ImportStore& imports) {
    return eval(*parse_recipe(expr), imports);
}

std::vector<Isometry> recipe_generators(const std::string& expr, const ImportStore& imports) {
    return gens_of(*parse_recipe(expr), imports);
}

std::vector<TheoremRow> theorem_table(std::uint32_t m) {
    return theorem_table(m, ImportStore{});
}

std::vector<TheoremRow> theorem_table(std::uint32_t m, const ImportStore& imports) {
    if (m < 3) throw std::invalid_argument("theorem_table: m >= 3");
    std::vector<TheoremRow> rows;
    for (std::uint32_t e = 1; e <= e_max(m); ++e)
        rows.push_back(build_row(m, e, imports).row);
    return rows;
}

std::vector<ChainStep> lemma3_chains(const ImportStore& imports) {
    std::vector<ChainStep> steps;

    auto run = [&](const char* name, std::uint32_t n, std::uint32_t expected,
                   const std::string& formula, const std::string& recipe) {
        ChainStep st;
        st.name = name;
        st.n = n;
        st.expected = expected;
        st.formula = formula;
        auto tree = parse_recipe(recipe);
        std::vector<std::uint32_t> needed;
        collect_krotov(*tree, needed);
        for (std::uint32_t len : needed) {
            const ImportStore::Entry* e = imports.find(len);
            if (!e || e->eta != krotov_required_eta(len)) {
                st.status = RowStatus::skipped_missing_import;
                st.detail = "needs an imported length-" + std::to_string(len) +
                            " partition with uniformity number " +
                            std::to_string(krotov_required_eta(len));
                steps.push_back(std::move(st));
                return;
            }
        }
        CodePartition p = eval(*tree, imports);
        PartitionCheck chk = verify_partition(p);
        if (!chk.valid) {
            st.status = RowStatus::failed;
            st.detail = "partition certificate failed: " + chk.detail;
            steps.push_back(std::move(st));
            return;
        }
        UniformityReport rep = uniformity(p);
        if (!rep.is_uniform) {
            st.status = RowStatus::failed;
            st.detail = "built partition is not uniform; " + histogram_string(rep);
        } else {
            st.computed = rep.uniformity_number;
            if (*rep.uniformity_number == expected) {
                st.status = RowStatus::built_verified;
            } else {
                st.status = RowStatus::failed;
                st.detail = "computed " + std::to_string(*rep.uniformity_number) +
                            " != expected " + std::to_string(expected);
            }
        }
        steps.push_back(std::move(st));
    };

    run("31/24", 31, 24, "1 + 2 + 21", "b(trivial:3, phelps7)");
    run("127/116", 127, 116, "1 + 22 + 93", "b(trivial:3, krotov:31)");
    run("255/241", 255, 241, "2 + 22 + 217", "b(phelps7, krotov:31)");
    run("1023/1007", 1023, 1007, "1 + 241 + 765", "b(trivial:3, b(phelps7, krotov:31))");
    return steps;
}

CountsReport corollary_counts(std::uint32_t m) {
    return corollary_counts(m, ImportStore{});
}

CountsReport corollary_counts(std::uint32_t m, const ImportStore& imports) {
    if (m < 3) throw std::invalid_argument("corollary_counts: m >= 3");
    CountsReport rep;
    rep.m = m;
    rep.required_uniform = m == 4 ? 1 : e_max(m);
    rep.required_two_transitive = m == 3 ? 2 : m == 4 ? 0 : m == 5 ? 2 : m / 3;

    std::vector<std::map<std::uint32_t, std::size_t>> signatures;
    for (std::uint32_t e = 1; e <= e_max(m); ++e) {
        BuiltRow built = build_row(m, e, imports);
        CountsRow crow;
        crow.e = e;
        crow.status = built.row.status;
        crow.eta = built.row.computed;
        if (built.row.status == RowStatus::built_verified && built.partition) {
            signatures.push_back(invariant_signature(*built.partition));
            ++rep.exhibited_uniform;
            std::vector<Isometry> gens = recipe_generators(built.row.recipe, imports);
            crow.generators = gens.size();
            TransitivityReport tr = two_transitive(*built.partition, gens);
            crow.two_transitive = tr.two_transitive;
            crow.pair_orbit = tr.pair_orbit;
            if (tr.two_transitive) ++rep.certified_two_transitive;
        }
        rep.rows.push_back(std::move(crow));
    }
    rep.signatures_distinct = true;
    for (std::size_t i = 0; i < signatures.size(); ++i)
        for (std::size_t j = i + 1; j < signatures.size(); ++j)
            if (signatures[i] == signatures[j]) rep.signatures_distinct = false;
    return rep;
}

} // namespace hampart
