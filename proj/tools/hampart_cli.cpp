// Command-line front end: build/verify/inspect coset partitions of F^n.
#include "hampart/io.hpp"
#include "hampart/mollard.hpp"
#include "hampart/partition.hpp"
#include "hampart/symmetry.hpp"
#include "hampart/theorems.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace hampart;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

CodePartition load_partition(const std::string& path) {
    return parse_partition(read_file(path));
}

ImportStore load_imports(const std::vector<std::string>& paths) {
    ImportStore store;
    for (const auto& path : paths) {
        CodePartition p = load_partition(path);
        try {
            store.add(std::move(p));
        } catch (const std::exception& e) {
            throw std::runtime_error(path + ": " + e.what());
        }
        std::cerr << "import " << path << ": accepted, length "
                  << store.by_length.rbegin()->first << ", uniformity number "
                  << store.by_length.rbegin()->second.eta << "\n";
    }
    return store;
}

void print_check(const PartitionCheck& chk) {
    std::cout << "valid: " << (chk.valid ? "yes" : "no") << "\n";
    if (!chk.valid) {
        std::cout << "fault: " << chk.detail << "\n";
        if (chk.witness) std::cout << "witness: " << chk.witness->to_string() << "\n";
    }
}

void print_uniformity(const UniformityReport& rep) {
    std::cout << "uniform: " << (rep.is_uniform ? "yes" : "no") << "\n";
    if (rep.uniformity_number)
        std::cout << "uniformity-number: " << *rep.uniformity_number << "\n";
    std::cout << "pair-dims:";
    for (const auto& [d, cnt] : rep.dim_histogram) std::cout << " " << d << "x" << cnt;
    std::cout << "\n";
    if (rep.parallel_pairs)
        std::cout << "parallel-pairs: " << rep.parallel_pairs << "\n";
}

// Generator strategy for a partition standing alone: the affine stabiliser
// when all components share one code, the exhaustive scan when n <= 7.
std::vector<Isometry> standalone_generators(const CodePartition& p) {
    bool single = true;
    for (const Coset& c : p.components)
        if (!(c.code == p.components[0].code)) {
            single = false;
            break;
        }
    if (single) return affine_automorphisms(p);
    if (p.n <= 7) return exhaustive_automorphisms(p);
    throw std::runtime_error(
        "no automorphism strategy for length > 7 with several codes; use --lift");
}

int run_build(const std::string& recipe, const std::vector<std::string>& import_paths,
              const std::string& out_path) {
    ImportStore imports = load_imports(import_paths);
    CodePartition p = build_recipe(recipe, imports);
    PartitionCheck chk = verify_partition(p);
    std::cout << "recipe: " << recipe << "\n" << "n: " << p.n << "\n";
    print_check(chk);
    if (!out_path.empty()) {
        write_file(out_path, serialize_partition(p));
        std::cout << "wrote: " << out_path << "\n";
    }
    return chk.valid ? 0 : 1;
}

int run_verify(const std::string& path, bool exhaustive) {
    CodePartition p = load_partition(path);
    PartitionCheck chk = verify_partition(p, exhaustive);
    std::cout << "n: " << p.n << "\n" << "mode: " << (exhaustive ? "exhaustive" : "algebraic")
              << "\n";
    print_check(chk);
    return chk.valid ? 0 : 1;
}

int run_uniformity(const std::string& path) {
    CodePartition p = load_partition(path);
    PartitionCheck chk = verify_partition(p);
    if (!chk.valid) {
        print_check(chk);
        return 1;
    }
    print_uniformity(uniformity(p));
    return 0;
}

int run_aut(const std::string& path, bool exhaustive, const std::vector<std::string>& lift_paths) {
    CodePartition p = load_partition(path);
    std::vector<Isometry> gens;
    if (!lift_paths.empty()) {
        CodePartition a = load_partition(lift_paths[0]);
        CodePartition b = load_partition(lift_paths[1]);
        MollardFrame frame{a.n, b.n};
        if (frame.n() != p.n)
            throw std::runtime_error("component lengths do not compose to the target length");
        std::vector<Isometry> lifted =
            lifted_automorphisms(frame, standalone_generators(a), standalone_generators(b));
        std::size_t discarded = 0;
        for (auto& g : lifted) {
            if (is_automorphism(p, g))
                gens.push_back(std::move(g));
            else
                ++discarded;
        }
        std::cout << "lifted-generators: " << gens.size() << " confirmed, " << discarded
                  << " discarded\n";
    } else if (exhaustive) {
        if (p.n > 7) throw std::runtime_error("--exhaustive needs n <= 7");
        gens = exhaustive_automorphisms(p);
        std::cout << "automorphisms: " << gens.size() << "\n";
    } else {
        gens = standalone_generators(p);
        std::cout << "generators: " << gens.size() << "\n";
    }
    TransitivityReport tr = two_transitive(p, gens);
    std::cout << "point-orbit: " << tr.point_orbit << "\n"
              << "pair-orbit: " << tr.pair_orbit << " of " << p.components.size() * p.n << "\n"
              << "transitive: " << (tr.transitive ? "yes" : "no") << "\n"
              << "two-transitive: " << (tr.two_transitive ? "yes" : "no") << "\n";
    return 0;
}

int run_table(std::uint32_t m, const std::vector<std::string>& import_paths, bool machine) {
    ImportStore imports = load_imports(import_paths);
    std::vector<TheoremRow> rows = theorem_table(m, imports);
    bool any_failed = false;
    if (!machine)
        std::cout << "m  e  n      predicted  computed  status                  recipe\n";
    for (const TheoremRow& row : rows) {
        std::string computed = row.computed ? std::to_string(*row.computed) : "-";
        if (machine) {
            std::cout << "row m=" << row.m << " e=" << row.e << " n=" << row.n
                      << " predicted=" << row.predicted << " computed=" << computed
                      << " status=" << to_string(row.status) << " recipe=\"" << row.recipe
                      << "\"\n";
        } else {
            char buf[160];
            std::snprintf(buf, sizeof buf, "%-2u %-2u %-6u %-10u %-9s %-23s %s", row.m, row.e,
                          row.n, row.predicted, computed.c_str(), to_string(row.status),
                          row.recipe.c_str());
            std::cout << buf << "\n";
        }
        if (!row.detail.empty()) std::cout << "    " << row.detail << "\n";
        if (row.status == RowStatus::failed) any_failed = true;
    }
    return any_failed ? 2 : 0;
}

int run_lemma3(const std::vector<std::string>& import_paths) {
    ImportStore imports = load_imports(import_paths);
    bool any_failed = false;
    for (const ChainStep& st : lemma3_chains(imports)) {
        std::cout << st.name << ": expected " << st.expected << " = " << st.formula
                  << ", status " << to_string(st.status);
        if (st.computed) std::cout << ", computed " << *st.computed;
        std::cout << "\n";
        if (!st.detail.empty()) std::cout << "    " << st.detail << "\n";
        if (st.status == RowStatus::failed) any_failed = true;
    }
    return any_failed ? 2 : 0;
}

int run_counts(std::uint32_t m, const std::vector<std::string>& import_paths) {
    ImportStore imports = load_imports(import_paths);
    CountsReport rep = corollary_counts(m, imports);
    std::cout << "m: " << rep.m << "\n"
              << "uniform: " << rep.exhibited_uniform << " exhibited of " << rep.required_uniform
              << " required, signatures " << (rep.signatures_distinct ? "distinct" : "NOT distinct")
              << "\n"
              << "two-transitive: " << rep.certified_two_transitive << " certified of "
              << rep.required_two_transitive << " required\n";
    for (const CountsRow& row : rep.rows) {
        std::cout << "  e=" << row.e << " status=" << to_string(row.status);
        if (row.eta) std::cout << " eta=" << *row.eta;
        if (row.status == RowStatus::built_verified)
            std::cout << " two-transitive=" << (row.two_transitive ? "yes" : "no")
                      << " pair-orbit=" << row.pair_orbit << " generators=" << row.generators;
        std::cout << "\n";
    }
    bool ok = rep.exhibited_uniform >= rep.required_uniform && rep.signatures_distinct &&
              rep.certified_two_transitive >= rep.required_two_transitive;
    return ok ? 0 : 2;
}

int run_extend(const std::string& path, const std::string& out_path) {
    CodePartition p = load_partition(path);
    ExtendedPartition e = extend_partition(p);
    PartitionCheck chk = verify_extended(e);
    std::cout << "n: " << e.n << "\n";
    print_check(chk);
    if (!out_path.empty()) {
        write_file(out_path, serialize_extended(e));
        std::cout << "wrote: " << out_path << "\n";
    }
    return chk.valid ? 0 : 1;
}

int run_puncture(const std::string& path, std::int64_t position, const std::string& out_path) {
    ExtendedPartition e = parse_extended(read_file(path));
    // 1-based on the command line; default is the last (parity) coordinate
    std::uint32_t pos = position == 0 ? e.n - 1 : static_cast<std::uint32_t>(position - 1);
    CodePartition p = puncture_partition(e, pos);
    PartitionCheck chk = verify_partition(p);
    std::cout << "n: " << p.n << "\n";
    print_check(chk);
    if (!out_path.empty()) {
        write_file(out_path, serialize_partition(p));
        std::cout << "wrote: " << out_path << "\n";
    }
    return chk.valid ? 0 : 1;
}

int run_phelps(std::uint32_t dim, std::uint64_t limit, const std::string& out_path) {
    SearchOptions opt;
    opt.limit = limit;
    SearchOutcome out = phelps_search(dim, opt);
    std::cout << "solutions: " << out.partitions.size() << " (nodes " << out.nodes << ")\n";
    for (std::size_t i = 0; i < out.partitions.size(); ++i) {
        UniformityReport rep = uniformity(out.partitions[i]);
        std::cout << "  #" << i << " uniform=" << (rep.is_uniform ? "yes" : "no");
        if (rep.uniformity_number) std::cout << " number=" << *rep.uniformity_number;
        std::cout << "\n";
    }
    if (!out_path.empty() && !out.partitions.empty()) {
        write_file(out_path, serialize_partition(out.partitions.front()));
        std::cout << "wrote: " << out_path << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"partitions of binary n-space into cosets of Hamming codes"};
    app.require_subcommand(1);

    std::uint32_t threads = 0;
    app.add_option("--threads", threads, "worker threads for pairwise scans");

    std::string in_path, out_path, recipe;
    std::vector<std::string> imports, lift_paths;
    bool exhaustive = false, machine = false;
    std::uint32_t m = 0, dim = 2;
    std::uint64_t limit = 16;
    std::int64_t position = 0;

    auto* c_build = app.add_subcommand("build", "build a partition from a recipe expression");
    c_build->add_option("recipe", recipe, "e.g. 'b(trivial:3, phelps7)'")->required();
    c_build->add_option("-o,--out", out_path, "output file");
    c_build->add_option("--import", imports, "verified partition files for krotov:N seeds");

    auto* c_verify = app.add_subcommand("verify", "run the partition certificate on a file");
    c_verify->add_option("file", in_path)->required();
    c_verify->add_flag("--exhaustive", exhaustive, "membership sweep over all of F^n (n <= 25)");

    auto* c_unif = app.add_subcommand("uniformity", "pairwise intersection report");
    c_unif->add_option("file", in_path)->required();

    auto* c_aut = app.add_subcommand("aut", "automorphism generators and 2-transitivity");
    c_aut->add_option("file", in_path)->required();
    c_aut->add_flag("--exhaustive", exhaustive, "full isometry scan (n <= 7)");
    c_aut->add_option("--lift", lift_paths, "two source partition files to lift from")
        ->expected(2);

    auto* c_table = app.add_subcommand("theorem-table", "uniformity-number table for one m");
    c_table->add_option("--m", m, "parameter m, length n = 2^m - 1")->required();
    c_table->add_option("--import", imports, "verified partition files for krotov:N rows");
    c_table->add_flag("--machine", machine, "line-oriented records");

    auto* c_lemma3 = app.add_subcommand("lemma3", "the 31/127/255/1023 composition chains");
    c_lemma3->add_option("--import", imports, "length-31 uniformity-22 partition file");

    auto* c_counts = app.add_subcommand("counts", "nonequivalence and 2-transitivity counts");
    c_counts->add_option("--m", m)->required();
    c_counts->add_option("--import", imports, "verified partition files");

    auto* c_extend = app.add_subcommand("extend", "append an overall parity coordinate");
    c_extend->add_option("file", in_path)->required();
    c_extend->add_option("-o,--out", out_path);

    auto* c_punct = app.add_subcommand("puncture", "delete a coordinate of an extended partition");
    c_punct->add_option("file", in_path)->required();
    c_punct->add_option("--position", position, "1-based coordinate; default: last");
    c_punct->add_option("-o,--out", out_path);

    auto* c_phelps = app.add_subcommand("phelps-search", "backtracking search at length 7");
    c_phelps->add_option("--dim", dim, "target pairwise intersection dimension")->required();
    c_phelps->add_option("--limit", limit, "stop after this many solutions");
    c_phelps->add_option("-o,--out", out_path, "write the first solution");

    CLI11_PARSE(app, argc, argv);

    if (threads) setenv("HAMPART_THREADS", std::to_string(threads).c_str(), 1);

    try {
        if (*c_build) return run_build(recipe, imports, out_path);
        if (*c_verify) return run_verify(in_path, exhaustive);
        if (*c_unif) return run_uniformity(in_path);
        if (*c_aut) return run_aut(in_path, exhaustive, lift_paths);
        if (*c_table) return run_table(m, imports, machine);
        if (*c_lemma3) return run_lemma3(imports);
        if (*c_counts) return run_counts(m, imports);
        if (*c_extend) return run_extend(in_path, out_path);
        if (*c_punct) return run_puncture(in_path, position, out_path);
        if (*c_phelps) return run_phelps(dim, limit, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
