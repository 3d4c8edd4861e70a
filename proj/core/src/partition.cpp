#include "hampart/partition.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <thread>

namespace hampart {

namespace {

std::uint32_t thread_count() {
    if (const char* env = std::getenv("HAMPART_THREADS")) {
        long v = std::atol(env);
        if (v >= 1 && v <= 512) return static_cast<std::uint32_t>(v);
    }
    std::uint32_t hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

std::size_t pair_index(std::uint32_t count, std::uint32_t i, std::uint32_t j) {
    // i < j < count, row-major over the strict upper triangle
    return std::size_t(i) * count - (std::size_t(i) * (i + 1)) / 2 + (j - i - 1);
}

// Parity rref rows of one component with the right-hand side H*rep carried as
// one extra bit at position n.  Reducing another component's rows against
// these decides both the code-intersection dimension (pivot count below n)
// and coset disjointness (a remainder equal to the lone rhs bit).
struct ReducedComponent {
    std::vector<std::uint64_t> rows; // redundancy() rows of `words` words each
    std::vector<std::uint32_t> pivots;
    std::uint32_t words = 0;
};

ReducedComponent reduce_component(const Coset& c, std::uint32_t n) {
    const BitMatrix& r = c.code.parity_rref();
    ReducedComponent out;
    out.words = (n + 64) / 64; // n+1 bits
    out.rows.assign(std::size_t(r.rows()) * out.words, 0);
    out.pivots.resize(r.rows());
    for (std::uint32_t i = 0; i < r.rows(); ++i) {
        std::uint64_t* dst = out.rows.data() + std::size_t(i) * out.words;
        const auto& src = r.row(i).words();
        std::copy(src.begin(), src.end(), dst);
        if (dot(r.row(i), c.representative)) dst[n >> 6] |= std::uint64_t(1) << (n & 63);
        out.pivots[i] = r.row(i).leading_bit();
    }
    return out;
}

struct PairScanResult {
    std::vector<std::uint16_t> dims;     // code intersection dims, triangular
    std::vector<std::uint8_t> disjoint;  // coset disjointness, same layout
};

// One pass over all component pairs.  Work is split across threads by
// handing out i-rows of the triangle through an atomic counter; every slot
// is written by exactly one thread.
PairScanResult pairwise_scan(const CodePartition& p) {
    const std::uint32_t n = p.n;
    const std::uint32_t count = static_cast<std::uint32_t>(p.components.size());
    const std::uint32_t m = p.redundancy();
    const std::uint32_t words = (n + 64) / 64;

    std::vector<ReducedComponent> red(count);
    for (std::uint32_t i = 0; i < count; ++i) red[i] = reduce_component(p.components[i], n);

    PairScanResult res;
    const std::size_t total = std::size_t(count) * (count - 1) / 2;
    res.dims.assign(total, 0);
    res.disjoint.assign(total, 0);

    std::atomic<std::uint32_t> next{0};
    auto worker = [&]() {
        std::vector<std::uint64_t> scratch(std::size_t(2) * m * words);
        std::vector<std::uint32_t> pivots;
        pivots.reserve(2 * m);
        std::vector<std::uint64_t> tmp(words);
        for (;;) {
            std::uint32_t i = next.fetch_add(1);
            if (i + 1 >= count) break;
            const ReducedComponent& a = red[i];
            for (std::uint32_t j = i + 1; j < count; ++j) {
                const ReducedComponent& b = red[j];
                std::copy(a.rows.begin(), a.rows.end(), scratch.begin());
                pivots.assign(a.pivots.begin(), a.pivots.end());
                std::uint32_t extra = 0;
                bool inconsistent = false;
                for (std::uint32_t rb = 0; rb < m; ++rb) {
                    std::copy_n(b.rows.data() + std::size_t(rb) * words, words, tmp.data());
                    for (std::size_t pi = 0; pi < pivots.size(); ++pi) {
                        std::uint32_t c = pivots[pi];
                        if ((tmp[c >> 6] >> (c & 63)) & 1) {
                            const std::uint64_t* pr = scratch.data() + pi * words;
                            for (std::uint32_t w = 0; w < words; ++w) tmp[w] ^= pr[w];
                        }
                    }
                    std::uint32_t lead = n + 1;
                    for (std::uint32_t w = 0; w < words; ++w)
                        if (tmp[w]) { lead = w * 64 + std::countr_zero(tmp[w]); break; }
                    if (lead > n) continue;       // dependent, consistent
                    if (lead == n) { inconsistent = true; continue; } // 0 = 1
                    std::copy(tmp.begin(), tmp.end(),
                              scratch.begin() + pivots.size() * words);
                    pivots.push_back(lead);
                    ++extra;
                }
                std::size_t idx = pair_index(count, i, j);
                res.dims[idx] = static_cast<std::uint16_t>(n - (m + extra));
                res.disjoint[idx] = inconsistent ? 1 : 0;
            }
        }
    };

    std::uint32_t nthreads = std::min(thread_count(), count > 1 ? count - 1 : 1);
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (std::uint32_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return res;
}

std::optional<std::string> shape_fault(const CodePartition& p) {
    if (p.n < 3) return "length must be at least 3";
    if ((p.n & (p.n + 1)) != 0) return "length is not 2^m - 1";
    const std::uint32_t m = static_cast<std::uint32_t>(std::bit_width(p.n + 1) - 1);
    if (p.components.size() != std::size_t(p.n) + 1)
        return "expected " + std::to_string(p.n + 1) + " components, got " +
               std::to_string(p.components.size());
    for (std::size_t k = 0; k < p.components.size(); ++k) {
        const Coset& c = p.components[k];
        std::string at = "component " + std::to_string(k);
        if (c.code.length() != p.n) return at + ": wrong length";
        if (c.representative.length() != p.n) return at + ": wrong representative length";
        if (c.code.redundancy() != m) return at + ": wrong redundancy";
        if (!c.code.is_hamming()) return at + ": code is not Hamming-shaped";
    }
    return std::nullopt;
}

BitVector overlap_witness(const Coset& a, const Coset& b) {
    BitMatrix h = stack(a.code.parity_check(), b.code.parity_check());
    BitVector rhs(h.rows());
    std::uint32_t at = 0;
    for (std::uint32_t i = 0; i < a.code.parity_check().rows(); ++i, ++at)
        rhs.set(at, dot(a.code.parity_check().row(i), a.representative));
    for (std::uint32_t i = 0; i < b.code.parity_check().rows(); ++i, ++at)
        rhs.set(at, dot(b.code.parity_check().row(i), b.representative));
    return *solve(h, rhs);
}

} // namespace

std::uint32_t UniformityReport::dim(std::uint32_t i, std::uint32_t j) const {
    if (i == j) throw std::invalid_argument("dim: equal indices");
    if (i > j) std::swap(i, j);
    return pair_dims[pair_index(n + 1, i, j)];
}

CodePartition trivial_partition(const LinearCode& h) {
    if (!h.is_hamming()) throw std::invalid_argument("trivial_partition: not a Hamming code");
    CodePartition p;
    p.n = h.length();
    p.components.reserve(p.n + 1);
    p.components.push_back(Coset{h, BitVector(p.n), BitVector(p.n)});
    for (std::uint32_t k = 0; k < p.n; ++k) {
        BitVector e = BitVector::unit(p.n, k);
        p.components.push_back(Coset{h, e, e});
    }
    return p;
}

CodePartition partition_from_cosets(std::vector<Coset> cosets) {
    if (cosets.empty()) throw std::invalid_argument("partition_from_cosets: empty");
    const std::uint32_t n = cosets[0].code.length();
    if (cosets.size() != std::size_t(n) + 1)
        throw std::invalid_argument("partition_from_cosets: need exactly n+1 cosets");
    std::vector<std::optional<Coset>> slots(n + 1);
    for (auto& c : cosets) {
        if (c.code.length() != n)
            throw std::invalid_argument("partition_from_cosets: mixed lengths");
        BitVector leader = coset_leader(c.code, c.representative);
        std::uint32_t idx = leader.is_zero() ? 0 : leader.leading_bit() + 1;
        if (slots[idx])
            throw std::invalid_argument("partition_from_cosets: two cosets share leader index " +
                                        std::to_string(idx));
        c.leader = std::move(leader);
        slots[idx] = std::move(c);
    }
    CodePartition p;
    p.n = n;
    p.components.reserve(n + 1);
    for (auto& s : slots) p.components.push_back(std::move(*s));
    return p;
}

PartitionCheck verify_partition(const CodePartition& p, bool exhaustive) {
    PartitionCheck out;
    if (auto fault = shape_fault(p)) {
        out.fault = PartitionFault::shape;
        out.detail = *fault;
        return out;
    }
    const std::uint32_t count = p.n + 1;

    if (!exhaustive) {
        PairScanResult scan = pairwise_scan(p);
        for (std::uint32_t i = 0; i < count; ++i)
            for (std::uint32_t j = i + 1; j < count; ++j)
                if (!scan.disjoint[pair_index(count, i, j)]) {
                    out.fault = PartitionFault::overlap;
                    out.comp_a = i;
                    out.comp_b = j;
                    out.witness = overlap_witness(p.components[i], p.components[j]);
                    out.detail = "components " + std::to_string(i) + " and " +
                                 std::to_string(j) + " intersect";
                    return out;
                }
    } else {
        if (p.n > 25) throw std::invalid_argument("verify_partition: exhaustive mode needs n <= 25");
        // Independent oracle: classify every vector of F^n by membership.
        BitVector x(p.n);
        for (std::uint64_t v = 0; v < (std::uint64_t(1) << p.n); ++v) {
            x.words()[0] = v;
            std::int32_t first = -1;
            for (std::uint32_t k = 0; k < count; ++k) {
                if (p.components[k].code.contains(x ^ p.components[k].representative)) {
                    if (first >= 0) {
                        out.fault = PartitionFault::double_covered;
                        out.comp_a = static_cast<std::uint32_t>(first);
                        out.comp_b = k;
                        out.witness = x;
                        out.detail = "vector in components " + std::to_string(first) +
                                     " and " + std::to_string(k);
                        return out;
                    }
                    first = static_cast<std::int32_t>(k);
                }
            }
            if (first < 0) {
                out.fault = PartitionFault::uncovered;
                out.witness = x;
                out.detail = "vector in no component";
                return out;
            }
        }
    }

    for (std::uint32_t k = 0; k < count; ++k) {
        BitVector expect = k == 0 ? BitVector(p.n) : BitVector::unit(p.n, k - 1);
        if (coset_leader(p.components[k].code, p.components[k].representative) != expect) {
            out.fault = PartitionFault::leader;
            out.comp_a = k;
            out.detail = "component " + std::to_string(k) + " has the wrong leader";
            return out;
        }
    }

    // Disjointness plus the counting identity (n+1) * 2^(n-m) = 2^n already
    // force the covering, so nothing else to check.
    out.valid = true;
    return out;
}

UniformityReport uniformity(const CodePartition& p) {
    if (auto fault = shape_fault(p))
        throw std::invalid_argument("uniformity: " + *fault);
    const std::uint32_t code_dim = p.code_dimension();

    UniformityReport rep;
    rep.n = p.n;
    PairScanResult scan = pairwise_scan(p);
    rep.pair_dims = std::move(scan.dims);
    for (std::uint16_t d : rep.pair_dims) ++rep.dim_histogram[d];

    // A pair intersecting in the full code dimension is a pair of identical
    // codes; all other values come from genuinely distinct codes.
    auto it = rep.dim_histogram.find(code_dim);
    rep.parallel_pairs = it == rep.dim_histogram.end() ? 0 : it->second;
    std::vector<std::uint32_t> distinct_vals;
    for (auto& [d, cnt] : rep.dim_histogram)
        if (d != code_dim) distinct_vals.push_back(d);

    if (distinct_vals.empty()) {
        rep.is_uniform = true; // single-code partition
        rep.uniformity_number = code_dim;
    } else if (distinct_vals.size() == 1) {
        rep.is_uniform = true;
        rep.uniformity_number = distinct_vals[0];
    }
    return rep;
}

std::map<std::uint32_t, std::size_t> invariant_signature(const CodePartition& p) {
    if (auto fault = shape_fault(p))
        throw std::invalid_argument("invariant_signature: " + *fault);
    PairScanResult scan = pairwise_scan(p);
    std::map<std::uint32_t, std::size_t> hist;
    for (std::uint16_t d : scan.dims) ++hist[d];
    return hist;
}

const std::vector<LinearCode>& all_hamming_codes_7() {
    static const std::vector<LinearCode> codes = [] {
        std::vector<std::uint32_t> order = {1, 2, 3, 4, 5, 6, 7};
        std::map<std::string, LinearCode> by_key;
        do {
            LinearCode c = hamming_code(3, order);
            std::string key;
            for (std::uint32_t i = 0; i < c.parity_rref().rows(); ++i)
                key += c.parity_rref().row(i).to_string();
            by_key.emplace(std::move(key), std::move(c));
        } while (std::next_permutation(order.begin(), order.end()));
        std::vector<LinearCode> out;
        out.reserve(by_key.size());
        for (auto& [k, c] : by_key) out.push_back(std::move(c));
        return out;
    }();
    return codes;
}

namespace {

// 128-bit codeword mask of a length-7 code, bit v set when the vector with
// value v is a codeword.
struct Mask128 {
    std::uint64_t lo = 0, hi = 0;
    void set(std::uint32_t v) { (v < 64 ? lo : hi) |= std::uint64_t(1) << (v & 63); }
    bool test(std::uint32_t v) const {
        return ((v < 64 ? lo : hi) >> (v & 63)) & 1;
    }
};

Mask128 codeword_mask7(const LinearCode& c) {
    BitMatrix g = c.generator();
    Mask128 m;
    for (std::uint32_t sel = 0; sel < (1u << g.rows()); ++sel) {
        std::uint64_t w = 0;
        for (std::uint32_t i = 0; i < g.rows(); ++i)
            if ((sel >> i) & 1) w ^= g.row(i).words()[0];
        m.set(static_cast<std::uint32_t>(w));
    }
    return m;
}

struct Search7Tables {
    std::vector<Mask128> words;                    // codewords per code
    std::vector<std::vector<std::uint8_t>> dims;   // pairwise intersection dims
    std::vector<std::vector<Mask128>> sums;        // H_a + H_b membership
};

const Search7Tables& search7_tables() {
    static const Search7Tables t = [] {
        const auto& codes = all_hamming_codes_7();
        const std::size_t nc = codes.size();
        Search7Tables tt;
        tt.words.resize(nc);
        for (std::size_t i = 0; i < nc; ++i) tt.words[i] = codeword_mask7(codes[i]);
        tt.dims.assign(nc, std::vector<std::uint8_t>(nc));
        tt.sums.assign(nc, std::vector<Mask128>(nc));
        for (std::size_t a = 0; a < nc; ++a)
            for (std::size_t b = a; b < nc; ++b) {
                tt.dims[a][b] = tt.dims[b][a] =
                    static_cast<std::uint8_t>(intersection_dim(codes[a], codes[b]));
                Mask128 s;
                for (std::uint32_t va = 0; va < 128; ++va) {
                    if (!tt.words[a].test(va)) continue;
                    for (std::uint32_t vb = 0; vb < 128; ++vb)
                        if (tt.words[b].test(vb)) s.set(va ^ vb);
                }
                tt.sums[a][b] = tt.sums[b][a] = s;
            }
        return tt;
    }();
    return t;
}

} // namespace

SearchOutcome phelps_search(std::uint32_t target_dim, SearchOptions opt) {
    if (target_dim > 4) throw std::invalid_argument("phelps_search: target_dim out of range");
    const auto& codes = all_hamming_codes_7();
    const auto& tab = search7_tables();
    const std::uint32_t nc = static_cast<std::uint32_t>(codes.size());

    // leader value of slot k as a 7-bit vector
    auto leader_val = [](std::uint32_t k) -> std::uint32_t { return k == 0 ? 0 : 1u << (k - 1); };

    SearchOutcome out;
    std::vector<std::uint32_t> chosen;
    chosen.reserve(8);

    auto emit = [&]() {
        CodePartition p;
        p.n = 7;
        for (std::uint32_t k = 0; k < 8; ++k) {
            BitVector rep(7);
            rep.words()[0] = leader_val(k);
            p.components.push_back(Coset{codes[chosen[k]], rep, rep});
        }
        out.partitions.push_back(std::move(p));
    };

    auto admissible = [&](std::uint32_t k, std::uint32_t c) {
        for (std::uint32_t q = 0; q < k; ++q) {
            if (tab.dims[chosen[q]][c] != target_dim) return false;
            if (tab.sums[chosen[q]][c].test(leader_val(q) ^ leader_val(k))) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, std::uint32_t k) -> bool {
        if (out.nodes++ >= opt.node_budget) {
            out.budget_exhausted = true;
            return true;
        }
        if (k == 8) {
            emit();
            return out.partitions.size() >= opt.limit;
        }
        for (std::uint32_t c = 0; c < nc; ++c) {
            if (!admissible(k, c)) continue;
            chosen.push_back(c);
            bool stop = self(self, k + 1);
            chosen.pop_back();
            if (stop) return true;
        }
        return false;
    };
    rec(rec, 0);
    return out;
}

SearchOutcome bounded_uniform_search(std::uint32_t m, std::uint32_t target_dim,
                                     SearchOptions opt, std::uint64_t seed) {
    if (m == 3) return phelps_search(target_dim, opt);
    const std::uint32_t n = (1u << m) - 1;

    // Sampled pool of codes; nowhere near the full universe for m >= 4, so
    // this probes rather than decides.
    std::mt19937_64 rng(seed);
    std::vector<LinearCode> pool;
    std::map<std::string, bool> seen;
    std::vector<std::uint32_t> order(n);
    for (std::uint32_t k = 0; k < n; ++k) order[k] = k + 1;
    while (pool.size() < 256) {
        std::shuffle(order.begin(), order.end(), rng);
        LinearCode c = hamming_code(m, order);
        std::string key;
        for (std::uint32_t i = 0; i < c.parity_rref().rows(); ++i)
            key += c.parity_rref().row(i).to_string();
        if (!seen.emplace(std::move(key), true).second) continue;
        pool.push_back(std::move(c));
    }

    SearchOutcome out;
    std::vector<std::uint32_t> chosen;
    auto leader_of = [&](std::uint32_t k) {
        return k == 0 ? BitVector(n) : BitVector::unit(n, k - 1);
    };
    auto rec = [&](auto&& self, std::uint32_t k) -> bool {
        if (out.nodes++ >= opt.node_budget) {
            out.budget_exhausted = true;
            return true;
        }
        if (k == n + 1) {
            std::vector<Coset> cs;
            for (std::uint32_t q = 0; q <= n; ++q)
                cs.push_back(Coset{pool[chosen[q]], leader_of(q), leader_of(q)});
            out.partitions.push_back(partition_from_cosets(std::move(cs)));
            return out.partitions.size() >= opt.limit;
        }
        for (std::uint32_t c = 0; c < pool.size(); ++c) {
            bool ok = true;
            for (std::uint32_t q = 0; q < k && ok; ++q) {
                if (intersection_dim(pool[chosen[q]], pool[c]) != target_dim) ok = false;
                else {
                    Coset ca{pool[chosen[q]], leader_of(q), leader_of(q)};
                    Coset cb{pool[c], leader_of(k), leader_of(k)};
                    if (coset_intersection_size_log(ca, cb)) ok = false;
                }
            }
            if (!ok) continue;
            chosen.push_back(c);
            bool stop = self(self, k + 1);
            chosen.pop_back();
            if (stop) return true;
        }
        return false;
    };
    rec(rec, 0);
    return out;
}

ExtendedPartition extend_partition(const CodePartition& p) {
    if (auto fault = shape_fault(p))
        throw std::invalid_argument("extend_partition: " + *fault);
    ExtendedPartition e;
    e.n = p.n + 1;
    for (const Coset& c : p.components) {
        BitVector rep(p.n + 1);
        for (std::uint32_t k = 0; k < p.n; ++k) rep.set(k, c.representative.get(k));
        rep.set(p.n, c.representative.weight() & 1);
        e.components.emplace_back(extend(c.code), std::move(rep));
    }
    return e;
}

CodePartition puncture_partition(const ExtendedPartition& p, std::uint32_t position) {
    std::vector<Coset> cosets;
    for (const auto& [code, rep] : p.components) {
        LinearCode pc = puncture(code, position);
        BitVector prep(p.n - 1);
        for (std::uint32_t k = 0, at = 0; k < p.n; ++k) {
            if (k == position) continue;
            prep.set(at++, rep.get(k));
        }
        cosets.push_back(make_coset(std::move(pc), std::move(prep)));
    }
    return partition_from_cosets(std::move(cosets));
}

PartitionCheck verify_extended(const ExtendedPartition& p) {
    PartitionCheck out;
    if (p.components.size() != p.n || p.n < 4 || std::popcount(p.n) != 1) {
        out.fault = PartitionFault::shape;
        out.detail = "expected 2^m components of extended length 2^m";
        return out;
    }
    const std::uint32_t m = static_cast<std::uint32_t>(std::bit_width(p.n) - 1);
    const LinearCode& first = p.components[0].first;
    if (first.dimension() != p.n - 1 - m) {
        out.fault = PartitionFault::shape;
        out.detail = "components have the wrong dimension";
        return out;
    }
    BitVector ones(p.n);
    for (std::uint32_t k = 0; k < p.n; ++k) ones.set(k, true);
    for (std::size_t k = 0; k < p.components.size(); ++k) {
        const auto& [code, rep] = p.components[k];
        if (code.length() != p.n || rep.length() != p.n ||
            code.dimension() != first.dimension()) {
            out.fault = PartitionFault::shape;
            out.detail = "component " + std::to_string(k) + ": wrong shape";
            return out;
        }
        // Even-weight component: the all-ones functional must vanish, i.e.
        // lie in the dual, and the representative must be even itself.
        BitVector r = ones;
        for (std::uint32_t i = 0; i < code.parity_rref().rows(); ++i)
            if (r.get(code.parity_rref().row(i).leading_bit()))
                r ^= code.parity_rref().row(i);
        if (!r.is_zero() || (rep.weight() & 1)) {
            out.fault = PartitionFault::shape;
            out.detail = "component " + std::to_string(k) + ": not even-weight";
            return out;
        }
    }
    for (std::size_t i = 0; i < p.components.size(); ++i)
        for (std::size_t j = i + 1; j < p.components.size(); ++j) {
            Coset a{p.components[i].first, p.components[i].second, BitVector(p.n)};
            Coset b{p.components[j].first, p.components[j].second, BitVector(p.n)};
            if (coset_intersection_size_log(a, b)) {
                out.fault = PartitionFault::overlap;
                out.comp_a = static_cast<std::uint32_t>(i);
                out.comp_b = static_cast<std::uint32_t>(j);
                out.detail = "components " + std::to_string(i) + " and " +
                             std::to_string(j) + " intersect";
                return out;
            }
        }
    // n components of size 2^dim with dim = (n-1) - m tile the even half of
    // F^n once they are disjoint.
    out.valid = true;
    return out;
}

} // namespace hampart
