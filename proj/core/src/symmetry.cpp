#include "hampart/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>

namespace hampart {

namespace {

void check_iso(const Isometry& iso, std::uint32_t n) {
    if (iso.n() != n || iso.shift.length() != n)
        throw std::invalid_argument("isometry has the wrong length");
    std::vector<char> seen(n, 0);
    for (std::uint32_t v : iso.perm) {
        if (v >= n || seen[v]) throw std::invalid_argument("isometry: not a permutation");
        seen[v] = 1;
    }
}

BitMatrix permute_columns(const BitMatrix& h, const std::vector<std::uint32_t>& perm) {
    BitMatrix out(h.cols());
    for (std::uint32_t r = 0; r < h.rows(); ++r) {
        BitVector row(h.cols());
        for (std::uint32_t k = 0; k < h.cols(); ++k)
            if (h.row(r).get(k)) row.set(perm[k], true);
        out.append_row(std::move(row));
    }
    return out;
}

bool same_matrix(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::uint32_t r = 0; r < a.rows(); ++r)
        if (a.row(r) != b.row(r)) return false;
    return true;
}

std::uint64_t matrix_hash(const BitMatrix& m) {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint32_t r = 0; r < m.rows(); ++r)
        for (std::uint64_t w : m.row(r).words()) {
            h ^= w;
            h *= 1099511628211ull;
        }
    return h;
}

std::string rref_key(const LinearCode& c) {
    std::string key;
    for (std::uint32_t i = 0; i < c.parity_rref().rows(); ++i)
        key += c.parity_rref().row(i).to_string();
    return key;
}

std::uint32_t leader_index(const BitVector& leader) {
    return leader.is_zero() ? 0 : leader.leading_bit() + 1;
}

} // namespace

Isometry Isometry::identity(std::uint32_t n) {
    Isometry iso;
    iso.perm.resize(n);
    for (std::uint32_t k = 0; k < n; ++k) iso.perm[k] = k;
    iso.shift = BitVector(n);
    return iso;
}

BitVector Isometry::apply(const BitVector& x) const {
    BitVector out(n());
    for (std::uint32_t k = 0; k < n(); ++k)
        if (x.get(k)) out.set(perm[k], true);
    out ^= shift;
    return out;
}

Isometry compose(const Isometry& a, const Isometry& b) {
    if (a.n() != b.n()) throw std::invalid_argument("compose: length mismatch");
    Isometry out;
    out.perm.resize(a.n());
    for (std::uint32_t k = 0; k < a.n(); ++k) out.perm[k] = a.perm[b.perm[k]];
    BitVector moved(a.n());
    for (std::uint32_t k = 0; k < a.n(); ++k)
        if (b.shift.get(k)) moved.set(a.perm[k], true);
    out.shift = moved ^ a.shift;
    return out;
}

Isometry inverse(const Isometry& a) {
    Isometry out;
    out.perm.resize(a.n());
    for (std::uint32_t k = 0; k < a.n(); ++k) out.perm[a.perm[k]] = k;
    BitVector s(a.n());
    for (std::uint32_t k = 0; k < a.n(); ++k)
        if (a.shift.get(k)) s.set(out.perm[k], true);
    out.shift = std::move(s);
    return out;
}

bool operator==(const Isometry& a, const Isometry& b) {
    return a.perm == b.perm && a.shift == b.shift;
}

std::optional<std::vector<std::uint32_t>> partition_action(const CodePartition& p,
                                                           const Isometry& iso) {
    check_iso(iso, p.n);
    const std::uint32_t count = static_cast<std::uint32_t>(p.components.size());
    if (count != p.n + 1) throw std::invalid_argument("partition_action: malformed partition");

    // Components usually share only a handful of distinct codes, so image
    // codes are cached by the source rref.
    struct CacheEntry {
        std::uint64_t hash;
        const BitMatrix* src;
        LinearCode image;
    };
    std::vector<CacheEntry> cache;
    auto image_of = [&](const LinearCode& c) -> const LinearCode& {
        std::uint64_t h = matrix_hash(c.parity_rref());
        for (const auto& e : cache)
            if (e.hash == h && same_matrix(*e.src, c.parity_rref())) return e.image;
        cache.push_back(CacheEntry{
            h, &c.parity_rref(),
            LinearCode::from_parity_check(permute_columns(c.parity_check(), iso.perm))});
        return cache.back().image;
    };

    std::vector<std::uint32_t> out(count);
    std::vector<char> hit(count, 0);
    for (std::uint32_t k = 0; k < count; ++k) {
        const LinearCode& ic = image_of(p.components[k].code);
        BitVector irep = iso.apply(p.components[k].representative);
        std::uint32_t idx = leader_index(coset_leader(ic, irep));
        if (idx >= count) return std::nullopt;
        const Coset& target = p.components[idx];
        if (!(ic == target.code)) return std::nullopt;
        if (!target.code.contains(irep ^ target.representative)) return std::nullopt;
        if (hit[idx]) return std::nullopt;
        hit[idx] = 1;
        out[k] = idx;
    }
    return out;
}

bool is_automorphism(const CodePartition& p, const Isometry& iso) {
    return partition_action(p, iso).has_value();
}

std::vector<Isometry> exhaustive_automorphisms(const CodePartition& p) {
    const std::uint32_t n = p.n;
    if (n > 7) throw std::invalid_argument("exhaustive_automorphisms: n <= 7 only");
    const std::uint32_t count = static_cast<std::uint32_t>(p.components.size());
    if (count != n + 1) throw std::invalid_argument("exhaustive_automorphisms: malformed partition");

    std::vector<std::string> comp_key(count);
    std::map<std::string, std::uint32_t> key_count;
    for (std::uint32_t k = 0; k < count; ++k) {
        comp_key[k] = rref_key(p.components[k].code);
        ++key_count[comp_key[k]];
    }

    std::vector<Isometry> found;
    std::vector<std::uint32_t> perm(n);
    for (std::uint32_t k = 0; k < n; ++k) perm[k] = k;
    do {
        // Image codes depend on the permutation alone; bail out unless the
        // image code multiset matches the component codes.
        std::map<std::string, LinearCode> image_by_src;
        std::vector<const LinearCode*> image(count);
        std::vector<std::string> image_key(count);
        std::map<std::string, std::uint32_t> image_count;
        for (std::uint32_t k = 0; k < count; ++k) {
            auto it = image_by_src.find(comp_key[k]);
            if (it == image_by_src.end())
                it = image_by_src
                         .emplace(comp_key[k],
                                  LinearCode::from_parity_check(permute_columns(
                                      p.components[k].code.parity_check(), perm)))
                         .first;
            image[k] = &it->second;
            image_key[k] = rref_key(it->second);
            ++image_count[image_key[k]];
        }
        if (image_count != key_count) continue;

        std::vector<BitVector> irep0;
        irep0.reserve(count);
        for (std::uint32_t k = 0; k < count; ++k) {
            BitVector v(n);
            for (std::uint32_t c = 0; c < n; ++c)
                if (p.components[k].representative.get(c)) v.set(perm[c], true);
            irep0.push_back(std::move(v));
        }

        BitVector s(n);
        for (std::uint64_t sv = 0; sv < (std::uint64_t(1) << n); ++sv) {
            s.words()[0] = sv;
            bool ok = true;
            for (std::uint32_t k = 0; k < count && ok; ++k) {
                BitVector rep = irep0[k] ^ s;
                std::uint32_t idx = leader_index(coset_leader(*image[k], rep));
                ok = comp_key[idx] == image_key[k] &&
                     p.components[idx].code.contains(rep ^ p.components[idx].representative);
            }
            if (ok) found.push_back(Isometry{perm, s});
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return found;
}

std::vector<Isometry> affine_automorphisms(const CodePartition& p) {
    const std::uint32_t count = static_cast<std::uint32_t>(p.components.size());
    if (count != p.n + 1) throw std::invalid_argument("affine_automorphisms: malformed partition");
    const LinearCode& code = p.components[0].code;
    for (const Coset& c : p.components)
        if (!(c.code == code))
            throw std::invalid_argument("affine_automorphisms: needs a single-code partition");
    if (!code.is_hamming())
        throw std::invalid_argument("affine_automorphisms: needs a Hamming code");

    const std::uint32_t n = p.n;
    const std::uint32_t m = code.redundancy();
    std::vector<Isometry> gens;

    // Translations by words whose syndromes span F^m; on labels these are
    // the syndrome translations.
    for (std::uint32_t i = 0; i < m; ++i) {
        Isometry iso = Isometry::identity(n);
        iso.shift = BitVector::unit(n, code.position_of_syndrome(1u << i));
        gens.push_back(std::move(iso));
    }
    // Column-value transvections c |-> c + c_v e_u; these fix the code and
    // act on labels as the transvections of GL(m, 2), which generate it.
    for (std::uint32_t u = 0; u < m; ++u)
        for (std::uint32_t v = 0; v < m; ++v) {
            if (u == v) continue;
            Isometry iso = Isometry::identity(n);
            for (std::uint32_t k = 0; k < n; ++k) {
                std::uint32_t c = code.column_value(k);
                std::uint32_t img = c ^ (((c >> v) & 1u) << u);
                iso.perm[k] = code.position_of_syndrome(img);
            }
            gens.push_back(std::move(iso));
        }
    return gens;
}

Isometry lift_isometry(const MollardFrame& f, const Isometry& fa, const Isometry& fb) {
    check_iso(fa, f.l);
    check_iso(fb, f.t);
    Isometry out;
    out.perm.resize(f.n());
    out.shift = BitVector(f.n());
    for (std::uint32_t i = 0; i < f.l; ++i)
        for (std::uint32_t j = 0; j < f.t; ++j)
            out.perm[f.x_pos(i, j)] = f.x_pos(fa.perm[i], fb.perm[j]);
    for (std::uint32_t i = 0; i < f.l; ++i) {
        out.perm[f.y_pos(i)] = f.y_pos(fa.perm[i]);
        if (fa.shift.get(i)) out.shift.set(f.y_pos(i), true);
    }
    for (std::uint32_t j = 0; j < f.t; ++j) {
        out.perm[f.z_pos(j)] = f.z_pos(fb.perm[j]);
        if (fb.shift.get(j)) out.shift.set(f.z_pos(j), true);
    }
    return out;
}

std::vector<Isometry> lifted_automorphisms(const MollardFrame& f,
                                           const std::vector<Isometry>& gens_a,
                                           const std::vector<Isometry>& gens_b) {
    std::vector<Isometry> out;
    out.reserve(gens_a.size() + gens_b.size());
    for (const Isometry& g : gens_a) out.push_back(lift_isometry(f, g, Isometry::identity(f.t)));
    for (const Isometry& g : gens_b) out.push_back(lift_isometry(f, Isometry::identity(f.l), g));
    return out;
}

TransitivityReport two_transitive(const CodePartition& p, const std::vector<Isometry>& gens) {
    std::vector<std::vector<std::uint32_t>> acts;
    acts.reserve(gens.size());
    for (const Isometry& g : gens) {
        auto act = partition_action(p, g);
        if (!act) throw std::invalid_argument("two_transitive: generator does not preserve the partition");
        acts.push_back(std::move(*act));
    }
    const std::size_t count = p.components.size();

    TransitivityReport rep;
    {
        std::vector<char> seen(count, 0);
        std::deque<std::uint32_t> q{0};
        seen[0] = 1;
        while (!q.empty()) {
            std::uint32_t v = q.front();
            q.pop_front();
            ++rep.point_orbit;
            for (const auto& a : acts)
                if (!seen[a[v]]) {
                    seen[a[v]] = 1;
                    q.push_back(a[v]);
                }
        }
        rep.transitive = rep.point_orbit == count;
    }
    if (count >= 2) {
        std::vector<char> seen(count * count, 0);
        std::deque<std::size_t> q{std::size_t(0) * count + 1};
        seen[1] = 1;
        while (!q.empty()) {
            std::size_t v = q.front();
            q.pop_front();
            ++rep.pair_orbit;
            std::uint32_t i = static_cast<std::uint32_t>(v / count);
            std::uint32_t j = static_cast<std::uint32_t>(v % count);
            for (const auto& a : acts) {
                std::size_t w = std::size_t(a[i]) * count + a[j];
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push_back(w);
                }
            }
        }
        rep.two_transitive = rep.pair_orbit == count * (count - 1);
    }
    return rep;
}

} // namespace hampart
