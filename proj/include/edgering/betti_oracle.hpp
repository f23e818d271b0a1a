#pragma once

#include <map>
#include <set>
#include <vector>

#include "edgering/homology.hpp"
#include "edgering/monomial_ideal.hpp"

namespace edgering {

enum class OracleMethod {
    Auto,    // strand for small generator counts, lattice otherwise
    Strand,  // multigraded strands of the Taylor complex, all 2^r subsets
    Lattice  // per-lcm complexes of deficient subsets, nerve-reduced
};

namespace oracle_detail {

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline void check_characteristic(long long c) {
    if (c != 0 && !is_prime(c))
        throw std::invalid_argument("characteristic must be 0 or a prime");
}

// All joins of nonempty generator subsets: close the generator set under
// join-with-a-generator.
inline std::set<std::vector<int>> lcm_lattice(const MonomialIdeal& I) {
    std::set<std::vector<int>> nodes;
    std::vector<Monomial> work = I.gens;
    for (const auto& g : I.gens) nodes.insert(g.e);
    while (!work.empty()) {
        Monomial b = work.back();
        work.pop_back();
        for (const auto& g : I.gens) {
            Monomial j = lcm(b, g);
            if (nodes.insert(j.e).second) work.push_back(j);
        }
    }
    return nodes;
}

// Maximal elements of a family of generator-index sets (as bitmasks),
// deduplicated.
inline std::vector<std::uint64_t> maximal_sets(std::vector<std::uint64_t> sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<std::uint64_t> out;
    for (auto s : sets) {
        bool dominated = false;
        for (auto t : sets)
            if (t != s && (s & t) == s) { dominated = true; break; }
        if (!dominated) out.push_back(s);
    }
    return out;
}

// Reduced homology of a union of simplices, computed on whichever side of
// the vertex/facet duality has fewer vertices (the two are homotopy
// equivalent: every intersection of simplices is a simplex).
inline std::vector<long long> union_homology(const std::vector<std::uint64_t>& facets,
                                             int nverts, long long characteristic) {
    int nfacets = static_cast<int>(facets.size());
    if (nfacets == 0) // the complex {empty face} alone
        return SimplicialComplex::from_facets({0}).reduced_homology(characteristic);
    // dual cover: vertex v of the dual is a facet index, and dual facet of
    // an original vertex collects the facets containing it
    if (nfacets < nverts) {
        std::vector<std::uint64_t> dual;
        for (int v = 0; v < nverts; ++v) {
            std::uint64_t dv = 0;
            for (int f = 0; f < nfacets; ++f)
                if (facets[f] & (1ull << v)) dv |= 1ull << f;
            if (dv) dual.push_back(dv);
        }
        return SimplicialComplex::from_facets(maximal_sets(dual)).reduced_homology(characteristic);
    }
    return SimplicialComplex::from_facets(facets).reduced_homology(characteristic);
}

inline BettiTable lattice_method(const MonomialIdeal& I, long long characteristic) {
    BettiTable out;
    int r = I.count();
    for (const auto& bexp : lcm_lattice(I)) {
        Monomial b;
        b.e = bexp;
        std::vector<int> Gb;
        for (int g = 0; g < r; ++g)
            if (I.gens[g].divides(b)) Gb.push_back(g);
        // deficiency sets: for each variable of b, the generators of Gb that
        // fall short of b's exponent there; their simplices cover exactly
        // the subsets whose lcm is a proper divisor of b
        std::vector<std::uint64_t> avoid;
        for (int v = 0; v < b.nvars(); ++v) {
            if (b.e[v] == 0) continue;
            std::uint64_t a = 0;
            for (size_t gi = 0; gi < Gb.size(); ++gi)
                if (I.gens[Gb[gi]].e[v] < b.e[v]) a |= 1ull << gi;
            avoid.push_back(a);
        }
        auto facets = maximal_sets(avoid);
        // cone check: a vertex common to every facet makes the complex
        // contractible (and it covers all of Gb's subsets otherwise needed)
        if (!facets.empty()) {
            std::uint64_t common = ~0ull;
            for (auto f : facets) common &= f;
            if (common) continue;
        }
        auto h = union_homology(facets, static_cast<int>(Gb.size()), characteristic);
        int j = b.deg();
        // beta_{i,b}(I) is the reduced homology rank in dimension i-1, which
        // union_homology returns at index i
        for (size_t i = 0; i < h.size(); ++i)
            if (h[i] != 0) out.add(static_cast<int>(i), j, h[i]);
    }
    return out;
}

inline BettiTable strand_method(const MonomialIdeal& I, long long characteristic) {
    int r = I.count();
    if (r > 20) throw refused_error("strand method: too many generators");
    int nv = r ? I.gens[0].nvars() : 0;
    std::vector<std::vector<int>> subset_lcm(1u << r);
    subset_lcm[0].assign(nv, 0);
    for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
        std::uint32_t low = mask & -mask;
        int g = __builtin_ctz(mask);
        const auto& rest = subset_lcm[mask ^ low];
        std::vector<int> l(nv);
        for (int v = 0; v < nv; ++v) l[v] = std::max(rest[v], I.gens[g].e[v]);
        subset_lcm[mask] = std::move(l);
    }
    std::map<std::vector<int>, std::vector<std::uint32_t>> strands;
    for (std::uint32_t mask = 1; mask < (1u << r); ++mask)
        strands[subset_lcm[mask]].push_back(mask);

    BettiTable out;
    for (const auto& [bexp, masks] : strands) {
        int j = 0;
        for (int x : bexp) j += x;
        std::set<std::uint32_t> in_strand(masks.begin(), masks.end());
        std::vector<std::vector<std::uint32_t>> by_size(r + 1);
        for (auto m : masks) by_size[__builtin_popcount(m)].push_back(m);
        std::vector<std::map<std::uint32_t, int>> pos(r + 1);
        for (int s = 1; s <= r; ++s)
            for (size_t i = 0; i < by_size[s].size(); ++i) pos[s][by_size[s][i]] = (int)i;
        // boundary within the strand: drop one generator, keep same lcm
        std::vector<long long> rank(r + 2, 0);
        for (int s = 2; s <= r; ++s) {
            if (by_size[s].empty() || by_size[s - 1].empty()) continue;
            homology_detail::Matrix m(by_size[s].size(),
                                      std::vector<long long>(by_size[s - 1].size(), 0));
            for (size_t row = 0; row < by_size[s].size(); ++row) {
                std::uint32_t f = by_size[s][row];
                int sign = 1;
                for (std::uint32_t rem = f; rem; rem &= rem - 1) {
                    std::uint32_t sub = f & ~(rem & -rem);
                    if (in_strand.count(sub)) m[row][pos[s - 1].at(sub)] += sign;
                    sign = -sign;
                }
            }
            rank[s] = homology_detail::matrix_rank(m, characteristic);
        }
        for (int s = 1; s <= r; ++s) {
            long long h =
                static_cast<long long>(by_size[s].size()) - rank[s] - rank[s + 1];
            if (h != 0) out.add(s - 1, j, h);
        }
    }
    return out;
}

} // namespace oracle_detail

/// Graded Betti numbers (of-ideal convention) of the minimal free
/// resolution, by exact homology ranks per multidegree. Two valid methods
/// are provided and must agree: Strand works on the multigraded strands of
/// the Taylor complex over all generator subsets; Lattice walks the lcm
/// lattice and takes the homotopy-equivalent deficiency complexes instead.
inline BettiTable monomial_betti_oracle(const MonomialIdeal& I, long long characteristic = 0,
                                        int max_gens = 16,
                                        OracleMethod method = OracleMethod::Auto) {
    oracle_detail::check_characteristic(characteristic);
    if (I.count() > max_gens)
        throw refused_error("monomial_betti_oracle: " + std::to_string(I.count()) +
                            " generators exceed the bound " + std::to_string(max_gens));
    if (I.zero()) return {};
    if (method == OracleMethod::Auto)
        method = I.count() <= 10 ? OracleMethod::Strand : OracleMethod::Lattice;
    return method == OracleMethod::Strand ? oracle_detail::strand_method(I, characteristic)
                                          : oracle_detail::lattice_method(I, characteristic);
}

enum class Coincidence { Coincide, Inconclusive };

/// Combinatorial criterion for when the equal-parameter class has the same
/// graded Betti numbers for the toric ideal and its initial ideal: the
/// degree windows A_i = {(i+2)p+l : l = 1..i+1} must be pairwise disjoint,
/// or overlap only in the single degree mp+1 between the top two rows.
inline Coincidence betti_coincidence_check(int m, int p) {
    if (m < 2 || p < 1) return Coincidence::Inconclusive;
    std::vector<std::set<int>> windows;
    for (int i = 0; i + 2 <= m; ++i) {
        std::set<int> w;
        for (int l = 1; l <= i + 1; ++l) w.insert((i + 2) * p + l);
        windows.push_back(w);
    }
    bool overlap_ok = true;
    bool any_overlap = false;
    for (size_t a = 0; a < windows.size(); ++a)
        for (size_t b = a + 1; b < windows.size(); ++b) {
            std::set<int> inter;
            for (int x : windows[a])
                if (windows[b].count(x)) inter.insert(x);
            if (inter.empty()) continue;
            any_overlap = true;
            bool top_pair = (a == windows.size() - 2 && b == windows.size() - 1);
            if (!(top_pair && inter == std::set<int>{m * p + 1})) overlap_ok = false;
        }
    if (!any_overlap) return Coincidence::Coincide;                 // m <= p+2
    return overlap_ok ? Coincidence::Coincide : Coincidence::Inconclusive;
}

} // namespace edgering
