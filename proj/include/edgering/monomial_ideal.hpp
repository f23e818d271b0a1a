#pragma once

#include <map>
#include <vector>

#include <json.hpp>

#include "edgering/errors.hpp"
#include "edgering/monomial.hpp"

namespace edgering {

/// Monomial ideal held by its minimal generators, canonically sorted
/// (degree, then lex). Construct through minimalize().
struct MonomialIdeal {
    int nvars = 0;
    std::vector<Monomial> gens;

    bool zero() const { return gens.empty(); }
    int count() const { return static_cast<int>(gens.size()); }

    bool contains_monomial(const Monomial& m) const {
        for (const auto& g : gens)
            if (g.divides(m)) return true;
        return false;
    }

    bool operator==(const MonomialIdeal& o) const {
        return nvars == o.nvars && gens == o.gens;
    }
};

/// Divisibility-minimal subset of `gens`, deduplicated and sorted.
inline MonomialIdeal minimalize(int nvars, std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), canonical_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> keep;
    for (const auto& g : gens) {
        bool divisible = false;
        for (const auto& k : keep)
            if (k.divides(g)) { divisible = true; break; }
        if (!divisible) keep.push_back(g); // earlier gens have lower degree
    }
    return MonomialIdeal{nvars, std::move(keep)};
}

/// Intersection via pairwise lcms of the generators.
inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.nvars != b.nvars)
        throw std::invalid_argument("intersect: different variable universes");
    std::vector<Monomial> gens;
    for (const auto& u : a.gens)
        for (const auto& v : b.gens) gens.push_back(lcm(u, v));
    return minimalize(a.nvars, std::move(gens));
}

inline MonomialIdeal multiply(const Monomial& w, const MonomialIdeal& I) {
    std::vector<Monomial> gens;
    for (const auto& g : I.gens) gens.push_back(w * g);
    return minimalize(I.nvars, std::move(gens));
}

/// Graded Betti numbers as a finitely supported map (i, j) -> count.
/// The convention flag records whether indices refer to the ideal or to the
/// quotient ring (the latter is shifted by one in i).
struct BettiTable {
    enum class Convention { Ideal, Quotient };
    Convention conv = Convention::Ideal;
    std::map<std::pair<int, int>, long long> entries;

    void add(int i, int j, long long c) {
        if (c == 0) return;
        auto it = entries.find({i, j});
        if (it == entries.end()) entries[{i, j}] = c;
        else if ((it->second += c) == 0) entries.erase(it);
    }

    long long get(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }

    long long total(int i) const {
        long long sum = 0;
        for (const auto& [ij, c] : entries)
            if (ij.first == i) sum += c;
        return sum;
    }

    /// max i with a nonzero row; -1 for the empty table.
    int pdim() const {
        int m = -1;
        for (const auto& [ij, c] : entries) m = std::max(m, ij.first);
        return m;
    }

    /// max j - i over nonzero entries; -1 for the empty table.
    int regularity() const {
        int m = -1;
        for (const auto& [ij, c] : entries) m = std::max(m, ij.second - ij.first);
        return m;
    }

    BettiTable shifted(int di, int dj) const {
        BettiTable out;
        out.conv = conv;
        for (const auto& [ij, c] : entries) out.add(ij.first + di, ij.second + dj, c);
        return out;
    }

    BettiTable& operator+=(const BettiTable& o) {
        for (const auto& [ij, c] : o.entries) add(ij.first, ij.second, c);
        return *this;
    }

    /// Same table in quotient indexing: beta_{i+1,j}(R/I) = beta_{i,j}(I),
    /// plus the rank-one free cover in homological degree 0.
    BettiTable to_quotient() const {
        BettiTable out = shifted(1, 0);
        out.conv = Convention::Quotient;
        out.add(0, 0, 1);
        return out;
    }

    bool operator==(const BettiTable& o) const {
        return conv == o.conv && entries == o.entries;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["convention"] = conv == Convention::Ideal ? "ideal" : "quotient";
        j["entries"] = nlohmann::json::array();
        for (const auto& [ij, c] : entries)
            j["entries"].push_back({{"i", ij.first}, {"j", ij.second}, {"b", c}});
        return j;
    }
};

/// Betti table of an ideal generated by a regular sequence with the given
/// degrees: beta_{i,j} counts the (i+1)-subsets with degree sum j.
inline BettiTable koszul_betti(const std::vector<int>& degrees) {
    BettiTable t;
    // subset-count DP over (size, degree sum)
    std::map<std::pair<int, int>, long long> counts{{{0, 0}, 1}};
    for (int d : degrees) {
        auto next = counts;
        for (const auto& [kj, c] : counts)
            next[{kj.first + 1, kj.second + d}] += c;
        counts = std::move(next);
    }
    for (const auto& [kj, c] : counts)
        if (kj.first >= 1) t.add(kj.first - 1, kj.second, c);
    return t;
}

namespace detail {

inline void hitting_dfs(const std::vector<std::vector<int>>& supports,
                        std::vector<bool>& hit_gen, std::vector<bool>& chosen,
                        int chosen_count, int& best) {
    if (chosen_count >= best) return;
    int unhit = -1;
    for (size_t i = 0; i < supports.size(); ++i)
        if (!hit_gen[i]) { unhit = static_cast<int>(i); break; }
    if (unhit < 0) {
        best = chosen_count;
        return;
    }
    for (int v : supports[unhit]) {
        if (chosen[v]) continue;
        chosen[v] = true;
        std::vector<size_t> newly;
        for (size_t i = 0; i < supports.size(); ++i) {
            if (hit_gen[i]) continue;
            for (int u : supports[i])
                if (u == v) { hit_gen[i] = true; newly.push_back(i); break; }
        }
        hitting_dfs(supports, hit_gen, chosen, chosen_count + 1, best);
        for (size_t i : newly) hit_gen[i] = false;
        chosen[v] = false;
    }
}

} // namespace detail

/// Krull dimension of the quotient by a squarefree monomial ideal: the
/// largest variable subset containing no generator's support, computed as
/// nvars minus a minimum transversal of the supports (exact branch and
/// bound).
inline int squarefree_quotient_dimension(const MonomialIdeal& I, int nvars) {
    for (const auto& g : I.gens)
        if (!g.is_squarefree())
            throw std::invalid_argument("squarefree_quotient_dimension: generator not squarefree");
    if (I.zero()) return nvars;
    std::vector<std::vector<int>> supports;
    for (const auto& g : I.gens) supports.push_back(g.support());
    std::vector<bool> hit(supports.size(), false), chosen(nvars, false);
    int best = static_cast<int>(supports.size()); // hit one variable per generator
    detail::hitting_dfs(supports, hit, chosen, 0, best);
    return nvars - best;
}

} // namespace edgering
