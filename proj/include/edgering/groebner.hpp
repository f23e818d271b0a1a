#pragma once

#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "edgering/errors.hpp"
#include "edgering/monomial.hpp"
#include "edgering/monomial_ideal.hpp"

namespace edgering {

/// Groebner basis of a pure-difference binomial ideal. Elements are stored
/// leading side first; with +1/-1 coefficients every S-polynomial and every
/// reduction of a binomial stays binomial, so the whole computation is
/// exponent-vector arithmetic.
struct GroebnerBasis {
    std::vector<Binomial> elements;
    bool reduced = false;
};

namespace gb_detail {

// lead-first, or nullopt for the zero binomial
inline std::optional<Binomial> orient(const Binomial& b) {
    if (b.plus == b.minus) return std::nullopt;
    return b.oriented();
}

inline std::optional<Binomial> s_pair(const Binomial& f, const Binomial& g) {
    Monomial L = lcm(f.plus, g.plus);
    Monomial a = quotient(L, g.plus) * g.minus;
    Monomial b = quotient(L, f.plus) * f.minus;
    if (a == b) return std::nullopt;
    Binomial s{a, b};
    return s.oriented();
}

// one full normal form pass: heads first, then the trailing side
inline std::optional<Binomial> reduce(Binomial b, const std::vector<Binomial>& basis) {
    for (;;) {
        bool step = false;
        for (const auto& g : basis) {
            if (!g.plus.divides(b.plus)) continue;
            Monomial repl = quotient(b.plus, g.plus) * g.minus;
            if (repl == b.minus) return std::nullopt;
            b = Binomial{repl, b.minus}.oriented();
            step = true;
            break;
        }
        if (!step) break;
    }
    for (;;) {
        bool step = false;
        for (const auto& g : basis) {
            if (!g.plus.divides(b.minus)) continue;
            Monomial repl = quotient(b.minus, g.plus) * g.minus;
            if (repl == b.plus) return std::nullopt;
            b.minus = repl; // strictly lex-smaller, so the head still leads
            step = true;
            break;
        }
        if (!step) break;
    }
    return b;
}

struct PairKey {
    int deg;
    Monomial lcm_;
    size_t i, j;
    bool operator<(const PairKey& o) const {
        if (deg != o.deg) return deg < o.deg;
        if (!(lcm_ == o.lcm_)) return lex_less(lcm_, o.lcm_);
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

inline PairKey make_key(const std::vector<Binomial>& basis, size_t i, size_t j) {
    Monomial L = lcm(basis[i].plus, basis[j].plus);
    return PairKey{L.deg(), L, i, j};
}

} // namespace gb_detail

/// Prepares input binomials: orients them, drops zeros and duplicates.
inline std::vector<Binomial> normalize_binomials(const std::vector<Binomial>& gens) {
    std::vector<Binomial> out;
    for (const auto& g : gens)
        if (auto o = gb_detail::orient(g)) out.push_back(*o);
    std::sort(out.begin(), out.end(), [](const Binomial& a, const Binomial& b) {
        if (!(a.plus == b.plus)) return canonical_less(a.plus, b.plus);
        return canonical_less(a.minus, b.minus);
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// True iff every S-polynomial of the set reduces to zero against the set
/// itself (no completion): the input is already a Groebner basis.
inline bool buchberger_criterion(const std::vector<Binomial>& gens) {
    auto basis = normalize_binomials(gens);
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) {
            if (coprime(basis[i].plus, basis[j].plus)) continue;
            auto s = gb_detail::s_pair(basis[i], basis[j]);
            if (!s) continue;
            if (gb_detail::reduce(*s, basis)) return false;
        }
    return true;
}

/// Buchberger completion with the normal selection strategy (degree of the
/// pair lcm, then lex, then indices) and the coprimality criterion, followed
/// by minimalization and tail interreduction.
inline GroebnerBasis buchberger(const std::vector<Binomial>& gens) {
    std::vector<Binomial> basis = normalize_binomials(gens);
    std::set<gb_detail::PairKey> queue;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j)
            queue.insert(gb_detail::make_key(basis, i, j));
    while (!queue.empty()) {
        auto key = *queue.begin();
        queue.erase(queue.begin());
        const Binomial &f = basis[key.i], &g = basis[key.j];
        if (coprime(f.plus, g.plus)) continue;
        auto s = gb_detail::s_pair(f, g);
        if (!s) continue;
        auto nf = gb_detail::reduce(*s, basis);
        if (!nf) continue;
        basis.push_back(*nf);
        for (size_t i = 0; i + 1 < basis.size(); ++i)
            queue.insert(gb_detail::make_key(basis, i, basis.size() - 1));
    }

    // minimal: no leading term divides another
    std::sort(basis.begin(), basis.end(), [](const Binomial& a, const Binomial& b) {
        return canonical_less(a.plus, b.plus);
    });
    std::vector<Binomial> minimal;
    for (const auto& b : basis) {
        bool redundant = false;
        for (const auto& m : minimal)
            if (m.plus.divides(b.plus)) { redundant = true; break; }
        if (!redundant) minimal.push_back(b);
    }
    // reduced: tails in normal form with respect to the rest
    GroebnerBasis out;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Binomial> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        auto nf = gb_detail::reduce(minimal[i], others);
        if (!nf) throw std::logic_error("minimal basis element reduced to zero");
        out.elements.push_back(*nf);
    }
    std::sort(out.elements.begin(), out.elements.end(),
              [](const Binomial& a, const Binomial& b) {
                  return canonical_less(a.plus, b.plus);
              });
    out.reduced = true;
    return out;
}

/// Normal form membership: the binomial reduces to zero against a Groebner
/// basis.
inline bool reduces_to_zero(const Binomial& b, const GroebnerBasis& gb) {
    auto o = gb_detail::orient(b);
    if (!o) return true;
    return !gb_detail::reduce(*o, gb.elements).has_value();
}

/// Two binomial generating sets span the same ideal (mutual reduction
/// against each other's reduced bases).
inline bool same_binomial_ideal(const std::vector<Binomial>& a,
                                const std::vector<Binomial>& b) {
    GroebnerBasis ga = buchberger(a), gbb = buchberger(b);
    for (const auto& x : a)
        if (!reduces_to_zero(x, gbb)) return false;
    for (const auto& y : b)
        if (!reduces_to_zero(y, ga)) return false;
    return true;
}

/// Minimal generators of the leading-term ideal of a basis.
inline MonomialIdeal leading_term_ideal(const GroebnerBasis& gb, int nvars) {
    std::vector<Monomial> lts;
    for (const auto& b : gb.elements) lts.push_back(b.plus);
    return minimalize(nvars, lts);
}

/// Kernel of (edge variable -> product of its endpoints), computed by a
/// Buchberger run in the combined ring with the vertex block above the edge
/// block and the restriction to edge-only elements. The edge-variable order
/// is the one carried by `labeling` (index = chain rank), so the result is a
/// reduced Groebner basis of the kernel for that lex order.
inline GroebnerBasis toric_ideal_via_elimination(
    const Graph& g, const std::vector<std::pair<int, int>>& labeling, int max_vars = 26) {
    int redges = static_cast<int>(labeling.size());
    int total = redges + g.vertex_count();
    if (total > max_vars)
        throw refused_error("toric_ideal_via_elimination: " + std::to_string(total) +
                            " variables exceed the bound " + std::to_string(max_vars));
    std::vector<Binomial> gens;
    for (int e = 0; e < redges; ++e) {
        Monomial lhs(total), rhs(total);
        lhs.mul_var(e);
        rhs.mul_var(redges + labeling[e].first);
        rhs.mul_var(redges + labeling[e].second);
        gens.push_back(Binomial{lhs, rhs});
    }
    GroebnerBasis full = buchberger(gens);
    GroebnerBasis out;
    out.reduced = true;
    auto edge_only = [redges](const Monomial& m) {
        for (int v = redges; v < m.nvars(); ++v)
            if (m.e[v] > 0) return false;
        return true;
    };
    for (const auto& b : full.elements) {
        if (!edge_only(b.plus)) continue;
        if (!edge_only(b.minus))
            throw std::logic_error("edge-led element with vertex variables in its tail");
        Binomial r;
        r.plus.e.assign(b.plus.e.begin(), b.plus.e.begin() + redges);
        r.minus.e.assign(b.minus.e.begin(), b.minus.e.begin() + redges);
        out.elements.push_back(r);
    }
    return out;
}

} // namespace edgering
