#pragma once

#include <map>
#include <string>
#include <vector>

#include "edgering/monomial.hpp"
#include "edgering/monomial_ideal.hpp"

namespace edgering {

/// Closed even walk given as a cyclic sequence of edge variables.
struct Walk {
    std::vector<int> edges;    // variable ranks, traversal order
    bool doubles_back = false; // traverses a hub-to-hub path in both directions
    int length() const { return static_cast<int>(edges.size()); }
};

/// Alternating product difference of a closed even walk: odd positions minus
/// even positions (1-indexed along the traversal).
inline Binomial walk_binomial(const Walk& w, int nvars) {
    Monomial odd(nvars), even(nvars);
    for (int i = 0; i < w.length(); ++i)
        (i % 2 == 0 ? odd : even).mul_var(w.edges[i]);
    return Binomial{odd, even};
}

/// Checks that consecutive edges share the traversal vertex, the walk closes
/// up, and its length is even.
inline bool validate_walk(const Walk& w, const VarTable& t, const CompactClass& c,
                          const Graph& g) {
    if (w.length() % 2 != 0 || w.length() < 4) return false;
    auto lab = labeling_on(t, c, g);
    auto e0 = lab[w.edges[0]];
    auto elast = lab[w.edges.back()];
    // the start vertex is shared by the last and first edge; try both ends
    for (int start : {e0.first, e0.second}) {
        if (start != elast.first && start != elast.second) continue;
        int cur = start;
        bool ok = true;
        for (int r : w.edges) {
            auto [a, b] = lab[r];
            if (cur == a) cur = b;
            else if (cur == b) cur = a;
            else { ok = false; break; }
        }
        if (ok && cur == start) return true;
    }
    return false;
}

namespace toric_detail {

inline std::vector<int> run(const VarTable& t, const std::string& fam, int i, int len) {
    std::vector<int> out;
    for (int j = 1; j <= len; ++j) out.push_back(t.rank(detail::idx2(fam, i, j)));
    return out;
}

inline std::vector<int> xpath(const VarTable& t, int s, bool reversed) {
    std::vector<int> out;
    for (int l = 1; l <= s; ++l) out.push_back(t.rank(detail::idx1("x", l)));
    if (reversed) std::reverse(out.begin(), out.end());
    return out;
}

inline void append(std::vector<int>& into, const std::vector<int>& part) {
    into.insert(into.end(), part.begin(), part.end());
}

} // namespace toric_detail

/// The primed and double-primed products: e'[i] multiplies the odd-position
/// edges of branch i (degree p_i + 1), e''[i] the even-position ones
/// (degree p_i); likewise f/g, and x', x'' along the Type2 path (degree s/2).
/// For Type2 with s = 0 the x' and x'' entries are absent.
inline std::map<std::string, Monomial> aux_monomials(const CompactClass& c,
                                                     const VarTable& t) {
    if (c.kind == CompactKind::Type0)
        throw std::invalid_argument("aux_monomials: single-cycle class has none");
    std::map<std::string, Monomial> out;
    auto block = [&](const std::string& fam, const std::string& prime, int i, int pi) {
        Monomial mo(t.size()), me(t.size());
        for (int j = 1; j <= 2 * pi + 1; ++j) {
            int rank = t.rank(detail::idx2(fam, i, j));
            (j % 2 == 1 ? mo : me).mul_var(rank);
        }
        out[prime + "'[" + std::to_string(i) + "]"] = mo;
        out[prime + "''[" + std::to_string(i) + "]"] = me;
    };
    for (int i = 1; i <= c.m(); ++i) block("e", "e", i, c.p[i - 1]);
    if (c.kind == CompactKind::Type2 || c.kind == CompactKind::Type3)
        for (int i = 1; i <= c.n(); ++i) block("f", "f", i, c.q[i - 1]);
    if (c.kind == CompactKind::Type3)
        for (int i = 1; i <= c.k(); ++i) block("g", "g", i, c.r[i - 1]);
    if (c.kind == CompactKind::Type2 && c.s > 0) {
        Monomial xo(t.size()), xe(t.size());
        for (int l = 1; l <= c.s; ++l)
            (l % 2 == 1 ? xo : xe).mul_var(t.rank(detail::idx1("x", l)));
        out["x'"] = xo;
        out["x''"] = xe;
    }
    return out;
}

/// The family-specific primitive even closed walks of each type. Type0 has
/// none (a lone odd cycle admits no even closed walk).
inline std::vector<Walk> primitive_even_closed_walks(const CompactClass& c,
                                                     const VarTable& t) {
    using namespace toric_detail;
    if (c.kind == CompactKind::Type0)
        throw std::invalid_argument("primitive_even_closed_walks: single-cycle class");
    std::vector<Walk> out;
    auto erun = [&](int i) { return run(t, "e", i, 2 * c.p[i - 1] + 1); };
    auto frun = [&](int i) { return run(t, "f", i, 2 * c.q[i - 1] + 1); };
    auto grun = [&](int i) { return run(t, "g", i, 2 * c.r[i - 1] + 1); };
    auto pair_family = [&out](auto&& runf, int count) {
        for (int i = 1; i <= count; ++i)
            for (int j = i + 1; j <= count; ++j) {
                Walk w;
                append(w.edges, runf(i));
                append(w.edges, runf(j));
                out.push_back(w);
            }
    };

    pair_family(erun, c.m());
    if (c.kind == CompactKind::Type1) return out;

    if (c.kind == CompactKind::Type2) {
        pair_family(frun, c.n());
        int x = t.rank("x");
        for (int i = 1; i <= c.m(); ++i)
            for (int j = 1; j <= c.n(); ++j) {
                Walk w;
                append(w.edges, erun(i));
                w.edges.push_back(x);
                append(w.edges, frun(j));
                w.edges.push_back(x);
                out.push_back(w);
            }
        if (c.s > 0) {
            for (int i = 1; i <= c.m(); ++i)
                for (int j = 1; j <= c.n(); ++j) {
                    Walk w;
                    w.doubles_back = true;
                    append(w.edges, erun(i));
                    append(w.edges, xpath(t, c.s, false));
                    append(w.edges, frun(j));
                    append(w.edges, xpath(t, c.s, true));
                    out.push_back(w);
                }
            for (int i = 1; i <= c.m(); ++i) {
                Walk w;
                append(w.edges, erun(i));
                append(w.edges, xpath(t, c.s, false));
                w.edges.push_back(x);
                out.push_back(w);
            }
            for (int i = 1; i <= c.n(); ++i) {
                Walk w;
                append(w.edges, frun(i));
                w.edges.push_back(x);
                append(w.edges, xpath(t, c.s, false));
                out.push_back(w);
            }
        }
        return out;
    }

    // Type3
    pair_family(frun, c.n());
    pair_family(grun, c.k());
    int x = t.rank("x"), y = t.rank("y"), z = t.rank("z");
    auto hub_pair = [&](auto&& arun, int ac, auto&& brun, int bc, int link) {
        for (int i = 1; i <= ac; ++i)
            for (int j = 1; j <= bc; ++j) {
                Walk w;
                append(w.edges, arun(i));
                w.edges.push_back(link);
                append(w.edges, brun(j));
                w.edges.push_back(link);
                out.push_back(w);
            }
    };
    auto two_hub_path = [&](auto&& arun, int ac, auto&& brun, int bc, int l1, int l2) {
        // a-cycle, then the two-edge route to the other hub and back
        for (int i = 1; i <= ac; ++i)
            for (int j = 1; j <= bc; ++j) {
                Walk w;
                w.doubles_back = true;
                append(w.edges, arun(i));
                w.edges.push_back(l1);
                w.edges.push_back(l2);
                append(w.edges, brun(j));
                w.edges.push_back(l2);
                w.edges.push_back(l1);
                out.push_back(w);
            }
    };
    auto triangle = [&](auto&& arun, int ac, int l1, int l2, int l3) {
        for (int i = 1; i <= ac; ++i) {
            Walk w;
            append(w.edges, arun(i));
            w.edges.push_back(l1);
            w.edges.push_back(l2);
            w.edges.push_back(l3);
            out.push_back(w);
        }
    };
    hub_pair(erun, c.m(), frun, c.n(), x);
    hub_pair(frun, c.n(), grun, c.k(), y);
    hub_pair(grun, c.k(), erun, c.m(), z);
    two_hub_path(erun, c.m(), frun, c.n(), z, y);
    two_hub_path(frun, c.n(), grun, c.k(), x, z);
    two_hub_path(grun, c.k(), erun, c.m(), y, x);
    triangle(erun, c.m(), z, y, x);
    triangle(frun, c.n(), x, z, y);
    triangle(grun, c.k(), y, x, z);
    return out;
}

/// The explicit universal Groebner bases, written with the sign convention
/// of the defining family lists. Empty for Type0.
inline std::vector<Binomial> universal_groebner_basis(const CompactClass& c,
                                                      const VarTable& t) {
    if (c.kind == CompactKind::Type0) return {};
    auto aux = aux_monomials(c, t);
    auto A = [&aux](const std::string& n) -> const Monomial& { return aux.at(n); };
    auto ep = [&](int i) { return A("e'[" + std::to_string(i) + "]"); };
    auto epp = [&](int i) { return A("e''[" + std::to_string(i) + "]"); };
    auto fp = [&](int i) { return A("f'[" + std::to_string(i) + "]"); };
    auto fpp = [&](int i) { return A("f''[" + std::to_string(i) + "]"); };
    auto gp = [&](int i) { return A("g'[" + std::to_string(i) + "]"); };
    auto gpp = [&](int i) { return A("g''[" + std::to_string(i) + "]"); };

    std::vector<Binomial> out;
    auto pair_family = [&out](auto&& prime, auto&& pprime, int count) {
        for (int i = 1; i <= count; ++i)
            for (int j = i + 1; j <= count; ++j)
                out.push_back({prime(i) * pprime(j), pprime(i) * prime(j)});
    };

    pair_family(ep, epp, c.m());
    if (c.kind == CompactKind::Type1) return out;

    if (c.kind == CompactKind::Type2) {
        pair_family(fp, fpp, c.n());
        Monomial x = Monomial(t.size()).mul_var(t.rank("x"));
        Monomial x2 = x * x;
        for (int i = 1; i <= c.m(); ++i)
            for (int j = 1; j <= c.n(); ++j)
                out.push_back({ep(i) * fp(j), epp(i) * x2 * fpp(j)});
        if (c.s > 0) {
            const Monomial& xp = A("x'");
            const Monomial& xpp = A("x''");
            for (int i = 1; i <= c.m(); ++i)
                for (int j = 1; j <= c.n(); ++j)
                    out.push_back({ep(i) * (xpp * xpp) * fpp(j), epp(i) * (xp * xp) * fp(j)});
            for (int i = 1; i <= c.m(); ++i)
                out.push_back({ep(i) * xpp, epp(i) * xp * x});
            for (int i = 1; i <= c.n(); ++i)
                out.push_back({fp(i) * xp, fpp(i) * xpp * x});
        }
        return out;
    }

    // Type3
    pair_family(fp, fpp, c.n());
    pair_family(gp, gpp, c.k());
    Monomial x = Monomial(t.size()).mul_var(t.rank("x"));
    Monomial y = Monomial(t.size()).mul_var(t.rank("y"));
    Monomial z = Monomial(t.size()).mul_var(t.rank("z"));
    Monomial x2 = x * x, y2 = y * y, z2 = z * z;
    for (int i = 1; i <= c.m(); ++i)
        for (int j = 1; j <= c.n(); ++j) out.push_back({ep(i) * fp(j), epp(i) * x2 * fpp(j)});
    for (int i = 1; i <= c.n(); ++i)
        for (int j = 1; j <= c.k(); ++j) out.push_back({fp(i) * gp(j), fpp(i) * y2 * gpp(j)});
    for (int i = 1; i <= c.k(); ++i)
        for (int j = 1; j <= c.m(); ++j) out.push_back({gp(i) * ep(j), gpp(i) * z2 * epp(j)});
    for (int i = 1; i <= c.m(); ++i)
        for (int j = 1; j <= c.n(); ++j)
            out.push_back({ep(i) * y2 * fpp(j), epp(i) * z2 * fp(j)});
    for (int i = 1; i <= c.n(); ++i)
        for (int j = 1; j <= c.k(); ++j)
            out.push_back({fp(i) * z2 * gpp(j), fpp(i) * x2 * gp(j)});
    for (int i = 1; i <= c.k(); ++i)
        for (int j = 1; j <= c.m(); ++j)
            out.push_back({gp(i) * x2 * epp(j), gpp(i) * y2 * ep(j)});
    for (int i = 1; i <= c.m(); ++i) out.push_back({ep(i) * y, epp(i) * z * x});
    for (int i = 1; i <= c.n(); ++i) out.push_back({fp(i) * z, fpp(i) * x * y});
    for (int i = 1; i <= c.k(); ++i) out.push_back({gp(i) * x, gpp(i) * y * z});
    return out;
}

/// Lex-larger side of a binomial over the class's variable chain.
inline Monomial leading_term(const Binomial& b) { return b.lead(); }

/// The closed-form minimal generators of the initial ideal under the class's
/// lex chain:
///   Type1  e''[i] e'[j]                    for i < j
///   Type2  those, f''f', e'f', and for s > 0 also e'x'' and f'x'
///   Type3  the three pair families, e'f', f'g', g'e', e'y, f'z, g'x
/// Type0 yields the zero ideal.
inline MonomialIdeal initial_ideal(const CompactClass& c, const VarTable& t) {
    if (c.kind == CompactKind::Type0) return MonomialIdeal{t.size(), {}};
    auto aux = aux_monomials(c, t);
    auto prime = [&aux](const std::string& f, int i) -> const Monomial& {
        return aux.at(f + "'[" + std::to_string(i) + "]");
    };
    auto pprime = [&aux](const std::string& f, int i) -> const Monomial& {
        return aux.at(f + "''[" + std::to_string(i) + "]");
    };
    std::vector<Monomial> gens;
    auto pair_family = [&](const std::string& f, int count) {
        for (int i = 1; i <= count; ++i)
            for (int j = i + 1; j <= count; ++j)
                gens.push_back(pprime(f, i) * prime(f, j));
    };
    auto cross_family = [&](const std::string& f1, int c1, const std::string& f2, int c2) {
        for (int i = 1; i <= c1; ++i)
            for (int j = 1; j <= c2; ++j) gens.push_back(prime(f1, i) * prime(f2, j));
    };

    pair_family("e", c.m());
    if (c.kind == CompactKind::Type2) {
        pair_family("f", c.n());
        cross_family("e", c.m(), "f", c.n());
        if (c.s > 0) {
            for (int i = 1; i <= c.m(); ++i) gens.push_back(prime("e", i) * aux.at("x''"));
            for (int i = 1; i <= c.n(); ++i) gens.push_back(prime("f", i) * aux.at("x'"));
        }
    } else if (c.kind == CompactKind::Type3) {
        pair_family("f", c.n());
        pair_family("g", c.k());
        cross_family("e", c.m(), "f", c.n());
        cross_family("f", c.n(), "g", c.k());
        cross_family("g", c.k(), "e", c.m());
        Monomial x = Monomial(t.size()).mul_var(t.rank("x"));
        Monomial y = Monomial(t.size()).mul_var(t.rank("y"));
        Monomial z = Monomial(t.size()).mul_var(t.rank("z"));
        for (int i = 1; i <= c.m(); ++i) gens.push_back(prime("e", i) * y);
        for (int i = 1; i <= c.n(); ++i) gens.push_back(prime("f", i) * z);
        for (int i = 1; i <= c.k(); ++i) gens.push_back(prime("g", i) * x);
    }
    MonomialIdeal I = minimalize(t.size(), gens);
    // the written families are already minimal
    if (I.count() != static_cast<int>(gens.size()))
        throw std::logic_error("initial ideal families were not minimal");
    return I;
}

/// Closed-form count of initial-ideal generators for the type.
inline long long initial_ideal_size(const CompactClass& c) {
    auto choose2 = [](long long n) { return n * (n - 1) / 2; };
    long long m = c.m(), n = c.n(), k = c.k();
    switch (c.kind) {
        case CompactKind::Type0: return 0;
        case CompactKind::Type1: return choose2(m);
        case CompactKind::Type2:
            return choose2(m) + choose2(n) + m * n + (c.s > 0 ? m + n : 0);
        case CompactKind::Type3:
            return choose2(m) + choose2(n) + choose2(k) + m * n + n * k + k * m + m + n + k;
    }
    return 0;
}

/// True iff both sides have the same image under edge -> product of its two
/// endpoint vertex variables: binomial membership in the defining ideal.
inline bool substitution_check(const Binomial& b, const Graph& g,
                               const std::vector<std::pair<int, int>>& labeling) {
    if (b.plus.nvars() > static_cast<int>(labeling.size()))
        throw std::invalid_argument("substitution_check: unlabeled variable");
    std::vector<long long> img(g.vertex_count(), 0);
    auto apply = [&](const Monomial& m, long long sign) {
        for (int v = 0; v < m.nvars(); ++v) {
            if (m.e[v] == 0) continue;
            img[labeling[v].first] += sign * m.e[v];
            img[labeling[v].second] += sign * m.e[v];
        }
    };
    apply(b.plus, +1);
    apply(b.minus, -1);
    for (long long x : img)
        if (x != 0) return false;
    return true;
}

} // namespace edgering
