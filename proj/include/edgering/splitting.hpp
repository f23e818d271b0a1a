#pragma once

#include <functional>
#include <optional>

#include "edgering/monomial_ideal.hpp"
#include "edgering/toric.hpp"

namespace edgering {

/// One peel step J = left + pivot * H with its splitting function. The map
/// lists every minimal generator v of the intersection of left with pivot*H
/// (which equals pivot * left here) together with its images (phi(v), psi(v)).
struct SplitStructure {
    MonomialIdeal J, left, H;
    Monomial pivot;
    struct MapEntry {
        Monomial v, phi, psi;
    };
    std::vector<MapEntry> map;
    std::string step_name;
};

enum class VerifyStatus { Pass, Fail, Unverified };

namespace splitting_detail {

// Monomial arrays of the class; index 0 of eD doubles as the pseudo
// double-prime entry (x'' for Type2, y for the Type3 base) once the
// recursion reaches the two-block shape.
struct Ctx {
    int nvars = 0;
    std::vector<Monomial> eP, eD, fP, fD, gP, gD; // 1-based
    std::optional<Monomial> x, y, z, xP, xD;
};

inline Ctx make_ctx(const CompactClass& c, const VarTable& t) {
    Ctx ctx;
    ctx.nvars = t.size();
    auto aux = aux_monomials(c, t);
    auto grab = [&aux](std::vector<Monomial>& P, std::vector<Monomial>& D,
                       const std::string& f, int count) {
        P.assign(1, Monomial{});
        D.assign(1, Monomial{});
        for (int i = 1; i <= count; ++i) {
            P.push_back(aux.at(f + "'[" + std::to_string(i) + "]"));
            D.push_back(aux.at(f + "''[" + std::to_string(i) + "]"));
        }
    };
    grab(ctx.eP, ctx.eD, "e", c.m());
    if (c.kind != CompactKind::Type1) grab(ctx.fP, ctx.fD, "f", c.n());
    if (c.kind == CompactKind::Type3) grab(ctx.gP, ctx.gD, "g", c.k());
    if (c.kind != CompactKind::Type1)
        ctx.x = Monomial(t.size()).mul_var(t.rank("x"));
    if (c.kind == CompactKind::Type3) {
        ctx.y = Monomial(t.size()).mul_var(t.rank("y"));
        ctx.z = Monomial(t.size()).mul_var(t.rank("z"));
        // the k = 0 base is the s = 2 two-hub ideal with x' = z, x'' = y
        ctx.xP = ctx.z;
        ctx.xD = ctx.y;
    } else if (c.kind == CompactKind::Type2 && c.s > 0) {
        ctx.xP = aux.at("x'");
        ctx.xD = aux.at("x''");
    }
    return ctx;
}

// Tagged generator: family discriminant plus indices, used to route the
// splitting function.
struct TG {
    enum Fam { EEe, EEf, EEg, EF, FG, GE, EY, FZ, GX, EX, FX, G1 };
    Fam fam;
    int i = 0, j = 0;
    Monomial m;
};

inline void pair_gens(std::vector<TG>& out, TG::Fam fam, const std::vector<Monomial>& P,
                      const std::vector<Monomial>& D, int count) {
    for (int i = 1; i <= count; ++i)
        for (int j = i + 1; j <= count; ++j)
            out.push_back(TG{fam, i, j, D[i] * P[j]});
}

// generalized two-block ideal {D[a] P[b] : lo <= a < b <= hi} where index 0,
// when present, carries only a double-prime monomial
inline std::vector<TG> gens_g1(const Ctx& ctx, bool with_zero, int top) {
    std::vector<TG> out;
    int lo = with_zero ? 0 : 1;
    for (int a = lo; a <= top; ++a)
        for (int b = std::max(a + 1, 1); b <= top; ++b) {
            const Monomial& Da = (a == 0) ? *ctx.xD : ctx.eD[a];
            out.push_back(TG{TG::G1, a, b, Da * ctx.eP[b]});
        }
    return out;
}

// two-hub ideal with nn of the f-branches, plus the path families when the
// context carries x', x''
inline std::vector<TG> gens_t2(const Ctx& ctx, int m, int nn) {
    std::vector<TG> out;
    pair_gens(out, TG::EEe, ctx.eP, ctx.eD, m);
    pair_gens(out, TG::EEf, ctx.fP, ctx.fD, nn);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= nn; ++j) out.push_back(TG{TG::EF, i, j, ctx.eP[i] * ctx.fP[j]});
    if (ctx.xD)
        for (int i = 1; i <= m; ++i) out.push_back(TG{TG::EX, i, 0, ctx.eP[i] * *ctx.xD});
    if (ctx.xP)
        for (int j = 1; j <= nn; ++j) out.push_back(TG{TG::FX, j, 0, ctx.fP[j] * *ctx.xP});
    return out;
}

// three-hub ideal with kk of the g-branches
inline std::vector<TG> gens_t3(const Ctx& ctx, int m, int n, int kk) {
    std::vector<TG> out;
    pair_gens(out, TG::EEe, ctx.eP, ctx.eD, m);
    pair_gens(out, TG::EEf, ctx.fP, ctx.fD, n);
    pair_gens(out, TG::EEg, ctx.gP, ctx.gD, kk);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) out.push_back(TG{TG::EF, i, j, ctx.eP[i] * ctx.fP[j]});
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= kk; ++j) out.push_back(TG{TG::FG, i, j, ctx.fP[i] * ctx.gP[j]});
    for (int i = 1; i <= kk; ++i)
        for (int j = 1; j <= m; ++j) out.push_back(TG{TG::GE, i, j, ctx.gP[i] * ctx.eP[j]});
    for (int i = 1; i <= m; ++i) out.push_back(TG{TG::EY, i, 0, ctx.eP[i] * *ctx.y});
    for (int i = 1; i <= n; ++i) out.push_back(TG{TG::FZ, i, 0, ctx.fP[i] * *ctx.z});
    for (int i = 1; i <= kk; ++i) out.push_back(TG{TG::GX, i, 0, ctx.gP[i] * *ctx.x});
    return out;
}

inline MonomialIdeal ideal_of(int nvars, const std::vector<TG>& tags) {
    std::vector<Monomial> gens;
    for (const auto& t : tags) gens.push_back(t.m);
    MonomialIdeal I = minimalize(nvars, gens);
    if (I.count() != static_cast<int>(tags.size()))
        throw std::logic_error("tagged generators were not minimal");
    return I;
}

inline SplitStructure make_step(int nvars, const std::vector<TG>& left_tags,
                                const Monomial& pivot, const std::vector<Monomial>& h_gens,
                                const std::function<Monomial(const TG&)>& psi_h,
                                std::string name) {
    SplitStructure s;
    s.left = ideal_of(nvars, left_tags);
    s.H = minimalize(nvars, h_gens);
    s.pivot = pivot;
    std::vector<Monomial> all = s.left.gens;
    for (const auto& h : s.H.gens) all.push_back(pivot * h);
    s.J = minimalize(nvars, all);
    for (const auto& u : left_tags) {
        SplitStructure::MapEntry e;
        e.v = pivot * u.m;
        e.phi = u.m;
        e.psi = pivot * psi_h(u);
        s.map.push_back(e);
    }
    s.step_name = std::move(name);
    return s;
}

} // namespace splitting_detail

/// The full peel sequence of the class's initial ideal, outermost step
/// first. Each Type3 step removes the top g-branch, each two-hub step the
/// top f-branch, and the two-block steps the top e-branch, down to a base
/// ideal with at most one generator.
inline std::vector<SplitStructure> split_chain(const CompactClass& c, const VarTable& t) {
    using namespace splitting_detail;
    if (c.kind == CompactKind::Type0)
        throw std::invalid_argument("split_chain: zero ideal has no splitting");
    Ctx ctx = make_ctx(c, t);
    std::vector<SplitStructure> chain;
    int m = c.m(), n = c.n(), k = c.k();

    if (c.kind == CompactKind::Type3) {
        for (int kk = k; kk >= 1; --kk) {
            std::vector<Monomial> h{*ctx.x};
            for (int i = 1; i <= m; ++i) h.push_back(ctx.eP[i]);
            for (int i = 1; i <= n; ++i) h.push_back(ctx.fP[i]);
            for (int i = 1; i < kk; ++i) h.push_back(ctx.gD[i]);
            auto psi = [&ctx, kk](const TG& u) -> Monomial {
                switch (u.fam) {
                    case TG::EEe: return ctx.eP[u.j];
                    case TG::EY: return ctx.eP[u.i];
                    case TG::EF: return ctx.eP[u.i];
                    case TG::EEf: return ctx.fP[u.j];
                    case TG::FZ: return ctx.fP[u.i];
                    case TG::FG: return ctx.fP[u.i];
                    case TG::EEg: return ctx.gD[u.i];
                    case TG::GX: return *ctx.x;
                    case TG::GE: return ctx.eP[u.j];
                    default: throw std::logic_error("bad family in three-hub step");
                }
            };
            chain.push_back(make_step(ctx.nvars, gens_t3(ctx, m, n, kk - 1), ctx.gP[kk], h,
                                      psi, "peel g'[" + std::to_string(kk) + "]"));
        }
    }

    bool two_hub = c.kind == CompactKind::Type3 || c.kind == CompactKind::Type2;
    if (two_hub) {
        for (int nn = n; nn >= 1; --nn) {
            std::vector<Monomial> h;
            for (int i = 1; i <= m; ++i) h.push_back(ctx.eP[i]);
            for (int i = 1; i < nn; ++i) h.push_back(ctx.fD[i]);
            if (ctx.xP) h.push_back(*ctx.xP);
            auto psi = [&ctx](const TG& u) -> Monomial {
                switch (u.fam) {
                    case TG::EEe: return ctx.eP[u.j];
                    case TG::EEf: return ctx.fD[u.i];
                    case TG::EF: return ctx.eP[u.i];
                    case TG::EX: return ctx.eP[u.i];
                    case TG::FX: return *ctx.xP;
                    case TG::G1: return ctx.eP[u.j]; // two-block form of EE and EX
                    default: throw std::logic_error("bad family in two-hub step");
                }
            };
            auto left = (nn > 1) ? gens_t2(ctx, m, nn - 1)
                                 : gens_g1(ctx, ctx.xD.has_value(), m);
            chain.push_back(make_step(ctx.nvars, left, ctx.fP[nn], h, psi,
                                      "peel f'[" + std::to_string(nn) + "]"));
        }
    }

    // two-block tail: {D[a] P[b]}, optionally with the pseudo index 0
    bool with_zero = two_hub && ctx.xD.has_value();
    int low_count = with_zero ? 2 : 3; // peel while more than two indices remain
    for (int T = m; T >= low_count; --T) {
        std::vector<Monomial> h;
        if (with_zero) h.push_back(*ctx.xD);
        for (int a = 1; a < T; ++a) h.push_back(ctx.eD[a]);
        auto psi = [&ctx](const TG& u) -> Monomial {
            if (u.fam != TG::G1) throw std::logic_error("bad family in two-block step");
            return u.i == 0 ? *ctx.xD : ctx.eD[u.i];
        };
        chain.push_back(make_step(ctx.nvars, gens_g1(ctx, with_zero, T - 1), ctx.eP[T], h,
                                  psi, "peel e'[" + std::to_string(T) + "]"));
    }
    return chain;
}

/// First recursion step of the class. Undersized parameters (Type1 with
/// m = 2, Type0) admit no step and are rejected.
inline SplitStructure ek_split(const CompactClass& c, const VarTable& t) {
    if (c.kind == CompactKind::Type1 && c.m() < 3)
        throw std::invalid_argument("ek_split: two-cycle class has a principal ideal");
    auto chain = split_chain(c, t); // throws for Type0
    if (chain.empty()) throw std::invalid_argument("ek_split: no peel step");
    return chain.front();
}

/// Exhaustive check of the splitting conditions: the generator sets are a
/// disjoint union, lcm(phi(v), psi(v)) = v for every mapped generator, and
/// for every nonempty subset S the lcms of phi(S) and psi(S) strictly divide
/// lcm(S). Subsets are enumerated only up to the cutoff; larger instances
/// report Unverified rather than passing silently.
inline VerifyStatus verify_ek_splitting(const SplitStructure& s, int subset_cutoff = 15) {
    // disjoint union of the generator sets
    std::vector<Monomial> uni = s.left.gens;
    for (const auto& h : s.H.gens) uni.push_back(s.pivot * h);
    std::sort(uni.begin(), uni.end(), canonical_less);
    if (std::adjacent_find(uni.begin(), uni.end()) != uni.end()) return VerifyStatus::Fail;
    if (!(minimalize(s.J.nvars, uni) == s.J)) return VerifyStatus::Fail;
    if (static_cast<int>(uni.size()) != s.J.count()) return VerifyStatus::Fail;

    // the map covers G(left cap pivot*H) exactly
    MonomialIdeal inter = intersect(s.left, multiply(s.pivot, s.H));
    std::vector<Monomial> mapped;
    for (const auto& e : s.map) mapped.push_back(e.v);
    std::sort(mapped.begin(), mapped.end(), canonical_less);
    if (!(minimalize(inter.nvars, mapped).gens == inter.gens) ||
        mapped.size() != inter.gens.size())
        return VerifyStatus::Fail;

    auto in_gens = [](const Monomial& m, const std::vector<Monomial>& gens) {
        return std::find(gens.begin(), gens.end(), m) != gens.end();
    };
    std::vector<Monomial> wh_gens;
    for (const auto& h : s.H.gens) wh_gens.push_back(s.pivot * h);
    for (const auto& e : s.map) {
        if (!in_gens(e.phi, s.left.gens) || !in_gens(e.psi, wh_gens)) return VerifyStatus::Fail;
        if (lcm(e.phi, e.psi) != e.v) return VerifyStatus::Fail;
    }

    int r = static_cast<int>(s.map.size());
    if (r > subset_cutoff) return VerifyStatus::Unverified;
    auto strictly_divides = [](const Monomial& a, const Monomial& b) {
        return a.divides(b) && a != b;
    };
    for (unsigned mask = 1; mask < (1u << r); ++mask) {
        Monomial l(s.J.nvars), lphi(s.J.nvars), lpsi(s.J.nvars);
        for (int i = 0; i < r; ++i) {
            if (!(mask & (1u << i))) continue;
            l = lcm(l, s.map[i].v);
            lphi = lcm(lphi, s.map[i].phi);
            lpsi = lcm(lpsi, s.map[i].psi);
        }
        if (!strictly_divides(lphi, l) || !strictly_divides(lpsi, l))
            return VerifyStatus::Fail;
    }
    return VerifyStatus::Pass;
}

namespace splitting_detail {

inline BettiTable base_table(const MonomialIdeal& base) {
    BettiTable t;
    if (base.count() > 1) throw std::logic_error("recursion base is not principal");
    if (base.count() == 1) t.add(0, base.gens[0].deg(), 1);
    return t;
}

} // namespace splitting_detail

/// Graded Betti table of the initial ideal, computed by folding the peel
/// steps: the table of J is the table of the left part, plus the Koszul
/// table of H shifted by deg(pivot), plus the left table shifted by one
/// homological step and deg(pivot).
inline BettiTable graded_betti_recursion(const CompactClass& c) {
    if (c.kind == CompactKind::Type0)
        throw std::invalid_argument("graded_betti_recursion: zero ideal");
    auto t = lex_order(c);
    auto chain = split_chain(c, t);
    MonomialIdeal base = chain.empty() ? initial_ideal(c, t) : chain.back().left;
    BettiTable tab = splitting_detail::base_table(base);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        int d = it->pivot.deg();
        std::vector<int> hdegs;
        for (const auto& h : it->H.gens) hdegs.push_back(h.deg());
        BettiTable next = tab;
        next += koszul_betti(hdegs).shifted(0, d);
        next += tab.shifted(1, d);
        tab = std::move(next);
    }
    return tab;
}

inline long long binomial_coeff(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Equal-parameter closed form: beta_{i,j} = C(m, i+2) at j = (i+2)p + l for
/// l = 1..i+1, and 0 elsewhere.
inline BettiTable graded_betti_equal_p(int m, int p) {
    if (m < 2 || p < 1) throw std::invalid_argument("graded_betti_equal_p: need m>=2, p>=1");
    BettiTable t;
    for (int i = 0; i + 2 <= m; ++i)
        for (int l = 1; l <= i + 1; ++l)
            t.add(i, (i + 2) * p + l, binomial_coeff(m, i + 2));
    return t;
}

/// Total Betti number closed form (i+1) C(t, i+2) where t counts the induced
/// cycles of the class.
inline long long total_betti_closed_form(const CompactClass& c, int i) {
    if (c.kind == CompactKind::Type0)
        throw std::invalid_argument("total_betti_closed_form: zero ideal");
    return (i + 1) * binomial_coeff(c.t(), i + 2);
}

/// (regularity of the initial ideal, regularity of the quotient); the
/// quotient value is the matching number of the class's graph.
inline std::pair<int, int> regularity_closed_form(const CompactClass& c) {
    if (c.kind == CompactKind::Type0)
        throw std::invalid_argument("regularity_closed_form: zero ideal");
    int mat = c.mat();
    return {mat + 1, mat};
}

struct PdimType {
    int pdim_quotient = 0;
    int cm_type = 1;
    int t = 1;
    bool special = false; // single odd cycle: free edge ring
};

/// Projective dimension and Cohen-Macaulay type of the quotient, both equal
/// to t - 1; the single-cycle class is flagged special (free module).
inline PdimType pdim_and_type(const CompactClass& c) {
    if (c.kind == CompactKind::Type0) return PdimType{0, 1, 1, true};
    int t = c.t();
    return PdimType{t - 1, t - 1, t, false};
}

} // namespace edgering
