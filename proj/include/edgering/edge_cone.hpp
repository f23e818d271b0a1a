#pragma once

#include <map>
#include <string>
#include <vector>

#include "edgering/classify.hpp"
#include "edgering/errors.hpp"
#include "edgering/graph.hpp"
#include "edgering/splitting.hpp"

namespace edgering {

/// Integer vector indexed by the vertices of an ambient graph.
struct ConeVector {
    std::vector<long long> coords;

    long long sum() const {
        long long s = 0;
        for (long long c : coords) s += c;
        return s;
    }
    /// Degree of the corresponding monomial of the edge ring.
    long long degree() const { return sum() / 2; }

    bool operator==(const ConeVector& o) const { return coords == o.coords; }
};

struct FundamentalSet {
    std::vector<int> members;      // the independent set T, sorted
    std::vector<int> neighborhood; // N(T), sorted
};

/// One row of the cone description: sum(coef . x) >= 0.
struct ConeInequality {
    std::vector<long long> coef;
    std::string kind; // "vertex u" or "set {a,b,...}"

    long long value(const ConeVector& v) const {
        long long s = 0;
        for (size_t i = 0; i < coef.size(); ++i) s += coef[i] * v.coords[i];
        return s;
    }
};

/// Vertices whose removal leaves only components containing an odd cycle.
inline std::vector<int> regular_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<bool> keep(g.vertex_count(), true);
        keep[v] = false;
        Graph h = g.induced(keep);
        bool regular = true;
        for (const auto& comp : h.components())
            if (h.induced_is_bipartite(comp)) { regular = false; break; }
        if (regular) out.push_back(v);
    }
    return out;
}

namespace cone_detail {

inline bool crossing_graph_connected(const Graph& g, const std::vector<int>& T,
                                     const std::vector<int>& N) {
    if (T.empty()) return false;
    std::vector<int> all = T;
    all.insert(all.end(), N.begin(), N.end());
    std::map<int, int> pos;
    for (size_t i = 0; i < all.size(); ++i) pos[all[i]] = static_cast<int>(i);
    std::vector<bool> inT(g.vertex_count(), false);
    for (int t : T) inT[t] = true;
    std::vector<bool> seen(all.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    size_t count = 1;
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        int v = all[i];
        for (int w : g.neighbors(v)) {
            auto it = pos.find(w);
            if (it == pos.end()) continue;
            if (inT[v] == inT[w]) continue; // only T-to-N edges count
            if (!seen[it->second]) {
                seen[it->second] = true;
                ++count;
                stack.push_back(it->second);
            }
        }
    }
    return count == all.size();
}

inline bool outside_components_have_odd_cycles(const Graph& g, const std::vector<bool>& in_tn) {
    std::vector<bool> keep(g.vertex_count());
    bool any = false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        keep[v] = !in_tn[v];
        any = any || keep[v];
    }
    if (!any) return true; // T together with N(T) covers everything
    Graph h = g.induced(keep);
    for (const auto& comp : h.components())
        if (h.induced_is_bipartite(comp)) return false;
    return true;
}

} // namespace cone_detail

/// All fundamental sets: nonempty independent sets whose crossing bipartite
/// graph is connected and whose outside components all contain odd cycles.
/// Exhaustive over independent sets, so the vertex count is bounded.
inline std::vector<FundamentalSet> fundamental_sets(const Graph& g, int max_vertices = 24) {
    if (g.vertex_count() > max_vertices)
        throw refused_error("fundamental_sets: " + std::to_string(g.vertex_count()) +
                            " vertices exceed the bound " + std::to_string(max_vertices));
    std::vector<FundamentalSet> out;
    std::vector<int> current;
    std::vector<bool> banned(g.vertex_count(), false);
    auto consider = [&]() {
        if (current.empty()) return;
        std::vector<bool> in_tn(g.vertex_count(), false);
        std::vector<int> N;
        for (int t : current) in_tn[t] = true;
        for (int t : current)
            for (int w : g.neighbors(t))
                if (!in_tn[w]) { in_tn[w] = true; N.push_back(w); }
        std::sort(N.begin(), N.end());
        if (!cone_detail::crossing_graph_connected(g, current, N)) return;
        if (!cone_detail::outside_components_have_odd_cycles(g, in_tn)) return;
        out.push_back(FundamentalSet{current, N});
    };
    auto rec = [&](auto&& self, int v) -> void {
        if (v == g.vertex_count()) {
            consider();
            return;
        }
        self(self, v + 1); // skip v
        if (!banned[v]) {  // take v
            std::vector<int> newly;
            for (int w : g.neighbors(v))
                if (w > v && !banned[w]) { banned[w] = true; newly.push_back(w); }
            current.push_back(v);
            self(self, v + 1);
            current.pop_back();
            for (int w : newly) banned[w] = false;
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(),
              [](const FundamentalSet& a, const FundamentalSet& b) {
                  return a.members < b.members;
              });
    return out;
}

/// The inequality description of the edge cone: nonnegativity at every
/// regular vertex and the neighborhood inequality of every fundamental set.
inline std::vector<ConeInequality> cone_system(const Graph& g, int max_vertices = 24) {
    std::vector<ConeInequality> sys;
    for (int u : regular_vertices(g)) {
        ConeInequality q;
        q.coef.assign(g.vertex_count(), 0);
        q.coef[u] = 1;
        q.kind = "vertex " + g.label(u);
        sys.push_back(q);
    }
    for (const auto& fs : fundamental_sets(g, max_vertices)) {
        ConeInequality q;
        q.coef.assign(g.vertex_count(), 0);
        for (int n : fs.neighborhood) q.coef[n] += 1;
        for (int t : fs.members) q.coef[t] -= 1;
        std::string names;
        for (int t : fs.members) names += (names.empty() ? "" : ",") + g.label(t);
        q.kind = "set {" + names + "}";
        sys.push_back(q);
    }
    return sys;
}

inline bool in_cone(const ConeVector& v, const std::vector<ConeInequality>& sys) {
    for (const auto& q : sys)
        if (q.value(v) < 0) return false;
    return true;
}

/// Strict version of every inequality; meaningful because the cone is
/// full-dimensional for connected graphs with an odd cycle, which the sum of
/// edge generators witnesses per instance.
inline bool in_relint(const ConeVector& v, const std::vector<ConeInequality>& sys) {
    for (const auto& q : sys)
        if (q.value(v) <= 0) return false;
    return true;
}

/// Sum of all edge generators (the degree vector); strictly feasible for
/// every connected non-bipartite graph.
inline ConeVector edge_generator_sum(const Graph& g) {
    ConeVector v;
    v.coords.assign(g.vertex_count(), 0);
    for (auto [a, b] : g.edges()) {
        v.coords[a] += 1;
        v.coords[b] += 1;
    }
    return v;
}

/// The minimal canonical-module exponent vectors of the class, as vectors
/// over the model graph (generate(c)) vertex order: every branch vertex gets
/// weight one, the hubs carry the type-specific weights. Type0 returns an
/// empty list (principal canonical module, flagged by pdim_and_type).
inline std::vector<ConeVector> canonical_generators(const CompactClass& c,
                                                    const Graph& model) {
    std::vector<ConeVector> out;
    if (c.kind == CompactKind::Type0) return out;
    auto base = [&](long long u, long long v, long long w) {
        ConeVector x;
        x.coords.assign(model.vertex_count(), 1);
        if (c.kind >= CompactKind::Type1) x.coords[model.index_of("u")] = u;
        if (c.kind >= CompactKind::Type2) x.coords[model.index_of("v")] = v;
        if (c.kind == CompactKind::Type3) x.coords[model.index_of("w")] = w;
        return x;
    };
    switch (c.kind) {
        case CompactKind::Type0:
            break;
        case CompactKind::Type1:
            for (int l = 1; l <= c.m() - 1; ++l) out.push_back(base(2 * l, 0, 0));
            break;
        case CompactKind::Type2:
            if (c.s == 0) {
                for (int l = 0; l <= c.m() - 1; ++l) out.push_back(base(2 * l + 1, 1, 0));
                for (int l = 1; l <= c.n() - 1; ++l) out.push_back(base(1, 2 * l + 1, 0));
            } else {
                // path vertices w[1..s-1] carry weight one already
                for (int l = 1; l <= c.m(); ++l) out.push_back(base(2 * l, 1, 0));
                for (int l = 1; l <= c.n(); ++l) out.push_back(base(1, 2 * l, 0));
            }
            break;
        case CompactKind::Type3:
            for (int l = 1; l <= c.m(); ++l) out.push_back(base(2 * l, 1, 1));
            for (int l = 1; l <= c.n(); ++l) out.push_back(base(1, 2 * l, 1));
            for (int l = 1; l <= c.k(); ++l) out.push_back(base(1, 1, 2 * l));
            break;
    }
    return out;
}

/// Exhaustive decomposition search: v is minimal iff no nonzero integer
/// vector w below it satisfies w in the cone, v - w in the relative
/// interior, and (on the semigroup lattice) both coordinate sums even.
/// `even_lattice = false` lifts the parity restriction.
inline bool minimality_oracle(const ConeVector& v, const Graph& g,
                              const std::vector<ConeInequality>& sys,
                              bool even_lattice = true, long long max_coord = 6,
                              int max_vertices = 24) {
    int n = g.vertex_count();
    if (n > max_vertices)
        throw refused_error("minimality_oracle: too many vertices");
    for (long long c : v.coords)
        if (c > max_coord) throw refused_error("minimality_oracle: coordinate above bound");

    std::vector<long long> vals_v(sys.size());
    for (size_t i = 0; i < sys.size(); ++i) vals_v[i] = sys[i].value(v);

    ConeVector w;
    w.coords.assign(n, 0);
    std::vector<long long> vals_w(sys.size(), 0);
    long long sum_w = 0;
    // odometer over the coordinate box [0, v]
    for (;;) {
        int pos = 0;
        while (pos < n && w.coords[pos] == v.coords[pos]) ++pos;
        if (pos == n) break;
        for (int i = 0; i < pos; ++i) {
            long long delta = -w.coords[i];
            if (delta != 0) {
                for (size_t q = 0; q < sys.size(); ++q) vals_w[q] += sys[q].coef[i] * delta;
                sum_w += delta;
                w.coords[i] = 0;
            }
        }
        w.coords[pos] += 1;
        sum_w += 1;
        for (size_t q = 0; q < sys.size(); ++q) vals_w[q] += sys[q].coef[pos];

        if (w == v) continue; // leaves v - w = 0
        if (even_lattice && (sum_w % 2 != 0 || (v.sum() - sum_w) % 2 != 0)) continue;
        bool ok = true;
        for (size_t q = 0; q < sys.size() && ok; ++q)
            ok = vals_w[q] >= 0 && vals_v[q] - vals_w[q] > 0;
        if (ok) return false; // decomposition found
    }
    return true;
}

/// All even-sum lattice points of the relative interior with degree at most
/// `max_degree`. Regular vertices start from one (strict nonnegativity
/// forces it); the others from zero.
inline std::vector<ConeVector> low_degree_relint_points(const Graph& g,
                                                        const std::vector<ConeInequality>& sys,
                                                        int max_degree) {
    int n = g.vertex_count();
    std::vector<long long> base(n, 0);
    for (int u : regular_vertices(g)) base[u] = 1;
    long long budget = 2ll * max_degree;
    for (long long b : base) budget -= b;
    std::vector<ConeVector> found;
    if (budget < 0) return found;
    ConeVector w;
    w.coords = base;
    auto rec = [&](auto&& self, int pos, long long left) -> void {
        if (pos == n) {
            if (w.sum() % 2 == 0 && in_relint(w, sys)) found.push_back(w);
            return;
        }
        for (long long extra = 0; extra <= left; ++extra) {
            w.coords[pos] = base[pos] + extra;
            self(self, pos + 1, left - extra);
        }
        w.coords[pos] = base[pos];
    };
    rec(rec, 0, budget);
    return found;
}

/// Top graded Betti numbers of the quotient, read off the canonical
/// generators through duality: a generator of degree d contributes one at
/// internal degree |E| - d in homological degree pdim.
inline std::map<int, long long> top_graded_betti(const CompactClass& c) {
    if (c.kind == CompactKind::Type0)
        throw std::invalid_argument("top_graded_betti: free edge ring");
    Graph model = generate(c);
    std::map<int, long long> out;
    for (const auto& v : canonical_generators(c, model))
        out[c.model_edge_count() - static_cast<int>(v.degree())] += 1;
    return out;
}

/// The published closed-form top rows, stated for the normalized group
/// order (sizes ascending).
inline std::map<int, long long> top_graded_betti_closed_form(const CompactClass& c) {
    std::map<int, long long> out;
    int mat = c.mat();
    int m = c.m(), n = c.n(), k = c.k();
    switch (c.kind) {
        case CompactKind::Type0:
            throw std::invalid_argument("top_graded_betti_closed_form: free edge ring");
        case CompactKind::Type1:
            for (int l = 1; l <= m - 1; ++l) out[mat + l] += 1;
            break;
        case CompactKind::Type2:
            if (c.s == 0) {
                for (int l = 1; l <= n - m; ++l) out[mat + m - 1 + l] += 1;
                for (int l = 1; l <= m - 1; ++l) out[mat + n - 1 + l] += 2;
                out[mat + m + n - 1] += 1;
            } else {
                for (int l = m + 1; l <= n; ++l) out[mat + l] += 1;
                for (int l = 1; l <= m; ++l) out[mat + n + l] += 2;
            }
            break;
        case CompactKind::Type3:
            for (int l = 1; l <= k - n; ++l) out[mat + n + m + l] += 1;
            for (int l = 1; l <= n - m; ++l) out[mat + m + k + l] += 2;
            for (int l = 1; l <= m; ++l) out[mat + k + n + l] += 3;
            break;
    }
    return out;
}

} // namespace edgering
