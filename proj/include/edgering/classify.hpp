#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "edgering/graph.hpp"

namespace edgering {

enum class CompactKind { Type0 = 0, Type1 = 1, Type2 = 2, Type3 = 3 };

/// Normalized description of an even-cycle-free graph satisfying the
/// odd-cycle condition. Branch-length tuples are sorted non-increasing and
/// the groups themselves ascend by (size, tuple, hub position), so Type2 has
/// |p| <= |q| and Type3 has |p| <= |q| <= |r|. For Type0, p holds the single
/// value (cycle length - 1) / 2.
struct CompactClass {
    CompactKind kind = CompactKind::Type0;
    std::vector<int> p, q, r;
    int s = 0; // Type2: even length of the second hub-to-hub path, 0 if absent

    std::vector<std::string> big_vertices;              // input labels, group order
    std::map<std::string, std::string> vertex_map;      // model label -> input label
    bool hub_tie_break = false; // groups with equal tuples ordered by hub position

    int m() const { return static_cast<int>(p.size()); }
    int n() const { return static_cast<int>(q.size()); }
    int k() const { return static_cast<int>(r.size()); }
    int sum_p() const { return std::accumulate(p.begin(), p.end(), 0); }
    int sum_q() const { return std::accumulate(q.begin(), q.end(), 0); }
    int sum_r() const { return std::accumulate(r.begin(), r.end(), 0); }

    /// Number of induced cycles of the model graph.
    int t() const {
        switch (kind) {
            case CompactKind::Type0: return 1;
            case CompactKind::Type1: return m();
            case CompactKind::Type2: return m() + n() + (s > 0 ? 1 : 0);
            case CompactKind::Type3: return m() + n() + k() + 1;
        }
        return 0;
    }

    /// Matching number of the model graph.
    int mat() const {
        switch (kind) {
            case CompactKind::Type0: return p.at(0);
            case CompactKind::Type1: return sum_p();
            case CompactKind::Type2: return sum_p() + sum_q() + (s == 0 ? 1 : s / 2);
            case CompactKind::Type3: return sum_p() + sum_q() + sum_r() + 1;
        }
        return 0;
    }

    int model_vertex_count() const {
        switch (kind) {
            case CompactKind::Type0: return 2 * p.at(0) + 1;
            case CompactKind::Type1: return 2 * sum_p() + 1;
            case CompactKind::Type2: return 2 * (sum_p() + sum_q()) + 2 + (s > 0 ? s - 1 : 0);
            case CompactKind::Type3: return 2 * (sum_p() + sum_q() + sum_r()) + 3;
        }
        return 0;
    }

    int model_edge_count() const {
        switch (kind) {
            case CompactKind::Type0: return 2 * p.at(0) + 1;
            case CompactKind::Type1: return 2 * sum_p() + m();
            case CompactKind::Type2:
                return 2 * (sum_p() + sum_q()) + m() + n() + 1 + s;
            case CompactKind::Type3:
                return 2 * (sum_p() + sum_q() + sum_r()) + m() + n() + k() + 3;
        }
        return 0;
    }

    bool same_parameters(const CompactClass& o) const {
        return kind == o.kind && p == o.p && q == o.q && r == o.r && s == o.s;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["type"] = static_cast<int>(kind);
        j["p"] = p;
        if (kind == CompactKind::Type2 || kind == CompactKind::Type3) j["q"] = q;
        if (kind == CompactKind::Type3) j["r"] = r;
        if (kind == CompactKind::Type2) j["s"] = s;
        if (!big_vertices.empty()) j["bigVertices"] = big_vertices;
        if (hub_tie_break) j["hubTieBreak"] = true;
        return j;
    }
};

/// Witness for a rejected classification.
struct NotCompact {
    enum class Reason { Disconnected, EvenCycle, CyclePair, StructuralMismatch };
    Reason reason;
    std::optional<Cycle> even_cycle;              // Reason::EvenCycle
    std::optional<std::pair<Cycle, Cycle>> pair;  // Reason::CyclePair
    std::string detail;

    std::string reason_name() const {
        switch (reason) {
            case Reason::Disconnected: return "disconnected";
            case Reason::EvenCycle: return "even-cycle";
            case Reason::CyclePair: return "cycle-pair";
            case Reason::StructuralMismatch: return "structural-mismatch";
        }
        return "?";
    }
};

using ClassifyResult = std::variant<CompactClass, NotCompact>;

/// Vertices of degree >= 3, ascending by index.
inline std::vector<int> big_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) >= 3) out.push_back(v);
    return out;
}

/// Model graph of a normalized class, with canonical vertex names
/// u, u[i,j], v, v[i,j], w, w[i,j] and w[1..s-1] for the Type2 path.
inline Graph generate(const CompactClass& c) {
    Graph g;
    auto branch_cycle = [&g](const std::string& hub, const std::string& fam,
                             int i, int pi) {
        std::vector<std::string> names;
        for (int j = 1; j <= 2 * pi; ++j)
            names.push_back(fam + "[" + std::to_string(i) + "," + std::to_string(j) + "]");
        for (const auto& nm : names) g.add_vertex(nm);
        g.add_edge(hub, names.front());
        for (size_t j = 0; j + 1 < names.size(); ++j) g.add_edge(names[j], names[j + 1]);
        g.add_edge(names.back(), hub);
    };

    switch (c.kind) {
        case CompactKind::Type0: {
            int len = 2 * c.p.at(0) + 1;
            for (int i = 0; i < len; ++i) g.add_vertex("c" + std::to_string(i));
            for (int i = 0; i < len; ++i) g.add_edge(i, (i + 1) % len);
            break;
        }
        case CompactKind::Type1: {
            if (c.m() < 2) throw std::invalid_argument("Type1 needs at least two cycles");
            g.add_vertex("u");
            for (int i = 1; i <= c.m(); ++i) branch_cycle("u", "u", i, c.p[i - 1]);
            break;
        }
        case CompactKind::Type2: {
            if (c.m() < 1 || c.n() < 1 || c.s < 0 || c.s % 2 != 0)
                throw std::invalid_argument("bad Type2 parameters");
            g.add_vertex("u");
            for (int i = 1; i <= c.m(); ++i) branch_cycle("u", "u", i, c.p[i - 1]);
            g.add_vertex("v");
            for (int i = 1; i <= c.n(); ++i) branch_cycle("v", "v", i, c.q[i - 1]);
            g.add_edge("u", "v");
            if (c.s > 0) {
                std::vector<std::string> path;
                for (int i = 1; i <= c.s - 1; ++i) {
                    path.push_back("w[" + std::to_string(i) + "]");
                    g.add_vertex(path.back());
                }
                g.add_edge("u", path.front());
                for (size_t i = 0; i + 1 < path.size(); ++i) g.add_edge(path[i], path[i + 1]);
                g.add_edge(path.back(), "v");
            }
            break;
        }
        case CompactKind::Type3: {
            if (c.m() < 1 || c.n() < 1 || c.k() < 1)
                throw std::invalid_argument("bad Type3 parameters");
            g.add_vertex("u");
            for (int i = 1; i <= c.m(); ++i) branch_cycle("u", "u", i, c.p[i - 1]);
            g.add_vertex("v");
            for (int i = 1; i <= c.n(); ++i) branch_cycle("v", "v", i, c.q[i - 1]);
            g.add_vertex("w");
            for (int i = 1; i <= c.k(); ++i) branch_cycle("w", "w", i, c.r[i - 1]);
            g.add_edge("u", "v");
            g.add_edge("v", "w");
            g.add_edge("w", "u");
            break;
        }
    }
    return g;
}

namespace detail {

// A branch cycle or hub-to-hub path extracted from the input: the component
// vertices in traversal order, plus the hubs its endpoints attach to.
struct PathComponent {
    std::vector<int> verts; // path order
    int hub_first = -1;     // hub adjacent to verts.front()
    int hub_last = -1;      // hub adjacent to verts.back()
};

// Orders the component of g \ hubs containing `comp` as a path and finds the
// attachment hubs. Returns nullopt if the component is not a path or its
// endpoints do not attach as required.
inline std::optional<PathComponent> trace_path(const Graph& g, const std::vector<int>& comp,
                                               const std::vector<int>& hubs) {
    auto is_hub = [&hubs](int v) {
        return std::find(hubs.begin(), hubs.end(), v) != hubs.end();
    };
    auto hub_neighbors = [&](int v) {
        std::vector<int> out;
        for (int w : g.neighbors(v))
            if (is_hub(w)) out.push_back(w);
        return out;
    };
    if (comp.size() == 1) {
        auto hn = hub_neighbors(comp[0]);
        if (g.degree(comp[0]) != 2 || hn.size() != 2) return std::nullopt;
        return PathComponent{{comp[0]}, hn[0], hn[1]};
    }
    // endpoints have exactly one neighbor inside the component
    std::vector<int> inside_deg(comp.size());
    std::vector<int> ends;
    for (size_t i = 0; i < comp.size(); ++i) {
        int d = 0;
        for (int w : g.neighbors(comp[i]))
            if (std::binary_search(comp.begin(), comp.end(), w)) ++d;
        inside_deg[i] = d;
        if (d == 1) ends.push_back(comp[i]);
        if (d > 2) return std::nullopt;
    }
    if (ends.size() != 2) return std::nullopt;
    int start = std::min(ends[0], ends[1]);
    PathComponent pc;
    pc.verts.push_back(start);
    int prev = -1, cur = start;
    while (true) {
        int next = -1;
        for (int w : g.neighbors(cur)) {
            if (w == prev || !std::binary_search(comp.begin(), comp.end(), w)) continue;
            next = w;
            break;
        }
        if (next == -1) break;
        pc.verts.push_back(next);
        prev = cur;
        cur = next;
    }
    if (pc.verts.size() != comp.size()) return std::nullopt;
    // interior vertices must have degree 2 in g; endpoints exactly one hub edge
    for (size_t i = 1; i + 1 < pc.verts.size(); ++i)
        if (g.degree(pc.verts[i]) != 2) return std::nullopt;
    auto hf = hub_neighbors(pc.verts.front());
    auto hl = hub_neighbors(pc.verts.back());
    if (hf.size() != 1 || hl.size() != 1) return std::nullopt;
    if (g.degree(pc.verts.front()) != 2 || g.degree(pc.verts.back()) != 2) return std::nullopt;
    pc.hub_first = hf[0];
    pc.hub_last = hl[0];
    return pc;
}

struct BranchGroup {
    int hub;                                  // input vertex index
    std::vector<PathComponent> branches;      // sorted: longer first, then by min vertex
    std::vector<int> tuple;                   // p_i = |branch| / 2, non-increasing
};

} // namespace detail

/// Classifies a pruned graph (connected, minimum degree >= 2). The empty
/// graph is a contract violation; callers that prune forests handle the
/// empty result themselves.
inline ClassifyResult classify(const Graph& g) {
    if (g.empty()) throw std::invalid_argument("classify: empty graph");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) < 2)
            throw std::invalid_argument("classify: vertex of degree < 2 (prune first): " +
                                        g.label(v));

    if (!g.connected()) {
        auto comps = g.components();
        NotCompact nc{NotCompact::Reason::Disconnected, std::nullopt, std::nullopt,
                      "components rooted at " + g.label(comps[0][0]) + " and " +
                          g.label(comps[1][0])};
        return nc;
    }
    if (auto even = find_even_cycle(g)) {
        return NotCompact{NotCompact::Reason::EvenCycle, even, std::nullopt,
                          "even cycle of length " + std::to_string(even->length())};
    }
    if (auto pair = odd_cycle_condition_witness(g)) {
        return NotCompact{NotCompact::Reason::CyclePair, std::nullopt, pair,
                          "vertex-disjoint cycles with no joining edge"};
    }

    std::vector<int> hubs = big_vertices(g);
    auto mismatch = [](std::string why) {
        return NotCompact{NotCompact::Reason::StructuralMismatch, std::nullopt, std::nullopt,
                          std::move(why)};
    };
    if (hubs.size() > 3) return mismatch("more than three vertices of degree >= 3");

    CompactClass c;
    c.kind = static_cast<CompactKind>(hubs.size());

    if (hubs.empty()) {
        // 2-regular and connected: one cycle, odd since even cycles are gone
        c.p = {(g.vertex_count() - 1) / 2};
        Cycle cyc = enumerate_cycles(g).at(0);
        for (int i = 0; i < cyc.length(); ++i)
            c.vertex_map["c" + std::to_string(i)] = g.label(cyc.verts[i]);
        return c;
    }

    // split off the hub-deleted components as paths
    std::vector<bool> keep(g.vertex_count(), true);
    for (int h : hubs) keep[h] = false;
    std::vector<std::vector<int>> comps;
    {
        // components of g minus hubs, in original vertex indices
        std::vector<bool> seen(g.vertex_count(), false);
        for (int v0 = 0; v0 < g.vertex_count(); ++v0) {
            if (!keep[v0] || seen[v0]) continue;
            std::vector<int> comp;
            std::vector<int> stack{v0};
            seen[v0] = true;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                comp.push_back(v);
                for (int w : g.neighbors(v))
                    if (keep[w] && !seen[w]) { seen[w] = true; stack.push_back(w); }
            }
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
    }

    std::map<int, detail::BranchGroup> groups;
    for (int h : hubs) groups[h] = detail::BranchGroup{h, {}, {}};
    std::optional<detail::PathComponent> connector;

    for (const auto& comp : comps) {
        auto pc = detail::trace_path(g, comp, hubs);
        if (!pc) return mismatch("component off the degree->=3 vertices is not a path");
        if (pc->hub_first == pc->hub_last) {
            if (comp.size() % 2 != 0) return mismatch("odd branch component");
            groups[pc->hub_first].branches.push_back(*pc);
        } else {
            if (c.kind != CompactKind::Type2)
                return mismatch("hub-to-hub path outside a two-hub graph");
            if (connector) return mismatch("two hub-to-hub paths");
            if (comp.size() % 2 != 1) return mismatch("hub-to-hub path of odd length");
            connector = *pc;
        }
    }

    // hubs must be pairwise adjacent and carry at least one branch each
    for (size_t i = 0; i < hubs.size(); ++i)
        for (size_t j = i + 1; j < hubs.size(); ++j)
            if (!g.has_edge(hubs[i], hubs[j]))
                return mismatch("vertices of degree >= 3 are not adjacent");
    for (int h : hubs) {
        auto& grp = groups[h];
        if (grp.branches.empty()) return mismatch("hub without an attached odd cycle");
        std::sort(grp.branches.begin(), grp.branches.end(),
                  [](const detail::PathComponent& a, const detail::PathComponent& b) {
                      if (a.verts.size() != b.verts.size())
                          return a.verts.size() > b.verts.size();
                      return *std::min_element(a.verts.begin(), a.verts.end()) <
                             *std::min_element(b.verts.begin(), b.verts.end());
                  });
        for (const auto& br : grp.branches)
            grp.tuple.push_back(static_cast<int>(br.verts.size()) / 2);
    }
    if (c.kind == CompactKind::Type1 && groups[hubs[0]].branches.size() < 2)
        return mismatch("single degree->=3 vertex with fewer than two cycles");

    // normalize: groups ascend by (size, tuple, hub input position)
    std::vector<detail::BranchGroup> ordered;
    for (int h : hubs) ordered.push_back(groups[h]);
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const detail::BranchGroup& a, const detail::BranchGroup& b) {
                         if (a.tuple.size() != b.tuple.size())
                             return a.tuple.size() < b.tuple.size();
                         return a.tuple < b.tuple;
                     });
    for (size_t i = 0; i + 1 < ordered.size(); ++i)
        if (ordered[i].tuple == ordered[i + 1].tuple) c.hub_tie_break = true;

    static const char* kHubName[] = {"u", "v", "w"};
    static const char* kFamName[] = {"u", "v", "w"};
    for (size_t gi = 0; gi < ordered.size(); ++gi) {
        const auto& grp = ordered[gi];
        c.big_vertices.push_back(g.label(grp.hub));
        c.vertex_map[kHubName[gi]] = g.label(grp.hub);
        std::vector<int>& tuple = (gi == 0 ? c.p : gi == 1 ? c.q : c.r);
        tuple = grp.tuple;
        for (size_t bi = 0; bi < grp.branches.size(); ++bi) {
            auto verts = grp.branches[bi].verts; // path order; orient from lower index end
            if (verts.size() > 1 && verts.front() > verts.back())
                std::reverse(verts.begin(), verts.end());
            for (size_t j = 0; j < verts.size(); ++j)
                c.vertex_map[std::string(kFamName[gi]) + "[" + std::to_string(bi + 1) + "," +
                             std::to_string(j + 1) + "]"] = g.label(verts[j]);
        }
    }
    if (c.kind == CompactKind::Type2) {
        if (connector) {
            c.s = static_cast<int>(connector->verts.size()) + 1;
            auto verts = connector->verts;
            // w[1] sits next to the hub mapped to u
            if (g.label(connector->hub_first) != c.vertex_map["u"])
                std::reverse(verts.begin(), verts.end());
            for (size_t i = 0; i < verts.size(); ++i)
                c.vertex_map["w[" + std::to_string(i + 1) + "]"] = g.label(verts[i]);
        } else {
            c.s = 0;
        }
    }

    // final check: the model graph is isomorphic to the input via vertex_map
    Graph model = generate(c);
    if (model.vertex_count() != g.vertex_count() || model.edge_count() != g.edge_count())
        return mismatch("model size differs from input");
    for (auto [a, b] : model.edges()) {
        auto ia = c.vertex_map.find(model.label(a));
        auto ib = c.vertex_map.find(model.label(b));
        if (ia == c.vertex_map.end() || ib == c.vertex_map.end() ||
            !g.has_edge(g.index_of(ia->second), g.index_of(ib->second)))
            return mismatch("model edge missing in input");
    }
    return c;
}

} // namespace edgering
