#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "edgering/errors.hpp"

namespace edgering {

/// Labeled simple graph. Vertices keep their document order; edges are
/// unordered pairs of vertex indices with the smaller index first.
class Graph {
public:
    Graph() = default;

    int add_vertex(const std::string& label) {
        if (index_.count(label))
            throw parse_error("duplicate vertex label: " + label);
        int id = static_cast<int>(labels_.size());
        labels_.push_back(label);
        index_[label] = id;
        adj_.emplace_back();
        return id;
    }

    void add_edge(const std::string& a, const std::string& b) {
        auto ia = index_.find(a);
        auto ib = index_.find(b);
        if (ia == index_.end())
            throw parse_error("unknown endpoint label: " + a);
        if (ib == index_.end())
            throw parse_error("unknown endpoint label: " + b);
        add_edge(ia->second, ib->second);
    }

    void add_edge(int a, int b) {
        if (a == b)
            throw parse_error("loop edge at vertex: " + labels_[a]);
        if (a > b) std::swap(a, b);
        if (edge_set_.count({a, b}))
            throw parse_error("duplicate edge: (" + labels_[a] + "," + labels_[b] + ")");
        edge_set_.insert({a, b});
        edges_.push_back({a, b});
        adj_[a].push_back(b);
        adj_[b].push_back(a);
        std::sort(adj_[a].begin(), adj_[a].end());
        std::sort(adj_[b].begin(), adj_[b].end());
    }

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool empty() const { return labels_.empty(); }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_[v]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool has_vertex(const std::string& label) const { return index_.count(label) > 0; }

    int index_of(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end())
            throw parse_error("unknown vertex label: " + label);
        return it->second;
    }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool has_edge(int a, int b) const {
        if (a > b) std::swap(a, b);
        return edge_set_.count({a, b}) > 0;
    }

    /// Subgraph induced on `keep`, preserving label order.
    Graph induced(const std::vector<bool>& keep) const {
        Graph g;
        std::vector<int> remap(labels_.size(), -1);
        for (int v = 0; v < vertex_count(); ++v)
            if (keep[v]) remap[v] = g.add_vertex(labels_[v]);
        for (auto [a, b] : edges_)
            if (keep[a] && keep[b]) g.add_edge(remap[a], remap[b]);
        return g;
    }

    bool connected() const {
        if (empty()) return true;
        std::vector<bool> seen(vertex_count(), false);
        std::queue<int> q;
        q.push(0);
        seen[0] = true;
        int cnt = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj_[v])
                if (!seen[w]) { seen[w] = true; ++cnt; q.push(w); }
        }
        return cnt == vertex_count();
    }

    /// Connected components as vertex-index lists (each sorted ascending).
    std::vector<std::vector<int>> components() const {
        std::vector<std::vector<int>> comps;
        std::vector<bool> seen(vertex_count(), false);
        for (int s = 0; s < vertex_count(); ++s) {
            if (seen[s]) continue;
            std::vector<int> comp;
            std::queue<int> q;
            q.push(s);
            seen[s] = true;
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                comp.push_back(v);
                for (int w : adj_[v])
                    if (!seen[w]) { seen[w] = true; q.push(w); }
            }
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        return comps;
    }

    /// True iff the subgraph induced on `verts` is bipartite (no odd cycle).
    bool induced_is_bipartite(const std::vector<int>& verts) const {
        std::map<int, int> color;
        for (int s : verts) {
            if (color.count(s)) continue;
            color[s] = 0;
            std::queue<int> q;
            q.push(s);
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                for (int w : adj_[v]) {
                    if (!std::binary_search(verts.begin(), verts.end(), w)) continue;
                    auto it = color.find(w);
                    if (it == color.end()) {
                        color[w] = color[v] ^ 1;
                        q.push(w);
                    } else if (it->second == color[v]) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

private:
    std::vector<std::string> labels_;
    std::map<std::string, int> index_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
    std::set<std::pair<int, int>> edge_set_;
};

/// Simple cycle in canonical form: the vertex label least in string order
/// comes first and the direction is chosen so the second label is least.
struct Cycle {
    std::vector<int> verts; // canonical rotation, length == cycle length
    int length() const { return static_cast<int>(verts.size()); }
    bool even() const { return length() % 2 == 0; }
    bool operator==(const Cycle& o) const { return verts == o.verts; }
    bool operator<(const Cycle& o) const { return verts < o.verts; }
};

inline Cycle canonical_cycle(const Graph& g, std::vector<int> vs) {
    int n = static_cast<int>(vs.size());
    int best = 0;
    for (int i = 1; i < n; ++i)
        if (g.label(vs[i]) < g.label(vs[best])) best = i;
    std::rotate(vs.begin(), vs.begin() + best, vs.end());
    if (n >= 3 && g.label(vs[n - 1]) < g.label(vs[1]))
        std::reverse(vs.begin() + 1, vs.end());
    return Cycle{std::move(vs)};
}

namespace detail {

inline void cycle_dfs(const Graph& g, int start, std::vector<int>& path,
                      std::vector<bool>& onpath, std::vector<Cycle>& out) {
    int v = path.back();
    for (int w : g.neighbors(v)) {
        if (w == start && path.size() >= 3) {
            // each cycle reported once: the start is its least index and the
            // two traversal directions are collapsed by path[1] < path.back()
            if (path[1] < path.back()) out.push_back(canonical_cycle(g, path));
        } else if (w > start && !onpath[w]) {
            onpath[w] = true;
            path.push_back(w);
            cycle_dfs(g, start, path, onpath, out);
            path.pop_back();
            onpath[w] = false;
        }
    }
}

} // namespace detail

/// All simple cycles, each exactly once up to rotation and reflection,
/// sorted by canonical form.
inline std::vector<Cycle> enumerate_cycles(const Graph& g) {
    std::vector<Cycle> out;
    std::vector<bool> onpath(g.vertex_count(), false);
    for (int s = 0; s < g.vertex_count(); ++s) {
        std::vector<int> path{s};
        onpath[s] = true;
        detail::cycle_dfs(g, s, path, onpath, out);
        onpath[s] = false;
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool cycle_has_chord(const Graph& g, const Cycle& c) {
    int n = c.length();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == n - 1);
            if (!consecutive && g.has_edge(c.verts[i], c.verts[j])) return true;
        }
    return false;
}

/// Chordless cycles; their number is the invariant written t(G) in reports.
inline std::vector<Cycle> induced_cycles(const Graph& g) {
    std::vector<Cycle> out;
    for (const Cycle& c : enumerate_cycles(g))
        if (!cycle_has_chord(g, c)) out.push_back(c);
    return out;
}

inline std::optional<Cycle> find_even_cycle(const Graph& g) {
    for (const Cycle& c : enumerate_cycles(g))
        if (c.even()) return c;
    return std::nullopt;
}

inline bool has_even_cycle(const Graph& g) { return find_even_cycle(g).has_value(); }

/// Checks that every pair of cycles shares a vertex or is joined by an edge.
/// On failure returns a violating pair of cycles.
inline std::optional<std::pair<Cycle, Cycle>> odd_cycle_condition_witness(const Graph& g) {
    std::vector<Cycle> cycles = enumerate_cycles(g);
    for (size_t i = 0; i < cycles.size(); ++i)
        for (size_t j = i + 1; j < cycles.size(); ++j) {
            const auto& a = cycles[i].verts;
            const auto& b = cycles[j].verts;
            bool ok = false;
            for (int v : a) {
                for (int w : b)
                    if (v == w || g.has_edge(v, w)) { ok = true; break; }
                if (ok) break;
            }
            if (!ok) return std::make_pair(cycles[i], cycles[j]);
        }
    return std::nullopt;
}

inline bool odd_cycle_condition(const Graph& g) { return !odd_cycle_condition_witness(g); }

/// Iteratively deletes degree-1 vertices (whole sweeps, in label-list order)
/// until none remain, then deletes isolated vertices. Returns the pruned
/// graph and the deletion order.
inline std::pair<Graph, std::vector<std::string>> prune_leaves(const Graph& g) {
    std::vector<bool> keep(g.vertex_count(), true);
    std::vector<int> deg(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) deg[v] = g.degree(v);
    std::vector<std::string> removed;
    for (;;) {
        std::vector<int> leaves;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (keep[v] && deg[v] == 1) leaves.push_back(v);
        if (leaves.empty()) break;
        for (int v : leaves) {
            keep[v] = false;
            removed.push_back(g.label(v));
            for (int w : g.neighbors(v))
                if (keep[w]) --deg[w];
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (keep[v] && deg[v] == 0) {
            keep[v] = false;
            removed.push_back(g.label(v));
        }
    return {g.induced(keep), std::move(removed)};
}

namespace detail {

inline void matching_dfs(const Graph& g, size_t ei, int current,
                         std::vector<bool>& used, int& best) {
    const auto& edges = g.edges();
    // bound: at most one more edge per two free vertices, and per remaining edge
    int free_verts = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!used[v]) ++free_verts;
    int bound = current + std::min<int>(free_verts / 2,
                                        static_cast<int>(edges.size() - ei));
    if (bound <= best) return;
    if (ei == edges.size()) {
        best = std::max(best, current);
        return;
    }
    auto [a, b] = edges[ei];
    if (!used[a] && !used[b]) {
        used[a] = used[b] = true;
        matching_dfs(g, ei + 1, current + 1, used, best);
        used[a] = used[b] = false;
    }
    matching_dfs(g, ei + 1, current, used, best);
}

} // namespace detail

/// Exact matching number by branch and bound. This function is itself the
/// ground truth for the regularity formulas, so no approximation.
inline int matching_number(const Graph& g) {
    std::vector<bool> used(g.vertex_count(), false);
    int best = 0;
    detail::matching_dfs(g, 0, 0, used, best);
    return best;
}

/// Parses a graph document. "json" expects
/// {"vertices":[...],"edges":[[a,b],...]}; "text" expects one "u v" pair per
/// line with vertices implied; "auto" sniffs for a leading '{'.
inline Graph parse_graph(const std::string& document, const std::string& format = "auto") {
    std::string fmt = format;
    if (fmt == "auto") {
        size_t pos = document.find_first_not_of(" \t\r\n");
        fmt = (pos != std::string::npos && document[pos] == '{') ? "json" : "text";
    }
    Graph g;
    if (fmt == "json") {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(document);
        } catch (const nlohmann::json::exception& e) {
            throw parse_error(std::string("invalid JSON: ") + e.what());
        }
        if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
            throw parse_error("graph document must contain \"vertices\" and \"edges\"");
        for (const auto& v : doc["vertices"]) {
            if (!v.is_string()) throw parse_error("vertex labels must be strings");
            g.add_vertex(v.get<std::string>());
        }
        for (const auto& e : doc["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
                throw parse_error("edges must be [label,label] pairs");
            g.add_edge(e[0].get<std::string>(), e[1].get<std::string>());
        }
    } else if (fmt == "text") {
        size_t pos = 0;
        while (pos < document.size()) {
            size_t eol = document.find('\n', pos);
            if (eol == std::string::npos) eol = document.size();
            std::string line = document.substr(pos, eol - pos);
            pos = eol + 1;
            size_t h = line.find('#');
            if (h != std::string::npos) line = line.substr(0, h);
            std::vector<std::string> tok;
            size_t i = 0;
            while (i < line.size()) {
                while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
                size_t j = i;
                while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
                if (j > i) tok.push_back(line.substr(i, j - i));
                i = j;
            }
            if (tok.empty()) continue;
            if (tok.size() != 2)
                throw parse_error("text edge line must have exactly two labels: " + line);
            for (const auto& t : tok)
                if (!g.has_vertex(t)) g.add_vertex(t);
            g.add_edge(tok[0], tok[1]);
        }
    } else {
        throw parse_error("unknown graph format: " + format);
    }
    return g;
}

/// Canonical JSON form of a graph (vertices in document order, edges with
/// endpoint indices ascending, in insertion order).
inline nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (const auto& l : g.labels()) j["vertices"].push_back(l);
    j["edges"] = nlohmann::json::array();
    for (auto [a, b] : g.edges())
        j["edges"].push_back({g.label(a), g.label(b)});
    return j;
}

} // namespace edgering
