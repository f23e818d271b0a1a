#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "edgering/graph.hpp"

namespace fixtures {

inline std::string read_file(const std::string& name) {
    std::ifstream in(std::string(EDGERING_TEST_DATA_DIR) + "/" + name);
    if (!in) throw std::runtime_error("missing test data file: " + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline edgering::Graph load_graph(const std::string& name) {
    return edgering::parse_graph(read_file(name));
}

inline edgering::Graph figure1() { return load_graph("figure1.json"); }
inline edgering::Graph figure2() { return load_graph("figure2.json"); }
inline edgering::Graph figure3() { return load_graph("figure3.json"); }

// odd cycle with labels c0..c{n-1}
inline edgering::Graph cycle_graph(int n) {
    edgering::Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex("c" + std::to_string(i));
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline edgering::Graph complete_graph(int n) {
    edgering::Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex("k" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline edgering::Graph two_disjoint_triangles(bool bridged = false) {
    edgering::Graph g;
    for (auto l : {"a", "b", "c", "d", "e", "f"}) g.add_vertex(l);
    g.add_edge("a", "b");
    g.add_edge("b", "c");
    g.add_edge("c", "a");
    g.add_edge("d", "e");
    g.add_edge("e", "f");
    g.add_edge("f", "d");
    if (bridged) g.add_edge("a", "d");
    return g;
}

} // namespace fixtures
