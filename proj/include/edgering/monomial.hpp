#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "edgering/classify.hpp"

namespace edgering {

/// Exponent vector over a fixed variable universe. The universe order is the
/// ascending lex chain: a higher index means a larger variable, and the lex
/// comparison looks at the largest variable first.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(int nvars) : e(nvars, 0) {}

    int nvars() const { return static_cast<int>(e.size()); }
    int deg() const { return std::accumulate(e.begin(), e.end(), 0); }
    bool is_one() const { return deg() == 0; }

    bool is_squarefree() const {
        for (int x : e)
            if (x > 1) return false;
        return true;
    }

    std::vector<int> support() const {
        std::vector<int> s;
        for (int i = 0; i < nvars(); ++i)
            if (e[i] > 0) s.push_back(i);
        return s;
    }

    Monomial& mul_var(int v, int exp = 1) {
        e[v] += exp;
        return *this;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        assert(a.nvars() == b.nvars());
        Monomial r(a.nvars());
        for (int i = 0; i < a.nvars(); ++i) r.e[i] = a.e[i] + b.e[i];
        return r;
    }

    bool divides(const Monomial& m) const {
        assert(nvars() == m.nvars());
        for (int i = 0; i < nvars(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }

    /// this / d, requiring divisibility.
    friend Monomial quotient(const Monomial& m, const Monomial& d) {
        assert(d.divides(m));
        Monomial r(m.nvars());
        for (int i = 0; i < m.nvars(); ++i) r.e[i] = m.e[i] - d.e[i];
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        assert(a.nvars() == b.nvars());
        Monomial r(a.nvars());
        for (int i = 0; i < a.nvars(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) {
        for (int i = 0; i < a.nvars(); ++i)
            if (a.e[i] > 0 && b.e[i] > 0) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

/// a < b in the lexicographic order induced by the variable chain.
inline bool lex_less(const Monomial& a, const Monomial& b) {
    assert(a.nvars() == b.nvars());
    for (int i = a.nvars() - 1; i >= 0; --i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
}

/// Canonical sort key used for generator lists: degree, then lex.
inline bool canonical_less(const Monomial& a, const Monomial& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    return lex_less(a, b);
}

/// Pure difference of two distinct monomials. `plus` carries the sign
/// convention of the defining family lists until an order fixes the
/// orientation.
struct Binomial {
    Monomial plus, minus;

    bool homogeneous() const { return plus.deg() == minus.deg(); }

    /// Side that is larger in the chain's lex order.
    const Monomial& lead() const { return lex_less(plus, minus) ? minus : plus; }
    const Monomial& tail() const { return lex_less(plus, minus) ? plus : minus; }
    bool plus_leads() const { return !lex_less(plus, minus); }

    /// Leading side first.
    Binomial oriented() const { return Binomial{lead(), tail()}; }

    bool operator==(const Binomial& o) const { return plus == o.plus && minus == o.minus; }
};

/// One edge variable of the model labeling: its print name, its chain
/// position, and the model edge it stands for.
struct EdgeVar {
    std::string name;
    std::pair<std::string, std::string> edge; // model vertex labels
};

/// The edge variables of a class in ascending lex-chain order, so the
/// comparator induced on monomials is plain lex over this table.
class VarTable {
public:
    int add(std::string name, std::string a, std::string b) {
        int id = static_cast<int>(vars_.size());
        rank_[name] = id;
        vars_.push_back(EdgeVar{std::move(name), {std::move(a), std::move(b)}});
        return id;
    }

    int size() const { return static_cast<int>(vars_.size()); }
    const EdgeVar& var(int i) const { return vars_[i]; }
    const std::vector<EdgeVar>& vars() const { return vars_; }

    int rank(const std::string& name) const {
        auto it = rank_.find(name);
        if (it == rank_.end()) throw std::invalid_argument("unknown variable: " + name);
        return it->second;
    }

    Monomial make(std::initializer_list<std::string> names) const {
        Monomial m(size());
        for (const auto& n : names) m.mul_var(rank(n));
        return m;
    }

    std::string monomial_string(const Monomial& m) const {
        if (m.is_one()) return "1";
        std::string out;
        for (int i = 0; i < size(); ++i) {
            if (m.e[i] == 0) continue;
            if (!out.empty()) out += "*";
            out += vars_[i].name;
            if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
        }
        return out;
    }

    std::string binomial_string(const Binomial& b) const {
        return monomial_string(b.plus) + " - " + monomial_string(b.minus);
    }

private:
    std::vector<EdgeVar> vars_;
    std::map<std::string, int> rank_;
};

namespace detail {

inline std::string idx1(const std::string& fam, int i) {
    return fam + "[" + std::to_string(i) + "]";
}
inline std::string idx2(const std::string& fam, int i, int j) {
    return fam + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

inline void add_branch_block(VarTable& t, const std::string& evar, const std::string& vfam,
                             const std::string& hub, int i, int pi) {
    // e[i,1] = {hub, x[i,1]}, e[i,j+1] = {x[i,j], x[i,j+1]}, e[i,2p+1] = {hub, x[i,2p]}
    t.add(idx2(evar, i, 1), hub, idx2(vfam, i, 1));
    for (int j = 1; j <= 2 * pi - 1; ++j)
        t.add(idx2(evar, i, j + 1), idx2(vfam, i, j), idx2(vfam, i, j + 1));
    t.add(idx2(evar, i, 2 * pi + 1), hub, idx2(vfam, i, 2 * pi));
}

} // namespace detail

/// Builds the ordered variable chain of the class:
///   Type1  e[1,1] < ... < e[m,2p_m+1]
///   Type2  e-block < x < x[1] < ... < x[s] < f-block
///   Type3  e-block < x < z < y < f-block < g-block
/// For Type0 the single cycle's edges appear in traversal order.
inline VarTable lex_order(const CompactClass& c) {
    VarTable t;
    switch (c.kind) {
        case CompactKind::Type0: {
            int len = 2 * c.p.at(0) + 1;
            for (int j = 1; j <= len; ++j)
                t.add(detail::idx1("e", j), "c" + std::to_string(j - 1),
                      "c" + std::to_string(j % len));
            break;
        }
        case CompactKind::Type1: {
            for (int i = 1; i <= c.m(); ++i)
                detail::add_branch_block(t, "e", "u", "u", i, c.p[i - 1]);
            break;
        }
        case CompactKind::Type2: {
            for (int i = 1; i <= c.m(); ++i)
                detail::add_branch_block(t, "e", "u", "u", i, c.p[i - 1]);
            t.add("x", "u", "v");
            if (c.s > 0) {
                t.add(detail::idx1("x", 1), "u", detail::idx1("w", 1));
                for (int l = 1; l <= c.s - 2; ++l)
                    t.add(detail::idx1("x", l + 1), detail::idx1("w", l),
                          detail::idx1("w", l + 1));
                t.add(detail::idx1("x", c.s), "v", detail::idx1("w", c.s - 1));
            }
            for (int i = 1; i <= c.n(); ++i)
                detail::add_branch_block(t, "f", "v", "v", i, c.q[i - 1]);
            break;
        }
        case CompactKind::Type3: {
            for (int i = 1; i <= c.m(); ++i)
                detail::add_branch_block(t, "e", "u", "u", i, c.p[i - 1]);
            t.add("x", "u", "v");
            t.add("z", "w", "u");
            t.add("y", "v", "w");
            for (int i = 1; i <= c.n(); ++i)
                detail::add_branch_block(t, "f", "v", "v", i, c.q[i - 1]);
            for (int i = 1; i <= c.k(); ++i)
                detail::add_branch_block(t, "g", "w", "w", i, c.r[i - 1]);
            break;
        }
    }
    return t;
}

/// Maps every variable to the edge of `g` it labels, via the class's vertex
/// map (identity when the class was built over the model graph itself).
inline std::vector<std::pair<int, int>> labeling_on(const VarTable& t, const CompactClass& c,
                                                    const Graph& g) {
    auto map_label = [&c](const std::string& model) -> const std::string& {
        auto it = c.vertex_map.find(model);
        return it == c.vertex_map.end() ? model : it->second;
    };
    std::vector<std::pair<int, int>> lab;
    lab.reserve(t.size());
    for (const auto& v : t.vars()) {
        int a = g.index_of(map_label(v.edge.first));
        int b = g.index_of(map_label(v.edge.second));
        if (!g.has_edge(a, b))
            throw std::invalid_argument("labeling maps " + v.name + " to a non-edge");
        lab.push_back({std::min(a, b), std::max(a, b)});
    }
    return lab;
}

} // namespace edgering
