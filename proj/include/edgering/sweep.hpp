#pragma once

#include <vector>

#include "edgering/classify.hpp"

namespace edgering {

/// Non-increasing tuples over {1..max_entry} of each length in [1, max_len].
inline std::vector<std::vector<int>> branch_tuples(int max_len, int max_entry) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (!cur.empty()) out.push_back(cur);
        if (remaining == 0) return;
        for (int v = cap; v >= 1; --v) {
            cur.push_back(v);
            self(self, remaining - 1, v);
            cur.pop_back();
        }
    };
    rec(rec, max_len, max_entry);
    return out;
}

/// The desk-scale verification sweep: every normalized class with
/// Type1 m <= 4 and p_i <= 2; Type2 m,n <= 2, entries <= 2, s in {0,2,4};
/// Type3 m,n,k <= 2, entries <= 2.
inline std::vector<CompactClass> sweep_classes() {
    std::vector<CompactClass> out;
    auto key = [](const std::vector<int>& t) { return std::make_pair(t.size(), t); };

    for (const auto& p : branch_tuples(4, 2)) {
        if (p.size() < 2) continue;
        CompactClass c;
        c.kind = CompactKind::Type1;
        c.p = p;
        out.push_back(c);
    }
    auto groups = branch_tuples(2, 2);
    for (const auto& p : groups)
        for (const auto& q : groups) {
            if (key(q) < key(p)) continue;
            for (int s : {0, 2, 4}) {
                CompactClass c;
                c.kind = CompactKind::Type2;
                c.p = p;
                c.q = q;
                c.s = s;
                out.push_back(c);
            }
        }
    for (const auto& p : groups)
        for (const auto& q : groups) {
            if (key(q) < key(p)) continue;
            for (const auto& r : groups) {
                if (key(r) < key(q)) continue;
                CompactClass c;
                c.kind = CompactKind::Type3;
                c.p = p;
                c.q = q;
                c.r = r;
                out.push_back(c);
            }
        }
    return out;
}

} // namespace edgering
