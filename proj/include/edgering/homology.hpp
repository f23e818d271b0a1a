#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "edgering/errors.hpp"

namespace edgering {

namespace homology_detail {

using Matrix = std::vector<std::vector<long long>>;

inline long long rank_mod_p(Matrix m, long long p) {
    auto norm = [p](long long x) { return ((x % p) + p) % p; };
    auto inv = [p](long long a) {
        // p is prime; Fermat
        long long r = 1, b = ((a % p) + p) % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t pivot = rank;
        while (pivot < rows && norm(m[pivot][c]) == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        long long pi = inv(norm(m[rank][c]));
        for (size_t r = rank + 1; r < rows; ++r) {
            long long f = norm(m[r][c]) * pi % p;
            if (f == 0) continue;
            for (size_t k = c; k < cols; ++k) m[r][k] = norm(m[r][k] - f * norm(m[rank][k]) % p);
        }
        ++rank;
    }
    return static_cast<long long>(rank);
}

inline long long rank_exact_mpz(const Matrix& m0) {
    std::vector<std::vector<mpz_class>> m(m0.size());
    for (size_t r = 0; r < m0.size(); ++r) {
        m[r].reserve(m0[r].size());
        for (long long x : m0[r]) m[r].emplace_back(static_cast<long>(x));
    }
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    size_t rank = 0;
    mpz_class prev = 1; // Bareiss fraction-free elimination
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (size_t r = rank + 1; r < rows; ++r) {
            for (size_t k = c + 1; k < cols; ++k) {
                m[r][k] = (m[rank][c] * m[r][k] - m[r][c] * m[rank][k]) / prev;
            }
            m[r][c] = 0;
        }
        prev = m[rank][c];
        ++rank;
    }
    return static_cast<long long>(rank);
}

// Rank over the rationals. Unit pivots keep everything in long long; if the
// integer updates would overflow, the whole matrix is redone in exact
// arbitrary precision.
inline long long rank_exact_q(const Matrix& m0) {
    Matrix m = m0;
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    size_t rank = 0;
    size_t next_col = 0;
    std::vector<bool> row_used(rows, false);
    for (; next_col < cols; ++next_col) {
        // unit pivot pass
        size_t pr = rows;
        for (size_t r = 0; r < rows; ++r)
            if (!row_used[r] && (m[r][next_col] == 1 || m[r][next_col] == -1)) { pr = r; break; }
        if (pr == rows) {
            bool nonzero = false;
            for (size_t r = 0; r < rows; ++r)
                if (!row_used[r] && m[r][next_col] != 0) { nonzero = true; break; }
            if (!nonzero) continue;
            // no unit pivot available: finish the remainder in exact big ints
            Matrix rest;
            for (size_t r = 0; r < rows; ++r) {
                if (row_used[r]) continue;
                rest.emplace_back(m[r].begin() + static_cast<long>(next_col), m[r].end());
            }
            return static_cast<long long>(rank) + rank_exact_mpz(rest);
        }
        row_used[pr] = true;
        ++rank;
        long long piv = m[pr][next_col];
        for (size_t r = 0; r < rows; ++r) {
            if (row_used[r] || m[r][next_col] == 0) continue;
            long long f = m[r][next_col] * piv; // piv in {1,-1}
            for (size_t k = next_col; k < cols; ++k) {
                long long prod;
                long long upd;
                if (__builtin_mul_overflow(f, m[pr][k], &prod) ||
                    __builtin_sub_overflow(m[r][k], prod, &upd))
                    return rank_exact_mpz(m0);
                m[r][k] = upd;
            }
        }
    }
    return static_cast<long long>(rank);
}

inline long long matrix_rank(const Matrix& m, long long characteristic) {
    if (m.empty() || m[0].empty()) return 0;
    return characteristic == 0 ? rank_exact_q(m) : rank_mod_p(m, characteristic);
}

} // namespace homology_detail

/// Simplicial complex on vertices 0..63 given by its faces' bitmasks; the
/// empty face is always present (augmented chain complex).
class SimplicialComplex {
public:
    /// Closure of the given facets under taking subsets.
    static SimplicialComplex from_facets(const std::vector<std::uint64_t>& facets,
                                         std::size_t max_faces = 2'000'000) {
        SimplicialComplex sc;
        std::set<std::uint64_t> seen{0};
        std::vector<std::uint64_t> stack(facets.begin(), facets.end());
        for (auto f : facets) seen.insert(f);
        while (!stack.empty()) {
            std::uint64_t f = stack.back();
            stack.pop_back();
            if (seen.size() > max_faces)
                throw refused_error("simplicial complex too large");
            for (std::uint64_t rem = f; rem; rem &= rem - 1) {
                std::uint64_t sub = f & ~(rem & -rem);
                if (seen.insert(sub).second) stack.push_back(sub);
            }
        }
        sc.faces_.assign(seen.begin(), seen.end());
        return sc;
    }

    std::size_t face_count() const { return faces_.size(); }

    int dimension() const {
        int d = -1;
        for (auto f : faces_) d = std::max(d, __builtin_popcountll(f) - 1);
        return d;
    }

    /// Ranks of the reduced homology groups in dimensions -1..dimension()
    /// over Q (characteristic 0) or F_p. Index i of the result holds the
    /// rank in dimension i-1.
    std::vector<long long> reduced_homology(long long characteristic) const {
        int dim = dimension();
        // faces grouped by dimension, with positions for column lookup
        std::vector<std::vector<std::uint64_t>> by_dim(dim + 2);
        std::vector<std::map<std::uint64_t, int>> pos(dim + 2);
        for (auto f : faces_) {
            int d = __builtin_popcountll(f) - 1;
            pos[d + 1][f] = static_cast<int>(by_dim[d + 1].size());
            by_dim[d + 1].push_back(f);
        }
        // boundary_d: dimension d -> d-1, stored at index d+1
        std::vector<long long> rank(dim + 3, 0);
        for (int d = 0; d <= dim; ++d) {
            const auto& hi = by_dim[d + 1];
            const auto& lo_pos = pos[d];
            if (hi.empty() || lo_pos.empty()) continue;
            homology_detail::Matrix m(hi.size(),
                                      std::vector<long long>(lo_pos.size(), 0));
            for (size_t r = 0; r < hi.size(); ++r) {
                std::uint64_t f = hi[r];
                int sign = 1;
                for (std::uint64_t rem = f; rem; rem &= rem - 1) {
                    std::uint64_t sub = f & ~(rem & -rem);
                    m[r][lo_pos.at(sub)] += sign;
                    sign = -sign;
                }
            }
            rank[d + 1] = homology_detail::matrix_rank(m, characteristic);
        }
        std::vector<long long> h(dim + 2, 0);
        for (int d = -1; d <= dim; ++d) {
            long long faces_d = static_cast<long long>(by_dim[d + 1].size());
            h[d + 1] = faces_d - rank[d + 1] - rank[d + 2];
        }
        return h;
    }

private:
    std::vector<std::uint64_t> faces_;
};

} // namespace edgering
