#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "edgering/homology.hpp"

using namespace edgering;

namespace {

std::uint64_t face(std::initializer_list<int> vs) {
    std::uint64_t m = 0;
    for (int v : vs) m |= 1ull << v;
    return m;
}

std::vector<long long> ranks(const std::vector<std::uint64_t>& facets, long long ch) {
    return SimplicialComplex::from_facets(facets).reduced_homology(ch);
}

} // namespace

TEST(Rank, SmallMatrices) {
    using homology_detail::matrix_rank;
    EXPECT_EQ(matrix_rank({{1, 2}, {2, 4}}, 0), 1);
    EXPECT_EQ(matrix_rank({{1, 0}, {0, 1}}, 0), 2);
    EXPECT_EQ(matrix_rank({{0, 0}, {0, 0}}, 0), 0);
    // rank drops mod 2 but not over Q
    EXPECT_EQ(matrix_rank({{2}}, 0), 1);
    EXPECT_EQ(matrix_rank({{2}}, 2), 0);
    // no unit pivot anywhere: exercises the big-integer path
    EXPECT_EQ(matrix_rank({{2, 3}, {3, 5}}, 0), 2);
    EXPECT_EQ(matrix_rank({{2, 4}, {6, 12}}, 0), 1);
}

namespace {

// reference rank over exact rationals (tiny inputs, so long long fractions
// cannot overflow)
long long rank_reference(std::vector<std::vector<long long>> num) {
    size_t rows = num.size();
    size_t cols = rows ? num[0].size() : 0;
    std::vector<std::vector<long long>> den(rows, std::vector<long long>(cols, 1));
    auto reduce = [](long long& n, long long& d) {
        long long g = std::gcd(n, d);
        if (g > 1) { n /= g; d /= g; }
        if (d < 0) { n = -n; d = -d; }
    };
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t p = rank;
        while (p < rows && num[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(num[rank], num[p]);
        std::swap(den[rank], den[p]);
        for (size_t r = rank + 1; r < rows; ++r) {
            if (num[r][c] == 0) continue;
            // row_r -= (a_rc / a_pc) * row_p
            long long fn = num[r][c] * den[rank][c];
            long long fd = den[r][c] * num[rank][c];
            for (size_t k = c; k < cols; ++k) {
                long long n = num[r][k] * fd * den[rank][k] -
                              fn * num[rank][k] * den[r][k];
                long long d = den[r][k] * fd * den[rank][k];
                reduce(n, d);
                num[r][k] = n;
                den[r][k] = d;
            }
        }
        ++rank;
    }
    return static_cast<long long>(rank);
}

} // namespace

TEST(Rank, RandomDifferentialAgainstFractionElimination) {
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> entry(-3, 3), dims(1, 6);
    for (int trial = 0; trial < 200; ++trial) {
        size_t r = dims(rng), c = dims(rng);
        homology_detail::Matrix m(r, std::vector<long long>(c));
        for (auto& row : m)
            for (auto& x : row) x = entry(rng);
        // plant a dependent row now and then
        if (r >= 2 && trial % 3 == 0)
            for (size_t k = 0; k < c; ++k) m[r - 1][k] = m[0][k] - 2 * m[r / 2][k];
        EXPECT_EQ(homology_detail::matrix_rank(m, 0), rank_reference(m)) << trial;
    }
}

TEST(Rank, OverflowFallsBackToExactArithmetic) {
    long long big = 1ll << 62;
    homology_detail::Matrix m = {{1, big}, {-1, big}};
    EXPECT_EQ(homology_detail::matrix_rank(m, 0), 2);
    homology_detail::Matrix s = {{1, big}, {-1, -big}};
    EXPECT_EQ(homology_detail::matrix_rank(s, 0), 1);
}

TEST(Rank, AgreesWithModularOnRandomSigns) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> entry(-1, 1);
    for (int trial = 0; trial < 20; ++trial) {
        homology_detail::Matrix m(6, std::vector<long long>(7));
        for (auto& row : m)
            for (auto& x : row) x = entry(rng);
        long long rq = homology_detail::matrix_rank(m, 0);
        long long rp = homology_detail::matrix_rank(m, 32003);
        EXPECT_EQ(rq, rp); // 32003 never divides the tiny minors involved here
    }
}

TEST(Homology, PointAndEmptyFace) {
    auto h = ranks({face({0})}, 0);
    // contractible: no reduced homology anywhere
    for (auto x : h) EXPECT_EQ(x, 0);
    auto e = ranks({0ull}, 0); // just the empty face
    EXPECT_EQ(e[0], 1);        // dimension -1
}

TEST(Homology, TwoPointsAndCircle) {
    auto two = ranks({face({0}), face({1})}, 0);
    EXPECT_EQ(two[1], 1); // H~_0
    auto circle = ranks({face({0, 1}), face({1, 2}), face({0, 2})}, 0);
    EXPECT_EQ(circle[1], 0);
    EXPECT_EQ(circle[2], 1); // H~_1
}

TEST(Homology, SphereBoundaries) {
    // boundary of the k-simplex is a (k-1)-sphere
    for (int k = 2; k <= 5; ++k) {
        std::vector<std::uint64_t> facets;
        std::uint64_t full = (1ull << (k + 1)) - 1;
        for (int v = 0; v <= k; ++v) facets.push_back(full & ~(1ull << v));
        auto h = ranks(facets, 0);
        for (size_t d = 0; d < h.size(); ++d)
            EXPECT_EQ(h[d], d == static_cast<size_t>(k) ? 1 : 0) << "k=" << k << " d=" << d;
    }
}

TEST(Homology, ProjectivePlaneDependsOnCharacteristic) {
    // minimal 6-vertex triangulation of the real projective plane
    // (10 triangles through all 15 edges of K6, Euler characteristic 1)
    std::vector<std::uint64_t> facets = {
        face({0, 1, 2}), face({0, 2, 3}), face({0, 3, 4}), face({0, 4, 5}),
        face({0, 1, 5}), face({1, 2, 4}), face({2, 4, 5}), face({2, 3, 5}),
        face({1, 3, 5}), face({1, 3, 4})};
    auto hq = ranks(facets, 0);
    EXPECT_EQ(hq[2], 0); // H~_1 vanishes over Q
    EXPECT_EQ(hq[3], 0);
    auto h2 = ranks(facets, 2);
    EXPECT_EQ(h2[2], 1); // two-torsion shows up over F_2
    EXPECT_EQ(h2[3], 1);
    auto hp = ranks(facets, 32003);
    EXPECT_EQ(hp, hq);
}

TEST(Homology, SevenVertexTorus) {
    // cyclic triangulation: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7
    std::vector<std::uint64_t> facets;
    for (int i = 0; i < 7; ++i) {
        facets.push_back(face({i, (i + 1) % 7, (i + 3) % 7}));
        facets.push_back(face({i, (i + 2) % 7, (i + 3) % 7}));
    }
    for (long long ch : {0ll, 2ll, 32003ll}) {
        auto h = ranks(facets, ch);
        EXPECT_EQ(h[1], 0);
        EXPECT_EQ(h[2], 2) << "characteristic " << ch;
        EXPECT_EQ(h[3], 1);
    }
}
