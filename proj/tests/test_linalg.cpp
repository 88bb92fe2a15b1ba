#include <doctest.h>

#include <random>

#include "ilab/linalg.hpp"
#include "support.hpp"

using namespace ilab;
using namespace testing_support;

namespace {

std::size_t naive_rank(RatMatrix m, std::size_t cols) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c] / m[r][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

}  // namespace

TEST_CASE("small kernels") {
    const RatMatrix m{{1, 2, 3}, {2, 4, 6}};
    const auto k = nullspace(m, 3);
    REQUIRE(k.size() == 2);
    CHECK(k[0] == RatVector{-2, 1, 0});
    CHECK(k[1] == RatVector{-3, 0, 1});
    CHECK(nullspace({{1, 0}, {0, 1}}, 2).empty());
    CHECK(nullspace({}, 3).size() == 3);
    CHECK(rank({{0, 0, 0}}, 3) == 0);
}

TEST_CASE("kernel vectors annihilate and have the right count") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = rng() % 8 + 1, cols = rng() % 8 + 1;
        RatMatrix m(rows, RatVector(cols));
        for (auto& row : m) {
            for (auto& x : row) x = random_small(rng, 4, 3);
        }
        // Plant dependent rows and sparse columns.
        if (rows > 2) m[rows - 1] = m[0];
        if (trial % 3 == 0) {
            for (auto& row : m) row[0] = 0;
        }
        const auto k = nullspace(m, cols);
        const auto r = naive_rank(m, cols);
        CHECK(rank(m, cols) == r);
        CHECK(k.size() == cols - r);
        for (const auto& v : k) {
            for (const auto& x : multiply(m, v)) CHECK(x == 0);
        }
        // Independence: the kernel vectors have full rank among themselves.
        if (!k.empty()) CHECK(naive_rank(k, cols) == k.size());
    }
}

TEST_CASE("bareiss keeps integer minors") {
    const RatMatrix m{{rational(1, 2), 1}, {3, 4}};
    const auto e = bareiss_echelon(m, 2);
    REQUIRE(e.rank() == 2);
    // Rows scaled to integers: (1, 2), (3, 4); second pivot is the 2x2 determinant.
    CHECK(e.rows[0][0] == 1);
    CHECK(abs(e.rows[1][1]) == 2);
}
