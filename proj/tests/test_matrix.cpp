#include <catch2/catch_amalgamated.hpp>

#include <iwcontract/matrix.hpp>
#include <iwcontract/prng.hpp>

using namespace iwcontract;

namespace {

RatMatrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rat(rng.next_in(lo, hi));
    return m;
}

// Independent rank oracle: plain rational Gaussian elimination.
std::size_t rank_naive(RatMatrix m) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(r, piv);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, col) == 0) continue;
            Rat f = m(i, col) / m(r, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

// Independent determinant oracle: cofactor expansion.
Rat det_cofactor(const RatMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    Rat acc(0);
    for (std::size_t k = 0; k < n; ++k) {
        if (m(0, k) == 0) continue;
        RatMatrix sub(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == k) continue;
                sub(i - 1, cj++) = m(i, j);
            }
        }
        Rat term = m(0, k) * det_cofactor(sub);
        acc += (k % 2 == 0) ? term : -term;
    }
    return acc;
}

} // namespace

TEST_CASE("fraction-free rank agrees with naive elimination") {
    SplitMix64 rng(101);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = 1 + rng.next_in(0, 6), cols = 1 + rng.next_in(0, 6);
        RatMatrix m = random_matrix(rng, rows, cols, -5, 5);
        REQUIRE(rank(m) == rank_naive(m));
    }
}

TEST_CASE("rank of rationally scaled rows is unchanged") {
    SplitMix64 rng(102);
    for (int trial = 0; trial < 20; ++trial) {
        RatMatrix m = random_matrix(rng, 4, 5, -9, 9);
        RatMatrix scaled = m;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            Rat c = rat(rng.next_in(1, 7), rng.next_in(1, 7));
            for (std::size_t j = 0; j < m.cols(); ++j) scaled(i, j) *= c;
        }
        REQUIRE(rank(m) == rank(scaled));
    }
}

TEST_CASE("rank detects engineered rank deficiency") {
    SplitMix64 rng(103);
    for (int trial = 0; trial < 20; ++trial) {
        // 5x4 matrix built from 2 random rows and their combinations.
        RatMatrix base = random_matrix(rng, 2, 4, -9, 9);
        RatMatrix m(5, 4);
        for (std::size_t i = 0; i < 5; ++i) {
            Rat a(rng.next_in(-3, 3)), b(rng.next_in(-3, 3));
            for (std::size_t j = 0; j < 4; ++j) m(i, j) = a * base(0, j) + b * base(1, j);
        }
        REQUIRE(rank(m) <= 2);
    }
}

TEST_CASE("determinant agrees with cofactor expansion") {
    SplitMix64 rng(104);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t n = 1 + rng.next_in(0, 4);
        RatMatrix m = random_matrix(rng, n, n, -6, 6);
        REQUIRE(determinant(m) == det_cofactor(m));
    }
}

TEST_CASE("solve and inverse are exact") {
    SplitMix64 rng(105);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 2 + rng.next_in(0, 3);
        RatMatrix m = random_matrix(rng, n, n, -9, 9);
        if (determinant(m) == 0) continue;
        std::vector<Rat> b(n);
        for (auto& v : b) v = Rat(rng.next_in(-9, 9));
        auto x = solve(m, b);
        REQUIRE(x.has_value());
        for (std::size_t i = 0; i < n; ++i) {
            Rat acc(0);
            for (std::size_t j = 0; j < n; ++j) acc += m(i, j) * (*x)[j];
            REQUIRE(acc == b[i]);
        }
        RatMatrix inv = inverse(m);
        REQUIRE(m * inv == RatMatrix::identity(n));
    }
}

TEST_CASE("singular systems are reported") {
    RatMatrix m(2, 2);
    m(0, 0) = 1;
    m(0, 1) = 2;
    m(1, 0) = 2;
    m(1, 1) = 4;
    REQUIRE(determinant(m) == 0);
    REQUIRE_FALSE(solve(m, {Rat(1), Rat(1)}).has_value());
    REQUIRE_THROWS_AS(inverse(m), Error);
    REQUIRE(kernel_dimension(m) == 1);
}
