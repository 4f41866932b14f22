#include "support.hpp"

#include <doctest.h>

using namespace tfano;
using testing::random_matrix;

namespace {

// Row echelon with positive pivots and entries above each pivot in [0, pivot).
bool is_hermite(const IntMatrix& h) {
    std::size_t last_pivot = 0;
    bool first = true;
    bool zero_seen = false;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        std::size_t j = 0;
        while (j < h.cols() && h(i, j) == 0) ++j;
        if (j == h.cols()) {
            zero_seen = true;
            continue;
        }
        if (zero_seen) return false;
        if (!first && j <= last_pivot) return false;
        if (h(i, j) <= 0) return false;
        for (std::size_t k = 0; k < i; ++k)
            if (h(k, j) < 0 || h(k, j) >= h(i, j)) return false;
        last_pivot = j;
        first = false;
    }
    return true;
}

bool is_diagonal_chain(const IntMatrix& d) {
    const std::size_t n = std::min(d.rows(), d.cols());
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (i != j && d(i, j) != 0) return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (d(i, i) < 0) return false;
        if (i + 1 < n) {
            if (d(i, i) == 0 && d(i + 1, i + 1) != 0) return false;
            if (d(i, i) != 0 && d(i + 1, i + 1) % d(i, i) != 0) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("primitive vectors") {
    CHECK(is_primitive(IntVector{1, 2, 3}));
    CHECK_FALSE(is_primitive(IntVector{2, 4, 6}));
    CHECK_FALSE(is_primitive(IntVector{0, 0, 0}));
    CHECK(primitivize(IntVector{2, 4, 6}) == IntVector{1, 2, 3});
    CHECK(primitivize(IntVector{0, 0, 5}) == IntVector{0, 0, 1});
    CHECK(primitivize(IntVector{-3, 0, 3}) == IntVector{-1, 0, 1});
    CHECK_THROWS_AS((void)primitivize(IntVector{0, 0, 0}), LinearAlgebraError);
}

TEST_CASE("primitivize is idempotent") {
    std::mt19937 gen(11);
    std::uniform_int_distribution<int> d(-30, 30);
    for (int t = 0; t < 500; ++t) {
        IntVector v{d(gen), d(gen), d(gen)};
        if (v.is_zero()) continue;
        const IntVector p = primitivize(v);
        CHECK(is_primitive(p));
        CHECK(primitivize(p) == p);
        CHECK(content(v) * p == v);
    }
}

TEST_CASE("hermite form examples") {
    const IntMatrix id = IntMatrix::identity(3);
    CHECK(hnf(id).h == id);
    CHECK(hnf(id).u == id);

    const IntMatrix d{{2, 0, 0}, {0, 3, 0}, {0, 0, 5}};
    CHECK(hnf(d).h == d);
    CHECK(hnf(d).u == id);

    const IntMatrix m{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
    const HermiteForm h = hnf(m);
    CHECK(abs(det(h.h)) == 2);
    CHECK(h.u * m == h.h);
    CHECK(is_hermite(h.h));
}

TEST_CASE("smith form examples") {
    const SmithForm s = snf(IntMatrix{{2, 0, 0}, {0, 3, 0}, {0, 0, 5}});
    CHECK(s.d == IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 30}});

    const IntMatrix m{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
    const SmithForm t = snf(m);
    CHECK(t.d == IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 2}});
    CHECK(t.u * m * t.v == t.d);

    const SmithForm i = snf(IntMatrix::identity(3));
    CHECK(i.d == IntMatrix::identity(3));
}

TEST_CASE("determinants") {
    CHECK(det(IntMatrix::identity(3)) == 1);
    CHECK(det(IntMatrix{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}) == -2);
    CHECK(det(IntMatrix{{1, 2, 3}, {4, 5, 6}, {1, 2, 3}}) == 0);
    CHECK(det(IntMatrix{{0, 1}, {1, 0}}) == -1);
}

TEST_CASE("hermite form invariants on random matrices") {
    std::mt19937 gen(21);
    for (int t = 0; t < 300; ++t) {
        const std::size_t rows = 1 + t % 5;
        const std::size_t cols = 1 + (t / 5) % 4;
        const IntMatrix m = random_matrix(gen, rows, cols, 9);
        const HermiteForm h = hnf(m);
        CHECK(is_unimodular(h.u));
        CHECK(h.u * m == h.h);
        CHECK(is_hermite(h.h));
        CHECK(rank(m) == rank(h.h));
    }
}

TEST_CASE("smith form invariants on random matrices") {
    std::mt19937 gen(22);
    for (int t = 0; t < 300; ++t) {
        const std::size_t rows = 1 + t % 4;
        const std::size_t cols = 1 + (t / 4) % 4;
        const IntMatrix m = random_matrix(gen, rows, cols, 12);
        const SmithForm s = snf(m);
        CHECK(is_unimodular(s.u));
        CHECK(is_unimodular(s.v));
        CHECK(s.u * m * s.v == s.d);
        CHECK(is_diagonal_chain(s.d));
        if (rows == cols) CHECK(abs(det(s.d)) == abs(det(m)));
    }
}

TEST_CASE("bareiss agrees with cofactor expansion") {
    std::mt19937 gen(23);
    for (int t = 0; t < 300; ++t) {
        const IntMatrix m = random_matrix(gen, 3, 3, 50);
        CHECK(det(m) == det3(m));
    }
}

TEST_CASE("unimodular inverse and left solve") {
    std::mt19937 gen(24);
    for (int t = 0; t < 100; ++t) {
        const IntMatrix u = testing::random_unimodular(gen);
        CHECK(u * unimodular_inverse(u) == IntMatrix::identity(3));
        const IntMatrix a = random_matrix(gen, 3, 3, 6);
        if (det(a) == 0) continue;
        const auto x = solve_left_integral(a, u * a);
        REQUIRE(x.has_value());
        CHECK(*x == u);
    }
    // x * diag(2,2,2) == identity has no integral solution.
    CHECK_FALSE(solve_left_integral(IntMatrix{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}, IntMatrix::identity(3)).has_value());
    CHECK_THROWS_AS((void)unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}), LinearAlgebraError);
}

TEST_CASE("rationals") {
    CHECK(to_string(Rational(81, 2)) == "81/2");
    CHECK(to_string(Rational(48, 1)) == "48");
    Rational q(-6, 4);
    q.canonicalize();
    CHECK(to_string(q) == "-3/2");
    CHECK(tfano::floor(q) == -2);
    CHECK(tfano::ceil(q) == -1);
    CHECK(tfano::floor(Rational(7, 1)) == 7);
}
