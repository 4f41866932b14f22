#pragma once

#include "tfano/exact_linear.hpp"
#include "tfano/polytope.hpp"
#include "tfano/symmetry.hpp"

#include <random>
#include <vector>

namespace testing {

using namespace tfano;

inline std::vector<IntVector> octahedron_points() {
    return {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
}

inline std::vector<IntVector> simplex_points() { return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}; }

// conv(e1, e2, -e1-e2, e3, -e3)
inline std::vector<IntVector> p1xp2_points() { return {{1, 0, 0}, {0, 1, 0}, {-1, -1, 0}, {0, 0, 1}, {0, 0, -1}}; }

inline std::vector<IntVector> ring47_points() {
    return {{1, 1, 0}, {-1, -1, 0}, {1, 0, 1}, {-1, 0, -1}, {0, 1, 1}, {0, -1, -1}};
}

// Product of random elementary row operations, swaps and sign flips.
inline IntMatrix random_unimodular(std::mt19937& gen, std::size_t n = 3, int steps = 12) {
    IntMatrix u = IntMatrix::identity(n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    std::uniform_int_distribution<int> kind(0, 5);
    for (int s = 0; s < steps; ++s) {
        const std::size_t i = pick(gen);
        const std::size_t j = pick(gen);
        const int k = kind(gen);
        if (k == 0) {
            u.swap_rows(i, j);
        } else if (k == 1) {
            u.row(i) = -u.row(i);
        } else if (i != j) {
            u.row(i) = u.row(i) + Integer(coef(gen)) * u.row(j);
        }
    }
    return u;
}

inline IntMatrix random_matrix(std::mt19937& gen, std::size_t rows, std::size_t cols, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(gen);
    return m;
}

// Independent count of the invariant class rank by averaging characters:
// (1/|G|) * sum over g of (#fixed vertices - trace g).
inline Integer burnside_rank(const LatticePolytope& p, const PointGroup& g) {
    Integer total = 0;
    for (const auto& a : g.elements) {
        for (const auto& v : p.vertices())
            if (a * v == v) total += 1;
        for (std::size_t i = 0; i < a.rows(); ++i) total -= a(i, i);
    }
    const Integer order = static_cast<unsigned long>(g.order());
    if (total % order != 0) return -1;
    return total / order;
}

}  // namespace testing
