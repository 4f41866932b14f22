#pragma once

// Exhaustive search for terminal Fano polytopes (3D) and empty lattice
// polygons (2D) with vertices in a cube [-B, B]^d, deduplicated by normal form.

#include "tfano/exact_linear.hpp"
#include "tfano/polytope.hpp"

#include <cstddef>
#include <set>
#include <vector>

namespace tfano {

struct EnumConfig {
    int box_bound = 1;
    int dim = 3;
    int max_vertices = 14;
    int jobs = 1;

    void validate() const;
};

struct EnumStats {
    std::size_t nodes = 0;      // feasible partial vertex sets visited
    std::size_t leaves = 0;     // complete polytopes found before deduplication
    std::size_t box_orbits = 0; // after reduction by the symmetries of the box
};

/// GL(3,Z) normal forms of all terminal Fano polytopes with vertices in the box.
[[nodiscard]] std::set<IntMatrix> enumerate_terminal_fano(const EnumConfig& cfg, EnumStats* stats = nullptr);

/// Affine normal forms of all lattice polygons in the box whose only lattice
/// points are their vertices.
[[nodiscard]] std::set<IntMatrix> enumerate_empty_polygons(const EnumConfig& cfg, EnumStats* stats = nullptr);

/// Polytope whose vertices are the rows of a normal form.
[[nodiscard]] LatticePolytope polytope_from_rows(const IntMatrix& rows);

}  // namespace tfano
