#pragma once

// Exact convex hulls of lattice points in dimensions 2 and 3, lattice point
// enumeration and the Fano polytope predicates.

#include "tfano/exact_linear.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace tfano {

/// Raised when the input points do not span the ambient space.
class DegeneratePolytopeError : public std::invalid_argument {
public:
    DegeneratePolytopeError() : std::invalid_argument("polytope not full-dimensional") {}
};

/// A facet {x : <normal, x> == -offset}; the polytope lies in
/// <normal, x> >= -offset. The normal is primitive and points inward.
struct Facet {
    IntVector normal;
    Integer offset;
    /// Indices into LatticePolytope::vertices(). In 3D they run around the
    /// facet polygon in cyclic order; in 2D they are the two edge endpoints.
    std::vector<std::size_t> vertices;

    /// <normal, x> + offset; zero on the facet, positive inside.
    [[nodiscard]] Integer height(const IntVector& x) const { return dot(normal, x) + offset; }
};

/// Full-dimensional lattice polytope in Z^2 or Z^3, stored with both its
/// vertex list (sorted lexicographically) and its facet inequalities.
/// In 2D the facets are listed counterclockwise, so consecutive facets share
/// a vertex.
class LatticePolytope {
public:
    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] const std::vector<IntVector>& vertices() const { return vertices_; }
    [[nodiscard]] const std::vector<Facet>& facets() const { return facets_; }
    [[nodiscard]] std::size_t num_vertices() const { return vertices_.size(); }

    [[nodiscard]] bool contains(const IntVector& x) const;
    [[nodiscard]] bool contains_strictly(const IntVector& x) const;

    /// Image under x -> a * x for a unimodular a.
    [[nodiscard]] LatticePolytope transformed(const IntMatrix& a) const;

    friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
        return a.vertices_ == b.vertices_;
    }

    friend LatticePolytope convex_hull(const std::vector<IntVector>& points);

private:
    std::size_t dim_ = 0;
    std::vector<IntVector> vertices_;
    std::vector<Facet> facets_;
};

struct PropertyFlags {
    bool is_fano = false;
    bool is_terminal = false;
    bool is_canonical = false;
    bool is_reflexive = false;
    bool is_simplicial = false;
    bool is_regular = false;

    friend bool operator==(const PropertyFlags&, const PropertyFlags&) = default;
};

struct PolygonCounts {
    Integer twice_area;
    Integer interior;
    Integer boundary;
};

/// Convex hull of a full-dimensional point set in Z^2 or Z^3.
/// Throws DegeneratePolytopeError for lower-dimensional input.
[[nodiscard]] LatticePolytope convex_hull(const std::vector<IntVector>& points);

/// All lattice points of P, sorted lexicographically.
[[nodiscard]] std::vector<IntVector> lattice_points(const LatticePolytope& p);
[[nodiscard]] std::vector<IntVector> interior_lattice_points(const LatticePolytope& p);

[[nodiscard]] PropertyFlags classify(const LatticePolytope& p);

/// Vertex count of each facet, sorted ascending.
[[nodiscard]] std::vector<std::size_t> facet_vertex_counts(const LatticePolytope& p);

/// Shoelace area and Pick-style counts of a lattice polygon.
[[nodiscard]] PolygonCounts polygon_counts(const LatticePolytope& polygon);

/// Calls visit(x) for every integer point of the box [lo, hi] in
/// lexicographic order.
template <typename Visit>
void scan_box(const IntVector& lo, const IntVector& hi, Visit&& visit) {
    const std::size_t d = lo.size();
    for (std::size_t i = 0; i < d; ++i)
        if (lo[i] > hi[i]) return;
    IntVector x = lo;
    for (;;) {
        visit(static_cast<const IntVector&>(x));
        std::size_t i = d;
        while (i > 0) {
            --i;
            if (x[i] < hi[i]) {
                ++x[i];
                break;
            }
            x[i] = lo[i];
            if (i == 0) return;
        }
        if (d == 0) return;
    }
}

}  // namespace tfano
