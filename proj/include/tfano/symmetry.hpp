#pragma once

// Lattice symmetries of polytopes: automorphism groups, vertex orbits, the
// invariant part of the class group, and a GL(n,Z) normal form.

#include "tfano/exact_linear.hpp"
#include "tfano/polytope.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace tfano {

class SymmetryError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A finite group of unimodular matrices, stored as its full element list.
/// The identity is always elements.front().
struct PointGroup {
    std::vector<IntMatrix> elements;

    [[nodiscard]] std::size_t order() const { return elements.size(); }
    [[nodiscard]] bool contains(const IntMatrix& a) const;
};

struct OrbitPartition {
    /// Each orbit is a sorted list of vertex indices; orbits are ordered by
    /// their smallest index.
    std::vector<std::vector<std::size_t>> orbits;

    [[nodiscard]] std::size_t size() const { return orbits.size(); }
};

/// Closure of the generators under multiplication. Throws if the generated
/// group exceeds max_order elements.
[[nodiscard]] PointGroup generate_group(const std::vector<IntMatrix>& generators, std::size_t max_order = 100000);

/// Permutation of vertex indices induced by a, or nullopt if a does not map
/// the vertex set onto itself.
[[nodiscard]] std::optional<std::vector<std::size_t>> vertex_permutation(const LatticePolytope& p, const IntMatrix& a);

/// All A in GL(n,Z) with A(vertices) == vertices.
[[nodiscard]] PointGroup automorphism_group(const LatticePolytope& p);

[[nodiscard]] OrbitPartition vertex_orbits(const LatticePolytope& p, const PointGroup& g);

/// Dimension of {x : A x == x for all A in g}.
[[nodiscard]] int fixed_subspace_dim(const PointGroup& g);

/// rk Cl(X)^G: ray orbits minus the dimension of the invariant characters.
[[nodiscard]] int invariant_class_rank(const LatticePolytope& p, const PointGroup& g);

/// Whether the full lattice automorphism group leaves a rank one invariant
/// class group. Invariants under a subgroup contain the invariants under the
/// whole group, so no subgroup can do better.
[[nodiscard]] bool is_gfano(const LatticePolytope& p);

[[nodiscard]] bool is_vertex_transitive(const LatticePolytope& p);

/// Canonical representative of the GL(n,Z) class of P: rows are the
/// transformed vertices in lexicographic order.
[[nodiscard]] IntMatrix normal_form(const LatticePolytope& p);

/// Normal form up to affine unimodular maps (translations included).
[[nodiscard]] IntMatrix affine_normal_form(const LatticePolytope& p);

}  // namespace tfano
