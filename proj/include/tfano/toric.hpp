#pragma once

// Invariants of the toric Fano threefold attached to a Fano polytope through
// its face fan, and constructors for weighted projective spaces and finite
// lattice quotients.

#include "tfano/exact_linear.hpp"
#include "tfano/polytope.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace tfano {

class NotFanoError : public std::invalid_argument {
public:
    NotFanoError() : std::invalid_argument("not a Fano polytope") {}
    using std::invalid_argument::invalid_argument;
};

using RationalVector = std::vector<Rational>;

/// Polytope in the rational span of the character lattice.
struct RationalPolytope {
    std::vector<RationalVector> vertices;
    /// The facet for vertex v of the primal polytope is {m : <m, v> == -1};
    /// normals are the primal vertices (lattice vectors of N), offsets 1.
    std::vector<IntVector> facet_normals;
    std::vector<Rational> facet_offsets;
};

/// {m : <m, v> >= -1 for all vertices v}. Throws when the origin is not
/// strictly inside P.
[[nodiscard]] RationalPolytope dual_polytope(const LatticePolytope& p);

/// Dual of a reflexive polytope, as a lattice polytope.
[[nodiscard]] LatticePolytope dual_lattice_polytope(const LatticePolytope& p);

/// (-K)^3 = 3! vol(P^*).
[[nodiscard]] Rational anticanonical_degree(const LatticePolytope& p);

/// Number of lattice points of the dual polytope.
[[nodiscard]] Integer dual_lattice_point_count(const LatticePolytope& p);

/// g = dim|-K| - 1 = #(P^* cap M) - 2.
[[nodiscard]] Integer genus(const LatticePolytope& p);

[[nodiscard]] int class_group_rank(const LatticePolytope& p);
[[nodiscard]] int picard_rank(const LatticePolytope& p);

/// Fan polytope of P(w0, w1, w2, w3). Weights must be positive and well formed.
[[nodiscard]] LatticePolytope wps_polytope(const std::array<long, 4>& weights);

/// The same fan read in the superlattice N + Z g, where g has order k
/// modulo N. Each ray is replaced by its primitive generator in the
/// superlattice and coordinates are taken in an HNF basis of it. The result
/// is not re-checked for terminality.
[[nodiscard]] LatticePolytope lattice_quotient(const LatticePolytope& p, const RationalVector& g, long k);

}  // namespace tfano
