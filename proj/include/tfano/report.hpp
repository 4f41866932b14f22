#pragma once

#include "tfano/exact_linear.hpp"
#include "tfano/polytope.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace tfano {

/// Everything the CLI reports about a terminal Fano polytope.
struct InvariantReport {
    std::string id;
    std::vector<IntVector> vertices;
    PropertyFlags flags;
    int n_vertices = 0;
    int rk_cl = 0;
    int rk_pic = 0;
    Rational degree;
    Integer genus;
    std::size_t aut_order = 0;
    int n_orbits = 0;   // under the full automorphism group
    int fixed_dim = 0;  // dimension of the invariant subspace of that group
    int inv_cl_rank = 0;
    bool is_gfano = false;
};

/// Throws NotFanoError unless P is a 3-dimensional Fano polytope.
[[nodiscard]] InvariantReport compute_report(const LatticePolytope& p, std::string id = {});

[[nodiscard]] nlohmann::json flags_to_json(const PropertyFlags& f);
[[nodiscard]] nlohmann::json report_to_json(const InvariantReport& r);

}  // namespace tfano
