#include "tfano/report.hpp"

#include "tfano/symmetry.hpp"
#include "tfano/toric.hpp"

namespace tfano {

namespace {

nlohmann::json vector_to_json(const IntVector& v) {
    auto arr = nlohmann::json::array();
    for (const auto& x : v) {
        if (x.fits_slong_p())
            arr.push_back(x.get_si());
        else
            arr.push_back(x.get_str());
    }
    return arr;
}

nlohmann::json integer_to_json(const Integer& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

}  // namespace

InvariantReport compute_report(const LatticePolytope& p, std::string id) {
    InvariantReport r;
    r.id = std::move(id);
    r.vertices = p.vertices();
    r.flags = classify(p);
    if (p.dim() != 3 || !r.flags.is_fano) throw NotFanoError();
    r.n_vertices = static_cast<int>(p.num_vertices());
    r.rk_cl = class_group_rank(p);
    r.rk_pic = picard_rank(p);
    r.degree = anticanonical_degree(p);
    r.genus = genus(p);
    const PointGroup g = automorphism_group(p);
    r.aut_order = g.order();
    r.n_orbits = static_cast<int>(vertex_orbits(p, g).size());
    r.fixed_dim = fixed_subspace_dim(g);
    r.inv_cl_rank = r.n_orbits - r.fixed_dim;
    r.is_gfano = r.inv_cl_rank == 1;
    return r;
}

nlohmann::json flags_to_json(const PropertyFlags& f) {
    return {{"fano", f.is_fano},           {"terminal", f.is_terminal},   {"canonical", f.is_canonical},
            {"reflexive", f.is_reflexive}, {"simplicial", f.is_simplicial}, {"regular", f.is_regular}};
}

nlohmann::json report_to_json(const InvariantReport& r) {
    auto verts = nlohmann::json::array();
    for (const auto& v : r.vertices) verts.push_back(vector_to_json(v));
    return {{"id", r.id},
            {"vertices", verts},
            {"flags", flags_to_json(r.flags)},
            {"rk_cl", r.rk_cl},
            {"rk_pic", r.rk_pic},
            {"degree", to_string(r.degree)},
            {"genus", integer_to_json(r.genus)},
            {"aut_order", r.aut_order},
            {"n_orbits", r.n_orbits},
            {"fixed_dim", r.fixed_dim},
            {"inv_cl_rank", r.inv_cl_rank},
            {"is_gfano", r.is_gfano}};
}

}  // namespace tfano
