#include "tfano/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace tfano {

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

// Ordered d-tuples of vertices sharing a facet, restricted to the ones with
// the smallest nonzero |det|. The selection only uses data preserved by
// GL(n,Z), so minimizing over it gives a class invariant.
std::vector<std::vector<std::size_t>> canonical_frames(const std::vector<IntVector>& verts,
                                                       const std::vector<Facet>& facets, std::size_t dim) {
    std::set<std::vector<std::size_t>> frames;
    Integer best = 0;
    std::vector<std::size_t> tuple(dim);
    for (const auto& f : facets) {
        const auto& fv = f.vertices;
        auto consider = [&]() {
            std::vector<IntVector> cols;
            for (auto i : tuple) cols.push_back(verts[i]);
            Integer d = abs(det(IntMatrix::from_columns(cols)));
            if (d == 0) return;
            if (best == 0 || d < best) {
                best = d;
                frames.clear();
            }
            if (d == best) frames.insert(tuple);
        };
        // All ordered selections of dim distinct facet vertices.
        std::vector<std::size_t> idx(dim, 0);
        for (;;) {
            bool distinct = true;
            for (std::size_t a = 0; a < dim && distinct; ++a)
                for (std::size_t b = a + 1; b < dim; ++b)
                    if (idx[a] == idx[b]) {
                        distinct = false;
                        break;
                    }
            if (distinct) {
                for (std::size_t a = 0; a < dim; ++a) tuple[a] = fv[idx[a]];
                consider();
            }
            std::size_t k = dim;
            while (k > 0 && ++idx[k - 1] == fv.size()) {
                idx[k - 1] = 0;
                --k;
            }
            if (k == 0) break;
        }
    }
    return {frames.begin(), frames.end()};
}

IntMatrix normal_form_of(const std::vector<IntVector>& verts, const std::vector<Facet>& facets, std::size_t dim) {
    std::optional<IntMatrix> best;
    for (const auto& frame : canonical_frames(verts, facets, dim)) {
        std::vector<IntVector> cols;
        for (auto i : frame) cols.push_back(verts[i]);
        const HermiteForm h = hnf(IntMatrix::from_columns(cols));
        std::vector<IntVector> image;
        image.reserve(verts.size());
        for (const auto& v : verts) image.push_back(h.u * v);
        std::sort(image.begin(), image.end());
        IntMatrix candidate(std::move(image));
        if (!best || candidate < *best) best = std::move(candidate);
    }
    if (!best) throw DegeneratePolytopeError();
    return *best;
}

}  // namespace

bool PointGroup::contains(const IntMatrix& a) const {
    return std::find(elements.begin(), elements.end(), a) != elements.end();
}

PointGroup generate_group(const std::vector<IntMatrix>& generators, std::size_t max_order) {
    if (generators.empty()) throw SymmetryError("no generators");
    const std::size_t n = generators.front().rows();
    for (const auto& g : generators)
        if (!is_unimodular(g) || g.rows() != n) throw SymmetryError("generator is not unimodular");
    const IntMatrix id = IntMatrix::identity(n);
    std::set<IntMatrix> seen{id};
    std::vector<IntMatrix> elements{id};
    std::deque<IntMatrix> queue{id};
    while (!queue.empty()) {
        const IntMatrix x = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : generators) {
            IntMatrix y = g * x;
            if (seen.insert(y).second) {
                if (seen.size() > max_order) throw SymmetryError("generated group is too large or infinite");
                elements.push_back(y);
                queue.push_back(std::move(y));
            }
        }
    }
    return PointGroup{std::move(elements)};
}

std::optional<std::vector<std::size_t>> vertex_permutation(const LatticePolytope& p, const IntMatrix& a) {
    const auto& verts = p.vertices();
    std::vector<std::size_t> perm(verts.size());
    std::vector<bool> hit(verts.size(), false);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const IntVector image = a * verts[i];
        auto it = std::lower_bound(verts.begin(), verts.end(), image);
        if (it == verts.end() || *it != image) return std::nullopt;
        const auto j = static_cast<std::size_t>(it - verts.begin());
        if (hit[j]) return std::nullopt;
        hit[j] = true;
        perm[i] = j;
    }
    return perm;
}

PointGroup automorphism_group(const LatticePolytope& p) {
    const std::size_t dim = p.dim();
    const auto& verts = p.vertices();
    auto frame_matrix = [&](const std::vector<std::size_t>& idx) {
        std::vector<IntVector> cols;
        for (auto i : idx) cols.push_back(verts[i]);
        return IntMatrix::from_columns(cols);
    };
    // Consecutive vertices along a facet (the whole edge in 2D).
    auto run = [&](const Facet& f, std::size_t start, bool forward) {
        std::vector<std::size_t> idx;
        const std::size_t k = f.vertices.size();
        for (std::size_t s = 0; s < dim; ++s) {
            const std::size_t pos = forward ? (start + s) % k : (start + k - s) % k;
            idx.push_back(f.vertices[pos]);
        }
        return idx;
    };

    const Facet* anchor_facet = nullptr;
    IntMatrix anchor;
    Integer anchor_det = 0;
    for (const auto& f : p.facets()) {
        anchor = frame_matrix(run(f, 0, true));
        anchor_det = det(anchor);
        if (anchor_det != 0) {
            anchor_facet = &f;
            break;
        }
    }
    if (!anchor_facet) throw SymmetryError("no linearly independent facet frame");

    std::set<IntMatrix> found;
    for (const auto& f : p.facets()) {
        if (f.vertices.size() != anchor_facet->vertices.size()) continue;
        for (std::size_t start = 0; start < f.vertices.size(); ++start)
            for (bool forward : {true, false}) {
                const IntMatrix target = frame_matrix(run(f, start, forward));
                if (abs(det(target)) != abs(anchor_det)) continue;
                auto solved = solve_left_integral(anchor, target);  // a * anchor == target
                if (!solved) continue;
                IntMatrix a = std::move(*solved);
                if (!is_unimodular(a) || !vertex_permutation(p, a)) continue;
                found.insert(std::move(a));
            }
    }
    PointGroup g;
    const IntMatrix id = IntMatrix::identity(dim);
    g.elements.push_back(id);
    for (auto& a : found)
        if (a != id) g.elements.push_back(a);
    return g;
}

OrbitPartition vertex_orbits(const LatticePolytope& p, const PointGroup& g) {
    std::vector<std::size_t> parent(p.num_vertices());
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& a : g.elements) {
        const auto perm = vertex_permutation(p, a);
        if (!perm) throw SymmetryError("group element does not preserve the vertex set");
        for (std::size_t i = 0; i < perm->size(); ++i) {
            const std::size_t x = find_root(parent, i);
            const std::size_t y = find_root(parent, (*perm)[i]);
            if (x != y) parent[std::max(x, y)] = std::min(x, y);
        }
    }
    std::map<std::size_t, std::vector<std::size_t>> by_root;
    for (std::size_t i = 0; i < parent.size(); ++i) by_root[find_root(parent, i)].push_back(i);
    OrbitPartition out;
    for (auto& [root, orbit] : by_root) out.orbits.push_back(std::move(orbit));
    return out;
}

int fixed_subspace_dim(const PointGroup& g) {
    if (g.elements.empty()) throw SymmetryError("empty group");
    const std::size_t n = g.elements.front().rows();
    std::vector<IntVector> rows;
    for (const auto& a : g.elements)
        for (std::size_t i = 0; i < n; ++i) {
            IntVector r = a.row(i);
            r[i] -= 1;
            rows.push_back(std::move(r));
        }
    return static_cast<int>(n - rank(IntMatrix(rows)));
}

int invariant_class_rank(const LatticePolytope& p, const PointGroup& g) {
    return static_cast<int>(vertex_orbits(p, g).size()) - fixed_subspace_dim(g);
}

bool is_gfano(const LatticePolytope& p) { return invariant_class_rank(p, automorphism_group(p)) == 1; }

bool is_vertex_transitive(const LatticePolytope& p) {
    return vertex_orbits(p, automorphism_group(p)).size() == 1;
}

IntMatrix normal_form(const LatticePolytope& p) { return normal_form_of(p.vertices(), p.facets(), p.dim()); }

IntMatrix affine_normal_form(const LatticePolytope& p) {
    std::optional<IntMatrix> best;
    for (const auto& t : p.vertices()) {
        std::vector<IntVector> shifted;
        for (const auto& v : p.vertices()) shifted.push_back(v - t);
        IntMatrix candidate = normal_form_of(shifted, p.facets(), p.dim());
        if (!best || candidate < *best) best = std::move(candidate);
    }
    return *best;
}

}  // namespace tfano
