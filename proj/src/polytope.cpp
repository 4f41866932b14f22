#include "tfano/polytope.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace tfano {

namespace {

Integer cross2(const IntVector& o, const IntVector& a, const IntVector& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

std::vector<IntVector> dedup_sorted(std::vector<IntVector> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// Andrew's monotone chain; returns the strict hull vertices counterclockwise,
// starting from the lexicographically smallest point.
std::vector<std::size_t> monotone_chain(const std::vector<IntVector>& pts) {
    const std::size_t n = pts.size();
    std::vector<std::size_t> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && sgn(cross2(pts[hull[k - 2]], pts[hull[k - 1]], pts[i])) <= 0) --k;
        hull[k++] = i;
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
        while (k >= t && sgn(cross2(pts[hull[k - 2]], pts[hull[k - 1]], pts[i])) <= 0) --k;
        hull[k++] = i;
    }
    hull.resize(k - 1);
    return hull;
}

std::vector<IntVector> hull_2d(const std::vector<IntVector>& pts, std::vector<Facet>& facets) {
    if (pts.size() < 3) throw DegeneratePolytopeError();
    const auto cycle = monotone_chain(pts);
    if (cycle.size() < 3) throw DegeneratePolytopeError();
    std::vector<IntVector> verts;
    for (auto i : cycle) verts.push_back(pts[i]);
    const std::size_t m = verts.size();
    for (std::size_t i = 0; i < m; ++i) {
        const IntVector& u = verts[i];
        const IntVector& v = verts[(i + 1) % m];
        // Counterclockwise traversal: the interior is to the left.
        IntVector n{0, 0};
        n[0] = u[1] - v[1];
        n[1] = v[0] - u[0];
        n = primitivize(n);
        facets.push_back({n, -dot(n, u), {i, (i + 1) % m}});
    }
    return verts;
}

// Points of pts are assumed to satisfy <n, p - a> >= 0. Rotates the plane
// about the line a + R*d towards the side -w (the old face lies on the w
// side) until it hits further points; returns the new primitive inward normal.
IntVector wrap(const std::vector<IntVector>& pts, const IntVector& n, const IntVector& a, const IntVector& w) {
    bool found = false;
    Integer best_s;
    Integer best_t;
    for (const auto& p : pts) {
        const IntVector q = p - a;
        Integer s = dot(n, q);
        if (s == 0) continue;
        Integer t = dot(w, q);
        // Angle from the +w direction in the (t, s) half-plane s > 0.
        if (!found || t * best_s - s * best_t < 0) {
            best_s = std::move(s);
            best_t = std::move(t);
            found = true;
        }
    }
    if (!found) throw DegeneratePolytopeError();
    IntVector m(3);
    for (std::size_t i = 0; i < 3; ++i) m[i] = best_s * w[i] - best_t * n[i];
    return primitivize(m);
}

std::vector<std::size_t> facet_cycle(const std::vector<IntVector>& pts, const std::vector<std::size_t>& on_plane,
                                     const IntVector& normal) {
    // Project along a coordinate axis not parallel to the facet plane.
    std::size_t drop = 0;
    for (std::size_t i = 0; i < 3; ++i)
        if (normal[i] != 0) {
            drop = i;
            break;
        }
    std::vector<IntVector> proj;
    proj.reserve(on_plane.size());
    for (auto idx : on_plane) {
        IntVector q{0, 0};
        std::size_t k = 0;
        for (std::size_t i = 0; i < 3; ++i)
            if (i != drop) q[k++] = pts[idx][i];
        proj.push_back(std::move(q));
    }
    // on_plane is in lexicographic order of the 3D points, and dropping one
    // coordinate keeps distinct points distinct, but the order must be
    // re-sorted for the monotone chain.
    std::vector<std::size_t> order(proj.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return proj[x] < proj[y]; });
    std::vector<IntVector> sorted;
    for (auto i : order) sorted.push_back(proj[i]);
    const auto cyc = monotone_chain(sorted);
    std::vector<std::size_t> out;
    for (auto i : cyc) out.push_back(on_plane[order[i]]);
    return out;
}

std::size_t affine_rank(const std::vector<IntVector>& pts, const std::vector<std::size_t>& idx) {
    if (idx.empty()) return 0;
    std::vector<IntVector> rows;
    for (std::size_t i = 1; i < idx.size(); ++i) rows.push_back(pts[idx[i]] - pts[idx[0]]);
    if (rows.empty()) return 0;
    return rank(IntMatrix(rows));
}

std::vector<IntVector> hull_3d(const std::vector<IntVector>& pts, std::vector<Facet>& facets_out) {
    if (pts.size() < 4) throw DegeneratePolytopeError();
    {
        std::vector<std::size_t> all(pts.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        if (affine_rank(pts, all) < 3) throw DegeneratePolytopeError();
    }

    const IntVector& a = pts.front();  // lexicographic minimum, hence a vertex
    IntVector n{1, 0, 0};
    auto contact = [&](const IntVector& normal, const Integer& level) {
        std::vector<std::size_t> on;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (dot(normal, pts[i]) == level) on.push_back(i);
        return on;
    };
    for (;;) {
        const auto on = contact(n, dot(n, a));
        const std::size_t r = affine_rank(pts, on);
        if (r == 2) break;
        IntVector d = r == 0 ? cross(n, IntVector{0, 0, 1}) : pts[on[1]] - pts[on[0]];
        if (d.is_zero()) d = cross(n, IntVector{0, 1, 0});
        n = wrap(pts, n, a, cross(n, d));
    }

    std::map<IntVector, Facet> found;
    std::deque<IntVector> queue{n};
    while (!queue.empty()) {
        IntVector normal = std::move(queue.front());
        queue.pop_front();
        if (found.count(normal)) continue;
        Integer level = dot(normal, pts[0]);
        for (const auto& p : pts) {
            Integer h = dot(normal, p);
            if (h < level) level = std::move(h);
        }
        const auto on = contact(normal, level);
        auto cycle = facet_cycle(pts, on, normal);
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            const IntVector& u = pts[cycle[i]];
            const IntVector& v = pts[cycle[(i + 1) % cycle.size()]];
            const IntVector& x = pts[cycle[(i + 2) % cycle.size()]];
            IntVector w = cross(normal, v - u);
            if (dot(w, x - u) < 0) w = -w;
            IntVector next = wrap(pts, normal, u, w);
            if (!found.count(next)) queue.push_back(std::move(next));
        }
        found.emplace(normal, Facet{normal, -level, std::move(cycle)});
    }

    // Re-index the facets against the sorted vertex list.
    std::set<std::size_t> used;
    for (const auto& [key, f] : found) used.insert(f.vertices.begin(), f.vertices.end());
    std::vector<IntVector> verts;
    std::map<std::size_t, std::size_t> remap;
    for (auto i : used) {
        remap[i] = verts.size();
        verts.push_back(pts[i]);
    }
    for (auto& [key, f] : found) {
        for (auto& i : f.vertices) i = remap.at(i);
        facets_out.push_back(std::move(f));
    }
    return verts;
}

}  // namespace

LatticePolytope convex_hull(const std::vector<IntVector>& points) {
    if (points.empty()) throw DegeneratePolytopeError();
    const std::size_t d = points.front().size();
    for (const auto& p : points)
        if (p.size() != d) throw LinearAlgebraError("points of mixed dimension");
    if (d != 2 && d != 3) throw std::invalid_argument("only dimensions 2 and 3 are supported");

    const auto pts = dedup_sorted(points);
    LatticePolytope out;
    out.dim_ = d;
    std::vector<Facet> facets;
    std::vector<IntVector> verts = d == 2 ? hull_2d(pts, facets) : hull_3d(pts, facets);

    // Canonical vertex order is lexicographic; facet indices follow.
    std::vector<std::size_t> order(verts.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return verts[x] < verts[y]; });
    std::vector<std::size_t> position(verts.size());
    for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
    for (auto& f : facets)
        for (auto& i : f.vertices) i = position[i];
    out.vertices_.reserve(verts.size());
    for (auto i : order) out.vertices_.push_back(std::move(verts[i]));
    out.facets_ = std::move(facets);
    return out;
}

bool LatticePolytope::contains(const IntVector& x) const {
    return std::all_of(facets_.begin(), facets_.end(), [&](const Facet& f) { return f.height(x) >= 0; });
}

bool LatticePolytope::contains_strictly(const IntVector& x) const {
    return std::all_of(facets_.begin(), facets_.end(), [&](const Facet& f) { return f.height(x) > 0; });
}

LatticePolytope LatticePolytope::transformed(const IntMatrix& a) const {
    std::vector<IntVector> image;
    image.reserve(vertices_.size());
    for (const auto& v : vertices_) image.push_back(a * v);
    return convex_hull(image);
}

namespace {

std::pair<IntVector, IntVector> bounding_box(const std::vector<IntVector>& pts) {
    IntVector lo = pts.front();
    IntVector hi = pts.front();
    for (const auto& p : pts)
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] < lo[i]) lo[i] = p[i];
            if (p[i] > hi[i]) hi[i] = p[i];
        }
    return {lo, hi};
}

}  // namespace

std::vector<IntVector> lattice_points(const LatticePolytope& p) {
    const auto [lo, hi] = bounding_box(p.vertices());
    std::vector<IntVector> out;
    scan_box(lo, hi, [&](const IntVector& x) {
        if (p.contains(x)) out.push_back(x);
    });
    return out;
}

std::vector<IntVector> interior_lattice_points(const LatticePolytope& p) {
    const auto [lo, hi] = bounding_box(p.vertices());
    std::vector<IntVector> out;
    scan_box(lo, hi, [&](const IntVector& x) {
        if (p.contains_strictly(x)) out.push_back(x);
    });
    return out;
}

PropertyFlags classify(const LatticePolytope& p) {
    PropertyFlags f;
    const IntVector origin(p.dim());
    f.is_fano = p.contains_strictly(origin) &&
                std::all_of(p.vertices().begin(), p.vertices().end(), [](const IntVector& v) { return is_primitive(v); });
    f.is_simplicial = std::all_of(p.facets().begin(), p.facets().end(),
                                  [&](const Facet& facet) { return facet.vertices.size() == p.dim(); });
    if (!f.is_fano) return f;

    const auto points = lattice_points(p);
    // Vertices and the origin are always among the lattice points.
    f.is_terminal = points.size() == p.num_vertices() + 1;
    f.is_canonical = interior_lattice_points(p).size() == 1;
    f.is_reflexive =
        std::all_of(p.facets().begin(), p.facets().end(), [](const Facet& facet) { return facet.offset == 1; });
    f.is_regular = f.is_simplicial && std::all_of(p.facets().begin(), p.facets().end(), [&](const Facet& facet) {
                       std::vector<IntVector> cols;
                       for (auto i : facet.vertices) cols.push_back(p.vertices()[i]);
                       const Integer d = det(IntMatrix::from_columns(cols));
                       return d == 1 || d == -1;
                   });
    return f;
}

std::vector<std::size_t> facet_vertex_counts(const LatticePolytope& p) {
    std::vector<std::size_t> counts;
    for (const auto& f : p.facets()) counts.push_back(f.vertices.size());
    std::sort(counts.begin(), counts.end());
    return counts;
}

PolygonCounts polygon_counts(const LatticePolytope& polygon) {
    if (polygon.dim() != 2) throw std::invalid_argument("polygon_counts needs a 2D polytope");
    PolygonCounts c;
    c.twice_area = 0;
    for (const auto& f : polygon.facets()) {
        const IntVector& u = polygon.vertices()[f.vertices[0]];
        const IntVector& v = polygon.vertices()[f.vertices[1]];
        c.twice_area += u[0] * v[1] - u[1] * v[0];
    }
    c.twice_area = abs(c.twice_area);
    const auto all = lattice_points(polygon);
    c.interior = static_cast<unsigned long>(interior_lattice_points(polygon).size());
    c.boundary = static_cast<unsigned long>(all.size()) - c.interior;
    return c;
}

}  // namespace tfano
