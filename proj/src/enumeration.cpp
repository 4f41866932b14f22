#include "tfano/enumeration.hpp"

#include "tfano/symmetry.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace tfano {

// Largest box the fixed-width search kernel accepts: coordinates up to 1000
// keep every cross product and plane evaluation below 2^40.
constexpr int kMaxBoxBound = 1000;

void EnumConfig::validate() const {
    if (box_bound < 1) throw std::invalid_argument("box bound must be at least 1");
    if (box_bound > kMaxBoxBound) throw std::invalid_argument("box bound too large for the search kernel");
    if (dim != 2 && dim != 3) throw std::invalid_argument("dimension must be 2 or 3");
    if (max_vertices < dim + 1) throw std::invalid_argument("max_vertices must be at least dim + 1");
    if (jobs < 1) throw std::invalid_argument("jobs must be positive");
}

LatticePolytope polytope_from_rows(const IntMatrix& rows) { return convex_hull(rows.row_vectors()); }

namespace {

// The search visits hundreds of thousands of tiny point sets, so it runs on
// fixed-width coordinates (2D points live in the plane z = 0). Results are
// handed back to the arbitrary-precision code for normal forms.
using Point = std::array<std::int64_t, 3>;

Point sub(const Point& a, const Point& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

Point cross3(const Point& a, const Point& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::int64_t dot3(const Point& a, const Point& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

bool is_zero(const Point& a) { return a[0] == 0 && a[1] == 0 && a[2] == 0; }

std::int64_t gcd3(const Point& a) { return std::gcd(std::gcd(a[0], a[1]), a[2]); }

Point reduce(const Point& a) {
    const std::int64_t g = gcd3(a);
    return {a[0] / g, a[1] / g, a[2] / g};
}

Point negate(const Point& a) { return {-a[0], -a[1], -a[2]}; }

struct HalfSpace {
    Point normal;
    std::int64_t offset;

    [[nodiscard]] std::int64_t height(const Point& x) const { return dot3(normal, x) + offset; }
    friend auto operator<=>(const HalfSpace&, const HalfSpace&) = default;
};

struct SearchSpace {
    bool fano;                    // 3D terminal Fano search; otherwise empty polygons
    std::vector<Point> candidates;  // lexicographic
    std::vector<Point> box;         // every lattice point of the box
};

SearchSpace make_space(const EnumConfig& cfg) {
    SearchSpace s;
    s.fano = cfg.dim == 3;
    const std::int64_t b = cfg.box_bound;
    const std::int64_t zmax = s.fano ? b : 0;
    for (std::int64_t x = -b; x <= b; ++x)
        for (std::int64_t y = -b; y <= b; ++y)
            for (std::int64_t z = -zmax; z <= zmax; ++z) {
                const Point p{x, y, z};
                s.box.push_back(p);
                // Fano vertices are primitive; empty polygons may use any point.
                if (!s.fano || gcd3(p) == 1) s.candidates.push_back(p);
            }
    return s;
}

// Supporting half-spaces of conv(points). For affine rank 3 these are the
// facets; for rank 2 the `plane` holds the affine span and `sides` the edge
// lines (with normals inside the plane).
struct Geometry {
    int rank = 0;
    HalfSpace plane{};
    std::vector<HalfSpace> sides;

    [[nodiscard]] bool contains(const Point& x) const {
        if (rank == 2 && plane.height(x) != 0) return false;
        return std::all_of(sides.begin(), sides.end(), [&](const HalfSpace& h) { return h.height(x) >= 0; });
    }
};

// Keeps the half-space through `anchor` with the given normal (or its
// negation) if every point lies on one side of it.
void try_support(const std::vector<Point>& pts, Point normal, const Point& anchor, std::vector<HalfSpace>& out) {
    if (is_zero(normal)) return;
    normal = reduce(normal);
    bool pos = false;
    bool neg = false;
    for (const auto& p : pts) {
        const std::int64_t s = dot3(normal, sub(p, anchor));
        pos |= s > 0;
        neg |= s < 0;
        if (pos && neg) return;
    }
    if (neg) normal = negate(normal);
    out.push_back({normal, -dot3(normal, anchor)});
}

int affine_rank(const std::vector<Point>& pts, Point& plane_normal) {
    const Point& o = pts.front();
    std::size_t i = 1;
    while (i < pts.size() && is_zero(sub(pts[i], o))) ++i;
    if (i == pts.size()) return 0;
    const Point d1 = sub(pts[i], o);
    Point n{0, 0, 0};
    for (const auto& p : pts) {
        n = cross3(d1, sub(p, o));
        if (!is_zero(n)) break;
    }
    if (is_zero(n)) return 1;
    plane_normal = n;
    for (const auto& p : pts)
        if (dot3(n, sub(p, o)) != 0) return 3;
    return 2;
}

// Brute force over point triples (rank 3) or pairs (rank 2); the sets here
// have at most a handful of points.
Geometry geometry_of(const std::vector<Point>& pts) {
    Geometry g;
    Point normal{};
    g.rank = affine_rank(pts, normal);
    const std::size_t n = pts.size();
    if (g.rank == 3) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k)
                    try_support(pts, cross3(sub(pts[j], pts[i]), sub(pts[k], pts[i])), pts[i], g.sides);
    } else if (g.rank == 2) {
        normal = reduce(normal);
        g.plane = {normal, -dot3(normal, pts.front())};
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                try_support(pts, cross3(normal, sub(pts[j], pts[i])), pts[i], g.sides);
    }
    std::sort(g.sides.begin(), g.sides.end());
    g.sides.erase(std::unique(g.sides.begin(), g.sides.end()), g.sides.end());
    return g;
}

// A point is a vertex iff it lies on at least rank supporting sides (a point
// in the relative interior of an edge of a 3-polytope lies on exactly two).
bool all_vertices(const std::vector<Point>& pts, const Geometry& g) {
    const std::size_t need = g.rank == 3 ? 3 : 2;
    return std::all_of(pts.begin(), pts.end(), [&](const Point& p) {
        std::size_t on = 0;
        for (const auto& h : g.sides)
            if (h.height(p) == 0) ++on;
        return on >= need;
    });
}

struct Node {
    bool feasible = false;
    Geometry geometry;
};

// A vertex set can grow into a valid polytope only if its points are in
// convex position and its hull contains no other box point (except the
// origin in the Fano search). Points inside a hull stay inside every larger
// hull, so a violation prunes the whole subtree.
Node check_node(const SearchSpace& space, const std::vector<Point>& chosen) {
    Node out;
    std::vector<Point> sorted = chosen;
    std::sort(sorted.begin(), sorted.end());
    auto forbidden = [&](const Point& x) {
        if (std::binary_search(sorted.begin(), sorted.end(), x)) return false;
        return !(space.fano && is_zero(x));
    };

    // Lattice points on the segments from the newest point.
    const Point& newest = chosen.back();
    for (std::size_t i = 0; i + 1 < chosen.size(); ++i) {
        const Point step = sub(chosen[i], newest);
        const std::int64_t k = gcd3(step);
        const Point unit = reduce(step);
        for (std::int64_t t = 1; t < k; ++t)
            if (forbidden({newest[0] + t * unit[0], newest[1] + t * unit[1], newest[2] + t * unit[2]})) return out;
    }
    out.geometry = geometry_of(chosen);
    const Geometry& g = out.geometry;
    if (g.rank <= 1) {
        out.feasible = chosen.size() <= 2;
        return out;
    }
    if (!all_vertices(chosen, g)) return out;
    for (const auto& x : space.box)
        if (forbidden(x) && g.contains(x)) return out;
    out.feasible = true;
    return out;
}

struct Collector {
    const SearchSpace& space;
    std::size_t max_vertices;
    std::vector<std::vector<Point>> found;
    std::size_t nodes = 0;

    [[nodiscard]] bool complete(const Geometry& g) const {
        if (!space.fano) return g.rank == 2;
        return g.rank == 3 &&
               std::all_of(g.sides.begin(), g.sides.end(), [](const HalfSpace& h) { return h.offset > 0; });
    }

    void grow(std::vector<Point>& chosen, std::size_t next, const Node& node) {
        ++nodes;
        if (complete(node.geometry)) found.push_back(chosen);
        if (chosen.size() >= max_vertices) return;
        const bool solid = node.geometry.rank == (space.fano ? 3 : 2);
        for (std::size_t j = next; j < space.candidates.size(); ++j) {
            const Point& p = space.candidates[j];
            if (solid && node.geometry.contains(p)) continue;
            chosen.push_back(p);
            const Node child = check_node(space, chosen);
            if (child.feasible) grow(chosen, j + 1, child);
            chosen.pop_back();
        }
    }
};

std::vector<std::vector<Point>> run_search(const SearchSpace& space, const EnumConfig& cfg, EnumStats& stats) {
    const auto jobs = static_cast<std::size_t>(cfg.jobs);
    std::vector<Collector> workers;
    for (std::size_t w = 0; w < jobs; ++w)
        workers.push_back(Collector{space, static_cast<std::size_t>(cfg.max_vertices), {}, 0});
    auto work = [&](std::size_t w) {
        // Top-level branches are independent; deal them out round-robin.
        for (std::size_t first = w; first < space.candidates.size(); first += jobs) {
            std::vector<Point> chosen{space.candidates[first]};
            workers[w].grow(chosen, first + 1, check_node(space, chosen));
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (std::size_t w = 0; w < jobs; ++w) threads.emplace_back(work, w);
        for (auto& t : threads) t.join();
    }
    std::vector<std::vector<Point>> all;
    for (auto& w : workers) {
        stats.nodes += w.nodes;
        stats.leaves += w.found.size();
        for (auto& f : w.found) all.push_back(std::move(f));
    }
    return all;
}

// Signed coordinate permutations; they map the search box onto itself.
std::vector<std::array<std::int64_t, 9>> box_symmetries(std::size_t dim) {
    std::vector<std::size_t> perm(dim);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::array<std::int64_t, 9>> out;
    do {
        for (std::size_t signs = 0; signs < (std::size_t{1} << dim); ++signs) {
            std::array<std::int64_t, 9> m{};
            for (std::size_t i = 0; i < dim; ++i) m[3 * i + perm[i]] = (signs >> i) & 1 ? -1 : 1;
            out.push_back(m);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<Point> box_canonical(const std::vector<Point>& verts, const std::vector<std::array<std::int64_t, 9>>& syms) {
    std::vector<Point> best;
    std::vector<Point> image(verts.size());
    for (const auto& m : syms) {
        for (std::size_t k = 0; k < verts.size(); ++k)
            for (std::size_t i = 0; i < 3; ++i)
                image[k][i] = m[3 * i] * verts[k][0] + m[3 * i + 1] * verts[k][1] + m[3 * i + 2] * verts[k][2];
        std::sort(image.begin(), image.end());
        if (best.empty() || image < best) best = image;
    }
    return best;
}

template <typename NormalForm>
std::set<IntMatrix> dedupe(const std::vector<std::vector<Point>>& found, std::size_t dim, std::size_t jobs,
                           EnumStats& stats, NormalForm&& nf) {
    const auto syms = box_symmetries(dim);
    std::set<std::vector<Point>> orbits;
    for (const auto& f : found) orbits.insert(box_canonical(f, syms));
    stats.box_orbits = orbits.size();

    const std::vector<std::vector<Point>> reps(orbits.begin(), orbits.end());
    std::set<IntMatrix> result;
    std::mutex merge;
    auto work = [&](std::size_t w) {
        std::set<IntMatrix> local;
        for (std::size_t i = w; i < reps.size(); i += jobs) {
            std::vector<IntVector> verts;
            for (const auto& p : reps[i]) {
                IntVector v(dim);
                for (std::size_t k = 0; k < dim; ++k) v[k] = static_cast<long>(p[k]);
                verts.push_back(std::move(v));
            }
            local.insert(nf(convex_hull(verts)));
        }
        const std::lock_guard lock(merge);
        result.merge(local);
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (std::size_t w = 0; w < jobs; ++w) threads.emplace_back(work, w);
        for (auto& t : threads) t.join();
    }
    return result;
}

}  // namespace

std::set<IntMatrix> enumerate_terminal_fano(const EnumConfig& cfg, EnumStats* stats) {
    cfg.validate();
    if (cfg.dim != 3) throw std::invalid_argument("terminal Fano enumeration needs dim = 3");
    const SearchSpace space = make_space(cfg);
    EnumStats local;
    const auto found = run_search(space, cfg, local);
    auto result = dedupe(found, 3, static_cast<std::size_t>(cfg.jobs), local,
                         [](const LatticePolytope& p) { return normal_form(p); });
    if (stats) *stats = local;
    return result;
}

std::set<IntMatrix> enumerate_empty_polygons(const EnumConfig& cfg, EnumStats* stats) {
    cfg.validate();
    if (cfg.dim != 2) throw std::invalid_argument("empty polygon enumeration needs dim = 2");
    const SearchSpace space = make_space(cfg);
    EnumStats local;
    const auto found = run_search(space, cfg, local);
    auto result = dedupe(found, 2, static_cast<std::size_t>(cfg.jobs), local,
                         [](const LatticePolytope& p) { return affine_normal_form(p); });
    if (stats) *stats = local;
    return result;
}

}  // namespace tfano
