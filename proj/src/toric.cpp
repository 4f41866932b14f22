#include "tfano/toric.hpp"

#include <algorithm>
#include <numeric>

namespace tfano {

namespace {

void require_fano_3d(const LatticePolytope& p) {
    if (p.dim() != 3) throw std::invalid_argument("toric invariants need a 3-dimensional polytope");
    if (!p.contains_strictly(IntVector(3))) throw NotFanoError("dual undefined: origin is not an interior point");
}

Integer lcm_of_offsets(const LatticePolytope& p) {
    Integer l = 1;
    for (const auto& f : p.facets()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), f.offset.get_mpz_t());
    return l;
}

// L * P^* as a lattice polytope, with L the lcm of the facet offsets of P.
LatticePolytope scaled_dual(const LatticePolytope& p, const Integer& scale) {
    std::vector<IntVector> pts;
    for (const auto& f : p.facets()) {
        Integer factor;
        mpz_divexact(factor.get_mpz_t(), scale.get_mpz_t(), f.offset.get_mpz_t());
        pts.push_back(factor * f.normal);
    }
    return convex_hull(pts);
}

}  // namespace

RationalPolytope dual_polytope(const LatticePolytope& p) {
    require_fano_3d(p);
    RationalPolytope d;
    for (const auto& f : p.facets()) {
        RationalVector v;
        for (const auto& c : f.normal) v.emplace_back(Rational(c, f.offset));
        for (auto& c : v) c.canonicalize();
        d.vertices.push_back(std::move(v));
    }
    std::sort(d.vertices.begin(), d.vertices.end(), [](const RationalVector& a, const RationalVector& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    for (const auto& v : p.vertices()) {
        d.facet_normals.push_back(v);
        d.facet_offsets.emplace_back(1);
    }
    return d;
}

LatticePolytope dual_lattice_polytope(const LatticePolytope& p) {
    require_fano_3d(p);
    if (lcm_of_offsets(p) != 1) throw std::invalid_argument("dual of a non-reflexive polytope is not a lattice polytope");
    return scaled_dual(p, Integer(1));
}

Rational anticanonical_degree(const LatticePolytope& p) {
    require_fano_3d(p);
    const Integer scale = lcm_of_offsets(p);
    const LatticePolytope q = scaled_dual(p, scale);
    // Cone over each facet from the origin, each facet fanned from its first vertex.
    Integer six_vol = 0;
    for (const auto& f : q.facets()) {
        const IntVector& a = q.vertices()[f.vertices[0]];
        for (std::size_t i = 1; i + 1 < f.vertices.size(); ++i) {
            const IntVector& b = q.vertices()[f.vertices[i]];
            const IntVector& c = q.vertices()[f.vertices[i + 1]];
            six_vol += abs(dot(a, cross(b, c)));
        }
    }
    Rational deg(six_vol, scale * scale * scale);
    deg.canonicalize();
    return deg;
}

Integer dual_lattice_point_count(const LatticePolytope& p) {
    const RationalPolytope d = dual_polytope(p);
    IntVector lo(3);
    IntVector hi(3);
    for (std::size_t i = 0; i < 3; ++i) {
        lo[i] = floor(d.vertices.front()[i]);
        hi[i] = ceil(d.vertices.front()[i]);
        for (const auto& v : d.vertices) {
            lo[i] = std::min(lo[i], floor(v[i]));
            hi[i] = std::max(hi[i], ceil(v[i]));
        }
    }
    Integer count = 0;
    scan_box(lo, hi, [&](const IntVector& m) {
        for (const auto& v : p.vertices())
            if (dot(m, v) < -1) return;
        ++count;
    });
    return count;
}

Integer genus(const LatticePolytope& p) { return dual_lattice_point_count(p) - 2; }

int class_group_rank(const LatticePolytope& p) {
    require_fano_3d(p);
    return static_cast<int>(p.num_vertices()) - 3;
}

int picard_rank(const LatticePolytope& p) {
    require_fano_3d(p);
    // Unknowns: a_rho for every ray, then m_sigma (3 entries) per facet cone.
    // Equations: <m_sigma, v_rho> + a_rho = 0 for rho in sigma.
    const std::size_t nv = p.num_vertices();
    const std::size_t nvars = nv + 3 * p.facets().size();
    std::vector<IntVector> rows;
    for (std::size_t s = 0; s < p.facets().size(); ++s) {
        for (auto rho : p.facets()[s].vertices) {
            IntVector eq(nvars);
            eq[rho] = 1;
            for (std::size_t k = 0; k < 3; ++k) eq[nv + 3 * s + k] = p.vertices()[rho][k];
            rows.push_back(std::move(eq));
        }
    }
    const SmithForm f = snf(IntMatrix(rows));
    std::size_t r = 0;
    for (std::size_t i = 0; i < std::min(f.d.rows(), f.d.cols()); ++i)
        if (f.d(i, i) != 0) ++r;
    // The solution lattice projects injectively onto the a-coordinates since
    // every facet cone is full-dimensional; the image of M has rank 3.
    return static_cast<int>(nvars - r) - 3;
}

LatticePolytope wps_polytope(const std::array<long, 4>& weights) {
    for (long w : weights)
        if (w <= 0) throw std::invalid_argument("weights must be positive");
    for (std::size_t skip = 0; skip < 4; ++skip) {
        long g = 0;
        for (std::size_t i = 0; i < 4; ++i)
            if (i != skip) g = std::gcd(g, weights[i]);
        if (g != 1) throw std::invalid_argument("weights are not well formed");
    }
    IntMatrix column(4, 1);
    for (std::size_t i = 0; i < 4; ++i) column(i, 0) = weights[i];
    // u * w = +-e1, so the last three rows of u give a surjection Z^4 -> Z^3
    // with kernel Z w.
    const SmithForm f = snf(column);
    std::vector<IntVector> verts;
    for (std::size_t j = 0; j < 4; ++j) verts.push_back(IntVector{0, 0, 0});
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t i = 1; i < 4; ++i) verts[j][i - 1] = f.u(i, j);
    return convex_hull(verts);
}

LatticePolytope lattice_quotient(const LatticePolytope& p, const RationalVector& g, long k) {
    if (p.dim() != 3 || g.size() != 3) throw std::invalid_argument("lattice_quotient works in dimension 3");
    if (k <= 0) throw std::invalid_argument("quotient order must be positive");
    if (std::all_of(g.begin(), g.end(), [](const Rational& x) { return x.get_den() == 1; }))
        throw std::invalid_argument("trivial quotient: generator is integral");
    IntVector scaled(3);
    for (std::size_t i = 0; i < 3; ++i) {
        const Rational kg = g[i] * k;
        if (kg.get_den() != 1) throw std::invalid_argument("k * g is not integral");
        scaled[i] = kg.get_num();
    }
    // Rows generate k N' = k N + Z k g.
    std::vector<IntVector> gens;
    for (std::size_t i = 0; i < 3; ++i) {
        IntVector e(3);
        e[i] = k;
        gens.push_back(std::move(e));
    }
    gens.push_back(scaled);
    const HermiteForm h = hnf(IntMatrix(gens));
    const IntMatrix basis(std::vector<IntVector>{h.h.row(0), h.h.row(1), h.h.row(2)});
    const Integer kk = k;
    if (abs(det(basis)) * kk != kk * kk * kk) throw std::invalid_argument("generator order does not match k");

    std::vector<IntVector> verts;
    for (const auto& v : p.vertices()) {
        const IntMatrix target(std::vector<IntVector>{kk * v});
        const auto coords = solve_left_integral(basis, target);
        verts.push_back(primitivize(coords->row(0)));
    }
    return convex_hull(verts);
}

}  // namespace tfano
