#include "tfano/fixtures.hpp"

#include "tfano/io.hpp"
#include "tfano/toric.hpp"

#include <array>

namespace tfano {

namespace {

struct RankOneRecipe {
    const char* id;
    const char* label;
    std::array<long, 4> weights;  // all zero for the C5 quotient
    ExpectedInvariants expected;
};

ExpectedInvariants expect(int pic, int cl, long num, long den, long g) {
    Rational d(num, den);
    d.canonicalize();
    return {pic, cl, d, g};
}

}  // namespace

IntVector p3_c5_generator() { return IntVector{1, 2, 3}; }

std::vector<IntVector> p3_simplex() { return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}; }

std::vector<FixtureEntry> theorem1_fixtures() {
    const std::vector<RankOneRecipe> rank_one{
        {"1", "P3/C5", {0, 0, 0, 0}, expect(1, 1, 64, 5, 5)},
        {"2", "P(2,3,5,7)", {2, 3, 5, 7}, expect(1, 1, 4913, 210, 11)},
        {"3", "P(3,4,5,7)", {3, 4, 5, 7}, expect(1, 1, 6859, 420, 7)},
        {"4", "P3", {1, 1, 1, 1}, expect(1, 1, 64, 1, 33)},
        {"5", "P(1,3,4,5)", {1, 3, 4, 5}, expect(1, 1, 2197, 60, 18)},
        {"6", "P(1,2,3,5)", {1, 2, 3, 5}, expect(1, 1, 1331, 30, 22)},
        {"7", "P(1,1,1,2)", {1, 1, 1, 2}, expect(1, 1, 125, 2, 32)},
        {"8", "P(1,1,2,3)", {1, 1, 2, 3}, expect(1, 1, 343, 6, 29)},
    };
    std::vector<FixtureEntry> out;
    for (const auto& r : rank_one) {
        LatticePolytope p = [&] {
            if (r.weights[0] != 0) return wps_polytope(r.weights);
            RationalVector g;
            for (const auto& c : p3_c5_generator()) g.emplace_back(c, 5);
            for (auto& x : g) x.canonicalize();
            return lattice_quotient(convex_hull(p3_simplex()), g, 5);
        }();
        out.push_back({r.id, r.label, p.vertices(), r.expected});
    }
    out.push_back({"32", "quadric cone Q in P4",
                   {{1, 0, 0}, {0, 1, 0}, {1, 1, 1}, {-1, -1, 0}, {0, 0, -1}},
                   expect(1, 2, 54, 1, 28)});
    out.push_back({"92", "triangular prism, degree 81/2",
                   {{-1, -1, 0}, {1, 0, 0}, {1, 1, 1}, {-2, -1, -1}, {0, 0, -1}, {0, 1, 0}},
                   expect(1, 3, 81, 2, 21)});
    out.push_back({"297", "V22 in P5",
                   {{1, 0, 0}, {-1, 0, 0}, {0, 0, 1}, {0, 0, -1}, {1, 1, 1}, {-1, -1, -1}, {0, 1, 0}, {0, -1, 0}},
                   expect(1, 5, 32, 1, 17)});
    out.push_back({"47", "(P1xP1xP1)/sigma",
                   {{1, 1, 0}, {-1, -1, 0}, {1, 0, 1}, {-1, 0, -1}, {0, 1, 1}, {0, -1, -1}},
                   expect(3, 3, 24, 1, 11)});
    out.push_back({"62", "P1xP1xP1",
                   {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}},
                   expect(3, 3, 48, 1, 25)});
    return out;
}

std::vector<FixtureEntry> load_theorem1_fixtures(const std::filesystem::path& dir) {
    auto fixtures = theorem1_fixtures();
    for (auto& f : fixtures) f.vertices = read_points_file(dir / (f.id + ".poly"));
    return fixtures;
}

void write_theorem1_fixtures(const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    for (const auto& f : theorem1_fixtures()) {
        const std::string comment = "No. " + f.id + ": " + f.label + "\nexpected rk Pic " +
                                    std::to_string(f.expected.rk_pic) + ", rk Cl " +
                                    std::to_string(f.expected.rk_cl) + ", (-K)^3 " + to_string(f.expected.degree) +
                                    ", genus " + std::to_string(f.expected.genus);
        write_points_file(dir / (f.id + ".poly"), f.vertices, comment);
    }
}

std::vector<FixtureCheck> verify_fixtures(const std::vector<FixtureEntry>& fixtures) {
    std::vector<FixtureCheck> out;
    for (const auto& f : fixtures) {
        FixtureCheck c{f.id, f.label, {}, {}};
        auto miss = [&](const std::string& field, const std::string& want, const std::string& got) {
            if (want != got) c.mismatches.push_back(field + ": expected " + want + ", got " + got);
        };
        try {
            const LatticePolytope p = convex_hull(f.vertices);
            c.computed = compute_report(p, f.id);
        } catch (const std::exception& e) {
            c.mismatches.push_back(std::string("error: ") + e.what());
            out.push_back(std::move(c));
            continue;
        }
        const auto& r = c.computed;
        miss("rk_pic", std::to_string(f.expected.rk_pic), std::to_string(r.rk_pic));
        miss("rk_cl", std::to_string(f.expected.rk_cl), std::to_string(r.rk_cl));
        miss("degree", to_string(f.expected.degree), to_string(r.degree));
        miss("genus", std::to_string(f.expected.genus), r.genus.get_str());
        miss("terminal", "true", r.flags.is_terminal ? "true" : "false");
        miss("is_gfano", "true", r.is_gfano ? "true" : "false");
        const bool rank_three = f.id == "47" || f.id == "62";
        miss("rk_pic allowed", rank_three ? "3" : "1", std::to_string(r.rk_pic));
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace tfano
