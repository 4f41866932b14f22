// Command-line front end. Exit codes: 0 success, 1 verification mismatch,
// 2 input error.

#include "tfano/enumeration.hpp"
#include "tfano/fixtures.hpp"
#include "tfano/io.hpp"
#include "tfano/polytope.hpp"
#include "tfano/report.hpp"
#include "tfano/symmetry.hpp"
#include "tfano/toric.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>

using namespace tfano;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInputError = 2;

LatticePolytope load(const std::string& file) { return convex_hull(read_points_file(file)); }

void emit_points(const std::vector<IntVector>& pts, const std::string& out, const std::string& comment) {
    if (out.empty())
        write_points(std::cout, pts, comment);
    else
        write_points_file(out, pts, comment);
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

void print_flags(const PropertyFlags& f) {
    std::cout << "fano        " << yes_no(f.is_fano) << "\n"
              << "terminal    " << yes_no(f.is_terminal) << "\n"
              << "canonical   " << yes_no(f.is_canonical) << "\n"
              << "reflexive   " << yes_no(f.is_reflexive) << "\n"
              << "simplicial  " << yes_no(f.is_simplicial) << "\n"
              << "regular     " << yes_no(f.is_regular) << "\n";
}

void print_report(const InvariantReport& r) {
    std::cout << "vertices    " << r.n_vertices << "\n"
              << "rk_cl       " << r.rk_cl << "\n"
              << "rk_pic      " << r.rk_pic << "\n"
              << "degree      " << to_string(r.degree) << "\n"
              << "genus       " << r.genus << "\n"
              << "aut_order   " << r.aut_order << "\n"
              << "n_orbits    " << r.n_orbits << "\n"
              << "fixed_dim   " << r.fixed_dim << "\n"
              << "inv_cl_rank " << r.inv_cl_rank << "\n"
              << "is_gfano    " << yes_no(r.is_gfano) << "\n";
}

// "a/k,b/k,c/k" -> rational vector and the lcm of the denominators.
std::pair<RationalVector, long> parse_generator(const std::string& text) {
    RationalVector g;
    long k = 1;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        Rational q;
        try {
            q = Rational(item);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("bad generator entry '" + item + "'");
        }
        if (q.get_den() == 0) throw std::invalid_argument("bad generator entry '" + item + "'");
        q.canonicalize();
        k = std::lcm(k, q.get_den().get_si());
        g.push_back(q);
    }
    if (g.size() != 3) throw std::invalid_argument("generator needs three entries");
    return {g, k};
}

int verify_theorem1(const std::string& dir_arg) {
    std::string dir = dir_arg;
    if (dir.empty())
        if (const char* env = std::getenv("TFANO_FIXTURES")) dir = env;
    const auto fixtures = dir.empty() ? theorem1_fixtures() : load_theorem1_fixtures(dir);
    std::cout << "fixtures: " << (dir.empty() ? std::string("built-in") : dir) << "\n";
    std::cout << std::left << std::setw(6) << "id" << std::setw(8) << "rk_pic" << std::setw(7) << "rk_cl"
              << std::setw(12) << "degree" << std::setw(7) << "genus" << std::setw(7) << "gfano" << "status\n";
    std::size_t passed = 0;
    const auto checks = verify_fixtures(fixtures);
    for (const auto& c : checks) {
        const auto& r = c.computed;
        std::cout << std::setw(6) << c.id << std::setw(8) << r.rk_pic << std::setw(7) << r.rk_cl << std::setw(12)
                  << to_string(r.degree) << std::setw(7) << r.genus << std::setw(7) << yes_no(r.is_gfano)
                  << (c.ok() ? "ok" : "MISMATCH") << "\n";
        for (const auto& m : c.mismatches) std::cout << "      " << m << "\n";
        if (c.ok()) ++passed;
    }
    std::cout << passed << "/" << checks.size() << " fixtures pass\n";
    return passed == checks.size() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Terminal Fano lattice polytopes and toric G-Fano threefolds"};
    app.require_subcommand(1);

    std::string file;
    std::string out;
    bool json = false;

    auto* props = app.add_subcommand("props", "Fano, terminal, canonical, reflexive, simplicial, regular");
    props->add_option("file", file, "polytope file")->required();
    props->add_flag("--json", json);

    auto* inv = app.add_subcommand("invariants", "Full invariant report of a Fano 3-polytope");
    inv->add_option("file", file, "polytope file")->required();
    inv->add_flag("--json", json);

    std::vector<long> weights;
    auto* wps = app.add_subcommand("wps", "Fan polytope of a weighted projective space");
    wps->add_option("weights", weights, "four positive weights")->required()->expected(4);
    wps->add_option("-o,--output", out, "output file (default stdout)");

    std::string gen;
    auto* quot = app.add_subcommand("quotient", "Polytope in the superlattice N + Z g");
    quot->add_option("file", file, "polytope file")->required();
    quot->add_option("--gen", gen, "generator a/k,b/k,c/k")->required();
    quot->add_option("-o,--output", out, "output file (default stdout)");

    auto* nf = app.add_subcommand("normal-form", "GL(n,Z) normal form");
    nf->add_option("file", file, "polytope file")->required();

    bool elements = false;
    auto* aut = app.add_subcommand("aut", "Lattice automorphism group");
    aut->add_option("file", file, "polytope file")->required();
    aut->add_flag("--elements", elements, "print every group element");

    EnumConfig cfg;
    bool list = false;
    auto* en = app.add_subcommand("enumerate", "Terminal Fano polytopes (3D) or empty polygons (2D) in a box");
    en->add_option("--box", cfg.box_bound, "box bound B")->default_val(1);
    en->add_option("--dim", cfg.dim, "2 or 3")->default_val(3);
    en->add_option("--jobs", cfg.jobs, "worker threads")->default_val(1);
    en->add_option("--max-vertices", cfg.max_vertices, "vertex cap")->default_val(14);
    en->add_flag("--list", list, "print every normal form");

    std::string dir;
    auto* verify = app.add_subcommand("verify-theorem1", "Recompute the thirteen fixtures against the table");
    verify->add_option("dir", dir, "fixture directory (default $TFANO_FIXTURES, then built-in)");

    auto* writefx = app.add_subcommand("write-fixtures", "Write the thirteen fixture files");
    writefx->add_option("dir", dir, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*props) {
            const PropertyFlags f = classify(load(file));
            if (json)
                std::cout << flags_to_json(f).dump(2) << "\n";
            else
                print_flags(f);
        } else if (*inv) {
            const InvariantReport r = compute_report(load(file), file);
            if (json)
                std::cout << report_to_json(r).dump(2) << "\n";
            else
                print_report(r);
        } else if (*wps) {
            const std::array<long, 4> w{weights[0], weights[1], weights[2], weights[3]};
            std::ostringstream label;
            label << "P(" << w[0] << "," << w[1] << "," << w[2] << "," << w[3] << ")";
            emit_points(wps_polytope(w).vertices(), out, label.str());
        } else if (*quot) {
            const auto [g, k] = parse_generator(gen);
            emit_points(lattice_quotient(load(file), g, k).vertices(), out, "quotient by " + gen);
        } else if (*nf) {
            const LatticePolytope p = load(file);
            emit_points(normal_form(p).row_vectors(), "", "normal form");
        } else if (*aut) {
            const LatticePolytope p = load(file);
            const PointGroup g = automorphism_group(p);
            std::cout << "order       " << g.order() << "\n"
                      << "orbits      " << vertex_orbits(p, g).size() << "\n"
                      << "fixed_dim   " << fixed_subspace_dim(g) << "\n"
                      << "inv_cl_rank " << invariant_class_rank(p, g) << "\n"
                      << "transitive  " << yes_no(is_vertex_transitive(p)) << "\n";
            if (elements)
                for (const auto& a : g.elements) std::cout << a << "\n";
        } else if (*en) {
            cfg.validate();
            EnumStats stats;
            const auto classes =
                cfg.dim == 3 ? enumerate_terminal_fano(cfg, &stats) : enumerate_empty_polygons(cfg, &stats);
            std::cout << classes.size() << " classes (nodes " << stats.nodes << ", leaves " << stats.leaves
                      << ", box orbits " << stats.box_orbits << ")\n";
            if (list)
                for (const auto& m : classes) std::cout << m << "\n";
        } else if (*verify) {
            return verify_theorem1(dir);
        } else if (*writefx) {
            write_theorem1_fixtures(dir);
            std::cout << "wrote " << theorem1_fixtures().size() << " fixtures to " << dir << "\n";
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kInputError;
    } catch (const DegeneratePolytopeError& e) {
        std::cerr << "degenerate polytope: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kOk;
}
