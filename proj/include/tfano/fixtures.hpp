#pragma once

// The thirteen toric Fano threefolds with a rank one invariant class group,
// with their table values (Picard rank, class group rank, (-K)^3, genus).

#include "tfano/exact_linear.hpp"
#include "tfano/polytope.hpp"
#include "tfano/report.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace tfano {

struct ExpectedInvariants {
    int rk_pic = 0;
    int rk_cl = 0;
    Rational degree;
    long genus = 0;
};

struct FixtureEntry {
    std::string id;  // catalogue number, used as a label only
    std::string label;
    std::vector<IntVector> vertices;
    ExpectedInvariants expected;
};

/// Numerators of the generator (a, b, c) / 5 of the index-5 superlattice that
/// turns the P^3 simplex into P^3 / C_5 with weights (1, 2, 3, 4).
[[nodiscard]] IntVector p3_c5_generator();

/// Fan polytope of P^3: conv(e1, e2, e3, -e1-e2-e3).
[[nodiscard]] std::vector<IntVector> p3_simplex();

/// All thirteen fixtures in table order. The eight rank-one-class-group
/// entries are built from weights or the quotient construction; the rest are
/// explicit vertex lists.
[[nodiscard]] std::vector<FixtureEntry> theorem1_fixtures();

/// Replaces fixture vertices by the files <dir>/<id>.poly.
[[nodiscard]] std::vector<FixtureEntry> load_theorem1_fixtures(const std::filesystem::path& dir);

void write_theorem1_fixtures(const std::filesystem::path& dir);

/// Recomputed invariants of one fixture and every disagreement with the
/// table, as "field: expected X, got Y".
struct FixtureCheck {
    std::string id;
    std::string label;
    InvariantReport computed;
    std::vector<std::string> mismatches;

    [[nodiscard]] bool ok() const { return mismatches.empty(); }
};

/// Checks the table values, terminality, is_gfano, and that the Picard rank
/// is 1 except for the two rank-3 entries (ids 47 and 62).
[[nodiscard]] std::vector<FixtureCheck> verify_fixtures(const std::vector<FixtureEntry>& fixtures);

}  // namespace tfano
