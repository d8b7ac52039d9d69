#include <catch2/catch_amalgamated.hpp>

#include "nassoc/suite.hpp"

using namespace nassoc;

namespace {
const Catalog& cat() { return Catalog::instance(); }

// Independent computation: rank of the linear system over Q(alpha) in sympy.
const std::map<std::string, int> kDerDim = {
    {"A01", 1},  {"A02", 2},  {"A03", 4},  {"A04", 5},  {"A05", 4},  {"A06", 3},  {"A07", 0},  {"A08", 1},
    {"A09", 4},  {"A10", 2},  {"A11", 2},  {"J12", 1},  {"J13", 3},  {"J14", 6},  {"J15", 2},  {"J16", 2},
    {"J17", 2},  {"J18", 3},  {"J19", 2},  {"R00", 6},  {"R01", 4},  {"R02", 4},  {"R03", 3},  {"R04", 2},
    {"R05", 3},  {"R06", 6},  {"R07", 6},  {"R08", 4},  {"R09", 1},  {"R10", 1},  {"R11", 2},  {"R12", 3},
    {"R13", 2},  {"R14", 3},  {"R15", 2},  {"R16", 2},  {"A12", 6},  {"A13", 4},  {"A14", 4},  {"A15", 3},
    {"A16", 3},  {"A17", 6},  {"A18", 6},  {"A19", 4},  {"A20", 2},  {"A21", 3},  {"A22", 3},  {"A23", 2},
    {"A24", 2},  {"L01", 6},  {"L02", 4},  {"L03", 4},  {"L04", 3},  {"S01", 3},  {"S02", 3},  {"S03", 2},
    {"S04", 3},  {"S05", 2},  {"S06", 1},  {"S07", 2},  {"S08", 2},  {"S09", 1},  {"S10", 2},  {"S11", 1},
    {"S12", 4},  {"S13", 4},  {"B1", 7},   {"B2", 7},   {"M", 7},    {"BB01", 2}, {"BB02", 2}, {"BB03", 2},
    {"BB04", 2}, {"BB05", 2}, {"BB06", 2}, {"BB07", 7}, {"BB08", 7}, {"SS01", 7}, {"SS02", 4}, {"SS03", 6},
    {"SS04", 7}, {"SS05", 4}, {"SS06", 6}, {"P4", 4},   {"R4", 5}};
}

TEST_CASE("derivation dimensions match the independent computation")
{
    for (auto& [id, d] : kDerDim) {
        CAPTURE(id);
        CHECK(derivation_algebra(cat().get(id)).dim == d);
    }
}

TEST_CASE("derivations form a Lie algebra")
{
    for (const char* id : {"A12", "R02", "L01", "S12", "B1", "SS03"}) {
        CAPTURE(id);
        CHECK(derivations_closed_under_bracket(derivation_algebra(cat().get(id))));
    }
}

TEST_CASE("zero algebra has every endomorphism as a derivation")
{
    CHECK(derivation_algebra(Algebra(3)).dim == 9);
    CHECK(orbit_dimension(Algebra(3)) == 0);
}

TEST_CASE("homomorphism check")
{
    const Algebra& A = cat().get("R04");
    auto id = verify_homomorphism(A, A, SMatrix::identity(3));
    CHECK(id.holds);
    CHECK(id.invertible);
    auto bad = verify_homomorphism(A, A, parse_matrix("0,1,0; 1,0,0; 0,0,1"));
    CHECK_FALSE(bad.holds);
    CHECK(bad.i >= 0);
    CHECK_THROWS_AS(verify_homomorphism(A, cat().get("M"), SMatrix::identity(3)), DimensionMismatch);
}

TEST_CASE("M is isomorphic to B1 at alpha = -1")
{
    auto h = verify_homomorphism(cat().get("M"), cat().get("B1", {{"alpha", Scalar(-1)}}), parse_matrix(suite::kMalcevMap));
    CHECK(h.holds);
    CHECK(h.invertible);
}

TEST_CASE("sign-flip isomorphisms hold symbolically")
{
    for (auto& k : cat().known_isomorphisms()) {
        CAPTURE(k.id);
        const Algebra& A = cat().get(k.id);
        Algebra B = specialize(A, {{k.param, -Scalar::param(k.param)}});
        auto h = verify_homomorphism(A, B, k.matrix);
        CHECK(h.holds);
        CHECK(h.invertible);
    }
}

TEST_CASE("opposite pairs")
{
    CHECK(opposite(cat().get("S06")) == cat().get("S09"));
    CHECK(opposite(cat().get("S12")) == cat().get("S13"));
    CHECK(opposite(opposite(cat().get("R04"))) == cat().get("R04"));
}

TEST_CASE("automorphism shapes")
{
    for (auto& s : cat().aut_shapes()) {
        CAPTURE(s.base.str());
        CHECK(verify_automorphism_shape(cat().get(s.base), s.matrix).holds);
    }
}

TEST_CASE("fingerprint separation on claimed-distinct pairs")
{
    auto pairs = cat().claimed_pairs_distinct();
    std::map<std::string, Fingerprint> fp;
    for (auto& p : pairs)
        for (auto& r : {p.a, p.b})
            if (!fp.count(r.str())) fp[r.str()] = fingerprint(cat().get(r));
    int separated = 0;
    std::set<std::pair<std::string, std::string>> missed;
    for (auto& p : pairs) {
        if (separate(fp[p.a.str()], fp[p.b.str()]).separated) ++separated;
        else missed.insert({p.a.str(), p.b.str()});
    }
    CHECK(pairs.size() == 320);
    CHECK(separated == 318);
    CHECK(missed == suite::reviewed_exceptions());
}

TEST_CASE("fingerprint is basis independent")
{
    SMatrix P = parse_matrix("1,2,0; 0,1,-1; 1,0,3");
    for (const char* id : {"A13", "R09", "S03", "L02"}) {
        CAPTURE(id);
        const Algebra& A = cat().get(id);
        CHECK_FALSE(separate(A, change_basis(A, P)).separated);
    }
}

TEST_CASE("x(yz) = (xz)y separates R09 from A19, A20 and A23")
{
    auto id = [] {
        auto x = build::var(0), y = build::var(1), z = build::var(2);
        return Identity("x(yz)-(xz)y", {"x", "y", "z"}, x * (y * z) - (x * z) * y);
    }();
    CHECK(check_identity(cat().get("R09"), id).holds);
    for (const char* t : {"A19", "A20", "A23"}) {
        CAPTURE(t);
        CHECK_FALSE(check_identity(cat().get(t), id).holds);
    }
}

TEST_CASE("orbit dimensions")
{
    for (auto& c : cat().orbit_claims()) {
        CAPTURE(c.id);
        CHECK(orbit_dimension(cat().get(c.id)) == c.orbit_dim);
    }
}
