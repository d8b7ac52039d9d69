#include <catch2/catch_amalgamated.hpp>

#include "nassoc/suite.hpp"

using namespace nassoc;

namespace {
const Catalog& cat() { return Catalog::instance(); }
Cocycle coc(int n, bool skew, const std::string& s) { return Cocycle::from_entries(n, skew, parse_cocycle_entries(s)); }
}

TEST_CASE("cocycle construction")
{
    Cocycle c = coc(3, true, "2 1 3 = x");
    CHECK(c.str() == "(0, x*D13, 0)");
    CHECK(c.B[1](0, 2) == Scalar::param("x"));
    CHECK(c.B[1](2, 0) == -Scalar::param("x"));
    CHECK_THROWS_AS(coc(3, true, "1 2 2 = 1"), SymmetryConflict);
    Cocycle s = coc(3, false, "1 2 2 = 1; 1 1 3 = 2");
    CHECK(s.B[0](1, 1) == Scalar(1));
    CHECK(s.B[0](2, 0) == Scalar(2));
    CHECK(coc(3, true, "1 1 2 = 1; 1 2 1 = -1") == coc(3, true, "1 1 2 = 2"));
}

TEST_CASE("cocycle symmetry must match the base")
{
    CHECK_THROWS_AS(z2_member(cat().get("A04"), coc(3, false, "2 1 3 = 1"), "right-alternative"), SymmetryConflict);
}

TEST_CASE("membership in Z2 and the resulting extension")
{
    const Algebra& A04 = cat().get("A04");
    auto r = z2_member(A04, coc(3, true, "2 1 3 = x"), "right-alternative");
    CHECK(r.member);
    CHECK(r.derived_matches);
    CHECK(extend(A04, coc(3, true, "2 1 3 = 1")) == cat().get("R01"));

    auto bad = z2_member(cat().get("A07"), coc(3, true, "1 1 2 = 1"), "right-alternative");
    CHECK_FALSE(bad.member);
}

TEST_CASE("equation system and direct check agree")
{
    auto sys = z2_equations(cat().get("A04"), true, "right-alternative");
    CHECK(sys.vars.size() == 9);
    Cocycle th = coc(3, true, "2 1 3 = 1");
    auto at = sys.assignment(th);
    for (auto& e : sys.eqs) CHECK(e.subs(at).is_zero());
}

TEST_CASE("printed orbit steps replay")
{
    int n = 0;
    for (auto& st : cat().replay_steps()) {
        CAPTURE(st.id);
        auto r = replay(st);
        INFO(r.detail);
        CHECK(r.ok);
        ++n;
    }
    CHECK(n == 69);
}

TEST_CASE("the printed L01 step is not an automorphism")
{
    auto& steps = cat().replay_steps();
    auto it = std::find_if(steps.begin(), steps.end(), [](auto& s) { return s.id == "L01 eta3 printed"; });
    REQUIRE(it != steps.end());
    REQUIRE(it->phi);
    CHECK_FALSE(it->automorphism);
    const Algebra& L01 = cat().get("L01");
    Cocycle th = Cocycle::from_entries(3, it->skew, it->theta);
    CHECK_THROWS_AS(act(L01, th, *it->phi), NotAnAutomorphism);
    CHECK_FALSE(verify_homomorphism(L01, L01, *it->phi).holds);
}

TEST_CASE("A04 action rescales the cocycle by a33/a11")
{
    const Algebra& A04 = cat().get("A04");
    Scalar a11 = Scalar::param("a11"), a33 = Scalar::param("a33"), x = Scalar::param("x");
    SMatrix phi{{a11, 0, 0}, {0, a11 * a11, 0}, {0, 0, a33}};
    REQUIRE(verify_homomorphism(A04, A04, phi).holds);
    Cocycle th = coc(3, true, "2 1 3 = x");
    Cocycle got = act(A04, th, phi);
    CHECK(got.B[1](0, 2) == x * a33 / a11);
}

TEST_CASE("Z2 shapes")
{
    using enum Z2Shape;
    auto shape = [](const std::string& id, const char* variety) {
        const Algebra& A = cat().get(parse_ref(id));
        return classify_z2(A, is_commutative(A), variety).shape;
    };
    CHECK(shape("J12", "right-alternative") == empty);
    for (const char* id : {"A01", "A02", "A03", "A06", "A07", "A08", "A09", "A10", "A11"}) {
        CAPTURE(id);
        CHECK(shape(id, "right-alternative") == zero);
    }
    for (const char* id : {"A04", "A05", "J13"}) {
        CAPTURE(id);
        CHECK(shape(id, "right-alternative") == nontrivial);
    }
    for (const char* id : {"L02", "L03", "L03:alpha=2", "L04"}) {
        CAPTURE(id);
        CHECK(shape(id, "semi-alternative") == empty);
    }
    for (const char* id : {"L01", "L03:alpha=-1", "L03:alpha=0", "L03:alpha=1", "M"}) {
        CAPTURE(id);
        CHECK(shape(id, "semi-alternative") == nontrivial);
    }
    for (const char* id : {"B1", "B1:alpha=3", "B2"}) {
        CAPTURE(id);
        CHECK(shape(id, "binary-minus-one-one") == empty);
    }
    CHECK(shape("B1:alpha=0", "binary-minus-one-one") == nontrivial);
    CHECK(shape("B1:alpha=-1", "binary-minus-one-one") == nontrivial);
}

TEST_CASE("sampling never finds a cocycle where Z2 is empty or zero")
{
    for (const char* id : {"J12", "A07", "A10"}) {
        CAPTURE(id);
        const Algebra& A = cat().get(id);
        auto s = sample_z2(A, true, "right-alternative", 20, 0);
        CHECK(s.members == 0);
    }
}

TEST_CASE("bounded Groebner bases")
{
    int x = var_id("gx"), y = var_id("gy");
    Scalar X = Scalar::var(x), Y = Scalar::var(y);
    CHECK(ideal_is_unit({X * X + 1, X - 1}, {x}));
    CHECK_FALSE(ideal_is_unit({X * Y - 1}, {x, y}));
    CHECK(in_radical({X * X * X}, {x}, X));
    CHECK_FALSE(in_radical({X * Y}, {x, y}, X));

    auto g = groebner_basis({X * X - Y, X * Y - 1}, {x, y});
    CHECK_FALSE(g.unit);
    // y^3 = 1 follows from x^2 = y, xy = 1
    CHECK(in_radical({X * X - Y, X * Y - 1}, {x, y}, Y * Y * Y - 1));

    CHECK_THROWS_AS(groebner_basis({X * X * X - Y * Y, X * Y * Y - 1, Y * Y * Y * Y - X}, {x, y}, 1), BudgetExhausted);
}
