#include <catch2/catch_amalgamated.hpp>

#include "nassoc/matrix.hpp"
#include "nassoc/parse.hpp"

using namespace nassoc;

namespace {
Scalar S(const char* s) { return parse_scalar(s); }
}

TEST_CASE("gaussian rationals")
{
    GQ i = GQ::I();
    CHECK(i * i == GQ(-1));
    CHECK(GQ::frac(2, 4) == GQ::frac(1, 2));
    CHECK((GQ(1) + i).inv() == GQ::frac(1, 2) - GQ::frac(1, 2) * i);
    CHECK_THROWS_AS(GQ(0).inv(), DivisionByZero);
}

TEST_CASE("scalar canonical form")
{
    Scalar t = Scalar::t(), a = Scalar::param("alpha");
    CHECK(((t * t + t) / t) == t + 1);
    CHECK(((a * a - 1) / (a + 1)) == a - 1);
    CHECK((1 / (t * t - 2) + t / (2 - t * t)) == (1 - t) / (t * t - 2));
    CHECK((Scalar::I() * Scalar::I()) == Scalar(-1));
    CHECK(((2 * a) / (4 * a * a)) == 1 / (2 * a));
    CHECK_THROWS_AS(a / (a - a), DivisionByZero);
}

TEST_CASE("scalar levels")
{
    CHECK(Scalar::frac(1, 3).level() == Level::rational);
    CHECK(Scalar::I().level() == Level::gaussian);
    CHECK((Scalar::param("alpha") + 1).level() == Level::polynomial);
    CHECK((1 / Scalar::param("alpha")).level() == Level::quotient);
}

TEST_CASE("limits at t = 0")
{
    Scalar t = Scalar::t(), a = Scalar::param("alpha");
    CHECK(((t * t + t) / t).limit_at_zero() == Scalar(1));
    CHECK(((t * a + 3 * t * t) / (2 * t)).limit_at_zero() == a / 2);
    CHECK_THROWS_AS((1 / t).limit_at_zero(), PoleError);
    CHECK_THROWS_AS((a / (t * t + t)).limit_at_zero(), PoleError);
}

TEST_CASE("substitution and evaluation")
{
    Scalar a = Scalar::param("alpha");
    int v = var_id("alpha");
    CHECK((a * a + 1).subs(v, Scalar::I()) == Scalar(0));
    CHECK(((a + 1) / (a - 1)).subs(v, Scalar(3)) == Scalar(2));
    CHECK_THROWS_AS((1 / (a - 1)).subs(v, Scalar(1)), DivisionByZero);
}

TEST_CASE("expression grammar")
{
    CHECK(S("i*i") == Scalar(-1));
    CHECK(S("-2^2") == Scalar(-4));
    CHECK(S("(1+i)^2") == 2 * Scalar::I());
    CHECK(S("1/2 + 1/3") == Scalar::frac(5, 6));
    CHECK(S("alpha^0") == Scalar(1));
    CHECK(S("t^2/t") == Scalar::t());
    CHECK(S(" 2 * ( alpha - 1 ) / 4 ") == (Scalar::param("alpha") - 1) / 2);
    CHECK_THROWS_AS(S("2alpha"), SyntaxError);
    CHECK_THROWS_AS(S("alpha^-1"), SyntaxError);
    CHECK_THROWS_AS(S("1/0"), DivisionByZero);
    CHECK_THROWS_AS(S("1 +"), SyntaxError);
    CHECK_THROWS_AS(S("(1"), SyntaxError);
    std::set<std::string> allowed = {"alpha"};
    CHECK_THROWS_AS(parse_scalar("beta + 1", &allowed), UnknownParameter);
    CHECK_THROWS_AS(parse_scalar("t", nullptr, false), UnknownParameter);
}

TEST_CASE("printed scalars parse back")
{
    for (const char* s : {"-3/7", "alpha^2 - 2*alpha + i", "1/(t^2 - 2)", "(alpha + 1)/(alpha - 1)", "-i*t^5"}) {
        Scalar x = S(s);
        CAPTURE(s, x.str());
        CHECK(S(x.str().c_str()) == x);
    }
}

TEST_CASE("exact matrices")
{
    Scalar a = Scalar::param("a"), b = Scalar::param("b"), c = Scalar::param("c"), d = Scalar::param("d");
    SMatrix M{{a, b}, {c, d}};
    CHECK(M.det() == a * d - b * c);
    CHECK(M * M.inverse() == SMatrix::identity(2));
    SMatrix N{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    CHECK(N.rank() == 2);
    auto ns = N.nullspace();
    REQUIRE(ns.size() == 1);
    CHECK(is_zero(N.apply(ns[0])));
    CHECK_THROWS_AS(N.inverse(), SingularError);
}
