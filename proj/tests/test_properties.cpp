#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nassoc/suite.hpp"

using namespace nassoc;
using suite::detail::random_automorphism;
using suite::detail::random_invertible;
using suite::detail::random_member;
using suite::detail::small_rational;

namespace {
const Catalog& cat() { return Catalog::instance(); }

template <class Rng>
Vector random_vector(int n, Rng& rng)
{
    Vector v(n);
    for (auto& x : v) x = small_rational(rng);
    return v;
}

Cocycle generic_cocycle(int n, bool skew)
{
    Cocycle c = Cocycle::zero(n, skew);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = skew ? i + 1 : i; j < n; ++j)
                c.add_delta(k, i, j, Scalar::param("z" + std::to_string(k + 1) + std::to_string(i + 1) + std::to_string(j + 1)));
    return c;
}
}

TEST_CASE("basis check agrees with random evaluation")
{
    std::mt19937 rng(11);
    for (const char* variety : {"right-alternative", "semi-alternative", "associative", "lie-admissible"}) {
        Identity id = Registry::instance().get(variety).identities.back();
        for (auto& e : cat().entries()) {
            if (e.dim != 3) continue;
            Algebra A = random_member(e.algebra, rng);
            bool holds = check_identity(A, id).holds;
            bool all_zero = true;
            for (int k = 0; k < 20; ++k) {
                std::vector<Vector> vals;
                for (std::size_t v = 0; v < id.vars().size(); ++v) vals.push_back(random_vector(3, rng));
                all_zero &= is_zero(evaluate(A, id, vals));
            }
            CAPTURE(variety, e.id);
            CHECK(holds == all_zero);
        }
    }
}

TEST_CASE("derivation dimension is invariant under change of basis")
{
    std::mt19937 rng(5);
    for (auto& e : cat().entries()) {
        if (e.dim != 3) continue;
        Algebra A = random_member(e.algebra, rng);
        int d = derivation_algebra(A).dim;
        for (int k = 0; k < 3; ++k) {
            CAPTURE(e.id, k);
            CHECK(derivation_algebra(change_basis(A, random_invertible(3, rng))).dim == d);
        }
    }
}

TEST_CASE("act is a right action")
{
    std::mt19937 rng(3);
    for (auto& s : cat().aut_shapes()) {
        Algebra base = cat().get(s.base);
        bool skew = is_commutative(base);
        Cocycle th = generic_cocycle(base.dim(), skew);
        for (int k = 0; k < 3; ++k) {
            auto f = random_automorphism(s, rng), g = random_automorphism(s, rng);
            if (!f || !g) continue;
            CAPTURE(s.base.str(), k);
            CHECK(act(base, act(base, th, *f), *g) == act(base, th, *f * *g));
        }
    }
}

TEST_CASE("Z2 membership is invariant under the action")
{
    std::mt19937 rng(9);
    const Algebra& A04 = cat().get("A04");
    Cocycle th = Cocycle::from_entries(3, true, parse_cocycle_entries("2 1 3 = 3/2"));
    REQUIRE(z2_member(A04, th, "right-alternative").member);
    for (auto& s : cat().aut_shapes()) {
        if (s.base.id != "A04") continue;
        for (int k = 0; k < 5; ++k) {
            auto f = random_automorphism(s, rng);
            if (!f) continue;
            CHECK(z2_member(A04, act(A04, th, *f), "right-alternative").member);
        }
    }
    Cocycle bad = Cocycle::from_entries(3, true, parse_cocycle_entries("1 1 2 = 1"));
    REQUIRE_FALSE(z2_member(A04, bad, "right-alternative").member);
    for (auto& s : cat().aut_shapes()) {
        if (s.base.id != "A04") continue;
        auto f = random_automorphism(s, rng);
        if (f) CHECK_FALSE(z2_member(A04, act(A04, bad, *f), "right-alternative").member);
    }
}

TEST_CASE("extensions by cocycles in one orbit are isomorphic")
{
    std::mt19937 rng(21);
    const Algebra& A04 = cat().get("A04");
    Cocycle th = Cocycle::from_entries(3, true, parse_cocycle_entries("2 1 3 = 1"));
    for (auto& s : cat().aut_shapes()) {
        if (s.base.id != "A04") continue;
        auto f = random_automorphism(s, rng);
        REQUIRE(f);
        Algebra E1 = extend(A04, th), E2 = extend(A04, act(A04, th, *f));
        CHECK_FALSE(separate(E1, E2).separated);
    }
}

TEST_CASE("serialize and parse round trip on random members")
{
    std::mt19937 rng(1);
    for (auto& e : cat().entries()) {
        Algebra A = change_basis(random_member(e.algebra, rng), random_invertible(e.dim, rng));
        CAPTURE(e.id);
        CHECK(parse_algebra(serialize_algebra(A, "X")).algebra == A);
    }
}

TEST_CASE("property suite runs clean")
{
    SuiteOptions o;
    o.trials = 10;
    for (auto& r : suite::property_suites(o)) {
        CAPTURE(r.id, r.detail);
        CHECK(r.status == Status::pass);
    }
}
