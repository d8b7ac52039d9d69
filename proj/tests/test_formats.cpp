#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>

#include "nassoc/catalog.hpp"

using namespace nassoc;
namespace fs = std::filesystem;

TEST_CASE("algebra files")
{
    auto f = parse_algebra("# comment\n"
                           "id: X\n"
                           "dim: 3\n"
                           "param: alpha\n"
                           "constraint: alpha != 0\n"
                           "tags: right-alternative, !associative\n"
                           "e1 e2 = (1+alpha)*e3\n"
                           "e2 e1 = (1 - alpha) e3\n");
    CHECK(f.id == "X");
    CHECK(f.algebra.dim() == 3);
    CHECK(f.tags == std::vector<std::string>{"right-alternative", "!associative"});
    CHECK(f.algebra == Catalog::instance().get("R02"));

    SECTION("symmetric completion")
    {
        auto g = parse_algebra("dim: 2\nsymmetry: commutative\ne1 e2 = e2\n");
        CHECK(g.algebra.at(1, 0, 1) == Scalar(1));
        auto h = parse_algebra("dim: 2\nsymmetry: anticommutative\ne1 e2 = e2\n");
        CHECK(h.algebra.at(1, 0, 1) == Scalar(-1));
    }
}

TEST_CASE("algebra file errors carry path and line")
{
    auto fails_at = [](const std::string& text, int line) {
        try {
            parse_algebra(text, "x.alg");
        } catch (const FileError& e) {
            CHECK(e.path == "x.alg");
            CHECK(e.line == line);
            return true;
        }
        return false;
    };
    CHECK(fails_at("dim: 2\ne1 e1 = e2 +\n", 2));
    CHECK(fails_at("dim: 2\n\ne3 e1 = e2\n", 3));
    CHECK(fails_at("dim: 2\ne1 e1 = beta*e2\n", 2));
    CHECK(fails_at("dim: 2\ne1 e1 = e2\ne1 e1 = e1\n", 3));
    CHECK(fails_at("dim: 2\nsymmetry: commutative\ne1 e2 = e2\ne2 e1 = e1\n", 4));
    CHECK(fails_at("dim: 2\nparam: alpha\nconstraint: alpha != 0\ne1 e1 = t*e2\n", 4));
}

TEST_CASE("constraints are enforced on specialization")
{
    auto& C = Catalog::instance();
    CHECK_THROWS_AS(C.get("R02", {{"alpha", Scalar(0)}}), ConstraintViolation);
    CHECK_THROWS_AS(C.get("B1", {{"alpha", Scalar(2)}}), ConstraintViolation);
    CHECK_NOTHROW(C.get("B1", {{"alpha", Scalar(3)}}));
    CHECK_THROWS_AS(C.get(parse_ref("R02:beta=1")), UnknownParameter);
}

TEST_CASE("catalog round trip")
{
    for (auto& e : Catalog::instance().entries()) {
        CAPTURE(e.id);
        auto f = parse_algebra(serialize_algebra(e.algebra, e.id, e.source, e.tags));
        CHECK(f.algebra == e.algebra);
        CHECK(f.id == e.id);
        CHECK(f.tags == e.tags);
        CHECK(parse_algebra(e.text).algebra == e.algebra);
    }
}

TEST_CASE("exported catalog files match the built-in catalog")
{
    const char* src = std::getenv("NASSOC_SOURCE_DIR");
    if (!src) SKIP("NASSOC_SOURCE_DIR not set");
    fs::path dir = fs::path(src) / "data" / "catalog";
    REQUIRE(fs::is_directory(dir));
    auto& C = Catalog::instance();
    std::size_t files = 0;
    for (auto& p : fs::directory_iterator(dir)) {
        if (p.path().extension() != ".alg") continue;
        ++files;
        auto f = read_algebra_file(p.path().string());
        CAPTURE(p.path().string());
        REQUIRE(C.has(f.id));
        CHECK(f.algebra == C.entry(f.id).algebra);
        CHECK(f.tags == C.entry(f.id).tags);
        CHECK(p.path().stem() == f.id);
    }
    CHECK(files == C.entries().size());
}

TEST_CASE("cocycle files")
{
    auto c = parse_cocycle("dim: 3\nmode: symmetric\nparam: x\n2 1 3 = x\n1 2 2 = -1/2\n");
    CHECK(c.dim == 3);
    CHECK_FALSE(c.skew);
    REQUIRE(c.entries.size() == 2);
    CHECK(c.entries[0].comp == 2);
    CHECK(c.entries[0].coef == Scalar::param("x"));
    auto d = parse_cocycle(serialize_cocycle(c));
    REQUIRE(d.entries.size() == 2);
    CHECK(d.entries[1].coef == Scalar::frac(-1, 2));
    CHECK(d.skew == c.skew);
    CHECK_THROWS_AS(parse_cocycle("dim: 3\nmode: skew\n4 1 2 = 1\n"), FileError);
}

TEST_CASE("degeneration files")
{
    for (auto& row : Catalog::instance().degenerations()) {
        CAPTURE(row.label);
        auto d = parse_degeneration(serialize_degeneration(row.file));
        CHECK(d.source == row.file.source);
        CHECK(d.target == row.file.target);
        CHECK(d.rows == row.file.rows);
        CHECK(d.index.size() == row.file.index.size());
        CHECK(d.relabel.has_value() == row.file.relabel.has_value());
        if (d.relabel) CHECK(*d.relabel == *row.file.relabel);
    }
    CHECK_THROWS_AS(parse_degeneration("source: catalog:A13\ntarget: catalog:A12\nE1 = t*e1\nE1 = e2\n"), FileError);
}

TEST_CASE("polynomial system files")
{
    auto s = parse_poly_system("vars: x, y\nx^2 + y^2 - 1 = 0\nx - y = 0\n");
    CHECK(s.vars == std::vector<std::string>{"x", "y"});
    REQUIRE(s.eqs.size() == 2);
    auto r = parse_poly_system(emit_poly_system(s));
    CHECK(r.eqs == s.eqs);
    CHECK_THROWS_AS(parse_poly_system("vars: x\nx + w = 0\n"), FileError);
}

TEST_CASE("catalog references")
{
    auto r = parse_ref("A14:alpha=-i/2");
    CHECK(r.id == "A14");
    CHECK(r.params.at("alpha") == -Scalar::I() / 2);
    CHECK(r.str() == "A14:alpha=-1/2*i");
    CHECK_THROWS_AS(Catalog::instance().get("Z99"), UnknownId);
}
