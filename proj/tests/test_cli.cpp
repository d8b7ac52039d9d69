#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
};

std::string bin()
{
    const char* b = std::getenv("NASSOC_BIN");
    return b ? b : "nassoc";
}

Run run(const std::string& args)
{
    std::string cmd = bin() + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

bool has(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

fs::path scratch(const std::string& name)
{
    fs::path d = fs::temp_directory_path() / ("nassoc_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d / name;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("membership of a family member")
{
    auto r = run("verify --variety right-alternative --algebra catalog:R02 --param alpha=2");
    CHECK(r.code == 0);
    CHECK(has(r.out, "right-alternative R02:alpha=2: pass"));
}

TEST_CASE("degeneration row from the catalog")
{
    auto r = run("degen --row 'catalog:A13->A12'");
    CHECK(r.code == 0);
    CHECK(has(r.out, "verified"));
}

TEST_CASE("failure carries the witness")
{
    auto r = run("verify --variety associative --algebra catalog:R04");
    CHECK(r.code == 1);
    CHECK(has(r.out, "witness (e1,e1,e2)"));
}

TEST_CASE("exit codes")
{
    CHECK(run("").code == 64);
    CHECK(run("frobnicate").code == 64);
    CHECK(run("verify --variety associative").code == 64);
    CHECK(run("verify --variety nonsense --algebra catalog:R04").code == 65);
    CHECK(run("verify --variety associative --algebra catalog:Q42").code == 65);
    CHECK(run("verify --variety associative --algebra catalog:R02 --param alpha=0").code == 65);
    CHECK(run("verify --variety associative --algebra catalog:R02 --param alpha=1/0").code == 65);
    CHECK(run("fingerprint --algebra catalog:S02 --against catalog:S04").code == 2);
    CHECK(run("fingerprint --algebra catalog:S06 --against catalog:S09").code == 0);
    CHECK(run("derdim --algebra catalog:A18 --expect 6").code == 0);
    CHECK(run("derdim --algebra catalog:A18 --expect 5").code == 1);
}

TEST_CASE("file errors name the file and line")
{
    auto f = scratch("broken.alg");
    write(f, "dim: 3\ne1 e2 = e3\ne2 e4 = e1\n");
    auto r = run("verify --variety associative --algebra " + f.string());
    CHECK(r.code == 65);
    CHECK(has(r.out, f.string() + ":3:"));
}

TEST_CASE("user algebra files")
{
    auto f = scratch("heis.alg");
    write(f, "id: heis\ndim: 3\nsymmetry: anticommutative\ne1 e2 = e3\n");
    CHECK(run("verify --variety lie --algebra " + f.string()).code == 0);
    auto r = run("iso --from " + f.string() + " --to catalog:R00 --matrix '1,0,0; 0,1,0; 0,0,1'");
    CHECK(r.code == 0);
}

TEST_CASE("cocycle membership and orbit steps")
{
    CHECK(run("z2 --base catalog:A04 --variety right-alternative --theta '2 1 3 = x'").code == 0);
    CHECK(run("z2 --base catalog:A07 --variety right-alternative --theta '1 1 2 = 1'").code == 1);
    CHECK(run("z2 --base catalog:A07 --variety right-alternative --expect zero").code == 0);
    auto c = scratch("t.coc");
    write(c, "dim: 3\nmode: skew\n2 1 3 = 1\n");
    CHECK(run("z2 --base catalog:A04 --variety right-alternative --theta @" + c.string()).code == 0);

    auto r = run("orbit-step --replay 'L01 eta3 printed'");
    CHECK(r.code == 0);
    CHECK(run("orbit-step --base catalog:A04 --theta '2 1 3 = 1' --phi '2,0,0; 0,4,0; 0,0,1' --expected '2 1 3 = 1/2'")
              .code == 0);
    CHECK(run("orbit-step --base catalog:A04 --theta '2 1 3 = 1' --phi '2,0,0; 0,4,0; 0,0,1' --expected '2 1 3 = 1'")
              .code == 1);
    CHECK(run("orbit-step --base catalog:A04 --theta '2 1 3 = 1' --phi '2,0,0; 0,2,0; 0,0,1' --expected '2 1 3 = 1'")
              .code == 1);
}

TEST_CASE("degeneration files")
{
    auto f = scratch("row.deg");
    write(f, "source: catalog:A13\ntarget: catalog:A12\nE1 = t*e1\nE2 = e2 + e3\nE3 = -t*e3\n");
    CHECK(run("degen --file " + f.string()).code == 0);
    write(f, "source: catalog:A13\ntarget: catalog:A12\nE1 = e1\nE2 = e2\nE3 = e3\n");
    auto r = run("degen --file " + f.string());
    CHECK(r.code == 1);
    CHECK(has(r.out, "mismatch at c11^2"));
}

TEST_CASE("machine output is reproducible")
{
    auto a = run("--machine --seed 4 certificate --id assoc-A20");
    auto b = run("--machine --seed 4 certificate --id assoc-A20");
    CHECK(a.out == b.out);
    CHECK_FALSE(has(a.out, "time:"));
}

TEST_CASE("representability search is inconclusive")
{
    auto r = run("certificate --id perm-A24 --represent catalog:A14:alpha=2 --samples 500");
    CHECK(r.code == 2);
    CHECK(has(r.out, "no solution found"));
    CHECK(run("certificate --id perm-A24 --represent catalog:A24").code == 0);
}

TEST_CASE("catalog listing and export")
{
    auto r = run("catalog --filter dim=4,binary-minus-one-one");
    CHECK(r.code == 0);
    CHECK(has(r.out, "BB01\n"));
    CHECK_FALSE(has(r.out, "SS01"));
    CHECK(run("catalog --show S11").out.rfind("id: S11", 0) == 0);

    auto dir = scratch("export");
    CHECK(run("catalog --export " + dir.string()).code == 0);
    const char* src = std::getenv("NASSOC_SOURCE_DIR");
    if (!src) return;
    for (auto& p : fs::directory_iterator(fs::path(src) / "data" / "catalog")) {
        std::ifstream a(p.path()), b(dir / p.path().filename());
        std::string x((std::istreambuf_iterator<char>(a)), {}), y((std::istreambuf_iterator<char>(b)), {});
        CAPTURE(p.path().filename().string());
        CHECK(x == y);
    }
}

TEST_CASE("suite on a corrupted catalog copy names the entry")
{
    auto dir = scratch("corrupt");
    REQUIRE(run("catalog --export " + dir.string()).code == 0);
    // R04 claims right-alternative; break one constant
    std::ifstream in(dir / "R04.alg");
    std::string text((std::istreambuf_iterator<char>(in)), {});
    in.close();
    auto pos = text.find("e1 e3 = e3");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 10, "e1 e3 = 2*e3");
    write(dir / "R04.alg", text);

    auto r = run("--machine suite all --catalog-dir " + dir.string());
    CHECK(r.code == 1);
    CHECK(has(r.out, "check selfcheck R04: fail"));
    CHECK_FALSE(has(r.out, "check selfcheck R03: fail"));
    CHECK(run("--machine suite algebraic --catalog-dir " + dir.string()).code == 1);
    CHECK(run("suite nonsense").code == 65);
}
