// nassoc: command-line checks over the algebra catalog and user files.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "nassoc/suite.hpp"

using namespace nassoc;

namespace {

constexpr int kUsage = 64;
constexpr int kData = 65;

struct Globals {
    std::vector<std::string> params;
    unsigned seed = 0;
    int trials = 100;
    std::size_t budget = 20000;
    int jobs = 1;
    bool machine = false;
};

std::map<std::string, Scalar> param_map(const std::vector<std::string>& ps)
{
    std::map<std::string, Scalar> m;
    for (auto& p : ps) {
        auto eq = p.find('=');
        if (eq == std::string::npos) throw SyntaxError("--param expects NAME=EXPR, got '" + p + "'", 0);
        m[detail::trim(p.substr(0, eq))] = parse_scalar(p.substr(eq + 1), nullptr, false);
    }
    return m;
}

// "catalog:ID[:name=value,...]" or a path to an .alg file.
Algebra load_algebra(const std::string& ref, const std::map<std::string, Scalar>& params)
{
    Algebra A;
    if (ref.rfind("catalog:", 0) == 0) {
        AlgebraRef r = parse_ref(ref.substr(8));
        A = Catalog::instance().get(r);
        A.label = r.str();
    } else {
        A = read_algebra_file(ref).algebra;
        if (A.label.empty()) A.label = ref;
    }
    std::map<std::string, Scalar> own;
    for (auto& [k, v] : params)
        if (A.find_param(k)) own[k] = v;
    if (!own.empty()) {
        std::string label = A.label;
        A = specialize(A, own);
        char sep = label.find(':') == std::string::npos ? ':' : ',';
        for (auto& [k, v] : own) label += sep + k + "=" + v.str(), sep = ',';
        A.label = label;
    }
    for (auto& [k, v] : params)
        if (!own.count(k) && !A.variables().empty()) {
            bool used = false;
            for (int var : A.variables()) used |= var_name(var) == k;
            if (!used) throw UnknownParameter(k);
        }
    return A;
}

std::string strip_catalog(const std::string& s) { return s.rfind("catalog:", 0) == 0 ? s.substr(8) : s; }

std::string read_text_or_file(const std::string& s)
{
    if (s.size() > 1 && s[0] == '@') return detail::read_file(s.substr(1));
    return s;
}

std::string witness_text(const VarietyReport& r)
{
    std::string d;
    if (r.witness) d = "witness " + r.witness->str() + "\n" + r.witness->detail();
    if (r.closure_dim >= 0) d += (d.empty() ? "" : "\n") + std::string("2-generated closure dim ") + std::to_string(r.closure_dim);
    if (r.shortcut) d += "\ncharacterization: " + std::string(*r.shortcut ? "holds" : "fails") + " (" + r.shortcut_note + ")";
    if (r.sampled) d += "\ndecided by random sampling";
    return d;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Checks for finite-dimensional nonassociative algebras given by structure constants"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--param", g.params, "NAME=EXPR parameter value (repeatable)");
    app.add_option("--seed", g.seed, "random seed");
    app.add_option("--trials", g.trials, "random trials");
    app.add_option("--budget", g.budget, "Groebner pair budget");
    app.add_option("--jobs", g.jobs, "worker threads for suites");
    app.add_flag("--machine", g.machine, "stable output without timings");

    std::string variety, algebra, from, to, matrix, against, base, theta, phi, expected, row, file, id, name, expect;
    std::string represent, catalog_dir, filter, show, export_dir, replay_id;
    bool sampled = false, classify = false, all = false, groebner = false, emit = false, check = false, list = false;
    int samples = 10000, expect_dim = -1;

    auto* verify = app.add_subcommand("verify", "check an algebra against a variety");
    verify->add_option("--variety", variety)->required();
    verify->add_option("--algebra", algebra)->required();

    auto* bverify = app.add_subcommand("binary-verify", "check a binary variety (every 2-generated subalgebra)");
    bverify->add_option("--variety", variety)->required();
    bverify->add_option("--algebra", algebra)->required();
    bverify->add_flag("--sampled", sampled, "random generators instead of symbolic ones");

    auto* derdim = app.add_subcommand("derdim", "dimension of the derivation algebra");
    derdim->add_option("--algebra", algebra)->required();
    derdim->add_option("--expect", expect_dim, "expected dimension");

    auto* iso = app.add_subcommand("iso", "verify an explicit homomorphism or isomorphism");
    iso->add_option("--from", from)->required();
    iso->add_option("--to", to)->required();
    iso->add_option("--matrix", matrix, "rows ';', entries ','; columns are images of the basis")->required();

    auto* fp = app.add_subcommand("fingerprint", "invariant fingerprint, optionally compared with another algebra");
    fp->add_option("--algebra", algebra)->required();
    fp->add_option("--against", against);

    auto* z2 = app.add_subcommand("z2", "cocycle membership or the shape of Z2");
    z2->add_option("--base", base)->required();
    z2->add_option("--variety", variety)->required();
    z2->add_option("--theta", theta, "entries 'k i j = c; ...' or @file.coc");
    z2->add_flag("--classify", classify, "decide whether Z2 is empty, zero or larger");
    z2->add_option("--expect", expect, "empty | zero | nontrivial");

    auto* orbit = app.add_subcommand("orbit-step", "check theta*phi for a base automorphism");
    orbit->add_option("--replay", replay_id, "a catalog replay step id, or 'all'");
    orbit->add_option("--base", base);
    orbit->add_option("--theta", theta);
    orbit->add_option("--phi", phi);
    orbit->add_option("--expected", expected);

    auto* degen = app.add_subcommand("degen", "verify a degeneration witness");
    degen->add_option("--row", row, "catalog:SRC->TGT");
    degen->add_option("--file", file, ".deg file");
    degen->add_flag("--all", all);

    auto* cert = app.add_subcommand("certificate", "check a closed-set certificate");
    cert->add_option("--id", id);
    cert->add_flag("--all", all);
    cert->add_option("--represent", represent, "search for a presentation of this algebra inside the set");
    cert->add_option("--samples", samples);
    cert->add_flag("--groebner", groebner, "also run a bounded Groebner basis");
    cert->add_flag("--emit", emit, "print the representability system");

    auto* suite_cmd = app.add_subcommand("suite", "reproduction suites");
    suite_cmd->add_option("name", name, "algebraic | geometric | four-dim | all")->required();
    suite_cmd->add_option("--samples", samples);
    suite_cmd->add_option("--catalog-dir", catalog_dir, "self-check these .alg files instead of the built-in catalog");

    auto* cat_cmd = app.add_subcommand("catalog", "list, show, export or self-check catalog entries");
    cat_cmd->add_flag("--list", list);
    cat_cmd->add_option("--filter", filter, "e.g. dim=3,right-alternative,!associative");
    cat_cmd->add_option("--show", show);
    cat_cmd->add_option("--export", export_dir);
    cat_cmd->add_flag("--check", check);

    for (auto* s : app.get_subcommands({})) s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    Report rep;
    std::string echo;
    for (int k = 1; k < argc; ++k) echo += (k > 1 ? " " : "") + std::string(argv[k]);
    auto t0 = std::chrono::steady_clock::now();
    try {
        auto params = param_map(g.params);
        auto& cat = Catalog::instance();
        if (*verify) {
            Algebra A = load_algebra(algebra, params);
            auto r = check_variety(A, variety);
            rep.items.push_back(pass_if(variety + " " + A.label, r.member, witness_text(r)));
        } else if (*bverify) {
            Algebra A = load_algebra(algebra, params);
            BinaryOptions bo;
            bo.symbolic = !sampled;
            bo.trials = g.trials;
            bo.seed = g.seed;
            auto r = check_binary_variety(A, variety, bo);
            Outcome o = pass_if(variety + " " + A.label, r.member, witness_text(r));
            if (r.sampled && r.member) o.status = Status::inconclusive;
            rep.items.push_back(o);
        } else if (*derdim) {
            Algebra A = load_algebra(algebra, params);
            auto d = derivation_algebra(A);
            std::string detail = "dim Der = " + std::to_string(d.dim) + (d.generic ? " (generic in the parameters)" : "");
            for (auto& D : d.basis) detail += "\n" + matrix_str(D);
            rep.items.push_back(pass_if("derivations " + A.label, expect_dim < 0 || expect_dim == d.dim, detail));
        } else if (*iso) {
            Algebra A = load_algebra(from, params), B = load_algebra(to, params);
            auto h = verify_homomorphism(A, B, parse_matrix(read_text_or_file(matrix)));
            rep.items.push_back(pass_if("isomorphism " + A.label + " -> " + B.label, h.holds && h.invertible, h.str()));
        } else if (*fp) {
            Algebra A = load_algebra(algebra, params);
            auto f = fingerprint(A);
            if (against.empty()) {
                rep.items.push_back({"fingerprint " + A.label, Status::pass, f.str()});
            } else {
                Algebra B = load_algebra(against, params);
                auto s = separate(f, fingerprint(B));
                rep.items.push_back({"separate " + A.label + " " + B.label, s.separated ? Status::pass : Status::inconclusive,
                                     s.str()});
            }
        } else if (*z2) {
            Algebra A = load_algebra(base, params);
            bool skew = is_commutative(A);
            if (classify || !expect.empty()) {
                auto c = classify_z2(A, skew, variety, g.budget);
                std::string d = std::to_string(c.unknowns) + " unknowns, " + std::to_string(c.equations) +
                                " equations, tangent dim " + std::to_string(c.tangent_dim) + ", " +
                                std::to_string(c.pairs) + " pairs; Z2 is " + z2_shape_name(c.shape);
                if (!c.free_vars.empty()) {
                    d += "\nnot forced to vanish:";
                    for (auto& v : c.free_vars) d += " " + v;
                }
                rep.items.push_back(pass_if("z2 " + A.label, expect.empty() || expect == z2_shape_name(c.shape), d));
            }
            if (!theta.empty()) {
                std::vector<CocycleFile::Entry> es;
                if (theta[0] == '@') {
                    auto cf = parse_cocycle(detail::read_file(theta.substr(1)), theta.substr(1));
                    if (cf.skew != skew) throw SymmetryConflict("cocycle file symmetry does not match the base");
                    es = cf.entries;
                } else {
                    es = parse_cocycle_entries(theta);
                }
                Cocycle th = Cocycle::from_entries(A.dim(), skew, es);
                auto r = z2_member(A, th, variety);
                rep.items.push_back(pass_if("z2-member " + th.str(), r.member, r.str()));
            }
            if (rep.items.empty()) throw CLI::ValidationError("z2", "give --theta, --classify or --expect");
        } else if (*orbit) {
            std::vector<ReplayStep> steps;
            if (!replay_id.empty()) {
                for (auto& s : cat.replay_steps())
                    if (replay_id == "all" || s.id == replay_id) steps.push_back(s);
                if (steps.empty()) throw UnknownId("replay step " + replay_id);
            } else {
                if (base.empty() || theta.empty() || phi.empty() || expected.empty())
                    throw CLI::ValidationError("orbit-step", "give --replay or all of --base --theta --phi --expected");
                Algebra A = load_algebra(base, params);
                ReplayStep st;
                st.id = "step";
                st.base = parse_ref(strip_catalog(base));
                st.skew = is_commutative(A);
                Cocycle th = Cocycle::from_entries(A.dim(), st.skew, parse_cocycle_entries(theta));
                Cocycle ex = Cocycle::from_entries(A.dim(), st.skew, parse_cocycle_entries(expected));
                try {
                    auto r = verify_orbit_step(A, th, parse_matrix(phi), ex);
                    rep.items.push_back(pass_if("orbit-step", r.holds, r.message));
                } catch (const NotAnAutomorphism& e) {
                    rep.items.push_back({"orbit-step", Status::fail, e.what()});
                }
            }
            for (auto& s : steps) {
                auto r = replay(s);
                rep.items.push_back(pass_if("replay " + r.id, r.ok, r.detail));
            }
        } else if (*degen) {
            std::vector<DegenerationRow> rows;
            if (all) rows = cat.degenerations();
            if (!row.empty()) rows.push_back(cat.degeneration(strip_catalog(row)));
            for (auto& r : rows) {
                auto v = verify_degeneration(r);
                auto d = derivation_condition(r);
                rep.items.push_back(pass_if("degeneration " + r.label, v.verified(), v.str() + "\n" + d.str()));
            }
            if (!file.empty()) {
                auto df = parse_degeneration(detail::read_file(file), file);
                std::map<std::string, Scalar> idx(df.index.begin(), df.index.end()),
                    tp(df.target_params.begin(), df.target_params.end());
                for (auto& [k, v] : params) idx.emplace(k, v), tp.emplace(k, v);
                Algebra S = load_algebra(df.source, idx), T = load_algebra(df.target, tp);
                auto v = verify_degeneration(S, T, df.rows, df.relabel);
                rep.items.push_back(pass_if("degeneration " + file, v.verified(), v.str()));
            }
            if (rep.items.empty()) throw CLI::ValidationError("degen", "give --row, --file or --all");
        } else if (*cert) {
            SuiteOptions so;
            so.seed = g.seed;
            so.trials = g.trials;
            std::vector<const ClosedSetCertificate*> cs;
            if (all)
                for (auto& c : cat.certificates()) cs.push_back(&c);
            if (!id.empty()) cs.push_back(&cat.certificate(id));
            if (cs.empty()) throw CLI::ValidationError("certificate", "give --id or --all");
            for (auto* c : cs) {
                if (represent.empty()) {
                    auto v = suite::certificate_checks(*c, so);
                    rep.items.insert(rep.items.end(), v.begin(), v.end());
                    continue;
                }
                Algebra B = load_algebra(represent, params);
                auto rs = emit_representability_system(B, *c);
                if (emit) std::cout << emit_poly_system(rs.system);
                SolveOptions opt;
                opt.samples = samples;
                opt.seed = g.seed;
                opt.groebner = groebner;
                opt.budget = g.budget;
                auto r = solve_system_bounded(rs.system, opt);
                Status st = r.status == SolveResult::Status::solution ? Status::pass
                            : r.status == SolveResult::Status::infeasible ? Status::fail
                                                                          : Status::inconclusive;
                rep.items.push_back({"representability " + B.label + " in " + c->id, st, r.str()});
            }
        } else if (*suite_cmd) {
            SuiteOptions so;
            so.seed = g.seed;
            so.trials = g.trials;
            so.samples = samples;
            so.jobs = g.jobs;
            so.budget = g.budget;
            if (!catalog_dir.empty()) so.entries = load_catalog_dir(catalog_dir);
            rep = run_suite(name, so);
        } else if (*cat_cmd) {
            if (list || !filter.empty()) {
                for (auto& i : cat.list(parse_filter(filter))) std::cout << i << "\n";
                return 0;
            }
            if (!show.empty()) {
                std::cout << cat.entry(strip_catalog(show)).text;
                return 0;
            }
            if (!export_dir.empty()) {
                std::filesystem::create_directories(export_dir);
                for (auto& e : cat.entries()) {
                    std::ofstream out(std::filesystem::path(export_dir) / (e.id + ".alg"));
                    out << serialize_algebra(e.algebra, e.id, e.source, e.tags);
                }
                std::cout << cat.entries().size() << " entries written to " << export_dir << "\n";
                return 0;
            }
            if (check) {
                for (auto& e : cat.entries()) {
                    auto f = Catalog::check_entry(e);
                    std::string d;
                    for (auto& x : f) d += x.tag + " @" + x.at + ": " + x.detail + "\n";
                    rep.items.push_back(pass_if("selfcheck " + e.id, f.empty(), d));
                }
            } else {
                throw CLI::ValidationError("catalog", "give --list, --filter, --show, --export or --check");
            }
        }
    } catch (const CLI::Error& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kUsage;
    } catch (const BudgetExhausted& e) {
        std::cout << "command: " << echo << "\ninconclusive: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kData;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kData;
    }
    if (rep.seconds == 0) rep.seconds = seconds_since(t0);
    std::cout << "command: " << echo << "\n" << rep.str(g.machine);
    return rep.exit_code();
}
