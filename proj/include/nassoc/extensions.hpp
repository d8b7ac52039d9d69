#pragma once

#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "groebner.hpp"

namespace nassoc {

enum class FormSymmetry { skew, symmetric, none };

struct BilinearForm {
    SMatrix B;
    FormSymmetry mode = FormSymmetry::none;

    bool valid() const
    {
        if (mode == FormSymmetry::none) return true;
        for (int i = 0; i < B.rows(); ++i)
            for (int j = 0; j < B.cols(); ++j) {
                const Scalar& b = B(j, i);
                if (mode == FormSymmetry::skew ? B(i, j) != -b : B(i, j) != b) return false;
            }
        return true;
    }
};

// theta = (B_1, ..., B_n); theta(x, y) = sum_k (x^T B_k y) e_k.
struct Cocycle {
    int n = 0;
    bool skew = true;  // skew forms over a Jordan base, symmetric over a Malcev base
    std::vector<SMatrix> B;

    static Cocycle zero(int n, bool skew)
    {
        Cocycle c;
        c.n = n;
        c.skew = skew;
        c.B.assign(n, SMatrix(n, n));
        return c;
    }

    // Entries are coefficients of Delta_ij in component k, 1-based.
    static Cocycle from_entries(int n, bool skew, const std::vector<CocycleFile::Entry>& es)
    {
        Cocycle c = zero(n, skew);
        for (auto& e : es) c.add_delta(e.comp - 1, e.i - 1, e.j - 1, e.coef);
        return c;
    }

    void add_delta(int k, int i, int j, const Scalar& coef)
    {
        if (k < 0 || k >= n || i < 0 || i >= n || j < 0 || j >= n)
            throw IndexOutOfRange("cocycle entry outside dimension " + std::to_string(n));
        if (i == j && skew) throw SymmetryConflict("skew cocycle has no diagonal Delta_" + std::to_string(i + 1) +
                                                   std::to_string(j + 1));
        B[k](i, j) += coef;
        if (i != j) B[k](j, i) += skew ? -coef : coef;
    }

    BilinearForm form(int k) const { return {B[k], skew ? FormSymmetry::skew : FormSymmetry::symmetric}; }

    bool is_zero() const
    {
        for (auto& m : B)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (!m(i, j).is_zero()) return false;
        return true;
    }

    // Canonical Delta decomposition: i < j for skew, i <= j for symmetric.
    std::vector<CocycleFile::Entry> entries() const
    {
        std::vector<CocycleFile::Entry> out;
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = skew ? i + 1 : i; j < n; ++j)
                    if (!B[k](i, j).is_zero()) out.push_back({k + 1, i + 1, j + 1, B[k](i, j)});
        return out;
    }

    std::string str() const
    {
        std::vector<std::string> comps(n);
        for (auto& e : entries()) {
            std::string d = "D" + std::to_string(e.i) + std::to_string(e.j);
            std::string c = e.coef.str();
            std::string term;
            if (e.coef == Scalar(1)) term = d;
            else if (e.coef == Scalar(-1)) term = "-" + d;
            else if (c.find_first_of("+-", 1) == std::string::npos) term = c + "*" + d;
            else term = "(" + c + ")*" + d;
            std::string& s = comps[e.comp - 1];
            if (s.empty()) s = term;
            else if (term[0] == '-') s += " - " + term.substr(1);
            else s += " + " + term;
        }
        std::string s = "(";
        for (int k = 0; k < n; ++k) s += (k ? ", " : "") + (comps[k].empty() ? std::string("0") : comps[k]);
        return s + ")";
    }

    friend bool operator==(const Cocycle& a, const Cocycle& b)
    {
        if (a.n != b.n || a.skew != b.skew) return false;
        for (int k = 0; k < a.n; ++k)
            for (int i = 0; i < a.n; ++i)
                for (int j = 0; j < a.n; ++j)
                    if (a.B[k](i, j) != b.B[k](i, j)) return false;
        return true;
    }
    friend bool operator!=(const Cocycle& a, const Cocycle& b) { return !(a == b); }
};

inline void check_cocycle_symmetry(const Algebra& base, const Cocycle& th)
{
    if (base.dim() != th.n) throw DimensionMismatch("cocycle dimension differs from the base");
    if (th.skew && !is_commutative(base))
        throw SymmetryConflict("skew cocycles need a commutative base");
    if (!th.skew && !is_anticommutative(base))
        throw SymmetryConflict("symmetric cocycles need an anticommutative base");
    for (int k = 0; k < th.n; ++k)
        if (!th.form(k).valid()) throw SymmetryConflict("cocycle component " + std::to_string(k + 1) + " breaks its symmetry");
}

inline Algebra extend(const Algebra& base, const Cocycle& th)
{
    check_cocycle_symmetry(base, th);
    Algebra A = base;
    int n = base.dim();
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!th.B[k](i, j).is_zero()) A.at(i, j, k) = A.at(i, j, k) + th.B[k](i, j);
    A.label.clear();
    return A;
}

// Identities whose basis evaluation defines Z^2 for `variety`.
inline std::vector<Identity> z2_identities(const std::string& variety)
{
    const auto& spec = Registry::instance().get(variety);
    if (!spec.binary) return spec.identities;
    if (variety == "binary-minus-one-one")
        return {identities::right_alternative(), linearize(identities::pchelintsev())};
    throw UnknownVariety(variety + " has no polynomial Z^2 system");
}

struct Z2System {
    bool skew = true;
    std::vector<int> vars;  // z<k><i><j>
    std::vector<std::pair<int, int>> slots;  // (i, j) per variable within its component
    std::vector<int> comp;
    std::vector<Scalar> eqs;

    Cocycle generic(int n) const
    {
        Cocycle c = Cocycle::zero(n, skew);
        for (std::size_t v = 0; v < vars.size(); ++v)
            c.add_delta(comp[v], slots[v].first, slots[v].second, Scalar::var(vars[v]));
        return c;
    }
    std::map<int, Scalar> assignment(const Cocycle& th) const
    {
        std::map<int, Scalar> m;
        for (std::size_t v = 0; v < vars.size(); ++v) m[vars[v]] = th.B[comp[v]](slots[v].first, slots[v].second);
        return m;
    }
    PolySystem poly_system() const
    {
        PolySystem p;
        for (int v : vars) p.vars.push_back(var_name(v));
        for (auto& e : eqs) p.eqs.push_back(e.num());
        return p;
    }
};

// The membership equations on a fully generic theta: every linearized identity
// of the variety evaluated on every basis tuple of the extension.
inline Z2System z2_equations(const Algebra& base, bool skew, const std::string& variety)
{
    int n = base.dim();
    Z2System sys;
    sys.skew = skew;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = skew ? i + 1 : i; j < n; ++j) {
                sys.vars.push_back(var_id("z" + std::to_string(k + 1) + std::to_string(i + 1) + std::to_string(j + 1)));
                sys.slots.push_back({i, j});
                sys.comp.push_back(k);
            }
    Algebra ext = extend(base, sys.generic(n));
    std::set<std::string> seen;
    std::vector<Vector> basis(n);
    for (int k = 0; k < n; ++k) basis[k] = unit_vector(n, k);
    for (auto& id : z2_identities(variety)) {
        Identity lin = linearize(id);
        std::size_t m = lin.vars().size();
        std::vector<int> idx(m, 0);
        while (true) {
            std::vector<Vector> vals;
            for (int x : idx) vals.push_back(basis[x]);
            for (auto& c : evaluate(ext, lin, vals)) {
                if (c.is_zero()) continue;
                Scalar e(c.num());
                // normalize sign/scale so duplicates collapse
                GQ lc = e.num().lc();
                e = e * Scalar(GQ(1) / lc);
                if (seen.insert(e.str()).second) sys.eqs.push_back(e);
            }
            std::size_t p = 0;
            while (p < m && ++idx[p] == n) idx[p++] = 0;
            if (p == m) break;
        }
    }
    return sys;
}

struct Z2Report {
    bool member = false;
    std::optional<Witness> witness;
    bool derived_matches = true;          // plus/minus algebra of the extension is the base
    std::optional<bool> equations_vanish;  // cross-check through the displayed system
    std::string str() const
    {
        std::string s = member ? "in Z2" : "not in Z2";
        if (witness) s += ": " + witness->detail();
        if (!derived_matches) s += " (derived algebra differs from the base)";
        if (equations_vanish && *equations_vanish != member) s += " (equation cross-check disagrees)";
        return s;
    }
};

inline Z2Report z2_member(const Algebra& base, const Cocycle& th, const std::string& variety)
{
    Algebra ext = extend(base, th);
    Z2Report r;
    auto rep = check_variety(ext, variety);
    r.witness = rep.witness;
    r.derived_matches = (th.skew ? plus_algebra(ext) : minus_algebra(ext)) == base;
    r.member = rep.member && r.derived_matches;
    if (variety != "binary-perm" && variety != "binary-lie") {
        auto sys = z2_equations(base, th.skew, variety);
        auto asg = sys.assignment(th);
        bool all = true;
        for (auto& e : sys.eqs)
            if (!e.subs(asg).is_zero()) {
                all = false;
                break;
            }
        r.equations_vanish = all;
    }
    return r;
}

// theta * phi = phi^{-1} theta(phi x, phi y). phi's columns are the images of
// the basis. Computed by the component rule B'_i = sum_j b_ij phi^T B_j phi with
// b = phi^{-1} and, independently, entry by entry; the two must agree.
inline Cocycle act(const Algebra& base, const Cocycle& th, const SMatrix& phi)
{
    int n = th.n;
    if (phi.rows() != n || phi.cols() != n) throw DimensionMismatch("automorphism shape");
    auto h = verify_homomorphism(base, base, phi);
    if (!h.holds) throw NotAnAutomorphism("phi is not a homomorphism of the base: " + h.str());
    if (!h.invertible) throw NotAnAutomorphism("phi is singular");
    SMatrix b = phi.inverse();
    SMatrix pt = phi.transpose();

    Cocycle gram = Cocycle::zero(n, th.skew);
    std::vector<SMatrix> pulled(n);
    for (int j = 0; j < n; ++j) pulled[j] = pt * th.B[j] * phi;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!b(i, j).is_zero()) gram.B[i] = gram.B[i] + pulled[j].scaled(b(i, j));

    Cocycle direct = Cocycle::zero(n, th.skew);
    for (int l = 0; l < n; ++l)
        for (int m = 0; m < n; ++m) {
            Vector x = phi.col(l), y = phi.col(m), v(n);
            for (int i = 0; i < n; ++i) {
                Vector By = th.B[i].apply(y);
                Scalar s;
                for (int a = 0; a < n; ++a)
                    if (!x[a].is_zero()) s = s + x[a] * By[a];
                v[i] = s;
            }
            Vector w = b.apply(v);
            for (int i = 0; i < n; ++i) direct.B[i](l, m) = w[i];
        }
    if (gram != direct) throw Error("internal: the two cocycle action formulas disagree");
    return gram;
}

struct OrbitStepResult {
    bool holds = false;
    Cocycle got;
    std::string message;
};

inline OrbitStepResult verify_orbit_step(const Algebra& base, const Cocycle& th, const SMatrix& phi, const Cocycle& expected)
{
    OrbitStepResult r;
    r.got = act(base, th, phi);
    r.holds = r.got == expected;
    r.message = r.holds ? "theta*phi = " + r.got.str() : "theta*phi = " + r.got.str() + ", expected " + expected.str();
    return r;
}

// Outcome of replaying one printed step of an orbit computation.
struct ReplayOutcome {
    std::string id;
    bool ok = false;
    std::string detail;
};

inline ReplayOutcome replay(const ReplayStep& st)
{
    auto& cat = Catalog::instance();
    ReplayOutcome out;
    out.id = st.id;
    try {
        Algebra base = cat.get(st.base);
        Cocycle th = Cocycle::from_entries(base.dim(), st.skew, st.theta);
        Cocycle ex = Cocycle::from_entries(base.dim(), st.skew, st.expected);
        std::string what;
        if (st.phi) {
            try {
                auto r = verify_orbit_step(base, th, *st.phi, ex);
                if (!st.automorphism) {
                    out.detail = "printed map was expected to be rejected but acts: " + r.message;
                    return out;
                }
                if (!r.holds) {
                    out.detail = r.message;
                    return out;
                }
                what = r.message;
            } catch (const NotAnAutomorphism& e) {
                out.ok = !st.automorphism;
                out.detail = std::string("rejected: ") + e.what();
                return out;
            }
        } else if (th != ex) {
            out.detail = "without a map the representative must equal theta";
            return out;
        } else {
            what = "theta = " + th.str();
        }
        if (st.target) {
            Algebra ext = extend(base, ex);
            Algebra tgt = cat.get(*st.target);
            if (st.target_map) {
                auto h = verify_homomorphism(ext, tgt, *st.target_map);
                if (!h.holds || !h.invertible) {
                    out.detail = what + "; extension vs " + st.target->str() + ": " + h.str();
                    return out;
                }
                what += "; extension isomorphic to " + st.target->str();
            } else {
                if (!(ext == tgt)) {
                    out.detail = what + "; extension differs from " + st.target->str() + "\n" + product_table_str(ext);
                    return out;
                }
                what += "; extension is " + st.target->str();
            }
        }
        out.ok = true;
        out.detail = what;
    } catch (const Error& e) {
        out.detail = std::string("error: ") + e.what();
    }
    return out;
}

enum class Z2Shape { empty, zero, nontrivial };

inline const char* z2_shape_name(Z2Shape s)
{
    switch (s) {
    case Z2Shape::empty: return "empty";
    case Z2Shape::zero: return "zero";
    default: return "nontrivial";
    }
}

struct Z2Classification {
    Z2Shape shape = Z2Shape::nontrivial;
    int unknowns = 0;
    int equations = 0;
    int tangent_dim = 0;  // solutions of the linear part (tangent space at theta = 0)
    std::vector<std::string> free_vars;  // variables not forced to vanish
    std::size_t pairs = 0;
    bool generic = false;
};

// Decides whether the membership variety is empty, the origin, or larger:
// empty iff 1 lies in the ideal, the origin iff every unknown is in its radical.
inline Z2Classification classify_z2(const Algebra& base, bool skew, const std::string& variety,
                                    std::size_t budget = 20000)
{
    auto sys = z2_equations(base, skew, variety);
    Z2Classification c;
    c.unknowns = int(sys.vars.size());
    c.equations = int(sys.eqs.size());
    SMatrix lin(int(sys.eqs.size()), int(sys.vars.size()));
    for (std::size_t e = 0; e < sys.eqs.size(); ++e)
        for (auto& t : sys.eqs[e].num().terms()) {
            if (t.m.total() != 1) continue;
            int v = t.m.e[0].first;
            auto it = std::find(sys.vars.begin(), sys.vars.end(), v);
            if (it != sys.vars.end()) lin(int(e), int(it - sys.vars.begin())) += Scalar(t.c);
        }
    c.tangent_dim = c.unknowns - (sys.eqs.empty() ? 0 : lin.rank());
    auto g = groebner_basis(sys.eqs, sys.vars, budget);
    c.pairs = g.pairs;
    c.generic = g.generic;
    if (g.unit) {
        c.shape = Z2Shape::empty;
        return c;
    }
    for (int v : sys.vars)
        if (!in_radical(g.basis, sys.vars, Scalar::var(v), budget)) c.free_vars.push_back(var_name(v));
    c.shape = c.free_vars.empty() ? Z2Shape::zero : Z2Shape::nontrivial;
    return c;
}

// Random small-integer cocycles; counts how many land in Z^2 (nonzero ones only).
struct Z2Sample {
    int trials = 0;
    int members = 0;
    std::optional<Cocycle> first_member;
};

inline Z2Sample sample_z2(const Algebra& base, bool skew, const std::string& variety, int trials, unsigned seed)
{
    auto sys = z2_equations(base, skew, variety);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(-3, 3);
    Z2Sample s;
    int n = base.dim();
    for (int t = 0; t < trials; ++t) {
        std::map<int, Scalar> asg;
        Cocycle th = Cocycle::zero(n, skew);
        for (std::size_t v = 0; v < sys.vars.size(); ++v) {
            Scalar x(long(dist(rng)));
            asg[sys.vars[v]] = x;
            if (!x.is_zero()) th.add_delta(sys.comp[v], sys.slots[v].first, sys.slots[v].second, x);
        }
        ++s.trials;
        if (th.is_zero()) continue;
        bool ok = true;
        for (auto& e : sys.eqs)
            if (!e.subs(asg).is_zero()) {
                ok = false;
                break;
            }
        if (ok) {
            ++s.members;
            if (!s.first_member) s.first_member = th;
        }
    }
    return s;
}

}  // namespace nassoc
