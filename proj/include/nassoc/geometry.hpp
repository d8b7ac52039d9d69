#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "groebner.hpp"

namespace nassoc {

// ---- degenerations ----

struct DegenerationResult {
    enum class Status { verified, pole, mismatch };
    Status status = Status::verified;
    int i = -1, j = -1, k = -1;  // first offending constant (0-based)
    Scalar got, want;            // limit (or the t-dependent value for a pole) and target value
    Algebra limit;

    bool verified() const { return status == Status::verified; }
    std::string str() const
    {
        if (verified()) return "verified";
        std::string at = "c" + std::to_string(i + 1) + std::to_string(j + 1) + "^" + std::to_string(k + 1);
        if (status == Status::pole) return "rejected: pole at t=0 in " + at + " = " + got.str();
        return "rejected: mismatch at " + at + ": " + got.str() + " vs " + want.str();
    }
};

// rows[i] is E_i(t) in the source basis. The source is already specialized at
// its parametrized index; `relabel` (rows = new basis) is applied to the target.
inline DegenerationResult verify_degeneration(const Algebra& source, const Algebra& target, const std::vector<Vector>& rows,
                                              const std::optional<SMatrix>& relabel = std::nullopt)
{
    int n = source.dim();
    if (target.dim() != n || int(rows.size()) != n) throw DimensionMismatch("degeneration dimensions differ");
    SMatrix W(n, n);
    for (int i = 0; i < n; ++i) {
        if (int(rows[i].size()) != n) throw DimensionMismatch("basis row length");
        for (int j = 0; j < n; ++j) W(i, j) = rows[i][j];
    }
    if (W.det().is_zero()) throw SingularError("parametrized basis is singular for all t");
    Algebra moved = change_basis(source, W);
    Algebra want = relabel ? change_basis(target, *relabel) : target;
    DegenerationResult r;
    r.limit = Algebra(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const Scalar& c = moved.at(i, j, k);
                Scalar lim;
                try {
                    lim = c.limit_at_zero();
                } catch (const PoleError&) {
                    if (r.verified()) {
                        r.status = DegenerationResult::Status::pole;
                        r.i = i, r.j = j, r.k = k;
                        r.got = c;
                    }
                    continue;
                }
                r.limit.at(i, j, k) = lim;
                if (r.verified() && lim != want.at(i, j, k)) {
                    r.status = DegenerationResult::Status::mismatch;
                    r.i = i, r.j = j, r.k = k;
                    r.got = lim;
                    r.want = want.at(i, j, k);
                }
            }
    return r;
}

inline DegenerationResult verify_degeneration(const DegenerationRow& row)
{
    auto& cat = Catalog::instance();
    return verify_degeneration(cat.get(row.source), cat.get(row.target), row.file.rows, row.file.relabel);
}

// Source parameters whose parametrized index depends on t: such a row
// degenerates a whole family, so its orbit-closure dimension gains one per parameter.
inline int family_parameters(const DegenerationRow& row)
{
    int k = 0;
    for (auto& [name, v] : row.file.index)
        if (v.has_var(t_var())) ++k;
    return k;
}

struct DerivationCondition {
    int source_der = 0, target_der = 0, family = 0;
    bool holds() const { return source_der - family < target_der; }
    std::string str() const
    {
        std::string s = "dim Der " + std::to_string(source_der);
        if (family) s += " - " + std::to_string(family) + " (family)";
        return s + (holds() ? " < " : " >= ") + std::to_string(target_der);
    }
};

inline bool derivation_condition(const Algebra& source, const Algebra& target)
{
    return derivation_algebra(source).dim < derivation_algebra(target).dim;
}

inline DerivationCondition derivation_condition(const DegenerationRow& row)
{
    auto& cat = Catalog::instance();
    DerivationCondition d;
    d.family = family_parameters(row);
    // a t-dependent index is measured on the whole family, not a specialization
    Algebra src = d.family ? cat.get(row.source.id, {}) : cat.get(row.source);
    d.source_der = derivation_algebra(src).dim;
    d.target_der = derivation_algebra(cat.get(row.target)).dim;
    return d;
}

// dim O = n^2 - dim Der, plus one per family parameter.
inline int orbit_dimension(const Algebra& A)
{
    int n = A.dim();
    return n * n - derivation_algebra(A).dim + int(A.params.size());
}

// ---- closed set certificates ----

struct MembershipResult {
    bool member = true;
    std::string failed;  // first failing condition
};

inline std::map<int, Scalar> coefficient_assignment(const Algebra& A)
{
    std::map<int, Scalar> m;
    int n = A.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) m[var_id(coeff_name(i + 1, j + 1, k + 1))] = A.at(i, j, k);
    return m;
}

inline std::string flag_str(const FlagCondition& f, int n)
{
    std::string s = "A" + std::to_string(f.p) + "A" + std::to_string(f.q);
    return f.r > n ? s + " = 0" : s + " in A" + std::to_string(f.r);
}

inline MembershipResult closed_set_member(const Algebra& A, const ClosedSetCertificate& R)
{
    int n = A.dim();
    if (n != R.dim) throw DimensionMismatch("certificate dimension");
    MembershipResult r;
    for (auto& f : R.flags)
        for (int i = f.p - 1; i < n; ++i)
            for (int j = f.q - 1; j < n; ++j)
                for (int k = 0; k < f.r - 1 && k < n; ++k)
                    if (!A.at(i, j, k).is_zero()) {
                        r.member = false;
                        r.failed = flag_str(f, n) + " (" + coeff_name(i + 1, j + 1, k + 1) + " = " + A.at(i, j, k).str() + ")";
                        return r;
                    }
    auto asg = coefficient_assignment(A);
    for (std::size_t e = 0; e < R.equations.size(); ++e) {
        Scalar v = Scalar(R.equations[e]).subs(asg);
        if (!v.is_zero()) {
            r.member = false;
            std::string text = e < R.equation_text.size() ? R.equation_text[e] : R.equations[e].str();
            r.failed = text + " = 0 (evaluates to " + v.str() + ")";
            return r;
        }
    }
    return r;
}

// A certificate member in the presentation the certificate refers to.
inline Algebra member_presentation(const CertificateMember& m)
{
    Algebra A = Catalog::instance().get(m.id, {});
    if (m.opposite) A = opposite(A);
    if (m.relabel) A = change_basis(A, *m.relabel);
    return A;
}

struct BorelReport {
    bool pass = true;
    int trials = 0;
    int samples = 0;   // member tensors actually transformed
    unsigned seed = 0;
    std::optional<Algebra> tensor;
    std::optional<SMatrix> matrix;  // rows are the new basis vectors
    std::string failed;

    std::string str() const
    {
        std::string s = pass ? "no counterexample in " : "counterexample after ";
        s += std::to_string(samples) + " sampled members (" + std::to_string(trials) + " trials, seed " +
             std::to_string(seed) + ")";
        if (!pass) s += ": " + failed + "\nmatrix " + matrix_str(*matrix) + "\n" + product_table_str(*tensor);
        return s;
    }
};

namespace detail {

// Tensors satisfying the flag conditions and the linear equations of R, with
// sparse random coordinates; nonlinear equations are left to a membership check.
class CertificateSampler {
public:
    explicit CertificateSampler(const ClosedSetCertificate& R) : R_(R), n_(R.dim)
    {
        int N = n_ * n_ * n_;
        std::vector<bool> zero(N, false);
        for (auto& f : R.flags)
            for (int i = f.p - 1; i < n_; ++i)
                for (int j = f.q - 1; j < n_; ++j)
                    for (int k = 0; k < f.r - 1 && k < n_; ++k) zero[idx(i, j, k)] = true;
        std::vector<Vector> lin;
        for (auto& eq : R.equations) {
            if (eq.total_degree() != 1) continue;
            Vector row(N);
            bool homogeneous = true;
            for (auto& t : eq.terms()) {
                if (t.m.empty()) {
                    homogeneous = false;
                    continue;
                }
                row[slot(t.m.e[0].first)] = Scalar(t.c);
            }
            // an affine condition is left to rejection sampling
            if (homogeneous) lin.push_back(row);
        }
        for (int s = 0; s < N; ++s)
            if (zero[s]) {
                Vector row(N);
                row[s] = Scalar(1);
                lin.push_back(row);
            }
        if (lin.empty()) {
            for (int s = 0; s < N; ++s) basis_.push_back(unit_vector(N, s));
        } else {
            SMatrix M(int(lin.size()), N);
            for (std::size_t r = 0; r < lin.size(); ++r)
                for (int c = 0; c < N; ++c) M(int(r), c) = lin[r][c];
            basis_ = M.nullspace();
        }
    }

    template <class Rng>
    Algebra draw(Rng& rng) const
    {
        std::uniform_int_distribution<int> coin(0, 2), val(-3, 3);
        int N = n_ * n_ * n_;
        Vector x(N);
        for (auto& b : basis_) {
            if (coin(rng) != 0) continue;
            Scalar c(long(val(rng)));
            if (c.is_zero()) continue;
            for (int s = 0; s < N; ++s)
                if (!b[s].is_zero()) x[s] = x[s] + c * b[s];
        }
        Algebra A(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                for (int k = 0; k < n_; ++k) A.at(i, j, k) = x[idx(i, j, k)];
        return A;
    }

private:
    const ClosedSetCertificate& R_;
    int n_;
    std::vector<Vector> basis_;

    int idx(int i, int j, int k) const { return (i * n_ + j) * n_ + k; }
    int slot(int var) const
    {
        const std::string& name = var_name(var);
        if (name.size() != 4 || name[0] != 'c') throw Error("certificate variable " + name);
        return idx(name[1] - '1', name[2] - '1', name[3] - '1');
    }
};

template <class Rng>
SMatrix random_upper_triangular(int n, Rng& rng)
{
    std::uniform_int_distribution<int> off(-2, 2), diag(1, 3), sign(0, 1);
    SMatrix M(n, n);
    for (int i = 0; i < n; ++i) {
        M(i, i) = Scalar(long(sign(rng) ? diag(rng) : -diag(rng)));
        for (int j = i + 1; j < n; ++j) M(i, j) = Scalar(long(off(rng)));
    }
    return M;
}

}  // namespace detail

// Probabilistic evidence only. Each trial transforms either one of the
// certificate's own member presentations or a sampled member tensor by a random
// invertible upper-triangular matrix and rechecks membership.
inline BorelReport borel_stability_sample(const ClosedSetCertificate& R, int trials, unsigned seed = 0)
{
    BorelReport rep;
    rep.seed = seed;
    std::mt19937 rng(seed);
    detail::CertificateSampler sampler(R);
    std::vector<Algebra> members;
    for (auto& m : R.members) {
        Algebra A = member_presentation(m);
        if (!A.is_parametric() && closed_set_member(A, R).member) members.push_back(A);
    }
    for (int t = 0; t < trials; ++t) {
        ++rep.trials;
        std::optional<Algebra> T;
        if (!members.empty() && t % 2 == 0) {
            T = members[(t / 2) % members.size()];
        } else {
            for (int attempt = 0; attempt < 50 && !T; ++attempt) {
                Algebra A = sampler.draw(rng);
                if (closed_set_member(A, R).member) T = A;
            }
        }
        if (!T) continue;
        ++rep.samples;
        SMatrix M = detail::random_upper_triangular(R.dim, rng);
        auto m = closed_set_member(change_basis(*T, M), R);
        if (!m.member) {
            rep.pass = false;
            rep.tensor = *T;
            rep.matrix = M;
            rep.failed = m.failed;
            return rep;
        }
    }
    return rep;
}

// ---- representability ----

namespace detail {
// Laplace expansion; only used for small symbolic matrices.
inline Poly poly_det(const Matrix<Poly>& m)
{
    int n = m.rows();
    if (n == 1) return m(0, 0);
    Poly d;
    for (int c = 0; c < n; ++c) {
        if (m(0, c).is_zero()) continue;
        Matrix<Poly> sub(n - 1, n - 1);
        for (int i = 1; i < n; ++i)
            for (int j = 0, jj = 0; j < n; ++j)
                if (j != c) sub(i - 1, jj++) = m(i, j);
        Poly t = m(0, c) * poly_det(sub);
        d = c % 2 ? d - t : d + t;
    }
    return d;
}
}  // namespace detail

struct RepresentabilitySystem {
    PolySystem system;       // unknowns g<i><j> (rows of the basis change) and z
    std::vector<int> g_vars;
    int z_var = -1;
};

// Solvable iff some basis E_i = sum_a g_ia e_a of B has its structure
// constants in R. Constants in the new basis are N_ijk / det(g) with N built
// from the adjugate; the unknown z enforces z det(g) = 1.
inline RepresentabilitySystem emit_representability_system(const Algebra& B, const ClosedSetCertificate& R)
{
    if (B.is_parametric()) throw Error("representability needs a parameter-free algebra");
    int n = B.dim();
    if (n != R.dim) throw DimensionMismatch("certificate dimension");
    RepresentabilitySystem rs;
    Matrix<Poly> G(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int v = var_id("g" + std::to_string(i + 1) + std::to_string(j + 1));
            rs.g_vars.push_back(v);
            G(i, j) = Poly::var(v);
            rs.system.vars.push_back(var_name(v));
        }
    rs.z_var = var_id("z");
    rs.system.vars.push_back("z");

    auto minor_det = [&](int skip_r, int skip_c) {
        std::vector<int> rr, cc;
        for (int a = 0; a < n; ++a) {
            if (a != skip_r) rr.push_back(a);
            if (a != skip_c) cc.push_back(a);
        }
        Matrix<Poly> m(n - 1, n - 1);
        for (int a = 0; a < n - 1; ++a)
            for (int b = 0; b < n - 1; ++b) m(a, b) = G(rr[a], cc[b]);
        return detail::poly_det(m);
    };
    Matrix<Poly> adj(n, n);  // G^{-1} = adj / det
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Poly c = minor_det(j, i);
            adj(i, j) = (i + j) % 2 ? -c : c;
        }
    Poly det = detail::poly_det(G);

    // N_ijk = sum_{a,b,m} g_ia g_jb c_ab^m adj_mk
    std::vector<Poly> N(std::size_t(n) * n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<Poly> prod(n);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int m = 0; m < n; ++m) {
                        const Scalar& c = B.at(a, b, m);
                        if (c.is_zero()) continue;
                        prod[m] += G(i, a) * G(j, b) * c.num();
                    }
            for (int k = 0; k < n; ++k) {
                Poly s;
                for (int m = 0; m < n; ++m)
                    if (!prod[m].is_zero()) s += prod[m] * adj(m, k);
                N[(i * n + j) * n + k] = s;
            }
        }
    std::set<std::string> seen;
    auto push = [&](const Poly& p) {
        if (p.is_zero()) return;
        if (seen.insert(p.str()).second) rs.system.eqs.push_back(p);
    };
    for (auto& f : R.flags)
        for (int i = f.p - 1; i < n; ++i)
            for (int j = f.q - 1; j < n; ++j)
                for (int k = 0; k < f.r - 1 && k < n; ++k) push(N[(i * n + j) * n + k]);
    std::map<int, Scalar> asg;
    Scalar sdet(det);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                asg[var_id(coeff_name(i + 1, j + 1, k + 1))] = Scalar(N[(i * n + j) * n + k]) / sdet;
    for (auto& eq : R.equations) push(Scalar(eq).subs(asg).num());
    push(Poly::var(rs.z_var) * det - Poly(1));
    return rs;
}

struct SolveOptions {
    int samples = 10000;
    unsigned seed = 0;
    bool groebner = false;
    std::size_t budget = 2000;
};

struct SolveResult {
    enum class Status { solution, no_solution_found, infeasible };
    Status status = Status::no_solution_found;
    std::map<std::string, Scalar> solution;
    int samples = 0;
    std::string note;

    std::string str() const
    {
        switch (status) {
        case Status::solution: {
            std::string s = "solution:";
            for (auto& [k, v] : solution) s += " " + k + "=" + v.str();
            return s;
        }
        case Status::infeasible: return "infeasible (" + note + ")";
        default: return "no solution found (inconclusive; " + note + ")";
        }
    }
};

namespace detail {

inline bool all_vanish(const std::vector<Poly>& eqs, const std::map<int, Scalar>& at)
{
    for (auto& e : eqs)
        if (!Scalar(e).subs(at).is_zero()) return false;
    return true;
}

// Completes a partial assignment by solving equations that became linear in a
// single remaining unknown.
inline bool complete(const std::vector<Poly>& eqs, const std::vector<int>& vars, std::map<int, Scalar>& at)
{
    while (true) {
        bool progress = false;
        for (int v : vars) {
            if (at.count(v)) continue;
            for (auto& e : eqs) {
                Scalar r = Scalar(e).subs(at);
                if (!r.has_var(v) || !r.is_poly()) continue;
                const Poly& p = r.num();
                if (p.deg(v) != 1 || p.variables().size() != 1) continue;
                Scalar a(p.coeff(v, 1)), b(p.coeff(v, 0));
                at[v] = Scalar(0) - b / a;
                progress = true;
                break;
            }
        }
        if (progress) continue;
        // stuck: fix one remaining unknown at 0
        auto it = std::find_if(vars.begin(), vars.end(), [&](int v) { return !at.count(v); });
        if (it == vars.end()) break;
        at[*it] = Scalar(0);
    }
    return all_vanish(eqs, at);
}

}  // namespace detail

// Randomized small-rational search, optionally followed by a bounded Groebner
// run. Infeasible is only reported from a unit Groebner basis.
inline SolveResult solve_system_bounded(const PolySystem& sys, const SolveOptions& opt = {})
{
    SolveResult res;
    std::vector<int> vars;
    for (auto& name : sys.vars) vars.push_back(var_id(name));
    auto found = [&](const std::map<int, Scalar>& at) {
        res.status = SolveResult::Status::solution;
        for (int v : vars) res.solution[var_name(v)] = at.at(v);
        return res;
    };

    // which unknowns are sampled: those never isolated linearly by an equation
    // of the form v*q - 1 are drawn, the rest are completed
    std::set<int> derived;
    for (auto& e : sys.eqs)
        for (int v : vars)
            if (e.deg(v) == 1 && e.terms().size() >= 2) {
                bool constant = false, all_have = true;
                for (auto& t : e.terms()) {
                    if (t.m.empty()) constant = true;
                    else if (t.m.deg(v) != 1) all_have = false;
                }
                if (constant && all_have) derived.insert(v);
            }
    std::vector<int> free;
    for (int v : vars)
        if (!derived.count(v)) free.push_back(v);

    // identity-like start: g_ii = 1, other unknowns 0
    {
        std::map<int, Scalar> at;
        for (int v : free) {
            const std::string& s = var_name(v);
            bool diag = s.size() == 3 && s[0] == 'g' && s[1] == s[2];
            at[v] = Scalar(diag ? 1 : 0);
        }
        if (detail::complete(sys.eqs, vars, at)) return found(at);
    }
    std::mt19937 rng(opt.seed);
    std::uniform_int_distribution<int> num(-3, 3), den(1, 2);
    for (int s = 0; s < opt.samples; ++s) {
        ++res.samples;
        std::map<int, Scalar> at;
        for (int v : free) at[v] = Scalar::frac(num(rng), den(rng));
        if (detail::complete(sys.eqs, vars, at)) return found(at);
    }
    res.note = std::to_string(res.samples) + " random samples, seed " + std::to_string(opt.seed);
    if (!opt.groebner) return res;

    std::vector<Scalar> eqs;
    for (auto& e : sys.eqs) eqs.push_back(Scalar(e));
    try {
        auto g = groebner_basis(eqs, vars, opt.budget);
        if (g.unit) {
            res.status = SolveResult::Status::infeasible;
            res.note = "Groebner basis contains a unit";
            return res;
        }
        std::vector<Poly> basis;
        for (auto& b : g.basis) basis.push_back(b.num());
        std::map<int, Scalar> at;
        if (detail::complete(basis, vars, at) && detail::all_vanish(sys.eqs, at)) return found(at);
        res.note += "; Groebner basis has " + std::to_string(g.basis.size()) + " elements";
    } catch (const BudgetExhausted&) {
        res.note += "; Groebner budget exhausted";
    }
    return res;
}

}  // namespace nassoc
