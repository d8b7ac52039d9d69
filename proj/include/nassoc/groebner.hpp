#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace nassoc {

// Buchberger's algorithm, grevlex on a chosen list of variables. Every other
// variable is treated as a parameter and lives in the coefficient field, so
// results are generic in the parameters.
namespace gb {

using Exp = std::vector<std::int16_t>;  // [total degree, e_0, ..., e_{n-1}]

// grevlex: higher total degree first, then smaller exponent in the last variable.
inline int exp_cmp(const Exp& a, const Exp& b)
{
    if (a[0] != b[0]) return a[0] > b[0] ? 1 : -1;
    for (std::size_t i = a.size() - 1; i >= 1; --i)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
}
inline bool exp_divides(const Exp& d, const Exp& m)
{
    if (d[0] > m[0]) return false;
    for (std::size_t i = 1; i < d.size(); ++i)
        if (d[i] > m[i]) return false;
    return true;
}
inline Exp exp_lcm(const Exp& a, const Exp& b)
{
    Exp r(a.size());
    int t = 0;
    for (std::size_t i = 1; i < a.size(); ++i) t += r[i] = std::max(a[i], b[i]);
    r[0] = std::int16_t(t);
    return r;
}
inline Exp exp_sub(const Exp& a, const Exp& b)
{
    Exp r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::int16_t(a[i] - b[i]);
    return r;
}
inline Exp exp_add(const Exp& a, const Exp& b)
{
    Exp r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::int16_t(a[i] + b[i]);
    return r;
}
inline bool exp_coprime(const Exp& a, const Exp& b)
{
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i] && b[i]) return false;
    return true;
}

template <class K>
struct Term {
    Exp e;
    K c;
};

// Terms in strictly decreasing grevlex order.
template <class K>
using GPoly = std::vector<Term<K>>;

inline bool k_zero(const GQ& c) { return c.is_zero(); }
inline bool k_zero(const Scalar& c) { return c.is_zero(); }

// p - c * x^m * q, q's leading term skipped when `skip_lead`.
template <class K>
GPoly<K> sub_mul(const GPoly<K>& p, std::size_t from, const K& c, const Exp& m, const GPoly<K>& q, bool skip_lead)
{
    GPoly<K> r;
    r.reserve(p.size() - from + q.size());
    std::size_t i = from, j = skip_lead ? 1 : 0;
    while (i < p.size() || j < q.size()) {
        if (j == q.size()) {
            r.push_back(p[i++]);
            continue;
        }
        Exp qe = exp_add(q[j].e, m);
        int cmp = i < p.size() ? exp_cmp(p[i].e, qe) : -1;
        if (cmp > 0) {
            r.push_back(p[i++]);
        } else if (cmp < 0) {
            r.push_back({std::move(qe), K(0) - c * q[j].c});
            ++j;
        } else {
            K v = p[i].c - c * q[j].c;
            if (!k_zero(v)) r.push_back({std::move(qe), std::move(v)});
            ++i;
            ++j;
        }
    }
    return r;
}

template <class K>
void make_monic(GPoly<K>& p)
{
    if (p.empty()) return;
    K inv = K(1) / p[0].c;
    p[0].c = K(1);
    for (std::size_t k = 1; k < p.size(); ++k) p[k].c = p[k].c * inv;
}

template <class K>
GPoly<K> reduce(GPoly<K> f, const std::vector<GPoly<K>>& G, const std::vector<bool>* live = nullptr)
{
    GPoly<K> r;
    std::size_t pos = 0;
    while (pos < f.size()) {
        const Term<K>& lt = f[pos];
        const GPoly<K>* div = nullptr;
        for (std::size_t k = 0; k < G.size(); ++k) {
            if (live && !(*live)[k]) continue;
            if (!G[k].empty() && exp_divides(G[k][0].e, lt.e)) {
                div = &G[k];
                break;
            }
        }
        if (!div) {
            r.push_back(lt);
            ++pos;
            continue;
        }
        // G is kept monic
        K c = lt.c;
        Exp m = exp_sub(lt.e, (*div)[0].e);
        f = sub_mul(f, pos + 1, c, m, *div, true);
        pos = 0;
    }
    return r;
}

template <class K>
struct Engine {
    std::vector<GPoly<K>> G;
    std::vector<bool> live;
    std::size_t pairs_done = 0;
    bool unit = false;

    struct Pair {
        Exp lcm;
        std::size_t i, j;
    };

    static bool is_unit(const GPoly<K>& p) { return p.size() == 1 && p[0].e[0] == 0; }

    void run(std::vector<GPoly<K>> input, std::size_t budget)
    {
        std::vector<Pair> queue;
        std::set<std::pair<std::size_t, std::size_t>> treated;
        auto add = [&](GPoly<K> h) {
            make_monic(h);
            if (is_unit(h)) {
                unit = true;
                return;
            }
            std::size_t k = G.size();
            for (std::size_t i = 0; i < k; ++i) {
                if (!live[i]) continue;
                queue.push_back({exp_lcm(G[i][0].e, h[0].e), i, k});
            }
            for (std::size_t i = 0; i < k; ++i)
                if (live[i] && exp_divides(h[0].e, G[i][0].e)) live[i] = false;
            G.push_back(std::move(h));
            live.push_back(true);
        };
        for (auto& f : input) {
            auto h = reduce(std::move(f), G, &live);
            if (h.empty()) continue;
            add(std::move(h));
            if (unit) return;
        }
        while (!queue.empty()) {
            // normal strategy: smallest lcm first
            auto best = std::min_element(queue.begin(), queue.end(),
                                         [](const Pair& a, const Pair& b) { return exp_cmp(a.lcm, b.lcm) < 0; });
            Pair p = *best;
            *best = queue.back();
            queue.pop_back();
            treated.insert({p.i, p.j});
            const auto& a = G[p.i];
            const auto& b = G[p.j];
            if (exp_coprime(a[0].e, b[0].e)) continue;
            bool chain = false;
            for (std::size_t k = 0; k < G.size() && !chain; ++k) {
                if (k == p.i || k == p.j || G[k].empty()) continue;
                if (!exp_divides(G[k][0].e, p.lcm)) continue;
                auto key = [](std::size_t x, std::size_t y) { return std::make_pair(std::min(x, y), std::max(x, y)); };
                if (treated.count(key(p.i, k)) && treated.count(key(p.j, k))) chain = true;
            }
            if (chain) continue;
            if (++pairs_done > budget) throw BudgetExhausted("Groebner basis: pair budget exhausted");
            GPoly<K> s = sub_mul(GPoly<K>{}, 0, K(-1), exp_sub(p.lcm, a[0].e), a, false);
            s = sub_mul(s, 0, K(1), exp_sub(p.lcm, b[0].e), b, false);
            auto h = reduce(std::move(s), G, &live);
            if (h.empty()) continue;
            add(std::move(h));
            if (unit) return;
        }
    }

    // Reduced basis: minimal leading terms, fully interreduced, monic.
    std::vector<GPoly<K>> reduced() const
    {
        if (unit) return {};
        std::vector<GPoly<K>> keep;
        for (std::size_t i = 0; i < G.size(); ++i)
            if (live[i]) keep.push_back(G[i]);
        std::vector<GPoly<K>> out;
        for (std::size_t i = 0; i < keep.size(); ++i) {
            std::vector<GPoly<K>> others;
            for (std::size_t j = 0; j < keep.size(); ++j)
                if (j != i) others.push_back(keep[j]);
            auto r = reduce(keep[i], others);
            make_monic(r);
            out.push_back(std::move(r));
        }
        std::sort(out.begin(), out.end(),
                  [](const GPoly<K>& a, const GPoly<K>& b) { return exp_cmp(a[0].e, b[0].e) < 0; });
        return out;
    }
};

}  // namespace gb

struct GroebnerResult {
    std::vector<int> vars;       // the ordered variables (grevlex, first is largest)
    std::vector<Scalar> basis;   // reduced basis; {1} when the ideal is the unit ideal
    bool unit = false;
    bool generic = false;        // coefficients involve parameters
    std::size_t pairs = 0;

    std::string str() const
    {
        std::string s;
        for (auto& b : basis) s += b.str() + "\n";
        return s;
    }
};

namespace detail {

template <class K>
K gb_coef(const GQ& c, const Mono& rest);
template <>
inline GQ gb_coef<GQ>(const GQ& c, const Mono& rest)
{
    if (!rest.empty()) throw Error("internal: parameter in a rational Groebner system");
    return c;
}
template <>
inline Scalar gb_coef<Scalar>(const GQ& c, const Mono& rest)
{
    return Scalar(Poly::term(rest, c));
}

template <class K>
gb::GPoly<K> to_gpoly(const Poly& p, const std::vector<int>& vars)
{
    std::map<int, std::size_t> slot;
    for (std::size_t k = 0; k < vars.size(); ++k) slot[vars[k]] = k + 1;
    std::vector<gb::Term<K>> ts;
    for (auto& t : p.terms()) {
        gb::Exp e(vars.size() + 1, 0);
        Mono rest;
        for (auto& [v, k] : t.m.e) {
            auto it = slot.find(v);
            if (it == slot.end()) {
                rest = mono_mul(rest, Mono::var(v, k));
            } else {
                e[it->second] = std::int16_t(k);
                e[0] = std::int16_t(e[0] + k);
            }
        }
        ts.push_back({std::move(e), gb_coef<K>(t.c, rest)});
    }
    std::sort(ts.begin(), ts.end(), [](const gb::Term<K>& a, const gb::Term<K>& b) { return gb::exp_cmp(a.e, b.e) > 0; });
    gb::GPoly<K> out;
    for (auto& t : ts) {
        if (!out.empty() && gb::exp_cmp(out.back().e, t.e) == 0) {
            out.back().c = out.back().c + t.c;
            if (gb::k_zero(out.back().c)) out.pop_back();
        } else {
            out.push_back(std::move(t));
        }
    }
    return out;
}

inline Scalar gb_monomial(const gb::Exp& e, const std::vector<int>& vars)
{
    Poly m(1);
    for (std::size_t k = 0; k < vars.size(); ++k)
        if (e[k + 1]) m = m * Poly::var(vars[k], e[k + 1]);
    return Scalar(m);
}

template <class K>
Scalar from_gpoly(const gb::GPoly<K>& p, const std::vector<int>& vars)
{
    Scalar s;
    for (auto& t : p) s = s + Scalar(t.c) * gb_monomial(t.e, vars);
    return s;
}

template <class K>
GroebnerResult run_groebner(const std::vector<Poly>& eqs, const std::vector<int>& vars, std::size_t budget)
{
    std::vector<gb::GPoly<K>> in;
    for (auto& e : eqs) {
        auto g = to_gpoly<K>(e, vars);
        if (!g.empty()) in.push_back(std::move(g));
    }
    gb::Engine<K> eng;
    eng.run(std::move(in), budget);
    GroebnerResult r;
    r.vars = vars;
    r.pairs = eng.pairs_done;
    r.unit = eng.unit;
    if (eng.unit) {
        r.basis = {Scalar(1)};
    } else {
        for (auto& g : eng.reduced()) r.basis.push_back(from_gpoly(g, vars));
    }
    return r;
}

}  // namespace detail

// Numerators of `eqs` generate the ideal; denominators must be free of `vars`.
inline GroebnerResult groebner_basis(const std::vector<Scalar>& eqs, const std::vector<int>& vars,
                                     std::size_t budget = 20000)
{
    std::vector<Poly> polys;
    bool params = false;
    for (auto& e : eqs) {
        for (int v : vars)
            if (e.den().has_var(v)) throw Error("equation has a solved variable in its denominator");
        polys.push_back(e.num());
        for (int v : e.num().variables())
            if (std::find(vars.begin(), vars.end(), v) == vars.end()) params = true;
    }
    auto r = params ? detail::run_groebner<Scalar>(polys, vars, budget) : detail::run_groebner<GQ>(polys, vars, budget);
    r.generic = params;
    return r;
}

inline bool ideal_is_unit(const std::vector<Scalar>& eqs, const std::vector<int>& vars, std::size_t budget = 20000)
{
    return groebner_basis(eqs, vars, budget).unit;
}

// f vanishes on every common zero of eqs (Rabinowitsch trick).
inline bool in_radical(const std::vector<Scalar>& eqs, const std::vector<int>& vars, const Scalar& f,
                       std::size_t budget = 20000)
{
    static const int z = var_id("_rad");
    auto sys = eqs;
    sys.push_back(Scalar(1) - Scalar::var(z) * f);
    auto vs = vars;
    vs.push_back(z);
    return ideal_is_unit(sys, vs, budget);
}

}  // namespace nassoc
