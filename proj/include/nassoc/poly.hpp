#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gaussq.hpp"

namespace nassoc {

// ---------------------------------------------------------------------------
// Variable registry. Ids are process-wide and never reused; names are
// immutable once published so readers need no lock.

namespace detail {
constexpr int kMaxVars = 4096;
inline std::array<std::string, kMaxVars>& var_names()
{
    static std::array<std::string, kMaxVars> names;
    return names;
}
inline std::atomic<int>& var_count()
{
    static std::atomic<int> n{0};
    return n;
}
inline std::mutex& var_mutex()
{
    static std::mutex m;
    return m;
}
}  // namespace detail

inline int var_id(std::string_view name)
{
    int n = detail::var_count().load(std::memory_order_acquire);
    for (int i = 0; i < n; ++i)
        if (detail::var_names()[i] == name) return i;
    std::lock_guard<std::mutex> lock(detail::var_mutex());
    n = detail::var_count().load(std::memory_order_acquire);
    for (int i = 0; i < n; ++i)
        if (detail::var_names()[i] == name) return i;
    if (n >= detail::kMaxVars) throw Error("too many variables");
    detail::var_names()[n] = std::string(name);
    detail::var_count().store(n + 1, std::memory_order_release);
    return n;
}

inline const std::string& var_name(int id) { return detail::var_names()[id]; }

inline int t_var()
{
    static const int id = var_id("t");
    return id;
}

// Priority order: t first, then names in natural order (a2 before a10).
inline bool var_before(int a, int b)
{
    if (a == b) return false;
    const std::string& x = var_name(a);
    const std::string& y = var_name(b);
    if (x == "t") return true;
    if (y == "t") return false;
    auto split = [](const std::string& s) {
        std::size_t k = s.size();
        while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
        return k;
    };
    std::size_t kx = split(x), ky = split(y);
    std::string_view px(x.data(), kx), py(y.data(), ky);
    if (px != py) return px < py;
    std::string_view sx(x.data() + kx, x.size() - kx), sy(y.data() + ky, y.size() - ky);
    if (sx.size() != sy.size()) return sx.size() < sy.size();
    return sx < sy;
}

// ---------------------------------------------------------------------------

struct Mono {
    std::vector<std::pair<int, int>> e;  // (var, exp>0), sorted by priority

    bool empty() const { return e.empty(); }
    int deg(int v) const
    {
        for (auto& p : e)
            if (p.first == v) return p.second;
        return 0;
    }
    int total() const
    {
        int s = 0;
        for (auto& p : e) s += p.second;
        return s;
    }
    static Mono var(int v, int k = 1)
    {
        Mono m;
        if (k > 0) m.e.push_back({v, k});
        return m;
    }
    friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
    friend bool operator!=(const Mono& a, const Mono& b) { return a.e != b.e; }
};

inline int mono_cmp(const Mono& a, const Mono& b)
{
    std::size_t i = 0, j = 0;
    while (i < a.e.size() && j < b.e.size()) {
        if (a.e[i].first == b.e[j].first) {
            if (a.e[i].second != b.e[j].second) return a.e[i].second > b.e[j].second ? 1 : -1;
            ++i;
            ++j;
        } else {
            return var_before(a.e[i].first, b.e[j].first) ? 1 : -1;
        }
    }
    if (i < a.e.size()) return 1;
    if (j < b.e.size()) return -1;
    return 0;
}

inline Mono mono_mul(const Mono& a, const Mono& b)
{
    Mono r;
    r.e.reserve(a.e.size() + b.e.size());
    std::size_t i = 0, j = 0;
    while (i < a.e.size() || j < b.e.size()) {
        if (j == b.e.size() || (i < a.e.size() && a.e[i].first != b.e[j].first &&
                                var_before(a.e[i].first, b.e[j].first))) {
            r.e.push_back(a.e[i++]);
        } else if (i == a.e.size() || a.e[i].first != b.e[j].first) {
            r.e.push_back(b.e[j++]);
        } else {
            r.e.push_back({a.e[i].first, a.e[i].second + b.e[j].second});
            ++i;
            ++j;
        }
    }
    return r;
}

inline bool mono_divides(const Mono& d, const Mono& m)
{
    for (auto& p : d.e)
        if (m.deg(p.first) < p.second) return false;
    return true;
}

inline Mono mono_div(const Mono& m, const Mono& d)
{
    Mono r;
    for (auto& p : m.e) {
        int k = p.second - d.deg(p.first);
        if (k > 0) r.e.push_back({p.first, k});
    }
    return r;
}

inline Mono mono_gcd(const Mono& a, const Mono& b)
{
    Mono r;
    for (auto& p : a.e) {
        int k = std::min(p.second, b.deg(p.first));
        if (k > 0) r.e.push_back({p.first, k});
    }
    return r;
}

// ---------------------------------------------------------------------------
// Sparse multivariate polynomial over Q(i); terms sorted by decreasing lex
// order, no zero coefficients.

class Poly {
public:
    struct Term {
        Mono m;
        GQ c;
    };

    Poly() = default;
    Poly(long v)
    {
        if (v != 0) ts_.push_back({Mono{}, GQ(v)});
    }
    Poly(const GQ& c)
    {
        if (!c.is_zero()) ts_.push_back({Mono{}, c});
    }
    static Poly var(int v, int k = 1)
    {
        Poly p;
        p.ts_.push_back({Mono::var(v, k), GQ(1)});
        return p;
    }
    static Poly var(std::string_view name) { return var(var_id(name)); }
    static Poly term(const Mono& m, const GQ& c)
    {
        Poly p;
        if (!c.is_zero()) p.ts_.push_back({m, c});
        return p;
    }
    // Terms in any order; combined and sorted here.
    static Poly from_terms(std::vector<Term> ts)
    {
        std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) { return mono_cmp(a.m, b.m) > 0; });
        Poly p;
        for (auto& t : ts) {
            if (!p.ts_.empty() && p.ts_.back().m == t.m) {
                p.ts_.back().c += t.c;
                if (p.ts_.back().c.is_zero()) p.ts_.pop_back();
            } else if (!t.c.is_zero()) {
                p.ts_.push_back(std::move(t));
            }
        }
        return p;
    }

    const std::vector<Term>& terms() const { return ts_; }
    bool is_zero() const { return ts_.empty(); }
    bool is_const() const { return ts_.empty() || (ts_.size() == 1 && ts_[0].m.empty()); }
    bool is_monomial() const { return ts_.size() == 1; }
    GQ const_value() const { return ts_.empty() ? GQ(0) : ts_[0].c; }
    const GQ& lc() const { return ts_.front().c; }
    const Mono& lm() const { return ts_.front().m; }
    bool is_one() const { return ts_.size() == 1 && ts_[0].m.empty() && ts_[0].c.is_one(); }
    bool has_var(int v) const
    {
        for (auto& t : ts_)
            if (t.m.deg(v) > 0) return true;
        return false;
    }
    bool all_real() const
    {
        for (auto& t : ts_)
            if (!t.c.is_real()) return false;
        return true;
    }
    int deg(int v) const
    {
        int d = 0;
        for (auto& t : ts_) d = std::max(d, t.m.deg(v));
        return d;
    }
    int total_degree() const
    {
        int d = 0;
        for (auto& t : ts_) d = std::max(d, t.m.total());
        return d;
    }
    int valuation(int v) const
    {
        int d = -1;
        for (auto& t : ts_) {
            int k = t.m.deg(v);
            if (d < 0 || k < d) d = k;
        }
        return d < 0 ? 0 : d;
    }
    // Highest-priority variable present, or -1 for constants.
    int main_var() const
    {
        if (ts_.empty() || ts_[0].m.empty()) return -1;
        return ts_[0].m.e[0].first;
    }
    std::vector<int> variables() const
    {
        std::vector<int> vs;
        for (auto& t : ts_)
            for (auto& p : t.m.e)
                if (std::find(vs.begin(), vs.end(), p.first) == vs.end()) vs.push_back(p.first);
        std::sort(vs.begin(), vs.end(), var_before);
        return vs;
    }

    Poly operator-() const
    {
        Poly r = *this;
        for (auto& t : r.ts_) t.c = -t.c;
        return r;
    }
    friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
    friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.is_zero() || b.is_zero()) return Poly();
        if (a.is_const()) return b.scaled(a.ts_[0].c);
        if (b.is_const()) return a.scaled(b.ts_[0].c);
        if (a.ts_.size() == 1) return b.mul_term(a.ts_[0]);
        if (b.ts_.size() == 1) return a.mul_term(b.ts_[0]);
        std::vector<Term> out;
        out.reserve(a.ts_.size() * b.ts_.size());
        for (auto& x : a.ts_)
            for (auto& y : b.ts_) out.push_back({mono_mul(x.m, y.m), x.c * y.c});
        return from_terms(std::move(out));
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const GQ& c) const
    {
        if (c.is_zero()) return Poly();
        Poly r = *this;
        for (auto& t : r.ts_) t.c *= c;
        return r;
    }
    Poly mul_term(const Term& u) const
    {
        Poly r;
        r.ts_.reserve(ts_.size());
        for (auto& t : ts_) r.ts_.push_back({mono_mul(t.m, u.m), t.c * u.c});
        return r;  // multiplying by a monomial preserves the order
    }
    Poly pow(unsigned k) const
    {
        Poly r(1), b = *this;
        while (k) {
            if (k & 1) r *= b;
            k >>= 1;
            if (k) b *= b;
        }
        return r;
    }
    // Leading coefficient 1 (zero stays zero).
    Poly monic() const
    {
        if (ts_.empty() || ts_[0].c.is_one()) return *this;
        return scaled(ts_[0].c.inv());
    }

    friend bool operator==(const Poly& a, const Poly& b)
    {
        if (a.ts_.size() != b.ts_.size()) return false;
        for (std::size_t i = 0; i < a.ts_.size(); ++i)
            if (a.ts_[i].c != b.ts_[i].c || a.ts_[i].m != b.ts_[i].m) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Coefficients as a polynomial in v: result[k] multiplies v^k.
    std::vector<Poly> coeffs(int v) const
    {
        std::vector<std::vector<Term>> parts(deg(v) + 1);
        for (auto& t : ts_) {
            int k = t.m.deg(v);
            Mono rest;
            for (auto& p : t.m.e)
                if (p.first != v) rest.e.push_back(p);
            parts[k].push_back({std::move(rest), t.c});
        }
        std::vector<Poly> out;
        out.reserve(parts.size());
        for (auto& p : parts) out.push_back(from_terms(std::move(p)));
        return out;
    }
    static Poly from_coeffs(int v, const std::vector<Poly>& cs)
    {
        std::vector<Term> out;
        for (std::size_t k = 0; k < cs.size(); ++k)
            for (auto& t : cs[k].ts_) out.push_back({mono_mul(t.m, Mono::var(v, int(k))), t.c});
        return from_terms(std::move(out));
    }
    // Coefficient of v^k.
    Poly coeff(int v, int k) const
    {
        std::vector<Term> out;
        for (auto& t : ts_) {
            if (t.m.deg(v) != k) continue;
            Mono rest;
            for (auto& p : t.m.e)
                if (p.first != v) rest.e.push_back(p);
            out.push_back({std::move(rest), t.c});
        }
        return from_terms(std::move(out));
    }
    Poly subs(int v, const Poly& val) const
    {
        if (!has_var(v)) return *this;
        auto cs = coeffs(v);
        Poly r;
        for (std::size_t k = cs.size(); k-- > 0;) r = r * val + cs[k];
        return r;
    }
    GQ eval(const std::map<int, GQ>& at) const
    {
        GQ s(0);
        for (auto& t : ts_) {
            GQ x = t.c;
            for (auto& p : t.m.e) {
                auto it = at.find(p.first);
                if (it == at.end()) throw UnknownParameter(var_name(p.first));
                for (int k = 0; k < p.second; ++k) x *= it->second;
            }
            s += x;
        }
        return s;
    }

    std::string str() const;

private:
    std::vector<Term> ts_;

    static Poly merge(const Poly& a, const Poly& b, bool neg)
    {
        Poly r;
        r.ts_.reserve(a.ts_.size() + b.ts_.size());
        std::size_t i = 0, j = 0;
        while (i < a.ts_.size() || j < b.ts_.size()) {
            int c = i == a.ts_.size() ? -1 : j == b.ts_.size() ? 1 : mono_cmp(a.ts_[i].m, b.ts_[j].m);
            if (c > 0) {
                r.ts_.push_back(a.ts_[i++]);
            } else if (c < 0) {
                r.ts_.push_back(b.ts_[j++]);
                if (neg) r.ts_.back().c = -r.ts_.back().c;
            } else {
                GQ s = neg ? a.ts_[i].c - b.ts_[j].c : a.ts_[i].c + b.ts_[j].c;
                if (!s.is_zero()) r.ts_.push_back({a.ts_[i].m, s});
                ++i;
                ++j;
            }
        }
        return r;
    }
};

inline std::string mono_str(const Mono& m)
{
    std::string s;
    for (auto& p : m.e) {
        if (!s.empty()) s += "*";
        s += var_name(p.first);
        if (p.second > 1) s += "^" + std::to_string(p.second);
    }
    return s;
}

inline std::string Poly::str() const
{
    if (ts_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& t : ts_) {
        std::string c;
        bool neg = false;
        GQ k = t.c;
        if (k.is_real() && sgn(k.re) < 0) {
            neg = true;
            k = -k;
        } else if (!k.is_real() && sgn(k.re) == 0 && sgn(k.im) < 0) {
            neg = true;
            k = -k;
        }
        if (t.m.empty()) {
            c = k.atomic() ? k.str() : "(" + k.str() + ")";
        } else if (k.is_one()) {
            c = mono_str(t.m);
        } else {
            c = (k.atomic() ? k.str() : "(" + k.str() + ")") + "*" + mono_str(t.m);
        }
        if (first) s += neg ? "-" + c : c;
        else s += neg ? " - " + c : " + " + c;
        first = false;
    }
    return s;
}

// ---------------------------------------------------------------------------
// Exact division and gcd over Q(i)[vars].

// Returns q with a == q*b, or nullopt when b does not divide a.
inline std::optional<Poly> try_divide(const Poly& a, const Poly& b)
{
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_zero()) return Poly();
    if (b.is_const()) return a.scaled(b.const_value().inv());
    if (b.is_monomial()) {
        std::vector<Poly::Term> out;
        GQ ci = b.lc().inv();
        for (auto& t : a.terms()) {
            if (!mono_divides(b.lm(), t.m)) return std::nullopt;
            out.push_back({mono_div(t.m, b.lm()), t.c * ci});
        }
        return Poly::from_terms(std::move(out));
    }
    Poly r = a;
    std::vector<Poly::Term> q;
    GQ ci = b.lc().inv();
    while (!r.is_zero()) {
        if (!mono_divides(b.lm(), r.lm())) return std::nullopt;
        Poly::Term t{mono_div(r.lm(), b.lm()), r.lc() * ci};
        r = r - b.mul_term(t);
        q.push_back(std::move(t));
    }
    return Poly::from_terms(std::move(q));
}

inline Poly divide_exact(const Poly& a, const Poly& b)
{
    auto q = try_divide(a, b);
    if (!q) throw Error("inexact polynomial division");
    return *q;
}

Poly poly_gcd(const Poly& a, const Poly& b);

namespace detail {

inline Poly content_in(const Poly& p, int v)
{
    auto cs = p.coeffs(v);
    Poly g;
    for (auto& c : cs) {
        if (c.is_zero()) continue;
        g = poly_gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

inline Poly prim_part(const Poly& p, int v)
{
    if (p.is_zero()) return p;
    Poly c = content_in(p, v);
    return c.is_one() ? p : divide_exact(p, c);
}

// lc(b)^k * a reduced by b as polynomials in v.
inline Poly prem(const Poly& a, const Poly& b, int v)
{
    int db = b.deg(v);
    Poly lcb = b.coeff(v, db);
    Poly r = a;
    while (!r.is_zero() && r.deg(v) >= db) {
        int dr = r.deg(v);
        Poly lcr = r.coeff(v, dr);
        r = r * lcb - (lcr * Poly::var(v, dr - db)) * b;
    }
    return r;
}

inline Poly mono_content_gcd(const Poly& m, const Poly& p)
{
    Mono g = m.lm();
    for (auto& t : p.terms()) {
        g = mono_gcd(g, t.m);
        if (g.empty()) break;
    }
    return Poly::term(g, GQ(1));
}

}  // namespace detail

// Monic gcd (zero only when both are zero).
inline Poly poly_gcd(const Poly& a, const Poly& b)
{
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_const() || b.is_const()) return Poly(1);
    if (a == b) return a.monic();
    if (a.is_monomial()) return detail::mono_content_gcd(a, b);
    if (b.is_monomial()) return detail::mono_content_gcd(b, a);
    int va = a.main_var(), vb = b.main_var();
    int v = var_before(va, vb) ? va : vb;
    if (!a.has_var(v)) return poly_gcd(a, detail::content_in(b, v));
    if (!b.has_var(v)) return poly_gcd(detail::content_in(a, v), b);
    Poly ca = detail::content_in(a, v), cb = detail::content_in(b, v);
    Poly pa = ca.is_one() ? a : divide_exact(a, ca);
    Poly pb = cb.is_one() ? b : divide_exact(b, cb);
    Poly c = poly_gcd(ca, cb);
    if (pa.deg(v) < pb.deg(v)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        Poly r = detail::prem(pa, pb, v);
        pa = std::move(pb);
        if (r.is_zero() || r.deg(v) == 0) {
            pb = r.is_zero() ? Poly() : Poly(1);
            if (!r.is_zero()) {
                pa = Poly(1);
                pb = Poly();
            }
        } else {
            pb = detail::prim_part(r, v);
        }
    }
    Poly g = pa.has_var(v) ? detail::prim_part(pa, v) : Poly(1);
    return (c * g).monic();
}

}  // namespace nassoc
