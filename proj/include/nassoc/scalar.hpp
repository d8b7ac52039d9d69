#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace nassoc {

enum class Level { rational, gaussian, polynomial, quotient };

inline const char* level_name(Level l)
{
    switch (l) {
    case Level::rational: return "rational";
    case Level::gaussian: return "gaussian";
    case Level::polynomial: return "polynomial";
    case Level::quotient: return "quotient";
    }
    return "?";
}

// Element of Q(i)(params, t): reduced num/den with den monic in lex order.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : num_(v), den_(1) {}
    Scalar(int v) : num_(long(v)), den_(1) {}
    Scalar(const GQ& c) : num_(c), den_(1) {}
    Scalar(const mpq_class& q) : num_(GQ(q)), den_(1) {}
    Scalar(const Poly& p) : num_(p), den_(1) {}
    Scalar(const Poly& n, const Poly& d)
    {
        if (d.is_zero()) throw DivisionByZero();
        num_ = n;
        den_ = d;
        normalize();
    }

    static Scalar frac(long n, long d) { return Scalar(GQ::frac(n, d)); }
    static Scalar I() { return Scalar(GQ::I()); }
    static Scalar param(std::string_view name) { return Scalar(Poly::var(name)); }
    static Scalar var(int id) { return Scalar(Poly::var(id)); }
    static Scalar t() { return Scalar(Poly::var(t_var())); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_one() && num_.is_one(); }
    bool is_const() const { return den_.is_one() && num_.is_const(); }
    bool is_poly() const { return den_.is_one(); }
    GQ const_value() const { return num_.const_value(); }
    bool has_var(int v) const { return num_.has_var(v) || den_.has_var(v); }
    std::vector<int> variables() const
    {
        auto a = num_.variables();
        for (int v : den_.variables())
            if (std::find(a.begin(), a.end(), v) == a.end()) a.push_back(v);
        std::sort(a.begin(), a.end(), var_before);
        return a;
    }
    // Size measure used to pick cheap pivots.
    std::size_t weight() const { return num_.terms().size() + den_.terms().size() - 1; }

    Level level() const
    {
        if (!den_.is_one()) return Level::quotient;
        if (!num_.is_const()) return Level::polynomial;
        return num_.const_value().is_real() ? Level::rational : Level::gaussian;
    }

    Scalar operator-() const
    {
        Scalar r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend Scalar operator+(const Scalar& a, const Scalar& b) { return addsub(a, b, false); }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return addsub(a, b, true); }
    friend Scalar operator*(const Scalar& a, const Scalar& b)
    {
        if (a.is_zero() || b.is_zero()) return Scalar();
        if (a.den_.is_one() && b.den_.is_one()) return Scalar(a.num_ * b.num_);
        if (a.is_const()) return b.scaled(a.const_value());
        if (b.is_const()) return a.scaled(b.const_value());
        Poly g1 = poly_gcd(a.num_, b.den_), g2 = poly_gcd(b.num_, a.den_);
        Poly an = g1.is_one() ? a.num_ : divide_exact(a.num_, g1);
        Poly bd = g1.is_one() ? b.den_ : divide_exact(b.den_, g1);
        Poly bn = g2.is_one() ? b.num_ : divide_exact(b.num_, g2);
        Poly ad = g2.is_one() ? a.den_ : divide_exact(a.den_, g2);
        Scalar r;
        r.num_ = an * bn;
        r.den_ = ad * bd;
        r.fix_sign();
        return r;
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inv() const
    {
        if (is_zero()) throw DivisionByZero();
        Scalar r;
        r.num_ = den_;
        r.den_ = num_;
        r.fix_sign();
        return r;
    }
    Scalar pow(int k) const
    {
        if (k < 0) return inv().pow(-k);
        Scalar r(1), b = *this;
        while (k) {
            if (k & 1) r *= b;
            k >>= 1;
            if (k) b *= b;
        }
        return r;
    }
    Scalar scaled(const GQ& c) const
    {
        if (c.is_zero()) return Scalar();
        Scalar r = *this;
        r.num_ = r.num_.scaled(c);
        return r;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Value at t = 0 after cancellation.
    Scalar limit_at_zero() const
    {
        int t = t_var();
        if (!has_var(t)) return *this;
        int vn = num_.is_zero() ? 0 : num_.valuation(t);
        int vd = den_.valuation(t);
        if (num_.is_zero()) return Scalar();
        if (vd > vn) throw PoleError(str());
        if (vn > vd) return Scalar();
        return Scalar(num_.coeff(t, vn), den_.coeff(t, vd));
    }

    Scalar subs(int v, const Scalar& val) const
    {
        if (!has_var(v)) return *this;
        return horner(num_, v, val) / horner(den_, v, val);
    }
    Scalar subs(const std::map<int, Scalar>& m) const
    {
        Scalar r = *this;
        for (auto& [v, s] : m) r = r.subs(v, s);
        return r;
    }
    GQ eval(const std::map<int, GQ>& at) const
    {
        GQ d = den_.eval(at);
        if (d.is_zero()) throw DivisionByZero();
        return num_.eval(at) / d;
    }

    std::string str() const
    {
        if (den_.is_one()) return num_.str();
        std::string n = num_.str(), d = den_.str();
        if (num_.terms().size() > 1 || !num_.const_value().atomic()) n = "(" + n + ")";
        if (den_.terms().size() > 1 || !den_.lc().atomic() || !den_.lc().is_one() ||
            den_.lm().e.size() > 1 || den_.lm().total() > 1)
            d = "(" + d + ")";
        return n + "/" + d;
    }

private:
    Poly num_;
    Poly den_{1};

    static Scalar horner(const Poly& p, int v, const Scalar& val)
    {
        auto cs = p.coeffs(v);
        Scalar r;
        for (std::size_t k = cs.size(); k-- > 0;) r = r * val + Scalar(cs[k]);
        return r;
    }

    static Scalar addsub(const Scalar& a, const Scalar& b, bool neg)
    {
        if (b.is_zero()) return a;
        if (a.is_zero()) return neg ? -b : b;
        if (a.den_ == b.den_) {
            Scalar r;
            r.num_ = neg ? a.num_ - b.num_ : a.num_ + b.num_;
            r.den_ = a.den_;
            if (!r.den_.is_one()) r.normalize();
            return r;
        }
        Poly g = poly_gcd(a.den_, b.den_);
        Poly ad = g.is_one() ? a.den_ : divide_exact(a.den_, g);
        Poly bd = g.is_one() ? b.den_ : divide_exact(b.den_, g);
        Poly n = neg ? a.num_ * bd - b.num_ * ad : a.num_ * bd + b.num_ * ad;
        Scalar r;
        if (n.is_zero()) return r;
        Poly h = g.is_one() ? Poly(1) : poly_gcd(n, g);
        if (!h.is_one()) {
            n = divide_exact(n, h);
            g = divide_exact(g, h);
        }
        r.num_ = std::move(n);
        r.den_ = ad * bd * g;
        r.fix_sign();
        return r;
    }

    void normalize()
    {
        if (num_.is_zero()) {
            den_ = Poly(1);
            return;
        }
        if (!den_.is_const()) {
            Poly g = poly_gcd(num_, den_);
            if (!g.is_one()) {
                num_ = divide_exact(num_, g);
                den_ = divide_exact(den_, g);
            }
        }
        fix_sign();
    }
    void fix_sign()
    {
        if (den_.lc().is_one()) return;
        GQ c = den_.lc().inv();
        num_ = num_.scaled(c);
        den_ = den_.scaled(c);
    }
};

inline std::string to_string(const Scalar& s) { return s.str(); }

using Vector = std::vector<Scalar>;

inline Vector unit_vector(int n, int i)
{
    Vector v(n);
    v[i] = Scalar(1);
    return v;
}
inline bool is_zero(const Vector& v)
{
    for (auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}
inline Vector operator+(const Vector& a, const Vector& b)
{
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
inline Vector operator-(const Vector& a, const Vector& b)
{
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
inline Vector operator*(const Scalar& c, const Vector& v)
{
    Vector r(v.size());
    if (c.is_zero()) return r;
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}
inline std::string vector_str(const Vector& v)
{
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        std::string c = v[k].str();
        std::string e = "e" + std::to_string(k + 1);
        std::string term;
        if (v[k].is_one()) term = e;
        else if (c == "-1") term = "-" + e;
        else if (v[k].is_poly() && v[k].num().terms().size() == 1 && v[k].num().lc().atomic()) term = c + "*" + e;
        else term = "(" + c + ")*" + e;
        if (s.empty()) s = term;
        else if (term[0] == '-') s += " - " + term.substr(1);
        else s += " + " + term;
    }
    return s.empty() ? "0" : s;
}

}  // namespace nassoc
