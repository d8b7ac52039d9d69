#pragma once

#include <gmpxx.h>

#include <string>

#include "errors.hpp"

namespace nassoc {

// Gaussian rational re + im*i.
struct GQ {
    mpq_class re, im;

    GQ() : re(0), im(0) {}
    GQ(long v) : re(v), im(0) {}
    GQ(const mpq_class& r) : re(r), im(0) {}
    GQ(const mpq_class& r, const mpq_class& i) : re(r), im(i) {}

    static GQ frac(long n, long d)
    {
        if (d == 0) throw DivisionByZero();
        mpq_class q(n, d);
        q.canonicalize();
        return GQ(q);
    }
    static GQ I() { return GQ(mpq_class(0), mpq_class(1)); }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }
    bool is_one() const { return sgn(im) == 0 && re == 1; }

    GQ operator-() const { return GQ(-re, -im); }
    GQ& operator+=(const GQ& o) { re += o.re; im += o.im; return *this; }
    GQ& operator-=(const GQ& o) { re -= o.re; im -= o.im; return *this; }
    GQ& operator*=(const GQ& o)
    {
        if (is_real() && o.is_real()) {
            re *= o.re;
            return *this;
        }
        mpq_class r = re * o.re - im * o.im;
        mpq_class i = re * o.im + im * o.re;
        re = r;
        im = i;
        return *this;
    }
    GQ inv() const
    {
        if (is_zero()) throw DivisionByZero();
        if (is_real()) return GQ(mpq_class(1) / re);
        mpq_class n = re * re + im * im;
        return GQ(re / n, -im / n);
    }
    GQ& operator/=(const GQ& o)
    {
        if (o.is_real()) {
            if (sgn(o.re) == 0) throw DivisionByZero();
            re /= o.re;
            im /= o.re;
            return *this;
        }
        return *this *= o.inv();
    }

    friend GQ operator+(GQ a, const GQ& b) { return a += b; }
    friend GQ operator-(GQ a, const GQ& b) { return a -= b; }
    friend GQ operator*(GQ a, const GQ& b) { return a *= b; }
    friend GQ operator/(GQ a, const GQ& b) { return a /= b; }
    friend bool operator==(const GQ& a, const GQ& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GQ& a, const GQ& b) { return !(a == b); }

    // Rendering that the coefficient grammar reads back.
    std::string str() const
    {
        if (is_real()) return re.get_str();
        std::string s;
        if (sgn(re) != 0) s = re.get_str();
        std::string ip;
        if (im == 1) ip = "i";
        else if (im == -1) ip = "-i";
        else ip = im.get_str() + "*i";
        if (s.empty()) return ip;
        if (ip[0] == '-') return s + ip;
        return s + "+" + ip;
    }
    // True when str() is a single signed factor (no inner + or -).
    bool atomic() const
    {
        return is_real() || sgn(re) == 0;
    }
};

}  // namespace nassoc
