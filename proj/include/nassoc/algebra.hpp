#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace nassoc {

enum class Symmetry { none, commutative, anticommutative };

// A named parameter with side conditions p != 0 on polynomials in the parameters.
struct ParamSpec {
    std::string name;
    std::vector<Poly> nonzero;
};

class Algebra {
public:
    Algebra() = default;
    explicit Algebra(int n) : n_(n), c_(std::size_t(n) * n * n)
    {
        if (n <= 0) throw DimensionMismatch("dimension must be positive");
    }

    int dim() const { return n_; }
    const Scalar& at(int i, int j, int k) const { return c_[idx(i, j, k)]; }
    Scalar& at(int i, int j, int k) { return c_[idx(i, j, k)]; }
    // e_i e_j as a coordinate vector (0-based indices).
    Vector product(int i, int j) const
    {
        Vector v(n_);
        for (int k = 0; k < n_; ++k) v[k] = at(i, j, k);
        return v;
    }
    void set_product(int i, int j, const Vector& v)
    {
        for (int k = 0; k < n_; ++k) at(i, j, k) = v[k];
    }

    std::vector<ParamSpec> params;
    std::string label;
    Symmetry symmetry = Symmetry::none;  // declared tag, used for serialization

    const ParamSpec* find_param(const std::string& name) const
    {
        for (auto& p : params)
            if (p.name == name) return &p;
        return nullptr;
    }
    bool is_parametric() const
    {
        for (auto& x : c_)
            if (!x.is_const()) return true;
        return false;
    }
    std::vector<int> variables() const
    {
        std::vector<int> vs;
        for (auto& x : c_)
            for (int v : x.variables())
                if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
        std::sort(vs.begin(), vs.end(), var_before);
        return vs;
    }
    // Every variable must be a declared parameter (t only when allowed).
    void validate(bool allow_t = false) const
    {
        for (int v : variables()) {
            if (allow_t && v == t_var()) continue;
            if (!find_param(var_name(v))) throw UnknownParameter(var_name(v));
        }
    }

    friend bool operator==(const Algebra& a, const Algebra& b) { return a.n_ == b.n_ && a.c_ == b.c_; }
    friend bool operator!=(const Algebra& a, const Algebra& b) { return !(a == b); }

    const std::vector<Scalar>& constants() const { return c_; }

    template <class G>
    Algebra map_constants(G g) const
    {
        Algebra r = *this;
        for (auto& x : r.c_) x = g(x);
        return r;
    }

private:
    int n_ = 0;
    std::vector<Scalar> c_;
    std::size_t idx(int i, int j, int k) const
    {
        if (i < 0 || j < 0 || k < 0 || i >= n_ || j >= n_ || k >= n_)
            throw IndexOutOfRange("structure constant index out of range");
        return (std::size_t(i) * n_ + j) * n_ + k;
    }
};

inline void require_dim(const Algebra& a, const Vector& v)
{
    if (int(v.size()) != a.dim())
        throw DimensionMismatch("vector of length " + std::to_string(v.size()) + " used with dimension " +
                                std::to_string(a.dim()));
}

inline Vector multiply(const Algebra& A, const Vector& x, const Vector& y)
{
    require_dim(A, x);
    require_dim(A, y);
    int n = A.dim();
    Vector r(n);
    for (int i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            Scalar xy;
            bool have = false;
            for (int k = 0; k < n; ++k) {
                const Scalar& c = A.at(i, j, k);
                if (c.is_zero()) continue;
                if (!have) {
                    xy = x[i] * y[j];
                    have = true;
                }
                r[k] += xy * c;
            }
        }
    }
    return r;
}

inline Vector associator(const Algebra& A, const Vector& x, const Vector& y, const Vector& z)
{
    return multiply(A, multiply(A, x, y), z) - multiply(A, x, multiply(A, y, z));
}

namespace detail {
inline Algebra sym_part(const Algebra& A, bool plus)
{
    Algebra r(A.dim());
    r.params = A.params;
    r.symmetry = plus ? Symmetry::commutative : Symmetry::anticommutative;
    Scalar half = Scalar::frac(1, 2);
    int n = A.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Scalar s = plus ? A.at(i, j, k) + A.at(j, i, k) : A.at(i, j, k) - A.at(j, i, k);
                r.at(i, j, k) = half * s;
            }
    return r;
}
}  // namespace detail

// x o y = (xy + yx)/2
inline Algebra plus_algebra(const Algebra& A)
{
    Algebra r = detail::sym_part(A, true);
    if (!A.label.empty()) r.label = A.label + "+";
    return r;
}
// [x, y] = (xy - yx)/2
inline Algebra minus_algebra(const Algebra& A)
{
    Algebra r = detail::sym_part(A, false);
    if (!A.label.empty()) r.label = A.label + "-";
    return r;
}

inline Algebra opposite(const Algebra& A)
{
    int n = A.dim();
    Algebra r(n);
    r.params = A.params;
    r.symmetry = A.symmetry;
    if (!A.label.empty()) r.label = A.label + "^op";
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) r.at(i, j, k) = A.at(j, i, k);
    return r;
}

// Constants in the basis E_i = sum_j M(i,j) e_j.
inline Algebra change_basis(const Algebra& A, const SMatrix& M)
{
    int n = A.dim();
    if (M.rows() != n || M.cols() != n) throw DimensionMismatch("basis matrix shape");
    SMatrix Mi = M.inverse();
    Algebra r(n);
    r.params = A.params;
    r.label = A.label;
    std::vector<Vector> rows(n);
    for (int i = 0; i < n; ++i) rows[i] = M.row(i);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vector v = multiply(A, rows[i], rows[j]);
            if (is_zero(v)) continue;
            r.set_product(i, j, Mi.left_apply(v));
        }
    return r;
}

inline bool is_commutative(const Algebra& A)
{
    int n = A.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (A.at(i, j, k) != A.at(j, i, k)) return false;
    return true;
}
inline bool is_anticommutative(const Algebra& A)
{
    int n = A.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (A.at(i, j, k) != -A.at(j, i, k)) return false;
    return true;
}
inline bool is_zero_algebra(const Algebra& A)
{
    for (auto& c : A.constants())
        if (!c.is_zero()) return false;
    return true;
}

// Row-reduced basis of a subspace, kept in RREF so coordinates can be read off
// the pivot columns.
class Subspace {
public:
    explicit Subspace(int n) : n_(n) {}
    int dim() const { return int(rows_.size()); }
    const std::vector<Vector>& basis() const { return rows_; }
    const std::vector<int>& pivots() const { return piv_; }

    Vector reduce(Vector v) const
    {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            Scalar f = v[piv_[r]];
            if (f.is_zero()) continue;
            for (int k = 0; k < n_; ++k)
                if (!rows_[r][k].is_zero()) v[k] -= f * rows_[r][k];
        }
        return v;
    }
    bool contains(const Vector& v) const { return is_zero(reduce(v)); }
    // Adds v if independent; returns true when the span grew.
    bool add(const Vector& v)
    {
        Vector w = reduce(v);
        int p = -1;
        std::size_t best = 0;
        for (int k = 0; k < n_; ++k) {
            if (w[k].is_zero()) continue;
            std::size_t wt = w[k].weight();
            if (p < 0 || wt < best) {
                p = k;
                best = wt;
            }
        }
        if (p < 0) return false;
        Scalar inv = w[p].inv();
        for (auto& x : w) x *= inv;
        for (auto& row : rows_) {
            Scalar f = row[p];
            if (f.is_zero()) continue;
            for (int k = 0; k < n_; ++k)
                if (!w[k].is_zero()) row[k] -= f * w[k];
        }
        rows_.push_back(std::move(w));
        piv_.push_back(p);
        return true;
    }
    // Coordinates of a member vector with respect to basis().
    Vector coords(const Vector& v) const
    {
        Vector c(rows_.size());
        for (std::size_t r = 0; r < rows_.size(); ++r) c[r] = v[piv_[r]];
        return c;
    }

private:
    int n_;
    std::vector<Vector> rows_;
    std::vector<int> piv_;
};

// Smallest subalgebra containing the generators.
inline Subspace subalgebra_closure(const Algebra& A, const std::vector<Vector>& gens)
{
    int n = A.dim();
    Subspace S(n);
    for (auto& g : gens) {
        require_dim(A, g);
        S.add(g);
    }
    std::size_t done = 0;  // products among basis()[0..done) already added
    while (done < S.basis().size() && S.dim() < n) {
        std::size_t m = S.basis().size();
        std::vector<Vector> b = S.basis();
        for (std::size_t i = 0; i < m && S.dim() < n; ++i)
            for (std::size_t j = 0; j < m && S.dim() < n; ++j) {
                if (i < done && j < done) continue;
                S.add(multiply(A, b[i], b[j]));
            }
        done = m;
        if (S.basis().size() == m) break;
    }
    return S;
}

// The multiplication restricted to a subalgebra, in the subspace's RREF basis.
inline Algebra restrict_to(const Algebra& A, const Subspace& S)
{
    int m = S.dim();
    Algebra r(m);
    r.params = A.params;
    auto& b = S.basis();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Vector v = multiply(A, b[i], b[j]);
            if (!is_zero(S.reduce(v))) throw Error("subspace is not closed under multiplication");
            r.set_product(i, j, S.coords(v));
        }
    return r;
}

// Substitutes parameter values after checking the side conditions.
inline Algebra specialize(const Algebra& A, const std::map<std::string, Scalar>& values)
{
    std::map<int, Scalar> sub;
    for (auto& [name, val] : values) {
        if (!A.find_param(name)) throw UnknownParameter(name);
        sub[var_id(name)] = val;
    }
    for (auto& p : A.params) {
        for (auto& c : p.nonzero) {
            Scalar v = Scalar(c).subs(sub);
            if (v.is_zero())
                throw ConstraintViolation("parameter constraint " + c.str() + " != 0 violated for " + p.name);
        }
    }
    Algebra r = A.map_constants([&](const Scalar& s) { return s.subs(sub); });
    r.params.clear();
    for (auto& p : A.params)
        if (!values.count(p.name)) r.params.push_back(p);
    // constraints of remaining parameters may mention substituted ones
    for (auto& p : r.params)
        for (auto& c : p.nonzero) c = Scalar(c).subs(sub).num();
    return r;
}

// Variables of all scalars in a vector.
inline std::vector<int> vector_variables(const Vector& v)
{
    std::vector<int> vs;
    for (auto& x : v)
        for (int k : x.variables())
            if (std::find(vs.begin(), vs.end(), k) == vs.end()) vs.push_back(k);
    return vs;
}

// Generic element sum p_k e_k with fresh coordinate variables `prefix1..n`.
inline Vector generic_element(int n, const std::string& prefix)
{
    Vector v(n);
    for (int k = 0; k < n; ++k) v[k] = Scalar::param(prefix + std::to_string(k + 1));
    return v;
}

inline std::string product_table_str(const Algebra& A)
{
    std::string s;
    int n = A.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vector v = A.product(i, j);
            if (is_zero(v)) continue;
            if (!s.empty()) s += ", ";
            s += "e" + std::to_string(i + 1) + "e" + std::to_string(j + 1) + " = " + vector_str(v);
        }
    return s.empty() ? "(zero product)" : s;
}

}  // namespace nassoc
