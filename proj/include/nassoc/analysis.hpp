#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catalog.hpp"

namespace nassoc {

struct Derivations {
    std::vector<SMatrix> basis;  // D e_i = column i
    int dim = 0;
    bool generic = false;  // rank taken over the parameter field
};

// Kernel of D(e_i e_j) = D(e_i) e_j + e_i D(e_j) in the n^2 entries of D.
inline Derivations derivation_algebra(const Algebra& A)
{
    int n = A.dim();
    int unknowns = n * n;
    SMatrix sys(n * n * n, unknowns);
    auto x = [n](int a, int b) { return a * n + b; };  // entry D(a, b)
    int row = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k, ++row) {
                for (int m = 0; m < n; ++m) {
                    const Scalar& c = A.at(i, j, m);
                    if (!c.is_zero()) sys(row, x(k, m)) += c;
                }
                for (int l = 0; l < n; ++l) {
                    const Scalar& c1 = A.at(l, j, k);
                    if (!c1.is_zero()) sys(row, x(l, i)) -= c1;
                    const Scalar& c2 = A.at(i, l, k);
                    if (!c2.is_zero()) sys(row, x(l, j)) -= c2;
                }
            }
    Derivations d;
    d.generic = A.is_parametric();
    for (auto& v : sys.nullspace()) {
        SMatrix D(n, n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) D(a, b) = v[x(a, b)];
        d.basis.push_back(std::move(D));
    }
    d.dim = int(d.basis.size());
    return d;
}

// Whether DD' - D'D lies in the span of the computed derivations for all pairs.
inline bool derivations_closed_under_bracket(const Derivations& d)
{
    if (d.basis.empty()) return true;
    int n = d.basis[0].rows();
    auto flat = [n](const SMatrix& m) {
        Vector v(std::size_t(n) * n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) v[a * n + b] = m(a, b);
        return v;
    };
    Subspace S(n * n);
    for (auto& D : d.basis) S.add(flat(D));
    for (auto& D1 : d.basis)
        for (auto& D2 : d.basis)
            if (!S.contains(flat(D1 * D2 - D2 * D1))) return false;
    return true;
}

struct HomomorphismResult {
    bool holds = true;
    bool invertible = false;
    int i = -1, j = -1;  // first failing basis pair (0-based)
    Vector lhs, rhs;     // M(e_i e_j) and M(e_i) M(e_j)

    std::string str() const
    {
        if (holds) return invertible ? "holds (isomorphism)" : "holds";
        return "fails at (e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + "): " + vector_str(lhs) +
               " != " + vector_str(rhs);
    }
};

// M maps A to B, columns are the images of A's basis vectors.
inline HomomorphismResult verify_homomorphism(const Algebra& A, const Algebra& B, const SMatrix& M)
{
    if (M.cols() != A.dim() || M.rows() != B.dim()) throw DimensionMismatch("homomorphism matrix shape");
    HomomorphismResult r;
    std::vector<Vector> img(A.dim());
    for (int i = 0; i < A.dim(); ++i) img[i] = M.col(i);
    for (int i = 0; i < A.dim(); ++i)
        for (int j = 0; j < A.dim(); ++j) {
            Vector lhs = M.apply(A.product(i, j));
            Vector rhs = multiply(B, img[i], img[j]);
            if (lhs != rhs) {
                r.holds = false;
                r.i = i;
                r.j = j;
                r.lhs = lhs;
                r.rhs = rhs;
                return r;
            }
        }
    r.invertible = M.is_square() && !M.det().is_zero();
    return r;
}

// Symbolic: the residual of the homomorphism equations vanishes identically
// in the free entries, and the determinant is not identically zero.
inline HomomorphismResult verify_automorphism_shape(const Algebra& A, const SMatrix& shape)
{
    auto r = verify_homomorphism(A, A, shape);
    if (r.holds && !r.invertible) {
        r.holds = false;
        r.i = r.j = -1;
    }
    return r;
}

struct Fingerprint {
    int dim = 0;
    int derivations = 0;
    int square = 0;        // dim A A
    int cube = 0;          // dim (A A) A + A (A A)
    int left_ann = 0;      // {x : x A = 0}
    int right_ann = 0;     // {x : A x = 0}
    int commutator = 0;    // dim span of xy - yx
    int associator = 0;    // dim span of (x,y,z)
    int left_rank = 0;     // generic rank of L_x
    int right_rank = 0;    // generic rank of R_x
    int idempotent_rank = 0;  // generic rank of x -> x x differential
    int plus_derivations = 0;   // Der of x o y = xy + yx
    int minus_derivations = 0;  // Der of [x, y] = xy - yx
    int square_square = 0;      // dim (A A)(A A)
    bool commutative = false;
    bool anticommutative = false;
    std::vector<std::pair<std::string, bool>> varieties;

    // Named fields in comparison order.
    std::vector<std::pair<std::string, std::string>> fields() const
    {
        std::vector<std::pair<std::string, std::string>> f = {
            {"dim", std::to_string(dim)},
            {"derivations", std::to_string(derivations)},
            {"commutative", commutative ? "yes" : "no"},
            {"anticommutative", anticommutative ? "yes" : "no"},
            {"square", std::to_string(square)},
            {"cube", std::to_string(cube)},
            {"left-annihilator", std::to_string(left_ann)},
            {"right-annihilator", std::to_string(right_ann)},
            {"commutator-span", std::to_string(commutator)},
            {"associator-span", std::to_string(associator)},
            {"left-rank", std::to_string(left_rank)},
            {"right-rank", std::to_string(right_rank)},
            {"square-map-rank", std::to_string(idempotent_rank)},
            {"plus-derivations", std::to_string(plus_derivations)},
            {"minus-derivations", std::to_string(minus_derivations)},
            {"square-square", std::to_string(square_square)},
        };
        for (auto& [v, b] : varieties) f.push_back({"variety " + v, b ? "yes" : "no"});
        return f;
    }
    std::string str() const
    {
        std::string s;
        for (auto& [k, v] : fields()) s += k + ": " + v + "\n";
        return s;
    }
};

namespace detail {
inline int span_dim(int n, const std::vector<Vector>& vs)
{
    Subspace S(n);
    for (auto& v : vs) S.add(v);
    return S.dim();
}
// Kernel dimension of the map x -> (x e_1, ..., x e_n) (left) or (e_1 x, ...).
inline int annihilator_dim(const Algebra& A, bool left)
{
    int n = A.dim();
    SMatrix m(n * n, n);
    for (int x = 0; x < n; ++x)
        for (int e = 0; e < n; ++e)
            for (int k = 0; k < n; ++k) m(e * n + k, x) = left ? A.at(x, e, k) : A.at(e, x, k);
    return n - m.rank();
}
}  // namespace detail

inline Fingerprint fingerprint(const Algebra& A)
{
    int n = A.dim();
    Fingerprint f;
    f.dim = n;
    f.derivations = derivation_algebra(A).dim;
    f.commutative = is_commutative(A);
    f.anticommutative = is_anticommutative(A);

    std::vector<Vector> prods, comms, assocs;
    std::vector<Vector> basis(n);
    for (int i = 0; i < n; ++i) basis[i] = unit_vector(n, i);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            prods.push_back(A.product(i, j));
            comms.push_back(A.product(i, j) - A.product(j, i));
            for (int k = 0; k < n; ++k) assocs.push_back(associator(A, basis[i], basis[j], basis[k]));
        }
    f.square = detail::span_dim(n, prods);
    f.commutator = detail::span_dim(n, comms);
    f.associator = detail::span_dim(n, assocs);
    Subspace sq(n);
    for (auto& p : prods) sq.add(p);
    std::vector<Vector> cube;
    for (auto& s : sq.basis())
        for (auto& b : basis) {
            cube.push_back(multiply(A, s, b));
            cube.push_back(multiply(A, b, s));
        }
    f.cube = detail::span_dim(n, cube);
    std::vector<Vector> sqsq;
    for (auto& s1 : sq.basis())
        for (auto& s2 : sq.basis()) sqsq.push_back(multiply(A, s1, s2));
    f.square_square = detail::span_dim(n, sqsq);
    f.left_ann = detail::annihilator_dim(A, true);
    f.right_ann = detail::annihilator_dim(A, false);

    Vector x = generic_element(n, "_g");
    SMatrix L(n, n), R(n, n), Q(n, n);
    for (int j = 0; j < n; ++j) {
        Vector l = multiply(A, x, basis[j]), r = multiply(A, basis[j], x);
        for (int k = 0; k < n; ++k) {
            L(k, j) = l[k];
            R(k, j) = r[k];
            Q(k, j) = l[k] + r[k];  // differential of x -> x x
        }
    }
    f.left_rank = L.rank();
    f.right_rank = R.rank();
    f.idempotent_rank = Q.rank();
    f.plus_derivations = derivation_algebra(plus_algebra(A)).dim;
    f.minus_derivations = derivation_algebra(minus_algebra(A)).dim;

    for (auto& name : Registry::instance().names()) {
        if (Registry::instance().get(name).binary) continue;
        f.varieties.push_back({name, check_variety(A, name).member});
    }
    return f;
}

struct Separation {
    bool separated = false;
    std::string field, a_value, b_value;
    std::string str() const
    {
        return separated ? field + ": " + a_value + " vs " + b_value : "indistinguishable by fingerprint";
    }
};

inline Separation separate(const Fingerprint& a, const Fingerprint& b)
{
    auto fa = a.fields(), fb = b.fields();
    for (std::size_t k = 0; k < std::min(fa.size(), fb.size()); ++k)
        if (fa[k].second != fb[k].second) return {true, fa[k].first, fa[k].second, fb[k].second};
    return {};
}

inline Separation separate(const Algebra& A, const Algebra& B) { return separate(fingerprint(A), fingerprint(B)); }

}  // namespace nassoc
