#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace nassoc {

// Parenthesized word over abstract variables 0..k-1.
struct Word;
using WordPtr = std::shared_ptr<const Word>;
struct Word {
    int var = -1;  // leaf when >= 0
    WordPtr l, r;

    static WordPtr leaf(int v)
    {
        auto w = std::make_shared<Word>();
        w->var = v;
        return w;
    }
    static WordPtr mul(WordPtr a, WordPtr b)
    {
        auto w = std::make_shared<Word>();
        w->l = std::move(a);
        w->r = std::move(b);
        return w;
    }
    bool is_leaf() const { return var >= 0; }
};

inline void word_leaves(const Word& w, std::vector<int>& out)
{
    if (w.is_leaf()) {
        out.push_back(w.var);
        return;
    }
    word_leaves(*w.l, out);
    word_leaves(*w.r, out);
}

inline std::string word_str(const Word& w, const std::vector<std::string>& names, bool top = true)
{
    if (w.is_leaf()) return names[w.var];
    std::string s = word_str(*w.l, names, false) + word_str(*w.r, names, false);
    return top ? s : "(" + s + ")";
}

// Linear combination of words; the building block for identities.
struct Expr {
    std::vector<std::pair<GQ, WordPtr>> terms;

    Expr() = default;
    Expr(WordPtr w) { terms.push_back({GQ(1), std::move(w)}); }

    friend Expr operator+(Expr a, const Expr& b)
    {
        a.terms.insert(a.terms.end(), b.terms.begin(), b.terms.end());
        return a;
    }
    friend Expr operator-(Expr a, const Expr& b)
    {
        for (auto& t : b.terms) a.terms.push_back({-t.first, t.second});
        return a;
    }
    friend Expr operator*(const GQ& c, Expr a)
    {
        for (auto& t : a.terms) t.first *= c;
        return a;
    }
    friend Expr operator*(long c, Expr a) { return GQ(c) * std::move(a); }
    Expr operator-() const { return GQ(-1) * *this; }
    // Bilinear product of two combinations.
    friend Expr operator*(const Expr& a, const Expr& b)
    {
        Expr r;
        for (auto& x : a.terms)
            for (auto& y : b.terms) r.terms.push_back({x.first * y.first, Word::mul(x.second, y.second)});
        return r;
    }
};

namespace build {
inline Expr var(int v) { return Expr(Word::leaf(v)); }
inline Expr assoc(const Expr& x, const Expr& y, const Expr& z) { return (x * y) * z - x * (y * z); }
inline Expr comm(const Expr& x, const Expr& y) { return x * y - y * x; }
inline Expr jordan_prod(const Expr& x, const Expr& y) { return x * y + y * x; }
}  // namespace build

class Identity {
public:
    Identity() = default;
    Identity(std::string name, std::vector<std::string> vars, const Expr& e) : name_(std::move(name)), vars_(std::move(vars))
    {
        // merge equal words (structural) and drop zero coefficients
        for (auto& t : e.terms) {
            if (t.first.is_zero()) continue;
            std::vector<int> lv;
            word_leaves(*t.second, lv);
            terms_.push_back({t.first, t.second, lv});
        }
        if (terms_.empty()) throw Error("identity '" + name_ + "' has no terms");
        degree_.assign(vars_.size(), 0);
        for (int v : terms_[0].leaves) {
            if (v < 0 || v >= int(vars_.size())) throw Error("identity variable out of range");
            ++degree_[v];
        }
        for (auto& t : terms_) {
            std::vector<int> d(vars_.size(), 0);
            for (int v : t.leaves) ++d[v];
            if (d != degree_) throw Error("identity '" + name_ + "' is not homogeneous");
        }
    }

    const std::string& name() const { return name_; }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<int>& degrees() const { return degree_; }
    int total_degree() const { return std::accumulate(degree_.begin(), degree_.end(), 0); }
    bool multilinear() const
    {
        for (int d : degree_)
            if (d > 1) return false;
        return true;
    }

    struct Term {
        GQ coef;
        WordPtr word;
        std::vector<int> leaves;
    };
    const std::vector<Term>& terms() const { return terms_; }

    std::string str() const
    {
        std::string s;
        for (auto& t : terms_) {
            std::string w = word_str(*t.word, vars_);
            GQ c = t.coef;
            bool neg = c.is_real() && sgn(c.re) < 0;
            if (neg) c = -c;
            std::string cs = c.is_one() ? "" : (c.atomic() ? c.str() : "(" + c.str() + ")") + "*";
            if (s.empty()) s = (neg ? "-" : "") + cs + w;
            else s += (neg ? " - " : " + ") + cs + w;
        }
        return s + " = 0";
    }

private:
    std::string name_;
    std::vector<std::string> vars_;
    std::vector<Term> terms_;
    std::vector<int> degree_;
};

// Full multilinearization: a variable of degree d becomes d fresh variables
// and the multilinear component (sum over occurrence bijections) is kept.
inline Identity linearize(const Identity& id)
{
    if (id.multilinear()) return id;
    const auto& deg = id.degrees();
    std::vector<std::string> names;
    std::vector<int> first(deg.size());
    for (std::size_t v = 0; v < deg.size(); ++v) {
        first[v] = int(names.size());
        if (deg[v] == 1) names.push_back(id.vars()[v]);
        else
            for (int c = 1; c <= deg[v]; ++c) names.push_back(id.vars()[v] + std::to_string(c));
    }
    Expr out;
    for (auto& t : id.terms()) {
        // occurrences of each variable in leaf order
        std::vector<std::vector<int>> perms(deg.size());
        for (std::size_t v = 0; v < deg.size(); ++v) {
            perms[v].resize(deg[v]);
            std::iota(perms[v].begin(), perms[v].end(), 0);
        }
        std::function<void(std::size_t)> rec = [&](std::size_t v) {
            if (v == deg.size()) {
                std::vector<int> seen(deg.size(), 0);
                std::function<WordPtr(const Word&)> relabel = [&](const Word& w) -> WordPtr {
                    if (w.is_leaf()) {
                        int k = seen[w.var]++;
                        return Word::leaf(first[w.var] + perms[w.var][k]);
                    }
                    WordPtr a = relabel(*w.l);
                    WordPtr b = relabel(*w.r);
                    return Word::mul(a, b);
                };
                out.terms.push_back({t.coef, relabel(*t.word)});
                return;
            }
            std::sort(perms[v].begin(), perms[v].end());
            do {
                rec(v + 1);
            } while (std::next_permutation(perms[v].begin(), perms[v].end()));
        };
        rec(0);
    }
    // combine structurally equal words
    std::map<std::string, std::pair<GQ, WordPtr>> acc;
    std::vector<std::string> order;
    for (auto& [c, w] : out.terms) {
        std::string key = word_str(*w, names);
        auto it = acc.find(key);
        if (it == acc.end()) {
            acc[key] = {c, w};
            order.push_back(key);
        } else {
            it->second.first += c;
        }
    }
    Expr merged;
    for (auto& k : order)
        if (!acc[k].first.is_zero()) merged.terms.push_back(acc[k]);
    return Identity(id.name() + " (linearized)", names, merged);
}

// ---------------------------------------------------------------------------
// Evaluation

namespace detail {
// Product of words with leaf values in occurrence order.
inline Vector eval_word(const Algebra& A, const Word& w, const std::vector<const Vector*>& occ, std::size_t& pos)
{
    if (w.is_leaf()) return *occ[pos++];
    Vector a = eval_word(A, *w.l, occ, pos);
    if (is_zero(a)) {
        // skip the right subtree's leaves
        std::vector<int> lv;
        word_leaves(*w.r, lv);
        pos += lv.size();
        return Vector(A.dim());
    }
    Vector b = eval_word(A, *w.r, occ, pos);
    return multiply(A, a, b);
}
}  // namespace detail

// Value of the identity at given vectors, one per variable, without
// linearization (for multilinear identities this is the usual evaluation).
inline Vector evaluate(const Algebra& A, const Identity& id, const std::vector<Vector>& values)
{
    if (values.size() != id.vars().size()) throw DimensionMismatch("wrong number of identity arguments");
    Vector sum(A.dim());
    for (auto& t : id.terms()) {
        std::vector<const Vector*> occ;
        for (int v : t.leaves) occ.push_back(&values[v]);
        std::size_t pos = 0;
        Vector r = detail::eval_word(A, *t.word, occ, pos);
        sum = sum + Scalar(t.coef) * r;
    }
    return sum;
}

struct Witness {
    std::string identity;
    std::vector<std::pair<std::string, int>> assignment;  // linearized variable -> basis index (0-based)
    Vector value;

    std::string str() const
    {
        std::string s = "(";
        for (std::size_t k = 0; k < assignment.size(); ++k)
            s += (k ? "," : "") + std::string("e") + std::to_string(assignment[k].second + 1);
        s += ")";
        return s;
    }
    std::string detail() const
    {
        std::string s;
        for (std::size_t k = 0; k < assignment.size(); ++k)
            s += (k ? ", " : "") + assignment[k].first + "=e" + std::to_string(assignment[k].second + 1);
        return identity + " fails at " + s + " with value " + vector_str(value);
    }
};

struct CheckResult {
    bool holds = true;
    std::optional<Witness> witness;
};

// Evaluates the full linearization of `id` on basis vectors: each variable of
// degree d receives a non-decreasing d-tuple of basis indices (the linearized
// identity is symmetric in the copies, so this covers every basis tuple), and
// the first failing tuple in lexicographic order is returned.
inline CheckResult check_identity(const Algebra& A, const Identity& id)
{
    int n = A.dim();
    const auto& deg = id.degrees();
    std::size_t nv = deg.size();
    std::vector<Vector> basis(n);
    for (int k = 0; k < n; ++k) basis[k] = unit_vector(n, k);

    // per-variable current multiset (sorted index list)
    std::vector<std::vector<int>> cur(nv);
    for (std::size_t v = 0; v < nv; ++v) cur[v].assign(deg[v], 0);

    auto next_multiset = [n](std::vector<int>& m) {
        int i = int(m.size()) - 1;
        while (i >= 0 && m[i] == n - 1) --i;
        if (i < 0) return false;
        int x = m[i] + 1;
        for (std::size_t k = i; k < m.size(); ++k) m[k] = x;
        return true;
    };

    // weight: product of factorials of repeated indices (bijections per arrangement)
    auto weight = [&]() {
        long w = 1;
        for (auto& m : cur) {
            std::size_t i = 0;
            while (i < m.size()) {
                std::size_t j = i;
                while (j < m.size() && m[j] == m[i]) ++j;
                for (std::size_t f = 2; f <= j - i; ++f) w *= long(f);
                i = j;
            }
        }
        return w;
    };

    while (true) {
        Vector sum(n);
        for (auto& t : id.terms()) {
            // enumerate distinct arrangements of each variable's multiset over its occurrences
            std::vector<std::vector<int>> arr = cur;
            std::vector<const Vector*> occ(t.leaves.size());
            std::function<void(std::size_t)> rec = [&](std::size_t v) {
                if (v == nv) {
                    std::vector<std::size_t> seen(nv, 0);
                    for (std::size_t p = 0; p < t.leaves.size(); ++p) {
                        int var = t.leaves[p];
                        occ[p] = &basis[arr[var][seen[var]++]];
                    }
                    std::size_t pos = 0;
                    Vector r = detail::eval_word(A, *t.word, occ, pos);
                    if (!is_zero(r)) sum = sum + Scalar(t.coef) * r;
                    return;
                }
                std::sort(arr[v].begin(), arr[v].end());
                do {
                    rec(v + 1);
                } while (std::next_permutation(arr[v].begin(), arr[v].end()));
            };
            rec(0);
        }
        if (!is_zero(sum)) {
            Witness w;
            w.identity = id.name();
            for (std::size_t v = 0; v < nv; ++v) {
                if (deg[v] == 1) w.assignment.push_back({id.vars()[v], cur[v][0]});
                else
                    for (int c = 0; c < deg[v]; ++c)
                        w.assignment.push_back({id.vars()[v] + std::to_string(c + 1), cur[v][c]});
            }
            w.value = Scalar(weight()) * sum;
            return {false, w};
        }
        // advance the tuple: last variable fastest
        std::size_t v = nv;
        bool advanced = false;
        while (v-- > 0) {
            if (next_multiset(cur[v])) {
                for (std::size_t u = v + 1; u < nv; ++u) std::fill(cur[u].begin(), cur[u].end(), 0);
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return {};
}

// Jacobian [[x,y],z] + [[y,z],x] + [[z,x],y] in the algebra's own product.
inline Vector jacobian(const Algebra& A, const Vector& x, const Vector& y, const Vector& z)
{
    return multiply(A, multiply(A, x, y), z) + multiply(A, multiply(A, y, z), x) + multiply(A, multiply(A, z, x), y);
}

// ---------------------------------------------------------------------------
// Registry

struct VarietySpec {
    std::string name;
    std::vector<Identity> identities;
    bool binary = false;
    std::string underlying;  // for binary varieties
    std::string description;
};

namespace identities {
using namespace build;

inline Identity right_alternative()
{
    auto x = var(0), y = var(1), z = var(2);
    return Identity("(x,y,z)+(x,z,y)", {"x", "y", "z"}, assoc(x, y, z) + assoc(x, z, y));
}
inline Identity left_alternative()
{
    auto x = var(0), y = var(1), z = var(2);
    return Identity("(x,y,z)+(y,x,z)", {"x", "y", "z"}, assoc(x, y, z) + assoc(y, x, z));
}
inline Identity associativity()
{
    auto x = var(0), y = var(1), z = var(2);
    return Identity("(x,y,z)", {"x", "y", "z"}, assoc(x, y, z));
}
inline Identity commutativity()
{
    auto x = var(0), y = var(1);
    return Identity("xy-yx", {"x", "y"}, x * y - y * x);
}
inline Identity anticommutativity()
{
    auto x = var(0), y = var(1);
    return Identity("xy+yx", {"x", "y"}, x * y + y * x);
}
inline Identity flexible()
{
    auto x = var(0), y = var(1), z = var(2);
    return Identity("(x,y,z)+(z,y,x)", {"x", "y", "z"}, assoc(x, y, z) + assoc(z, y, x));
}
inline Identity semi_alternative()
{
    auto x = var(0), y = var(1), z = var(2);
    return Identity("(x,y,z)-(y,z,x)", {"x", "y", "z"}, assoc(x, y, z) - assoc(y, z, x));
}
inline Identity assosymmetric_1()
{
    auto x = var(0), y = var(1), z = var(2);
    return Identity("(x,y,z)-(y,x,z)", {"x", "y", "z"}, assoc(x, y, z) - assoc(y, x, z));
}
inline Identity assosymmetric_2()
{
    auto x = var(0), y = var(1), z = var(2);
    return Identity("(x,y,z)-(x,z,y)", {"x", "y", "z"}, assoc(x, y, z) - assoc(x, z, y));
}
inline Identity perm_law()
{
    auto x = var(0), y = var(1), z = var(2);
    return Identity("(xy)z-(xz)y", {"x", "y", "z"}, (x * y) * z - (x * z) * y);
}
// Jacobi identity of the commutator algebra, as an alternating sum of associators.
inline Identity lie_admissible()
{
    auto x = var(0), y = var(1), z = var(2);
    return Identity("sum sgn(s)(s(x),s(y),s(z))", {"x", "y", "z"},
                    assoc(x, y, z) + assoc(y, z, x) + assoc(z, x, y) - assoc(y, x, z) - assoc(x, z, y) - assoc(z, y, x));
}
inline Identity lie_admissible_cyclic()
{
    auto x = var(0), y = var(1), z = var(2);
    return Identity("(x,y,z)+(y,z,x)+(z,x,y)", {"x", "y", "z"}, assoc(x, y, z) + assoc(y, z, x) + assoc(z, x, y));
}
inline Identity jordan_law()
{
    auto x = var(0), y = var(1);
    return Identity("((xx)y)x-(xx)(yx)", {"x", "y"}, ((x * x) * y) * x - (x * x) * (y * x));
}
inline Identity jacobi()
{
    auto x = var(0), y = var(1), z = var(2);
    return Identity("(xy)z+(yz)x+(zx)y", {"x", "y", "z"}, (x * y) * z + (y * z) * x + (z * x) * y);
}
inline Identity malcev_law()
{
    auto x = var(0), y = var(1), z = var(2);
    Expr lhs = (x * y) * (x * z);
    Expr rhs = ((x * y) * z) * x + ((y * z) * x) * x + ((z * x) * x) * y;
    return Identity("(xy)(xz)-((xy)z)x-((yz)x)x-((zx)x)y", {"x", "y", "z"}, lhs - rhs);
}
inline Identity pchelintsev()
{
    auto x = var(0), y = var(1);
    return Identity("(xy,x,y)+(y,xy,x)+(x,y,xy)", {"x", "y"},
                    assoc(x * y, x, y) + assoc(y, x * y, x) + assoc(x, y, x * y));
}
// (ab)c + (cb)a = (ac)b + (ca)b
inline Identity binary_perm_shortcut()
{
    auto a = var(0), b = var(1), c = var(2);
    return Identity("(ab)c+(cb)a-(ac)b-(ca)b", {"a", "b", "c"}, (a * b) * c + (c * b) * a - (a * c) * b - (c * a) * b);
}
inline Identity antiassociativity()
{
    auto x = var(0), y = var(1), z = var(2);
    return Identity("(xy)z+x(yz)", {"x", "y", "z"}, (x * y) * z + x * (y * z));
}
// x(yz) = ((xy)z + y(xz))/2
inline Identity half_leibniz()
{
    auto x = var(0), y = var(1), z = var(2);
    GQ h = GQ::frac(1, 2);
    return Identity("x(yz)-((xy)z+y(xz))/2", {"x", "y", "z"}, x * (y * z) - h * ((x * y) * z) - h * (y * (x * z)));
}
inline Identity kleinfeld_1()
{
    auto x = var(0), y = var(1);
    return Identity("(x,x,y)-(x,y,x)", {"x", "y"}, assoc(x, x, y) - assoc(x, y, x));
}
inline Identity kleinfeld_2()
{
    auto x = var(0), y = var(1);
    return Identity("(x,y,x)-(y,x,x)", {"x", "y"}, assoc(x, y, x) - assoc(y, x, x));
}
inline Identity kleinfeld_widmer_1()
{
    auto x = var(0);
    Expr a = assoc(x, x, x);
    return Identity("2(x,x,x)^2", {"x"}, 2 * (a * a));
}
inline Identity kleinfeld_widmer_2()
{
    auto x = var(0), y = var(1);
    return Identity("((y,x,x),x,x)", {"x", "y"}, assoc(assoc(y, x, x), x, x));
}
// J(a,b,c) - 3(a,b,c) + 3(a,c,b), J taken with the commutator ab - ba.
inline Identity semialt_id1()
{
    auto a = var(0), b = var(1), c = var(2);
    Expr J = comm(comm(a, b), c) + comm(comm(b, c), a) + comm(comm(c, a), b);
    return Identity("J(a,b,c)-3(a,b,c)+3(a,c,b)", {"a", "b", "c"}, J - 3 * assoc(a, b, c) + 3 * assoc(a, c, b));
}
// 3([a,b],c,d) = -[a,(b,c,d)] + [b,(a,c,d)] + [c,(a,b,d)] - [c,(b,a,d)] - [d,(a,b,c)] + [d,(b,a,c)]
inline Identity semialt_id2()
{
    auto a = var(0), b = var(1), c = var(2), d = var(3);
    Expr lhs = 3 * assoc(comm(a, b), c, d);
    Expr rhs = -comm(a, assoc(b, c, d)) + comm(b, assoc(a, c, d)) + comm(c, assoc(a, b, d)) - comm(c, assoc(b, a, d)) -
               comm(d, assoc(a, b, c)) + comm(d, assoc(b, a, c));
    return Identity("3([a,b],c,d)-rhs", {"a", "b", "c", "d"}, lhs - rhs);
}
}  // namespace identities

class Registry {
public:
    static const Registry& instance()
    {
        static const Registry r;
        return r;
    }
    const VarietySpec& get(const std::string& name) const
    {
        auto it = specs_.find(name);
        if (it == specs_.end()) throw UnknownVariety(name);
        return it->second;
    }
    bool has(const std::string& name) const { return specs_.count(name) > 0; }
    std::vector<std::string> names() const
    {
        std::vector<std::string> v;
        for (auto& [k, s] : specs_) v.push_back(k);
        return v;
    }

private:
    std::map<std::string, VarietySpec> specs_;

    void add(std::string name, std::vector<Identity> ids, std::string desc)
    {
        VarietySpec s;
        s.name = name;
        s.identities = std::move(ids);
        s.description = std::move(desc);
        specs_[name] = std::move(s);
    }
    void add_binary(std::string name, std::string under)
    {
        VarietySpec s;
        s.name = name;
        s.binary = true;
        s.underlying = under;
        s.description = "every 2-generated subalgebra is " + under;
        specs_[name] = std::move(s);
    }

    Registry()
    {
        using namespace identities;
        add("associative", {associativity()}, "(x,y,z) = 0");
        add("commutative", {commutativity()}, "xy = yx");
        add("anticommutative", {anticommutativity()}, "xy = -yx");
        add("right-alternative", {right_alternative()}, "(x,y,z) = -(x,z,y)");
        add("left-alternative", {left_alternative()}, "(x,y,z) = -(y,x,z)");
        add("alternative", {left_alternative(), right_alternative()}, "left and right alternative");
        add("flexible", {flexible()}, "(x,y,z) = -(z,y,x)");
        add("semi-alternative", {semi_alternative()}, "(x,y,z) = (y,z,x)");
        add("assosymmetric", {assosymmetric_1(), assosymmetric_2()}, "(x,y,z) = (y,x,z) = (x,z,y)");
        add("perm", {associativity(), perm_law()}, "associative with (xy)z = (xz)y");
        add("lie-admissible", {lie_admissible()}, "the commutator algebra is Lie");
        add("lie-admissible-cyclic", {lie_admissible_cyclic()}, "(x,y,z)+(y,z,x)+(z,x,y) = 0");
        add("minus-one-one", {right_alternative(), lie_admissible()}, "right alternative and Lie-admissible");
        add("jordan", {commutativity(), jordan_law()}, "commutative with ((xx)y)x = (xx)(yx)");
        add("lie", {anticommutativity(), jacobi()}, "anticommutative with the Jacobi identity");
        add("malcev", {anticommutativity(), malcev_law()}, "anticommutative with the Malcev identity");
        add("antiassociative", {antiassociativity()}, "(xy)z = -x(yz)");
        add("half-leibniz", {half_leibniz()}, "x(yz) = ((xy)z + y(xz))/2");
        add("kleinfeld-semialt", {kleinfeld_1(), kleinfeld_2()}, "(x,x,y) = (x,y,x) = (y,x,x)");
        add("kleinfeld-widmer", {kleinfeld_widmer_1(), kleinfeld_widmer_2()}, "2(x,x,x)^2 = 0 and ((y,x,x),x,x) = 0");
        add("pchelintsev", {pchelintsev()}, "(xy,x,y)+(y,xy,x)+(x,y,xy) = 0");
        add("semialt-id1", {semialt_id1()}, "J(a,b,c) = 3(a,b,c) - 3(a,c,b)");
        add("semialt-id2", {semialt_id2()}, "3([a,b],c,d) expansion");
        add_binary("binary-perm", "perm");
        add_binary("binary-minus-one-one", "minus-one-one");
        add_binary("binary-lie", "lie");
    }
};

struct VarietyReport {
    std::string variety;
    bool member = true;
    std::optional<Witness> witness;
    // binary varieties: the 2-generated check and the registered shortcut
    std::optional<bool> shortcut;
    std::string shortcut_note;
    int closure_dim = -1;
    bool sampled = false;  // decided by the random fallback
};

inline CheckResult check_all(const Algebra& A, const std::vector<Identity>& ids)
{
    for (auto& id : ids) {
        auto r = check_identity(A, id);
        if (!r.holds) return r;
    }
    return {};
}

struct BinaryOptions {
    bool symbolic = true;
    int trials = 5;
    unsigned seed = 0;
};

inline VarietyReport check_binary_variety(const Algebra& A, const std::string& name, const BinaryOptions& opt = {});

inline VarietyReport check_variety(const Algebra& A, const std::string& name)
{
    const auto& spec = Registry::instance().get(name);
    if (spec.binary) return check_binary_variety(A, name);
    VarietyReport rep;
    rep.variety = name;
    auto r = check_all(A, spec.identities);
    rep.member = r.holds;
    rep.witness = r.witness;
    return rep;
}

namespace detail {

// Registered equivalent characterizations of binary varieties.
inline std::optional<std::pair<bool, std::string>> binary_shortcut(const Algebra& A, const std::string& name)
{
    using namespace identities;
    if (name == "binary-perm") {
        auto r = check_all(A, {left_alternative(), right_alternative(), binary_perm_shortcut()});
        return std::make_pair(r.holds, r.holds ? std::string("alternative and (ab)c+(cb)a=(ac)b+(ca)b")
                                               : r.witness->detail());
    }
    if (name == "binary-minus-one-one") {
        auto r = check_all(A, {right_alternative(), linearize(pchelintsev())});
        return std::make_pair(r.holds, r.holds ? std::string("right alternative and Pchelintsev identity")
                                               : r.witness->detail());
    }
    return std::nullopt;
}

// Subalgebra generated by two elements, as an algebra of its own.
inline Algebra two_generated(const Algebra& A, const Vector& x, const Vector& y, int* dim_out)
{
    Subspace S = subalgebra_closure(A, {x, y});
    if (dim_out) *dim_out = S.dim();
    if (S.dim() == A.dim()) return A;
    return restrict_to(A, S);
}

}  // namespace detail

inline VarietyReport check_binary_variety(const Algebra& A, const std::string& name, const BinaryOptions& opt)
{
    const auto& spec = Registry::instance().get(name);
    if (!spec.binary) throw UnknownVariety(name + " (not a binary variety)");
    const auto& under = Registry::instance().get(spec.underlying);
    VarietyReport rep;
    rep.variety = name;
    int n = A.dim();

    if (opt.symbolic) {
        Vector x = generic_element(n, "_x"), y = generic_element(n, "_y");
        int d = 0;
        Algebra sub = detail::two_generated(A, x, y, &d);
        rep.closure_dim = d;
        auto r = check_all(sub, under.identities);
        rep.member = r.holds;
        if (!r.holds) {
            rep.witness = r.witness;
            if (d < n) rep.witness->identity += " (in the generic 2-generated subalgebra)";
        }
    } else {
        // random integer generators, majority of trials
        std::mt19937 rng(opt.seed);
        std::uniform_int_distribution<int> dist(-5, 5);
        int ok = 0;
        std::optional<Witness> wit;
        for (int k = 0; k < opt.trials; ++k) {
            Vector x(n), y(n);
            for (int i = 0; i < n; ++i) {
                x[i] = Scalar(long(dist(rng)));
                y[i] = Scalar(long(dist(rng)));
            }
            int d = 0;
            Algebra sub = detail::two_generated(A, x, y, &d);
            rep.closure_dim = std::max(rep.closure_dim, d);
            auto r = check_all(sub, under.identities);
            if (r.holds) ++ok;
            else if (!wit) wit = r.witness;
        }
        rep.sampled = true;
        rep.member = 2 * ok > opt.trials;
        if (!rep.member) rep.witness = wit;
    }
    if (auto s = detail::binary_shortcut(A, name)) {
        rep.shortcut = s->first;
        rep.shortcut_note = s->second;
    }
    return rep;
}

}  // namespace nassoc
