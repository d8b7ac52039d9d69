#pragma once

#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "algebra.hpp"

namespace nassoc {

// Coefficient grammar (LL(1)):
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary | basis)*
//   unary  := ('-' | '+') unary | power
//   power  := atom ('^' INT)?
//   atom   := INT | 'i' | IDENT | basis | '(' expr ')'
// `basis` tokens e1, e2, ... are only accepted in vector mode; there a basis
// token may follow a coefficient without '*', as in "(1+alpha) e3".
class ExprParser {
public:
    struct Options {
        const std::set<std::string>* allowed = nullptr;  // null: any identifier
        bool allow_t = true;
        bool vector_mode = false;
        int dim = 0;  // vector mode: basis size
        std::size_t offset = 0;  // added to reported positions
    };

    ExprParser(std::string_view s, Options opt) : s_(s), opt_(opt) {}

    Scalar parse_scalar()
    {
        Value v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        if (v.is_vec) fail("expected a scalar, found a basis vector", 0);
        return v.s;
    }
    Vector parse_vector()
    {
        Value v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        if (!v.is_vec) {
            if (v.s.is_zero()) return Vector(opt_.dim);
            fail("expected a combination of basis vectors", 0);
        }
        return v.v;
    }

private:
    struct Value {
        bool is_vec = false;
        Scalar s;
        Vector v;
    };

    std::string_view s_;
    Options opt_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg, std::optional<std::size_t> at = std::nullopt) const
    {
        throw SyntaxError(msg, opt_.offset + (at ? *at : pos_));
    }
    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c)
    {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool at_basis()
    {
        skip_ws();
        if (!opt_.vector_mode || pos_ + 1 >= s_.size() || s_[pos_] != 'e') return false;
        std::size_t k = pos_ + 1;
        if (!std::isdigit(static_cast<unsigned char>(s_[k]))) return false;
        while (k < s_.size() && std::isdigit(static_cast<unsigned char>(s_[k]))) ++k;
        return k == s_.size() || !(std::isalnum(static_cast<unsigned char>(s_[k])) || s_[k] == '_');
    }

    Value add(const Value& a, const Value& b, bool neg)
    {
        Value r;
        if (!a.is_vec && !b.is_vec) {
            r.s = neg ? a.s - b.s : a.s + b.s;
            return r;
        }
        auto lift = [&](const Value& x) {
            if (x.is_vec) return x.v;
            if (!x.s.is_zero()) fail("cannot add a scalar and a basis vector");
            return Vector(opt_.dim);
        };
        r.is_vec = true;
        r.v = neg ? lift(a) - lift(b) : lift(a) + lift(b);
        return r;
    }
    Value mul(const Value& a, const Value& b, std::size_t at)
    {
        if (a.is_vec && b.is_vec) fail("product of two basis vectors", at);
        Value r;
        if (a.is_vec || b.is_vec) {
            r.is_vec = true;
            r.v = a.is_vec ? b.s * a.v : a.s * b.v;
        } else {
            r.s = a.s * b.s;
        }
        return r;
    }

    Value expr()
    {
        Value v = term();
        while (true) {
            if (peek('+')) {
                ++pos_;
                v = add(v, term(), false);
            } else if (peek('-')) {
                ++pos_;
                v = add(v, term(), true);
            } else {
                return v;
            }
        }
    }
    Value term()
    {
        Value v = unary();
        while (true) {
            std::size_t at = pos_;
            if (peek('*')) {
                ++pos_;
                v = mul(v, unary(), at);
            } else if (peek('/')) {
                ++pos_;
                std::size_t dpos = pos_;
                Value d = unary();
                if (d.is_vec) fail("division by a basis vector", dpos);
                if (d.s.is_zero()) throw DivisionByZero();
                if (v.is_vec) v.v = d.s.inv() * v.v;
                else v.s = v.s / d.s;
            } else if (at_basis()) {
                v = mul(v, unary(), pos_);
            } else {
                return v;
            }
        }
    }
    Value unary()
    {
        if (peek('-')) {
            ++pos_;
            Value v = unary();
            if (v.is_vec) v.v = Scalar(-1) * v.v;
            else v.s = -v.s;
            return v;
        }
        if (peek('+')) {
            ++pos_;
            return unary();
        }
        return power();
    }
    Value power()
    {
        std::size_t at = pos_;
        Value b = atom();
        if (peek('^')) {
            ++pos_;
            skip_ws();
            std::size_t st = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (st == pos_) fail("expected a nonnegative integer exponent");
            if (pos_ - st > 4) fail("exponent too large", st);
            int k = std::stoi(std::string(s_.substr(st, pos_ - st)));
            if (b.is_vec) fail("power of a basis vector", at);
            b.s = b.s.pow(k);
        }
        return b;
    }
    Value atom()
    {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        Value v;
        if (c == '(') {
            ++pos_;
            v = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t st = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            mpz_class z(std::string(s_.substr(st, pos_ - st)));
            v.s = Scalar(mpq_class(z));
            return v;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            if (at_basis()) {
                std::size_t st = ++pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
                int k = std::stoi(std::string(s_.substr(st, pos_ - st)));
                if (k < 1 || k > opt_.dim)
                    throw IndexOutOfRange("basis vector e" + std::to_string(k) + " out of range for dimension " +
                                          std::to_string(opt_.dim));
                v.is_vec = true;
                v.v = unit_vector(opt_.dim, k - 1);
                return v;
            }
            std::size_t st = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name(s_.substr(st, pos_ - st));
            if (name == "i") {
                v.s = Scalar::I();
                return v;
            }
            if (name == "t") {
                if (!opt_.allow_t) throw UnknownParameter(name);
                v.s = Scalar::t();
                return v;
            }
            if (opt_.allowed && !opt_.allowed->count(name)) throw UnknownParameter(name);
            v.s = Scalar::param(name);
            return v;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

inline Scalar parse_scalar(std::string_view text, const std::set<std::string>* allowed = nullptr, bool allow_t = true)
{
    ExprParser::Options o;
    o.allowed = allowed;
    o.allow_t = allow_t;
    return ExprParser(text, o).parse_scalar();
}

inline Vector parse_vector(std::string_view text, int dim, const std::set<std::string>* allowed = nullptr,
                           bool allow_t = true, std::size_t offset = 0)
{
    ExprParser::Options o;
    o.allowed = allowed;
    o.allow_t = allow_t;
    o.vector_mode = true;
    o.dim = dim;
    o.offset = offset;
    return ExprParser(text, o).parse_vector();
}

// ---------------------------------------------------------------------------
// Line-oriented files: "key: value" headers and body lines. Errors carry the
// line number and column.

struct FileError : Error {
    std::string path;
    int line;
    FileError(const std::string& p, int l, const std::string& msg)
        : Error(p + ":" + std::to_string(l) + ": " + msg), path(p), line(l) {}
};

namespace detail {
inline std::string trim(std::string_view s)
{
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}
inline std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}
struct Line {
    int no;
    std::string text;
    std::size_t indent;  // column offset of text within the raw line
};
inline std::vector<Line> content_lines(const std::string& text)
{
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        auto h = raw.find('#');
        std::string body = h == std::string::npos ? raw : raw.substr(0, h);
        std::string t = trim(body);
        if (t.empty()) continue;
        std::size_t ind = body.find_first_not_of(" \t");
        out.push_back({no, t, ind});
    }
    return out;
}
// "key: value" when the prefix is a bare word.
inline std::optional<std::pair<std::string, std::string>> header(const std::string& line)
{
    auto c = line.find(':');
    if (c == std::string::npos) return std::nullopt;
    std::string k = trim(line.substr(0, c));
    if (k.empty()) return std::nullopt;
    for (char ch : k)
        if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '-' || ch == '_')) return std::nullopt;
    return std::make_pair(k, trim(line.substr(c + 1)));
}
inline std::string read_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f) throw FileError(path, 0, "cannot open file");
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}
// Wraps parser exceptions with file position.
template <class F>
auto at_line(const std::string& path, const Line& l, F f) -> decltype(f())
{
    try {
        return f();
    } catch (const SyntaxError& e) {
        throw FileError(path, l.no, "column " + std::to_string(l.indent + e.pos + 1) + ": " + e.what());
    } catch (const FileError&) {
        throw;
    } catch (const Error& e) {
        throw FileError(path, l.no, e.what());
    }
}
}  // namespace detail

// ---------------------------------------------------------------------------
// .alg files

struct AlgebraFile {
    Algebra algebra;
    std::string id;
    std::string source;
    std::vector<std::string> tags;
};

inline const char* symmetry_name(Symmetry s)
{
    switch (s) {
    case Symmetry::commutative: return "commutative";
    case Symmetry::anticommutative: return "anticommutative";
    default: return "none";
    }
}

// Constraint "poly != 0".
inline Poly parse_constraint(const std::string& text, const std::set<std::string>& names)
{
    auto p = text.find("!=");
    if (p == std::string::npos) throw SyntaxError("expected 'expr != 0'", 0);
    Scalar lhs = parse_scalar(text.substr(0, p), &names, false);
    Scalar rhs = parse_scalar(text.substr(p + 2), &names, false);
    Scalar d = lhs - rhs;
    if (!d.is_poly()) d = Scalar(d.num());
    return d.num();
}

inline AlgebraFile parse_algebra(const std::string& text, const std::string& path = "<input>")
{
    using namespace detail;
    AlgebraFile out;
    int dim = 0;
    Symmetry sym = Symmetry::none;
    std::set<std::string> names;
    std::vector<ParamSpec> params;
    struct Prod {
        Line line;
        int i, j;
        std::string rhs;
        std::size_t rhs_off;
    };
    std::vector<Prod> prods;
    std::vector<std::pair<Line, std::string>> constraints;

    for (auto& l : content_lines(text)) {
        if (auto h = header(l.text)) {
            auto& [k, v] = *h;
            if (k == "id") out.id = v;
            else if (k == "source") out.source = v;
            else if (k == "dim") {
                try {
                    dim = std::stoi(v);
                } catch (...) {
                    throw FileError(path, l.no, "bad dimension '" + v + "'");
                }
                if (dim <= 0 || dim > 64) throw FileError(path, l.no, "bad dimension '" + v + "'");
            } else if (k == "symmetry") {
                if (v == "none") sym = Symmetry::none;
                else if (v == "commutative") sym = Symmetry::commutative;
                else if (v == "anticommutative") sym = Symmetry::anticommutative;
                else throw FileError(path, l.no, "unknown symmetry '" + v + "'");
            } else if (k == "param") {
                for (auto& nm : split(v, ',')) {
                    if (nm.empty() || nm == "t" || nm == "i" || !(std::isalpha(static_cast<unsigned char>(nm[0])) || nm[0] == '_'))
                        throw FileError(path, l.no, "bad parameter name '" + nm + "'");
                    names.insert(nm);
                    params.push_back({nm, {}});
                }
            } else if (k == "constraint") {
                constraints.push_back({l, v});
            } else if (k == "tags") {
                for (auto& tg : split(v, ','))
                    if (!tg.empty()) out.tags.push_back(tg);
            } else {
                throw FileError(path, l.no, "unknown header '" + k + "'");
            }
            continue;
        }
        // product line: e<i> e<j> = rhs
        auto eq = l.text.find('=');
        if (eq == std::string::npos) throw FileError(path, l.no, "expected 'ei ej = ...'");
        std::string lhs = trim(l.text.substr(0, eq));
        int i = 0, j = 0;
        char extra = 0;
        if (std::sscanf(lhs.c_str(), "e%d e%d%c", &i, &j, &extra) != 2 &&
            std::sscanf(lhs.c_str(), "e%de%d%c", &i, &j, &extra) != 2)
            throw FileError(path, l.no, "column " + std::to_string(l.indent + 1) + ": expected 'ei ej' before '='");
        std::size_t off = eq + 1;
        prods.push_back({l, i, j, l.text.substr(off), l.indent + off});
    }
    if (dim == 0) throw FileError(path, 0, "missing 'dim:' header");
    for (auto& [l, v] : constraints) {
        auto parts = split(v, ',');
        for (auto& c : parts) {
            Poly p = at_line(path, l, [&] { return parse_constraint(c, names); });
            auto vars = p.variables();
            if (p.is_const()) {
                if (p.is_zero()) throw FileError(path, l.no, "constraint '" + c + "' can never hold");
                continue;
            }
            // attach to the highest-priority parameter it mentions
            std::string owner = var_name(vars.back());
            for (auto& ps : params)
                if (ps.name == owner) ps.nonzero.push_back(p);
        }
    }

    Algebra A(dim);
    A.params = params;
    A.symmetry = sym;
    A.label = out.id;
    std::vector<std::vector<bool>> given(dim, std::vector<bool>(dim, false));
    std::vector<std::vector<int>> line_of(dim, std::vector<int>(dim, 0));
    for (auto& p : prods) {
        if (p.i < 1 || p.j < 1 || p.i > dim || p.j > dim)
            throw FileError(path, p.line.no, "index out of range: e" + std::to_string(p.i) + " e" + std::to_string(p.j) +
                                                 " in dimension " + std::to_string(dim));
        if (given[p.i - 1][p.j - 1]) throw FileError(path, p.line.no, "duplicate product line");
        Vector v = at_line(path, p.line, [&] { return parse_vector(p.rhs, dim, &names, false, p.rhs_off); });
        A.set_product(p.i - 1, p.j - 1, v);
        given[p.i - 1][p.j - 1] = true;
        line_of[p.i - 1][p.j - 1] = p.line.no;
    }
    if (sym != Symmetry::none) {
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                Vector v = A.product(i, j);
                if (sym == Symmetry::anticommutative && i == j && !is_zero(v))
                    throw FileError(path, line_of[i][i], "symmetry conflict: anticommutative algebra with nonzero e" +
                                                             std::to_string(i + 1) + "e" + std::to_string(i + 1));
                if (!given[i][j]) continue;
                Vector want = sym == Symmetry::commutative ? v : Scalar(-1) * v;
                if (given[j][i]) {
                    if (A.product(j, i) != want)
                        throw FileError(path, std::max(line_of[i][j], line_of[j][i]),
                                        "symmetry conflict: e" + std::to_string(j + 1) + "e" + std::to_string(i + 1) +
                                            " contradicts the symmetry tag");
                } else {
                    A.set_product(j, i, want);
                    given[j][i] = true;
                }
            }
    }
    out.algebra = std::move(A);
    return out;
}

inline AlgebraFile read_algebra_file(const std::string& path) { return parse_algebra(detail::read_file(path), path); }

inline std::string serialize_algebra(const Algebra& A, const std::string& id = "", const std::string& source = "",
                                     const std::vector<std::string>& tags = {})
{
    std::ostringstream o;
    std::string nm = id.empty() ? A.label : id;
    if (!nm.empty()) o << "id: " << nm << "\n";
    if (!source.empty()) o << "source: " << source << "\n";
    o << "dim: " << A.dim() << "\n";
    // only claim a symmetry that the constants actually have
    Symmetry sym = A.symmetry;
    if (sym == Symmetry::commutative && !is_commutative(A)) sym = Symmetry::none;
    if (sym == Symmetry::anticommutative && !is_anticommutative(A)) sym = Symmetry::none;
    o << "symmetry: " << symmetry_name(sym) << "\n";
    if (!A.params.empty()) {
        o << "param: ";
        for (std::size_t k = 0; k < A.params.size(); ++k) o << (k ? ", " : "") << A.params[k].name;
        o << "\n";
        for (auto& p : A.params)
            for (auto& c : p.nonzero) o << "constraint: " << c.str() << " != 0\n";
    }
    if (!tags.empty()) {
        o << "tags: ";
        for (std::size_t k = 0; k < tags.size(); ++k) o << (k ? ", " : "") << tags[k];
        o << "\n";
    }
    int n = A.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (sym == Symmetry::commutative && j < i) continue;
            if (sym == Symmetry::anticommutative && j <= i) continue;
            Vector v = A.product(i, j);
            if (is_zero(v)) continue;
            o << "e" << i + 1 << " e" << j + 1 << " = " << vector_str(v) << "\n";
        }
    return o.str();
}

// ---------------------------------------------------------------------------
// .sys files: polynomial equations "p = q", one per line.

struct PolySystem {
    std::vector<std::string> vars;  // declared unknowns, in order
    std::vector<Poly> eqs;          // each eq means eqs[k] = 0
};

inline std::string emit_poly_system(const PolySystem& s)
{
    std::ostringstream o;
    o << "# polynomial system: " << s.eqs.size() << " equations in " << s.vars.size() << " unknowns\n";
    if (!s.vars.empty()) {
        o << "vars: ";
        for (std::size_t k = 0; k < s.vars.size(); ++k) o << (k ? ", " : "") << s.vars[k];
        o << "\n";
    }
    for (auto& p : s.eqs) o << p.str() << " = 0\n";
    return o.str();
}

inline PolySystem parse_poly_system(const std::string& text, const std::string& path = "<input>")
{
    using namespace detail;
    PolySystem s;
    for (auto& l : content_lines(text)) {
        if (auto h = header(l.text)) {
            if (h->first == "vars") {
                for (auto& v : split(h->second, ','))
                    if (!v.empty()) s.vars.push_back(v);
                continue;
            }
            throw FileError(path, l.no, "unknown header '" + h->first + "'");
        }
        auto eq = l.text.find('=');
        std::string lhs = eq == std::string::npos ? l.text : l.text.substr(0, eq);
        std::string rhs = eq == std::string::npos ? "0" : l.text.substr(eq + 1);
        Scalar d = at_line(path, l, [&] {
            Scalar a = parse_scalar(lhs);
            ExprParser::Options o;
            o.offset = eq + 1;
            return a - ExprParser(rhs, o).parse_scalar();
        });
        if (!d.is_poly()) throw FileError(path, l.no, "equation is not polynomial");
        if (!s.vars.empty())
            for (int v : d.variables())
                if (std::find(s.vars.begin(), s.vars.end(), var_name(v)) == s.vars.end())
                    throw FileError(path, l.no, "undeclared unknown '" + var_name(v) + "'");
        if (!d.is_zero()) s.eqs.push_back(d.num());
    }
    if (s.vars.empty()) {
        std::vector<int> vs;
        for (auto& p : s.eqs)
            for (int v : p.variables())
                if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
        std::sort(vs.begin(), vs.end(), var_before);
        for (int v : vs) s.vars.push_back(var_name(v));
    }
    return s;
}

// ---------------------------------------------------------------------------
// .coc files: mode, dim, then "k i j = coef" adds coef * Delta_ij to B_k.

struct CocycleFile {
    int dim = 0;
    bool skew = true;
    std::vector<std::string> params;
    struct Entry {
        int comp, i, j;
        Scalar coef;
    };
    std::vector<Entry> entries;
};

inline CocycleFile parse_cocycle(const std::string& text, const std::string& path = "<input>")
{
    using namespace detail;
    CocycleFile c;
    std::set<std::string> names;
    bool mode_set = false;
    for (auto& l : content_lines(text)) {
        if (auto h = header(l.text)) {
            auto& [k, v] = *h;
            if (k == "dim") c.dim = std::atoi(v.c_str());
            else if (k == "mode") {
                if (v == "skew") c.skew = true;
                else if (v == "symmetric") c.skew = false;
                else throw FileError(path, l.no, "mode must be skew or symmetric");
                mode_set = true;
            } else if (k == "param") {
                for (auto& nm : split(v, ',')) {
                    names.insert(nm);
                    c.params.push_back(nm);
                }
            } else {
                throw FileError(path, l.no, "unknown header '" + k + "'");
            }
            continue;
        }
        auto eq = l.text.find('=');
        int k = 0, i = 0, j = 0;
        if (eq == std::string::npos || std::sscanf(l.text.substr(0, eq).c_str(), "%d %d %d", &k, &i, &j) != 3)
            throw FileError(path, l.no, "expected 'k i j = coef'");
        if (c.dim <= 0) throw FileError(path, l.no, "'dim:' must precede entries");
        if (k < 1 || i < 1 || j < 1 || k > c.dim || i > c.dim || j > c.dim) throw FileError(path, l.no, "index out of range");
        ExprParser::Options o;
        o.allowed = &names;
        o.allow_t = false;
        o.offset = l.indent + eq + 1;
        Scalar v = at_line(path, l, [&] { return ExprParser(l.text.substr(eq + 1), o).parse_scalar(); });
        c.entries.push_back({k, i, j, v});
    }
    if (!mode_set) throw FileError(path, 0, "missing 'mode:' header");
    if (c.dim <= 0) throw FileError(path, 0, "missing 'dim:' header");
    return c;
}

inline std::string serialize_cocycle(const CocycleFile& c)
{
    std::ostringstream o;
    o << "dim: " << c.dim << "\nmode: " << (c.skew ? "skew" : "symmetric") << "\n";
    if (!c.params.empty()) {
        o << "param: ";
        for (std::size_t k = 0; k < c.params.size(); ++k) o << (k ? ", " : "") << c.params[k];
        o << "\n";
    }
    for (auto& e : c.entries) o << e.comp << " " << e.i << " " << e.j << " = " << e.coef.str() << "\n";
    return o.str();
}

// ---------------------------------------------------------------------------
// .deg files: a parametrized basis E_k = sum_j M(k,j) e_j over Q(i)(params)(t).

struct DegenerationFile {
    std::string source, target;  // "catalog:ID" or a path
    std::vector<std::pair<std::string, Scalar>> index;          // source parameter := value
    std::vector<std::pair<std::string, Scalar>> target_params;  // target parameter := value
    std::vector<std::string> params;                            // free parameters of the row
    std::vector<Vector> rows;
    std::optional<SMatrix> relabel;  // applied to the target before comparison
    std::string note;
};

inline DegenerationFile parse_degeneration(const std::string& text, const std::string& path = "<input>")
{
    using namespace detail;
    DegenerationFile d;
    std::set<std::string> names;
    int dim = 0;
    std::vector<std::pair<Line, std::string>> rows, relabel_rows;
    for (auto& l : content_lines(text)) {
        auto h = header(l.text);
        if (!h) {
            // "E<k> = vector"
            auto eq = l.text.find('=');
            int k = 0;
            if (eq == std::string::npos || std::sscanf(l.text.c_str(), "E%d", &k) != 1)
                throw FileError(path, l.no, "expected 'Ek = ...' or 'key: value'");
            if (k != int(rows.size()) + 1) throw FileError(path, l.no, "basis rows must be E1, E2, ... in order");
            rows.push_back({l, l.text.substr(eq + 1)});
            continue;
        }
        auto& [k, v] = *h;
        if (k == "source") d.source = v;
        else if (k == "target") d.target = v;
        else if (k == "dim") dim = std::atoi(v.c_str());
        else if (k == "note") d.note = v;
        else if (k == "param") {
            for (auto& nm : split(v, ',')) {
                names.insert(nm);
                d.params.push_back(nm);
            }
        } else if (k == "index" || k == "target-param") {
            auto eq = v.find('=');
            if (eq == std::string::npos) throw FileError(path, l.no, "expected 'name = value'");
            std::string nm = trim(v.substr(0, eq));
            Scalar val = at_line(path, l, [&] { return parse_scalar(v.substr(eq + 1), &names, true); });
            (k == "index" ? d.index : d.target_params).push_back({nm, val});
        } else if (k == "relabel") {
            relabel_rows.push_back({l, v});
        } else {
            throw FileError(path, l.no, "unknown header '" + k + "'");
        }
    }
    if (rows.empty()) throw FileError(path, 0, "no basis rows");
    if (dim == 0) dim = int(rows.size());
    if (int(rows.size()) != dim) throw FileError(path, 0, "expected " + std::to_string(dim) + " basis rows");
    for (auto& [l, r] : rows)
        d.rows.push_back(at_line(path, l, [&] { return parse_vector(r, dim, &names, true); }));
    if (!relabel_rows.empty()) {
        if (int(relabel_rows.size()) != dim) throw FileError(path, 0, "relabel needs one line per basis vector");
        SMatrix m(dim, dim);
        for (int i = 0; i < dim; ++i) {
            auto& [l, r] = relabel_rows[i];
            Vector v = at_line(path, l, [&] { return parse_vector(r, dim, &names, false); });
            for (int j = 0; j < dim; ++j) m(i, j) = v[j];
        }
        d.relabel = m;
    }
    if (d.source.empty() || d.target.empty()) throw FileError(path, 0, "missing source or target");
    return d;
}

inline std::string serialize_degeneration(const DegenerationFile& d)
{
    std::ostringstream o;
    o << "source: " << d.source << "\ntarget: " << d.target << "\n";
    if (!d.params.empty()) {
        o << "param: ";
        for (std::size_t k = 0; k < d.params.size(); ++k) o << (k ? ", " : "") << d.params[k];
        o << "\n";
    }
    for (auto& [n, v] : d.index) o << "index: " << n << " = " << v.str() << "\n";
    for (auto& [n, v] : d.target_params) o << "target-param: " << n << " = " << v.str() << "\n";
    if (d.relabel)
        for (int i = 0; i < d.relabel->rows(); ++i) o << "relabel: " << vector_str(d.relabel->row(i)) << "\n";
    if (!d.note.empty()) o << "note: " << d.note << "\n";
    for (std::size_t k = 0; k < d.rows.size(); ++k) o << "E" << k + 1 << " = " << vector_str(d.rows[k]) << "\n";
    return o.str();
}

}  // namespace nassoc
