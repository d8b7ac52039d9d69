#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "catalog_data.hpp"
#include "identity.hpp"
#include "parse.hpp"

namespace nassoc {

// "ID" or "ID:name=expr,name=expr"; expressions may use free symbols.
struct AlgebraRef {
    std::string id;
    std::map<std::string, Scalar> params;

    std::string str() const
    {
        std::string s = id;
        char sep = ':';
        for (auto& [k, v] : params) {
            s += sep + k + "=" + v.str();
            sep = ',';
        }
        return s;
    }
};

inline AlgebraRef parse_ref(const std::string& text)
{
    AlgebraRef r;
    auto colon = text.find(':');
    r.id = detail::trim(text.substr(0, colon));
    if (colon == std::string::npos) return r;
    for (auto& part : detail::split(text.substr(colon + 1), ',')) {
        auto eq = part.find('=');
        if (eq == std::string::npos) throw SyntaxError("expected name=value in '" + part + "'", 0);
        r.params[detail::trim(part.substr(0, eq))] = parse_scalar(part.substr(eq + 1), nullptr, false);
    }
    return r;
}

// Rows separated by ';', entries by ','.
inline SMatrix parse_matrix(const std::string& text)
{
    std::vector<std::vector<Scalar>> rows;
    for (auto& row : detail::split(text, ';')) {
        std::vector<Scalar> r;
        for (auto& x : detail::split(row, ',')) r.push_back(parse_scalar(x, nullptr, false));
        rows.push_back(std::move(r));
    }
    return SMatrix::from_rows(rows);
}

// Entries "k i j = coef" separated by ';' (1-based in the text).
inline std::vector<CocycleFile::Entry> parse_cocycle_entries(const std::string& text)
{
    std::vector<CocycleFile::Entry> out;
    for (auto& part : detail::split(text, ';')) {
        if (part.empty()) continue;
        auto eq = part.find('=');
        int k = 0, i = 0, j = 0;
        if (eq == std::string::npos || std::sscanf(part.substr(0, eq).c_str(), "%d %d %d", &k, &i, &j) != 3)
            throw SyntaxError("expected 'k i j = coef' in '" + part + "'", 0);
        out.push_back({k, i, j, parse_scalar(part.substr(eq + 1), nullptr, false)});
    }
    return out;
}

// Structure constant c_{ij}^k as a polynomial variable (1-based indices).
inline std::string coeff_name(int i, int j, int k)
{
    return "c" + std::to_string(i) + std::to_string(j) + std::to_string(k);
}

struct CatalogEntry {
    std::string id;
    int dim = 0;
    Algebra algebra;
    std::string source;
    std::vector<std::string> tags;  // "!name" marks a claimed non-membership
    std::string text;               // the .alg source
};

struct KnownIsomorphism {
    std::string id;
    std::string param;  // the family parameter, mapped to its negative
    SMatrix matrix;     // columns are the images of the basis vectors
};

struct DegenerationRow {
    std::string label;  // "A13->A12"
    DegenerationFile file;
    AlgebraRef source, target;
};

struct FlagCondition {
    int p, q, r;  // A_p A_q in A_r with A_i = span(e_i..e_n); r = n+1 means A_p A_q = 0
};

struct CertificateMember {
    std::string id;
    bool opposite = false;
    std::optional<SMatrix> relabel;  // rows are the new basis vectors
};

struct ClosedSetCertificate {
    std::string id;
    std::string note;
    int dim = 3;
    std::vector<Poly> equations;  // in the variables cIJK
    std::vector<std::string> equation_text;
    std::vector<FlagCondition> flags;
    std::vector<CertificateMember> members;
    std::vector<AlgebraRef> non_members;
};

struct ReplayStep {
    std::string id;
    AlgebraRef base;
    bool skew = true;
    std::vector<CocycleFile::Entry> theta, expected;
    std::optional<SMatrix> phi;
    bool automorphism = true;
    std::optional<AlgebraRef> target;
    std::optional<SMatrix> target_map;
};

struct AutShape {
    AlgebraRef base;
    SMatrix matrix;
};

struct OrbitClaim {
    std::string id;
    int orbit_dim;
};

struct CatalogFilter {
    std::optional<int> dim;
    std::vector<std::string> require;  // claimed tags
    std::vector<std::string> exclude;  // tags that must not be claimed
};

// "dim=3,tag=semi-alternative,!minus-one-one"
inline CatalogFilter parse_filter(const std::string& text)
{
    CatalogFilter f;
    for (auto& part : detail::split(text, ',')) {
        if (part.empty()) continue;
        if (part.rfind("dim=", 0) == 0) f.dim = std::stoi(part.substr(4));
        else if (part.rfind("tag=", 0) == 0) f.require.push_back(part.substr(4));
        else if (part[0] == '!') f.exclude.push_back(part.substr(1));
        else f.require.push_back(part);
    }
    return f;
}

struct SelfCheckFailure {
    std::string id;
    std::string tag;
    std::string at;  // "generic" or the specialization
    std::string detail;
};

class Catalog {
public:
    static const Catalog& instance()
    {
        static const Catalog c;
        return c;
    }

    const std::vector<CatalogEntry>& entries() const { return entries_; }
    bool has(const std::string& id) const { return index_.count(id) > 0; }
    const CatalogEntry& entry(const std::string& id) const
    {
        auto it = index_.find(id);
        if (it == index_.end()) throw UnknownId(id);
        return entries_[it->second];
    }

    Algebra get(const std::string& id, const std::map<std::string, Scalar>& params = {}) const
    {
        const auto& e = entry(id);
        if (params.empty()) return e.algebra;
        Algebra a = specialize(e.algebra, params);
        a.label = AlgebraRef{id, params}.str();
        return a;
    }
    Algebra get(const AlgebraRef& r) const { return get(r.id, r.params); }

    std::vector<std::string> list(const CatalogFilter& f = {}) const
    {
        std::vector<std::string> out;
        for (auto& e : entries_) {
            if (f.dim && e.dim != *f.dim) continue;
            auto claimed = [&](const std::string& t) {
                return std::find(e.tags.begin(), e.tags.end(), t) != e.tags.end();
            };
            bool ok = true;
            for (auto& t : f.require) ok = ok && claimed(t);
            for (auto& t : f.exclude) ok = ok && !claimed(t);
            if (ok) out.push_back(e.id);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    // Pairs asserted non-isomorphic. Families enter at alpha = 2; the listed
    // exceptions (a family against itself at -alpha) are not pairs.
    // `stated` is false for the semi-alternative list, which carries no
    // explicit statement and is treated as pairwise distinct.
    struct DistinctPair {
        AlgebraRef a, b;
        bool stated = true;
    };
    std::vector<DistinctPair> claimed_pairs_distinct() const
    {
        std::vector<DistinctPair> out;
        auto group = [&](const std::string& prefix, int lo, int hi, bool stated) {
            std::vector<AlgebraRef> refs;
            for (int k = lo; k <= hi; ++k) {
                std::string id = prefix + (k < 10 ? "0" : "") + std::to_string(k);
                AlgebraRef r{id, {}};
                if (entry(id).algebra.params.size()) r.params[entry(id).algebra.params[0].name] = Scalar(2);
                refs.push_back(r);
            }
            for (std::size_t i = 0; i < refs.size(); ++i)
                for (std::size_t j = i + 1; j < refs.size(); ++j) out.push_back({refs[i], refs[j], stated});
        };
        group("R", 0, 16, true);
        group("A", 12, 24, true);
        group("BB", 1, 8, true);
        group("S", 1, 13, false);
        return out;
    }

    const std::vector<KnownIsomorphism>& known_isomorphisms() const { return isos_; }
    const std::vector<DegenerationRow>& degenerations() const { return rows_; }
    const DegenerationRow& degeneration(const std::string& label) const
    {
        for (auto& r : rows_)
            if (r.label == label) return r;
        throw UnknownId("degeneration " + label);
    }
    const std::vector<ClosedSetCertificate>& certificates() const { return certs_; }
    const ClosedSetCertificate& certificate(const std::string& id) const
    {
        for (auto& c : certs_)
            if (c.id == id) return c;
        throw UnknownId("certificate " + id);
    }
    const std::vector<ReplayStep>& replay_steps() const { return steps_; }
    const std::vector<AutShape>& aut_shapes() const { return shapes_; }
    const std::vector<OrbitClaim>& orbit_claims() const { return orbits_; }

    // Re-verifies every claimed tag; families are checked generically and at
    // alpha in {2, -2, 1, -1} where the constraints allow.
    std::vector<SelfCheckFailure> self_check(const std::vector<std::string>& ids = {}) const
    {
        std::vector<SelfCheckFailure> out;
        for (auto& e : entries_) {
            if (!ids.empty() && std::find(ids.begin(), ids.end(), e.id) == ids.end()) continue;
            auto r = check_entry(e);
            out.insert(out.end(), r.begin(), r.end());
        }
        return out;
    }

    static std::vector<SelfCheckFailure> check_entry(const CatalogEntry& e)
    {
        std::vector<SelfCheckFailure> out;
        std::vector<std::pair<std::string, Algebra>> cases{{"generic", e.algebra}};
        for (auto& p : e.algebra.params)
            for (long v : {2L, -2L, 1L, -1L}) {
                try {
                    cases.push_back({p.name + "=" + std::to_string(v), specialize(e.algebra, {{p.name, Scalar(v)}})});
                } catch (const ConstraintViolation&) {
                }
            }
        for (auto& tag : e.tags) {
            bool negated = tag[0] == '!';
            std::string name = negated ? tag.substr(1) : tag;
            for (auto& [at, A] : cases) {
                auto rep = check_variety(A, name);
                if (rep.member == !negated) continue;
                std::string d = negated ? "claimed not " + name + " but it holds"
                                        : (rep.witness ? rep.witness->detail() : name + " fails");
                out.push_back({e.id, tag, at, d});
            }
        }
        return out;
    }

private:
    std::vector<CatalogEntry> entries_;
    std::map<std::string, std::size_t> index_;
    std::vector<KnownIsomorphism> isos_;
    std::vector<DegenerationRow> rows_;
    std::vector<ClosedSetCertificate> certs_;
    std::vector<ReplayStep> steps_;
    std::vector<AutShape> shapes_;
    std::vector<OrbitClaim> orbits_;

    Catalog()
    {
        for (auto& text : data::algebra_texts()) {
            auto f = parse_algebra(text, "catalog");
            CatalogEntry e;
            e.id = f.id;
            e.dim = f.algebra.dim();
            e.algebra = f.algebra;
            e.algebra.label = f.id;
            e.source = f.source;
            e.tags = f.tags;
            e.text = text;
            if (index_.count(e.id)) throw Error("duplicate catalog id " + e.id);
            if (e.dim != 3 && e.dim != 4) throw Error("catalog entry " + e.id + " has dimension outside {3,4}");
            index_[e.id] = entries_.size();
            entries_.push_back(std::move(e));
        }
        std::sort(entries_.begin(), entries_.end(), [](auto& a, auto& b) { return a.id < b.id; });
        index_.clear();
        for (std::size_t k = 0; k < entries_.size(); ++k) index_[entries_[k].id] = k;

        SMatrix swap12 = parse_matrix("0,1,0; 1,0,0; 0,0,1");
        SMatrix swap23 = parse_matrix("1,0,0,0; 0,0,1,0; 0,1,0,0; 0,0,0,-1");
        isos_ = {{"R02", "alpha", swap12}, {"A14", "alpha", swap12}, {"BB02", "alpha", swap23}, {"BB05", "alpha", swap23}};

        for (auto& text : data::degeneration_texts()) {
            DegenerationRow r;
            r.file = parse_degeneration(text, "catalog");
            auto strip = [](const std::string& s) { return s.rfind("catalog:", 0) == 0 ? s.substr(8) : s; };
            r.source = {strip(r.file.source), {}};
            r.target = {strip(r.file.target), {}};
            for (auto& [k, v] : r.file.index) r.source.params[k] = v;
            for (auto& [k, v] : r.file.target_params) r.target.params[k] = v;
            r.label = r.source.id + "->" + r.target.id;
            entry(r.source.id);
            entry(r.target.id);
            rows_.push_back(std::move(r));
        }

        for (auto& c : data::certificate_texts()) {
            ClosedSetCertificate cert;
            cert.id = c.id;
            cert.note = c.note;
            cert.dim = 3;
            cert.equation_text = c.equations;
            for (auto& eq : c.equations) cert.equations.push_back(parse_scalar(eq, nullptr, false).num());
            for (auto& fl : c.flags) {
                FlagCondition f{};
                if (std::sscanf(fl.c_str(), "%d %d %d", &f.p, &f.q, &f.r) != 3) throw Error("bad flag " + fl);
                cert.flags.push_back(f);
            }
            for (auto& m : c.members) {
                CertificateMember cm;
                auto bar = m.find('|');
                std::string head = detail::trim(m.substr(0, bar));
                if (head.rfind("opposite ", 0) == 0) {
                    cm.opposite = true;
                    head = detail::trim(head.substr(9));
                }
                cm.id = head;
                if (bar != std::string::npos) {
                    SMatrix rel(cert.dim, cert.dim);
                    auto rows = detail::split(m.substr(bar + 1), ';');
                    for (int i = 0; i < cert.dim; ++i) {
                        Vector v = parse_vector(rows.at(i), cert.dim);
                        for (int j = 0; j < cert.dim; ++j) rel(i, j) = v[j];
                    }
                    cm.relabel = rel;
                }
                cert.members.push_back(cm);
            }
            for (auto& nm : c.non_members) cert.non_members.push_back(parse_ref(nm));
            certs_.push_back(std::move(cert));
        }

        for (auto& s : data::replay_texts()) {
            ReplayStep st;
            st.id = s.id;
            st.base = parse_ref(s.base);
            st.skew = s.skew;
            st.theta = parse_cocycle_entries(s.theta);
            st.expected = parse_cocycle_entries(s.expected);
            if (!s.phi.empty()) st.phi = parse_matrix(s.phi);
            st.automorphism = s.automorphism;
            if (!s.target.empty()) st.target = parse_ref(s.target);
            if (!s.target_map.empty()) st.target_map = parse_matrix(s.target_map);
            steps_.push_back(std::move(st));
        }
        for (auto& s : data::aut_shape_texts()) shapes_.push_back({parse_ref(s.base), parse_matrix(s.matrix)});
        for (auto& o : data::orbit_texts()) orbits_.push_back({o.id, o.orbit_dim});
    }
};

}  // namespace nassoc
